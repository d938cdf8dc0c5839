#ifndef CPCODES_ANALYSIS_HPP
#define CPCODES_ANALYSIS_HPP

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "cpcodes/bigint.hpp"
#include "cpcodes/codebook.hpp"

namespace cpcodes {

/// The three enumerable evaluation codes used by the distance and list-size
/// experiments, all over the same evaluation set alpha_1..alpha_n:
///   cp_subcode:  GRS(Fp(k,q)'), the field-domain image of the CP code,
///   rs_ambient:  RS(F(k,q)), dimension k+1 (the enclosing code with one more
///                free coefficient per message),
///   grs_full:    GRS(F(k-1,q)), dimension k.
enum class CodeKind { cp_subcode, rs_ambient, grs_full };

/// Index-addressable linear evaluation code: codeword i is a pure function of
/// i, so enumeration loops can be partitioned across threads.
class EnumerableCode {
  public:
    EnumerableCode(CodeParams params, CodeKind kind);

    const CodeParams& params() const noexcept { return params_; }
    CodeKind kind() const noexcept { return kind_; }
    std::uint64_t size() const noexcept { return size_; }
    std::uint32_t dim() const noexcept { return deg_bound_ + 1; }

    /// Message polynomial coefficients for codeword index (mixed-radix digits
    /// over the free coefficient positions). out has dim() entries.
    void message_into(std::uint64_t index, std::vector<std::uint32_t>& out) const;

    /// Codeword for the given index. out has n entries.
    void codeword_into(std::uint64_t index, std::vector<std::uint32_t>& out) const;

    Polynomial message(std::uint64_t index) const;

  private:
    CodeParams params_;
    CodeKind kind_;
    std::vector<std::uint32_t> free_idx_;
    std::uint32_t deg_bound_;
    bool scale_by_alpha_;
    std::uint64_t size_;
};

/// Exhaustive minimum distance (minimum nonzero weight; the codes above are
/// linear). Throws std::invalid_argument when |code| exceeds the budget.
/// The default version splits the enumeration across OpenMP threads;
/// the _serial twin is the reference implementation.
std::uint32_t brute_min_distance(const EnumerableCode& code, std::uint64_t budget = 1'000'000);
std::uint32_t brute_min_distance_serial(const EnumerableCode& code,
                                        std::uint64_t budget = 1'000'000);

/// Minimum pairwise Hamming distance of an explicit word list (general,
/// non-linear route). Requires at least two words.
std::uint32_t min_pairwise_distance(const std::vector<FieldCodeword>& words);
std::uint32_t min_pairwise_distance(const std::vector<ComplexWord>& words);

/// |{ c in C \ {0} : d(c, u) <= t }| by exhaustive enumeration.
std::uint64_t ball_count(const FieldCodeword& u, std::int64_t t, const EnumerableCode& code,
                         std::uint64_t budget = 1'000'000);

/// Average-list-size statistics for weight-w error patterns at decoding
/// radius t. d_count is the total non-causal codeword count over all
/// patterns (each pattern counted once per codeword in its ball); l_bar is
/// d_count divided by the number C(n,w) * (q-1)^w of patterns; p_nonzero is
/// the fraction of patterns with a nonempty ball.
struct ListSizeStats {
    std::uint32_t w = 0;
    std::int64_t t = 0;
    double d_count = 0.0;
    double l_bar = 0.0;
    double p_nonzero = 0.0;
    double l_bar_stderr = 0.0;  // sampled mode only
    bool exact_flag = true;
    std::uint64_t samples = 0;  // sampled mode only
    std::uint64_t seed = 0;     // sampled mode only
};

/// Exact mode: enumerate every weight-w pattern. Throws std::invalid_argument
/// when C(n,w) * (q-1)^w exceeds the budget.
ListSizeStats falsely_decodable_stats(const EnumerableCode& code, std::uint32_t w, std::int64_t t,
                                      std::uint64_t budget = 10'000'000);
ListSizeStats falsely_decodable_stats_serial(const EnumerableCode& code, std::uint32_t w,
                                             std::int64_t t, std::uint64_t budget = 10'000'000);

/// Sampled mode: n_samples uniform weight-w patterns; unbiased estimate with
/// reported standard error.
ListSizeStats falsely_decodable_stats_sampled(const EnumerableCode& code, std::uint32_t w,
                                              std::int64_t t, std::uint64_t n_samples,
                                              std::uint64_t seed);

/// McEliece-Swanson average-list-size bound for a dimension-k length-n code:
/// (q-1)^(-(n-k)) * sum_{i = d-w}^{t} C(n,i) (q-1)^i with d = n - k + 1.
/// Zero when the sum is empty. Exact rational arithmetic internally.
double mceliece_swanson_bound(std::uint32_t w, std::int64_t t, std::uint32_t n, std::uint32_t k,
                              std::uint32_t q);

/// Binomial CDF sum_{i=0}^{t} C(n,i) theta^i (1-theta)^(n-i), exact rational.
BigRational binomial_cdf_exact(std::int64_t t, std::uint32_t n, const BigRational& theta);
double binomial_cdf(std::int64_t t, std::uint32_t n, double theta);

/// The bound chain on q^(1 + floor(k/p)) * average list size, evaluated for a
/// dimension-k ambient code with theta = 1 - 1/q:
///   m1       = (1-theta)^(-k) * theta^(-(n-k)) * F(t; n, theta)
///   chernoff = (1-theta)^(-k) * theta^(-(n-k)) * exp(-n * KL(t/n || theta)),
///              valid when t/n <= theta
///   jensen   = 2^n / n^(n-k-t)
struct BoundChain {
    double m1 = 0.0;
    double chernoff = 0.0;
    double jensen = 0.0;
    bool chernoff_valid = false;
};

BoundChain bound_chain(std::uint32_t w, std::int64_t t, std::uint32_t n, std::uint32_t k,
                       std::uint32_t q);

/// n * (log 2 - (sqrt(R) - R) * log n - ((1+R)/n) * log(n+1)), natural logs.
double asymptotic_exponent(double rate, std::uint64_t n);

/// One CSV row: q,p,n,k,w,t,D,L_bar,m1,chern,jensen,exact_flag,seed
void write_stats_csv_header(std::ostream& os);
void write_stats_csv_row(std::ostream& os, const CodeParams& params, const ListSizeStats& stats,
                         const BoundChain& bounds);

}  // namespace cpcodes

#endif
