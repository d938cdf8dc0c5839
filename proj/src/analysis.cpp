#include "cpcodes/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "cpcodes/channel.hpp"
#include "cpcodes/rng.hpp"
#include "cpcodes/util.hpp"

namespace cpcodes {

EnumerableCode::EnumerableCode(CodeParams params, CodeKind kind)
    : params_(std::move(params)), kind_(kind) {
    const std::uint32_t k = params_.k, p = params_.p;
    switch (kind) {
        case CodeKind::cp_subcode:
            deg_bound_ = k - 1;
            scale_by_alpha_ = true;
            for (std::uint32_t j = 0; j <= deg_bound_; ++j)
                if ((j + 1) % p != 0) free_idx_.push_back(j);
            break;
        case CodeKind::rs_ambient:
            if (k + 1 > params_.n)
                throw std::invalid_argument("EnumerableCode: rs_ambient needs k + 1 <= n");
            deg_bound_ = k;
            scale_by_alpha_ = false;
            for (std::uint32_t j = 0; j <= deg_bound_; ++j) free_idx_.push_back(j);
            break;
        case CodeKind::grs_full:
            deg_bound_ = k - 1;
            scale_by_alpha_ = true;
            for (std::uint32_t j = 0; j <= deg_bound_; ++j) free_idx_.push_back(j);
            break;
    }
    size_ = 1;
    for (std::size_t i = 0; i < free_idx_.size(); ++i) {
        size_ *= params_.q;
        if (size_ > (std::uint64_t(1) << 62))
            throw std::overflow_error("EnumerableCode: code too large to index");
    }
}

void EnumerableCode::message_into(std::uint64_t index, std::vector<std::uint32_t>& out) const {
    out.assign(deg_bound_ + 1, 0);
    for (std::uint32_t j : free_idx_) {
        out[j] = static_cast<std::uint32_t>(index % params_.q);
        index /= params_.q;
    }
}

void EnumerableCode::codeword_into(std::uint64_t index, std::vector<std::uint32_t>& out) const {
    std::vector<std::uint32_t> coeffs;
    message_into(index, coeffs);
    const Field& f = *params_.field;
    out.resize(params_.n);
    for (std::size_t i = 0; i < params_.n; ++i) {
        const std::uint32_t x = params_.alphas[i];
        std::uint32_t acc = 0;
        for (std::size_t j = coeffs.size(); j-- > 0;) acc = f.add(f.mul(acc, x), coeffs[j]);
        out[i] = scale_by_alpha_ ? f.mul(acc, x) : acc;
    }
}

Polynomial EnumerableCode::message(std::uint64_t index) const {
    std::vector<std::uint32_t> coeffs;
    message_into(index, coeffs);
    return Polynomial(*params_.field, std::move(coeffs));
}

namespace {

BigRational rat_pow(BigRational base, std::uint64_t e) {
    BigRational r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::uint32_t word_weight(const std::vector<std::uint32_t>& w) {
    std::uint32_t c = 0;
    for (auto v : w)
        if (v != 0) ++c;
    return c;
}

void check_budget(std::uint64_t need, std::uint64_t budget, const char* who) {
    if (need > budget)
        throw std::invalid_argument(std::string(who) + ": enumeration budget exceeded");
}

}  // namespace

std::uint32_t brute_min_distance(const EnumerableCode& code, std::uint64_t budget) {
    check_budget(code.size(), budget, "brute_min_distance");
    const std::int64_t total = static_cast<std::int64_t>(code.size());
    std::uint32_t best = code.params().n + 1;
#pragma omp parallel
    {
        std::vector<std::uint32_t> word;
        std::uint32_t local = code.params().n + 1;
#pragma omp for schedule(static)
        for (std::int64_t i = 1; i < total; ++i) {
            code.codeword_into(static_cast<std::uint64_t>(i), word);
            local = std::min(local, word_weight(word));
        }
#pragma omp critical
        best = std::min(best, local);
    }
    return best;
}

std::uint32_t brute_min_distance_serial(const EnumerableCode& code, std::uint64_t budget) {
    check_budget(code.size(), budget, "brute_min_distance_serial");
    std::uint32_t best = code.params().n + 1;
    std::vector<std::uint32_t> word;
    for (std::uint64_t i = 1; i < code.size(); ++i) {
        code.codeword_into(i, word);
        best = std::min(best, word_weight(word));
    }
    return best;
}

std::uint32_t min_pairwise_distance(const std::vector<FieldCodeword>& words) {
    if (words.size() < 2) throw std::invalid_argument("min_pairwise_distance: need two words");
    std::size_t best = words[0].size() + 1;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, hamming_distance(words[i], words[j]));
    return static_cast<std::uint32_t>(best);
}

std::uint32_t min_pairwise_distance(const std::vector<ComplexWord>& words) {
    if (words.size() < 2) throw std::invalid_argument("min_pairwise_distance: need two words");
    std::size_t best = words[0].size() + 1;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, hamming_distance(words[i], words[j]));
    return static_cast<std::uint32_t>(best);
}

std::uint64_t ball_count(const FieldCodeword& u, std::int64_t t, const EnumerableCode& code,
                         std::uint64_t budget) {
    if (u.field != code.params().field) throw std::invalid_argument("ball_count: field mismatch");
    if (u.size() != code.params().n) throw std::invalid_argument("ball_count: length mismatch");
    check_budget(code.size(), budget, "ball_count");
    if (t < 0) return 0;
    std::uint64_t count = 0;
    std::vector<std::uint32_t> word;
    for (std::uint64_t i = 1; i < code.size(); ++i) {
        code.codeword_into(i, word);
        std::int64_t d = 0;
        for (std::size_t j = 0; j < word.size(); ++j) {
            if (word[j] != u.symbols[j] && ++d > t) break;
        }
        if (d <= t) ++count;
    }
    return count;
}

namespace {

// Weight-w pattern with colex-unranked support and mixed-radix nonzero values.
// comb_index < C(n,w), value_index < (q-1)^w.
void pattern_into(std::uint64_t comb_index, std::uint64_t value_index, std::uint32_t n,
                  std::uint32_t w, std::uint32_t q, std::vector<std::uint32_t>& u) {
    u.assign(n, 0);
    // Colex unranking: choose the largest position first.
    for (std::uint32_t r = w; r >= 1; --r) {
        std::uint32_t c = r - 1;
        while (binomial_u64(c + 1, r) <= comb_index) ++c;
        comb_index -= binomial_u64(c, r);
        u[c] = static_cast<std::uint32_t>(value_index % (q - 1)) + 1;
        value_index /= (q - 1);
    }
}

// Count of codewords of `code` within distance t of u, plus a flag used for
// the probability of a nonempty ball. Shared by the exact kernels.
struct BallAccumulator {
    std::uint64_t d_total = 0;
    std::uint64_t nonzero_patterns = 0;
};

ListSizeStats finish_exact(const EnumerableCode& code, std::uint32_t w, std::int64_t t,
                           std::uint64_t total_u, const BallAccumulator& acc) {
    ListSizeStats s;
    s.w = w;
    s.t = t;
    s.exact_flag = true;
    s.d_count = static_cast<double>(acc.d_total);
    s.l_bar = total_u == 0 ? 0.0 : static_cast<double>(acc.d_total) / static_cast<double>(total_u);
    s.p_nonzero =
        total_u == 0 ? 0.0 : static_cast<double>(acc.nonzero_patterns) / static_cast<double>(total_u);
    (void)code;
    return s;
}

std::uint64_t exact_pattern_count(const EnumerableCode& code, std::uint32_t w) {
    const std::uint32_t n = code.params().n, q = code.params().q;
    if (w > n) throw std::invalid_argument("falsely_decodable_stats: weight exceeds length");
    return binomial_u64(n, w) * pow_u64(q - 1, w);
}

std::uint64_t ball_count_raw(const EnumerableCode& code, const std::vector<std::uint32_t>& u,
                             std::int64_t t, std::vector<std::uint32_t>& word) {
    if (t < 0) return 0;
    std::uint64_t count = 0;
    for (std::uint64_t i = 1; i < code.size(); ++i) {
        code.codeword_into(i, word);
        std::int64_t d = 0;
        for (std::size_t j = 0; j < word.size(); ++j) {
            if (word[j] != u[j] && ++d > t) break;
        }
        if (d <= t) ++count;
    }
    return count;
}

}  // namespace

ListSizeStats falsely_decodable_stats(const EnumerableCode& code, std::uint32_t w, std::int64_t t,
                                      std::uint64_t budget) {
    const std::uint64_t total_u = exact_pattern_count(code, w);
    check_budget(total_u, budget, "falsely_decodable_stats");
    const std::uint64_t values = pow_u64(code.params().q - 1, w);
    const std::int64_t total = static_cast<std::int64_t>(total_u);
    BallAccumulator acc;
    std::uint64_t d_total = 0, nonzero = 0;
#pragma omp parallel
    {
        std::vector<std::uint32_t> u, word;
#pragma omp for schedule(dynamic, 64) reduction(+ : d_total, nonzero)
        for (std::int64_t idx = 0; idx < total; ++idx) {
            pattern_into(static_cast<std::uint64_t>(idx) / values,
                         static_cast<std::uint64_t>(idx) % values, code.params().n, w,
                         code.params().q, u);
            std::uint64_t b = ball_count_raw(code, u, t, word);
            d_total += b;
            if (b > 0) ++nonzero;
        }
    }
    acc.d_total = d_total;
    acc.nonzero_patterns = nonzero;
    return finish_exact(code, w, t, total_u, acc);
}

ListSizeStats falsely_decodable_stats_serial(const EnumerableCode& code, std::uint32_t w,
                                             std::int64_t t, std::uint64_t budget) {
    const std::uint64_t total_u = exact_pattern_count(code, w);
    check_budget(total_u, budget, "falsely_decodable_stats_serial");
    const std::uint64_t values = pow_u64(code.params().q - 1, w);
    BallAccumulator acc;
    std::vector<std::uint32_t> u, word;
    for (std::uint64_t idx = 0; idx < total_u; ++idx) {
        pattern_into(idx / values, idx % values, code.params().n, w, code.params().q, u);
        std::uint64_t b = ball_count_raw(code, u, t, word);
        acc.d_total += b;
        if (b > 0) ++acc.nonzero_patterns;
    }
    return finish_exact(code, w, t, total_u, acc);
}

ListSizeStats falsely_decodable_stats_sampled(const EnumerableCode& code, std::uint32_t w,
                                              std::int64_t t, std::uint64_t n_samples,
                                              std::uint64_t seed) {
    const std::uint32_t n = code.params().n, q = code.params().q;
    if (w > n) throw std::invalid_argument("falsely_decodable_stats_sampled: weight exceeds length");
    if (n_samples == 0) throw std::invalid_argument("falsely_decodable_stats_sampled: no samples");
    double sum = 0.0, sumsq = 0.0;
    std::uint64_t nonzero = 0;
    const std::int64_t total = static_cast<std::int64_t>(n_samples);
#pragma omp parallel
    {
        std::vector<std::uint32_t> u, word;
#pragma omp for schedule(dynamic, 16) reduction(+ : sum, sumsq, nonzero)
        for (std::int64_t i = 0; i < total; ++i) {
            auto rng = make_rng(seed, {0x5a3fULL, static_cast<std::uint64_t>(i)});
            u.assign(n, 0);
            // uniform weight-w support
            std::vector<std::uint32_t> idx(n);
            for (std::uint32_t j = 0; j < n; ++j) idx[j] = j;
            for (std::uint32_t j = 0; j < w; ++j) {
                std::uniform_int_distribution<std::uint32_t> pick(j, n - 1);
                std::swap(idx[j], idx[pick(rng)]);
                std::uniform_int_distribution<std::uint32_t> val(1, q - 1);
                u[idx[j]] = val(rng);
            }
            std::uint64_t b = ball_count_raw(code, u, t, word);
            sum += static_cast<double>(b);
            sumsq += static_cast<double>(b) * static_cast<double>(b);
            if (b > 0) ++nonzero;
        }
    }
    ListSizeStats s;
    s.w = w;
    s.t = t;
    s.exact_flag = false;
    s.samples = n_samples;
    s.seed = seed;
    const double mean = sum / static_cast<double>(n_samples);
    s.l_bar = mean;
    const double var =
        std::max(0.0, sumsq / static_cast<double>(n_samples) - mean * mean);
    s.l_bar_stderr = std::sqrt(var / static_cast<double>(n_samples));
    s.p_nonzero = static_cast<double>(nonzero) / static_cast<double>(n_samples);
    // Scale the estimate up to a total count over all patterns when that
    // total fits; purely informational in sampled mode.
    try {
        s.d_count = mean * static_cast<double>(exact_pattern_count(code, w));
    } catch (const std::overflow_error&) {
        s.d_count = std::numeric_limits<double>::quiet_NaN();
    }
    return s;
}

double mceliece_swanson_bound(std::uint32_t w, std::int64_t t, std::uint32_t n, std::uint32_t k,
                              std::uint32_t q) {
    if (k > n) throw std::invalid_argument("mceliece_swanson_bound: k > n");
    const std::int64_t d = static_cast<std::int64_t>(n) - k + 1;
    std::int64_t lo = std::max<std::int64_t>(0, d - static_cast<std::int64_t>(w));
    if (lo > t) return 0.0;
    BigInt qm1 = q - 1;
    BigInt sum = 0;
    for (std::int64_t i = lo; i <= std::min<std::int64_t>(t, n); ++i) {
        BigInt term = 1;
        for (std::int64_t r = 1; r <= i; ++r) term = term * (n - r + 1) / r;
        sum += term * boost::multiprecision::pow(qm1, static_cast<unsigned>(i));
    }
    BigRational res(sum, boost::multiprecision::pow(qm1, n - k));
    return static_cast<double>(res);
}

BigRational binomial_cdf_exact(std::int64_t t, std::uint32_t n, const BigRational& theta) {
    if (theta < 0 || theta > 1) throw std::invalid_argument("binomial_cdf: theta out of range");
    if (t < 0) return BigRational(0);
    BigRational one_minus = BigRational(1) - theta;
    BigRational sum = 0;
    for (std::int64_t i = 0; i <= std::min<std::int64_t>(t, n); ++i) {
        BigInt binom = 1;
        for (std::int64_t r = 1; r <= i; ++r) binom = binom * (n - r + 1) / r;
        sum += BigRational(binom) * rat_pow(theta, static_cast<std::uint64_t>(i)) *
               rat_pow(one_minus, n - static_cast<std::uint64_t>(i));
    }
    return sum;
}

double binomial_cdf(std::int64_t t, std::uint32_t n, double theta) {
    if (theta < 0.0 || theta > 1.0) throw std::invalid_argument("binomial_cdf: theta out of range");
    return static_cast<double>(binomial_cdf_exact(t, n, BigRational(theta)));
}

BoundChain bound_chain(std::uint32_t w, std::int64_t t, std::uint32_t n, std::uint32_t k,
                       std::uint32_t q) {
    (void)w;  // the chain drops the w-dependent lower summation limit
    if (k > n) throw std::invalid_argument("bound_chain: k > n");
    BoundChain out;
    const BigRational theta(q - 1, q);
    const BigRational one_minus(1, q);

    // prefactor (1-theta)^(-k) * theta^(-(n-k)) = q^k * (q/(q-1))^(n-k)
    BigRational prefactor =
        BigRational(boost::multiprecision::pow(BigInt(q), k)) / rat_pow(theta, n - k);
    out.m1 = static_cast<double>(prefactor * binomial_cdf_exact(t, n, theta));

    const double theta_d = static_cast<double>(theta);
    const double a = static_cast<double>(t) / static_cast<double>(n);
    out.chernoff_valid = (t >= 0 && a <= theta_d);
    if (out.chernoff_valid) {
        double kl;
        if (t == 0) {
            kl = -std::log(1.0 - theta_d);
        } else if (a >= 1.0) {
            kl = -std::log(theta_d);
        } else {
            kl = a * std::log(a / theta_d) + (1.0 - a) * std::log((1.0 - a) / (1.0 - theta_d));
        }
        out.chernoff = static_cast<double>(prefactor) * std::exp(-static_cast<double>(n) * kl);
    }

    // jensen = 2^n / n^(n-k-t)
    const std::int64_t en = static_cast<std::int64_t>(n) - k - t;
    BigRational jensen(boost::multiprecision::pow(BigInt(2), n));
    if (en >= 0)
        jensen /= boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(en));
    else
        jensen *= boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(-en));
    out.jensen = static_cast<double>(jensen);
    return out;
}

double asymptotic_exponent(double rate, std::uint64_t n) {
    if (!(rate > 0.0 && rate < 1.0)) throw std::invalid_argument("asymptotic_exponent: rate in (0,1)");
    if (n < 2) throw std::invalid_argument("asymptotic_exponent: n >= 2");
    const double nd = static_cast<double>(n);
    return nd * (std::log(2.0) - (std::sqrt(rate) - rate) * std::log(nd) -
                 ((1.0 + rate) / nd) * std::log(nd + 1.0));
}

void write_stats_csv_header(std::ostream& os) {
    os << "q,p,n,k,w,t,D,L_bar,m1,chern,jensen,exact_flag,seed\n";
}

void write_stats_csv_row(std::ostream& os, const CodeParams& params, const ListSizeStats& stats,
                         const BoundChain& bounds) {
    os << params.q << ',' << params.p << ',' << params.n << ',' << params.k << ',' << stats.w << ','
       << stats.t << ',' << stats.d_count << ',' << stats.l_bar << ',' << bounds.m1 << ','
       << (bounds.chernoff_valid ? bounds.chernoff : std::numeric_limits<double>::quiet_NaN())
       << ',' << bounds.jensen << ',' << (stats.exact_flag ? 1 : 0) << ',' << stats.seed << '\n';
}

}  // namespace cpcodes
