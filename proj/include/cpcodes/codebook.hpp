#ifndef CPCODES_CODEBOOK_HPP
#define CPCODES_CODEBOOK_HPP

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

#include "cpcodes/bigint.hpp"
#include "cpcodes/field.hpp"
#include "cpcodes/poly.hpp"

namespace cpcodes {

/// Additive character of GF(q): for prime q the map x -> exp(2*pi*i*x/q),
/// for q = p^m the trace character x -> exp(2*pi*i*Tr(x)/p). Values are
/// precomputed; the character is non-trivial and unit-modulus by construction.
class Character {
  public:
    /// beta scales the argument (chi_beta(x) = chi(beta * x)); beta != 0.
    explicit Character(const Field& f, std::uint32_t beta = 1);

    const Field& field() const noexcept { return *f_; }
    std::complex<double> operator()(std::uint32_t x) const { return table_[x]; }
    std::complex<double> operator()(const FieldElement& x) const {
        if (&x.field() != f_) throw std::invalid_argument("Character: field mismatch");
        return table_[x.value()];
    }

  private:
    const Field* f_;
    std::vector<std::complex<double>> table_;
};

enum class Ordering { natural, primitive_root };

/// Parameters of one RS/GRS/CP instance: field size q = p^m, block length
/// n = q - 1, degree parameter k, the evaluation ordering alpha_1..alpha_n of
/// the nonzero field elements, and column multipliers v_i = alpha_i.
struct CodeParams {
    const Field* field = nullptr;
    std::uint32_t q = 0;
    std::uint32_t p = 0;
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<std::uint32_t> alphas;  // permutation of 1..q-1
    std::shared_ptr<const Character> chi;

    /// Natural ordering lists the nonzero elements by integer encoding;
    /// primitive_root lists successive powers of the smallest generator.
    static CodeParams make(std::uint32_t q, std::uint32_t k, Ordering ord = Ordering::natural);

    std::uint32_t d() const noexcept { return n - k + 1; }
    std::uint32_t alpha(std::size_t i) const { return alphas.at(i); }  // 0-based
    std::uint32_t multiplier(std::size_t i) const { return alphas.at(i); }
};

/// A codeword in the field domain. Distinct from ComplexWord so field-domain
/// and complex-domain pipelines cannot be mixed up.
struct FieldCodeword {
    const Field* field = nullptr;
    std::vector<std::uint32_t> symbols;

    std::size_t size() const noexcept { return symbols.size(); }
    bool operator==(const FieldCodeword& o) const {
        return field == o.field && symbols == o.symbols;
    }
};

/// A codeword or received word in the complex domain.
struct ComplexWord {
    std::vector<std::complex<double>> coords;

    std::size_t size() const noexcept { return coords.size(); }
};

enum class MessageSpace { F, Fp, FpPrime };

/// Membership tests for the three message spaces:
///   F:        deg f <= k
///   Fp:       deg f <= k and f_{jp} = 0 for all j >= 0 (including f_0)
///   FpPrime:  f = g / X for some g in Fp, i.e. deg f <= k - 1 and X*f in Fp
bool space_membership(const Polynomial& f, MessageSpace space, const CodeParams& params);

/// Projection of f (deg f <= k required) onto Fp by zeroing every coefficient
/// with index a multiple of p. Idempotent.
Polynomial space_project(const Polynomial& f, const CodeParams& params);

/// Exact cardinality: q^(k+1) for F and q^(k - floor(k/p)) for Fp / FpPrime.
BigInt space_size(MessageSpace space, const CodeParams& params);

/// Visit every polynomial of the space exactly once.
void for_each_message(MessageSpace space, const CodeParams& params,
                      const std::function<void(const Polynomial&)>& visit);

/// RS encoding: coordinate i is f(alpha_i). Requires deg f < dim
/// (dim defaults to k).
FieldCodeword rs_encode(const Polynomial& f, const CodeParams& params, std::uint32_t dim = 0);

/// GRS encoding with multipliers v_i = alpha_i: coordinate i is
/// alpha_i * f(alpha_i). Requires deg f < dim (dim defaults to k).
FieldCodeword grs_encode(const Polynomial& f, const CodeParams& params, std::uint32_t dim = 0);

/// CP encoding: coordinate i is chi(f(alpha_i)). Requires f in Fp(k, q).
ComplexWord cp_encode(const Polynomial& f, const CodeParams& params);

/// chi(x) for the code's character.
std::complex<double> character_eval(const CodeParams& params, std::uint32_t x);

}  // namespace cpcodes

#endif
