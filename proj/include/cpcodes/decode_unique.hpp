#ifndef CPCODES_DECODE_UNIQUE_HPP
#define CPCODES_DECODE_UNIQUE_HPP

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cpcodes/codebook.hpp"

namespace cpcodes {

/// Raised when no codeword lies within the decoding radius (or the decoder
/// output fails its consistency checks).
class decoding_failure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Hard-decision map to the nearest q-th root of unity, returned as the field
/// symbol r = floor(q*arg(z)/(2*pi) + 1/2) mod q. Exact ties between sectors
/// round toward the larger index. Throws std::domain_error for z = 0.
std::uint32_t phi(std::complex<double> z, std::uint32_t q);

struct DecodeResult {
    Polynomial message;               // the CP-domain polynomial X * g(X)
    std::size_t corrected_errors = 0;
};

/// Bounded-distance RS decoder: returns the unique g with deg g < dim and
/// d_H(y, rs_encode(g, dim)) <= floor((n - dim) / 2), via the key-equation
/// (extended-Euclidean) method with a re-encoding consistency check.
/// Throws decoding_failure when no codeword lies within the radius.
Polynomial rs_unique_decode(const FieldCodeword& y, std::uint32_t dim, const CodeParams& params);

/// GRS variant: divides coordinate i by the multiplier v_i = alpha_i, then
/// decodes as RS. dim defaults to k.
Polynomial grs_unique_decode(const FieldCodeword& y, const CodeParams& params,
                             std::uint32_t dim = 0);

/// Received-word preprocessing for cp_decode. The default divides the i-th
/// hard decision by alpha_i and decodes a dimension-k message g, returning
/// X*g. The alternative decodes the unscaled hard decisions directly as a
/// degree <= k message (kept for comparison).
enum class CpPreprocess { grs_scaled, plain_rs };

/// Unique CP decoding: hard-decide each coordinate, decode with the bounded
/// distance RS decoder, return f = X*g in Fp(k, q). Requires prime q.
DecodeResult cp_decode(const ComplexWord& m_prime, const CodeParams& params,
                       CpPreprocess mode = CpPreprocess::grs_scaled);

namespace detail {

/// Reusable scratch buffers for repeated decodes of the same shape.
struct GaoScratch {
    std::vector<std::uint32_t> acc, node_acc, r0, r1, v0, v1, quot, tmp;
};

/// Key-equation decode of (xs, ys) into a message of degree < dim.
/// node = prod_i (X - xs[i]), coefficient vector of size xs.size() + 1.
/// Returns false if no candidate was produced; the caller must still verify
/// the Hamming distance of the re-encoded candidate.
bool gao_core(const Field& fld, std::span<const std::uint32_t> xs,
              std::span<const std::uint32_t> ys, std::span<const std::uint32_t> node,
              std::uint32_t dim, GaoScratch& ws, std::vector<std::uint32_t>& out);

/// prod_i (X - xs[i]) as a coefficient vector of size xs.size() + 1.
std::vector<std::uint32_t> node_polynomial(const Field& fld, std::span<const std::uint32_t> xs);

}  // namespace detail

}  // namespace cpcodes

#endif
