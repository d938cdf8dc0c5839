#ifndef CPCODES_DECODE_LIST_HPP
#define CPCODES_DECODE_LIST_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cpcodes/codebook.hpp"
#include "cpcodes/decode_unique.hpp"

namespace cpcodes {

/// Guruswami-Sudan parameters for a dimension-k length-n code at
/// interpolation multiplicity s:
///   c    = floor(sqrt((k-1) * n * s * (s+1))), the (1, k-1)-weighted degree
///          bound of the interpolation polynomial,
///   tau  = floor(c / s) + 1, the agreement threshold,
///   t    = n - tau, the decoding radius (may be <= 0 for extreme k),
///   ell  = floor(c / (k-1)), the list size bound.
struct GsParams {
    std::uint32_t s = 0;
    std::uint64_t c = 0;
    std::int64_t tau = 0;
    std::int64_t t = 0;
    std::uint64_t ell = 0;
};

GsParams gs_params(std::uint32_t n, std::uint32_t k, std::uint32_t s);

/// Smallest multiplicity whose radius reaches the limit
/// t_inf = n - 1 - floor(sqrt((k-1) * n)).
struct SZero {
    std::uint32_t s0 = 0;
    std::int64_t t_inf = 0;
};

SZero s_zero(std::uint32_t n, std::uint32_t k);

using InterpPoint = std::pair<std::uint32_t, std::uint32_t>;  // (alpha_i, y_i)

/// Interpolation step: a nonzero Q with (1, dim-1)-weighted degree <= c and a
/// root of multiplicity >= s at every point, from the null space of the Hasse
/// derivative constraint system (dense Gaussian elimination). The null-space
/// vector is chosen deterministically. Throws std::logic_error if the system
/// has no nonzero solution (cannot happen when c comes from gs_params).
BivariatePolynomial gs_interpolate(const Field& fld, const std::vector<InterpPoint>& points,
                                   std::uint32_t s, std::uint64_t c, std::uint32_t dim);

/// Factorization step: all g with deg g <= dim - 1 such that (Y - g(X))
/// divides Q and g agrees with at least tau of the points
/// (Roth-Ruckenstein recursion plus the agreement filter).
std::vector<Polynomial> gs_factor(const BivariatePolynomial& q, std::uint32_t dim,
                                  const std::vector<InterpPoint>& points, std::int64_t tau);

/// Guruswami-Sudan list decoding of an RS received word: exactly the messages
/// of degree < dim whose codewords lie within Hamming distance t_s of y.
/// Requires prime q.
std::vector<Polynomial> gs_decode(const FieldCodeword& y, std::uint32_t s,
                                  const CodeParams& params, std::uint32_t dim);

/// CP list decoding: hard-decide and unscale each coordinate, run gs_decode
/// at dimension k, return {X*g in Fp(k, q)}.
std::vector<Polynomial> cp_list_decode(const ComplexWord& m_prime, std::uint32_t s,
                                       const CodeParams& params);

/// Bounded-distance list decoding at an explicit radius t: returns exactly the
/// messages of degree < dim whose RS codewords lie within distance t of y.
/// Implemented by covering the error support with erasure patterns of size
/// max(0, 2t - d + 1) and running the key-equation decoder on each punctured
/// word; every candidate is verified against the radius before inclusion.
/// Output matches gs_decode whenever t equals the multiplicity-s radius t_s.
std::vector<Polynomial> bd_list_decode(const FieldCodeword& y, std::int64_t t,
                                       const CodeParams& params, std::uint32_t dim);

/// CP pipeline on top of bd_list_decode (radius t in the complex domain).
std::vector<Polynomial> cp_bd_list_decode(const ComplexWord& m_prime, std::int64_t t,
                                          const CodeParams& params);

namespace detail {

/// Monomials (i, j) with i + wy * j <= c, ordered by (j, i); this is the
/// unknown ordering of the interpolation system.
std::vector<std::pair<std::uint32_t, std::uint32_t>> gs_monomials(std::uint64_t c,
                                                                  std::uint32_t wy);

/// Constraint row for the (r1, r2) Hasse derivative at (a, b): entry m is
/// C(i_m, r1) * C(j_m, r2) * a^(i_m - r1) * b^(j_m - r2).
std::vector<std::uint32_t> hasse_row(const Field& fld,
                                     const std::vector<std::pair<std::uint32_t, std::uint32_t>>& monomials,
                                     std::uint32_t a, std::uint32_t b, std::uint32_t r1,
                                     std::uint32_t r2);

}  // namespace detail

}  // namespace cpcodes

#endif
