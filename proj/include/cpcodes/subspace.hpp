#ifndef CPCODES_SUBSPACE_HPP
#define CPCODES_SUBSPACE_HPP

#include <Eigen/Dense>
#include <complex>
#include <random>
#include <vector>

#include "cpcodes/codebook.hpp"

namespace cpcodes {

/// Orthonormality tolerance for subspace bases.
constexpr double kOrthoTol = 1e-9;

/// A subspace of C^N given by orthonormal basis row vectors. The zero
/// subspace has an empty basis (0 x N).
class Subspace {
  public:
    /// Wraps an already orthonormal basis; throws std::invalid_argument if the
    /// Gram matrix deviates from the identity by more than the tolerance.
    explicit Subspace(Eigen::MatrixXcd basis_rows);

    /// Orthonormalizes the row span of an arbitrary matrix (rank detected
    /// with a relative threshold).
    static Subspace span(const Eigen::MatrixXcd& rows);

    static Subspace zero(Eigen::Index ambient) { return Subspace(Eigen::MatrixXcd(0, ambient)); }

    Eigen::Index dim() const noexcept { return basis_.rows(); }
    Eigen::Index ambient_dim() const noexcept { return basis_.cols(); }
    const Eigen::MatrixXcd& basis() const noexcept { return basis_; }

  private:
    Eigen::MatrixXcd basis_;
};

/// Chordal distance sqrt(sum_i sin^2 theta_i) over the principal angles,
/// computed from the singular values of the basis inner-product matrix.
/// Requires equal dimensions.
double chordal_distance(const Subspace& u, const Subspace& v);

/// Subspace distance 2 * chordal^2.
double subspace_distance(const Subspace& u, const Subspace& v);

/// Minimum pairwise subspace distance; requires at least two codewords.
double code_min_subspace_distance(const std::vector<Subspace>& codebook);

/// Operator channel: keeps a random (dim U - rho)-dimensional subspace of U
/// and inserts a random t-dimensional error subspace E with E intersecting U
/// trivially (degenerate draws are resampled). Output dimension is always
/// dim U - rho + t. Requires rho <= dim U and ambient >= dim U + t.
Subspace operator_channel_apply(const Subspace& u, std::size_t t, std::size_t rho,
                                std::mt19937_64& rng);

struct NearestResult {
    std::size_t index = 0;
    double distance = 0.0;
    bool tie = false;  // another codeword at the same distance (within 1e-12)
};

/// Index of the codeword nearest in subspace distance; ties are broken toward
/// the lowest index and reported.
NearestResult min_subspace_decoder(const Subspace& v, const std::vector<Subspace>& codebook);

/// CP codewords as one-dimensional subspaces (rows normalized by 1/sqrt(n)).
std::vector<Subspace> cp_codebook_subspaces(const CodeParams& params);

}  // namespace cpcodes

#endif
