#include "cpcodes/subspace.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace cpcodes {

Subspace::Subspace(Eigen::MatrixXcd basis_rows) : basis_(std::move(basis_rows)) {
    if (basis_.rows() == 0) return;
    Eigen::MatrixXcd gram = basis_ * basis_.adjoint();
    gram -= Eigen::MatrixXcd::Identity(basis_.rows(), basis_.rows());
    if (gram.cwiseAbs().maxCoeff() > kOrthoTol)
        throw std::invalid_argument("Subspace: basis is not orthonormal");
}

Subspace Subspace::span(const Eigen::MatrixXcd& rows) {
    if (rows.rows() == 0) return Subspace(Eigen::MatrixXcd(0, rows.cols()));
    // Columns of the thin-QR Q factor of rows^H span the row space.
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(rows.adjoint());
    qr.setThreshold(kOrthoTol);
    Eigen::Index r = qr.rank();
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(rows.cols(), r);
    return Subspace(q.adjoint());
}

double chordal_distance(const Subspace& u, const Subspace& v) {
    if (u.dim() != v.dim()) throw std::invalid_argument("chordal_distance: dimension mismatch");
    if (u.ambient_dim() != v.ambient_dim())
        throw std::invalid_argument("chordal_distance: ambient mismatch");
    if (u.dim() == 0) return 0.0;
    Eigen::MatrixXcd m = u.basis() * v.basis().adjoint();
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    double sum = 0.0;
    for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i) {
        double cosv = std::min(1.0, svd.singularValues()(i));  // clamp rounding overshoot
        sum += 1.0 - cosv * cosv;
    }
    return std::sqrt(std::max(0.0, sum));
}

double subspace_distance(const Subspace& u, const Subspace& v) {
    double c = chordal_distance(u, v);
    return 2.0 * c * c;
}

double code_min_subspace_distance(const std::vector<Subspace>& codebook) {
    if (codebook.size() < 2)
        throw std::invalid_argument("code_min_subspace_distance: need at least two codewords");
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < codebook.size(); ++i)
        for (std::size_t j = i + 1; j < codebook.size(); ++j)
            best = std::min(best, subspace_distance(codebook[i], codebook[j]));
    return best;
}

namespace {

Eigen::MatrixXcd gaussian_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = std::complex<double>(g(rng), g(rng));
    return m;
}

Eigen::Index rank_of(const Eigen::MatrixXcd& m) {
    Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(m);
    qr.setThreshold(kOrthoTol);
    return qr.rank();
}

}  // namespace

Subspace operator_channel_apply(const Subspace& u, std::size_t t, std::size_t rho,
                                std::mt19937_64& rng) {
    const Eigen::Index dim_u = u.dim();
    const Eigen::Index amb = u.ambient_dim();
    if (static_cast<Eigen::Index>(rho) > dim_u)
        throw std::invalid_argument("operator_channel_apply: rho exceeds dim U");
    if (amb < dim_u + static_cast<Eigen::Index>(t))
        throw std::invalid_argument("operator_channel_apply: ambient too small for t insertions");

    const Eigen::Index keep = dim_u - static_cast<Eigen::Index>(rho);
    if (t == 0 && rho == 0) return u;  // identity channel, bases preserved exactly

    Eigen::MatrixXcd h_rows;
    if (rho == 0) {
        h_rows = u.basis();
    } else if (keep == 0) {
        h_rows = Eigen::MatrixXcd(0, amb);
    } else {
        // Random keep-dimensional subspace of U.
        while (true) {
            Eigen::MatrixXcd mix = gaussian_matrix(keep, dim_u, rng) * u.basis();
            if (rank_of(mix) == keep) {
                h_rows = Subspace::span(mix).basis();
                break;
            }
        }
    }

    if (t == 0) return Subspace::span(h_rows);

    while (true) {
        Eigen::MatrixXcd e_rows = gaussian_matrix(static_cast<Eigen::Index>(t), amb, rng);
        // E must intersect U trivially; a degenerate draw has probability
        // zero but is resampled anyway.
        Eigen::MatrixXcd stacked_ue(dim_u + static_cast<Eigen::Index>(t), amb);
        stacked_ue << u.basis(), e_rows;
        if (rank_of(stacked_ue) != dim_u + static_cast<Eigen::Index>(t)) continue;
        Eigen::MatrixXcd stacked(keep + static_cast<Eigen::Index>(t), amb);
        stacked << h_rows, e_rows;
        Subspace v = Subspace::span(stacked);
        if (v.dim() != keep + static_cast<Eigen::Index>(t)) continue;
        return v;
    }
}

NearestResult min_subspace_decoder(const Subspace& v, const std::vector<Subspace>& codebook) {
    if (codebook.empty()) throw std::invalid_argument("min_subspace_decoder: empty codebook");
    NearestResult res;
    res.distance = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < codebook.size(); ++i) {
        double d = subspace_distance(v, codebook[i]);
        if (d < res.distance - 1e-12) {
            res.index = i;
            res.distance = d;
            res.tie = false;
        } else if (std::abs(d - res.distance) <= 1e-12) {
            res.tie = true;
        }
    }
    return res;
}

std::vector<Subspace> cp_codebook_subspaces(const CodeParams& params) {
    std::vector<Subspace> book;
    const double scale = 1.0 / std::sqrt(static_cast<double>(params.n));
    for_each_message(MessageSpace::Fp, params, [&](const Polynomial& f) {
        ComplexWord w = cp_encode(f, params);
        Eigen::MatrixXcd row(1, params.n);
        for (std::size_t i = 0; i < params.n; ++i) row(0, i) = w.coords[i] * scale;
        book.emplace_back(row);
    });
    return book;
}

}  // namespace cpcodes
