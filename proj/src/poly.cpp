#include "cpcodes/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <tuple>

namespace cpcodes {

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_same(o);
    std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->add(coeff(i), o.coeff(i));
    return Polynomial(*f_, std::move(r));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    check_same(o);
    std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f_->sub(coeff(i), o.coeff(i));
    return Polynomial(*f_, std::move(r));
}

Polynomial Polynomial::operator-() const {
    std::vector<std::uint32_t> r(c_);
    for (auto& v : r) v = f_->neg(v);
    return Polynomial(*f_, std::move(r));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return zero(*f_);
    std::vector<std::uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = f_->add(r[i + j], f_->mul(c_[i], o.c_[j]));
    }
    return Polynomial(*f_, std::move(r));
}

Polynomial Polynomial::scaled(std::uint32_t s) const {
    std::vector<std::uint32_t> r(c_);
    for (auto& v : r) v = f_->mul(v, s);
    return Polynomial(*f_, std::move(r));
}

Polynomial Polynomial::shifted_up(std::size_t k) const {
    if (is_zero()) return zero(*f_);
    std::vector<std::uint32_t> r(c_.size() + k, 0);
    std::copy(c_.begin(), c_.end(), r.begin() + static_cast<std::ptrdiff_t>(k));
    return Polynomial(*f_, std::move(r));
}

Polynomial Polynomial::divided_by_x() const {
    if (is_zero()) return zero(*f_);
    if (c_[0] != 0) throw std::domain_error("Polynomial::divided_by_x: nonzero constant term");
    return Polynomial(*f_, std::vector<std::uint32_t>(c_.begin() + 1, c_.end()));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& g) const {
    check_same(g);
    if (g.is_zero()) throw std::domain_error("Polynomial::divmod: division by zero polynomial");
    if (degree() < g.degree()) return {zero(*f_), *this};
    std::vector<std::uint32_t> rem(c_);
    std::vector<std::uint32_t> quo(c_.size() - g.c_.size() + 1, 0);
    const std::uint32_t lead_inv = f_->inv(g.leading());
    for (std::size_t i = rem.size(); i-- >= g.c_.size();) {
        if (rem[i] == 0) continue;
        std::uint32_t factor = f_->mul(rem[i], lead_inv);
        std::size_t shift = i - (g.c_.size() - 1);
        quo[shift] = factor;
        for (std::size_t j = 0; j < g.c_.size(); ++j)
            rem[shift + j] = f_->sub(rem[shift + j], f_->mul(factor, g.c_[j]));
    }
    return {Polynomial(*f_, std::move(quo)), Polynomial(*f_, std::move(rem))};
}

std::vector<std::uint32_t> Polynomial::roots() const {
    if (is_zero()) throw std::domain_error("Polynomial::roots: zero polynomial");
    std::vector<std::uint32_t> r;
    for (std::uint32_t x = 0; x < f_->q(); ++x)
        if (eval(x) == 0) r.push_back(x);
    return r;
}

std::string Polynomial::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (j == 0 || c_[j] != 1) os << c_[j];
        if (j >= 1) {
            if (c_[j] != 1) os << "*";
            os << "X";
            if (j >= 2) os << "^" << j;
        }
    }
    return os.str();
}

Polynomial interpolate(const Field& f, std::span<const std::uint32_t> xs,
                       std::span<const std::uint32_t> ys) {
    if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
    // Newton form: extend the interpolant one node at a time through the
    // running node polynomial.
    Polynomial acc = Polynomial::zero(f);
    Polynomial node = Polynomial::constant(f, 1);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::uint32_t deficit = f.sub(ys[i], acc.eval(xs[i]));
        if (deficit != 0) {
            std::uint32_t denom = node.eval(xs[i]);
            if (denom == 0) throw std::invalid_argument("interpolate: repeated x coordinate");
            acc = acc + node.scaled(f.mul(deficit, f.inv(denom)));
        }
        node = node * Polynomial(f, {f.neg(xs[i]), 1});
    }
    return acc;
}

BivariatePolynomial::BivariatePolynomial(const Field& f, std::size_t nx, std::size_t ny,
                                         std::vector<std::uint32_t> grid)
    : f_(&f), nx_(nx), ny_(ny), c_(std::move(grid)) {
    if (c_.size() != nx_ * ny_) throw std::invalid_argument("BivariatePolynomial: bad grid size");
    for (auto v : c_)
        if (v >= f.q()) throw std::invalid_argument("BivariatePolynomial: coefficient out of range");
    trim();
}

BivariatePolynomial BivariatePolynomial::from_monomials(
    const Field& f, const std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>>& ms) {
    std::size_t nx = 0, ny = 0;
    for (const auto& [i, j, v] : ms) {
        (void)v;
        nx = std::max(nx, i + 1);
        ny = std::max(ny, j + 1);
    }
    std::vector<std::uint32_t> grid(nx * ny, 0);
    for (const auto& [i, j, v] : ms) grid[i * ny + j] = f.add(grid[i * ny + j], v);
    return BivariatePolynomial(f, nx, ny, std::move(grid));
}

void BivariatePolynomial::trim() {
    std::size_t mx = 0, my = 0;
    for (std::size_t i = 0; i < nx_; ++i)
        for (std::size_t j = 0; j < ny_; ++j)
            if (c_[i * ny_ + j] != 0) {
                mx = std::max(mx, i + 1);
                my = std::max(my, j + 1);
            }
    if (mx == nx_ && my == ny_) return;
    std::vector<std::uint32_t> g(mx * my, 0);
    for (std::size_t i = 0; i < mx; ++i)
        for (std::size_t j = 0; j < my; ++j) g[i * my + j] = c_[i * ny_ + j];
    nx_ = mx;
    ny_ = my;
    c_ = std::move(g);
}

std::int64_t BivariatePolynomial::weighted_degree(std::int64_t wx, std::int64_t wy) const {
    if (is_zero()) throw std::domain_error("weighted_degree: zero polynomial");
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    for (std::size_t i = 0; i < nx_; ++i)
        for (std::size_t j = 0; j < ny_; ++j)
            if (c_[i * ny_ + j] != 0)
                best = std::max(best, wx * static_cast<std::int64_t>(i) +
                                          wy * static_cast<std::int64_t>(j));
    return best;
}

std::uint32_t BivariatePolynomial::root_multiplicity(std::uint32_t a, std::uint32_t b) const {
    if (is_zero()) throw std::domain_error("root_multiplicity: zero polynomial");
    BivariatePolynomial s = shifted(a, b);
    std::uint32_t best = std::numeric_limits<std::uint32_t>::max();
    for (std::size_t i = 0; i < s.nx_; ++i)
        for (std::size_t j = 0; j < s.ny_; ++j)
            if (s.c_[i * s.ny_ + j] != 0) best = std::min<std::uint32_t>(best, static_cast<std::uint32_t>(i + j));
    return best;
}

std::uint32_t BivariatePolynomial::eval(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t acc = 0;
    // Horner in Y over Horner-in-X column values.
    for (std::size_t j = ny_; j-- > 0;) {
        std::uint32_t col = 0;
        for (std::size_t i = nx_; i-- > 0;) col = f_->add(f_->mul(col, a), c_[i * ny_ + j]);
        acc = f_->add(f_->mul(acc, b), col);
    }
    return acc;
}

Polynomial BivariatePolynomial::y_coefficient(std::size_t j) const {
    std::vector<std::uint32_t> v(nx_, 0);
    for (std::size_t i = 0; i < nx_; ++i) v[i] = coeff(i, j);
    return Polynomial(*f_, std::move(v));
}

Polynomial BivariatePolynomial::at_x_zero() const {
    std::vector<std::uint32_t> v(ny_, 0);
    for (std::size_t j = 0; j < ny_; ++j) v[j] = coeff(0, j);
    return Polynomial(*f_, std::move(v));
}

Polynomial BivariatePolynomial::eval_y(std::uint32_t gamma) const {
    Polynomial acc = Polynomial::zero(*f_);
    for (std::size_t j = ny_; j-- > 0;) acc = acc.scaled(gamma) + y_coefficient(j);
    return acc;
}

Polynomial BivariatePolynomial::compose_y(const Polynomial& g) const {
    Polynomial acc = Polynomial::zero(*f_);
    for (std::size_t j = ny_; j-- > 0;) acc = acc * g + y_coefficient(j);
    return acc;
}

BivariatePolynomial BivariatePolynomial::shifted(std::uint32_t a, std::uint32_t b) const {
    if (is_zero()) return *this;
    // Taylor shift in X then in Y, with binomial coefficients mod p.
    std::vector<std::uint32_t> g(c_.size(), 0);
    for (std::size_t i = 0; i < nx_; ++i) {
        // X^i -> sum_r C(i, r) a^(i-r) X^r
        std::uint32_t apow = 1;
        for (std::size_t r = i + 1; r-- > 0;) {
            std::uint32_t binpow = f_->mul(f_->binom_mod_p(i, r), apow);
            if (binpow != 0)
                for (std::size_t j = 0; j < ny_; ++j)
                    if (c_[i * ny_ + j] != 0)
                        g[r * ny_ + j] = f_->add(g[r * ny_ + j], f_->mul(binpow, c_[i * ny_ + j]));
            apow = f_->mul(apow, a);
        }
    }
    std::vector<std::uint32_t> h(c_.size(), 0);
    for (std::size_t j = 0; j < ny_; ++j) {
        std::uint32_t bpow = 1;
        for (std::size_t r = j + 1; r-- > 0;) {
            std::uint32_t binpow = f_->mul(f_->binom_mod_p(j, r), bpow);
            if (binpow != 0)
                for (std::size_t i = 0; i < nx_; ++i)
                    if (g[i * ny_ + j] != 0)
                        h[i * ny_ + r] = f_->add(h[i * ny_ + r], f_->mul(binpow, g[i * ny_ + j]));
            bpow = f_->mul(bpow, b);
        }
    }
    return BivariatePolynomial(*f_, nx_, ny_, std::move(h));
}

BivariatePolynomial BivariatePolynomial::substitute_y_affine(std::uint32_t gamma) const {
    if (is_zero()) return *this;
    // Q(X, XY + gamma): Y^j expands to sum_r C(j, r) gamma^(j-r) X^r Y^r.
    std::size_t nx = nx_ + ny_ - 1;
    std::vector<std::uint32_t> g(nx * ny_, 0);
    for (std::size_t j = 0; j < ny_; ++j) {
        std::uint32_t gpow = 1;
        for (std::size_t r = j + 1; r-- > 0;) {
            std::uint32_t w = f_->mul(f_->binom_mod_p(j, r), gpow);
            if (w != 0)
                for (std::size_t i = 0; i < nx_; ++i)
                    if (c_[i * ny_ + j] != 0)
                        g[(i + r) * ny_ + r] = f_->add(g[(i + r) * ny_ + r], f_->mul(w, c_[i * ny_ + j]));
            gpow = f_->mul(gpow, gamma);
        }
    }
    return BivariatePolynomial(*f_, nx, ny_, std::move(g));
}

std::size_t BivariatePolynomial::remove_x_content() {
    if (is_zero()) return 0;
    std::size_t m = 0;
    while (m < nx_) {
        bool all_zero = true;
        for (std::size_t j = 0; j < ny_; ++j)
            if (c_[m * ny_ + j] != 0) {
                all_zero = false;
                break;
            }
        if (!all_zero) break;
        ++m;
    }
    if (m == 0) return 0;
    std::vector<std::uint32_t> g((nx_ - m) * ny_);
    std::copy(c_.begin() + static_cast<std::ptrdiff_t>(m * ny_), c_.end(), g.begin());
    nx_ -= m;
    c_ = std::move(g);
    trim();
    return m;
}

}  // namespace cpcodes
