#ifndef CPCODES_POLY_HPP
#define CPCODES_POLY_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpcodes/field.hpp"

namespace cpcodes {

/// Dense univariate polynomial over a Field. Coefficient j is the coefficient
/// of X^j. The representation is canonical: no trailing zero coefficients, and
/// the zero polynomial is the empty vector with degree() == kZeroDegree.
class Polynomial {
  public:
    /// Degree sentinel for the zero polynomial; compares below every true degree.
    static constexpr int kZeroDegree = -1;

    explicit Polynomial(const Field& f) : f_(&f) {}
    Polynomial(const Field& f, std::vector<std::uint32_t> coeffs) : f_(&f), c_(std::move(coeffs)) {
        for (auto v : c_)
            if (v >= f.q()) throw std::invalid_argument("Polynomial: coefficient out of range");
        trim();
    }

    static Polynomial zero(const Field& f) { return Polynomial(f); }
    static Polynomial constant(const Field& f, std::uint32_t c) { return Polynomial(f, {c}); }
    static Polynomial monomial(const Field& f, std::uint32_t c, std::size_t deg) {
        std::vector<std::uint32_t> v(deg + 1, 0);
        v[deg] = c;
        return Polynomial(f, std::move(v));
    }

    const Field& field() const noexcept { return *f_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    std::size_t size() const noexcept { return c_.size(); }

    /// Coefficient of X^j (0 beyond the degree).
    std::uint32_t coeff(std::size_t j) const noexcept { return j < c_.size() ? c_[j] : 0; }
    FieldElement operator[](std::size_t j) const { return FieldElement(coeff(j), *f_); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }

    std::uint32_t leading() const {
        if (c_.empty()) throw std::domain_error("Polynomial::leading: zero polynomial");
        return c_.back();
    }

    /// Horner evaluation at x.
    std::uint32_t eval(std::uint32_t x) const {
        std::uint32_t acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = f_->add(f_->mul(acc, x), *it);
        return acc;
    }
    FieldElement eval(const FieldElement& x) const {
        if (&x.field() != f_) throw std::invalid_argument("Polynomial::eval: field mismatch");
        return FieldElement(eval(x.value()), *f_);
    }

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial& o) const { return f_ == o.f_ && c_ == o.c_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(std::uint32_t s) const;

    /// Multiplication by X^k.
    Polynomial shifted_up(std::size_t k) const;

    /// Division by X; requires a zero constant term.
    Polynomial divided_by_x() const;

    /// Euclidean division: returns (quotient, remainder) with
    /// deg remainder < deg divisor. Throws std::domain_error when g = 0.
    std::pair<Polynomial, Polynomial> divmod(const Polynomial& g) const;

    /// All roots in the field, by exhaustive evaluation.
    /// Throws std::domain_error on the zero polynomial.
    std::vector<std::uint32_t> roots() const;

    std::string str() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    void check_same(const Polynomial& o) const {
        if (f_ != o.f_) throw std::invalid_argument("Polynomial: field mismatch");
    }

    const Field* f_;
    std::vector<std::uint32_t> c_;
};

/// Unique interpolating polynomial of degree < n through n points with
/// distinct x coordinates (Newton form).
Polynomial interpolate(const Field& f, std::span<const std::uint32_t> xs,
                       std::span<const std::uint32_t> ys);

/// Dense bivariate polynomial over a Field, coefficient grid c(i, j) for
/// X^i Y^j. Canonical: trailing all-zero rows and columns are trimmed; the
/// zero polynomial has an empty grid.
class BivariatePolynomial {
  public:
    explicit BivariatePolynomial(const Field& f) : f_(&f), nx_(0), ny_(0) {}
    BivariatePolynomial(const Field& f, std::size_t nx, std::size_t ny,
                        std::vector<std::uint32_t> grid);

    /// Build from a list of (i, j, coeff) monomials.
    static BivariatePolynomial from_monomials(
        const Field& f, const std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>>& ms);

    const Field& field() const noexcept { return *f_; }
    bool is_zero() const noexcept { return nx_ == 0; }
    /// Grid extents (degree bounds + 1); zero polynomial has 0 x 0.
    std::size_t x_size() const noexcept { return nx_; }
    std::size_t y_size() const noexcept { return ny_; }
    std::uint32_t coeff(std::size_t i, std::size_t j) const noexcept {
        return (i < nx_ && j < ny_) ? c_[i * ny_ + j] : 0;
    }

    /// Max of wx*i + wy*j over nonzero monomials; throws on the zero polynomial.
    std::int64_t weighted_degree(std::int64_t wx, std::int64_t wy) const;

    /// Multiplicity of the root (a, b): smallest total degree of a nonzero
    /// monomial of Q(X+a, Y+b); 0 when Q(a, b) != 0. Throws on zero Q.
    std::uint32_t root_multiplicity(std::uint32_t a, std::uint32_t b) const;

    std::uint32_t eval(std::uint32_t a, std::uint32_t b) const;

    /// Coefficient of Y^j as a polynomial in X.
    Polynomial y_coefficient(std::size_t j) const;

    /// Q(0, Y) as a univariate polynomial (in the Y variable).
    Polynomial at_x_zero() const;

    /// Q(X, gamma) as a univariate polynomial in X.
    Polynomial eval_y(std::uint32_t gamma) const;

    /// Q(X, g(X)).
    Polynomial compose_y(const Polynomial& g) const;

    /// Q(X + a, Y + b).
    BivariatePolynomial shifted(std::uint32_t a, std::uint32_t b) const;

    /// Q(X, X*Y + gamma), the Roth-Ruckenstein level step.
    BivariatePolynomial substitute_y_affine(std::uint32_t gamma) const;

    /// Divide out the largest power of X dividing Q; returns the exponent
    /// removed. No-op on the zero polynomial.
    std::size_t remove_x_content();

    bool operator==(const BivariatePolynomial& o) const {
        return f_ == o.f_ && nx_ == o.nx_ && ny_ == o.ny_ && c_ == o.c_;
    }

  private:
    void trim();

    const Field* f_;
    std::size_t nx_, ny_;
    std::vector<std::uint32_t> c_;  // c_[i * ny_ + j]
};

}  // namespace cpcodes

#endif
