#ifndef CPCODES_FIELD_HPP
#define CPCODES_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpcodes {

/// Finite field GF(q) with q = p^m a prime power.
///
/// Elements are the integers 0..q-1. For extension fields the integer packs
/// the base-p digit vector of the residue polynomial, least significant digit
/// first, reduced modulo a fixed irreducible of degree m (the one with the
/// smallest base-p encoding of its non-leading coefficients, so field tables
/// are identical across runs). Dense add/mul/inv tables are built once; all
/// accessors are read-only after construction.
class Field {
  public:
    /// Shared immutable descriptor for GF(q). Throws std::invalid_argument if
    /// q is not a prime power or exceeds the table budget.
    static const Field& get(std::uint32_t q);

    std::uint32_t q() const noexcept { return q_; }
    std::uint32_t p() const noexcept { return p_; }
    std::uint32_t m() const noexcept { return m_; }
    bool is_prime() const noexcept { return m_ == 1; }

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + b]; }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add_[a * q_ + neg_[b]]; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return mul_[a * q_ + b]; }
    std::uint32_t neg(std::uint32_t a) const { return neg_[a]; }

    /// Multiplicative inverse; throws std::domain_error for a = 0.
    std::uint32_t inv(std::uint32_t a) const {
        if (a == 0) throw std::domain_error("Field::inv: zero has no inverse");
        return inv_[a];
    }

    std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;

    /// Absolute trace onto the prime subfield; the result is < p.
    std::uint32_t trace(std::uint32_t a) const { return trace_[a]; }

    /// Smallest generator of the multiplicative group (by integer encoding).
    std::uint32_t generator() const noexcept { return generator_; }

    /// Coefficients of the irreducible modulus (degree m), constant term
    /// first; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    /// C(n, k) mod p via Lucas' theorem.
    std::uint32_t binom_mod_p(std::uint64_t n, std::uint64_t k) const;

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

  private:
    explicit Field(std::uint32_t q);

    std::uint32_t q_, p_, m_;
    std::uint32_t generator_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint16_t> add_, mul_;
    std::vector<std::uint16_t> neg_, inv_, trace_;
    std::vector<std::uint16_t> pascal_;  // p x p Pascal triangle mod p
};

/// A field element: a value in [0, q) tagged with its field. Arithmetic
/// between elements of different fields throws std::invalid_argument.
class FieldElement {
  public:
    FieldElement() : v_(0), f_(nullptr) {}
    FieldElement(std::uint32_t value, const Field& f) : v_(value), f_(&f) {
        if (value >= f.q()) throw std::invalid_argument("FieldElement: value out of range");
    }

    std::uint32_t value() const noexcept { return v_; }
    const Field& field() const {
        if (!f_) throw std::logic_error("FieldElement: unbound element");
        return *f_;
    }
    bool is_zero() const noexcept { return v_ == 0; }

    FieldElement operator+(const FieldElement& o) const { return wrap(field().add(v_, same(o))); }
    FieldElement operator-(const FieldElement& o) const { return wrap(field().sub(v_, same(o))); }
    FieldElement operator*(const FieldElement& o) const { return wrap(field().mul(v_, same(o))); }
    FieldElement operator/(const FieldElement& o) const {
        return wrap(field().mul(v_, field().inv(same(o))));
    }
    FieldElement operator-() const { return wrap(field().neg(v_)); }
    bool operator==(const FieldElement& o) const { return v_ == o.v_ && f_ == o.f_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Multiplicative inverse; throws std::domain_error on zero.
    FieldElement inverse() const { return wrap(field().inv(v_)); }

  private:
    FieldElement wrap(std::uint32_t v) const { return FieldElement(v, field()); }
    std::uint32_t same(const FieldElement& o) const {
        if (f_ != o.f_) throw std::invalid_argument("FieldElement: field mismatch");
        return o.v_;
    }
    std::uint32_t v_;
    const Field* f_;
};

}  // namespace cpcodes

#endif
