#include "cpcodes/field.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace cpcodes {

namespace {

constexpr std::uint32_t kMaxQ = 512;  // table budget: q*q entries per table

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Decompose q = p^m with p prime; returns false if q is not a prime power.
bool prime_power(std::uint32_t q, std::uint32_t& p, std::uint32_t& m) {
    if (q < 2) return false;
    std::uint32_t b = q;
    for (std::uint32_t d = 2; d * d <= b; ++d) {
        if (b % d == 0) {
            p = d;
            m = 0;
            while (b > 1) {
                if (b % d != 0) return false;
                b /= d;
                ++m;
            }
            return true;
        }
    }
    p = q;  // q itself prime
    m = 1;
    return true;
}

// Arithmetic on small GF(p)[X] coefficient vectors (constant term first),
// used only while building extension field tables.
using PVec = std::vector<std::uint32_t>;

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    PVec r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    ptrim(r);
    return r;
}

// a mod b, b monic
PVec pmod(PVec a, const PVec& b, std::uint32_t p) {
    ptrim(a);
    while (a.size() >= b.size()) {
        std::uint32_t c = a.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint32_t t = (c * b[i]) % p;
            a[i + shift] = (a[i + shift] + p - t) % p;
        }
        ptrim(a);
    }
    return a;
}

PVec decode_pvec(std::uint32_t v, std::uint32_t p) {
    PVec r;
    while (v > 0) {
        r.push_back(v % p);
        v /= p;
    }
    return r;
}

std::uint32_t encode_pvec(const PVec& a, std::uint32_t p) {
    std::uint32_t v = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * p + *it;
    return v;
}

bool divides(const PVec& d, const PVec& a, std::uint32_t p) { return pmod(a, d, p).empty(); }

// Monic irreducibility by trial division with all monic polynomials of
// degree 1..deg/2. Degrees here never exceed 6, so this is instant.
bool irreducible(const PVec& f, std::uint32_t p) {
    std::uint32_t deg = static_cast<std::uint32_t>(f.size()) - 1;
    for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            PVec g = decode_pvec(static_cast<std::uint32_t>(enc), p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (divides(g, f, p)) return false;
        }
    }
    return true;
}

}  // namespace

Field::Field(std::uint32_t q) : q_(q) {
    if (!prime_power(q, p_, m_))
        throw std::invalid_argument("Field: q = " + std::to_string(q) + " is not a prime power");
    if (q > kMaxQ) throw std::invalid_argument("Field: q exceeds table budget");

    if (m_ > 1) {
        // Smallest monic irreducible of degree m by base-p encoding of the
        // non-leading coefficients.
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < m_; ++i) count *= p_;
        for (std::uint64_t enc = 0; enc < count; ++enc) {
            PVec f = decode_pvec(static_cast<std::uint32_t>(enc), p_);
            f.resize(m_ + 1, 0);
            f[m_] = 1;
            if (irreducible(f, p_)) {
                modulus_ = f;
                break;
            }
        }
        if (modulus_.empty()) throw std::logic_error("Field: no irreducible modulus found");
    }

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    trace_.resize(q_);

    if (m_ == 1) {
        for (std::uint32_t a = 0; a < q_; ++a) {
            for (std::uint32_t b = 0; b < q_; ++b) {
                add_[a * q_ + b] = static_cast<std::uint16_t>((a + b) % q_);
                mul_[a * q_ + b] = static_cast<std::uint16_t>((a * b) % q_);
            }
            neg_[a] = static_cast<std::uint16_t>((q_ - a) % q_);
            trace_[a] = static_cast<std::uint16_t>(a);
        }
    } else {
        for (std::uint32_t a = 0; a < q_; ++a) {
            PVec pa = decode_pvec(a, p_);
            for (std::uint32_t b = 0; b < q_; ++b) {
                PVec pb = decode_pvec(b, p_);
                // digit-wise addition
                PVec s(std::max(pa.size(), pb.size()), 0);
                for (std::size_t i = 0; i < s.size(); ++i) {
                    std::uint32_t x = i < pa.size() ? pa[i] : 0;
                    std::uint32_t y = i < pb.size() ? pb[i] : 0;
                    s[i] = (x + y) % p_;
                }
                ptrim(s);
                add_[a * q_ + b] = static_cast<std::uint16_t>(encode_pvec(s, p_));
                mul_[a * q_ + b] =
                    static_cast<std::uint16_t>(encode_pvec(pmod(pmul(pa, pb, p_), modulus_, p_), p_));
            }
        }
        for (std::uint32_t a = 0; a < q_; ++a) {
            PVec pa = decode_pvec(a, p_);
            for (auto& d : pa) d = (p_ - d) % p_;
            ptrim(pa);
            neg_[a] = static_cast<std::uint16_t>(encode_pvec(pa, p_));
        }
        // Tr(a) = a + a^p + ... + a^(p^(m-1)); lands in the prime subfield.
        for (std::uint32_t a = 0; a < q_; ++a) {
            std::uint32_t acc = 0, x = a;
            for (std::uint32_t i = 0; i < m_; ++i) {
                acc = add(acc, x);
                x = pow(x, p_);
            }
            if (acc >= p_) throw std::logic_error("Field: trace left the prime subfield");
            trace_[a] = static_cast<std::uint16_t>(acc);
        }
    }

    for (std::uint32_t a = 1; a < q_; ++a)
        for (std::uint32_t b = 1; b < q_; ++b)
            if (mul(a, b) == 1) {
                inv_[a] = static_cast<std::uint16_t>(b);
                break;
            }

    generator_ = 0;
    for (std::uint32_t g = 1; g < q_; ++g) {
        std::uint32_t x = g, order = 1;
        while (x != 1) {
            x = mul(x, g);
            ++order;
        }
        if (order == q_ - 1) {
            generator_ = g;
            break;
        }
    }
    if (q_ > 2 && generator_ == 0) throw std::logic_error("Field: no generator found");
    if (q_ == 2) generator_ = 1;

    pascal_.assign(std::size_t(p_) * p_, 0);
    for (std::uint32_t n = 0; n < p_; ++n) {
        pascal_[n * p_ + 0] = 1;
        for (std::uint32_t k = 1; k <= n; ++k)
            pascal_[n * p_ + k] = static_cast<std::uint16_t>(
                (pascal_[(n - 1) * p_ + k - 1] + (k <= n - 1 ? pascal_[(n - 1) * p_ + k] : 0)) % p_);
    }
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1, base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

std::uint32_t Field::binom_mod_p(std::uint64_t n, std::uint64_t k) const {
    if (k > n) return 0;
    std::uint32_t r = 1;
    while (n > 0 || k > 0) {
        std::uint64_t nd = n % p_, kd = k % p_;
        if (kd > nd) return 0;
        r = static_cast<std::uint32_t>((r * pascal_[nd * p_ + kd]) % p_);
        n /= p_;
        k /= p_;
    }
    return r;
}

const Field& Field::get(std::uint32_t q) {
    static std::mutex mu;
    static std::map<std::uint32_t, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, std::unique_ptr<Field>(new Field(q))).first;
    return *it->second;
}

}  // namespace cpcodes
