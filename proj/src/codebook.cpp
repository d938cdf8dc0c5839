#include "cpcodes/codebook.hpp"

#include <cmath>
#include <numbers>

namespace cpcodes {

Character::Character(const Field& f, std::uint32_t beta) : f_(&f) {
    if (beta == 0 || beta >= f.q()) throw std::invalid_argument("Character: beta must be nonzero");
    table_.resize(f.q());
    const double order = static_cast<double>(f.p());
    bool nontrivial = false;
    for (std::uint32_t x = 0; x < f.q(); ++x) {
        std::uint32_t bx = f.mul(beta, x);
        // exponent r/p with r = Tr(beta*x); for prime fields the trace is the
        // identity and the order is q itself.
        double r = static_cast<double>(f.trace(bx));
        table_[x] = std::polar(1.0, 2.0 * std::numbers::pi * r / order);
        if (x > 0 && f.trace(bx) != 0) nontrivial = true;
    }
    if (!nontrivial) throw std::logic_error("Character: trivial character");
}

CodeParams CodeParams::make(std::uint32_t q, std::uint32_t k, Ordering ord) {
    const Field& f = Field::get(q);
    CodeParams cp;
    cp.field = &f;
    cp.q = q;
    cp.p = f.p();
    cp.n = q - 1;
    cp.k = k;
    if (k < 1 || k > cp.n) throw std::invalid_argument("CodeParams: need 1 <= k <= n = q - 1");
    cp.alphas.reserve(cp.n);
    if (ord == Ordering::natural) {
        for (std::uint32_t x = 1; x < q; ++x) cp.alphas.push_back(x);
    } else {
        std::uint32_t g = f.generator(), x = 1;
        for (std::uint32_t i = 0; i < cp.n; ++i) {
            cp.alphas.push_back(x);
            x = f.mul(x, g);
        }
    }
    cp.chi = std::make_shared<Character>(f);
    return cp;
}

namespace {

void check_field(const Polynomial& f, const CodeParams& params, const char* who) {
    if (&f.field() != params.field)
        throw std::invalid_argument(std::string(who) + ": field mismatch");
}

}  // namespace

bool space_membership(const Polynomial& f, MessageSpace space, const CodeParams& params) {
    check_field(f, params, "space_membership");
    const std::uint32_t k = params.k, p = params.p;
    switch (space) {
        case MessageSpace::F:
            return f.degree() <= static_cast<int>(k);
        case MessageSpace::Fp: {
            if (f.degree() > static_cast<int>(k)) return false;
            for (std::uint32_t j = 0; j * p <= k; ++j)
                if (f.coeff(j * p) != 0) return false;
            return true;
        }
        case MessageSpace::FpPrime: {
            if (f.degree() > static_cast<int>(k) - 1) return false;
            return space_membership(f.shifted_up(1), MessageSpace::Fp, params);
        }
    }
    return false;
}

Polynomial space_project(const Polynomial& f, const CodeParams& params) {
    check_field(f, params, "space_project");
    if (f.degree() > static_cast<int>(params.k))
        throw std::invalid_argument("space_project: degree exceeds k");
    std::vector<std::uint32_t> c(f.coeffs());
    for (std::uint32_t j = 0; j * params.p < c.size(); ++j) c[j * params.p] = 0;
    return Polynomial(*params.field, std::move(c));
}

BigInt space_size(MessageSpace space, const CodeParams& params) {
    BigInt q = params.q;
    if (space == MessageSpace::F) return boost::multiprecision::pow(q, params.k + 1);
    std::uint32_t free_coeffs = params.k - params.k / params.p;
    return boost::multiprecision::pow(q, free_coeffs);
}

void for_each_message(MessageSpace space, const CodeParams& params,
                      const std::function<void(const Polynomial&)>& visit) {
    const Field& f = *params.field;
    const std::uint32_t q = params.q, p = params.p, k = params.k;
    // Free coefficient indices of a degree bound deg_max polynomial.
    std::vector<std::uint32_t> free_idx;
    std::uint32_t deg_max = (space == MessageSpace::FpPrime) ? k - 1 : k;
    for (std::uint32_t j = 0; j <= deg_max; ++j) {
        bool constrained = false;
        if (space == MessageSpace::Fp) constrained = (j % p == 0);
        if (space == MessageSpace::FpPrime) constrained = ((j + 1) % p == 0);
        if (!constrained) free_idx.push_back(j);
    }
    std::vector<std::uint32_t> coeffs(deg_max + 1, 0);
    std::vector<std::uint32_t> digits(free_idx.size(), 0);
    while (true) {
        for (std::size_t t = 0; t < free_idx.size(); ++t) coeffs[free_idx[t]] = digits[t];
        visit(Polynomial(f, coeffs));
        std::size_t pos = 0;
        while (pos < digits.size() && ++digits[pos] == q) digits[pos++] = 0;
        if (pos == digits.size()) break;
    }
}

namespace {

FieldCodeword evaluate(const Polynomial& f, const CodeParams& params, std::uint32_t dim,
                       bool scale_by_alpha, const char* who) {
    check_field(f, params, who);
    if (dim == 0) dim = params.k;
    if (f.degree() >= static_cast<int>(dim))
        throw std::invalid_argument(std::string(who) + ": message degree exceeds dimension bound");
    const Field& fld = *params.field;
    FieldCodeword w;
    w.field = &fld;
    w.symbols.resize(params.n);
    for (std::size_t i = 0; i < params.n; ++i) {
        std::uint32_t v = f.eval(params.alphas[i]);
        w.symbols[i] = scale_by_alpha ? fld.mul(params.alphas[i], v) : v;
    }
    return w;
}

}  // namespace

FieldCodeword rs_encode(const Polynomial& f, const CodeParams& params, std::uint32_t dim) {
    return evaluate(f, params, dim, false, "rs_encode");
}

FieldCodeword grs_encode(const Polynomial& f, const CodeParams& params, std::uint32_t dim) {
    return evaluate(f, params, dim, true, "grs_encode");
}

ComplexWord cp_encode(const Polynomial& f, const CodeParams& params) {
    check_field(f, params, "cp_encode");
    if (!space_membership(f, MessageSpace::Fp, params))
        throw std::invalid_argument("cp_encode: message not in Fp(k, q)");
    const Character& chi = *params.chi;
    ComplexWord w;
    w.coords.resize(params.n);
    for (std::size_t i = 0; i < params.n; ++i) w.coords[i] = chi(f.eval(params.alphas[i]));
    return w;
}

std::complex<double> character_eval(const CodeParams& params, std::uint32_t x) {
    return (*params.chi)(x);
}

}  // namespace cpcodes
