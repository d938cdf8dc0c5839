#include "cpcodes/decode_unique.hpp"

#include <cmath>
#include <numbers>

namespace cpcodes {

std::uint32_t phi(std::complex<double> z, std::uint32_t q) {
    if (z.real() == 0.0 && z.imag() == 0.0) throw std::domain_error("phi: zero input");
    double x = static_cast<double>(q) * std::arg(z) / (2.0 * std::numbers::pi) + 0.5;
    long r = static_cast<long>(std::floor(x));
    long m = r % static_cast<long>(q);
    if (m < 0) m += q;
    return static_cast<std::uint32_t>(m);
}

namespace detail {

namespace {

inline void trim(std::vector<std::uint32_t>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

inline int deg(const std::vector<std::uint32_t>& v) { return static_cast<int>(v.size()) - 1; }

inline std::uint32_t eval_raw(const Field& f, const std::vector<std::uint32_t>& c,
                              std::uint32_t x) {
    std::uint32_t acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = f.add(f.mul(acc, x), *it);
    return acc;
}

}  // namespace

std::vector<std::uint32_t> node_polynomial(const Field& fld, std::span<const std::uint32_t> xs) {
    std::vector<std::uint32_t> node{1};
    node.reserve(xs.size() + 1);
    for (std::uint32_t x : xs) {
        node.push_back(0);
        std::uint32_t neg_x = fld.neg(x);
        for (std::size_t i = node.size(); i-- > 1;)
            node[i] = fld.add(node[i - 1], fld.mul(node[i], neg_x));
        node[0] = fld.mul(node[0], neg_x);
    }
    return node;
}

bool gao_core(const Field& fld, std::span<const std::uint32_t> xs,
              std::span<const std::uint32_t> ys, std::span<const std::uint32_t> node,
              std::uint32_t dim, GaoScratch& ws, std::vector<std::uint32_t>& out) {
    const std::size_t n = xs.size();
    if (ys.size() != n || node.size() != n + 1) throw std::invalid_argument("gao_core: bad sizes");
    if (dim == 0 || dim > n) throw std::invalid_argument("gao_core: bad dimension");

    // Newton interpolation of (xs, ys) into ws.acc.
    auto& acc = ws.acc;
    auto& node_acc = ws.node_acc;
    acc.clear();
    node_acc.assign(1, 1);
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t deficit = fld.sub(ys[i], eval_raw(fld, acc, xs[i]));
        if (deficit != 0) {
            std::uint32_t denom = eval_raw(fld, node_acc, xs[i]);
            std::uint32_t scale = fld.mul(deficit, fld.inv(denom));
            if (acc.size() < node_acc.size()) acc.resize(node_acc.size(), 0);
            for (std::size_t j = 0; j < node_acc.size(); ++j)
                acc[j] = fld.add(acc[j], fld.mul(scale, node_acc[j]));
        }
        // node_acc *= (X - xs[i])
        node_acc.push_back(0);
        std::uint32_t neg_x = fld.neg(xs[i]);
        for (std::size_t j = node_acc.size(); j-- > 1;)
            node_acc[j] = fld.add(node_acc[j - 1], fld.mul(node_acc[j], neg_x));
        node_acc[0] = fld.mul(node_acc[0], neg_x);
    }
    trim(acc);

    if (deg(acc) < static_cast<int>(dim)) {  // interpolant already a valid message
        out = acc;
        return true;
    }

    // Extended Euclid on (node, interpolant), tracking only the Bezout
    // cofactor of the interpolant. Stop at the first remainder of degree
    // below (n + dim) / 2.
    auto& r0 = ws.r0;
    auto& r1 = ws.r1;
    auto& v0 = ws.v0;
    auto& v1 = ws.v1;
    auto& quot = ws.quot;
    auto& tmp = ws.tmp;
    r0.assign(node.begin(), node.end());
    r1 = acc;
    v0.clear();
    v1.assign(1, 1);

    const int stop = static_cast<int>(n + dim);  // loop while 2*deg(r1) >= stop
    while (2 * deg(r1) >= stop) {
        // (quot, rem) = divmod(r0, r1); rem built in place inside r0
        quot.assign(r0.size() - r1.size() + 1, 0);
        const std::uint32_t lead_inv = fld.inv(r1.back());
        for (std::size_t i = r0.size(); i-- >= r1.size();) {
            if (r0[i] == 0) {
                if (i == 0) break;
                continue;
            }
            std::uint32_t factor = fld.mul(r0[i], lead_inv);
            std::size_t shift = i - (r1.size() - 1);
            quot[shift] = factor;
            for (std::size_t j = 0; j < r1.size(); ++j)
                r0[shift + j] = fld.sub(r0[shift + j], fld.mul(factor, r1[j]));
            if (i == 0) break;
        }
        trim(r0);
        std::swap(r0, r1);  // r0 <- old r1, r1 <- remainder

        // tmp = v0 - quot * v1
        tmp.assign(std::max(v0.size(), quot.size() + v1.size() - 1), 0);
        for (std::size_t i = 0; i < v0.size(); ++i) tmp[i] = v0[i];
        for (std::size_t i = 0; i < quot.size(); ++i) {
            if (quot[i] == 0) continue;
            for (std::size_t j = 0; j < v1.size(); ++j)
                tmp[i + j] = fld.sub(tmp[i + j], fld.mul(quot[i], v1[j]));
        }
        trim(tmp);
        std::swap(v0, v1);
        std::swap(v1, tmp);
    }

    if (v1.empty()) return false;

    // out = r1 / v1, exactly
    if (r1.empty()) {
        out.clear();
        return true;
    }
    if (deg(r1) < deg(v1)) return false;
    out.assign(r1.size() - v1.size() + 1, 0);
    tmp = r1;
    const std::uint32_t lead_inv = fld.inv(v1.back());
    for (std::size_t i = tmp.size(); i-- >= v1.size();) {
        if (tmp[i] != 0) {
            std::uint32_t factor = fld.mul(tmp[i], lead_inv);
            std::size_t shift = i - (v1.size() - 1);
            out[shift] = factor;
            for (std::size_t j = 0; j < v1.size(); ++j)
                tmp[shift + j] = fld.sub(tmp[shift + j], fld.mul(factor, v1[j]));
        }
        if (i == 0) break;
    }
    trim(tmp);
    if (!tmp.empty()) return false;  // division not exact
    trim(out);
    return deg(out) < static_cast<int>(dim);
}

}  // namespace detail

Polynomial rs_unique_decode(const FieldCodeword& y, std::uint32_t dim, const CodeParams& params) {
    if (y.field != params.field) throw std::invalid_argument("rs_unique_decode: field mismatch");
    if (y.size() != params.n) throw std::invalid_argument("rs_unique_decode: length mismatch");
    if (dim == 0 || dim > params.n) throw std::invalid_argument("rs_unique_decode: bad dimension");
    const Field& fld = *params.field;

    detail::GaoScratch ws;
    std::vector<std::uint32_t> node = detail::node_polynomial(fld, params.alphas);
    std::vector<std::uint32_t> out;
    bool ok = detail::gao_core(fld, params.alphas, y.symbols, node, dim, ws, out);
    if (!ok) throw decoding_failure("rs_unique_decode: no codeword within radius");

    Polynomial g(fld, out);
    const std::size_t radius = (params.n - dim) / 2;
    std::size_t dist = 0;
    for (std::size_t i = 0; i < params.n; ++i)
        if (g.eval(params.alphas[i]) != y.symbols[i]) ++dist;
    if (dist > radius) throw decoding_failure("rs_unique_decode: no codeword within radius");
    return g;
}

Polynomial grs_unique_decode(const FieldCodeword& y, const CodeParams& params, std::uint32_t dim) {
    if (y.field != params.field) throw std::invalid_argument("grs_unique_decode: field mismatch");
    if (dim == 0) dim = params.k;
    const Field& fld = *params.field;
    FieldCodeword scaled = y;
    for (std::size_t i = 0; i < scaled.size(); ++i)
        scaled.symbols[i] = fld.mul(scaled.symbols[i], fld.inv(params.multiplier(i)));
    return rs_unique_decode(scaled, dim, params);
}

DecodeResult cp_decode(const ComplexWord& m_prime, const CodeParams& params, CpPreprocess mode) {
    if (!params.field->is_prime()) throw std::invalid_argument("cp_decode: q must be prime");
    if (m_prime.size() != params.n) throw std::invalid_argument("cp_decode: length mismatch");
    const Field& fld = *params.field;

    FieldCodeword y;
    y.field = &fld;
    y.symbols.resize(params.n);
    Polynomial f = Polynomial::zero(fld);
    if (mode == CpPreprocess::grs_scaled) {
        for (std::size_t i = 0; i < params.n; ++i)
            y.symbols[i] = fld.mul(fld.inv(params.alpha(i)), phi(m_prime.coords[i], params.q));
        Polynomial g = rs_unique_decode(y, params.k, params);
        f = g.shifted_up(1);
    } else {
        for (std::size_t i = 0; i < params.n; ++i) y.symbols[i] = phi(m_prime.coords[i], params.q);
        f = rs_unique_decode(y, params.k + 1, params);
        if (!space_membership(f, MessageSpace::Fp, params))
            throw decoding_failure("cp_decode: nearest codeword not a CP codeword");
    }

    ComplexWord re = cp_encode(f, params);
    std::size_t dist = 0;
    for (std::size_t i = 0; i < params.n; ++i)
        if (std::abs(re.coords[i] - m_prime.coords[i]) > 1e-9) ++dist;
    return DecodeResult{std::move(f), dist};
}

}  // namespace cpcodes
