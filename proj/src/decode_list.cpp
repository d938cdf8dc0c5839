#include "cpcodes/decode_list.hpp"

#include <algorithm>

#include "cpcodes/util.hpp"

namespace cpcodes {

GsParams gs_params(std::uint32_t n, std::uint32_t k, std::uint32_t s) {
    if (n < 2 || k < 2 || k > n || s < 1) throw std::invalid_argument("gs_params: need n >= 2, 2 <= k <= n, s >= 1");
    GsParams g;
    g.s = s;
    g.c = isqrt(static_cast<std::uint64_t>(k - 1) * n * s * (s + 1));
    g.tau = static_cast<std::int64_t>(g.c / s) + 1;
    g.t = static_cast<std::int64_t>(n) - g.tau;
    g.ell = g.c / (k - 1);
    return g;
}

SZero s_zero(std::uint32_t n, std::uint32_t k) {
    if (n < 2 || k < 2 || k > n) throw std::invalid_argument("s_zero: need 2 <= k <= n");
    SZero r;
    r.t_inf = static_cast<std::int64_t>(n) - 1 -
              static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(k - 1) * n));
    for (std::uint32_t s = 1;; ++s) {
        if (gs_params(n, k, s).t == r.t_inf) {
            r.s0 = s;
            return r;
        }
        if (s > 10'000'000) throw std::logic_error("s_zero: radius never reached the limit");
    }
}

namespace detail {

std::vector<std::pair<std::uint32_t, std::uint32_t>> gs_monomials(std::uint64_t c,
                                                                  std::uint32_t wy) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> ms;
    for (std::uint64_t j = 0; j * wy <= c; ++j)
        for (std::uint64_t i = 0; i + j * wy <= c; ++i)
            ms.emplace_back(static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j));
    return ms;
}

std::vector<std::uint32_t> hasse_row(
    const Field& fld, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& monomials,
    std::uint32_t a, std::uint32_t b, std::uint32_t r1, std::uint32_t r2) {
    // Powers of a and b up to the largest exponent needed.
    std::uint32_t imax = 0, jmax = 0;
    for (const auto& [i, j] : monomials) {
        imax = std::max(imax, i);
        jmax = std::max(jmax, j);
    }
    std::vector<std::uint32_t> apow(imax + 1), bpow(jmax + 1);
    apow[0] = 1;
    for (std::uint32_t i = 1; i <= imax; ++i) apow[i] = fld.mul(apow[i - 1], a);
    bpow[0] = 1;
    for (std::uint32_t j = 1; j <= jmax; ++j) bpow[j] = fld.mul(bpow[j - 1], b);

    std::vector<std::uint32_t> row(monomials.size(), 0);
    for (std::size_t m = 0; m < monomials.size(); ++m) {
        auto [i, j] = monomials[m];
        if (i < r1 || j < r2) continue;
        std::uint32_t v = fld.mul(fld.binom_mod_p(i, r1), fld.binom_mod_p(j, r2));
        v = fld.mul(v, apow[i - r1]);
        v = fld.mul(v, bpow[j - r2]);
        row[m] = v;
    }
    return row;
}

}  // namespace detail

BivariatePolynomial gs_interpolate(const Field& fld, const std::vector<InterpPoint>& points,
                                   std::uint32_t s, std::uint64_t c, std::uint32_t dim) {
    if (dim < 2) throw std::invalid_argument("gs_interpolate: dimension must be >= 2");
    const std::uint32_t wy = dim - 1;
    const auto monomials = detail::gs_monomials(c, wy);
    const std::size_t cols = monomials.size();

    std::vector<std::vector<std::uint32_t>> rows;
    rows.reserve(points.size() * s * (s + 1) / 2);
    for (const auto& [a, b] : points)
        for (std::uint32_t r1 = 0; r1 < s; ++r1)
            for (std::uint32_t r2 = 0; r1 + r2 < s; ++r2)
                rows.push_back(detail::hasse_row(fld, monomials, a, b, r1, r2));

    // Row-reduce; pivot columns in increasing order.
    std::vector<std::size_t> pivot_col_of_row;
    std::vector<bool> is_pivot_col(cols, false);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t sel = rank;
        while (sel < rows.size() && rows[sel][col] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[rank], rows[sel]);
        const std::uint32_t inv = fld.inv(rows[rank][col]);
        for (std::size_t j = col; j < cols; ++j) rows[rank][j] = fld.mul(rows[rank][j], inv);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            const std::uint32_t factor = rows[r][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[r][j] = fld.sub(rows[r][j], fld.mul(factor, rows[rank][j]));
        }
        pivot_col_of_row.push_back(col);
        is_pivot_col[col] = true;
        ++rank;
    }

    // Deterministic null-space vector: first free column set to 1, the
    // remaining free columns to 0, pivots by back-substitution.
    std::size_t free_col = cols;
    for (std::size_t col = 0; col < cols; ++col)
        if (!is_pivot_col[col]) {
            free_col = col;
            break;
        }
    if (free_col == cols) throw std::logic_error("gs_interpolate: constraint system has full rank");

    std::vector<std::uint32_t> solution(cols, 0);
    solution[free_col] = 1;
    for (std::size_t r = 0; r < rank; ++r)
        solution[pivot_col_of_row[r]] = fld.neg(rows[r][free_col]);

    std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> monos;
    for (std::size_t m = 0; m < cols; ++m)
        if (solution[m] != 0) monos.emplace_back(monomials[m].first, monomials[m].second, solution[m]);
    BivariatePolynomial q = BivariatePolynomial::from_monomials(fld, monos);
    if (q.is_zero()) throw std::logic_error("gs_interpolate: produced zero polynomial");
    return q;
}

namespace {

// Roth-Ruckenstein depth-first search for candidate coefficient paths.
void rr_search(BivariatePolynomial q, std::size_t level, std::size_t max_level,
               std::vector<std::uint32_t>& prefix, std::vector<std::vector<std::uint32_t>>& found,
               std::size_t& nodes) {
    if (++nodes > 1'000'000) throw std::logic_error("gs_factor: recursion budget exceeded");
    q.remove_x_content();
    if (q.is_zero()) return;
    Polynomial root_poly = q.at_x_zero();  // univariate in Y, nonzero after content removal
    if (root_poly.is_zero()) return;
    for (std::uint32_t gamma : root_poly.roots()) {
        prefix.push_back(gamma);
        if (level == max_level) {
            found.push_back(prefix);
        } else {
            rr_search(q.substitute_y_affine(gamma), level + 1, max_level, prefix, found, nodes);
        }
        prefix.pop_back();
    }
}

std::int64_t agreement(const Polynomial& g, const std::vector<InterpPoint>& points) {
    std::int64_t a = 0;
    for (const auto& [x, y] : points)
        if (g.eval(x) == y) ++a;
    return a;
}

void sort_list(std::vector<Polynomial>& list) {
    std::sort(list.begin(), list.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.coeffs() < b.coeffs(); });
}

}  // namespace

std::vector<Polynomial> gs_factor(const BivariatePolynomial& q, std::uint32_t dim,
                                  const std::vector<InterpPoint>& points, std::int64_t tau) {
    if (q.is_zero()) throw std::domain_error("gs_factor: zero polynomial");
    if (dim < 1) throw std::invalid_argument("gs_factor: bad dimension");
    const Field& fld = q.field();

    std::vector<std::vector<std::uint32_t>> paths;
    std::vector<std::uint32_t> prefix;
    std::size_t nodes = 0;
    rr_search(q, 0, dim - 1, prefix, paths, nodes);

    std::vector<Polynomial> out;
    for (auto& coeffs : paths) {
        Polynomial g(fld, coeffs);
        if (!q.compose_y(g).is_zero()) continue;  // (Y - g) must divide Q
        if (agreement(g, points) < tau) continue;
        if (std::find(out.begin(), out.end(), g) == out.end()) out.push_back(g);
    }
    sort_list(out);
    return out;
}

std::vector<Polynomial> gs_decode(const FieldCodeword& y, std::uint32_t s,
                                  const CodeParams& params, std::uint32_t dim) {
    if (y.field != params.field) throw std::invalid_argument("gs_decode: field mismatch");
    if (y.size() != params.n) throw std::invalid_argument("gs_decode: length mismatch");
    if (!params.field->is_prime()) throw std::invalid_argument("gs_decode: q must be prime");
    GsParams gp = gs_params(params.n, dim, s);
    std::vector<InterpPoint> points(params.n);
    for (std::size_t i = 0; i < params.n; ++i) points[i] = {params.alphas[i], y.symbols[i]};
    BivariatePolynomial q = gs_interpolate(*params.field, points, s, gp.c, dim);
    return gs_factor(q, dim, points, gp.tau);
}

std::vector<Polynomial> cp_list_decode(const ComplexWord& m_prime, std::uint32_t s,
                                       const CodeParams& params) {
    if (!params.field->is_prime()) throw std::invalid_argument("cp_list_decode: q must be prime");
    if (m_prime.size() != params.n) throw std::invalid_argument("cp_list_decode: length mismatch");
    const Field& fld = *params.field;
    FieldCodeword y;
    y.field = &fld;
    y.symbols.resize(params.n);
    for (std::size_t i = 0; i < params.n; ++i)
        y.symbols[i] = fld.mul(fld.inv(params.alpha(i)), phi(m_prime.coords[i], params.q));
    std::vector<Polynomial> inner = gs_decode(y, s, params, params.k);
    std::vector<Polynomial> out;
    for (const Polynomial& g : inner) {
        Polynomial f = g.shifted_up(1);
        if (space_membership(f, MessageSpace::Fp, params)) out.push_back(std::move(f));
    }
    sort_list(out);
    return out;
}

std::vector<Polynomial> bd_list_decode(const FieldCodeword& y, std::int64_t t,
                                       const CodeParams& params, std::uint32_t dim) {
    if (y.field != params.field) throw std::invalid_argument("bd_list_decode: field mismatch");
    if (y.size() != params.n) throw std::invalid_argument("bd_list_decode: length mismatch");
    if (dim < 1 || dim > params.n) throw std::invalid_argument("bd_list_decode: bad dimension");
    std::vector<Polynomial> out;
    if (t < 0) return out;
    const Field& fld = *params.field;
    const std::uint32_t n = params.n;
    const std::int64_t d = static_cast<std::int64_t>(n) - dim + 1;
    const std::int64_t e_signed = std::max<std::int64_t>(0, 2 * t - d + 1);
    if (e_signed > static_cast<std::int64_t>(n - dim))
        throw std::invalid_argument("bd_list_decode: radius too large for the covering decoder");
    const std::size_t e = static_cast<std::size_t>(e_signed);

    const std::vector<std::uint32_t> full_node = detail::node_polynomial(fld, params.alphas);
    detail::GaoScratch ws;
    std::vector<std::uint32_t> xs, ys, node, out_coeffs;
    xs.reserve(n);
    ys.reserve(n);
    node.reserve(n + 1);

    // Iterate over all erasure subsets of size e (positions strictly increasing).
    std::vector<std::size_t> subset(e);
    for (std::size_t i = 0; i < e; ++i) subset[i] = i;
    while (true) {
        xs.clear();
        ys.clear();
        std::size_t si = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (si < e && subset[si] == i) {
                ++si;
                continue;
            }
            xs.push_back(params.alphas[i]);
            ys.push_back(y.symbols[i]);
        }
        // node = full_node with the erased linear factors divided out
        node = full_node;
        for (std::size_t i = 0; i < e; ++i) {
            const std::uint32_t a = params.alphas[subset[i]];
            // synthetic division by (X - a); remainder is zero by construction
            std::uint32_t carry = 0;
            for (std::size_t j = node.size(); j-- > 0;) {
                std::uint32_t cur = node[j];
                node[j] = carry;
                carry = fld.add(cur, fld.mul(a, carry));
            }
            node.pop_back();  // quotient occupies the low indices
        }

        if (detail::gao_core(fld, xs, ys, node, dim, ws, out_coeffs)) {
            Polynomial g(fld, out_coeffs);
            std::int64_t dist = 0;
            for (std::size_t i = 0; i < n; ++i)
                if (g.eval(params.alphas[i]) != y.symbols[i]) ++dist;
            if (dist <= t && std::find(out.begin(), out.end(), g) == out.end())
                out.push_back(std::move(g));
        }

        if (e == 0) break;
        // next combination
        std::size_t pos = e;
        while (pos > 0) {
            --pos;
            if (subset[pos] != n - e + pos) break;
            if (pos == 0) {
                pos = e;
                break;
            }
        }
        if (pos == e) break;
        ++subset[pos];
        for (std::size_t i = pos + 1; i < e; ++i) subset[i] = subset[i - 1] + 1;
    }

    sort_list(out);
    return out;
}

std::vector<Polynomial> cp_bd_list_decode(const ComplexWord& m_prime, std::int64_t t,
                                          const CodeParams& params) {
    if (!params.field->is_prime()) throw std::invalid_argument("cp_bd_list_decode: q must be prime");
    if (m_prime.size() != params.n) throw std::invalid_argument("cp_bd_list_decode: length mismatch");
    const Field& fld = *params.field;
    FieldCodeword y;
    y.field = &fld;
    y.symbols.resize(params.n);
    for (std::size_t i = 0; i < params.n; ++i)
        y.symbols[i] = fld.mul(fld.inv(params.alpha(i)), phi(m_prime.coords[i], params.q));
    std::vector<Polynomial> inner = bd_list_decode(y, t, params, params.k);
    std::vector<Polynomial> out;
    for (const Polynomial& g : inner) {
        Polynomial f = g.shifted_up(1);
        if (space_membership(f, MessageSpace::Fp, params)) out.push_back(std::move(f));
    }
    sort_list(out);
    return out;
}

}  // namespace cpcodes
