#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cpcodes/channel.hpp"
#include "cpcodes/decode_list.hpp"
#include "cpcodes/util.hpp"

using namespace cpcodes;

namespace {

// Brute-force list oracle: all messages of degree < dim whose RS codewords
// lie within distance t of y.
std::vector<Polynomial> oracle_list(const FieldCodeword& y, std::int64_t t,
                                    const CodeParams& params, std::uint32_t dim) {
    std::vector<Polynomial> out;
    const Field& f = *params.field;
    std::vector<std::uint32_t> coeffs(dim, 0);
    while (true) {
        Polynomial g(f, coeffs);
        std::int64_t d = 0;
        for (std::size_t i = 0; i < params.n; ++i)
            if (g.eval(params.alphas[i]) != y.symbols[i]) ++d;
        if (d <= t) out.push_back(g);
        std::size_t pos = 0;
        while (pos < dim && ++coeffs[pos] == params.q) coeffs[pos++] = 0;
        if (pos == dim) break;
    }
    std::sort(out.begin(), out.end(),
              [](const Polynomial& a, const Polynomial& b) { return a.coeffs() < b.coeffs(); });
    return out;
}

FieldCodeword random_word(const CodeParams& params, std::mt19937_64& rng) {
    FieldCodeword y{params.field, {}};
    y.symbols.resize(params.n);
    std::uniform_int_distribution<std::uint32_t> sym(0, params.q - 1);
    for (auto& s : y.symbols) s = sym(rng);
    return y;
}

}  // namespace

TEST_CASE("gs parameter arithmetic") {
    GsParams a = gs_params(6, 2, 1);
    CHECK(a.c == 3);
    CHECK(a.tau == 4);
    CHECK(a.t == 2);

    GsParams b = gs_params(6, 2, 5);
    CHECK(b.c == 13);
    CHECK(b.tau == 3);
    CHECK(b.t == 3);

    CHECK(s_zero(6, 2).t_inf == 3);
    CHECK(s_zero(6, 2).s0 == 3);
    CHECK(s_zero(4, 2).s0 == 1);  // t_1 already equals t_inf
    CHECK(s_zero(12, 5).t_inf == 5);

    CHECK_THROWS_AS(gs_params(6, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(gs_params(6, 7, 1), std::invalid_argument);
    CHECK_THROWS_AS(gs_params(6, 2, 0), std::invalid_argument);
}

namespace {

// floor(sqrt((k-1) n (1 + 1/s))) in exact integer arithmetic: the largest r
// with r^2 * s <= (k-1) * n * (s + 1). An independent route to the radius.
std::int64_t closed_form_radius(std::uint32_t n, std::uint32_t k, std::uint32_t s) {
    const std::uint64_t b = static_cast<std::uint64_t>(k - 1) * n * (s + 1);
    std::uint64_t r = isqrt(b / s);
    while ((r + 1) * (r + 1) * s <= b) ++r;
    while (r > 0 && r * r * s > b) --r;
    return static_cast<std::int64_t>(n) - 1 - static_cast<std::int64_t>(r);
}

}  // namespace

TEST_CASE("radius closed form, monotonicity and feasibility on a grid") {
    for (std::uint32_t n = 2; n <= 30; ++n)
        for (std::uint32_t k = 2; k <= n; ++k) {
            std::int64_t prev = std::numeric_limits<std::int64_t>::min();
            const std::int64_t t_inf = s_zero(n, k).t_inf;
            for (std::uint32_t s = 1; s <= 20; ++s) {
                GsParams g = gs_params(n, k, s);
                CHECK(g.t == closed_form_radius(n, k, s));
                CHECK(g.t >= prev);
                CHECK(g.t <= t_inf);
                prev = g.t;
                // GS feasibility: tau > sqrt((k-1) n)
                CHECK(static_cast<std::uint64_t>(g.tau) * static_cast<std::uint64_t>(g.tau) >
                      static_cast<std::uint64_t>(k - 1) * n);
            }
            CHECK(gs_params(n, k, s_zero(n, k).s0).t == t_inf);
        }
}

TEST_CASE("interpolation contract") {
    CodeParams params = CodeParams::make(7, 2);
    const Field& f = *params.field;
    Polynomial g(f, {3, 2});
    std::vector<InterpPoint> points;
    for (std::size_t i = 0; i < params.n; ++i)
        points.emplace_back(params.alphas[i], g.eval(params.alphas[i]));

    SUBCASE("multiplicity one") {
        GsParams gp = gs_params(6, 2, 1);
        BivariatePolynomial q = gs_interpolate(f, points, 1, gp.c, 2);
        CHECK_FALSE(q.is_zero());
        CHECK(q.weighted_degree(1, 1) <= static_cast<std::int64_t>(gp.c));
        for (const auto& [a, b] : points) CHECK(q.eval(a, b) == 0);
    }
    SUBCASE("multiplicity two") {
        GsParams gp = gs_params(6, 2, 2);
        BivariatePolynomial q = gs_interpolate(f, points, 2, gp.c, 2);
        CHECK_FALSE(q.is_zero());
        CHECK(q.weighted_degree(1, 1) <= static_cast<std::int64_t>(gp.c));
        for (const auto& [a, b] : points) CHECK(q.root_multiplicity(a, b) >= 2);
    }
    SUBCASE("deterministic output") {
        GsParams gp = gs_params(6, 2, 2);
        BivariatePolynomial q1 = gs_interpolate(f, points, 2, gp.c, 2);
        BivariatePolynomial q2 = gs_interpolate(f, points, 2, gp.c, 2);
        CHECK(q1 == q2);
    }
}

TEST_CASE("factorization step") {
    CodeParams params = CodeParams::make(7, 3);
    const Field& f = *params.field;
    Polynomial g1(f, {1, 2});
    Polynomial g2(f, {5, 0, 3});

    std::vector<InterpPoint> pts1;
    for (std::size_t i = 0; i < params.n; ++i)
        pts1.emplace_back(params.alphas[i], g1.eval(params.alphas[i]));

    // Q = Y - g1
    std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> ms{{0, 1, 1}};
    for (std::size_t j = 0; j < g1.coeffs().size(); ++j)
        if (g1.coeff(j) != 0) ms.emplace_back(j, 0, f.neg(g1.coeff(j)));
    BivariatePolynomial q1 = BivariatePolynomial::from_monomials(f, ms);
    auto l1 = gs_factor(q1, 3, pts1, 6);
    REQUIRE(l1.size() == 1);
    CHECK(l1[0] == g1);

    // Q = (Y - g1)(Y - g2): both agree with their own evaluations
    std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> m2{{0, 1, 1}};
    for (std::size_t j = 0; j < g2.coeffs().size(); ++j)
        if (g2.coeff(j) != 0) m2.emplace_back(j, 0, f.neg(g2.coeff(j)));
    BivariatePolynomial q2 = BivariatePolynomial::from_monomials(f, m2);
    // product via compose trick: build coefficient grid by multiplying columns
    // (small sizes; multiply (Y - g1) and (Y - g2) manually)
    // (Y - g1)(Y - g2) = Y^2 - (g1 + g2) Y + g1 g2
    Polynomial s = g1 + g2, p = g1 * g2;
    std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> m3{{0, 2, 1}};
    for (std::size_t j = 0; j < s.coeffs().size(); ++j)
        if (s.coeff(j) != 0) m3.emplace_back(j, 1, f.neg(s.coeff(j)));
    for (std::size_t j = 0; j < p.coeffs().size(); ++j)
        if (p.coeff(j) != 0) m3.emplace_back(j, 0, p.coeff(j));
    BivariatePolynomial prod = BivariatePolynomial::from_monomials(f, m3);

    // points: first three from g1, last three from g2 -> with tau = 3 both qualify
    std::vector<InterpPoint> mixed;
    for (std::size_t i = 0; i < 3; ++i)
        mixed.emplace_back(params.alphas[i], g1.eval(params.alphas[i]));
    for (std::size_t i = 3; i < 6; ++i)
        mixed.emplace_back(params.alphas[i], g2.eval(params.alphas[i]));
    auto both = gs_factor(prod, 3, mixed, 3);
    REQUIRE(both.size() == 2);
    CHECK(std::find(both.begin(), both.end(), g1) != both.end());
    CHECK(std::find(both.begin(), both.end(), g2) != both.end());

    // no factor meets an impossible agreement bound
    CHECK(gs_factor(q2, 3, pts1, 7).empty());

    CHECK_THROWS_AS(gs_factor(BivariatePolynomial(f), 3, pts1, 1), std::domain_error);
}

TEST_CASE("gs decoding equals the exhaustive oracle") {
    std::mt19937_64 rng(777);
    for (std::uint32_t q : {5u, 7u}) {
        for (std::uint32_t dim : {2u, 3u}) {
            CodeParams params = CodeParams::make(q, dim);
            for (std::uint32_t s : {1u, 2u, 3u}) {
                GsParams gp = gs_params(params.n, dim, s);
                for (int iter = 0; iter < 60; ++iter) {
                    FieldCodeword y = random_word(params, rng);
                    CAPTURE(q);
                    CAPTURE(dim);
                    CAPTURE(s);
                    auto got = gs_decode(y, s, params, dim);
                    auto want = oracle_list(y, gp.t, params, dim);
                    CHECK(got == want);
                    CHECK(got.size() <= gp.ell);
                }
            }
        }
    }
}

TEST_CASE("gs decoding pinned example") {
    CodeParams params = CodeParams::make(7, 2);
    const Field& f = *params.field;
    FieldCodeword y{&f, {0, 0, 6, 1, 3, 5}};
    auto list = gs_decode(y, 1, params, 2);
    REQUIRE(list.size() == 1);
    CHECK(list[0] == Polynomial(f, {0, 2}));

    FieldCodeword clean = rs_encode(Polynomial(f, {4, 3}), params, 2);
    auto l2 = gs_decode(clean, 1, params, 2);
    CHECK(std::find(l2.begin(), l2.end(), Polynomial(f, {4, 3})) != l2.end());
}

TEST_CASE("bounded distance covering decoder equals gs at matching radii") {
    std::mt19937_64 rng(50505);
    for (std::uint32_t q : {5u, 7u}) {
        for (std::uint32_t dim : {2u, 3u}) {
            CodeParams params = CodeParams::make(q, dim);
            for (std::uint32_t s : {1u, 2u, 3u}) {
                GsParams gp = gs_params(params.n, dim, s);
                for (int iter = 0; iter < 40; ++iter) {
                    FieldCodeword y = random_word(params, rng);
                    CHECK(bd_list_decode(y, gp.t, params, dim) == gs_decode(y, s, params, dim));
                }
            }
        }
    }
}

TEST_CASE("covering decoder equals the oracle at q = 13") {
    std::mt19937_64 rng(424242);
    CodeParams params = CodeParams::make(13, 5);
    const std::int64_t t_inf = s_zero(12, 5).t_inf;  // 5
    for (int iter = 0; iter < 4; ++iter) {
        // received word: codeword plus exactly t_inf errors
        std::uniform_int_distribution<std::uint32_t> sym(0, 12);
        Polynomial g(*params.field, {sym(rng), sym(rng), sym(rng), sym(rng), sym(rng)});
        FieldCodeword clean = rs_encode(g, params, 5);
        auto [y, pat] = inject_field_errors(clean, static_cast<std::size_t>(t_inf), rng);
        auto got = bd_list_decode(y, t_inf, params, 5);
        auto want = oracle_list(y, t_inf, params, 5);
        CHECK(got == want);
        CHECK(std::find(got.begin(), got.end(), g) != got.end());
    }
}

TEST_CASE("cp list decoding") {
    CodeParams params = CodeParams::make(7, 2);
    const Field& f = *params.field;
    Polynomial msg(f, {0, 3, 5});  // X * (3 + 5X)
    ComplexWord clean = cp_encode(msg, params);

    // noiseless: exactly the transmitted message
    auto l0 = cp_list_decode(clean, 1, params);
    REQUIRE(l0.size() == 1);
    CHECK(l0[0] == msg);

    // t_inf errors at s = s0 still contain the message
    SZero sz = s_zero(params.n, params.k);
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 20; ++iter) {
        auto [noisy, pat] =
            inject_complex_errors(clean, params, static_cast<std::size_t>(sz.t_inf), rng);
        auto list = cp_list_decode(noisy, sz.s0, params);
        CHECK(std::find(list.begin(), list.end(), msg) != list.end());
        // for prime q the membership filter removes nothing
        for (const Polynomial& fpoly : list)
            CHECK(space_membership(fpoly, MessageSpace::Fp, params));
        auto bd = cp_bd_list_decode(noisy, sz.t_inf, params);
        CHECK(bd == list);
    }
}

TEST_CASE("within half distance the list is the unique decoder output") {
    CodeParams params = CodeParams::make(7, 2);
    const Field& f = *params.field;
    std::mt19937_64 rng(13579);
    std::uniform_int_distribution<std::uint32_t> sym(0, 6);
    SZero sz = s_zero(params.n, params.k);
    for (int iter = 0; iter < 30; ++iter) {
        Polynomial msg(f, {0, sym(rng), sym(rng)});
        ComplexWord clean = cp_encode(msg, params);
        std::uniform_int_distribution<std::size_t> wdist(0, 2);  // < d/2 = 2.5
        auto [noisy, pat] = inject_complex_errors(clean, params, wdist(rng), rng);
        DecodeResult unique = cp_decode(noisy, params);
        auto list = cp_list_decode(noisy, sz.s0, params);
        CHECK(std::find(list.begin(), list.end(), unique.message) != list.end());
    }
}
