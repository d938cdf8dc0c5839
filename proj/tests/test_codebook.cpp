#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <set>

#include "cpcodes/serialize.hpp"

using namespace cpcodes;

namespace {

Polynomial make_poly(const Field& f, std::vector<std::uint32_t> c) {
    return Polynomial(f, std::move(c));
}

// CodeParams with k possibly outside CodeParams::make's range (k = 0 cases).
CodeParams raw_params(std::uint32_t q, std::uint32_t k) {
    const Field& f = Field::get(q);
    CodeParams cp;
    cp.field = &f;
    cp.q = q;
    cp.p = f.p();
    cp.n = q - 1;
    cp.k = k;
    for (std::uint32_t x = 1; x < q; ++x) cp.alphas.push_back(x);
    cp.chi = std::make_shared<Character>(f);
    return cp;
}

}  // namespace

TEST_CASE("character law holds exhaustively for q <= 49") {
    for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 49u}) {
        const Field& f = Field::get(q);
        Character chi(f);
        CAPTURE(q);
        bool nontrivial = false;
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(std::abs(std::abs(chi(a)) - 1.0) < 1e-12);
            if (std::abs(chi(a) - std::complex<double>(1.0, 0.0)) > 1e-12) nontrivial = true;
            for (std::uint32_t b = 0; b < q; ++b)
                CHECK(std::abs(chi(f.add(a, b)) - chi(a) * chi(b)) < 1e-12);
        }
        CHECK(nontrivial);
    }
}

TEST_CASE("space membership") {
    CodeParams p7 = CodeParams::make(7, 3);
    const Field& f7 = *p7.field;
    CHECK(space_membership(make_poly(f7, {0, 0, 1}), MessageSpace::Fp, p7));        // X^2
    CHECK_FALSE(space_membership(make_poly(f7, {1, 1}), MessageSpace::Fp, p7));     // 1 + X
    CHECK(space_membership(make_poly(f7, {0, 1, 1, 1}), MessageSpace::Fp, p7));     // deg 3, f0 = 0
    CHECK_FALSE(space_membership(make_poly(f7, {0, 0, 0, 0, 1}), MessageSpace::F, p7));  // deg 4 > k

    CodeParams p4 = CodeParams::make(4, 3);
    const Field& f4 = *p4.field;
    // p = 2: indices 0 and 2 are constrained, so X^2 is not in Fp(3, 4)
    CHECK_FALSE(space_membership(make_poly(f4, {0, 0, 1}), MessageSpace::Fp, p4));
    CHECK(space_membership(make_poly(f4, {0, 1, 0, 1}), MessageSpace::Fp, p4));  // X + X^3

    // FpPrime: g with X*g in Fp
    CHECK(space_membership(make_poly(f7, {1, 1, 1}), MessageSpace::FpPrime, p7));
    CHECK_FALSE(space_membership(make_poly(f7, {1, 1, 1, 1}), MessageSpace::FpPrime, p7));  // deg k
    CHECK(space_membership(make_poly(f4, {1, 0, 1}), MessageSpace::FpPrime, p4));   // X*g = X + X^3
    CHECK_FALSE(space_membership(make_poly(f4, {0, 1}), MessageSpace::FpPrime, p4));  // X*g = X^2

    CHECK_THROWS_AS(space_membership(make_poly(Field::get(5), {1}), MessageSpace::F, p7),
                    std::invalid_argument);
}

TEST_CASE("space projection") {
    CodeParams p7 = CodeParams::make(7, 3);
    const Field& f7 = *p7.field;
    CHECK(space_project(make_poly(f7, {3, 2}), p7) == make_poly(f7, {0, 2}));

    CodeParams p4 = CodeParams::make(4, 3);
    const Field& f4 = *p4.field;
    CHECK(space_project(make_poly(f4, {1, 1, 1, 1}), p4) == make_poly(f4, {0, 1, 0, 1}));

    CHECK_THROWS_AS(space_project(make_poly(f7, {0, 0, 0, 0, 1}), p7), std::invalid_argument);

    // idempotence, and the image is exactly the membership set
    for_each_message(MessageSpace::F, p7, [&](const Polynomial& f) {
        Polynomial once = space_project(f, p7);
        CHECK(space_project(once, p7) == once);
        CHECK(space_membership(once, MessageSpace::Fp, p7));
    });
    std::uint64_t members = 0;
    for_each_message(MessageSpace::F, p7, [&](const Polynomial& f) {
        if (space_membership(f, MessageSpace::Fp, p7)) ++members;
    });
    CHECK(BigInt(members) == space_size(MessageSpace::Fp, p7));
}

TEST_CASE("space sizes") {
    CHECK(space_size(MessageSpace::Fp, CodeParams::make(7, 3)) == 343);
    CHECK(space_size(MessageSpace::Fp, CodeParams::make(4, 3)) == 16);
    CHECK(space_size(MessageSpace::Fp, raw_params(7, 0)) == 1);  // only the zero polynomial
    CHECK(space_size(MessageSpace::F, CodeParams::make(7, 3)) == 2401);
    CHECK(space_size(MessageSpace::FpPrime, CodeParams::make(7, 3)) == 343);
}

TEST_CASE("space enumeration matches the counting formula") {
    for (std::uint32_t q : {4u, 7u, 8u, 9u}) {
        std::uint32_t n = q - 1;
        for (std::uint32_t k = 1; k <= std::min(4u, n); ++k) {
            CodeParams params = CodeParams::make(q, k);
            CAPTURE(q);
            CAPTURE(k);
            std::uint64_t count = 0;
            std::set<std::vector<std::uint32_t>> seen;
            for_each_message(MessageSpace::Fp, params, [&](const Polynomial& f) {
                ++count;
                seen.insert(f.coeffs());
                CHECK(space_membership(f, MessageSpace::Fp, params));
            });
            CHECK(BigInt(count) == space_size(MessageSpace::Fp, params));
            CHECK(seen.size() == count);  // no duplicates
        }
    }
}

TEST_CASE("rs encoding") {
    CodeParams params = CodeParams::make(7, 2);
    const Field& f = *params.field;
    CHECK(rs_encode(make_poly(f, {0, 2}), params).symbols ==
          std::vector<std::uint32_t>{2, 4, 6, 1, 3, 5});
    CHECK(rs_encode(Polynomial::constant(f, 5), params).symbols ==
          std::vector<std::uint32_t>{5, 5, 5, 5, 5, 5});
    CHECK(rs_encode(Polynomial::zero(f), params).symbols ==
          std::vector<std::uint32_t>{0, 0, 0, 0, 0, 0});
    CHECK_THROWS_AS(rs_encode(make_poly(f, {0, 0, 1}), params), std::invalid_argument);
    CHECK(rs_encode(make_poly(f, {0, 0, 1}), params, 3).symbols ==
          std::vector<std::uint32_t>{1, 4, 2, 2, 4, 1});
}

TEST_CASE("grs encoding") {
    CodeParams params = CodeParams::make(7, 2);
    const Field& f = *params.field;
    CHECK(grs_encode(Polynomial::constant(f, 1), params).symbols ==
          std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6});
    CHECK(grs_encode(Polynomial::zero(f), params).symbols ==
          std::vector<std::uint32_t>{0, 0, 0, 0, 0, 0});
    CHECK(grs_encode(make_poly(f, {0, 1}), params).symbols ==
          std::vector<std::uint32_t>{1, 4, 2, 2, 4, 1});
}

TEST_CASE("cp encoding") {
    CodeParams params = CodeParams::make(7, 3);
    const Field& f = *params.field;
    ComplexWord all_ones = cp_encode(Polynomial::zero(f), params);
    for (const auto& z : all_ones.coords) CHECK(std::abs(z - std::complex<double>(1, 0)) < 1e-12);

    const std::complex<double> omega = std::polar(1.0, 2.0 * M_PI / 7.0);
    ComplexWord w = cp_encode(make_poly(f, {0, 1}), params);
    for (std::size_t i = 0; i < 6; ++i) CHECK(std::abs(w.coords[i] - std::pow(omega, i + 1.0)) < 1e-9);

    CHECK_THROWS_AS(cp_encode(Polynomial::constant(f, 1), params), std::invalid_argument);
}

TEST_CASE("character point values") {
    CodeParams params = CodeParams::make(7, 2);
    CHECK(std::abs(character_eval(params, 0) - std::complex<double>(1, 0)) < 1e-12);
    CHECK(std::abs(character_eval(params, 3) - std::complex<double>(-0.9010, 0.4339)) < 1e-4);
    CHECK(std::abs(character_eval(params, 3) * character_eval(params, 4) -
                   std::complex<double>(1, 0)) < 1e-12);
}

TEST_CASE("cp equals the character image of the grs encoding") {
    for (std::uint32_t k : {1u, 2u, 3u}) {
        CodeParams params = CodeParams::make(7, k);
        for_each_message(MessageSpace::Fp, params, [&](const Polynomial& f) {
            ComplexWord cp = cp_encode(f, params);
            FieldCodeword grs = grs_encode(f.divided_by_x(), params);
            for (std::size_t i = 0; i < params.n; ++i)
                CHECK(std::abs(cp.coords[i] - character_eval(params, grs.symbols[i])) < 1e-12);
        });
    }
}

TEST_CASE("all cp codeword coordinates are unit modulus") {
    CodeParams params = CodeParams::make(9, 3);
    for_each_message(MessageSpace::Fp, params, [&](const Polynomial& f) {
        for (const auto& z : cp_encode(f, params).coords)
            CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
    });
}

TEST_CASE("every non-trivial character yields the same codebook") {
    CodeParams params = CodeParams::make(5, 2);
    const Field& f = *params.field;
    auto codebook_for = [&](std::uint32_t beta) {
        std::vector<std::vector<std::complex<double>>> words;
        Character chi(f, beta);
        for_each_message(MessageSpace::Fp, params, [&](const Polynomial& g) {
            std::vector<std::complex<double>> w;
            for (std::size_t i = 0; i < params.n; ++i) w.push_back(chi(g.eval(params.alphas[i])));
            words.push_back(std::move(w));
        });
        return words;
    };
    auto same_word = [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (std::abs(a[i] - b[i]) > 1e-9) return false;
        return true;
    };
    auto base = codebook_for(1);
    for (std::uint32_t beta = 2; beta < 5; ++beta) {
        auto other = codebook_for(beta);
        for (const auto& w : other) {
            bool found = false;
            for (const auto& v : base)
                if (same_word(w, v)) {
                    found = true;
                    break;
                }
            CHECK(found);
        }
    }
}

TEST_CASE("primitive root ordering is a permutation of the nonzero elements") {
    CodeParams params = CodeParams::make(7, 2, Ordering::primitive_root);
    std::set<std::uint32_t> seen(params.alphas.begin(), params.alphas.end());
    CHECK(seen.size() == 6);
    CHECK(*seen.begin() == 1);
    CHECK(params.alphas[0] == 1);  // g^0
}

TEST_CASE("json round trips") {
    CodeParams params = CodeParams::make(7, 3);
    const Field& f = *params.field;
    Polynomial msg = make_poly(f, {0, 3, 0, 5});
    ComplexWord w = cp_encode(msg, params);
    nlohmann::json j = to_json(w);
    ComplexWord back = complex_word_from_json(j);
    REQUIRE(back.size() == w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(back.coords[i].real() == w.coords[i].real());  // exact IEEE round trip
        CHECK(back.coords[i].imag() == w.coords[i].imag());
    }

    FieldCodeword fw = grs_encode(make_poly(f, {2, 3}), params);
    FieldCodeword fback = field_word_from_json(to_json(fw), f);
    CHECK(fback.symbols == fw.symbols);
}
