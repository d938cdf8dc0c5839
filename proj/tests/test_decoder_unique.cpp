#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <optional>
#include <random>

#include "cpcodes/analysis.hpp"
#include "cpcodes/channel.hpp"
#include "cpcodes/decode_unique.hpp"

using namespace cpcodes;

namespace {

const std::vector<std::uint32_t> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47};

// All codewords of the dimension-dim RS code, with their messages.
std::vector<std::pair<Polynomial, FieldCodeword>> all_codewords(const CodeParams& params,
                                                                std::uint32_t dim) {
    std::vector<std::pair<Polynomial, FieldCodeword>> out;
    const Field& f = *params.field;
    std::vector<std::uint32_t> coeffs(dim, 0);
    while (true) {
        Polynomial g(f, coeffs);
        out.emplace_back(g, rs_encode(g, params, dim));
        std::size_t pos = 0;
        while (pos < dim && ++coeffs[pos] == params.q) coeffs[pos++] = 0;
        if (pos == dim) break;
    }
    return out;
}

std::optional<Polynomial> nearest_within(const std::vector<std::pair<Polynomial, FieldCodeword>>& book,
                                         const FieldCodeword& y, std::size_t radius) {
    std::optional<Polynomial> best;
    std::size_t best_d = radius + 1;
    for (const auto& [g, c] : book) {
        std::size_t d = hamming_distance(c, y);
        if (d < best_d) {
            best_d = d;
            best = g;
        }
    }
    return best;
}

}  // namespace

TEST_CASE("hard decision map") {
    CHECK(phi({1.0, 0.0}, 7) == 0);
    CodeParams params = CodeParams::make(7, 2);
    // a small phase wobble stays inside the sector
    std::complex<double> z = character_eval(params, 3) * std::polar(1.0, 0.1);
    CHECK(phi(z, 7) == 3);
    // the exact tie at arg = pi rounds toward the larger sector index
    CHECK(phi(std::complex<double>(-1.0, 0.0), 7) == 4);
    CHECK_THROWS_AS(phi({0.0, 0.0}, 7), std::domain_error);
}

TEST_CASE("phi inverts the character on every prime field") {
    for (std::uint32_t q : kPrimes) {
        const Field& f = Field::get(q);
        Character chi(f);
        for (std::uint32_t x = 0; x < q; ++x) CHECK(phi(chi(x), q) == x);
    }
    // extension fields: the character sees only the trace
    for (std::uint32_t q : {4u, 9u, 16u, 25u, 49u}) {
        const Field& f = Field::get(q);
        Character chi(f);
        for (std::uint32_t x = 0; x < q; ++x) CHECK(phi(chi(x), f.p()) == f.trace(x));
    }
}

TEST_CASE("phi sector robustness") {
    for (std::uint32_t q : kPrimes) {
        const Field& f = Field::get(q);
        Character chi(f);
        const double margin = std::numbers::pi / q - 1e-6;
        for (std::uint32_t x = 0; x < q; ++x) {
            for (double delta : {margin, -margin, margin / 2, -margin / 2, 1e-9, -1e-9}) {
                CHECK(phi(chi(x) * std::polar(1.0, delta), q) == x);
            }
        }
    }
}

TEST_CASE("rs unique decoding") {
    CodeParams params = CodeParams::make(7, 2);
    const Field& f = *params.field;

    Polynomial g(f, {0, 2});  // 2X
    FieldCodeword clean = rs_encode(g, params, 2);
    CHECK(rs_unique_decode(clean, 2, params) == g);

    // two corruptions of (2,4,6,1,3,5)
    FieldCodeword y{&f, {0, 0, 6, 1, 3, 5}};
    CHECK(rs_unique_decode(y, 2, params) == g);

    // all-zero word decodes to the zero message
    FieldCodeword zeros{&f, std::vector<std::uint32_t>(6, 0)};
    CHECK(rs_unique_decode(zeros, 2, params).is_zero());
}

TEST_CASE("rs unique decoding fails outside every ball") {
    CodeParams params = CodeParams::make(7, 2);
    const Field& f = *params.field;
    auto book = all_codewords(params, 2);
    // search for a word with distance >= 3 from every codeword
    FieldCodeword probe{&f, std::vector<std::uint32_t>(6, 0)};
    bool found = false;
    for (std::uint64_t enc = 0; enc < 117649 && !found; ++enc) {
        std::uint64_t v = enc;
        for (std::size_t i = 0; i < 6; ++i) {
            probe.symbols[i] = static_cast<std::uint32_t>(v % 7);
            v /= 7;
        }
        std::size_t dmin = 6;
        for (const auto& [msg, c] : book) dmin = std::min(dmin, hamming_distance(c, probe));
        if (dmin >= 3) found = true;
    }
    REQUIRE(found);
    CHECK_THROWS_AS(rs_unique_decode(probe, 2, params), decoding_failure);
}

TEST_CASE("decoder agrees with exhaustive nearest codeword search") {
    std::mt19937_64 rng(515151);
    for (std::uint32_t dim : {2u, 3u}) {
        CodeParams params = CodeParams::make(7, dim);
        const Field& f = *params.field;
        auto book = all_codewords(params, dim);
        const std::size_t radius = (params.n - dim) / 2;
        std::uniform_int_distribution<std::uint32_t> sym(0, 6);
        for (int iter = 0; iter < 500; ++iter) {
            FieldCodeword y{&f, {}};
            y.symbols.resize(params.n);
            for (auto& s : y.symbols) s = sym(rng);
            auto oracle = nearest_within(book, y, radius);
            if (oracle) {
                CHECK(rs_unique_decode(y, dim, params) == *oracle);
            } else {
                CHECK_THROWS_AS(rs_unique_decode(y, dim, params), decoding_failure);
            }
        }
    }
}

TEST_CASE("grs unique decoding") {
    CodeParams params = CodeParams::make(7, 2);
    const Field& f = *params.field;
    Polynomial g(f, {3, 4});
    FieldCodeword clean = grs_encode(g, params);
    CHECK(grs_unique_decode(clean, params) == g);

    FieldCodeword zeros{&f, std::vector<std::uint32_t>(6, 0)};
    CHECK(grs_unique_decode(zeros, params).is_zero());

    // every pattern of weight <= floor((d-1)/2) = 2 on a sample of messages
    std::mt19937_64 rng(2222);
    std::uniform_int_distribution<std::uint32_t> sym(0, 6);
    for (int m = 0; m < 10; ++m) {
        Polynomial msg(f, {sym(rng), sym(rng)});
        FieldCodeword c = grs_encode(msg, params);
        for (std::size_t i = 0; i < params.n; ++i)
            for (std::uint32_t e = 1; e < 7; ++e) {
                FieldCodeword y = c;
                y.symbols[i] = (y.symbols[i] + e) % 7;
                CHECK(grs_unique_decode(y, params) == msg);
            }
        for (std::size_t i = 0; i < params.n; ++i)
            for (std::size_t j = i + 1; j < params.n; ++j) {
                FieldCodeword y = c;
                y.symbols[i] = (y.symbols[i] + 1) % 7;
                y.symbols[j] = (y.symbols[j] + 3) % 7;
                CHECK(grs_unique_decode(y, params) == msg);
            }
    }
}

TEST_CASE("cp decoding") {
    CodeParams params = CodeParams::make(7, 3);
    const Field& f = *params.field;
    Polynomial msg(f, {0, 5, 0, 2});  // in Fp(3, 7)
    ComplexWord clean = cp_encode(msg, params);

    DecodeResult r = cp_decode(clean, params);
    CHECK(r.message == msg);
    CHECK(r.corrected_errors == 0);

    // single complex-domain error (d = 4 corrects one)
    std::mt19937_64 rng(5);
    auto [noisy, pat] = inject_complex_errors(clean, params, 1, rng);
    DecodeResult r1 = cp_decode(noisy, params);
    CHECK(r1.message == msg);
    CHECK(r1.corrected_errors == 1);

    // the plain preprocessing mode agrees on clean words
    DecodeResult rp = cp_decode(clean, params, CpPreprocess::plain_rs);
    CHECK(rp.message == msg);

    CodeParams p11 = CodeParams::make(11, 2);
    CHECK_THROWS_AS(cp_decode(clean, p11), std::invalid_argument);  // length mismatch
}

TEST_CASE("cp decoding corrects every pattern within half distance (q=7, k=2)") {
    CodeParams params = CodeParams::make(7, 2);
    const Field& f = *params.field;
    // d = 5: every weight <= 2 pattern on a message sample
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<std::uint32_t> sym(0, 6);
    for (int m = 0; m < 5; ++m) {
        Polynomial msg(f, {0, sym(rng), sym(rng)});
        if (!space_membership(msg, MessageSpace::Fp, params)) continue;
        ComplexWord clean = cp_encode(msg, params);
        for (std::size_t i = 0; i < params.n; ++i)
            for (std::uint32_t e1 = 1; e1 < 7; ++e1) {
                ComplexWord y = clean;
                y.coords[i] = character_eval(params, (phi(y.coords[i], 7) + e1) % 7);
                CHECK(cp_decode(y, params).message == msg);
            }
    }
}
