#include "cpcodes/channel.hpp"

#include <algorithm>
#include <cmath>

#include "cpcodes/decode_unique.hpp"

namespace cpcodes {

std::size_t hamming_distance(const FieldCodeword& a, const FieldCodeword& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    if (a.field != b.field) throw std::invalid_argument("hamming_distance: field mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.symbols[i] != b.symbols[i]) ++d;
    return d;
}

std::size_t hamming_distance(const ComplexWord& a, const ComplexWord& b) {
    if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a.coords[i] - b.coords[i]) > kComplexTol) ++d;
    return d;
}

namespace {

std::vector<std::size_t> draw_positions(std::size_t n, std::size_t w, std::mt19937_64& rng) {
    // Partial Fisher-Yates over the index vector.
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    for (std::size_t i = 0; i < w; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(idx[i], idx[pick(rng)]);
    }
    idx.resize(w);
    std::sort(idx.begin(), idx.end());
    return idx;
}

// Uniform over the q - 1 symbols different from avoid.
std::uint32_t draw_other_symbol(std::uint32_t q, std::uint32_t avoid, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::uint32_t> pick(0, q - 2);
    std::uint32_t s = pick(rng);
    return s >= avoid ? s + 1 : s;
}

}  // namespace

std::pair<FieldCodeword, ErrorPattern> inject_field_errors(const FieldCodeword& c, std::size_t w,
                                                           std::mt19937_64& rng) {
    if (w > c.size()) throw std::invalid_argument("inject_field_errors: weight exceeds length");
    FieldCodeword out = c;
    ErrorPattern pat;
    const std::uint32_t q = c.field->q();
    for (std::size_t pos : draw_positions(c.size(), w, rng)) {
        std::uint32_t repl = draw_other_symbol(q, c.symbols[pos], rng);
        out.symbols[pos] = repl;
        pat.entries.emplace_back(pos, repl);
    }
    return {std::move(out), std::move(pat)};
}

std::pair<ComplexWord, ErrorPattern> inject_complex_errors(const ComplexWord& c,
                                                           const CodeParams& params, std::size_t w,
                                                           std::mt19937_64& rng) {
    if (w > c.size()) throw std::invalid_argument("inject_complex_errors: weight exceeds length");
    ComplexWord out = c;
    ErrorPattern pat;
    for (std::size_t pos : draw_positions(c.size(), w, rng)) {
        std::uint32_t orig = phi(c.coords[pos], params.q);
        std::uint32_t repl = draw_other_symbol(params.q, orig, rng);
        out.coords[pos] = character_eval(params, repl);
        pat.entries.emplace_back(pos, repl);
    }
    return {std::move(out), std::move(pat)};
}

}  // namespace cpcodes
