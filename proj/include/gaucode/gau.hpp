#pragma once

// The 4x4 arrangement matrix of R, the Gau distance it induces, the Gau map to
// DNA dinucleotides, and the ring-side images of the DNA reverse/complement
// operators.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "gaucode/dna.hpp"
#include "gaucode/ring.hpp"

namespace gaucode {

struct GauIndex {
    int i = 0;  // row, in the fixed label order A, G, C, T
    int j = 0;  // column, same order
    friend constexpr bool operator==(GauIndex, GauIndex) noexcept = default;
};

namespace detail {

inline constexpr char kGauLetters[4] = {'A', 'G', 'C', 'T'};

// Arrangement matrix, rows/columns labeled A, G, C, T. Entry (i, j) is the
// element whose dinucleotide image is (letter_i, letter_j).
constexpr std::array<std::array<RingElement, 4>, 4> make_arrangement() noexcept {
    const auto e = [](int a, int b) { return RingElement::of(a, b); };
    return {{
        {e(0, 0), e(1, 0), e(2, 3), e(3, 3)},
        {e(3, 0), e(2, 0), e(1, 3), e(0, 3)},
        {e(2, 1), e(3, 1), e(0, 2), e(1, 2)},
        {e(1, 1), e(0, 1), e(3, 2), e(2, 2)},
    }};
}

inline constexpr std::array<std::array<RingElement, 4>, 4> kArrangement = make_arrangement();

constexpr std::array<GauIndex, kRingSize> make_index_table() noexcept {
    std::array<GauIndex, kRingSize> out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[kArrangement[i][j].code()] = GauIndex{i, j};
    return out;
}

inline constexpr std::array<GauIndex, kRingSize> kIndexOf = make_index_table();

}  // namespace detail

constexpr GauIndex index_of(RingElement x) noexcept { return detail::kIndexOf[x.code()]; }

constexpr RingElement element_at(GauIndex idx) {
    if (idx.i < 0 || idx.i > 3 || idx.j < 0 || idx.j > 3)
        throw InputError("arrangement index out of range");
    return detail::kArrangement[idx.i][idx.j];
}

// d(x, y) = min{1, (i+3i') mod 4} + min{1, (j+3j') mod 4} over the arrangement
// indices; coincides with the Hamming distance of the dinucleotide images.
constexpr int gau_dist(RingElement x, RingElement y) noexcept {
    const GauIndex p = index_of(x), q = index_of(y);
    const int row = (p.i + 3 * q.i) % 4;
    const int col = (p.j + 3 * q.j) % 4;
    return (row ? 1 : 0) + (col ? 1 : 0);
}

constexpr int gau_weight(RingElement x) noexcept { return gau_dist(x, RingElement::of(0, 0)); }

inline int gau_dist_vec(const RingVector& x, const RingVector& y) {
    if (x.size() != y.size()) throw DimensionError("Gau distance needs equal lengths");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += gau_dist(x[i], y[i]);
    return d;
}

inline int gau_weight_vec(const RingVector& x) {
    int d = 0;
    for (RingElement e : x) d += gau_weight(e);
    return d;
}

inline std::string phi(RingElement x) {
    const GauIndex idx = index_of(x);
    return {detail::kGauLetters[idx.i], detail::kGauLetters[idx.j]};
}

inline RingElement phi_inv(std::string_view dinucleotide) {
    if (dinucleotide.size() != 2) throw DimensionError("phi_inv needs a 2-letter word");
    const auto letter_index = [](char c) -> int {
        switch (c) {
            case 'A': return 0;
            case 'G': return 1;
            case 'C': return 2;
            case 'T': return 3;
            default: throw InputError("invalid DNA base '" + std::string(1, c) + "'");
        }
    };
    return detail::kArrangement[letter_index(dinucleotide[0])][letter_index(dinucleotide[1])];
}

inline std::string phi_vec(const RingVector& x) {
    std::string out;
    out.reserve(2 * x.size());
    for (RingElement e : x) out += phi(e);
    return out;
}

inline RingVector phi_inv_vec(std::string_view word) {
    if (word.empty() || word.size() % 2 != 0)
        throw DimensionError("phi_inv_vec needs a nonempty even-length word");
    RingVector out;
    out.reserve(word.size() / 2);
    for (std::size_t i = 0; i < word.size(); i += 2) out.push_back(phi_inv(word.substr(i, 2)));
    return out;
}

// Ring-side images of the string operators: phi_vec commutes with them.
// Per entry, phi_inv(phi(e)^r) = -e and phi_inv(phi(e)^c) = e + (2+2w).
inline RingVector ring_reverse_image(const RingVector& x) {
    RingVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[x.size() - 1 - i];
    return out;
}

inline RingVector ring_complement_image(const RingVector& x) {
    RingVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + RingElement::of(2, 2);
    return out;
}

inline RingVector ring_reverse_complement_image(const RingVector& x) {
    return ring_complement_image(ring_reverse_image(x));
}

// ---- translation structure of the Gau metric ----
//
// gau_dist is NOT invariant under all translations: d(x+z, y+z) = d(x, y) for
// all x, y holds exactly when z lies in the index-2 additive subgroup
// T = {0, 2, 2+2w, 2w, 1+w, 3+w, 1+3w, 3+3w}. For arbitrary z the difference
// d(y+delta, y) still depends only on delta and on the coset of y modulo T,
// which is what makes exact pairwise minimum distance computable for large
// codes without enumerating pairs.

namespace detail {

constexpr std::array<bool, kRingSize> make_preserves_table() noexcept {
    std::array<bool, kRingSize> out{};
    for (RingElement z : all_elements()) {
        bool ok = true;
        for (RingElement x : all_elements())
            for (RingElement y : all_elements())
                if (gau_dist(x + z, y + z) != gau_dist(x, y)) ok = false;
        out[z.code()] = ok;
    }
    return out;
}

inline constexpr std::array<bool, kRingSize> kPreservesDist = make_preserves_table();

constexpr std::array<std::array<std::uint8_t, 2>, kRingSize> make_cost_table() noexcept {
    // Representatives of the two cosets of T: 0 and 1. That d(y+delta, y) is
    // constant on each coset is re-checked exhaustively by the test suite.
    std::array<std::array<std::uint8_t, 2>, kRingSize> out{};
    const RingElement rep1 = RingElement::of(1, 0);
    for (RingElement d : all_elements()) {
        out[d.code()][0] = static_cast<std::uint8_t>(gau_weight(d));
        out[d.code()][1] = static_cast<std::uint8_t>(gau_dist(rep1 + d, rep1));
    }
    return out;
}

inline constexpr std::array<std::array<std::uint8_t, 2>, kRingSize> kTranslateCost =
    make_cost_table();

}  // namespace detail

constexpr bool preserves_gau_dist(RingElement z) noexcept {
    return detail::kPreservesDist[z.code()];
}

// 0 when y is in T (translations by y preserve the metric), else 1.
constexpr int translation_coset(RingElement y) noexcept {
    return detail::kPreservesDist[y.code()] ? 0 : 1;
}

// d(y + delta, y) for any y in the given coset.
constexpr int translate_cost(RingElement delta, int coset) {
    if (coset < 0 || coset > 1) throw InputError("coset must be 0 or 1");
    return detail::kTranslateCost[delta.code()][coset];
}

constexpr int min_translate_cost(RingElement delta) noexcept {
    const auto& row = detail::kTranslateCost[delta.code()];
    return row[0] < row[1] ? row[0] : row[1];
}

static_assert(gau_dist(RingElement::of(2, 0), RingElement::of(2, 2)) == 2);
static_assert(RingElement::of(0, 1) * RingElement::of(0, 1) == RingElement::of(2, 2));

}  // namespace gaucode
