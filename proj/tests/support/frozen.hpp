#pragma once

// Frozen expected values for the 16-element ring, generated once by an
// independent reference implementation and baked in here so the library under
// test never certifies itself. Row/column index is the packed element code
// a + 4b; table cells are single hex digits.

#include <array>
#include <optional>
#include <string_view>

#include "gaucode/ring.hpp"

namespace frozen {

inline constexpr std::array<std::string_view, 16> kMulRows = {
    "0000000000000000",
    "0123456789abcdef",
    "02028a8a02028a8a",
    "0321cfed8ba94765",
    "048cae26048cae26",
    "05afe3498d276bc1",
    "068e24ac068e24ac",
    "07ad69c38f25e14b",
    "0808080808080808",
    "092b4d6f81a3c5e7",
    "0a0a82820a0a8282",
    "0b29c7e583a14f6d",
    "0c84a62e0c84a62e",
    "0da7eb41852f63c9",
    "0e862ca40e862ca4",
    "0fa561cb872de943",
};

inline constexpr std::array<std::string_view, 16> kAddRows = {
    "0123456789abcdef",
    "123056749ab8defc",
    "23016745ab89efcd",
    "30127456b89afcde",
    "456789abcdef0123",
    "56749ab8defc1230",
    "6745ab89efcd2301",
    "7456b89afcde3012",
    "89abcdef01234567",
    "9ab8defc12305674",
    "ab89efcd23016745",
    "b89afcde30127456",
    "cdef0123456789ab",
    "defc123056749ab8",
    "efcd23016745ab89",
    "fcde30127456b89a",
};

inline constexpr std::array<std::string_view, 16> kGauDistRows = {
    "0121211222222211",
    "1012122122222211",
    "2101122122221122",
    "1210211222221122",
    "2112012122112222",
    "1221101222112222",
    "1221210111222222",
    "2112121011222222",
    "2222221101212112",
    "2222221110121221",
    "2222112221011221",
    "2222112212102112",
    "2211222221120121",
    "2211222212211012",
    "1122222212212101",
    "1122222221121210",
};

// Dinucleotide image per element code.
inline constexpr std::array<std::string_view, 16> kPhiByCode = {
    "AA", "AG", "GG", "GA", "TG", "TA", "CA", "CG",
    "CC", "CT", "TT", "TC", "GT", "GC", "AC", "AT",
};

// Per-code digit strings: GC weight of the dinucleotide image, Gau weight,
// d(y+delta, y) for y outside the invariance subgroup, coset indicator, and
// chain valuation.
inline constexpr std::string_view kGcByCode = "0121101221011210";
inline constexpr std::string_view kGauWeightByCode = "0121211222222211";
inline constexpr std::string_view kCostCoset1ByCode = "0121221122222112";
inline constexpr std::string_view kCosetByCode = "0101101001011010";
inline constexpr std::string_view kValuationByCode = "4020101030201010";

inline constexpr std::array<std::string_view, 16> kTokensByCode = {
    "0", "1", "2", "3", "w", "1+w", "2+w", "3+w",
    "2w", "1+2w", "2+2w", "3+2w", "3w", "1+3w", "2+3w", "3+3w",
};

// Unit inverses as (code, inverse code) pairs.
inline constexpr std::array<std::array<int, 2>, 8> kUnitInverses = {{
    {1, 1}, {3, 3}, {5, 15}, {7, 13}, {9, 9}, {11, 11}, {13, 7}, {15, 5},
}};

inline int hex_digit(char c) {
    return c <= '9' ? c - '0' : c - 'a' + 10;
}

// ---- piecewise distance formulas ----
// The published simplification of the distance splits on zero-divisor/unit
// membership and on which set x - y (written x + 3y) falls in. Used as an
// independent cross-check of the index formula; pairs with x a unit and y a
// zero divisor are covered through symmetry.

inline bool in_set(gaucode::RingElement e, std::initializer_list<int> codes) {
    for (int c : codes)
        if (e.code() == c) return true;
    return false;
}

// Returns the case-formula distance when one of the three cases applies
// directly to (x, y); nullopt otherwise.
inline std::optional<int> case_formula(gaucode::RingElement x, gaucode::RingElement y) {
    using gaucode::RingElement;
    const RingElement diff = x + RingElement::of(3, 0) * y;
    const bool xu = x.is_unit(), yu = y.is_unit();
    if (xu == yu) {  // both units or both zero divisors
        if (x == y) return 0;
        return in_set(diff, {6, 14}) ? 1 : 2;  // {2+w, 2+3w}
    }
    if (!xu && yu) {
        if (in_set(x, {0, 2, 8, 10})) {  // x in {0, 2, 2w, 2+2w}
            if (in_set(diff, {1, 3, 5, 15})) return 1;   // {1, 3, 1+w, 3+3w}
            if (in_set(diff, {13, 7, 9, 11})) return 2;  // {1+3w, 3+w, 1+2w, 3+2w}
            return std::nullopt;  // formula incomplete for this pair
        }
        if (in_set(x, {4, 12, 6, 14})) {  // x in {w, 3w, 2+w, 2+3w}
            if (in_set(diff, {1, 3, 7, 13})) return 1;   // {1, 3, 3+w, 1+3w}
            if (in_set(diff, {15, 5, 9, 11})) return 2;  // {3+3w, 1+w, 1+2w, 3+2w}
            return std::nullopt;
        }
    }
    return std::nullopt;
}

}  // namespace frozen
