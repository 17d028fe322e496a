#pragma once

// Arithmetic for the 16-element local chain ring R = Z4 + wZ4 with w^2 = 2+2w.
// An element a + bw is packed as code = a + 4b in 0..15; all operations reduce
// coefficients mod 4.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaucode/errors.hpp"

namespace gaucode {

class RingElement {
  public:
    constexpr RingElement() = default;

    // Accepts any integers; both coefficients are reduced mod 4.
    static constexpr RingElement of(int a, int b) noexcept {
        return RingElement(static_cast<std::uint8_t>(mod4(a) + 4 * mod4(b)));
    }

    // Packed form a + 4b used by CSV/JSON exports.
    static constexpr RingElement from_code(int code) {
        if (code < 0 || code > 15) throw InputError("ring element code out of range 0..15");
        return RingElement(static_cast<std::uint8_t>(code));
    }

    constexpr int a() const noexcept { return code_ & 3; }
    constexpr int b() const noexcept { return code_ >> 2; }
    constexpr int code() const noexcept { return code_; }

    constexpr bool is_zero() const noexcept { return code_ == 0; }
    constexpr bool is_unit() const noexcept { return (code_ & 1) != 0; }

    friend constexpr RingElement operator+(RingElement x, RingElement y) noexcept {
        return of(x.a() + y.a(), x.b() + y.b());
    }
    friend constexpr RingElement operator-(RingElement x, RingElement y) noexcept {
        return of(x.a() - y.a(), x.b() - y.b());
    }
    constexpr RingElement operator-() const noexcept { return of(-a(), -b()); }

    // (a+bw)(c+dw) = (ac + 2bd) + (ad + bc + 2bd)w, from w^2 = 2+2w.
    friend constexpr RingElement operator*(RingElement x, RingElement y) noexcept {
        const int a = x.a(), b = x.b(), c = y.a(), d = y.b();
        return of(a * c + 2 * b * d, a * d + b * c + 2 * b * d);
    }

    constexpr RingElement& operator+=(RingElement y) noexcept { return *this = *this + y; }
    constexpr RingElement& operator-=(RingElement y) noexcept { return *this = *this - y; }
    constexpr RingElement& operator*=(RingElement y) noexcept { return *this = *this * y; }

    friend constexpr bool operator==(RingElement, RingElement) noexcept = default;
    friend constexpr bool operator<(RingElement x, RingElement y) noexcept { return x.code_ < y.code_; }

  private:
    explicit constexpr RingElement(std::uint8_t code) noexcept : code_(code) {}
    static constexpr int mod4(int v) noexcept { return ((v % 4) + 4) % 4; }

    std::uint8_t code_ = 0;
};

inline constexpr int kRingSize = 16;

constexpr std::array<RingElement, kRingSize> all_elements() noexcept {
    std::array<RingElement, kRingSize> out{};
    for (int c = 0; c < kRingSize; ++c) out[c] = RingElement::of(c & 3, c >> 2);
    return out;
}

enum class ElementClass { unit, zero_divisor };

// Units are exactly the odd-a elements; 0 counts as a zero divisor, matching
// the published zero-divisor set {0, 2, w, 2+w, 2w, 2+2w, 3w, 2+3w}.
constexpr ElementClass classify(RingElement x) noexcept {
    return x.is_unit() ? ElementClass::unit : ElementClass::zero_divisor;
}

// Chain position along <0> < <2w> < <2> < <w> < R:
// 0 = unit, 1 = w-associate, 2 = 2-associate, 3 = 2w-associate, 4 = zero.
constexpr int valuation(RingElement x) noexcept {
    if (x.is_unit()) return 0;
    if (x.b() % 2 == 1) return 1;
    if (x.a() == 2) return 2;
    return x.b() == 2 ? 3 : 4;
}

// Canonical generator of the ideal at each chain position: 1, w, 2, 2w, 0.
constexpr RingElement canonical_generator(int val) {
    switch (val) {
        case 0: return RingElement::of(1, 0);
        case 1: return RingElement::of(0, 1);
        case 2: return RingElement::of(2, 0);
        case 3: return RingElement::of(0, 2);
        case 4: return RingElement::of(0, 0);
        default: throw InputError("valuation out of range 0..4");
    }
}

constexpr RingElement inverse(RingElement u) {
    if (!u.is_unit()) throw InputError("inverse of a zero divisor");
    for (RingElement y : all_elements())
        if (u * y == RingElement::of(1, 0)) return y;
    return RingElement::of(0, 0);  // unreachable: every unit has an inverse
}

// Some q with q*d = x, if one exists. Quotients are unique up to the
// annihilator of d; callers must not depend on which representative comes back.
constexpr std::optional<RingElement> divide(RingElement x, RingElement d) noexcept {
    for (RingElement q : all_elements())
        if (q * d == x) return q;
    return std::nullopt;
}

inline std::vector<RingElement> ideal_members(RingElement g) {
    std::array<bool, kRingSize> seen{};
    for (RingElement r : all_elements()) seen[(r * g).code()] = true;
    std::vector<RingElement> out;
    for (int c = 0; c < kRingSize; ++c)
        if (seen[c]) out.push_back(RingElement::from_code(c));
    return out;
}

// Canonical text form: "0".."3", "w", "2w", "3w", or "a+bw" (e.g. "2+3w").
inline std::string to_token(RingElement x) {
    const int a = x.a(), b = x.b();
    if (b == 0) return std::to_string(a);
    const std::string wpart = (b == 1) ? "w" : std::to_string(b) + "w";
    return (a == 0) ? wpart : std::to_string(a) + "+" + wpart;
}

inline RingElement parse_element(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    const auto bad = [&]() -> RingElement {
        throw InputError("bad ring element token: '" + std::string(text) + "'");
    };
    const auto digit = [](char c) { return c >= '0' && c <= '3'; };
    if (s.empty()) return bad();
    if (s.size() == 1 && digit(s[0])) return RingElement::of(s[0] - '0', 0);
    int a = 0;
    if (s.size() >= 2 && digit(s[0]) && s[1] == '+') {
        a = s[0] - '0';
        s.remove_prefix(2);
    }
    if (s.empty() || s.back() != 'w') return bad();
    s.remove_suffix(1);
    int b = 1;
    if (s.size() == 1 && (s[0] == '2' || s[0] == '3')) b = s[0] - '0';
    else if (!s.empty()) return bad();
    return RingElement::of(a, b);
}

using RingVector = std::vector<RingElement>;

inline RingVector vec_add(const RingVector& x, const RingVector& y) {
    if (x.size() != y.size()) throw DimensionError("vector length mismatch");
    RingVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i] + y[i];
    return out;
}

inline RingVector vec_scale(RingElement c, const RingVector& x) {
    RingVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
    return out;
}

inline RingVector vec_neg(const RingVector& x) {
    RingVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = -x[i];
    return out;
}

inline bool is_zero_vector(const RingVector& x) {
    for (RingElement e : x)
        if (!e.is_zero()) return false;
    return true;
}

// Comma-separated element tokens, e.g. "0, 2, 2w, 2+2w".
inline RingVector parse_vector(std::string_view csv) {
    RingVector out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = csv.find(',', start);
        const std::string_view tok = csv.substr(start, comma == std::string_view::npos
                                                           ? std::string_view::npos
                                                           : comma - start);
        out.push_back(parse_element(tok));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string format_vector(const RingVector& x, std::string_view sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += sep;
        out += to_token(x[i]);
    }
    return out;
}

}  // namespace gaucode
