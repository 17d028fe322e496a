#pragma once

// Code family constructors: cyclic-shift (octa) codes, the simplex variant,
// first-order and r-th order block recursions, and the stacking and
// block-repetition combinators, together with their claimed parameters.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gaucode/code.hpp"
#include "gaucode/errors.hpp"
#include "gaucode/ring.hpp"

namespace gaucode {

// Rows are the distinct one-step right rotations of the seed, iterated until
// the rotation repeats, so the row count is the seed's period.
inline GeneratorMatrix build_octa(const RingVector& first_row) {
    if (first_row.empty()) {
        throw InputError("cyclic shift construction needs a non-empty first row");
    }
    std::vector<RingVector> rows{first_row};
    RingVector cur = first_row;
    while (true) {
        std::rotate(cur.rbegin(), cur.rbegin() + 1, cur.rend());
        if (cur == first_row) {
            break;
        }
        rows.push_back(cur);
    }
    return GeneratorMatrix(std::move(rows));
}

// k rows, 2^(2k-1) columns. The base is the fixed 2x8 matrix; each step
// prepends the four-block constant row (0..|2..|2w..|2+2w..) over four copies
// of the previous matrix.
inline GeneratorMatrix build_simplex_beta(int k) {
    if (k < 2) {
        throw InputError("simplex construction needs k >= 2");
    }
    if (k > 11) {
        throw CapacityError("simplex construction width exceeds the supported range");
    }
    const RingElement z0 = RingElement::of(0, 0);
    const RingElement z2 = RingElement::of(2, 0);
    const RingElement zw = RingElement::of(0, 2);
    const RingElement z22 = RingElement::of(2, 2);

    std::vector<RingVector> rows = {
        {RingElement::of(1, 0), RingElement::of(1, 0), RingElement::of(1, 0),
         RingElement::of(1, 0), z0, z2, zw, z22},
        {z0, z2, zw, z22, RingElement::of(1, 0), RingElement::of(1, 0),
         RingElement::of(1, 0), RingElement::of(1, 0)},
    };
    for (int level = 3; level <= k; ++level) {
        const std::size_t prev_width = rows.front().size();
        std::vector<RingVector> next;
        RingVector top;
        top.reserve(prev_width * 4);
        for (const RingElement block : {z0, z2, zw, z22}) {
            top.insert(top.end(), prev_width, block);
        }
        next.push_back(std::move(top));
        for (const auto& row : rows) {
            RingVector wide;
            wide.reserve(prev_width * 4);
            for (int copy = 0; copy < 4; ++copy) {
                wide.insert(wide.end(), row.begin(), row.end());
            }
            next.push_back(std::move(wide));
        }
        rows = std::move(next);
    }
    return GeneratorMatrix(std::move(rows));
}

inline bool is_nonzero_zero_divisor(RingElement z) {
    return !z.is_zero() && !z.is_unit();
}

// m+1 rows, 2^m columns: an all-ones row, then for each t >= 2 the row that
// alternates zero and z blocks of length 2^(m+1-t), starting with zeros.
inline GeneratorMatrix build_rm1(int m, RingElement z) {
    if (m < 1) {
        throw InputError("first-order construction needs m >= 1");
    }
    if (m > 20) {
        throw CapacityError("first-order construction width exceeds the supported range");
    }
    if (!is_nonzero_zero_divisor(z)) {
        throw InputError("z must be a nonzero zero divisor");
    }
    const std::size_t width = std::size_t{1} << m;
    std::vector<RingVector> rows;
    rows.emplace_back(width, RingElement::of(1, 0));
    for (int t = 2; t <= m + 1; ++t) {
        const std::size_t block = std::size_t{1} << (m + 1 - t);
        RingVector row(width, RingElement::of(0, 0));
        for (std::size_t c = 0; c < width; ++c) {
            if ((c / block) % 2 == 1) {
                row[c] = z;
            }
        }
        rows.push_back(std::move(row));
    }
    return GeneratorMatrix(std::move(rows));
}

namespace detail {

inline std::vector<RingVector> rmr_rows(int r, int m, RingElement z) {
    const std::size_t width = std::size_t{1} << m;
    if (r == 0) {
        return {RingVector(width, RingElement::of(1, 0))};
    }
    if (r == m) {
        std::vector<RingVector> rows = rmr_rows(m - 1, m, z);
        RingVector last(width, RingElement::of(0, 0));
        last.back() = z;
        rows.push_back(std::move(last));
        return rows;
    }
    const std::vector<RingVector> left = rmr_rows(r, m - 1, z);
    const std::vector<RingVector> low = rmr_rows(r - 1, m - 1, z);
    std::vector<RingVector> rows;
    rows.reserve(left.size() + low.size());
    for (const auto& row : left) {
        RingVector doubled;
        doubled.reserve(width);
        doubled.insert(doubled.end(), row.begin(), row.end());
        doubled.insert(doubled.end(), row.begin(), row.end());
        rows.push_back(std::move(doubled));
    }
    const std::size_t half = width / 2;
    for (const auto& row : low) {
        RingVector shifted(half, RingElement::of(0, 0));
        shifted.insert(shifted.end(), row.begin(), row.end());
        rows.push_back(std::move(shifted));
    }
    return rows;
}

}  // namespace detail

// The r-th order block recursion: all-ones base at r = 0, a trailing
// (0 ... 0 z) row added at r = m, and the standard two-block recursion in
// between. Note the r = 1 matrix differs from the first-order construction.
inline GeneratorMatrix build_rmr(int r, int m, RingElement z) {
    if (r < 0 || m < 0 || r > m) {
        throw InputError("the block recursion needs 0 <= r <= m");
    }
    if (m > 20) {
        throw CapacityError("block recursion width exceeds the supported range");
    }
    if (!is_nonzero_zero_divisor(z)) {
        throw InputError("z must be a nonzero zero divisor");
    }
    return GeneratorMatrix(detail::rmr_rows(r, m, z));
}

// Prepends the constant-block row (z1..z1 | z2..z2 | z3..z3 | z4..z4) with
// block length k to P. P must be 4k columns wide and its span must contain
// the all-2 vector.
inline GeneratorMatrix build_stack(const GeneratorMatrix& p,
                                   const std::array<RingElement, 4>& z_assignment,
                                   int k) {
    if (k < 1) {
        throw InputError("stack construction needs k >= 1");
    }
    const std::array<RingElement, 4> allowed = {
        RingElement::of(0, 0), RingElement::of(2, 0), RingElement::of(0, 2),
        RingElement::of(2, 2)};
    for (std::size_t i = 0; i < 4; ++i) {
        if (std::find(allowed.begin(), allowed.end(), z_assignment[i]) == allowed.end()) {
            throw InputError("stack blocks must come from {0, 2, 2w, 2+2w}");
        }
        for (std::size_t j = i + 1; j < 4; ++j) {
            if (z_assignment[i] == z_assignment[j]) {
                throw InputError("stack blocks must be distinct");
            }
        }
    }
    if (p.cols() != static_cast<std::size_t>(4 * k)) {
        throw InputError("stack construction needs P with exactly 4k columns");
    }
    const RingVector all_two(p.cols(), RingElement::of(2, 0));
    if (!standard_form(p).contains(all_two)) {
        throw PreconditionError("the all-2 vector must lie in the span of P");
    }
    RingVector zrow;
    zrow.reserve(p.cols());
    for (const RingElement z : z_assignment) {
        zrow.insert(zrow.end(), static_cast<std::size_t>(k), z);
    }
    std::vector<RingVector> rows{std::move(zrow)};
    rows.insert(rows.end(), p.rows().begin(), p.rows().end());
    return GeneratorMatrix(std::move(rows));
}

// Horizontal k-fold repetition of every row.
inline GeneratorMatrix build_repeat(const GeneratorMatrix& g1, int k) {
    if (k < 1) {
        throw InputError("repeat construction needs k >= 1");
    }
    std::vector<RingVector> rows;
    rows.reserve(g1.row_count());
    for (const auto& row : g1.rows()) {
        RingVector wide;
        wide.reserve(row.size() * static_cast<std::size_t>(k));
        for (int copy = 0; copy < k; ++copy) {
            wide.insert(wide.end(), row.begin(), row.end());
        }
        rows.push_back(std::move(wide));
    }
    return GeneratorMatrix(std::move(rows));
}

struct OctaSpec {
    RingVector first_row;
};
struct SimplexBetaSpec {
    int k = 2;
};
struct Rm1Spec {
    int m = 1;
    RingElement z = RingElement::of(2, 0);
};
struct RmrSpec {
    int r = 0;
    int m = 0;
    RingElement z = RingElement::of(2, 0);
};
struct StackSpec {
    GeneratorMatrix p;
    std::array<RingElement, 4> z_assignment;
    int k = 1;
};
struct RepeatSpec {
    GeneratorMatrix g1;
    int k = 1;
};

using FamilySpec = std::variant<OctaSpec, SimplexBetaSpec, Rm1Spec, RmrSpec, StackSpec, RepeatSpec>;

inline GeneratorMatrix build(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> GeneratorMatrix {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, OctaSpec>) {
                return build_octa(s.first_row);
            } else if constexpr (std::is_same_v<T, SimplexBetaSpec>) {
                return build_simplex_beta(s.k);
            } else if constexpr (std::is_same_v<T, Rm1Spec>) {
                return build_rm1(s.m, s.z);
            } else if constexpr (std::is_same_v<T, RmrSpec>) {
                return build_rmr(s.r, s.m, s.z);
            } else if constexpr (std::is_same_v<T, StackSpec>) {
                return build_stack(s.p, s.z_assignment, s.k);
            } else {
                return build_repeat(s.g1, s.k);
            }
        },
        spec);
}

inline std::string family_label(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::string {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, OctaSpec>) {
                return "octa(" + format_vector(s.first_row, ",") + ")";
            } else if constexpr (std::is_same_v<T, SimplexBetaSpec>) {
                return "simplex(k=" + std::to_string(s.k) + ")";
            } else if constexpr (std::is_same_v<T, Rm1Spec>) {
                return "rm1(m=" + std::to_string(s.m) + ",z=" + to_token(s.z) + ")";
            } else if constexpr (std::is_same_v<T, RmrSpec>) {
                return "rmr(r=" + std::to_string(s.r) + ",m=" + std::to_string(s.m) +
                       ",z=" + to_token(s.z) + ")";
            } else if constexpr (std::is_same_v<T, StackSpec>) {
                std::string zs;
                for (std::size_t i = 0; i < 4; ++i) {
                    if (i > 0) {
                        zs += ",";
                    }
                    zs += to_token(s.z_assignment[i]);
                }
                return "stack(k=" + std::to_string(s.k) + ",z=(" + zs + "))";
            } else {
                return "repeat(k=" + std::to_string(s.k) + ")";
            }
        },
        spec);
}

// Claimed parameters on the DNA side: word length, code size, and minimum
// Hamming distance. For the stack combinator the distance is only an upper
// bound; the size claim there depends on whether the new row already lies in
// the span of P.
struct PredictedParams {
    std::size_t n_dna = 0;
    std::uint64_t size = 0;
    int min_distance = 0;
    bool distance_is_upper_bound = false;

    friend bool operator==(const PredictedParams&, const PredictedParams&) = default;
};

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::uint64_t out = 1;
    for (int i = 0; i < k; ++i) {
        out = out * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    }
    return out;
}

namespace detail {

inline std::optional<PredictedParams> octa_prediction(const RingVector& first_row) {
    struct TableRow {
        const char* seed;
        PredictedParams params;
    };
    static const std::array<TableRow, 4> table = {{
        {"0, 2, 2w, 2+2w", {8, 16, 4, false}},
        {"0, 2w, 2, 2+2w", {8, 64, 4, false}},
        {"0, 2w, 2, 2+2w, 0, 2w, 2, 2+2w", {16, 64, 8, false}},
        {"0, 2, 2w, 2+2w, 0, 2, 2w, 2+2w", {16, 16, 8, false}},
    }};
    for (const auto& row : table) {
        if (first_row == parse_vector(row.seed)) {
            return row.params;
        }
    }
    return std::nullopt;
}

}  // namespace detail

inline std::optional<PredictedParams> predicted_params(const FamilySpec& spec) {
    return std::visit(
        [](const auto& s) -> std::optional<PredictedParams> {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, OctaSpec>) {
                return detail::octa_prediction(s.first_row);
            } else if constexpr (std::is_same_v<T, SimplexBetaSpec>) {
                if (s.k < 2 || s.k > 11) {
                    return std::nullopt;
                }
                PredictedParams out;
                out.n_dna = std::size_t{1} << (2 * s.k);
                out.size = std::uint64_t{1} << (2 * s.k + 4);
                out.min_distance = 1 << (2 * s.k - 1);
                return out;
            } else if constexpr (std::is_same_v<T, Rm1Spec>) {
                if (s.m < 1 || s.m > 14 || !is_nonzero_zero_divisor(s.z)) {
                    return std::nullopt;
                }
                PredictedParams out;
                out.n_dna = std::size_t{1} << (s.m + 1);
                switch (valuation(s.z)) {
                    case 1:
                        out.size = std::uint64_t{1} << (3 * s.m + 4);
                        out.min_distance = 1 << (s.m - 1);
                        break;
                    case 2:
                        out.size = std::uint64_t{1} << (2 * s.m + 4);
                        out.min_distance = 1 << s.m;
                        break;
                    default:
                        out.size = std::uint64_t{1} << (s.m + 4);
                        out.min_distance = 1 << s.m;
                        break;
                }
                return out;
            } else if constexpr (std::is_same_v<T, RmrSpec>) {
                if (s.r < 0 || s.r > s.m || !is_nonzero_zero_divisor(s.z)) {
                    return std::nullopt;
                }
                std::uint64_t a = 0;
                for (int i = 0; i < s.r; ++i) {
                    a += binomial(s.m - 1, i);
                }
                std::uint64_t b = 0;
                for (int i = 0; i <= s.r; ++i) {
                    b += binomial(s.m, i);
                }
                const int val = valuation(s.z);
                const std::uint64_t bits = 4 * b - static_cast<std::uint64_t>(val) * a;
                if (bits >= 64 || s.m > 20) {
                    return std::nullopt;
                }
                PredictedParams out;
                out.n_dna = std::size_t{1} << (s.m + 1);
                out.size = std::uint64_t{1} << bits;
                out.min_distance = val == 1 ? 1 << (s.m - s.r) : 1 << (s.m - s.r + 1);
                return out;
            } else if constexpr (std::is_same_v<T, StackSpec>) {
                const CodeMeasurement base = measure_code(s.p);
                RingVector zrow;
                zrow.reserve(s.p.cols());
                for (const RingElement z : s.z_assignment) {
                    zrow.insert(zrow.end(), static_cast<std::size_t>(s.k), z);
                }
                const bool in_span = standard_form(s.p).contains(zrow);
                PredictedParams out;
                out.n_dna = 2 * s.p.cols();
                out.size = in_span ? base.size : 4 * base.size;
                out.min_distance = std::min(4 * s.k, base.min_distance);
                out.distance_is_upper_bound = true;
                return out;
            } else {
                return std::nullopt;
            }
        },
        spec);
}

// The family instances registered for bound scans: the four cyclic-shift
// table seeds, the simplex codes for k = 2 and 3, and the first-order
// construction for m = 1..3 with one z per ideal class.
struct FamilyInstance {
    std::string label;
    GeneratorMatrix matrix;
};

inline std::vector<FamilyInstance> standard_instances() {
    std::vector<FamilyInstance> out;
    const std::array<const char*, 4> octa_seeds = {
        "0, 2, 2w, 2+2w",
        "0, 2w, 2, 2+2w",
        "0, 2w, 2, 2+2w, 0, 2w, 2, 2+2w",
        "0, 2, 2w, 2+2w, 0, 2, 2w, 2+2w",
    };
    for (const char* seed : octa_seeds) {
        const OctaSpec spec{parse_vector(seed)};
        out.push_back({family_label(spec), build_octa(spec.first_row)});
    }
    for (int k = 2; k <= 3; ++k) {
        const SimplexBetaSpec spec{k};
        out.push_back({family_label(spec), build_simplex_beta(k)});
    }
    const std::array<RingElement, 3> zs = {RingElement::of(2, 0), RingElement::of(0, 1),
                                           RingElement::of(0, 2)};
    for (int m = 1; m <= 3; ++m) {
        for (const RingElement z : zs) {
            const Rm1Spec spec{m, z};
            out.push_back({family_label(spec), build_rm1(m, z)});
        }
    }
    return out;
}

}  // namespace gaucode
