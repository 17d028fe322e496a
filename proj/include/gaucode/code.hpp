#pragma once

// Linear codes over the ring: generator matrices, standard-form reduction,
// span enumeration, exact minimum Gau distance, and closure tests.

#include <algorithm>
#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gaucode/dna.hpp"
#include "gaucode/errors.hpp"
#include "gaucode/gau.hpp"
#include "gaucode/ring.hpp"

namespace gaucode {

inline constexpr std::uint64_t kDefaultEnumLimit = std::uint64_t{1} << 22;

class GeneratorMatrix {
  public:
    explicit GeneratorMatrix(std::vector<RingVector> rows) : rows_(std::move(rows)) {
        if (rows_.empty()) {
            throw InputError("generator matrix needs at least one row");
        }
        cols_ = rows_.front().size();
        if (cols_ == 0) {
            throw InputError("generator matrix needs at least one column");
        }
        for (const auto& row : rows_) {
            if (row.size() != cols_) {
                throw DimensionError("generator matrix rows must share one length");
            }
        }
    }

    const std::vector<RingVector>& rows() const noexcept { return rows_; }
    std::size_t row_count() const noexcept { return rows_.size(); }
    std::size_t cols() const noexcept { return cols_; }

  private:
    std::vector<RingVector> rows_;
    std::size_t cols_ = 0;
};

// Code type {k0, k1, k2, k3}: number of staircase rows whose pivot generates
// the full ring, the 8-element ideal, the 4-element ideal, the 2-element
// ideal. Code size is 16^k0 * 8^k1 * 4^k2 * 2^k3.
struct CodeType {
    int k0 = 0;
    int k1 = 0;
    int k2 = 0;
    int k3 = 0;

    std::uint64_t size() const {
        const int bits = 4 * k0 + 3 * k1 + 2 * k2 + k3;
        if (bits >= 64) {
            throw CapacityError("code size exceeds the 64-bit range");
        }
        return std::uint64_t{1} << bits;
    }

    friend bool operator==(const CodeType&, const CodeType&) = default;
};

// Staircase form of a generator matrix. Rows live in permuted coordinates:
// col_perm[p] names the original column sitting at permuted position p. Row r
// has its pivot at permuted column r, the pivot is a canonical ideal
// generator, pivot valuations never decrease down the staircase, and every
// entry of row r lies in the ideal generated by its pivot.
struct StandardForm {
    std::vector<RingVector> rows;
    CodeType type;
    std::vector<std::size_t> col_perm;
    std::size_t cols = 0;

    std::uint64_t size() const { return type.size(); }

    // Membership of an original-coordinate vector in the row span. The pivot
    // divisibility invariant makes the quotient at each step forced, so any
    // witness returned by divide() works.
    bool contains(const RingVector& v) const {
        if (v.size() != cols) {
            throw DimensionError("vector length does not match the code length");
        }
        RingVector u(cols, RingElement::of(0, 0));
        for (std::size_t p = 0; p < cols; ++p) {
            u[p] = v[col_perm[p]];
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const auto q = divide(u[r], rows[r][r]);
            if (!q) {
                return false;
            }
            for (std::size_t c = r; c < cols; ++c) {
                u[c] = u[c] - *q * rows[r][c];
            }
        }
        return is_zero_vector(u);
    }

    // The staircase rows as a generator matrix; a zero code yields the single
    // zero row so the result is still a valid matrix.
    GeneratorMatrix reduced_matrix() const {
        if (rows.empty()) {
            return GeneratorMatrix({RingVector(cols, RingElement::of(0, 0))});
        }
        return GeneratorMatrix(rows);
    }
};

// Staircase reduction. Pivots are picked globally by minimum valuation (ties:
// leftmost column, then topmost row), moved to the diagonal by row and column
// swaps, scaled by a unit to the canonical generator of their ideal, and the
// pivot column is cleared in every row where the entry is divisible. Picking
// the global minimum first means every entry of the working submatrix, hence
// of the finished row, lies in the pivot's ideal.
inline StandardForm standard_form(const GeneratorMatrix& g) {
    std::vector<RingVector> rows = g.rows();
    const std::size_t nr = rows.size();
    const std::size_t nc = g.cols();

    StandardForm sf;
    sf.cols = nc;
    sf.col_perm.resize(nc);
    for (std::size_t c = 0; c < nc; ++c) {
        sf.col_perm[c] = c;
    }

    std::size_t piv = 0;
    while (piv < nr && piv < nc) {
        int best_val = 4;
        std::size_t best_r = 0;
        std::size_t best_c = 0;
        for (std::size_t c = piv; c < nc; ++c) {
            for (std::size_t r = piv; r < nr; ++r) {
                const int val = valuation(rows[r][c]);
                if (val < best_val) {
                    best_val = val;
                    best_r = r;
                    best_c = c;
                }
            }
            if (best_val == 0) {
                break;
            }
        }
        if (best_val == 4) {
            break;
        }

        std::swap(rows[piv], rows[best_r]);
        if (best_c != piv) {
            for (auto& row : rows) {
                std::swap(row[piv], row[best_c]);
            }
            std::swap(sf.col_perm[piv], sf.col_perm[best_c]);
        }

        const RingElement gen = canonical_generator(best_val);
        const auto unit_q = divide(rows[piv][piv], gen);
        // The quotient of two associates is a unit.
        const RingElement scale = inverse(*unit_q);
        for (std::size_t c = piv; c < nc; ++c) {
            rows[piv][c] = scale * rows[piv][c];
        }

        for (std::size_t r = 0; r < nr; ++r) {
            if (r == piv) {
                continue;
            }
            const auto q = divide(rows[r][piv], gen);
            if (!q) {
                continue;
            }
            for (std::size_t c = piv; c < nc; ++c) {
                rows[r][c] = rows[r][c] - *q * rows[piv][c];
            }
        }
        ++piv;
    }

    CodeType type;
    for (std::size_t r = 0; r < piv; ++r) {
        switch (valuation(rows[r][r])) {
            case 0: ++type.k0; break;
            case 1: ++type.k1; break;
            case 2: ++type.k2; break;
            default: ++type.k3; break;
        }
    }
    rows.resize(piv);
    sf.rows = std::move(rows);
    sf.type = type;
    return sf;
}

// Distinct scalar multiples of a row, in first-seen order over scalar codes
// 0..15. A staircase row with pivot valuation v has exactly 16 >> v of them.
inline std::vector<RingVector> row_multiples(const RingVector& row) {
    std::vector<RingVector> out;
    out.reserve(kRingSize);
    for (const RingElement alpha : all_elements()) {
        RingVector m = vec_scale(alpha, row);
        if (std::find(out.begin(), out.end(), m) == out.end()) {
            out.push_back(std::move(m));
        }
    }
    return out;
}

namespace detail {

// Depth-first walk over all sums of one multiple per staircase row. Visits
// each codeword of the span exactly once, in permuted coordinates. The
// visitor returns false to stop early.
template <typename Fn>
bool walk_span(const StandardForm& sf, Fn&& visit) {
    const std::size_t n = sf.cols;
    const std::size_t depth = sf.rows.size();
    std::vector<std::vector<RingVector>> mults;
    mults.reserve(depth);
    for (const auto& row : sf.rows) {
        mults.push_back(row_multiples(row));
    }

    // levels[d] holds the partial sum of the first d rows' chosen multiples.
    std::vector<RingVector> levels(depth + 1, RingVector(n, RingElement::of(0, 0)));
    std::vector<std::size_t> choice(depth, 0);
    std::size_t level = 0;
    while (true) {
        if (level == depth) {
            if (!visit(levels[depth])) {
                return false;
            }
            // backtrack to the deepest level with an unused choice
            while (level > 0 && choice[level - 1] + 1 == mults[level - 1].size()) {
                choice[--level] = 0;
            }
            if (level == 0) {
                return true;
            }
            ++choice[level - 1];
            --level;
        }
        const auto& m = mults[level][choice[level]];
        for (std::size_t c = 0; c < n; ++c) {
            levels[level + 1][c] = levels[level][c] + m[c];
        }
        ++level;
    }
}

}  // namespace detail

class LinearCode {
  public:
    LinearCode(std::size_t length, std::vector<RingVector> codewords)
        : n_(length), words_(std::move(codewords)) {
        if (n_ == 0) {
            throw InputError("a linear code needs positive length");
        }
        for (const auto& w : words_) {
            if (w.size() != n_) {
                throw DimensionError("codeword length does not match the code length");
            }
        }
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
        if (words_.empty()) {
            throw InputError("a linear code contains at least the zero vector");
        }
    }

    std::size_t length() const noexcept { return n_; }
    std::uint64_t size() const noexcept { return words_.size(); }
    const std::vector<RingVector>& codewords() const noexcept { return words_; }

    bool contains(const RingVector& v) const {
        return std::binary_search(words_.begin(), words_.end(), v);
    }

  private:
    std::size_t n_;
    std::vector<RingVector> words_;
};

// Materializes the span of the rows of g. Small spans are grown by breadth
// first closure under adding row multiples; spans past the closure threshold
// are produced by the one-multiple-per-staircase-row product walk, whose
// output is checked for distinctness against the staircase type. Throws
// CapacityError when the span would exceed limit.
inline LinearCode span_enumerate(const GeneratorMatrix& g,
                                 std::uint64_t limit = kDefaultEnumLimit) {
    if (limit == 0) {
        throw InputError("enumeration limit must be positive");
    }
    const StandardForm sf = standard_form(g);
    const std::uint64_t m = sf.size();
    if (m > limit) {
        throw CapacityError("span of size " + std::to_string(m) +
                            " exceeds the enumeration limit " + std::to_string(limit));
    }
    const std::size_t n = g.cols();

    constexpr std::uint64_t kClosureThreshold = std::uint64_t{1} << 16;
    std::vector<RingVector> words;
    words.reserve(static_cast<std::size_t>(m));

    if (m <= kClosureThreshold) {
        // generator set: all distinct nonzero multiples of the original rows
        std::vector<RingVector> gens;
        for (const auto& row : g.rows()) {
            for (auto& mult : row_multiples(row)) {
                if (!is_zero_vector(mult) &&
                    std::find(gens.begin(), gens.end(), mult) == gens.end()) {
                    gens.push_back(std::move(mult));
                }
            }
        }
        auto pack = [n](const RingVector& v) {
            std::string key(n, '\0');
            for (std::size_t c = 0; c < n; ++c) {
                key[c] = static_cast<char>(v[c].code());
            }
            return key;
        };
        std::unordered_set<std::string> seen;
        words.emplace_back(n, RingElement::of(0, 0));
        seen.insert(pack(words.front()));
        for (std::size_t head = 0; head < words.size(); ++head) {
            const RingVector base = words[head];
            for (const auto& gen : gens) {
                RingVector next = vec_add(base, gen);
                if (seen.insert(pack(next)).second) {
                    words.push_back(std::move(next));
                }
            }
        }
    } else {
        detail::walk_span(sf, [&](const RingVector& w) {
            RingVector original(n, RingElement::of(0, 0));
            for (std::size_t p = 0; p < n; ++p) {
                original[sf.col_perm[p]] = w[p];
            }
            words.push_back(std::move(original));
            return true;
        });
    }

    LinearCode code(n, std::move(words));
    if (code.size() != m) {
        throw std::logic_error("span size disagrees with the staircase type");
    }
    return code;
}

namespace detail {

// F2 row space of coset patterns, kept as an eliminated mask basis.
struct PatternBasis {
    std::vector<std::uint64_t> masks;

    // returns true when the mask was independent of the current basis
    bool add(std::uint64_t mask) {
        for (const std::uint64_t b : masks) {
            const std::uint64_t top = std::uint64_t{1} << (63 - __builtin_clzll(b));
            if (mask & top) {
                mask ^= b;
            }
        }
        if (mask == 0) {
            return false;
        }
        masks.push_back(mask);
        std::sort(masks.begin(), masks.end(), std::greater<>());
        return true;
    }
};

inline std::uint64_t coset_pattern(const RingVector& v) {
    std::uint64_t mask = 0;
    for (std::size_t c = 0; c < v.size(); ++c) {
        if (translation_coset(v[c]) == 1) {
            mask |= std::uint64_t{1} << c;
        }
    }
    return mask;
}

// Exact minimum pairwise Gau distance given the minimum nonzero weight u,
// the candidate difference vectors whose per-coordinate best translate cost
// sums below u, and the coset-pattern space of the code. For candidate c and
// codeword y, d(y + c, y) depends on y only through its coset pattern, so
// minimizing over the pattern space restricted to the support of c is exact.
inline int refine_pairwise(int u,
                           const std::vector<RingVector>& candidates,
                           const PatternBasis& basis) {
    int best = u;
    for (const auto& cand : candidates) {
        std::vector<std::size_t> supp;
        for (std::size_t c = 0; c < cand.size(); ++c) {
            if (!cand[c].is_zero()) {
                supp.push_back(c);
            }
        }
        PatternBasis proj;
        for (const std::uint64_t b : basis.masks) {
            std::uint64_t p = 0;
            for (std::size_t k = 0; k < supp.size(); ++k) {
                if (b & (std::uint64_t{1} << supp[k])) {
                    p |= std::uint64_t{1} << k;
                }
            }
            proj.add(p);
        }
        if (proj.masks.size() > 20) {
            throw CapacityError("distance refinement space too large");
        }
        // Gray-code walk over the projected pattern space.
        std::uint64_t pattern = 0;
        int cost = 0;
        for (const std::size_t pos : supp) {
            cost += translate_cost(cand[pos], 0);
        }
        best = std::min(best, cost);
        const std::uint64_t count = std::uint64_t{1} << proj.masks.size();
        for (std::uint64_t i = 1; i < count; ++i) {
            const int flip = __builtin_ctzll(i);
            pattern ^= proj.masks[static_cast<std::size_t>(flip)];
            cost = 0;
            for (std::size_t k = 0; k < supp.size(); ++k) {
                const int coset = static_cast<int>((pattern >> k) & 1);
                cost += translate_cost(cand[supp[k]], coset);
            }
            best = std::min(best, cost);
            if (best == 1) {
                return best;
            }
        }
    }
    return best;
}

inline int potential_cost(const RingVector& v) {
    int total = 0;
    for (const RingElement e : v) {
        total += min_translate_cost(e);
    }
    return total;
}

}  // namespace detail

enum class DistanceMode { pairwise, weight };

// Exact minimum Gau distance of a materialized code. Weight mode returns the
// minimum nonzero Gau weight; pairwise mode returns the true minimum over
// distinct pairs, which can differ because Gau distance is invariant only
// under translation by the index-2 subgroup.
inline int min_gau_distance(const LinearCode& code,
                            DistanceMode mode = DistanceMode::pairwise) {
    if (code.size() < 2) {
        throw UndefinedDistanceError("minimum distance needs at least two codewords");
    }
    const auto& words = code.codewords();
    const std::size_t n = code.length();

    int u = std::numeric_limits<int>::max();
    for (const auto& w : words) {
        if (is_zero_vector(w)) {
            continue;
        }
        u = std::min(u, gau_weight_vec(w));
        if (u == 1) {
            break;
        }
    }
    if (mode == DistanceMode::weight || u == 1) {
        return u;
    }

    constexpr std::uint64_t kDirectThreshold = std::uint64_t{1} << 13;
    if (code.size() <= kDirectThreshold) {
        int best = u;
        for (std::size_t i = 0; i + 1 < words.size() && best > 1; ++i) {
            for (std::size_t j = i + 1; j < words.size(); ++j) {
                const int d = gau_dist_vec(words[i], words[j]);
                if (d < best) {
                    best = d;
                    if (best == 1) {
                        break;
                    }
                }
            }
        }
        return best;
    }

    if (n > 64) {
        throw CapacityError("pairwise distance supports at most 64 coordinates");
    }
    std::vector<RingVector> candidates;
    detail::PatternBasis basis;
    for (const auto& w : words) {
        basis.add(detail::coset_pattern(w));
        if (!is_zero_vector(w) && detail::potential_cost(w) < u) {
            candidates.push_back(w);
            if (candidates.size() > (std::size_t{1} << 20)) {
                throw CapacityError("too many distance refinement candidates");
            }
        }
    }
    return detail::refine_pairwise(u, candidates, basis);
}

struct ClosureFlags {
    bool reverse = false;
    bool complement = false;
    bool reverse_complement = false;

    friend bool operator==(const ClosureFlags&, const ClosureFlags&) = default;
};

// For a linear code, closure under the reverse image holds exactly when the
// image of every generator row lies back in the span, because the image map
// is linear. The reverse-complement image of a sum is the reversed negated
// sum plus a single all-(2+2w) offset, so that closure holds exactly when
// reverse closure and complement closure both hold.
inline bool is_reverse_closed_rows(const GeneratorMatrix& g) {
    const StandardForm sf = standard_form(g);
    for (const auto& row : g.rows()) {
        if (!sf.contains(ring_reverse_image(row))) {
            return false;
        }
    }
    return true;
}

inline bool is_complement_closed(const GeneratorMatrix& g) {
    const StandardForm sf = standard_form(g);
    const RingVector shift(g.cols(), RingElement::of(2, 2));
    return sf.contains(shift);
}

inline ClosureFlags generator_closures(const GeneratorMatrix& g) {
    ClosureFlags flags;
    flags.reverse = is_reverse_closed_rows(g);
    flags.complement = is_complement_closed(g);
    flags.reverse_complement = flags.reverse && flags.complement;
    return flags;
}

// Maps a ring code to its DNA code. The Gau map is an isometry, so when the
// ring distance is already known it transfers directly.
inline DnaCode to_dna_code(const LinearCode& code,
                           std::optional<int> known_min_distance = std::nullopt) {
    std::vector<std::string> words;
    words.reserve(static_cast<std::size_t>(code.size()));
    for (const auto& w : code.codewords()) {
        words.push_back(phi_vec(w));
    }
    return DnaCode(std::move(words), known_min_distance);
}

struct CodeMeasurement {
    CodeType type;
    std::uint64_t size = 0;
    std::size_t length = 0;
    int min_distance = 0;
    int min_weight = 0;
    ClosureFlags closures;
    bool enumerated = false;
};

namespace detail {

// Exact minimum pairwise distance straight from the staircase, without
// materializing the span: one walk for the minimum nonzero weight, one walk
// to collect candidates, and the refinement over the coset-pattern space
// spanned by the generator multiples' patterns.
inline std::pair<int, int> streamed_distances(const StandardForm& sf) {
    if (sf.cols > 64) {
        throw CapacityError("pairwise distance supports at most 64 coordinates");
    }
    int u = std::numeric_limits<int>::max();
    walk_span(sf, [&](const RingVector& w) {
        if (is_zero_vector(w)) {
            return true;
        }
        const int weight = gau_weight_vec(w);
        if (weight < u) {
            u = weight;
        }
        return u > 1;
    });
    if (u == 1) {
        return {1, 1};
    }

    std::vector<RingVector> candidates;
    walk_span(sf, [&](const RingVector& w) {
        if (!is_zero_vector(w) && potential_cost(w) < u) {
            candidates.push_back(w);
            if (candidates.size() > (std::size_t{1} << 20)) {
                throw CapacityError("too many distance refinement candidates");
            }
        }
        return true;
    });

    PatternBasis basis;
    for (const auto& row : sf.rows) {
        for (const auto& mult : row_multiples(row)) {
            basis.add(coset_pattern(mult));
        }
    }
    // Candidates and basis live in permuted coordinates; distance is a
    // coordinatewise sum, so the permutation is irrelevant.
    return {refine_pairwise(u, candidates, basis), u};
}

}  // namespace detail

// Full measurement of the code spanned by g: staircase type and size, exact
// minimum pairwise Gau distance, minimum nonzero Gau weight, and closure
// flags. Codes up to the enumeration threshold are materialized; larger ones
// are measured by streaming over the staircase product, so the measurement
// itself never fails on size.
inline CodeMeasurement measure_code(const GeneratorMatrix& g,
                                    std::uint64_t enum_limit = kDefaultEnumLimit) {
    const StandardForm sf = standard_form(g);
    CodeMeasurement out;
    out.type = sf.type;
    out.size = sf.size();
    out.length = g.cols();
    out.closures = generator_closures(g);

    constexpr std::uint64_t kMeasureEnumThreshold = std::uint64_t{1} << 13;
    if (out.size >= 2) {
        if (out.size <= std::min(enum_limit, kMeasureEnumThreshold)) {
            const LinearCode code = span_enumerate(g, enum_limit);
            out.min_weight = min_gau_distance(code, DistanceMode::weight);
            out.min_distance = min_gau_distance(code, DistanceMode::pairwise);
            out.enumerated = true;
        } else {
            const auto [dist, weight] = detail::streamed_distances(sf);
            out.min_distance = dist;
            out.min_weight = weight;
        }
    }
    return out;
}

}  // namespace gaucode
