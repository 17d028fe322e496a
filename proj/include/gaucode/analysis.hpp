#pragma once

// DNA-side verification: closure checks on explicit codes, the cross
// reverse-complement distance statistic, GC-content filtering, and the
// lower-bound report over the registered family instances.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "gaucode/dna.hpp"
#include "gaucode/errors.hpp"
#include "gaucode/families.hpp"

namespace gaucode {

// Exhaustive membership of every word's reverse, complement, and reverse
// complement. Vacuously true on an empty code.
inline ClosureFlags check_closures(const DnaCode& code) {
    ClosureFlags flags{true, true, true};
    for (const std::string& w : code.words()) {
        if (flags.reverse && !code.contains(dna_reverse(w))) {
            flags.reverse = false;
        }
        if (flags.complement && !code.contains(dna_complement(w))) {
            flags.complement = false;
        }
        if (flags.reverse_complement && !code.contains(dna_reverse_complement(w))) {
            flags.reverse_complement = false;
        }
        if (!flags.reverse && !flags.complement && !flags.reverse_complement) {
            break;
        }
    }
    return flags;
}

// Minimum Hamming distance between any word and any reverse-complement
// image, the pair of a word with its own image included. Zero whenever some
// image is itself a codeword.
inline int rc_cross_distance(const DnaCode& code) {
    if (code.size() < 1) {
        throw InputError("cross distance needs at least one word");
    }
    int best = std::numeric_limits<int>::max();
    for (const std::string& y : code.words()) {
        const std::string image = dna_reverse_complement(y);
        for (const std::string& x : code.words()) {
            best = std::min(best, hamming(x, image));
            if (best == 0) {
                return 0;
            }
        }
    }
    return best;
}

struct GcFilterSpec {
    int u = 0;
    // also removes weight-0 and weight-n words; redundant unless u is 0 or n
    bool drop_trivial = false;
};

// Keeps exactly the words whose GC weight equals u. The result can be empty.
inline DnaCode gc_filter(const DnaCode& code, const GcFilterSpec& spec) {
    if (spec.u < 0 || static_cast<std::size_t>(spec.u) > code.length()) {
        throw InputError("GC target must lie between 0 and the word length");
    }
    const int n = static_cast<int>(code.length());
    std::vector<std::string> kept;
    for (const std::string& w : code.words()) {
        const int weight = gc_weight(w);
        if (weight != spec.u) {
            continue;
        }
        if (spec.drop_trivial && (weight == 0 || weight == n)) {
            continue;
        }
        kept.push_back(w);
    }
    return DnaCode(std::move(kept));
}

struct BoundRecord {
    std::string family;
    int n = 0;
    // measured minimum distance of the unfiltered source code
    int d_h = 0;
    int u = 0;
    std::uint64_t filtered_size = 0;
    // closure flags of the filtered code
    ClosureFlags closures;
};

// Scans the registered family instances with DNA length n and measured
// distance at least d, reporting the exact-weight-u filtered size and the
// filtered code's closure flags, sorted by filtered size descending. An
// empty report means no instance qualified.
inline std::vector<BoundRecord> bound_report(int n, int d, int u,
                                             std::uint64_t enum_limit = kDefaultEnumLimit) {
    if (n < 1 || d < 0 || u < 0 || u > n) {
        throw InputError("bound query needs n >= 1, d >= 0, and 0 <= u <= n");
    }
    std::vector<BoundRecord> out;
    for (const FamilyInstance& inst : standard_instances()) {
        if (2 * inst.matrix.cols() != static_cast<std::size_t>(n)) {
            continue;
        }
        const CodeMeasurement m = measure_code(inst.matrix, enum_limit);
        if (m.size < 2 || m.min_distance < d) {
            continue;
        }
        const DnaCode dna = to_dna_code(span_enumerate(inst.matrix, enum_limit), m.min_distance);
        const DnaCode filtered = gc_filter(dna, GcFilterSpec{u, false});
        BoundRecord rec;
        rec.family = inst.label;
        rec.n = n;
        rec.d_h = m.min_distance;
        rec.u = u;
        rec.filtered_size = filtered.size();
        rec.closures = check_closures(filtered);
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(), [](const BoundRecord& a, const BoundRecord& b) {
        if (a.filtered_size != b.filtered_size) {
            return a.filtered_size > b.filtered_size;
        }
        return a.family < b.family;
    });
    return out;
}

}  // namespace gaucode
