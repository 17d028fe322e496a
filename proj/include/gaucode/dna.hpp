#pragma once

// DNA alphabet utilities and explicit fixed-length DNA block codes.

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gaucode/errors.hpp"

namespace gaucode {

constexpr bool is_dna_base(char c) noexcept {
    return c == 'A' || c == 'C' || c == 'G' || c == 'T';
}

constexpr char complement_base(char c) {
    switch (c) {
        case 'A': return 'T';
        case 'T': return 'A';
        case 'G': return 'C';
        case 'C': return 'G';
        default: throw InputError("invalid DNA base");
    }
}

inline void validate_dna_word(std::string_view w) {
    if (w.empty()) throw InputError("empty DNA word");
    for (char c : w)
        if (!is_dna_base(c)) throw InputError("invalid DNA base '" + std::string(1, c) + "'");
}

inline std::string dna_reverse(std::string_view w) {
    return std::string(w.rbegin(), w.rend());
}

inline std::string dna_complement(std::string_view w) {
    std::string out;
    out.reserve(w.size());
    for (char c : w) out.push_back(complement_base(c));
    return out;
}

inline std::string dna_reverse_complement(std::string_view w) {
    std::string out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(complement_base(*it));
    return out;
}

inline int gc_weight(std::string_view w) {
    int count = 0;
    for (char c : w)
        if (c == 'G' || c == 'C') ++count;
    return count;
}

inline int hamming(std::string_view x, std::string_view y) {
    if (x.size() != y.size()) throw DimensionError("hamming distance needs equal lengths");
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++d;
    return d;
}

// A set of equal-length DNA words, stored sorted and deduplicated. The minimum
// Hamming distance is computed pairwise at construction unless the caller
// already knows it (e.g. it equals the Gau distance of a preimage ring code).
class DnaCode {
  public:
    explicit DnaCode(std::vector<std::string> words,
                     std::optional<int> known_min_distance = std::nullopt)
        : words_(std::move(words)) {
        // an empty code is allowed: filters may remove every word
        n_ = words_.empty() ? 0 : words_.front().size();
        for (const std::string& w : words_) {
            validate_dna_word(w);
            if (w.size() != n_) throw DimensionError("DNA code words must share one length");
        }
        std::sort(words_.begin(), words_.end());
        words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
        if (known_min_distance) d_ = known_min_distance;
        else if (words_.size() >= 2) d_ = pairwise_min();
    }

    std::size_t length() const noexcept { return n_; }
    std::size_t size() const noexcept { return words_.size(); }
    const std::vector<std::string>& words() const noexcept { return words_; }

    bool contains(std::string_view w) const {
        const auto it = std::lower_bound(
            words_.begin(), words_.end(), w,
            [](const std::string& a, std::string_view b) { return std::string_view(a) < b; });
        return it != words_.end() && std::string_view(*it) == w;
    }

    int min_distance() const {
        if (!d_) throw UndefinedDistanceError("minimum distance needs at least 2 codewords");
        return *d_;
    }

  private:
    int pairwise_min() const {
        int best = static_cast<int>(n_) + 1;
        for (std::size_t i = 0; i + 1 < words_.size(); ++i) {
            for (std::size_t j = i + 1; j < words_.size(); ++j) {
                best = std::min(best, hamming(words_[i], words_[j]));
                if (best == 1) return best;
            }
        }
        return best;
    }

    std::size_t n_ = 0;
    std::vector<std::string> words_;
    std::optional<int> d_;
};

}  // namespace gaucode
