#pragma once

// Code file formats: FASTA, CSV and JSON exports of DNA codes, the ring-code
// text format, and bare word lists. Writers emit words in the code's sorted
// order, so exports are deterministic. Readers reject malformed input with
// InputError and never return partially validated words.

#include <charconv>
#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gaucode/dna.hpp"
#include "gaucode/errors.hpp"
#include "gaucode/gau.hpp"
#include "gaucode/ring.hpp"

namespace gaucode {

enum class CodeFormat { fasta, csv, json };

inline CodeFormat parse_format(std::string_view name) {
    if (name == "fasta") return CodeFormat::fasta;
    if (name == "csv") return CodeFormat::csv;
    if (name == "json") return CodeFormat::json;
    throw InputError("unknown format '" + std::string(name) + "' (expected fasta, csv or json)");
}

inline std::string_view format_name(CodeFormat f) {
    switch (f) {
        case CodeFormat::fasta: return "fasta";
        case CodeFormat::csv: return "csv";
        default: return "json";
    }
}

namespace detail {

inline std::string trimmed(std::string_view s) {
    const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && ws(s.front())) s.remove_prefix(1);
    while (!s.empty() && ws(s.back())) s.remove_suffix(1);
    return std::string(s);
}

}  // namespace detail

// ---- FASTA ----

inline void write_fasta(std::ostream& out, const DnaCode& code, const std::string& family) {
    const auto& words = code.words();
    for (std::size_t i = 0; i < words.size(); ++i)
        out << ">family=" << family << ";index=" << i << ";gc=" << gc_weight(words[i]) << '\n'
            << words[i] << '\n';
}

// Accepts wrapped sequence lines; blank lines are ignored anywhere.
inline std::vector<std::string> read_fasta(std::istream& in) {
    std::vector<std::string> words;
    std::string current;
    bool open = false;
    const auto flush = [&]() {
        if (!open) return;
        if (current.empty()) throw InputError("FASTA record with an empty sequence");
        validate_dna_word(current);
        words.push_back(current);
        current.clear();
    };
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = detail::trimmed(line);
        if (t.empty()) continue;
        if (t.front() == '>') {
            flush();
            open = true;
        } else {
            if (!open) throw InputError("FASTA sequence data before the first '>' header");
            current += t;
        }
    }
    flush();
    return words;
}

// ---- CSV ----

inline void write_csv(std::ostream& out, const DnaCode& code) {
    out << "index,word,gc\n";
    const auto& words = code.words();
    for (std::size_t i = 0; i < words.size(); ++i)
        out << i << ',' << words[i] << ',' << gc_weight(words[i]) << '\n';
}

inline std::vector<std::string> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || detail::trimmed(line) != "index,word,gc")
        throw InputError("CSV code file must start with the header 'index,word,gc'");
    std::vector<std::string> words;
    while (std::getline(in, line)) {
        const std::string t = detail::trimmed(line);
        if (t.empty()) continue;
        const std::size_t c1 = t.find(',');
        const std::size_t c2 = (c1 == std::string::npos) ? std::string::npos : t.find(',', c1 + 1);
        if (c2 == std::string::npos || t.find(',', c2 + 1) != std::string::npos)
            throw InputError("CSV row needs exactly three fields: '" + t + "'");
        const std::string word = t.substr(c1 + 1, c2 - c1 - 1);
        validate_dna_word(word);
        words.push_back(word);
    }
    return words;
}

// ---- JSON ----

inline void write_json(std::ostream& out, const DnaCode& code, const std::string& family) {
    nlohmann::json doc;
    doc["family"] = family;
    doc["n"] = code.length();
    doc["size"] = code.size();
    if (code.size() >= 2) doc["min_distance"] = code.min_distance();
    else doc["min_distance"] = nullptr;
    doc["words"] = code.words();
    out << doc.dump(2) << '\n';
}

inline std::vector<std::string> read_json(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(std::string("bad JSON code file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("words") || !doc["words"].is_array())
        throw InputError("JSON code file needs a top-level object with a 'words' array");
    std::vector<std::string> words;
    for (const auto& entry : doc["words"]) {
        if (!entry.is_string()) throw InputError("JSON 'words' entries must be strings");
        std::string w = entry.get<std::string>();
        validate_dna_word(w);
        words.push_back(std::move(w));
    }
    return words;
}

inline void write_code(std::ostream& out, const DnaCode& code, const std::string& family,
                       CodeFormat fmt) {
    switch (fmt) {
        case CodeFormat::fasta: write_fasta(out, code, family); break;
        case CodeFormat::csv: write_csv(out, code); break;
        case CodeFormat::json: write_json(out, code, family); break;
    }
}

// ---- ring-code files: "n=<length>" then one codeword per line ----

inline void write_ring_code(std::ostream& out, const std::vector<RingVector>& codewords) {
    if (codewords.empty()) throw InputError("ring-code file needs at least one codeword");
    const std::size_t n = codewords.front().size();
    out << "n=" << n << '\n';
    for (const RingVector& row : codewords) {
        if (row.size() != n) throw DimensionError("ring-code rows must share one length");
        out << format_vector(row, ",") << '\n';
    }
}

inline std::vector<RingVector> read_ring_code(std::istream& in) {
    std::string line, first;
    while (std::getline(in, line)) {
        first = detail::trimmed(line);
        if (!first.empty()) break;
    }
    if (first.size() < 3 || first.compare(0, 2, "n=") != 0)
        throw InputError("ring-code file must start with 'n=<length>'");
    std::size_t n = 0;
    const char* begin = first.data() + 2;
    const char* end = first.data() + first.size();
    const auto [ptr, ec] = std::from_chars(begin, end, n);
    if (ec != std::errc{} || ptr != end || n == 0)
        throw InputError("bad length in ring-code header: '" + first + "'");
    std::vector<RingVector> rows;
    while (std::getline(in, line)) {
        const std::string t = detail::trimmed(line);
        if (t.empty()) continue;
        RingVector v = parse_vector(t);
        if (v.size() != n) throw DimensionError("ring-code row length disagrees with the header");
        rows.push_back(std::move(v));
    }
    return rows;
}

// ---- bare word lists ----

inline std::vector<std::string> read_words(std::istream& in) {
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        const std::string t = detail::trimmed(line);
        if (t.empty()) continue;
        validate_dna_word(t);
        words.push_back(t);
    }
    return words;
}

// Sniffs the format from the first non-empty line: '>' FASTA, '{' JSON, 'n='
// a ring-code file (codewords map to DNA words through the Gau map), the
// exact CSV header, anything else a bare word list.
inline std::vector<std::string> read_dna_file(std::istream& in) {
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    std::string head;
    {
        std::istringstream scan(text);
        std::string line;
        while (std::getline(scan, line)) {
            head = detail::trimmed(line);
            if (!head.empty()) break;
        }
    }
    if (head.empty()) throw InputError("empty code file");
    std::istringstream body(text);
    if (head.front() == '>') return read_fasta(body);
    if (head.front() == '{') return read_json(body);
    if (head.size() >= 2 && head[0] == 'n' && head[1] == '=') {
        std::vector<std::string> words;
        for (const RingVector& row : read_ring_code(body)) words.push_back(phi_vec(row));
        return words;
    }
    if (head == "index,word,gc") return read_csv(body);
    return read_words(body);
}

}  // namespace gaucode
