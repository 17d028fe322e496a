#include <catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "gaucode/dna.hpp"

namespace {

const std::vector<std::string> kSixteenWords = {
    "AGAG", "AGGA", "AGCT", "AGTC", "GAAG", "GAGA", "GACT", "GATC",
    "CTAG", "CTGA", "CTCT", "CTTC", "TCAG", "TCGA", "TCCT", "TCTC",
};

}  // namespace

TEST_CASE("string operators: reverse, complement, reverse-complement", "[dna]") {
    REQUIRE(gaucode::dna_reverse("AACT") == "TCAA");
    REQUIRE(gaucode::dna_reverse_complement("AACT") == "AGTT");
    REQUIRE(gaucode::dna_complement("AACT") == "TTGA");
    for (const std::string w : {"A", "ACGT", "GGTACC", "TTTTTTTA"}) {
        REQUIRE(gaucode::dna_reverse(gaucode::dna_reverse(w)) == w);
        REQUIRE(gaucode::dna_complement(gaucode::dna_complement(w)) == w);
        REQUIRE(gaucode::dna_reverse_complement(gaucode::dna_reverse_complement(w)) == w);
        REQUIRE(gaucode::dna_reverse_complement(w) ==
                gaucode::dna_complement(gaucode::dna_reverse(w)));
        REQUIRE(gaucode::dna_reverse_complement(w) ==
                gaucode::dna_reverse(gaucode::dna_complement(w)));
    }
    REQUIRE_THROWS_AS(gaucode::complement_base('X'), gaucode::InputError);
    REQUIRE_THROWS_AS(gaucode::dna_complement("ACXT"), gaucode::InputError);
}

TEST_CASE("hamming distance counts differing positions", "[dna]") {
    REQUIRE(gaucode::hamming("AGAG", "GAAG") == 2);
    REQUIRE(gaucode::hamming("AGAG", "AGAG") == 0);
    REQUIRE(gaucode::hamming("AAAA", "TTTT") == 4);
    REQUIRE_THROWS_AS(gaucode::hamming("AA", "AAA"), gaucode::DimensionError);
    // metric axioms on a few triples
    const std::string a = "ACGTACGT", b = "TCGAACGG", c = "ACGAACGG";
    REQUIRE(gaucode::hamming(a, b) == gaucode::hamming(b, a));
    REQUIRE(gaucode::hamming(a, b) <= gaucode::hamming(a, c) + gaucode::hamming(c, b));
}

TEST_CASE("gc_weight counts G and C symbols", "[dna]") {
    REQUIRE(gaucode::gc_weight("AA") == 0);
    REQUIRE(gaucode::gc_weight("GGAATTGG") == 4);
    REQUIRE(gaucode::gc_weight("GC") == 2);
    REQUIRE(gaucode::gc_weight("ACGT") == 2);
}

TEST_CASE("DnaCode stores a sorted deduplicated word set", "[dna]") {
    gaucode::DnaCode code({"TT", "AA", "TT", "GG"});
    REQUIRE(code.size() == 3);
    REQUIRE(code.length() == 2);
    REQUIRE(code.words() == std::vector<std::string>{"AA", "GG", "TT"});
    REQUIRE(code.contains("GG"));
    REQUIRE_FALSE(code.contains("CC"));
    REQUIRE(code.min_distance() == 2);
}

TEST_CASE("DnaCode validates its input", "[dna]") {
    const gaucode::DnaCode empty({});
    REQUIRE(empty.size() == 0);
    REQUIRE(empty.length() == 0);
    REQUIRE(!empty.contains("AA"));
    REQUIRE_THROWS_AS(empty.min_distance(), gaucode::UndefinedDistanceError);
    REQUIRE_THROWS_AS(gaucode::DnaCode({"AA", "AXA"}), gaucode::InputError);
    REQUIRE_THROWS_AS(gaucode::DnaCode({"AA", "AAA"}), gaucode::DimensionError);
    REQUIRE_THROWS_AS(gaucode::DnaCode({"AA"}).min_distance(),
                      gaucode::UndefinedDistanceError);
}

TEST_CASE("DnaCode accepts a precomputed minimum distance", "[dna]") {
    gaucode::DnaCode code(kSixteenWords, 2);
    REQUIRE(code.min_distance() == 2);
    gaucode::DnaCode recomputed(kSixteenWords);
    REQUIRE(recomputed.min_distance() == 2);
    REQUIRE(recomputed.size() == 16);
}
