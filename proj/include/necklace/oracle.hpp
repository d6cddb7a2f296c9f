#pragma once

#include <cstdint>
#include <vector>

#include "necklace/word.hpp"

namespace necklace {

// Brute-force ground truth.  Enumerates every word of the given size and only
// relies on the word primitives (translation, slice comparison).
struct OracleCensus {
    SizeVec size;
    int q = 2;
    // Necklace representatives in increasing order, stored as base-q codes
    // (cell p contributes (symbol - 1) * q^p).
    std::vector<uint64_t> codes;
    std::vector<char> lyndon;
    std::vector<char> atranslational;
    long long lyndon_count = 0;
    long long atranslational_count = 0;
    // Orbit count by Burnside's lemma over explicit cycle decompositions.
    long long burnside = 0;

    size_t size_count() const { return codes.size(); }
    Word word(size_t i) const;
    std::vector<Word> necklaces() const;
    std::vector<Word> lyndon_words() const;
    std::vector<Word> atranslational_words() const;
    std::vector<Word> with_content(const std::vector<int>& p) const;
};

// Maximum number of words the oracle will enumerate.  Defaults to 2^24 and can
// be overridden with the NECKLACE_ORACLE_GUARD environment variable.
uint64_t oracle_guard();

OracleCensus census(const SizeVec& n, int q);
uint64_t word_code(const Word& w);
Word word_from_code(uint64_t code, const SizeVec& n, int q);

// Position of w in the sorted necklace list; throws InvalidInput if absent.
long long oracle_rank(const Word& w, const OracleCensus& c);
// Number of necklaces whose representative is smaller than w (any word).
long long oracle_count_below(const Word& w, const OracleCensus& c);
Ratio oracle_distance(const Word& a, const Word& b);
// Largest distance from any necklace to its nearest centre.
Ratio oracle_max_distance(const std::vector<Word>& centres, const OracleCensus& c);

// Direct-definition counts for the slice-partition building blocks: words of
// size (f', i) starting with w's first j slices whose every translated suffix
// exceeds w's prefix, and slices of size f' above slice j of w.
long long oracle_beta(const Word& w, int i, int j, const SizeVec& f);
long long oracle_ns(const Word& w, int j, const SizeVec& f);

}  // namespace necklace
