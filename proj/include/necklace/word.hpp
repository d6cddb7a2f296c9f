#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace necklace {

using BigInt = boost::multiprecision::cpp_int;
using Ratio = boost::multiprecision::cpp_rational;

// Dimension vector (n_1, ..., n_d).  The last coordinate is the slicing one.
using SizeVec = std::vector<int>;
// Offsets (g_1, ..., g_d) with 0 <= g_i < n_i.
using Translation = std::vector<int>;

class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

long long volume(const SizeVec& n);
void check_size(const SizeVec& n);

// Cells are stored in linear-index order, first coordinate fastest.
// Symbols are 1..q.
struct Word {
    SizeVec size;
    int q = 2;
    std::vector<uint8_t> cells;

    Word() = default;
    Word(SizeVec n, int alphabet);
    Word(SizeVec n, int alphabet, std::vector<uint8_t> data);

    int dim() const { return static_cast<int>(size.size()); }
    int count() const { return static_cast<int>(cells.size()); }
    int slices() const { return size.empty() ? 1 : size.back(); }
    bool operator==(const Word& o) const = default;
};

Word constant_word(const SizeVec& n, int q, int symbol);

// Precomputed coordinate tables and translation permutations for one size.
class Shape {
public:
    static std::shared_ptr<const Shape> of(const SizeVec& n);

    SizeVec dims;
    int N = 1;
    std::vector<int> stride;

    int lin(const std::vector<int>& p) const;
    std::vector<int> coords(int index) const;
    // Position reached from cell `p` by adding translation `g` (both linear indices).
    int shift(int p, int g) const;
    // perm(g)[p] = shift(p, g); translate(w, g).cells[p] = w.cells[perm(g)[p]].
    const std::vector<int>& perm(int g) const;
    int add(int a, int b) const { return shift(a, b); }
    int neg(int g) const;
    int order(int g) const;

private:
    std::vector<std::vector<int>> perms_;
    std::vector<int> coord_;
};

int index_of(const Translation& g, const SizeVec& n);
Translation translation_at(int index, const SizeVec& n);

Word translate(const Word& w, const Translation& g);
Word translate_index(const Word& w, int g);

// Total order on same-size words: -1, 0, 1.
int compare(const Word& a, const Word& b);
// Comparison across sizes where every b.size[i] divides a.size[i]; b is tiled up first.
int compare_tiled(const Word& a, const Word& b);

struct Canonical {
    Word word;
    Translation offset;
    int offset_index = 0;
};

Canonical canonicalize(const Word& w);
bool is_canonical(const Word& w);
// Least rotation of a 1D word by the two-pointer minimum-expression scan.
int least_rotation(const std::vector<uint8_t>& s);

struct Period {
    SizeVec size;
    Word base;
};
Period period(const Word& w);
bool is_aperiodic(const Word& w);

struct Symmetry {
    std::vector<Translation> fixing;
    long long distinct = 0;
};
Symmetry symmetry(const Word& w);
std::vector<int> stabilizer_indices(const Word& w);
bool is_atranslational(const Word& w);

std::vector<int> parikh(const Word& w);

// Cyclic subword with top-left corner p (0-based) and size m.
Word subword(const Word& w, const std::vector<int>& p, const SizeVec& m);
// 0-based slice along the last coordinate; a word of dimension d-1.
Word slice(const Word& w, int i);
Word stack_slices(const std::vector<Word>& parts, const SizeVec& cross, int q);
Word slice_range(const Word& w, int from, int len);
Word tile(const Word& w, const SizeVec& n);
SizeVec cross_section(const SizeVec& n);

// Raw cell-level helpers used by the counting engines.
int compare_cells(const uint8_t* a, const uint8_t* b, const SizeVec& n);
// Order of two words of size n when they appear as slices of a larger word:
// by necklace class first, then by the offset reaching the class representative.
int compare_as_slices(const uint8_t* a, const uint8_t* b, const SizeVec& n);
// Writes the canonical form into `out`, returns the smallest translation index reaching it.
int canonical_cells(const uint8_t* w, const SizeVec& n, std::vector<uint8_t>& out);
void translate_cells(const uint8_t* src, uint8_t* dst, const Shape& shape, int g);

// Rendering and parsing of words.
std::string render_text(const Word& w);
std::string render_inline(const Word& w);

}  // namespace necklace
