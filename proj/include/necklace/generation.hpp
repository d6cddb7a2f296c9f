#pragma once

#include <functional>
#include <optional>

#include "necklace/word.hpp"

namespace necklace {

// A prenecklace is a prefix (in slices) of some necklace representative with a
// longer last dimension.
bool is_prenecklace(const Word& w);

struct NextPrenecklace {
    Word word;
    bool is_necklace = false;
};

// Smallest prenecklace greater than w.  Requires w to be a prenecklace other
// than the all-q word.
NextPrenecklace next_prenecklace(const Word& w);

// Smallest necklace representative strictly greater than w (w may be any
// word), or nothing after the all-q word.  `calls`, when given, receives the
// number of next_prenecklace steps taken.
std::optional<Word> next_necklace(const Word& w, int* calls = nullptr);

// Calls `emit` for every representative of size n in increasing order; stops early
// when `emit` returns false.
void enumerate(const SizeVec& n, int q, const std::function<bool(const Word&)>& emit);

// Next slice class: the smallest necklace representative of the slice size
// greater than the representative c, for slices of any dimension (0-dimensional
// slices are single symbols).
std::optional<Word> next_class(const Word& c);

}  // namespace necklace
