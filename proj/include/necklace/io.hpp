#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "necklace/word.hpp"

namespace necklace {

// {"q": q, "size": [n_1, ..., n_d], "data": [symbols in linear-index order]}
nlohmann::ordered_json word_to_json(const Word& w);
Word word_from_json(const nlohmann::json& j);

// Accepts the JSON form, the inline form "[ab;ba]" (slices separated by ';'),
// a text grid with one slice per line, or a bare 1D string.  Letters a..z
// encode symbols when q <= 26; larger alphabets use comma-separated integers.
// `size` reshapes text input (required for d >= 3); `q` defaults to 2 or the
// largest symbol seen.
Word parse_word(const std::string& text, const std::optional<SizeVec>& size = std::nullopt,
                std::optional<int> q = std::nullopt);

SizeVec parse_size(const std::string& text);

}  // namespace necklace
