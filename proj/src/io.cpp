#include "necklace/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace necklace {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.push_back("");
    return out;
}

// Symbols of one row: letters, or comma-separated integers.
std::vector<int> row_symbols(const std::string& row) {
    std::string r = trim(row);
    std::vector<int> out;
    if (r.empty()) throw InvalidInput("empty row in word");
    if (std::isdigit(static_cast<unsigned char>(r[0]))) {
        for (const auto& tok : split(r, ',')) {
            std::string t = trim(tok);
            if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                throw InvalidInput("bad symbol '" + t + "'");
            out.push_back(std::stoi(t));
        }
        return out;
    }
    for (char c : r) {
        if (c < 'a' || c > 'z') throw InvalidInput(std::string("bad symbol '") + c + "'");
        out.push_back(c - 'a' + 1);
    }
    return out;
}

}  // namespace

nlohmann::ordered_json word_to_json(const Word& w) {
    nlohmann::ordered_json j;
    j["q"] = w.q;
    j["size"] = w.size;
    std::vector<int> data(w.cells.begin(), w.cells.end());
    j["data"] = data;
    return j;
}

Word word_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object() || !j.contains("q") || !j.contains("size") || !j.contains("data"))
            throw InvalidInput("word JSON needs q, size and data");
        int q = j.at("q").get<int>();
        SizeVec n = j.at("size").get<SizeVec>();
        check_size(n);
        std::vector<int> data = j.at("data").get<std::vector<int>>();
        if (q < 1 || q > 255) throw InvalidInput("alphabet size must be in 1..255");
        std::vector<uint8_t> cells;
        for (int x : data) {
            if (x < 1 || x > q) throw InvalidInput("symbol outside alphabet");
            cells.push_back(static_cast<uint8_t>(x));
        }
        return Word(n, q, cells);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInput(std::string("bad word JSON: ") + e.what());
    }
}

SizeVec parse_size(const std::string& text) {
    SizeVec n;
    std::string body = trim(text);
    if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
    for (const auto& tok : split(body, ',')) {
        std::string t = trim(tok);
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw InvalidInput("bad size '" + text + "'");
        n.push_back(std::stoi(t));
    }
    check_size(n);
    return n;
}

Word parse_word(const std::string& text, const std::optional<SizeVec>& size, std::optional<int> q) {
    std::string s = trim(text);
    if (s.empty()) throw InvalidInput("empty word");
    if (s[0] == '{') {
        nlohmann::json j;
        try {
            j = nlohmann::json::parse(s);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidInput(std::string("bad word JSON: ") + e.what());
        }
        Word w = word_from_json(j);
        if (size && *size != w.size) throw InvalidInput("word size does not match --size");
        if (q && *q != w.q) throw InvalidInput("word alphabet does not match --alphabet");
        return w;
    }
    std::vector<std::string> rows;
    if (s[0] == '[') {
        if (s.back() != ']') throw InvalidInput("inline word must end with ']'");
        rows = split(s.substr(1, s.size() - 2), ';');
    } else if (s.find(';') != std::string::npos) {
        rows = split(s, ';');
    } else {
        rows = split(s, '\n');
    }
    std::vector<std::vector<int>> parsed;
    for (const auto& r : rows) parsed.push_back(row_symbols(r));
    for (const auto& r : parsed)
        if (r.size() != parsed[0].size()) throw InvalidInput("rows of a word must have equal length");

    int top = 1;
    std::vector<uint8_t> cells;
    for (const auto& r : parsed)
        for (int x : r) {
            if (x < 1 || x > 255) throw InvalidInput("symbol outside alphabet");
            top = std::max(top, x);
            cells.push_back(static_cast<uint8_t>(x));
        }
    int alphabet = q ? *q : std::max(2, top);

    SizeVec n;
    if (size) {
        n = *size;
        if (volume(n) != static_cast<long long>(cells.size())) throw InvalidInput("word does not match --size");
        if (n.size() >= 2 && parsed.size() > 1 && n.back() != static_cast<int>(parsed.size()))
            throw InvalidInput("number of slices does not match --size");
    } else if (parsed.size() == 1 && s[0] != '[' && s.find(';') == std::string::npos) {
        n = {static_cast<int>(cells.size())};
    } else {
        n = {static_cast<int>(parsed[0].size()), static_cast<int>(parsed.size())};
    }
    return Word(n, alphabet, cells);
}

}  // namespace necklace
