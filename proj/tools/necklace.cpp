#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "necklace/counting.hpp"
#include "necklace/generation.hpp"
#include "necklace/io.hpp"
#include "necklace/kcentre.hpp"
#include "necklace/oracle.hpp"
#include "necklace/ranking.hpp"
#include "necklace/unranking.hpp"

using namespace necklace;
using ojson = nlohmann::ordered_json;

namespace {

struct Options {
    std::string size;
    int q = 2;
    std::string content;
    std::string cls = "necklace";
    std::string emit = "text";
    std::vector<std::string> words;
    std::string index;
    long long limit = 0;
    int k = 1;
    int n_max = 8;
    int k_max = 8;
    std::string oracle_op;
};

bool json_mode(const Options& o) { return o.emit == "json"; }

ojson json_count(const BigInt& v) {
    if (v >= 0 && v <= BigInt(std::numeric_limits<long long>::max())) return static_cast<long long>(v);
    return v.str();
}

std::string ratio_text(const Ratio& r) {
    std::ostringstream s;
    s << numerator(r);
    if (denominator(r) != 1) s << "/" << denominator(r);
    return s.str();
}

std::optional<SizeVec> size_of(const Options& o) {
    if (o.size.empty()) return std::nullopt;
    return parse_size(o.size);
}

SizeVec require_size(const Options& o) {
    auto n = size_of(o);
    if (!n) throw InvalidInput("--size is required");
    return *n;
}

std::optional<std::vector<int>> content_of(const Options& o) {
    if (o.content.empty()) return std::nullopt;
    std::vector<int> p;
    std::stringstream in(o.content);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            size_t used = 0;
            p.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw InvalidInput("bad --content entry '" + tok + "'");
        } catch (const std::logic_error&) {
            throw InvalidInput("bad --content entry '" + tok + "'");
        }
    }
    return p;
}

Word word_arg(const Options& o, size_t which) {
    if (o.words.size() <= which) throw InvalidInput("missing --word");
    std::string text = o.words[which];
    if (!text.empty() && text[0] == '@') {
        std::ifstream in(text.substr(1));
        if (!in) throw InvalidInput("cannot read " + text.substr(1));
        std::stringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    std::optional<int> q;
    if (o.q != 0) q = o.q;
    return parse_word(text, size_of(o), q);
}

void print_word(const Options& o, const Word& w) {
    if (json_mode(o))
        std::cout << word_to_json(w).dump() << "\n";
    else
        std::cout << render_inline(w) << "\n";
}

void print_value(const Options& o, const char* key, const BigInt& v) {
    if (json_mode(o))
        std::cout << ojson{{key, json_count(v)}}.dump() << "\n";
    else
        std::cout << v << "\n";
}

bool in_class(const Options& o, const Word& w) {
    if (o.cls == "lyndon") return is_aperiodic(w);
    if (o.cls == "atranslational") return is_atranslational(w);
    return true;
}

int cmd_count(const Options& o) {
    SizeVec n = require_size(o);
    auto p = content_of(o);
    BigInt c;
    if (p) {
        if (o.cls == "lyndon") c = count_fc_lyndon(n, *p);
        else if (o.cls == "atranslational") c = count_fc_atranslational(n, *p);
        else c = count_fc_necklaces(n, *p);
    } else {
        if (o.cls == "lyndon") c = count_lyndon(n, o.q);
        else if (o.cls == "atranslational") c = count_atranslational(n, o.q);
        else c = count_necklaces(n, o.q);
    }
    print_value(o, "count", c);
    return 0;
}

int cmd_list(const Options& o) {
    SizeVec n = require_size(o);
    auto p = content_of(o);
    if (p) check_content(n, *p);
    int q = p ? static_cast<int>(p->size()) : o.q;
    long long shown = 0;
    enumerate(n, q, [&](const Word& w) {
        if ((!p || parikh(w) == *p) && in_class(o, w)) {
            print_word(o, w);
            ++shown;
        }
        return o.limit <= 0 || shown < o.limit;
    });
    return 0;
}

int cmd_next(const Options& o) {
    Word w = word_arg(o, 0);
    auto nx = next_necklace(w);
    if (!nx) {
        if (json_mode(o))
            std::cout << ojson{{"exhausted", true}}.dump() << "\n";
        else
            std::cout << "EXHAUSTED\n";
        return 0;
    }
    print_word(o, *nx);
    return 0;
}

int cmd_rank(const Options& o) {
    Word w = word_arg(o, 0);
    if (!is_canonical(w)) throw InvalidInput("word is not a necklace representative; use its canonical form");
    if (auto p = content_of(o)) {
        print_value(o, "rank", rank_fixed_content(w, *p));
        return 0;
    }
    auto r = rank_necklace(w);
    if (json_mode(o))
        std::cout << ojson{{"rn", json_count(r.rn)}, {"rl", json_count(r.rl)}, {"ra", json_count(r.ra)}}.dump() << "\n";
    else
        std::cout << "rn=" << r.rn << " rl=" << r.rl << " ra=" << r.ra << "\n";
    return 0;
}

BigInt index_of_arg(const Options& o) {
    if (o.index.empty()) throw InvalidInput("--index is required");
    if (!std::all_of(o.index.begin(), o.index.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        throw InvalidInput("--index must be a non-negative integer");
    return BigInt(o.index);
}

int cmd_unrank(const Options& o) {
    SizeVec n = require_size(o);
    BigInt i = index_of_arg(o);
    if (auto p = content_of(o))
        print_word(o, unrank_fixed_content(i, n, *p));
    else
        print_word(o, unrank(i, n, o.q));
    return 0;
}

int cmd_centres(const Options& o) {
    SizeVec n = require_size(o);
    if (o.k < 1) throw InvalidInput("--k must be positive");
    CentreSet s = k_centre_multidim(n, o.q, o.k);
    for (const auto& c : s.centres) print_word(o, c);
    if (json_mode(o))
        std::cout << ojson{{"k", o.k}, {"lambda", s.lambda}, {"bound", ratio_text(s.bound)}}.dump() << "\n";
    else
        std::cout << "k=" << o.k << " lambda=" << s.lambda << " bound=" << ratio_text(s.bound) << "\n";
    return 0;
}

int cmd_dist(const Options& o) {
    if (o.words.size() != 2) throw InvalidInput("dist needs exactly two --word values");
    Ratio d = overlap_distance(word_arg(o, 0), word_arg(o, 1));
    if (json_mode(o))
        std::cout << ojson{{"distance", ratio_text(d)}}.dump() << "\n";
    else
        std::cout << ratio_text(d) << "\n";
    return 0;
}

int cmd_ratio_table(const Options& o) {
    if (o.n_max < 1 || o.k_max < 1) throw InvalidInput("--n-max and --k-max must be positive");
    if (!json_mode(o)) {
        std::cout << "k\\n";
        for (int n = 1; n <= o.n_max; ++n) std::cout << "\t" << n;
        std::cout << "\n";
    }
    for (int k = 1; k <= o.k_max; ++k) {
        if (!json_mode(o)) std::cout << k;
        for (int n = 1; n <= o.n_max; ++n) {
            auto r = approx_ratio({n}, o.q, k);
            if (json_mode(o)) {
                ojson rec{{"k", k}, {"n", n}, {"ratio", nullptr}};
                if (r) rec["ratio"] = static_cast<double>(*r);
                std::cout << rec.dump() << "\n";
            } else {
                std::cout << "\t" << std::setprecision(6) << (r ? static_cast<double>(*r) : 1.0);
            }
        }
        if (!json_mode(o)) std::cout << "\n";
    }
    return 0;
}

int cmd_oracle(const Options& o) {
    if (o.oracle_op == "dist") {
        if (o.words.size() != 2) throw InvalidInput("dist needs exactly two --word values");
        Word a = word_arg(o, 0), b = word_arg(o, 1);
        if (a.size != b.size) throw InvalidInput("words differ in size");
        census(a.size, a.q);  // enforces the enumeration guard
        Ratio d = oracle_distance(a, b);
        if (json_mode(o))
            std::cout << ojson{{"distance", ratio_text(d)}}.dump() << "\n";
        else
            std::cout << ratio_text(d) << "\n";
        return 0;
    }
    if (o.oracle_op == "rank") {
        Word w = word_arg(o, 0);
        auto c = census(w.size, w.q);
        long long rn = oracle_rank(w, c), rl = 0, ra = 0;
        for (long long i = 0; i < rn; ++i) {
            rl += c.lyndon[i];
            ra += c.atranslational[i];
        }
        if (json_mode(o))
            std::cout << ojson{{"rn", rn}, {"rl", rl}, {"ra", ra}}.dump() << "\n";
        else
            std::cout << "rn=" << rn << " rl=" << rl << " ra=" << ra << "\n";
        return 0;
    }
    SizeVec n = require_size(o);
    auto p = content_of(o);
    if (p) check_content(n, *p);
    int q = p ? static_cast<int>(p->size()) : o.q;
    auto c = census(n, q);
    std::vector<Word> words;
    for (size_t i = 0; i < c.codes.size(); ++i) {
        if (o.cls == "lyndon" && !c.lyndon[i]) continue;
        if (o.cls == "atranslational" && !c.atranslational[i]) continue;
        Word w = c.word(i);
        if (p && parikh(w) != *p) continue;
        words.push_back(w);
    }
    if (o.oracle_op == "count") {
        print_value(o, "count", BigInt(words.size()));
        return 0;
    }
    if (o.oracle_op == "list") {
        long long shown = 0;
        for (const auto& w : words) {
            if (o.limit > 0 && shown >= o.limit) break;
            print_word(o, w);
            ++shown;
        }
        return 0;
    }
    throw InvalidInput("oracle operation must be count, list, rank or dist");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multidimensional necklaces: counting, generation, ranking and k-centres"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* c, bool words) {
        c->add_option("--size", o.size, "Word size n1,n2,...");
        c->add_option("--alphabet,-q", o.q, "Alphabet size")->check(CLI::Range(1, 255));
        c->add_option("--emit", o.emit, "Output format")->check(CLI::IsMember({"text", "json"}));
        if (words) c->add_option("--word", o.words, "Word: inline, grid, JSON, or @file");
    };
    auto content = [&](CLI::App* c) { c->add_option("--content", o.content, "Parikh vector p1,...,pq"); };
    auto cls = [&](CLI::App* c) {
        c->add_option("--class", o.cls, "necklace, lyndon or atranslational")
            ->check(CLI::IsMember({"necklace", "lyndon", "atranslational"}));
    };

    auto* count = app.add_subcommand("count", "Count necklaces");
    common(count, false);
    content(count);
    cls(count);
    auto* list = app.add_subcommand("list", "List necklace representatives in order");
    common(list, false);
    content(list);
    cls(list);
    list->add_option("--limit", o.limit, "Stop after this many words (0 = all)");
    auto* next = app.add_subcommand("next", "Smallest necklace above a word");
    common(next, true);
    auto* rank = app.add_subcommand("rank", "Zero-based rank of a necklace");
    common(rank, true);
    content(rank);
    auto* unrank_cmd = app.add_subcommand("unrank", "Necklace of a given zero-based rank");
    common(unrank_cmd, false);
    content(unrank_cmd);
    unrank_cmd->add_option("--index", o.index, "Rank");
    auto* centres = app.add_subcommand("centres", "k-centre approximation");
    common(centres, false);
    centres->add_option("--k", o.k, "Number of centres");
    auto* dist = app.add_subcommand("dist", "Overlap distance between two words");
    common(dist, true);
    auto* ratio = app.add_subcommand("ratio-table", "Approximation ratios of the de Bruijn construction");
    common(ratio, false);
    ratio->add_option("--n-max", o.n_max, "Largest length");
    ratio->add_option("--k-max", o.k_max, "Largest number of centres");
    auto* oracle = app.add_subcommand("oracle", "Brute-force answers (count, list, rank, dist)");
    common(oracle, true);
    content(oracle);
    cls(oracle);
    oracle->add_option("op", o.oracle_op, "count, list, rank or dist")->required();
    oracle->add_option("--limit", o.limit, "Stop after this many words (0 = all)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*count) return cmd_count(o);
        if (*list) return cmd_list(o);
        if (*next) return cmd_next(o);
        if (*rank) return cmd_rank(o);
        if (*unrank_cmd) return cmd_unrank(o);
        if (*centres) return cmd_centres(o);
        if (*dist) return cmd_dist(o);
        if (*ratio) return cmd_ratio_table(o);
        if (*oracle) return cmd_oracle(o);
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
