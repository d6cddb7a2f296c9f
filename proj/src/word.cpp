#include "necklace/word.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <unordered_map>

namespace necklace {

long long volume(const SizeVec& n) {
    long long v = 1;
    for (int x : n) v *= x;
    return v;
}

void check_size(const SizeVec& n) {
    if (n.empty()) throw InvalidInput("size vector must have at least one dimension");
    for (int x : n)
        if (x < 1) throw InvalidInput("every dimension must be positive");
}

Word::Word(SizeVec n, int alphabet) : size(std::move(n)), q(alphabet) {
    cells.assign(static_cast<size_t>(volume(size)), 1);
}

Word::Word(SizeVec n, int alphabet, std::vector<uint8_t> data)
    : size(std::move(n)), q(alphabet), cells(std::move(data)) {
    if (static_cast<long long>(cells.size()) != volume(size))
        throw InvalidInput("cell count does not match size");
    for (auto c : cells)
        if (c < 1 || c > q) throw InvalidInput("symbol outside alphabet");
}

Word constant_word(const SizeVec& n, int q, int symbol) {
    Word w(n, q);
    std::fill(w.cells.begin(), w.cells.end(), static_cast<uint8_t>(symbol));
    return w;
}

// ---------------------------------------------------------------- Shape

std::shared_ptr<const Shape> Shape::of(const SizeVec& n) {
    static std::mutex mu;
    static std::map<SizeVec, std::shared_ptr<const Shape>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    auto s = std::make_shared<Shape>();
    s->dims = n;
    s->N = static_cast<int>(volume(n));
    s->stride.resize(n.size());
    int acc = 1;
    for (size_t i = 0; i < n.size(); ++i) {
        s->stride[i] = acc;
        acc *= n[i];
    }
    int d = static_cast<int>(n.size());
    s->coord_.resize(static_cast<size_t>(s->N) * std::max(d, 1));
    for (int p = 0; p < s->N; ++p) {
        int r = p;
        for (int i = 0; i < d; ++i) {
            s->coord_[static_cast<size_t>(p) * d + i] = r % n[i];
            r /= n[i];
        }
    }
    if (s->N <= 2048) {
        s->perms_.resize(s->N);
        for (int g = 0; g < s->N; ++g) {
            auto& pm = s->perms_[g];
            pm.resize(s->N);
            for (int p = 0; p < s->N; ++p) pm[p] = s->shift(p, g);
        }
    }
    cache.emplace(n, s);
    return s;
}

int Shape::lin(const std::vector<int>& p) const {
    int r = 0;
    for (size_t i = 0; i < dims.size(); ++i) r += p[i] * stride[i];
    return r;
}

std::vector<int> Shape::coords(int index) const {
    int d = static_cast<int>(dims.size());
    return std::vector<int>(coord_.begin() + static_cast<long>(index) * d,
                            coord_.begin() + static_cast<long>(index + 1) * d);
}

int Shape::shift(int p, int g) const {
    int d = static_cast<int>(dims.size());
    int r = 0;
    const int* a = coord_.data() + static_cast<long>(p) * d;
    const int* b = coord_.data() + static_cast<long>(g) * d;
    for (int i = 0; i < d; ++i) {
        int c = a[i] + b[i];
        if (c >= dims[i]) c -= dims[i];
        r += c * stride[i];
    }
    return r;
}

const std::vector<int>& Shape::perm(int g) const {
    if (!perms_.empty()) return perms_[g];
    thread_local std::vector<int> scratch;
    scratch.resize(N);
    for (int p = 0; p < N; ++p) scratch[p] = shift(p, g);
    return scratch;
}

int Shape::neg(int g) const {
    int d = static_cast<int>(dims.size());
    int r = 0;
    for (int i = 0; i < d; ++i) {
        int c = coord_[static_cast<long>(g) * d + i];
        r += ((dims[i] - c) % dims[i]) * stride[i];
    }
    return r;
}

int Shape::order(int g) const {
    int d = static_cast<int>(dims.size());
    long long o = 1;
    for (int i = 0; i < d; ++i) {
        int c = coord_[static_cast<long>(g) * d + i];
        int oi = dims[i] / std::gcd(dims[i], c);
        o = std::lcm(o, static_cast<long long>(oi));
    }
    return static_cast<int>(o);
}

int index_of(const Translation& g, const SizeVec& n) {
    if (g.size() != n.size()) throw InvalidInput("translation does not match size");
    int r = 0, acc = 1;
    for (size_t i = 0; i < n.size(); ++i) {
        if (g[i] < 0 || g[i] >= n[i]) throw InvalidInput("translation offset out of range");
        r += g[i] * acc;
        acc *= n[i];
    }
    return r;
}

Translation translation_at(int index, const SizeVec& n) {
    Translation g(n.size());
    for (size_t i = 0; i < n.size(); ++i) {
        g[i] = index % n[i];
        index /= n[i];
    }
    return g;
}

// ---------------------------------------------------------------- raw helpers

namespace {

using Bytes = std::vector<uint8_t>;

void translate_raw(const uint8_t* src, uint8_t* dst, const Shape& sh, int g) {
    const auto& pm = sh.perm(g);
    for (int p = 0; p < sh.N; ++p) dst[p] = src[pm[p]];
}

int compare_raw(const uint8_t* a, const uint8_t* b, const SizeVec& n);

struct SliceKey {
    Bytes canon;
    int offset = 0;
};

int canonical_raw(const uint8_t* w, const SizeVec& n, Bytes& out);

std::string cache_key(const uint8_t* s, int len, const SizeVec& n) {
    std::string k;
    k.reserve(len + n.size() + 1);
    for (int x : n) k.push_back(static_cast<char>(x));
    k.push_back('|');
    k.append(reinterpret_cast<const char*>(s), len);
    return k;
}

SliceKey slice_key(const uint8_t* s, const SizeVec& n) {
    thread_local std::unordered_map<std::string, SliceKey> memo;
    int len = static_cast<int>(volume(n));
    std::string k = cache_key(s, len, n);
    auto it = memo.find(k);
    if (it != memo.end()) return it->second;
    SliceKey key;
    key.offset = canonical_raw(s, n, key.canon);
    if (memo.size() > (1u << 20)) memo.clear();
    memo.emplace(std::move(k), key);
    return key;
}

int compare_slices(const uint8_t* a, const uint8_t* b, const SizeVec& n) {
    if (n.empty()) return (*a > *b) - (*a < *b);
    int len = static_cast<int>(volume(n));
    if (std::equal(a, a + len, b)) return 0;
    SliceKey ka = slice_key(a, n), kb = slice_key(b, n);
    if (ka.canon != kb.canon) return compare_raw(ka.canon.data(), kb.canon.data(), n);
    return (ka.offset > kb.offset) - (ka.offset < kb.offset);
}

int compare_raw(const uint8_t* a, const uint8_t* b, const SizeVec& n) {
    if (n.empty()) return (*a > *b) - (*a < *b);
    int m = n.back();
    SizeVec cross(n.begin(), n.end() - 1);
    int len = static_cast<int>(volume(cross));
    if (cross.empty()) {
        for (int t = 0; t < m; ++t)
            if (a[t] != b[t]) return a[t] < b[t] ? -1 : 1;
        return 0;
    }
    for (int t = 0; t < m; ++t) {
        const uint8_t* x = a + static_cast<long>(t) * len;
        const uint8_t* y = b + static_cast<long>(t) * len;
        if (!std::equal(x, x + len, y)) return compare_slices(x, y, cross);
    }
    return 0;
}

int canonical_raw(const uint8_t* w, const SizeVec& n, Bytes& out) {
    int N = static_cast<int>(volume(n));
    if (n.empty()) {
        out.assign(w, w + 1);
        return 0;
    }
    if (n.size() == 1) {
        Bytes s(w, w + N);
        int r = least_rotation(s);
        out.resize(N);
        for (int p = 0; p < N; ++p) out[p] = s[(p + r) % N];
        return r;
    }
    auto sh = Shape::of(n);
    Bytes cur(N);
    out.assign(w, w + N);
    int best = 0;
    for (int g = 1; g < N; ++g) {
        translate_raw(w, cur.data(), *sh, g);
        if (compare_raw(cur.data(), out.data(), n) < 0) {
            out.swap(cur);
            best = g;
        }
    }
    return best;
}

}  // namespace

int compare_cells(const uint8_t* a, const uint8_t* b, const SizeVec& n) {
    return compare_raw(a, b, n);
}

int compare_as_slices(const uint8_t* a, const uint8_t* b, const SizeVec& n) {
    return compare_slices(a, b, n);
}

int canonical_cells(const uint8_t* w, const SizeVec& n, std::vector<uint8_t>& out) {
    if (n.size() >= 2) {
        SliceKey k = slice_key(w, n);
        out = k.canon;
        return k.offset;
    }
    return canonical_raw(w, n, out);
}

void translate_cells(const uint8_t* src, uint8_t* dst, const Shape& shape, int g) {
    if (shape.dims.empty()) {
        dst[0] = src[0];
        return;
    }
    translate_raw(src, dst, shape, g);
}

int least_rotation(const std::vector<uint8_t>& s) {
    int n = static_cast<int>(s.size());
    if (n <= 1) return 0;
    int i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        uint8_t a = s[(i + k) % n], b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

Word translate(const Word& w, const Translation& g) {
    return translate_index(w, index_of(g, w.size));
}

Word translate_index(const Word& w, int g) {
    Word v = w;
    if (w.size.empty()) return v;
    auto sh = Shape::of(w.size);
    translate_raw(w.cells.data(), v.cells.data(), *sh, g);
    return v;
}

int compare(const Word& a, const Word& b) {
    if (a.size != b.size) throw InvalidInput("compare: size mismatch");
    return compare_raw(a.cells.data(), b.cells.data(), a.size);
}

int compare_tiled(const Word& a, const Word& b) {
    if (a.size.size() != b.size.size()) throw InvalidInput("compare: dimension mismatch");
    for (size_t i = 0; i < a.size.size(); ++i)
        if (a.size[i] % b.size[i] != 0) throw InvalidInput("compare: sizes are not divisible");
    Word t = tile(b, a.size);
    return compare(a, t);
}

Canonical canonicalize(const Word& w) {
    Canonical c;
    c.word = w;
    c.offset_index = canonical_raw(w.cells.data(), w.size, c.word.cells);
    c.offset = translation_at(c.offset_index, w.size);
    return c;
}

bool is_canonical(const Word& w) {
    if (w.size.size() == 1) return least_rotation(w.cells) == 0;
    int N = w.count();
    if (w.size.empty()) return true;
    auto sh = Shape::of(w.size);
    std::vector<uint8_t> cur(N);
    for (int g = 1; g < N; ++g) {
        translate_raw(w.cells.data(), cur.data(), *sh, g);
        if (compare_raw(cur.data(), w.cells.data(), w.size) < 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------- structure

std::vector<int> stabilizer_indices(const Word& w) {
    std::vector<int> out;
    if (w.size.empty()) return {0};
    auto sh = Shape::of(w.size);
    for (int g = 0; g < sh->N; ++g) {
        const auto& pm = sh->perm(g);
        bool ok = true;
        for (int p = 0; p < sh->N && ok; ++p) ok = w.cells[p] == w.cells[pm[p]];
        if (ok) out.push_back(g);
    }
    return out;
}

Symmetry symmetry(const Word& w) {
    Symmetry s;
    for (int g : stabilizer_indices(w)) s.fixing.push_back(translation_at(g, w.size));
    s.distinct = static_cast<long long>(w.count()) / static_cast<long long>(s.fixing.size());
    return s;
}

bool is_atranslational(const Word& w) { return stabilizer_indices(w).size() == 1; }

Period period(const Word& w) {
    Period p;
    p.size = w.size;
    for (size_t i = 0; i < w.size.size(); ++i) {
        int ni = w.size[i];
        for (int m = 1; m <= ni; ++m) {
            if (ni % m) continue;
            Translation g(w.size.size(), 0);
            g[i] = m % ni;
            if (translate(w, g) == w) {
                p.size[i] = m;
                break;
            }
        }
    }
    p.base = subword(w, std::vector<int>(w.size.size(), 0), p.size);
    return p;
}

bool is_aperiodic(const Word& w) { return period(w).size == w.size; }

std::vector<int> parikh(const Word& w) {
    std::vector<int> c(w.q, 0);
    for (auto x : w.cells) ++c[x - 1];
    return c;
}

Word subword(const Word& w, const std::vector<int>& p, const SizeVec& m) {
    if (p.size() != w.size.size() || m.size() != w.size.size())
        throw InvalidInput("subword: dimension mismatch");
    for (size_t i = 0; i < m.size(); ++i)
        if (m[i] < 1 || m[i] > w.size[i]) throw InvalidInput("subword: size out of range");
    Word v(m, w.q);
    auto src = Shape::of(w.size);
    auto dst = Shape::of(m);
    std::vector<int> c(m.size());
    for (int k = 0; k < dst->N; ++k) {
        auto local = dst->coords(k);
        for (size_t i = 0; i < m.size(); ++i) c[i] = ((p[i] + local[i]) % w.size[i] + w.size[i]) % w.size[i];
        v.cells[k] = w.cells[src->lin(c)];
    }
    return v;
}

SizeVec cross_section(const SizeVec& n) { return SizeVec(n.begin(), n.end() - 1); }

Word slice(const Word& w, int i) {
    if (w.size.empty()) throw InvalidInput("slice of a 0-dimensional word");
    if (i < 0 || i >= w.size.back()) throw InvalidInput("slice index out of range");
    SizeVec cs = cross_section(w.size);
    long len = static_cast<long>(volume(cs));
    Word v;
    v.size = cs;
    v.q = w.q;
    v.cells.assign(w.cells.begin() + i * len, w.cells.begin() + (i + 1) * len);
    return v;
}

Word slice_range(const Word& w, int from, int len) {
    SizeVec cs = cross_section(w.size);
    long cl = static_cast<long>(volume(cs));
    Word v;
    v.size = cs;
    v.size.push_back(len);
    v.q = w.q;
    int m = w.size.back();
    v.cells.reserve(cl * len);
    for (int t = 0; t < len; ++t) {
        int s = ((from + t) % m + m) % m;
        v.cells.insert(v.cells.end(), w.cells.begin() + s * cl, w.cells.begin() + (s + 1) * cl);
    }
    return v;
}

Word stack_slices(const std::vector<Word>& parts, const SizeVec& cross, int q) {
    Word v;
    v.size = cross;
    v.size.push_back(static_cast<int>(parts.size()));
    v.q = q;
    for (const auto& s : parts) {
        if (s.size != cross) throw InvalidInput("stack: slice size mismatch");
        v.cells.insert(v.cells.end(), s.cells.begin(), s.cells.end());
    }
    return v;
}

Word tile(const Word& w, const SizeVec& n) {
    if (n.size() != w.size.size()) throw InvalidInput("tile: dimension mismatch");
    for (size_t i = 0; i < n.size(); ++i)
        if (n[i] % w.size[i]) throw InvalidInput("tile: sizes are not divisible");
    Word v(n, w.q);
    auto big = Shape::of(n);
    auto small = Shape::of(w.size);
    std::vector<int> c(n.size());
    for (int k = 0; k < big->N; ++k) {
        auto pc = big->coords(k);
        for (size_t i = 0; i < n.size(); ++i) c[i] = pc[i] % w.size[i];
        v.cells[k] = w.cells[small->lin(c)];
    }
    return v;
}

// ---------------------------------------------------------------- rendering

namespace {
std::string symbol_text(int s, int q) {
    if (q <= 26) return std::string(1, static_cast<char>('a' + s - 1));
    return std::to_string(s);
}
}  // namespace

std::string render_inline(const Word& w) {
    std::string out;
    bool letters = w.q <= 26;
    int m = w.size.empty() ? 1 : w.size.back();
    int len = w.count() / std::max(m, 1);
    if (w.size.size() <= 1) {
        for (int p = 0; p < w.count(); ++p) {
            if (!letters && p) out += ',';
            out += symbol_text(w.cells[p], w.q);
        }
        return out;
    }
    out += '[';
    for (int t = 0; t < m; ++t) {
        if (t) out += ';';
        for (int p = 0; p < len; ++p) {
            if (!letters && p) out += ',';
            out += symbol_text(w.cells[t * len + p], w.q);
        }
    }
    out += ']';
    return out;
}

std::string render_text(const Word& w) {
    if (w.size.size() > 2) return render_inline(w);
    std::string out;
    bool letters = w.q <= 26;
    int m = w.size.size() == 2 ? w.size[1] : 1;
    int len = w.count() / m;
    for (int t = 0; t < m; ++t) {
        for (int p = 0; p < len; ++p) {
            if (!letters && p) out += ',';
            out += symbol_text(w.cells[t * len + p], w.q);
        }
        if (t + 1 < m) out += '\n';
    }
    return out;
}

}  // namespace necklace
