#include "necklace/ring.hpp"

namespace necklace {

ContentRing::ContentRing(std::vector<int> bound) : bound_(std::move(bound)) {
    stride_.resize(bound_.size());
    size_ = 1;
    for (size_t i = 0; i < bound_.size(); ++i) {
        stride_[i] = size_;
        size_ *= bound_[i] + 1;
    }
}

int ContentRing::index(const std::vector<int>& exps) const {
    int r = 0;
    for (size_t i = 0; i < bound_.size(); ++i) {
        if (exps[i] > bound_[i]) return -1;
        r += exps[i] * stride_[i];
    }
    return r;
}

Poly ContentRing::zero() const { return Poly{std::vector<BigInt>(size_)}; }

Poly ContentRing::one() const {
    Poly p = zero();
    p.c[0] = 1;
    return p;
}

Poly ContentRing::monomial(const std::vector<int>& exps) const {
    Poly p = zero();
    int i = index(exps);
    if (i >= 0) p.c[i] = 1;
    return p;
}

Poly ContentRing::letter(const std::vector<uint8_t>& cells) const {
    std::vector<int> e(bound_.size(), 0);
    for (auto x : cells) ++e[x - 1];
    return monomial(e);
}

Poly ContentRing::fixed_total(int orbits, int orbit_size) const {
    Poly base = zero();
    std::vector<int> e(bound_.size(), 0);
    for (size_t a = 0; a < bound_.size(); ++a) {
        e.assign(bound_.size(), 0);
        e[a] = orbit_size;
        int i = index(e);
        if (i >= 0) base.c[i] += 1;
    }
    Poly r = one();
    for (int k = 0; k < orbits; ++k) r = mul(r, base);
    return r;
}

Poly ContentRing::symbols_below(int s) const {
    Poly r = zero();
    std::vector<int> e(bound_.size(), 0);
    for (int a = 0; a + 1 < s; ++a) {
        e.assign(bound_.size(), 0);
        e[a] = 1;
        int i = index(e);
        if (i >= 0) r.c[i] += 1;
    }
    return r;
}

ContentRing ContentRing::scaled(int k) const {
    std::vector<int> b(bound_.size());
    for (size_t i = 0; i < b.size(); ++i) b[i] = bound_[i] / k;
    return ContentRing(b);
}

Poly ContentRing::lift(const Poly& child, int k) const {
    if (k == 1) return child;
    ContentRing small = scaled(k);
    Poly r = zero();
    std::vector<int> e(bound_.size());
    for (int j = 0; j < small.size_; ++j) {
        if (child.c[j] == 0) continue;
        int rest = j;
        for (size_t i = 0; i < bound_.size(); ++i) {
            e[i] = (rest % (small.bound_[i] + 1)) * k;
            rest /= small.bound_[i] + 1;
        }
        r.c[index(e)] += child.c[j];
    }
    return r;
}

bool ContentRing::is_zero(const Poly& v) const {
    for (const auto& x : v.c)
        if (x != 0) return false;
    return true;
}

std::string ContentRing::id() const {
    std::string s = "p";
    for (int b : bound_) s += "," + std::to_string(b);
    return s;
}

Poly ContentRing::mul(const Poly& a, const Poly& b) const {
    Poly r = zero();
    size_t d = bound_.size();
    std::vector<int> ea(d), eb(d);
    for (int i = 0; i < size_; ++i) {
        if (a.c[i] == 0) continue;
        int rest = i;
        for (size_t t = 0; t < d; ++t) {
            ea[t] = rest % (bound_[t] + 1);
            rest /= bound_[t] + 1;
        }
        for (int j = 0; j < size_; ++j) {
            if (b.c[j] == 0) continue;
            int rj = j, idx = 0;
            bool ok = true;
            for (size_t t = 0; t < d; ++t) {
                int s = ea[t] + rj % (bound_[t] + 1);
                rj /= bound_[t] + 1;
                if (s > bound_[t]) {
                    ok = false;
                    break;
                }
                idx += s * stride_[t];
            }
            if (ok) r.c[idx] += a.c[i] * b.c[j];
        }
    }
    return r;
}

BigInt ContentRing::coefficient(const Poly& v, const std::vector<int>& exps) const {
    int i = index(exps);
    return i < 0 ? BigInt(0) : v.c[i];
}

Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    r += b;
    return r;
}

Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    r -= b;
    return r;
}

Poly& operator+=(Poly& a, const Poly& b) {
    for (size_t i = 0; i < a.c.size(); ++i) a.c[i] += b.c[i];
    return a;
}

Poly& operator-=(Poly& a, const Poly& b) {
    for (size_t i = 0; i < a.c.size(); ++i) a.c[i] -= b.c[i];
    return a;
}

Poly operator*(const Poly& a, long long k) {
    Poly r = a;
    for (auto& x : r.c) x *= k;
    return r;
}

}  // namespace necklace
