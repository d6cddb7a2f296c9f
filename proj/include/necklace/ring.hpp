#pragma once

#include <string>
#include <vector>

#include "necklace/numtheory.hpp"
#include "necklace/word.hpp"

namespace necklace {

// Weight rings for the below-counter.  Plain counting weighs every word by 1;
// the content ring weighs a word by the monomial of its Parikh vector,
// truncated at a per-symbol bound.

template <class Int>
struct CountRing {
    using T = Int;
    int q = 2;

    T zero() const { return T(0); }
    T one() const { return T(1); }
    T letter(const std::vector<uint8_t>&) const { return T(1); }
    // Sum of weights of all slices fixed by a group whose cell orbits are
    // `orbits` many, each of size `orbit_size`.
    T fixed_total(int orbits, int) const {
        T r = 1;
        for (int i = 0; i < orbits; ++i) r *= static_cast<unsigned>(q);
        return r;
    }
    T symbols_below(int s) const { return T(s - 1); }
    CountRing scaled(int) const { return *this; }
    T lift(const T& v, int) const { return v; }
    bool is_zero(const T& v) const { return v == 0; }
    std::string id() const { return "c" + std::to_string(q); }
    T mul(const T& a, const T& b) const { return a * b; }
};

struct Poly {
    std::vector<BigInt> c;
};

class ContentRing {
public:
    using T = Poly;

    ContentRing() = default;
    explicit ContentRing(std::vector<int> bound);

    T zero() const;
    T one() const;
    T monomial(const std::vector<int>& exps) const;
    T letter(const std::vector<uint8_t>& cells) const;
    T fixed_total(int orbits, int orbit_size) const;
    T symbols_below(int s) const;
    ContentRing scaled(int k) const;
    T lift(const T& child, int k) const;
    bool is_zero(const T& v) const;
    std::string id() const;
    T mul(const T& a, const T& b) const;

    BigInt coefficient(const T& v, const std::vector<int>& exps) const;
    const std::vector<int>& bound() const { return bound_; }

private:
    std::vector<int> bound_;
    std::vector<int> stride_;
    int size_ = 1;
    int index(const std::vector<int>& exps) const;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly& operator+=(Poly& a, const Poly& b);
Poly& operator-=(Poly& a, const Poly& b);
Poly operator*(const Poly& a, long long k);

}  // namespace necklace
