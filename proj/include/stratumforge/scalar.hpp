#pragma once

#include "stratumforge/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stratumforge {

// A real number declared by the caller, assumed linearly independent from the
// other declared reals (and from 1) over Q. The decimal approximation is only
// used to certify signs; "square" marks square roots of rationals so that
// products x*x collapse exactly.
struct BasisReal {
    std::string name;
    std::string approx;
    std::optional<Rat> square;
};

struct BasisContext {
    std::vector<BasisReal> reals; // tower element i+1; element 0 is the number 1
    int find(const std::string& name) const;
};

// Monomial (i, j), i <= j: (0,0) = 1, (0,i) = x_i, (i,j) = x_i * x_j.
using Mon = std::pair<int, int>;

// Rational combination of degree <= 2 monomials in the declared reals.
struct Scalar {
    std::map<Mon, Rat> c;

    static Scalar rational(const Rat& r);
    static Scalar basis_element(int i); // i >= 1

    bool is_zero() const;
    bool is_rational() const;
    Rat rational_part() const; // coefficient of 1
    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator-() const;
    Scalar scaled(const Rat& r) const;
};

Scalar mul(const Scalar& a, const Scalar& b, const BasisContext& ctx);

// Certified sign: 0 for the zero vector, else +1/-1 from interval arithmetic
// over the declared approximations; PrecisionExhausted when the supplied
// digits cannot separate the value from zero.
int sign(const Scalar& s, const BasisContext& ctx);

// Interval [lo, hi] enclosing a declared approximation string.
std::pair<Rat, Rat> approx_interval(const std::string& decimal);

std::string scalar_str(const Scalar& s, const BasisContext& ctx);

struct Vec2 {
    Scalar x, y;
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
};

Scalar det2(const Vec2& a, const Vec2& b, const BasisContext& ctx);

} // namespace stratumforge
