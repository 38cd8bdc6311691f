#include "stratumforge/scalar.hpp"
#include "stratumforge/errors.hpp"

#include <sstream>

namespace stratumforge {

int BasisContext::find(const std::string& name) const {
    for (size_t i = 0; i < reals.size(); ++i)
        if (reals[i].name == name) return (int)i + 1;
    return -1;
}

Scalar Scalar::rational(const Rat& r) {
    Scalar s;
    if (r != 0) s.c[{0, 0}] = r;
    return s;
}

Scalar Scalar::basis_element(int i) {
    Scalar s;
    s.c[{0, i}] = 1;
    return s;
}

bool Scalar::is_zero() const { return c.empty(); }

bool Scalar::is_rational() const {
    for (auto& [m, r] : c)
        if (m != Mon{0, 0}) return false;
    return true;
}

Rat Scalar::rational_part() const {
    auto it = c.find({0, 0});
    return it == c.end() ? Rat(0) : it->second;
}

bool Scalar::operator==(const Scalar& o) const { return c == o.c; }

Scalar Scalar::operator+(const Scalar& o) const {
    Scalar s = *this;
    for (auto& [m, r] : o.c) {
        auto it = s.c.find(m);
        if (it == s.c.end()) {
            s.c[m] = r;
        } else {
            it->second += r;
            if (it->second == 0) s.c.erase(it);
        }
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
    Scalar s = *this;
    for (auto& [m, r] : s.c) r = -r;
    return s;
}

Scalar Scalar::scaled(const Rat& f) const {
    if (f == 0) return {};
    Scalar s = *this;
    for (auto& [m, r] : s.c) r *= f;
    return s;
}

Scalar mul(const Scalar& a, const Scalar& b, const BasisContext& ctx) {
    Scalar out;
    auto add = [&](Mon m, const Rat& r) {
        if (r == 0) return;
        auto it = out.c.find(m);
        if (it == out.c.end()) out.c[m] = r;
        else {
            it->second += r;
            if (it->second == 0) out.c.erase(it);
        }
    };
    for (auto& [ma, ra] : a.c)
        for (auto& [mb, rb] : b.c) {
            Rat r = ra * rb;
            // degrees
            int da = (ma.first ? 2 : (ma.second ? 1 : 0));
            int db = (mb.first ? 2 : (mb.second ? 1 : 0));
            if (da + db > 2)
                fail(Errc::Internal, "scalar product of degree above two");
            if (da == 0) {
                add(mb, r);
            } else if (db == 0) {
                add(ma, r);
            } else {
                int i = ma.second, j = mb.second;
                if (i > j) std::swap(i, j);
                if (i == j && ctx.reals[i - 1].square) {
                    add({0, 0}, r * *ctx.reals[i - 1].square);
                } else {
                    add({i, j}, r);
                }
            }
        }
    return out;
}

std::pair<Rat, Rat> approx_interval(const std::string& decimal) {
    std::string s = decimal;
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
        neg = s[0] == '-';
        s = s.substr(1);
    }
    auto dot = s.find('.');
    std::string digits = s;
    int frac = 0;
    if (dot != std::string::npos) {
        digits = s.substr(0, dot) + s.substr(dot + 1);
        frac = (int)(s.size() - dot - 1);
    }
    if (digits.empty()) fail(Errc::ParseError, "bad decimal '" + decimal + "'");
    for (char c : digits)
        if (!std::isdigit((unsigned char)c)) fail(Errc::ParseError, "bad decimal '" + decimal + "'");
    Int num(digits);
    Int den = 1;
    for (int t = 0; t < frac; ++t) den *= 10;
    Rat v(num, den);
    if (neg) v = -v;
    Rat err(1, den);
    return {v - err, v + err};
}

int sign(const Scalar& s, const BasisContext& ctx) {
    if (s.is_zero()) return 0;
    if (s.is_rational()) {
        Rat r = s.rational_part();
        return r > 0 ? 1 : -1;
    }
    auto real_iv = [&](int i) -> std::pair<Rat, Rat> {
        if (i == 0) return {Rat(1), Rat(1)};
        return approx_interval(ctx.reals[i - 1].approx);
    };
    auto mul_iv = [](std::pair<Rat, Rat> a, std::pair<Rat, Rat> b) {
        Rat v[4] = {a.first * b.first, a.first * b.second, a.second * b.first,
                    a.second * b.second};
        Rat lo = v[0], hi = v[0];
        for (int t = 1; t < 4; ++t) {
            lo = std::min(lo, v[t]);
            hi = std::max(hi, v[t]);
        }
        return std::pair<Rat, Rat>{lo, hi};
    };
    Rat lo = 0, hi = 0;
    for (auto& [m, r] : s.c) {
        auto iv = (m.first == 0 && m.second == 0)
                      ? std::pair<Rat, Rat>{Rat(1), Rat(1)}
                      : mul_iv(real_iv(m.first), real_iv(m.second));
        Rat a = r * iv.first, b = r * iv.second;
        if (a > b) std::swap(a, b);
        lo += a;
        hi += b;
    }
    if (lo > 0) return 1;
    if (hi < 0) return -1;
    fail(Errc::PrecisionExhausted,
         "declared approximations cannot certify the sign of " + scalar_str(s, ctx));
}

std::string scalar_str(const Scalar& s, const BasisContext& ctx) {
    if (s.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    auto name = [&](int i) { return i == 0 ? std::string("1") : ctx.reals[i - 1].name; };
    for (auto& [m, r] : s.c) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(r);
        if (m.second != 0) os << "*" << name(m.second);
        if (m.first != 0) os << "*" << name(m.first);
    }
    return os.str();
}

Scalar det2(const Vec2& a, const Vec2& b, const BasisContext& ctx) {
    return mul(a.x, b.y, ctx) - mul(a.y, b.x, ctx);
}

} // namespace stratumforge
