#include "stratumforge/rational.hpp"
#include "stratumforge/errors.hpp"

namespace stratumforge {

std::string rat_str(const Rat& r) {
    if (is_integer(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

Rat parse_rat(const std::string& s) {
    if (s.empty()) fail(Errc::ParseError, "empty rational");
    for (char c : s)
        if (!(std::isdigit((unsigned char)c) || c == '-' || c == '+' || c == '/'))
            fail(Errc::ParseError, "bad rational '" + s + "'");
    try {
        Rat r(s);
        return r;
    } catch (const std::exception&) {
        fail(Errc::ParseError, "bad rational '" + s + "'");
    }
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && ((r < 0) != (b < 0))) q -= 1;
    return q;
}

} // namespace stratumforge
