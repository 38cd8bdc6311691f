#include "stratumforge/polygon.hpp"
#include "stratumforge/errors.hpp"

#include <algorithm>

namespace stratumforge {

namespace {

Vec2 vsub(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
Vec2 vadd(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
Vec2 vneg(const Vec2& a) { return {-a.x, -a.y}; }

Vec2 edge_vector(const PolygonSurface& ps, int p, int i) {
    const auto& poly = ps.polys[p];
    int n = (int)poly.size();
    return vsub(poly[(i + 1) % n], poly[i]);
}

// angular order of a nonzero direction: half-plane index then cross products
int dir_compare(const Vec2& u, const Vec2& v, const BasisContext& ctx) {
    auto half = [&](const Vec2& w) {
        int sy = sign(w.y, ctx);
        if (sy > 0) return 0;
        if (sy < 0) return 1;
        return sign(w.x, ctx) > 0 ? 0 : 1; // angle 0 is in the first half
    };
    int hu = half(u), hv = half(v);
    if (hu != hv) return hu < hv ? -1 : 1;
    Scalar cross = mul(u.x, v.y, ctx) - mul(u.y, v.x, ctx);
    int sg = sign(cross, ctx);
    if (sg > 0) return -1; // u comes first going ccw from east
    if (sg < 0) return 1;
    // parallel: same or opposite direction
    int sxu = sign(u.x, ctx), sxv = sign(v.x, ctx);
    int syu = sign(u.y, ctx), syv = sign(v.y, ctx);
    if (sxu == sxv && syu == syv) return 0;
    fail(Errc::Internal, "opposite directions in one half plane");
}

} // namespace

std::pair<Stratum, Scalar> verify_polygon_surface(const PolygonSurface& ps) {
    int np = (int)ps.polys.size();
    if (np == 0 || (int)ps.pairing.size() != np)
        fail(Errc::InconsistentGluing, "empty surface or missing pairing");
    int total_edges = 0;
    for (int p = 0; p < np; ++p) {
        int n = (int)ps.polys[p].size();
        if (n < 2 || (int)ps.pairing[p].size() != n)
            fail(Errc::InconsistentGluing, "pairing size mismatch");
        total_edges += n;
        for (int i = 0; i < n; ++i) {
            auto [q, j] = ps.pairing[p][i];
            if (q < 0 || q >= np || j < 0 || j >= (int)ps.polys[q].size())
                fail(Errc::InconsistentGluing, "pairing out of range");
            if (q == p && j == i) fail(Errc::InconsistentGluing, "edge glued to itself");
            auto [p2, i2] = ps.pairing[q][j];
            if (p2 != p || i2 != i) fail(Errc::InconsistentGluing, "pairing is not an involution");
            Vec2 ve = edge_vector(ps, p, i);
            Vec2 vo = edge_vector(ps, q, j);
            if (!(ve == vneg(vo)))
                fail(Errc::InconsistentGluing, "glued edges have different holonomy");
            if (ve.x.is_zero() && ve.y.is_zero())
                fail(Errc::InconsistentGluing, "degenerate zero-length edge");
        }
    }

    // vertex cycles: corner (p, i) sits between in-edge (p, i-1) and out-edge
    // (p, i); rotating ccw moves to the corner whose out-edge is the partner
    // of the in-edge
    std::vector<std::vector<char>> seen(np);
    for (int p = 0; p < np; ++p) seen[p].assign(ps.polys[p].size(), 0);
    Stratum st;
    int nvert = 0;
    for (int p0 = 0; p0 < np; ++p0)
        for (int i0 = 0; i0 < (int)ps.polys[p0].size(); ++i0) {
            if (seen[p0][i0]) continue;
            ++nvert;
            long long turns = 0;
            int p = p0, i = i0;
            do {
                seen[p][i] = 1;
                int n = (int)ps.polys[p].size();
                Vec2 dout = edge_vector(ps, p, i);
                Vec2 din = edge_vector(ps, p, (i + n - 1) % n);
                Vec2 u = dout, v = vneg(din);
                // ccw sweep (angle(u) -> angle(v)] crosses east iff it wraps,
                // ends exactly east, or is a full turn (u and v parallel equal)
                int cmp = dir_compare(u, v, ps.ctx);
                bool v_is_east = (sign(v.y, ps.ctx) == 0 && sign(v.x, ps.ctx) > 0);
                if (cmp == 0) ++turns; // full 2pi corner (slit tip)
                else if (v_is_east) ++turns;
                else if (cmp > 0) ++turns; // angle(v) < angle(u): wraps past east
                // step to the next corner around this vertex
                auto [q, j] = ps.pairing[p][(i + n - 1) % n];
                p = q;
                i = j;
            } while (!(p == p0 && i == i0));
            if (turns < 1) fail(Errc::InconsistentGluing, "vertex with vanishing cone angle");
            if (turns > 1) st.orders.push_back((int)turns - 1);
        }
    std::sort(st.orders.rbegin(), st.orders.rend());

    // Euler characteristic cross-check: sum of orders is -chi = 2g - 2
    int E = total_edges / 2, F = np;
    int chi = nvert - E + F;
    int total = 0;
    for (int o : st.orders) total += o;
    if (total != -chi || (2 - chi) % 2)
        fail(Errc::InconsistentGluing, "cone angles disagree with the Euler characteristic");

    Scalar area;
    for (int p = 0; p < np; ++p) {
        int n = (int)ps.polys[p].size();
        Scalar twice;
        for (int i = 0; i < n; ++i) {
            const Vec2& a = ps.polys[p][i];
            const Vec2& b = ps.polys[p][(i + 1) % n];
            twice = twice + (mul(a.x, b.y, ps.ctx) - mul(a.y, b.x, ps.ctx));
        }
        area = area + twice.scaled(Rat(1, 2));
    }
    if (sign(area, ps.ctx) <= 0) fail(Errc::InconsistentGluing, "non-positive total area");
    return {st, area};
}

namespace {

// returns (numerator pair) of w in the frame (A, B): w = alpha A + beta B with
// alpha = det(w, B)/D, beta = det(A, w)/D, D = det(A, B) > 0
struct FrameCoords {
    Scalar alpha_num, beta_num, den; // den > 0
};

FrameCoords frame_coords(const Vec2& w, const Vec2& A, const Vec2& B, const BasisContext& ctx) {
    FrameCoords f;
    f.den = det2(A, B, ctx);
    f.alpha_num = det2(w, B, ctx);
    f.beta_num = det2(A, w, ctx);
    return f;
}

// polygon for a torus (A, B) slit along the segment [0, w]
// kind 0: w = alpha A with 0 < alpha < 1 (slit along the A circle)
// kind 1: interior notch
struct SlitTorus {
    std::vector<Vec2> verts;
    int upper = -1, lower = -1; // edge indices carrying the slit sides (+w / -w)
    std::vector<std::pair<int, int>> internal; // internally glued edge pairs
};

SlitTorus slit_torus(const Vec2& A, const Vec2& B, const Vec2& w, const BasisContext& ctx) {
    FrameCoords f = frame_coords(w, A, B, ctx);
    if (sign(f.den, ctx) <= 0) fail(Errc::NotNormalized, "frame determinant not positive");
    int sb = sign(f.beta_num, ctx);
    SlitTorus t;
    Vec2 zero{Scalar::rational(0), Scalar::rational(0)};
    if (sb == 0) {
        // slit along the A direction: need 0 < alpha < 1
        if (sign(f.alpha_num, ctx) <= 0 || sign(f.alpha_num - f.den, ctx) >= 0)
            fail(Errc::NotNormalized, "slit does not embed in the base torus");
        t.verts = {zero, w, A, vadd(A, B), vadd(w, B), B};
        t.upper = 0; // 0 -> w
        t.lower = 4; // w+B -> B
        t.internal = {{1, 3}, {2, 5}};
        return t;
    }
    // interior notch: need 0 < alpha < 1 and 0 < beta < 1
    if (sb < 0 || sign(f.beta_num - f.den, ctx) >= 0 || sign(f.alpha_num, ctx) <= 0 ||
        sign(f.alpha_num - f.den, ctx) >= 0)
        fail(Errc::NotNormalized, "slit does not embed in the base torus");
    t.verts = {zero, w, zero, A, vadd(A, B), B};
    t.upper = 0; // 0 -> w
    t.lower = 1; // w -> 0
    t.internal = {{2, 4}, {3, 5}};
    return t;
}

} // namespace

PolygonSurface build_genus2(const ExactCocycle& chi, const Stratum& target) {
    chi.validate();
    if (chi.g != 2) fail(Errc::WrongGenus, "construction needs genus two");
    bool minimal = (target.orders == std::vector<int>{2});
    if (!minimal && !(target.orders == std::vector<int>{1, 1}))
        fail(Errc::WrongGenus, "target must be H(2) or H(1,1)");
    for (int i = 0; i < 2; ++i)
        if (sign(det2(chi.a[i], chi.b[i], chi.ctx), chi.ctx) <= 0)
            fail(Errc::NotNormalized, "need det(chi(a_i), chi(b_i)) > 0 for both handles");

    PolygonSurface ps;
    ps.ctx = chi.ctx;
    Vec2 zero{Scalar::rational(0), Scalar::rational(0)};

    if (minimal) {
        // torus (a1, b1) slit along chi(a2); the (a2, b2) cylinder fills the slit
        SlitTorus t = slit_torus(chi.a[0], chi.b[0], chi.a[1], chi.ctx);
        std::vector<Vec2> p2 = {zero, chi.a[1], vadd(chi.a[1], chi.b[1]), chi.b[1]};
        ps.polys = {t.verts, p2};
        ps.pairing.assign(2, {});
        ps.pairing[0].assign(t.verts.size(), {-1, -1});
        ps.pairing[1].assign(4, {-1, -1});
        for (auto [e, f] : t.internal) {
            ps.pairing[0][e] = {0, f};
            ps.pairing[0][f] = {0, e};
        }
        ps.pairing[0][t.upper] = {1, 2}; // +w against the top of the cylinder (-w)
        ps.pairing[1][2] = {0, t.upper};
        ps.pairing[0][t.lower] = {1, 0};
        ps.pairing[1][0] = {0, t.lower};
        ps.pairing[1][1] = {1, 3}; // b2 sides glued together
        ps.pairing[1][3] = {1, 1};
        return ps;
    }

    // H(1,1): slit both tori along the relative period of the path joining
    // the zeros, then cross-glue the slit sides
    Vec2 v = chi.rel[0];
    SlitTorus t1 = slit_torus(chi.a[0], chi.b[0], v, chi.ctx);
    SlitTorus t2 = slit_torus(chi.a[1], chi.b[1], v, chi.ctx);
    ps.polys = {t1.verts, t2.verts};
    ps.pairing.assign(2, {});
    ps.pairing[0].assign(t1.verts.size(), {-1, -1});
    ps.pairing[1].assign(t2.verts.size(), {-1, -1});
    for (auto [e, f] : t1.internal) {
        ps.pairing[0][e] = {0, f};
        ps.pairing[0][f] = {0, e};
    }
    for (auto [e, f] : t2.internal) {
        ps.pairing[1][e] = {1, f};
        ps.pairing[1][f] = {1, e};
    }
    ps.pairing[0][t1.upper] = {1, t2.lower};
    ps.pairing[1][t2.lower] = {0, t1.upper};
    ps.pairing[1][t2.upper] = {0, t1.lower};
    ps.pairing[0][t1.lower] = {1, t2.upper};
    return ps;
}

} // namespace stratumforge
