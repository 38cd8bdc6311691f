#include "stratumforge/diagram.hpp"
#include "stratumforge/errors.hpp"

#include <algorithm>
#include <set>

namespace stratumforge {

namespace {

bool half_integer(const Rat& r) { return is_integer(r * 2); }

} // namespace

CompiledDiagram compile_diagram(const SlitTorusDiagram& dg) {
    if (dg.d < 1) fail(Errc::ParseError, "diagram width must be positive");
    if (dg.levels < 1) fail(Errc::ParseError, "diagram needs at least one level");
    if (dg.hpair.size() != dg.hslits.size() || dg.vpair.size() != dg.vslits.size())
        fail(Errc::UnmatchedSides, "pairing size differs from slit count");

    bool refine = false;
    for (auto& h : dg.hslits) {
        if (!half_integer(h.x0) || !half_integer(h.x1))
            fail(Errc::ParseError, "slit endpoints must be half-integers");
        if (!(Rat(0) <= h.x0 && h.x0 < h.x1 && h.x1 <= Rat(dg.d)))
            fail(Errc::ParseError, "slit endpoints out of range");
        if (h.level < 0 || h.level >= dg.levels) fail(Errc::ParseError, "slit level out of range");
        if (!is_integer(h.x0) || !is_integer(h.x1)) refine = true;
    }
    for (auto& v : dg.vslits) {
        if (!half_integer(v.x)) fail(Errc::ParseError, "slit endpoints must be half-integers");
        if (!(Rat(0) <= v.x && v.x < Rat(dg.d))) fail(Errc::ParseError, "slit position out of range");
        if (v.level < 0 || v.level >= dg.levels) fail(Errc::ParseError, "slit level out of range");
        if (!is_integer(v.x)) refine = true;
    }

    // pairings are bijections between matching-length sides
    {
        std::vector<char> hit(dg.hslits.size(), 0);
        for (size_t i = 0; i < dg.hslits.size(); ++i) {
            int j = dg.hpair[i];
            if (j < 0 || j >= (int)dg.hslits.size() || hit[j])
                fail(Errc::UnmatchedSides, "bottom/top pairing is not a bijection");
            hit[j] = 1;
            if (dg.hslits[i].x1 - dg.hslits[i].x0 != dg.hslits[j].x1 - dg.hslits[j].x0)
                fail(Errc::UnmatchedSides, "glued slit sides have different lengths");
        }
        std::vector<char> vhit(dg.vslits.size(), 0);
        for (size_t i = 0; i < dg.vslits.size(); ++i) {
            int j = dg.vpair[i];
            if (j < 0 || j >= (int)dg.vslits.size() || vhit[j])
                fail(Errc::UnmatchedSides, "left/right pairing is not a bijection");
            vhit[j] = 1;
        }
    }

    // overlap checks within a level
    for (size_t i = 0; i < dg.hslits.size(); ++i)
        for (size_t j = i + 1; j < dg.hslits.size(); ++j) {
            if (dg.hslits[i].level != dg.hslits[j].level) continue;
            if (dg.hslits[i].x0 < dg.hslits[j].x1 && dg.hslits[j].x0 < dg.hslits[i].x1)
                fail(Errc::OverlappingSlits, "horizontal slits overlap");
        }
    {
        std::set<std::pair<int, Rat>> seen;
        for (auto& v : dg.vslits)
            if (!seen.insert({v.level, v.x}).second)
                fail(Errc::OverlappingSlits, "vertical slits coincide");
    }

    CompiledDiagram cd;
    cd.sx = refine ? Rat(1, 2) : Rat(1);
    cd.sy = Rat(1, dg.levels);
    cd.cols = (int)rat_num(Rat(dg.d) / cd.sx);
    cd.rows = dg.levels;
    int W = cd.cols, H = cd.rows;
    int n = W * H;

    Perm right(n), up(n);
    for (int t = 0; t < H; ++t)
        for (int c = 0; c < W; ++c) {
            right[t * W + c] = t * W + (c + 1) % W;
            up[t * W + c] = ((t + 1) % H) * W + c;
        }

    auto col_of_x = [&](const Rat& x) {
        Rat c = x / cd.sx;
        if (!is_integer(c)) fail(Errc::Internal, "coordinate off the refined grid");
        return (int)rat_num(c);
    };

    std::vector<char> up_touched(n, 0), right_touched(n, 0);
    for (size_t i = 0; i < dg.hslits.size(); ++i) {
        const auto& a = dg.hslits[i];
        const auto& b = dg.hslits[dg.hpair[i]];
        int width = col_of_x(a.x1) - col_of_x(a.x0);
        int rbelow = (a.level - 1 + H) % H;
        for (int k = 0; k < width; ++k) {
            int below = rbelow * W + (col_of_x(a.x0) + k) % W;
            int above = b.level * W + (col_of_x(b.x0) + k) % W;
            if (up_touched[below]) fail(Errc::OverlappingSlits, "cell re-glued twice upward");
            up_touched[below] = 1;
            up[below] = above;
        }
    }
    for (size_t i = 0; i < dg.vslits.size(); ++i) {
        const auto& a = dg.vslits[i];
        const auto& b = dg.vslits[dg.vpair[i]];
        int left = a.level * W + (col_of_x(a.x) - 1 + W) % W;
        int rightcell = b.level * W + col_of_x(b.x) % W;
        if (right_touched[left]) fail(Errc::OverlappingSlits, "cell re-glued twice rightward");
        right_touched[left] = 1;
        right[left] = rightcell;
    }

    if (!is_permutation(up) || !is_permutation(right))
        fail(Errc::UnmatchedSides, "gluing does not close up");

    cd.surface = make_grid_surface(n, right, up, cd.sx, cd.sy);
    return cd;
}

std::vector<Rat> vertex_columns_on_level(const CompiledDiagram& cd, int vertex, int level) {
    const GridSurface& s = cd.surface;
    Rat want_y = Rat(level) * cd.sy;
    std::set<Rat> xs;
    for (int c : s.vertex_corners[vertex]) {
        int cell = c / 4, q = c % 4;
        Rat x = Rat(cd.col_of(cell)) * cd.sx + ((q == 1 || q == 2) ? cd.sx : Rat(0));
        Rat y = Rat(cd.row_of(cell)) * cd.sy + ((q == 2 || q == 3) ? cd.sy : Rat(0));
        Rat d(cd.cols);
        d *= cd.sx;
        if (x == d) x = 0;
        if (y == 1) y = 0;
        if (y == want_y) xs.insert(x);
    }
    return std::vector<Rat>(xs.begin(), xs.end());
}

} // namespace stratumforge
