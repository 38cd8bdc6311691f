#include "stratumforge/invariants.hpp"
#include "stratumforge/errors.hpp"

#include <algorithm>

namespace stratumforge {

const char* label_str(Label l) {
    switch (l) {
        case Label::Hyperelliptic: return "hyp";
        case Label::SpinEven: return "even";
        case Label::SpinOdd: return "odd";
        case Label::NonHyperelliptic: return "nonhyp";
        case Label::Connected: return "conn";
    }
    return "?";
}

std::optional<Label> parse_label(const std::string& s) {
    if (s == "hyp") return Label::Hyperelliptic;
    if (s == "even") return Label::SpinEven;
    if (s == "odd") return Label::SpinOdd;
    if (s == "nonhyp") return Label::NonHyperelliptic;
    if (s == "conn") return Label::Connected;
    return std::nullopt;
}

std::set<Label> stratum_components(const Stratum& st) {
    int g = st.genus();
    if (g < 2) fail(Errc::WrongGenus, "component labels need genus >= 2");
    int k = st.zero_count();
    bool minimal = (k == 1);
    bool equal_pair = (k == 2 && st.orders[0] == st.orders[1]);
    if (g == 2) return {Label::Connected}; // H(2) and H(1,1)
    if (g == 3) {
        if (minimal || equal_pair) return {Label::Hyperelliptic, Label::SpinOdd};
        return {Label::Connected};
    }
    if (minimal) return {Label::Hyperelliptic, Label::SpinEven, Label::SpinOdd};
    if (equal_pair) {
        if (g % 2 == 1) return {Label::Hyperelliptic, Label::SpinEven, Label::SpinOdd};
        return {Label::Hyperelliptic, Label::NonHyperelliptic};
    }
    if (st.all_even()) return {Label::SpinEven, Label::SpinOdd};
    return {Label::Connected};
}

int arf_invariant(const GridSurface& s) {
    for (auto& [v, o] : s.zero_marks)
        if (o % 2) fail(Errc::OddOrderZero, "Arf invariant undefined with an odd-order zero");
    SymplecticBasis b = homology_symplectic_basis(s);
    int g = s.genus();
    int arf = 0;
    for (int i = 0; i < g; ++i) {
        int qa = q_parity_resolved(s, b.cycles[2 * i]);
        int qb = q_parity_resolved(s, b.cycles[2 * i + 1]);
        arf ^= qa & qb;
    }
    return arf;
}

std::vector<FlatInvolution> involution_search(const GridSurface& s) {
    // marks are grid vertices, so every -id automorphism maps cells to cells;
    // candidate cell maps are pinned by the image of cell 0
    int n = s.n;
    Perm rinv = inverse(s.right), uinv = inverse(s.up);
    std::vector<FlatInvolution> out;
    for (int img0 = 0; img0 < n; ++img0) {
        Perm m(n, -1);
        m[0] = img0;
        std::vector<int> stack{0};
        bool ok = true;
        while (!stack.empty() && ok) {
            int i = stack.back();
            stack.pop_back();
            // phi(r(i)) = r^-1(phi(i)), phi(u(i)) = u^-1(phi(i))
            std::pair<int, int> props[2] = {{s.right[i], rinv[m[i]]}, {s.up[i], uinv[m[i]]}};
            for (auto [j, mj] : props) {
                if (m[j] < 0) {
                    m[j] = mj;
                    stack.push_back(j);
                } else if (m[j] != mj) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        if (!is_permutation(m)) continue;
        bool invol = true;
        for (int i = 0; i < n && invol; ++i) invol = (m[m[i]] == i);
        if (!invol) continue;

        FlatInvolution f;
        f.cells = m;
        for (int i = 0; i < n; ++i) {
            if (m[i] == i) ++f.fixed_cells;
            if (s.up[m[i]] == i) ++f.fixed_hedges;       // bottom side of i fixed
            if (s.right[m[i]] == i) ++f.fixed_vedges;    // left side of i fixed
        }
        // vertex map: corner (i, q) -> (m(i), opposite(q))
        int V = s.num_vertices();
        for (int v = 0; v < V; ++v) {
            int c = s.vertex_corners[v][0];
            int cell = c / 4, q = c % 4;
            int img = s.corner_vertex[4 * m[cell] + ((q + 2) % 4)];
            if (img == v) ++f.fixed_vertices;
        }
        int g = s.genus();
        int F = f.fixed_points();
        if ((2 + 2 * g - F) % 4) fail(Errc::Internal, "involution census violates Riemann-Hurwitz");
        f.quotient_genus = (2 + 2 * g - F) / 4;
        // covered base map z -> c - z with c = pos(i) + pos(m(i)) + (sx, sy)
        {
            auto frac = [](const Rat& r) { return r - Rat(floor_rat(r)); };
            Rat cx = s.cell_pos[0][0] + s.cell_pos[m[0]][0] + s.sx;
            Rat cy = s.cell_pos[0][1] + s.cell_pos[m[0]][1] + s.sy;
            f.shift = {frac(cx), frac(cy)};
        }
        if (s.zero_marks.size() == 2) {
            int v0 = s.zero_marks[0].first;
            int c = s.vertex_corners[v0][0];
            int img = s.corner_vertex[4 * m[c / 4] + ((c % 4 + 2) % 4)];
            f.swaps_zeros = (img == s.zero_marks[1].first);
        }
        out.push_back(std::move(f));
    }
    std::sort(out.begin(), out.end(),
              [](const FlatInvolution& a, const FlatInvolution& b) { return a.cells < b.cells; });
    return out;
}

bool single_cylinder_hyperelliptic_check(const CylinderDiagram& c) {
    if (c.cylinders.size() != 1)
        fail(Errc::NotSingleCylinder, "surface has " + std::to_string(c.cylinders.size()) + " cylinders");
    const auto& top = c.cylinders[0].top;
    const auto& bot = c.cylinders[0].bottom;
    int k = (int)top.size();
    if ((int)bot.size() != k) fail(Errc::Internal, "boundary lengths differ");
    if (k == 0) return true; // closed geodesic boundaries
    for (int rot = 0; rot < k; ++rot) {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i)
            ok = (bot[i] == top[((rot - i) % k + k) % k]);
        if (ok) return true;
    }
    return false;
}

namespace {

bool is_hyperelliptic(const GridSurface& s) {
    int k = (int)s.zero_marks.size();
    for (const auto& f : involution_search(s)) {
        if (f.quotient_genus != 0) continue;
        if (k == 1) return true;
        if (k == 2 && f.swaps_zeros) return true;
    }
    return false;
}

} // namespace

ComponentLabel component_of(const GridSurface& s) {
    Stratum st = stratum_of(s);
    int g = s.genus();
    if (g < 2) fail(Errc::WrongGenus, "component labels need genus >= 2");
    std::set<Label> labels = stratum_components(st);
    if (labels.size() == 1) return {Label::Connected, st};

    bool hyp_possible = labels.count(Label::Hyperelliptic) > 0;
    if (hyp_possible && is_hyperelliptic(s)) return {Label::Hyperelliptic, st};

    if (labels.count(Label::NonHyperelliptic)) return {Label::NonHyperelliptic, st};

    int arf = arf_invariant(s);
    Label spin = arf ? Label::SpinOdd : Label::SpinEven;
    if (!labels.count(spin))
        fail(Errc::Internal, "spin label absent from the stratum's component set");
    return {spin, st};
}

} // namespace stratumforge
