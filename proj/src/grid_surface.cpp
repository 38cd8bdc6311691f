#include "stratumforge/grid_surface.hpp"
#include "stratumforge/errors.hpp"
#include "stratumforge/intmat.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

namespace stratumforge {

int Stratum::genus() const {
    int total = 0;
    for (int o : orders) total += o;
    if (total % 2) fail(Errc::Internal, "odd total order");
    return total / 2 + 1;
}

bool Stratum::all_even() const {
    for (int o : orders)
        if (o % 2) return false;
    return true;
}

std::string Stratum::str() const {
    std::ostringstream os;
    os << "H(";
    for (size_t i = 0; i < orders.size(); ++i) {
        if (i) os << ",";
        os << orders[i];
    }
    os << ")";
    return os.str();
}

Stratum parse_stratum(const std::string& s) {
    std::string t = s;
    if (t.size() >= 3 && (t[0] == 'H' || t[0] == 'h') && t[1] == '(' && t.back() == ')')
        t = t.substr(2, t.size() - 3);
    Stratum st;
    if (t.empty()) return st;
    std::istringstream is(t);
    std::string part;
    while (std::getline(is, part, ',')) {
        try {
            int o = std::stoi(part);
            if (o < 1) fail(Errc::ParseError, "zero order must be >= 1");
            st.orders.push_back(o);
        } catch (const std::invalid_argument&) {
            fail(Errc::ParseError, "bad stratum '" + s + "'");
        }
    }
    std::sort(st.orders.rbegin(), st.orders.rend());
    int total = std::accumulate(st.orders.begin(), st.orders.end(), 0);
    if (total % 2) fail(Errc::ParseError, "orders of '" + s + "' sum to an odd number");
    return st;
}

namespace {

enum Corner { BL = 0, BR = 1, TR = 2, TL = 3 };

// ccw rotation of a corner around its vertex
inline int corner_next(const GridSurface& s, const Perm& rinv, const Perm& uinv, int c) {
    int cell = c / 4, q = c % 4;
    switch (q) {
        case BL: return 4 * rinv[cell] + BR;
        case BR: return 4 * uinv[cell] + TR;
        case TR: return 4 * s.right[cell] + TL;
        default: return 4 * s.up[cell] + BL;
    }
}

// the half-edge ray at the ccw start of this corner's quarter sector
inline int corner_halfedge(const GridSurface& s, int c) {
    int cell = c / 4, q = c % 4;
    int n = s.n;
    switch (q) {
        case BL: return 2 * cell + 0;                  // tail of h_cell (east)
        case BR: return 2 * (n + s.right[cell]) + 0;   // tail of v_{r(cell)} (north)
        case TR: return 2 * s.up[cell] + 1;            // head of h_{u(cell)} (west)
        default: return 2 * (n + cell) + 1;            // head of v_cell (south)
    }
}

} // namespace

int GridSurface::edge_tail(int e) const {
    int cell = e < n ? e : e - n;
    return corner_vertex[4 * cell + BL];
}

int GridSurface::edge_head(int e) const {
    if (e < n) return corner_vertex[4 * e + BR];
    return corner_vertex[4 * (e - n) + TL];
}

std::array<Rat, 2> GridSurface::edge_disp(int e) const {
    if (e < n) return {sx, Rat(0)};
    return {Rat(0), sy};
}

int GridSurface::genus() const {
    int chi = num_vertices() - n; // V - E + F = V - 2n + n
    if ((2 - chi) % 2) fail(Errc::Internal, "odd Euler characteristic");
    return (2 - chi) / 2;
}

GridSurface make_grid_surface(int n, const Perm& r, const Perm& u, const Rat& sx, const Rat& sy) {
    if (n <= 0) fail(Errc::BadPermutation, "need at least one cell");
    if ((int)r.size() != n || (int)u.size() != n)
        fail(Errc::BadPermutation, "permutation size mismatch with n=" + std::to_string(n));
    if (!is_permutation(r) || !is_permutation(u))
        fail(Errc::BadPermutation, "image lists are not bijections on 1..n");
    if (sx <= 0 || sy <= 0) fail(Errc::BadPermutation, "scales must be positive");
    if (!transitive(r, u)) fail(Errc::NotTransitive, "cell graph is not connected");

    GridSurface s;
    s.n = n;
    s.right = r;
    s.up = u;
    s.sx = sx;
    s.sy = sy;

    Perm rinv = inverse(r), uinv = inverse(u);

    // vertices = ccw corner orbits
    s.corner_vertex.assign(4 * n, -1);
    s.halfedge_vertex.assign(4 * n, -1);
    s.halfedge_pos.assign(4 * n, -1);
    for (int c0 = 0; c0 < 4 * n; ++c0) {
        if (s.corner_vertex[c0] >= 0) continue;
        int v = (int)s.vertex_corners.size();
        std::vector<int> orbit;
        std::vector<int> rot;
        int c = c0;
        do {
            s.corner_vertex[c] = v;
            orbit.push_back(c);
            int he = corner_halfedge(s, c);
            if (s.halfedge_vertex[he] >= 0) fail(Errc::Internal, "half-edge visited twice");
            s.halfedge_vertex[he] = v;
            s.halfedge_pos[he] = (int)rot.size();
            rot.push_back(he);
            c = corner_next(s, rinv, uinv, c);
        } while (c != c0);
        if (orbit.size() % 4) fail(Errc::Internal, "corner orbit not divisible by 4");
        s.vertex_corners.push_back(std::move(orbit));
        s.rotation.push_back(std::move(rot));
    }

    // developing positions by forward BFS (r then u)
    s.cell_pos.assign(n, {Rat(0), Rat(0)});
    std::vector<char> seen(n, 0);
    std::queue<int> bfs;
    bfs.push(0);
    seen[0] = 1;
    while (!bfs.empty()) {
        int i = bfs.front();
        bfs.pop();
        int j = r[i];
        if (!seen[j]) {
            seen[j] = 1;
            s.cell_pos[j] = {s.cell_pos[i][0] + sx, s.cell_pos[i][1]};
            bfs.push(j);
        }
        j = u[i];
        if (!seen[j]) {
            seen[j] = 1;
            s.cell_pos[j] = {s.cell_pos[i][0], s.cell_pos[i][1] + sy};
            bfs.push(j);
        }
    }

    for (int v = 0; v < s.num_vertices(); ++v) {
        int ord = s.vertex_order(v);
        if (ord > 0) s.zero_marks.emplace_back(v, ord);
    }
    std::sort(s.zero_marks.begin(), s.zero_marks.end(), [](auto& a, auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    // Euler and cone-angle consistency
    int g = s.genus();
    int total = 0;
    for (auto& [v, o] : s.zero_marks) total += o;
    if (total != 2 * g - 2 && !(g == 1 && total == 0))
        fail(Errc::Internal, "cone angles disagree with Euler characteristic");
    return s;
}

Stratum stratum_of(const GridSurface& s) {
    Stratum st;
    for (auto& [v, o] : s.zero_marks) st.orders.push_back(o);
    return st;
}

CylinderDiagram cylinder_decomposition(const GridSurface& s) {
    int n = s.n;
    // rows = orbits of right
    std::vector<int> row_of(n, -1);
    std::vector<std::vector<int>> rows;
    for (auto& cyc : cycles_of(s.right)) {
        int id = (int)rows.size();
        std::vector<int> row = cyc;
        // order the row eastward starting from its smallest cell
        int start = (int)(std::min_element(row.begin(), row.end()) - row.begin());
        std::rotate(row.begin(), row.begin() + start, row.end());
        for (int c : row) row_of[c] = id;
        rows.push_back(std::move(row));
    }

    // the interface above row R is singular iff some vertex on it has a cone point
    auto interface_singular = [&](int rowid) {
        for (int i : rows[rowid]) {
            int v = s.corner_vertex[4 * i + TL];
            if (s.vertex_order(v) > 0) return true;
        }
        return false;
    };

    int nrows = (int)rows.size();
    std::vector<int> uf(nrows);
    std::iota(uf.begin(), uf.end(), 0);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    std::vector<char> clean(nrows, 0);
    for (int rw = 0; rw < nrows; ++rw) {
        if (!interface_singular(rw)) {
            clean[rw] = 1;
            int above = row_of[s.up[rows[rw][0]]];
            uf[find(rw)] = find(above);
        }
    }

    CylinderDiagram out;
    std::map<std::vector<int>, int> sc_ids; // sorted edge list -> id
    auto sc_of = [&](std::vector<int> edges) {
        Rat len = Rat((int)edges.size()) * s.sx;
        std::sort(edges.begin(), edges.end());
        auto it = sc_ids.find(edges);
        if (it != sc_ids.end()) return it->second;
        int id = (int)out.sc_length.size();
        sc_ids.emplace(std::move(edges), id);
        out.sc_length.push_back(len);
        return id;
    };

    // boundary walk: cells in eastward order; edge above cell i is h_{up(i)}
    // (top boundary) and edge below cell i is h_i (bottom boundary)
    auto boundary = [&](const std::vector<int>& cells, bool top) {
        std::vector<int> edges;   // edge id per step
        std::vector<char> cut;    // cut[t]: vertex between step t-1 and t is singular
        int k = (int)cells.size();
        for (int t = 0; t < k; ++t) {
            int i = cells[t];
            edges.push_back(top ? s.up[i] : i);
            int prev = cells[(t + k - 1) % k];
            int v = top ? s.corner_vertex[4 * prev + TR] : s.corner_vertex[4 * prev + BR];
            cut.push_back(s.vertex_order(v) > 0 ? 1 : 0);
        }
        int first = -1;
        for (int t = 0; t < k; ++t)
            if (cut[t]) { first = t; break; }
        std::vector<int> seq;
        if (first < 0) return seq; // closed geodesic boundary, no saddle connections
        std::vector<int> run;
        for (int t = 0; t <= k; ++t) {
            int at = (first + t) % k;
            if (t > 0 && cut[at]) {
                seq.push_back(sc_of(run));
                run.clear();
            }
            if (t == k) break;
            run.push_back(edges[at]);
        }
        return seq;
    };

    std::vector<int> comp_of(nrows, -1);
    for (int rw = 0; rw < nrows; ++rw) {
        int root = find(rw);
        if (comp_of[root] >= 0) continue;
        comp_of[root] = (int)out.cylinders.size();

        // collect the vertical stack of this cylinder
        std::vector<int> stack_rows;
        int bottom = rw;
        // walk down while the interface *below* is clean, without looping forever
        for (int steps = 0; steps < nrows; ++steps) {
            int below = row_of[inverse(s.up)[rows[bottom][0]]];
            if (clean[below] && find(below) == root && below != bottom) bottom = below;
            else break;
        }
        // closed torus direction: if everything is clean the stack wraps
        bool wraps = true;
        {
            int cur = bottom;
            for (int steps = 0; steps < nrows + 1; ++steps) {
                stack_rows.push_back(cur);
                if (!clean[cur]) { wraps = false; break; }
                int above = row_of[s.up[rows[cur][0]]];
                if (above == bottom) break;
                cur = above;
            }
        }

        CylinderDiagram::Cylinder cyl;
        int width = (int)rows[bottom].size();
        for (int rr : stack_rows)
            if ((int)rows[rr].size() != width) fail(Errc::Internal, "uneven cylinder rows");
        cyl.circumference = Rat(width) * s.sx;
        cyl.height = Rat((int)stack_rows.size()) * s.sy;
        if (!wraps) {
            int top_row = stack_rows.back();
            cyl.top = boundary(rows[top_row], true);
            cyl.bottom = boundary(rows[bottom], false);
        }
        out.cylinders.push_back(std::move(cyl));
    }
    return out;
}

PeriodLattice absolute_period_lattice(const GridSurface& s) {
    // spanning tree over vertices; images of fundamental cycles generate the lattice
    int V = s.num_vertices(), E = s.num_edges();
    std::vector<std::array<Rat, 2>> pot(V, {Rat(0), Rat(0)});
    std::vector<char> seen(V, 0);
    std::vector<char> intree(E, 0);
    std::queue<int> bfs;
    seen[0] = 1;
    bfs.push(0);
    // adjacency: for each vertex, incident edges
    std::vector<std::vector<int>> inc(V);
    for (int e = 0; e < E; ++e) {
        inc[s.edge_tail(e)].push_back(e);
        inc[s.edge_head(e)].push_back(e);
    }
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int e : inc[v]) {
            int t = s.edge_tail(e), h = s.edge_head(e);
            int w = (t == v) ? h : t;
            if (seen[w]) continue;
            seen[w] = 1;
            intree[e] = 1;
            auto d = s.edge_disp(e);
            if (t == v) pot[w] = {pot[v][0] + d[0], pot[v][1] + d[1]};
            else pot[w] = {pot[v][0] - d[0], pot[v][1] - d[1]};
            bfs.push(w);
        }
    }

    // cycles' images are integer multiples of (sx, 0) and (0, sy)
    IMat gens;
    for (int e = 0; e < E; ++e) {
        if (intree[e]) continue;
        auto d = s.edge_disp(e);
        Rat vx = pot[s.edge_tail(e)][0] + d[0] - pot[s.edge_head(e)][0];
        Rat vy = pot[s.edge_tail(e)][1] + d[1] - pot[s.edge_head(e)][1];
        Rat ax = vx / s.sx, ay = vy / s.sy;
        if (!is_integer(ax) || !is_integer(ay)) fail(Errc::Internal, "holonomy off the grid");
        if (ax == 0 && ay == 0) continue;
        gens.push_back({rat_num(ax), rat_num(ay)});
    }
    IMat h = hnf_rows(gens);
    PeriodLattice out;
    out.rank = (int)h.size();
    if (out.rank < 2) fail(Errc::RankDeficient, "absolute periods span rank " + std::to_string(out.rank));
    for (auto& row : h) out.basis.push_back({Rat(row[0]) * s.sx, Rat(row[1]) * s.sy});
    out.covolume = out.basis[0][0] * out.basis[1][1] - out.basis[0][1] * out.basis[1][0];
    if (out.covolume < 0) out.covolume = -out.covolume;
    out.is_unit = is_integer(out.basis[0][0]) && is_integer(out.basis[0][1]) &&
                  is_integer(out.basis[1][0]) && is_integer(out.basis[1][1]) && out.covolume == 1;
    return out;
}

std::array<Rat, 2> vertex_base_position(const GridSurface& s, int v) {
    int c = s.vertex_corners[v][0];
    int cell = c / 4, q = c % 4;
    Rat x = s.cell_pos[cell][0], y = s.cell_pos[cell][1];
    if (q == BR || q == TR) x += s.sx;
    if (q == TL || q == TR) y += s.sy;
    auto frac = [](const Rat& r) { return r - Rat(floor_rat(r)); };
    return {frac(x), frac(y)};
}

BranchProfile branch_profile(const GridSurface& s) {
    PeriodLattice lat = absolute_period_lattice(s);
    if (!lat.is_unit)
        fail(Errc::NotPrimitive, "absolute period lattice is not Z+iZ; base positions ambiguous");
    Rat vol = s.volume();
    if (!is_integer(vol)) fail(Errc::Internal, "non-integer volume over unit lattice");
    BranchProfile out;
    out.degree = (int)rat_num(vol);

    // sanity: all corners of a vertex sit over one base point
    auto frac = [](const Rat& r) { return r - Rat(floor_rat(r)); };
    for (size_t k = 0; k < s.zero_marks.size(); ++k) {
        int v = s.zero_marks[k].first;
        auto p0 = vertex_base_position(s, v);
        for (int c : s.vertex_corners[v]) {
            int cell = c / 4, q = c % 4;
            Rat x = s.cell_pos[cell][0] + ((q == BR || q == TR) ? s.sx : Rat(0));
            Rat y = s.cell_pos[cell][1] + ((q == TL || q == TR) ? s.sy : Rat(0));
            if (frac(x) != p0[0] || frac(y) != p0[1])
                fail(Errc::Internal, "vertex corners over distinct base points");
        }
        int at = -1;
        for (size_t t = 0; t < out.points.size(); ++t)
            if (out.points[t] == p0) { at = (int)t; break; }
        if (at < 0) {
            at = (int)out.points.size();
            out.points.push_back(p0);
            out.zero_classes.emplace_back();
        }
        out.zero_classes[at].push_back((int)k);
    }
    for (size_t t = 0; t < out.points.size(); ++t) {
        std::vector<int> part;
        int used = 0;
        for (int k : out.zero_classes[t]) {
            part.push_back(s.zero_marks[k].second + 1);
            used += s.zero_marks[k].second + 1;
        }
        std::sort(part.rbegin(), part.rend());
        if (used > out.degree) fail(Errc::Internal, "local degrees exceed covering degree");
        part.insert(part.end(), out.degree - used, 1);
        out.local_degrees.push_back(std::move(part));
    }
    return out;
}

std::vector<std::vector<int>> BranchProfile::psi() const { return zero_classes; }

namespace {

std::pair<Perm, Perm> bfs_relabel(const GridSurface& s, int start) {
    int n = s.n;
    std::vector<int> newid(n, -1);
    std::vector<int> order;
    order.reserve(n);
    newid[start] = 0;
    order.push_back(start);
    for (int at = 0; at < (int)order.size(); ++at) {
        int i = order[at];
        for (int j : {s.right[i], s.up[i]}) {
            if (newid[j] < 0) {
                newid[j] = (int)order.size();
                order.push_back(j);
            }
        }
    }
    if ((int)order.size() != n) fail(Errc::NotTransitive, "forward exploration incomplete");
    Perm r2(n), u2(n);
    for (int i = 0; i < n; ++i) {
        r2[newid[i]] = newid[s.right[i]];
        u2[newid[i]] = newid[s.up[i]];
    }
    return {r2, u2};
}

} // namespace

GridSurface canonical_form(const GridSurface& s) {
    std::pair<Perm, Perm> best;
    bool have = false;
    for (int start = 0; start < s.n; ++start) {
        auto cand = bfs_relabel(s, start);
        if (!have || cand < best) {
            best = cand;
            have = true;
        }
    }
    return make_grid_surface(s.n, best.first, best.second, s.sx, s.sy);
}

bool isomorphic(const GridSurface& a, const GridSurface& b) {
    if (a.n != b.n || a.sx != b.sx || a.sy != b.sy) return false;
    GridSurface ca = canonical_form(a), cb = canonical_form(b);
    return ca.right == cb.right && ca.up == cb.up;
}

} // namespace stratumforge
