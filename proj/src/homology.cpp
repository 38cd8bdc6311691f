#include "stratumforge/homology.hpp"
#include "stratumforge/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

namespace stratumforge {

Chain path_chain(const GridSurface& s, const Path& p) {
    Chain c(s.num_edges(), 0);
    for (auto& d : p) c[d.edge] += d.forward ? 1 : -1;
    return c;
}

bool is_cycle(const GridSurface& s, const Chain& c) {
    std::vector<long long> flow(s.num_vertices(), 0);
    for (int e = 0; e < s.num_edges(); ++e) {
        if (!c[e]) continue;
        flow[s.edge_tail(e)] -= c[e];
        flow[s.edge_head(e)] += c[e];
    }
    for (auto f : flow)
        if (f) return false;
    return true;
}

std::array<Rat, 2> chain_period(const GridSurface& s, const Chain& c) {
    std::array<Rat, 2> p{Rat(0), Rat(0)};
    for (int e = 0; e < s.num_edges(); ++e) {
        if (!c[e]) continue;
        auto d = s.edge_disp(e);
        p[0] += Rat(c[e]) * d[0];
        p[1] += Rat(c[e]) * d[1];
    }
    return p;
}

Chain face_boundary(const GridSurface& s, int cell) {
    Chain c(s.num_edges(), 0);
    c[cell] += 1;                     // bottom, east
    c[s.n + s.right[cell]] += 1;      // right side, north
    c[s.up[cell]] -= 1;               // top, west
    c[s.n + cell] -= 1;               // left side, south
    return c;
}

namespace {

constexpr long long kStrandBudget = 200000;

// endpoint of a strand on a vertex-disk boundary
struct EP {
    int rot_pos;   // half-edge position in the vertex rotation list
    int block;     // class block rank at this half-edge
    long long lane_rank;
    int cls;
    long long lane; // global lane id within its class
    bool arrival;  // strand flows into the disk here
    int halfedge;
    bool operator<(const EP& o) const {
        if (rot_pos != o.rot_pos) return rot_pos < o.rot_pos;
        if (block != o.block) return block < o.block;
        return lane_rank < o.lane_rank;
    }
};

struct Arc {
    int vertex;
    int pos_in, pos_out; // circular indices in the vertex endpoint list
    int he_in, he_out;
    long long lane_in, lane_out;
    int cls;
};

struct Resolution {
    std::vector<std::vector<EP>> disks; // per vertex, circularly sorted
    std::vector<Arc> arcs;
    // per class: lane -> edge / direction, and lane arrival -> arc index
    std::vector<std::vector<int>> lane_edge;
    std::vector<std::vector<char>> lane_fwd;
    std::vector<std::vector<int>> arrival_arc;
};

Resolution resolve(const GridSurface& s, const std::vector<const Chain*>& chains) {
    Resolution r;
    int ncls = (int)chains.size();
    r.disks.resize(s.num_vertices());
    r.lane_edge.resize(ncls);
    r.lane_fwd.resize(ncls);
    r.arrival_arc.resize(ncls);

    long long budget = 0;
    for (int cls = 0; cls < ncls; ++cls) {
        const Chain& c = *chains[cls];
        if ((int)c.size() != s.num_edges()) fail(Errc::Internal, "chain size mismatch");
        for (int e = 0; e < s.num_edges(); ++e) {
            long long k = c[e];
            if (!k) continue;
            budget += std::abs(k);
            if (budget > kStrandBudget) fail(Errc::BoundExceeded, "chain coefficients too large to resolve");
            bool fwd = k > 0;
            long long cnt = std::abs(k);
            for (long long t = 0; t < cnt; ++t) {
                long long lane = (long long)r.lane_edge[cls].size();
                r.lane_edge[cls].push_back(e);
                r.lane_fwd[cls].push_back(fwd);
                for (int end = 0; end < 2; ++end) {
                    int he = 2 * e + end;
                    int v = s.halfedge_vertex[he];
                    bool tail_end = (end == 0);
                    // forward strands depart at the tail, arrive at the head
                    bool arrival = (fwd != tail_end);
                    EP ep;
                    ep.rot_pos = s.halfedge_pos[he];
                    ep.block = tail_end ? cls : (ncls - 1 - cls);
                    ep.lane_rank = tail_end ? (cnt - t) : t;
                    ep.cls = cls;
                    ep.lane = lane;
                    ep.arrival = arrival;
                    ep.halfedge = he;
                    r.disks[v].push_back(ep);
                }
            }
        }
        r.arrival_arc[cls].assign(r.lane_edge[cls].size(), -1);
    }

    for (int v = 0; v < s.num_vertices(); ++v) {
        auto& eps = r.disks[v];
        std::sort(eps.begin(), eps.end());
        for (int cls = 0; cls < ncls; ++cls) {
            std::vector<int> ins, outs;
            for (int i = 0; i < (int)eps.size(); ++i) {
                if (eps[i].cls != cls) continue;
                (eps[i].arrival ? ins : outs).push_back(i);
            }
            if (ins.size() != outs.size()) fail(Errc::Internal, "chain is not a cycle");
            for (size_t t = 0; t < ins.size(); ++t) {
                Arc a;
                a.vertex = v;
                a.pos_in = ins[t];
                a.pos_out = outs[t];
                a.he_in = eps[ins[t]].halfedge;
                a.he_out = eps[outs[t]].halfedge;
                a.lane_in = eps[ins[t]].lane;
                a.lane_out = eps[outs[t]].lane;
                a.cls = cls;
                r.arrival_arc[cls][a.lane_in] = (int)r.arcs.size();
                r.arcs.push_back(a);
            }
        }
    }
    return r;
}

inline bool in_open_ccw_arc(int x, int a, int b, int m) {
    // is x strictly inside the ccw arc from a to b (positions mod m, all distinct)
    if (a == b) return false;
    int xx = (x - a + m) % m, bb = (b - a + m) % m;
    return xx > 0 && xx < bb;
}

int signed_crossing(const Arc& x, const Arc& y, int m) {
    if (x.vertex != y.vertex) return 0;
    bool qo = in_open_ccw_arc(y.pos_out, x.pos_out, x.pos_in, m);
    bool qi = in_open_ccw_arc(y.pos_in, x.pos_out, x.pos_in, m);
    if (qo == qi) return 0;
    return qo ? 1 : -1;
}

// turning of a disk arc in quarter turns, left resolution; m = rotation size
long long arc_turning(const GridSurface& s, const Arc& a) {
    int v = a.vertex;
    int m = (int)s.rotation[v].size();
    int steps = ((s.halfedge_pos[a.he_out] - s.halfedge_pos[a.he_in]) % m + m) % m;
    if (steps == 0) steps = m;
    return steps - 2;
}

} // namespace

long long intersection(const GridSurface& s, const Chain& x, const Chain& y) {
    Resolution r = resolve(s, {&x, &y});
    long long total = 0;
    // group arcs per vertex
    for (int v = 0; v < s.num_vertices(); ++v) {
        int m = (int)r.disks[v].size();
        if (!m) continue;
        std::vector<const Arc*> ax, ay;
        for (auto& a : r.arcs) {
            if (a.vertex != v) continue;
            (a.cls == 0 ? ax : ay).push_back(&a);
        }
        for (auto* a : ax)
            for (auto* b : ay) total += signed_crossing(*a, *b, m);
    }
    return total;
}

ResolvedCurve resolve_cycle(const GridSurface& s, const Chain& c) {
    ResolvedCurve out;
    Resolution r = resolve(s, {&c});
    long long nlanes = (long long)r.lane_edge[0].size();
    if (!nlanes) return out;

    // trace: lane -> next lane through the disk arc at its arrival end
    std::vector<long long> next(nlanes, -1);
    std::vector<long long> turn_of_arc_target(nlanes, 0);
    for (auto& a : r.arcs) next[a.lane_in] = a.lane_out;
    std::vector<char> seen(nlanes, 0);
    for (long long l0 = 0; l0 < nlanes; ++l0) {
        if (seen[l0]) continue;
        ++out.components;
        long long turning = 0;
        long long l = l0;
        do {
            seen[l] = 1;
            int arc = r.arrival_arc[0][l];
            if (arc < 0) fail(Errc::Internal, "unmatched strand");
            turning += arc_turning(s, r.arcs[arc]);
            l = r.arcs[arc].lane_out;
        } while (l != l0);
        if (turning % 4) fail(Errc::Internal, "component turning not a full number of turns");
        out.turning_quarters += turning;
    }

    // self double points: interleaved arc pairs at each vertex
    for (int v = 0; v < s.num_vertices(); ++v) {
        int m = (int)r.disks[v].size();
        if (!m) continue;
        std::vector<const Arc*> arcs;
        for (auto& a : r.arcs)
            if (a.vertex == v) arcs.push_back(&a);
        for (size_t i = 0; i < arcs.size(); ++i)
            for (size_t j = i + 1; j < arcs.size(); ++j) {
                bool bi = in_open_ccw_arc(arcs[j]->pos_in, arcs[i]->pos_in, arcs[i]->pos_out, m);
                bool bo = in_open_ccw_arc(arcs[j]->pos_out, arcs[i]->pos_in, arcs[i]->pos_out, m);
                if (bi != bo) ++out.self_crossings;
            }
    }
    return out;
}

long long ResolvedCurve::index_sum() const { return turning_quarters / 4; }

int q_parity_resolved(const GridSurface& s, const Chain& c) {
    for (auto& [v, o] : s.zero_marks)
        if (o % 2) fail(Errc::OddOrderZero, "spin parity undefined with an odd-order zero");
    if (!is_cycle(s, c)) fail(Errc::Internal, "q of a non-cycle");
    ResolvedCurve r = resolve_cycle(s, c);
    return (int)(((r.index_sum() + r.components + r.self_crossings) % 2 + 2) % 2);
}

std::vector<Chain> homology_basis(const GridSurface& s) {
    int V = s.num_vertices(), E = s.num_edges();
    // spanning tree
    std::vector<int> parent_edge(V, -1);
    std::vector<char> seen(V, 0), intree(E, 0);
    std::vector<std::vector<int>> inc(V);
    for (int e = 0; e < E; ++e) {
        inc[s.edge_tail(e)].push_back(e);
        inc[s.edge_head(e)].push_back(e);
    }
    std::queue<int> bfs;
    seen[0] = 1;
    bfs.push(0);
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        for (int e : inc[v]) {
            int w = (s.edge_tail(e) == v) ? s.edge_head(e) : s.edge_tail(e);
            if (seen[w]) continue;
            seen[w] = 1;
            intree[e] = 1;
            parent_edge[w] = e;
            bfs.push(w);
        }
    }
    // adds sign * (chain of the tree path from v back to the root)
    auto tree_chain = [&](int v, Chain& c, long long sign) {
        while (parent_edge[v] >= 0) {
            int e = parent_edge[v];
            if (s.edge_head(e) == v && s.edge_tail(e) != v) {
                c[e] -= sign; // traversed backwards: head -> tail
                v = s.edge_tail(e);
            } else {
                c[e] += sign;
                v = s.edge_head(e);
            }
        }
    };

    std::vector<Chain> fund;
    std::vector<int> fund_edge;
    for (int e = 0; e < E; ++e) {
        if (intree[e]) continue;
        Chain c(E, 0);
        c[e] += 1;
        tree_chain(s.edge_head(e), c, 1);
        tree_chain(s.edge_tail(e), c, -1);
        fund.push_back(std::move(c));
        fund_edge.push_back(e);
    }
    int cdim = (int)fund.size();

    // faces in fundamental-cycle coordinates: coefficients on non-tree edges
    IMat b = imat_zero(cdim, s.n);
    for (int f = 0; f < s.n; ++f) {
        Chain fb = face_boundary(s, f);
        for (int j = 0; j < cdim; ++j) b[j][f] = fb[fund_edge[j]];
    }
    Snf sn = snf(b);
    // quotient basis: columns of P^-1 at zero diagonal entries; d entries must be 0/1
    int t = std::min(cdim, s.n);
    std::vector<int> free_idx;
    for (int i = 0; i < cdim; ++i) {
        Int di = (i < t) ? sn.d[i][i] : Int(0);
        if (di == 0) free_idx.push_back(i);
        else if (di != 1) fail(Errc::Internal, "torsion in H1 of a closed orientable surface");
    }
    // pinv columns: invert the unimodular P by solving P X = I
    // (sizes are small; Gaussian elimination over Q with exactness)
    int m = cdim;
    QMat a(m, std::vector<Rat>(2 * m, Rat(0)));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) a[i][j] = Rat(sn.p[i][j]);
        a[i][m + i] = 1;
    }
    for (int c = 0; c < m; ++c) {
        int piv = -1;
        for (int i = c; i < m; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) fail(Errc::Internal, "singular unimodular matrix");
        std::swap(a[c], a[piv]);
        for (int i = 0; i < m; ++i) {
            if (i == c || a[i][c] == 0) continue;
            Rat f = a[i][c] / a[c][c];
            for (int j = c; j < 2 * m; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Chain> basis;
    for (int idx : free_idx) {
        Chain c(E, 0);
        for (int j = 0; j < m; ++j) {
            Rat coef = a[j][m + idx] / a[j][j];
            if (coef == 0) continue;
            if (!is_integer(coef)) fail(Errc::Internal, "non-integer quotient basis");
            long long k = (long long)rat_num(coef);
            for (int e = 0; e < E; ++e) c[e] += k * fund[j][e];
        }
        basis.push_back(std::move(c));
    }
    int g = s.genus();
    if ((int)basis.size() != 2 * g) fail(Errc::Internal, "homology rank mismatch");
    return basis;
}

IMat intersection_gram(const GridSurface& s, const std::vector<Chain>& cycles) {
    int m = (int)cycles.size();
    IMat gr = imat_zero(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            long long v = intersection(s, cycles[i], cycles[j]);
            gr[i][j] = v;
            gr[j][i] = -v;
        }
    return gr;
}

namespace {

// U with U M U^T in symplectic normal form; requires M unimodular alternating.
IMat symplectic_reduce(IMat m) {
    int n = (int)m.size();
    IMat u = imat_identity(n);
    auto colrow = [&](int j, int c, const Int& f) {
        if (f == 0) return;
        for (int i = 0; i < n; ++i) m[i][j] += f * m[i][c];
        for (int i = 0; i < n; ++i) m[j][i] += f * m[c][i];
        for (int i = 0; i < n; ++i) u[j][i] += f * u[c][i];
    };
    auto swap_rc = [&](int a, int b) {
        if (a == b) return;
        for (int i = 0; i < n; ++i) std::swap(m[i][a], m[i][b]);
        std::swap(m[a], m[b]);
        std::swap(u[a], u[b]);
    };
    auto negate_rc = [&](int a) {
        for (int i = 0; i < n; ++i) m[i][a] = -m[i][a];
        for (int i = 0; i < n; ++i) m[a][i] = -m[a][i];
        for (int i = 0; i < n; ++i) u[a][i] = -u[a][i];
    };
    for (int t = 0; t + 1 < n; t += 2) {
        // gcd out row t beyond column t
        while (true) {
            int nz = 0, cmin = -1;
            for (int c = t + 1; c < n; ++c) {
                if (m[t][c] == 0) continue;
                ++nz;
                if (cmin < 0 || abs(m[t][c]) < abs(m[t][cmin])) cmin = c;
            }
            if (cmin < 0) fail(Errc::Internal, "degenerate intersection form");
            if (nz == 1) {
                if (m[t][cmin] < 0) negate_rc(cmin);
                if (m[t][cmin] != 1) fail(Errc::Internal, "intersection form not unimodular");
                swap_rc(cmin, t + 1);
                break;
            }
            for (int c = t + 1; c < n; ++c) {
                if (c == cmin || m[t][c] == 0) continue;
                Int q = m[t][c] / m[t][cmin];
                colrow(c, cmin, -q);
            }
        }
        for (int j = t + 2; j < n; ++j) {
            Int a = m[t][j], b = m[t + 1][j];
            colrow(j, t + 1, -a);
            colrow(j, t, b);
        }
    }
    return u;
}

} // namespace

SymplecticBasis homology_symplectic_basis(const GridSurface& s) {
    SymplecticBasis out;
    std::vector<Chain> basis = homology_basis(s);
    int m = (int)basis.size();
    IMat gr = intersection_gram(s, basis);
    IMat u = symplectic_reduce(gr);
    out.cycles.assign(m, Chain(s.num_edges(), 0));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (u[i][j] == 0) continue;
            long long k = (long long)u[i][j];
            for (int e = 0; e < s.num_edges(); ++e) out.cycles[i][e] += k * basis[j][e];
        }
    out.gram = intersection_gram(s, out.cycles);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            Int expect = 0;
            if (j == i + 1 && i % 2 == 0) expect = 1;
            if (j == i - 1 && i % 2 == 1) expect = -1;
            if (out.gram[i][j] != expect) fail(Errc::Internal, "symplectic reduction failed");
        }
    for (auto& c : out.cycles) out.paths.push_back(chain_to_path(s, c));
    return out;
}

int SpinForm::eval(const Chain& c) const {
    if ((int)c.size() != n_edges) fail(Errc::Internal, "chain size");
    std::vector<char> rhs(n_edges);
    for (int e = 0; e < n_edges; ++e) rhs[e] = (char)(((c[e] % 2) + 2) % 2);
    // solver rows are RREF of [A | I]; apply the recorded transform
    std::vector<char> x(n_basis + n_faces, 0);
    for (size_t r = 0; r < solver.size(); ++r) {
        char y = 0;
        for (int e = 0; e < n_edges; ++e)
            if (solver[r][n_basis + n_faces + e]) y ^= rhs[e];
        int pc = pivot_col[r];
        if (pc < 0) {
            if (y) fail(Errc::Internal, "chain not a mod-2 cycle");
        } else {
            x[pc] = y;
        }
    }
    int q = 0;
    for (int i = 0; i < n_basis; ++i)
        if (x[i]) q ^= qvals[i];
    for (int i = 0; i < n_basis; ++i)
        for (int j = i + 1; j < n_basis; ++j)
            if (x[i] && x[j] && (gram[i][j] % 2 != 0)) q ^= 1;
    return q;
}

SpinForm spin_form(const GridSurface& s) {
    for (auto& [v, o] : s.zero_marks)
        if (o % 2) fail(Errc::OddOrderZero, "spin parity undefined with an odd-order zero");
    SpinForm f;
    SymplecticBasis sb = homology_symplectic_basis(s);
    f.basis = sb.cycles;
    f.gram = sb.gram;
    for (auto& c : f.basis) f.qvals.push_back(q_parity_resolved(s, c));
    f.n_edges = s.num_edges();
    f.n_basis = (int)f.basis.size();
    f.n_faces = s.n;
    // GF(2) RREF of [basis | faces | I]
    int vars = f.n_basis + f.n_faces;
    std::vector<std::vector<char>> rows(f.n_edges, std::vector<char>(vars + f.n_edges, 0));
    for (int e = 0; e < f.n_edges; ++e) {
        for (int i = 0; i < f.n_basis; ++i) rows[e][i] = (char)(((f.basis[i][e] % 2) + 2) % 2);
        for (int i = 0; i < f.n_faces; ++i) {
            Chain fb = face_boundary(s, i);
            rows[e][f.n_basis + i] = (char)(((fb[e] % 2) + 2) % 2);
        }
        rows[e][vars + e] = 1;
    }
    int r = 0;
    std::vector<int> pivots;
    for (int c = 0; c < vars && r < f.n_edges; ++c) {
        int piv = -1;
        for (int i = r; i < f.n_edges; ++i)
            if (rows[i][c]) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(rows[r], rows[piv]);
        for (int i = 0; i < f.n_edges; ++i) {
            if (i == r || !rows[i][c]) continue;
            for (int j = 0; j < vars + f.n_edges; ++j) rows[i][j] ^= rows[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    for (int i = 0; i < f.n_edges; ++i) {
        f.solver.push_back(rows[i]);
        f.pivot_col.push_back(i < (int)pivots.size() ? pivots[i] : -1);
    }
    return f;
}

long long winding_index(const GridSurface& s, const Path& p, Detour d) {
    if (p.empty()) fail(Errc::Internal, "empty path");
    long long total = 0;
    int L = (int)p.size();
    for (int t = 0; t < L; ++t) {
        const DirectedEdge& cur = p[t];
        const DirectedEdge& nxt = p[(t + 1) % L];
        int he_arr = 2 * cur.edge + (cur.forward ? 1 : 0);
        int he_dep = 2 * nxt.edge + (nxt.forward ? 0 : 1);
        int v = s.halfedge_vertex[he_arr];
        if (s.halfedge_vertex[he_dep] != v) fail(Errc::Internal, "path is not contiguous");
        int m = (int)s.rotation[v].size();
        int steps = ((s.halfedge_pos[he_dep] - s.halfedge_pos[he_arr]) % m + m) % m;
        if (d == Detour::Left) {
            if (steps == 0) steps = m;
            total += steps - 2;
        } else {
            total += steps + 2 - m;
        }
    }
    if (total % 4) fail(Errc::Internal, "path turning not a full number of turns");
    return total / 4;
}

int winding_parity(const GridSurface& s, const Path& p, Detour d) {
    for (auto& [v, o] : s.zero_marks)
        if (o % 2)
            fail(Errc::OddOrderZero, "winding parity undefined with an odd-order zero");
    long long ind = winding_index(s, p, d);
    return (int)(((ind % 2) + 2) % 2);
}

Path vertex_path(const GridSurface& s, int from, int to) {
    int V = s.num_vertices();
    std::vector<std::vector<std::pair<int, bool>>> adj(V); // (edge, forward-from-here)
    for (int e = 0; e < s.num_edges(); ++e) {
        adj[s.edge_tail(e)].push_back({e, true});
        adj[s.edge_head(e)].push_back({e, false});
    }
    std::vector<int> prev(V, -1);
    std::vector<std::pair<int, bool>> via(V, {-1, true});
    std::queue<int> bfs;
    prev[from] = from;
    bfs.push(from);
    while (!bfs.empty()) {
        int v = bfs.front();
        bfs.pop();
        if (v == to) break;
        for (auto [e, fwd] : adj[v]) {
            int w = fwd ? s.edge_head(e) : s.edge_tail(e);
            if (prev[w] >= 0) continue;
            prev[w] = v;
            via[w] = {e, fwd};
            bfs.push(w);
        }
    }
    Path rev;
    int v = to;
    while (v != from) {
        rev.push_back({via[v].first, via[v].second});
        v = prev[v];
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
}

Path chain_to_path(const GridSurface& s, const Chain& c) {
    if (!is_cycle(s, c)) fail(Errc::Internal, "chain is not a cycle");
    // directed multigraph of the support
    int V = s.num_vertices();
    std::vector<std::vector<DirectedEdge>> outs(V);
    for (int e = 0; e < s.num_edges(); ++e) {
        long long k = c[e];
        for (long long t = 0; t < std::llabs(k); ++t) {
            if (k > 0) outs[s.edge_tail(e)].push_back({e, true});
            else outs[s.edge_head(e)].push_back({e, false});
        }
    }
    auto target = [&](const DirectedEdge& d) {
        return d.forward ? s.edge_head(d.edge) : s.edge_tail(d.edge);
    };
    std::vector<Path> walks;
    for (int v0 = 0; v0 < V; ++v0) {
        while (!outs[v0].empty()) {
            // Hierholzer: grow a closed walk from v0, splicing in detours
            Path walk;
            int v = v0;
            while (!outs[v].empty()) {
                DirectedEdge d = outs[v].back();
                outs[v].pop_back();
                walk.push_back(d);
                v = target(d);
            }
            if (v != v0) fail(Errc::Internal, "unbalanced chain");
            for (size_t i = 0; i < walk.size(); ++i) {
                int w = i == 0 ? v0 : target(walk[i - 1]);
                while (!outs[w].empty()) {
                    Path sub;
                    int x = w;
                    while (!outs[x].empty()) {
                        DirectedEdge d = outs[x].back();
                        outs[x].pop_back();
                        sub.push_back(d);
                        x = target(d);
                    }
                    walk.insert(walk.begin() + i, sub.begin(), sub.end());
                }
            }
            walks.push_back(std::move(walk));
        }
    }
    if (walks.empty()) return {};
    // stitch components with doubled connector paths (chain unchanged)
    Path result = walks[0];
    for (size_t w = 1; w < walks.size(); ++w) {
        int base = result[0].forward ? s.edge_tail(result[0].edge) : s.edge_head(result[0].edge);
        int other = walks[w][0].forward ? s.edge_tail(walks[w][0].edge) : s.edge_head(walks[w][0].edge);
        Path conn = vertex_path(s, base, other);
        Path back = conn;
        std::reverse(back.begin(), back.end());
        for (auto& d : back) d.forward = !d.forward;
        Path merged;
        merged.insert(merged.end(), conn.begin(), conn.end());
        merged.insert(merged.end(), walks[w].begin(), walks[w].end());
        merged.insert(merged.end(), back.begin(), back.end());
        merged.insert(merged.end(), result.begin(), result.end());
        result = std::move(merged);
    }
    return result;
}

} // namespace stratumforge
