#include "stratumforge/checker.hpp"
#include "stratumforge/errors.hpp"
#include "stratumforge/homology.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace stratumforge {

void ExactCocycle::validate() const {
    if (g < 1) fail(Errc::ParseError, "cocycle needs genus >= 1");
    if ((int)a.size() != g || (int)b.size() != g)
        fail(Errc::ParseError, "cocycle needs g values on each of a and b");
    int total = std::accumulate(orders.begin(), orders.end(), 0);
    if (orders.empty() || total != 2 * g - 2)
        fail(Errc::ParseError, "zero orders must sum to 2g-2");
    for (int o : orders)
        if (o < 1) fail(Errc::ParseError, "zero orders must be positive");
    if ((int)rel.size() != (int)orders.size() - 1)
        fail(Errc::ParseError, "need k-1 relative values");
}

bool AbsoluteCocycle::operator==(const AbsoluteCocycle& o) const {
    if (g != o.g) return false;
    for (int i = 0; i < g; ++i)
        if (!(a[i] == o.a[i]) || !(b[i] == o.b[i])) return false;
    return true;
}

Scalar volume(const ExactCocycle& chi) {
    Scalar v;
    for (int i = 0; i < chi.g; ++i) v = v + det2(chi.a[i], chi.b[i], chi.ctx);
    return v;
}

Scalar volume(const AbsoluteCocycle& chi) {
    Scalar v;
    for (int i = 0; i < chi.g; ++i) v = v + det2(chi.a[i], chi.b[i], chi.ctx);
    return v;
}

namespace {

// coefficient row of a Vec2 over the monomials in use
std::vector<Mon> collect_monomials(const std::vector<Vec2>& vals) {
    std::set<Mon> mons;
    for (auto& v : vals) {
        for (auto& [m, r] : v.x.c) mons.insert(m);
        for (auto& [m, r] : v.y.c) mons.insert(m);
    }
    return {mons.begin(), mons.end()};
}

std::vector<Rat> coeff_row(const Vec2& v, const std::vector<Mon>& mons) {
    std::vector<Rat> row;
    row.reserve(2 * mons.size());
    for (auto& m : mons) {
        auto it = v.x.c.find(m);
        row.push_back(it == v.x.c.end() ? Rat(0) : it->second);
    }
    for (auto& m : mons) {
        auto it = v.y.c.find(m);
        row.push_back(it == v.y.c.end() ? Rat(0) : it->second);
    }
    return row;
}

// integer matrix after clearing denominators columnwise-uniformly
IMat scale_to_int(const std::vector<std::vector<Rat>>& rows, Int& denom) {
    denom = 1;
    for (auto& r : rows)
        for (auto& x : r) denom = lcm(denom, rat_den(x));
    IMat out;
    for (auto& r : rows) {
        std::vector<Int> row;
        for (auto& x : r) row.push_back(rat_num(x) * (denom / rat_den(x)));
        out.push_back(std::move(row));
    }
    return out;
}

Vec2 vec_from_row(const std::vector<Int>& row, const std::vector<Mon>& mons, const Int& denom) {
    Vec2 v;
    int m = (int)mons.size();
    for (int t = 0; t < m; ++t) {
        if (row[t] != 0) v.x.c[mons[t]] = Rat(row[t], denom);
        if (row[m + t] != 0) v.y.c[mons[t]] = Rat(row[m + t], denom);
    }
    return v;
}

struct AbsGroup {
    std::vector<Mon> mons;
    Int denom = 1;
    IMat hnf; // row basis of the integer-scaled coefficient lattice
};

AbsGroup absolute_group(const ExactCocycle& chi) {
    AbsGroup g;
    std::vector<Vec2> vals;
    vals.insert(vals.end(), chi.a.begin(), chi.a.end());
    vals.insert(vals.end(), chi.b.begin(), chi.b.end());
    // include relative monomials so membership tests share coordinates
    std::vector<Vec2> all = vals;
    all.insert(all.end(), chi.rel.begin(), chi.rel.end());
    g.mons = collect_monomials(all);
    std::vector<std::vector<Rat>> rows;
    for (auto& v : vals) rows.push_back(coeff_row(v, g.mons));
    g.hnf = hnf_rows(scale_to_int(rows, g.denom));
    return g;
}

bool in_group(const AbsGroup& g, const Vec2& v) {
    std::vector<Rat> row = coeff_row(v, g.mons);
    std::vector<Int> target;
    for (auto& x : row) {
        Rat scaled = x * Rat(g.denom);
        if (!is_integer(scaled)) return false;
        target.push_back(rat_num(scaled));
    }
    // solve x^T * hnf = target over Z
    IMat cols = imat_transpose(g.hnf);
    std::vector<Int> sol;
    return solve_z(cols, target, sol);
}

} // namespace

LatticeResult is_lattice(const ExactCocycle& chi) {
    chi.validate();
    AbsGroup g = absolute_group(chi);
    LatticeResult out;
    out.rank = (int)g.hnf.size();
    if (out.rank != 2) return out;
    out.g1 = vec_from_row(g.hnf[0], g.mons, g.denom);
    out.g2 = vec_from_row(g.hnf[1], g.mons, g.denom);
    Scalar det = det2(out.g1, out.g2, chi.ctx);
    int sg = sign(det, chi.ctx);
    if (sg == 0) return out; // rank 2 over Z but a line over R: dense
    out.lattice = true;
    out.covolume = sg > 0 ? det : -det;
    return out;
}

Partition psi_of_cocycle(const ExactCocycle& chi) {
    chi.validate();
    AbsGroup g = absolute_group(chi);
    int k = chi.k();
    std::vector<Vec2> deltas(k); // delta_1 = 0
    for (int j = 1; j < k; ++j) deltas[j] = chi.rel[j - 1];
    std::vector<int> cls(k, -1);
    Partition out;
    for (int i = 0; i < k; ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = (int)out.size();
        out.push_back({i});
        for (int j = i + 1; j < k; ++j) {
            if (cls[j] >= 0) continue;
            Vec2 diff{deltas[i].x - deltas[j].x, deltas[i].y - deltas[j].y};
            if (in_group(g, diff)) {
                cls[j] = cls[i];
                out[cls[i]].push_back(j);
            }
        }
    }
    return out;
}

MinmaxResult minmax_assignment(const std::vector<int>& class_sizes,
                               const std::vector<Int>& weights) {
    int k = (int)weights.size();
    int total = std::accumulate(class_sizes.begin(), class_sizes.end(), 0);
    if (total != k) fail(Errc::SizeMismatch, "class sizes must sum to the weight count");
    for (int c : class_sizes)
        if (c < 1) fail(Errc::SizeMismatch, "class sizes must be positive");
    int l = (int)class_sizes.size();
    MinmaxResult best;
    std::vector<int> cur(k, -1), room(class_sizes);
    std::vector<Int> load(l, 0);
    Int best_val = -1;
    auto rec = [&](auto&& self, int at) -> void {
        if (at == k) {
            Int v = 0;
            for (auto& x : load) v = std::max(v, x);
            if (best_val < 0 || v < best_val) {
                best_val = v;
                best.assignment = cur;
            }
            return;
        }
        for (int c = 0; c < l; ++c) {
            if (!room[c]) continue;
            if (best_val >= 0 && load[c] + weights[at] > best_val) continue;
            if (room[c] == class_sizes[c]) {
                // untouched classes of equal size are interchangeable; always
                // open the earliest one first (keeps the witness lexicographic)
                bool skip = false;
                for (int c2 = 0; c2 < c; ++c2)
                    if (room[c2] == class_sizes[c2] && class_sizes[c2] == class_sizes[c]) skip = true;
                if (skip) continue;
            }
            --room[c];
            load[c] += weights[at];
            cur[at] = c;
            self(self, at + 1);
            cur[at] = -1;
            load[c] -= weights[at];
            ++room[c];
        }
    };
    rec(rec, 0);
    best.value = best_val;
    return best;
}

RealizabilityVerdict theorem1_check(const ExactCocycle& chi) {
    chi.validate();
    RealizabilityVerdict v;
    v.vol = volume(chi);
    int sg = sign(v.vol, chi.ctx);
    LatticeResult lat = is_lattice(chi);
    v.lattice = lat.lattice;
    if (lat.lattice) {
        v.lat_g1 = lat.g1;
        v.lat_g2 = lat.g2;
        v.area = lat.covolume;
    }
    v.psi = psi_of_cocycle(chi);
    if (sg <= 0) {
        v.realizable = false;
        v.failing = "volume";
        return v;
    }
    if (!lat.lattice) {
        v.realizable = true;
        return v;
    }
    // V is an integer multiple of the covolume: find the ratio exactly
    {
        auto it = v.area.c.begin();
        if (it == v.area.c.end()) fail(Errc::Internal, "zero covolume");
        Rat ratio = v.vol.c.count(it->first) ? v.vol.c.at(it->first) / it->second : Rat(0);
        if (!(v.vol == v.area.scaled(ratio)) || !is_integer(ratio))
            fail(Errc::Internal, "volume is not an integer multiple of the covolume");
        v.ratio = rat_num(ratio);
    }
    std::vector<int> sizes;
    for (auto& cls : v.psi) sizes.push_back((int)cls.size());
    std::vector<Int> weights;
    for (int o : chi.orders) weights.push_back(o + 1);
    MinmaxResult mm = minmax_assignment(sizes, weights);
    v.minmax = mm.value;
    v.witness.assign(sizes.size(), {});
    for (int j = 0; j < chi.k(); ++j) v.witness[mm.assignment[j]].push_back(j);
    v.realizable = v.ratio >= v.minmax;
    if (!v.realizable) v.failing = "inequality";
    return v;
}

ExactCocycle gl2_act(const Mat2Rat& m, const ExactCocycle& chi) {
    Rat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    if (det <= 0) fail(Errc::SingularMatrix, "need det > 0, got " + rat_str(det));
    ExactCocycle out = chi;
    auto act = [&](const Vec2& v) {
        Vec2 w;
        w.x = v.x.scaled(m[0][0]) + v.y.scaled(m[0][1]);
        w.y = v.x.scaled(m[1][0]) + v.y.scaled(m[1][1]);
        return w;
    };
    for (auto& v : out.a) v = act(v);
    for (auto& v : out.b) v = act(v);
    for (auto& v : out.rel) v = act(v);
    return out;
}

ExactCocycle point_push(const ExactCocycle& chi, const std::vector<Vec2>& rel_shift) {
    chi.validate();
    if (rel_shift.size() != chi.rel.size())
        fail(Errc::SizeMismatch, "relative shift size mismatch");
    AbsGroup g = absolute_group(chi);
    // shifts may use monomials beyond the absolute ones; extend coordinates
    {
        std::vector<Vec2> all;
        all.insert(all.end(), chi.a.begin(), chi.a.end());
        all.insert(all.end(), chi.b.begin(), chi.b.end());
        all.insert(all.end(), chi.rel.begin(), chi.rel.end());
        all.insert(all.end(), rel_shift.begin(), rel_shift.end());
        std::vector<Mon> mons = collect_monomials(all);
        if (mons != g.mons) {
            AbsGroup g2;
            g2.mons = mons;
            std::vector<std::vector<Rat>> rows;
            for (auto& v : chi.a) rows.push_back(coeff_row(v, mons));
            for (auto& v : chi.b) rows.push_back(coeff_row(v, mons));
            g2.hnf = hnf_rows(scale_to_int(rows, g2.denom));
            g = std::move(g2);
        }
    }
    for (auto& v : rel_shift)
        if (!in_group(g, v))
            fail(Errc::NotInAbsoluteImage, "relative shift outside the absolute image");
    ExactCocycle out = chi;
    for (size_t j = 0; j < rel_shift.size(); ++j) {
        out.rel[j].x = out.rel[j].x + rel_shift[j].x;
        out.rel[j].y = out.rel[j].y + rel_shift[j].y;
    }
    return out;
}

AbsoluteCocycle restrict_cocycle(const ExactCocycle& chi) {
    AbsoluteCocycle out;
    out.ctx = chi.ctx;
    out.g = chi.g;
    out.a = chi.a;
    out.b = chi.b;
    return out;
}

ExactCocycle induced_cocycle(const GridSurface& s) {
    ExactCocycle chi;
    chi.g = s.genus();
    for (auto& [v, o] : s.zero_marks) chi.orders.push_back(o);
    if (chi.orders.empty()) fail(Errc::WrongGenus, "surface has no zeros");
    SymplecticBasis sb = homology_symplectic_basis(s);
    auto to_vec = [&](const std::array<Rat, 2>& p) {
        Vec2 v;
        v.x = Scalar::rational(p[0]);
        v.y = Scalar::rational(p[1]);
        return v;
    };
    for (int i = 0; i < chi.g; ++i) {
        chi.a.push_back(to_vec(chain_period(s, sb.cycles[2 * i])));
        chi.b.push_back(to_vec(chain_period(s, sb.cycles[2 * i + 1])));
    }
    for (size_t j = 1; j < s.zero_marks.size(); ++j) {
        Path p = vertex_path(s, s.zero_marks[0].first, s.zero_marks[j].first);
        chi.rel.push_back(to_vec(chain_period(s, path_chain(s, p))));
    }
    chi.validate();
    return chi;
}

} // namespace stratumforge
