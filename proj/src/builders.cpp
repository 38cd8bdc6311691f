#include "stratumforge/builders.hpp"
#include "stratumforge/errors.hpp"
#include "stratumforge/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace stratumforge {

Partition parse_partition(const std::string& s, int k) {
    Partition p;
    std::istringstream is(s);
    std::string cls;
    std::vector<char> seen(k, 0);
    while (std::getline(is, cls, '|')) {
        std::istringstream ic(cls);
        std::string tok;
        std::vector<int> members;
        while (std::getline(ic, tok, ',')) {
            int j;
            try {
                j = std::stoi(tok);
            } catch (const std::exception&) {
                fail(Errc::ParseError, "bad partition '" + s + "'");
            }
            if (j < 1 || j > k) fail(Errc::ParseError, "zero index out of range in '" + s + "'");
            if (seen[j - 1]) fail(Errc::ParseError, "zero index repeated in '" + s + "'");
            seen[j - 1] = 1;
            members.push_back(j - 1);
        }
        if (!members.empty()) p.push_back(std::move(members));
    }
    for (int j = 0; j < k; ++j)
        if (!seen[j]) fail(Errc::ParseError, "partition misses zero " + std::to_string(j + 1));
    return p;
}

std::string partition_str(const Partition& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << "|";
        for (size_t j = 0; j < p[i].size(); ++j) {
            if (j) os << ",";
            os << p[i][j] + 1;
        }
    }
    return os.str();
}

namespace {

std::multiset<std::multiset<int>> class_order_multisets(const Stratum& st, const Partition& p) {
    std::multiset<std::multiset<int>> out;
    for (auto& cls : p) {
        std::multiset<int> orders;
        for (int j : cls) orders.insert(st.orders[j]);
        out.insert(std::move(orders));
    }
    return out;
}

} // namespace

bool psi_matches(const GridSurface& s, const Stratum& st, const Partition& p) {
    BranchProfile bp = branch_profile(s);
    std::multiset<std::multiset<int>> got;
    for (auto& cls : bp.zero_classes) {
        std::multiset<int> orders;
        for (int j : cls) orders.insert(s.zero_marks[j].second);
        got.insert(std::move(orders));
    }
    return got == class_order_multisets(st, p);
}

int min_width(const Stratum& st, const Partition& p) {
    int best = 2;
    for (auto& cls : p) {
        int w = 0;
        for (int j : cls) w += st.orders[j] + 1;
        best = std::max(best, w);
    }
    return best;
}

namespace {

void check_partition(const Stratum& st, const Partition& p) {
    int k = st.zero_count();
    std::vector<char> seen(k, 0);
    for (auto& cls : p) {
        if (cls.empty()) fail(Errc::ParseError, "empty branch class");
        for (int j : cls) {
            if (j < 0 || j >= k || seen[j]) fail(Errc::ParseError, "bad branch class member");
            seen[j] = 1;
        }
    }
    for (int j = 0; j < k; ++j)
        if (!seen[j]) fail(Errc::ParseError, "branch classes do not cover the zeros");
}

void check_width(const Stratum& st, const Partition& p, int d) {
    for (auto& cls : p) {
        int w = 0;
        for (int j : cls) w += st.orders[j] + 1;
        if (w > d) {
            std::ostringstream os;
            os << "class weight sum " << w << " exceeds d = " << d
               << " (need d >= sum of (n_j + 1) over each class)";
            fail(Errc::WidthTooSmall, os.str());
        }
    }
}

// Appends slit patterns along one horizontal line of the diagram.
class LineWriter {
public:
    LineWriter(SlitTorusDiagram& dg, int level) : dg_(dg), level_(level) {}

    // a touching pair of unit slits followed by (n-2)/2 gapped ones, glued
    // cyclically left to right; one zero of even order n, span n
    void cyclic(int n) {
        cyclic_at(cursor_, n);
        advance(n);
    }

    // n contiguous unit slits, bottom of slit t glued to top of slit n-1-t;
    // one zero of order n, with a half-turn symmetry
    void reversal(int n) {
        int base = begin_pattern(n);
        for (int t = 0; t < n; ++t) {
            add_slit(cursor_ + t, cursor_ + t + 1);
            dg_.hpair[base + t] = base + (n - 1 - t);
        }
        advance(n);
    }

    // half-turn block of order 4 with the order-(n-4) cyclic pattern attached
    // at its right endpoint; one zero of order n with even spin (n even >= 4)
    void even_minimal(int n) {
        if (n == 4) {
            reversal(4);
            return;
        }
        int base = begin_pattern(4);
        for (int t = 0; t < 4; ++t) {
            add_slit(cursor_ + t, cursor_ + t + 1);
            dg_.hpair[base + t] = base + (3 - t);
        }
        cyclic_at(cursor_ + 4, n - 4);
        advance(n);
    }

    // two zeros of odd orders n <= m joined by an integral period path; the
    // spacing of the central cross pair matters only for bare (1,1) pairs,
    // where it must be prime to d for the periods to span Z+iZ
    void two_odd(int n, int m, int spacing = 2) {
        if (n > m || n % 2 == 0 || m % 2 == 0) fail(Errc::Internal, "two_odd needs odd n <= m");
        Rat start = cursor_;
        if (n > 1) cyclic_at(start, n - 1);
        Rat a = start + (n - 1);
        int base = begin_pattern(2);
        add_slit(a, a + 1);
        add_slit(a + spacing, a + spacing + 1);
        dg_.hpair[base] = base + 1;
        dg_.hpair[base + 1] = base;
        if (m > 1) cyclic_at(a + spacing + 1, m - 1);
        last_end_ = a + spacing + 1 + (m - 1);
        cursor_ = last_end_ + 1;
    }

    // four order-1 zeros over one point whose crossings generate Z+iZ; a
    // single re-gluing of the cut [0,7] pinned by exhaustive search over all
    // one-line cuts of this width
    void exceptional_quad() {
        static const int regl[7] = {2, 5, 1, 0, 6, 4, 3};
        int base = begin_pattern(7);
        for (int t = 0; t < 7; ++t) {
            add_slit(cursor_ + t, cursor_ + t + 1);
            dg_.hpair[base + t] = base + regl[t];
        }
        advance(7);
    }

    // 2(g-1) slits of unit or half length in two touching runs separated by a
    // gap of one slit length, glued by the order-two rotation; two zeros of
    // order g-1 (over one point when unit, over two points when half)
    void double_hyp(int g, bool unit) {
        Rat len = unit ? Rat(1) : Rat(1, 2);
        int nslits = 2 * (g - 1);
        int base = begin_pattern(nslits);
        Rat x = cursor_;
        for (int t = 0; t < g - 1; ++t) add_slit(x + len * t, x + len * (t + 1));
        Rat x2 = x + len * g; // gap of one slit length after the first run
        for (int t = 0; t < g - 1; ++t) add_slit(x2 + len * t, x2 + len * (t + 1));
        for (int t = 0; t < nslits; ++t) dg_.hpair[base + t] = base + (nslits - 1 - t);
        last_end_ = x2 + len * (g - 1);
        cursor_ = last_end_ + 1;
    }

    Rat last_end() const { return last_end_; }
    int level() const { return level_; }

private:
    int begin_pattern(int nslits) {
        int base = (int)dg_.hslits.size();
        dg_.hpair.resize(dg_.hslits.size() + nslits);
        return base;
    }
    void add_slit(const Rat& x0, const Rat& x1) {
        dg_.hslits.push_back({level_, x0, x1});
    }
    void cyclic_at(const Rat& x, int n) {
        if (n < 2 || n % 2) fail(Errc::Internal, "cyclic pattern needs an even order");
        int s = 2 + (n - 2) / 2;
        int base = begin_pattern(s);
        add_slit(x, x + 1);
        add_slit(x + 1, x + 2);
        for (int j = 1; j <= (n - 2) / 2; ++j) add_slit(x + 2 * j + 1, x + 2 * j + 2);
        for (int t = 0; t < s; ++t) dg_.hpair[base + t] = base + (t + 1) % s;
    }
    void advance(int span) {
        last_end_ = cursor_ + span;
        cursor_ += span + 1;
    }

    SlitTorusDiagram& dg_;
    int level_;
    Rat cursor_ = 0;
    Rat last_end_ = 0;
};

GridSurface finish(SlitTorusDiagram& dg) { return compile_diagram(dg).surface; }

std::vector<int> sorted_desc(const Stratum& st, const std::vector<int>& cls) {
    std::vector<int> out = cls;
    std::sort(out.begin(), out.end(), [&](int a, int b) {
        if (st.orders[a] != st.orders[b]) return st.orders[a] > st.orders[b];
        return a < b;
    });
    return out;
}

} // namespace

SlitTorusDiagram hyp_minimal_diagram(int g, int d) {
    if (g < 2) fail(Errc::WrongGenus, "need g >= 2");
    if (d < 2 * g - 1)
        fail(Errc::WidthTooSmall, "need d >= 2g-1 = " + std::to_string(2 * g - 1) +
                                      ", got " + std::to_string(d));
    SlitTorusDiagram dg;
    dg.d = d;
    dg.levels = 1;
    LineWriter lw(dg, 0);
    lw.reversal(2 * g - 2);
    return dg;
}

GridSurface build_hyp_minimal(int g, int d) {
    SlitTorusDiagram dg = hyp_minimal_diagram(g, d);
    return finish(dg);
}

SlitTorusDiagram hyp_double_diagram(int g, int d) {
    if (g < 2) fail(Errc::WrongGenus, "need g >= 2");
    if (d < g)
        fail(Errc::WidthTooSmall,
             "need d >= g = " + std::to_string(g) + ", got " + std::to_string(d));
    SlitTorusDiagram dg;
    dg.d = d;
    dg.levels = 1;
    LineWriter lw(dg, 0);
    lw.double_hyp(g, false);
    return dg;
}

GridSurface build_hyp_double(int g, int d, bool same_class) {
    if (g < 2) fail(Errc::WrongGenus, "need g >= 2");
    if (!same_class) {
        SlitTorusDiagram dg = hyp_double_diagram(g, d);
        return finish(dg);
    }
    if (d < 2 * g)
        fail(Errc::WidthTooSmall,
             "need d >= 2g = " + std::to_string(2 * g) + ", got " + std::to_string(d));
    // explicit square-tiled model: one zero pair over a single point
    int n = d;
    Perm r = identity_perm(n), u(n);
    for (int i = 0; i < 2 * g - 1; ++i) r[i] = (i + 1) % (2 * g - 1);
    for (int i = 0; i < n; ++i) {
        if (i <= 2 * g - 3) u[i] = 2 * g - 3 - i;
        else if (i < n - 1) u[i] = i + 1;
        else u[i] = 2 * g - 2;
    }
    return make_grid_surface(n, r, u, 1, 1);
}

SlitTorusDiagram odd_diagram(const Stratum& st, const Partition& p, int d) {
    if (!st.all_even()) fail(Errc::NoSuchComponent, "odd spin needs all even zero orders");
    check_partition(st, p);
    check_width(st, p, d);
    SlitTorusDiagram dg;
    dg.d = d;
    dg.levels = (int)p.size();
    for (size_t i = 0; i < p.size(); ++i) {
        LineWriter lw(dg, (int)i);
        for (int j : sorted_desc(st, p[i])) lw.cyclic(st.orders[j]);
    }
    return dg;
}

GridSurface build_odd(const Stratum& st, const Partition& p, int d) {
    SlitTorusDiagram dg = odd_diagram(st, p, d);
    return finish(dg);
}

std::optional<SlitTorusDiagram> even_diagram(const Stratum& st, const Partition& p, int d) {
    if (!st.all_even()) fail(Errc::NoSuchComponent, "even spin needs all even zero orders");
    int k = st.zero_count();
    check_partition(st, p);
    check_width(st, p, d);

    if (k == 1) {
        int n = st.orders[0];
        if (n < 4) fail(Errc::NoSuchComponent, "no even-spin surface in " + st.str());
        SlitTorusDiagram dg;
        dg.d = d;
        dg.levels = 1;
        LineWriter lw(dg, 0);
        lw.even_minimal(n);
        return dg;
    }

    bool all_two = true;
    for (int o : st.orders) all_two = all_two && (o == 2);

    if (all_two) {
        // locate a class of size >= 2 to host the order-two pair pattern
        int host = -1;
        for (size_t i = 0; i < p.size(); ++i)
            if (p[i].size() >= 2) { host = (int)i; break; }
        if (host >= 0 && k == 2) {
            // the pair pattern alone only spans an index-two period lattice;
            // the square-tiled double-zero model covers this case (d >= 6)
            return std::nullopt;
        }
        SlitTorusDiagram dg;
        dg.d = d;
        if (host < 0) {
            // all singleton classes: the half-length pair pattern splits its two
            // zeros into distinct classes, the remaining classes get their own line
            if (d < 3) fail(Errc::WidthTooSmall, "need d >= 3, got " + std::to_string(d));
            dg.levels = k - 1;
            LineWriter lw0(dg, 0);
            lw0.double_hyp(3, false);
            for (int i = 1; i < k - 1; ++i) {
                LineWriter lw(dg, i);
                lw.cyclic(2);
            }
            return dg;
        }
        dg.levels = (int)p.size();
        for (size_t i = 0; i < p.size(); ++i) {
            LineWriter lw(dg, (int)i);
            if ((int)i == host) {
                for (size_t t = 0; t + 2 < p[i].size(); ++t) lw.cyclic(2);
                lw.double_hyp(3, true);
            } else {
                for (size_t t = 0; t < p[i].size(); ++t) lw.cyclic(2);
            }
        }
        return dg;
    }

    // general case: the zero of largest order (>= 4) takes the even pattern
    int special = 0; // orders sorted descending, so zero 0 has the largest order
    if (st.orders[special] < 4)
        fail(Errc::NoSuchComponent, "no even-spin construction for " + st.str());
    SlitTorusDiagram dg;
    dg.d = d;
    dg.levels = (int)p.size();
    for (size_t i = 0; i < p.size(); ++i) {
        LineWriter lw(dg, (int)i);
        for (int j : sorted_desc(st, p[i])) {
            if (j == special) lw.even_minimal(st.orders[j]);
            else lw.cyclic(st.orders[j]);
        }
    }
    return dg;
}

GridSurface build_even(const Stratum& st, const Partition& p, int d) {
    std::optional<SlitTorusDiagram> dg = even_diagram(st, p, d);
    if (!dg) return build_hyp_double(3, d, true);
    return finish(*dg);
}

namespace {

struct LinePlan {
    std::vector<int> zeros;   // class members, orders descending
    int decremented = -1;     // zero whose order is lowered by one (odd lines)
    int level = -1;
    int shift = 0;            // horizontal offset of the whole line
    int pair_spacing = 2;     // cross-pair spacing (bare pairs only)
    Rat dec_end = -1;         // right end of the decremented pattern, pre-shift
};

void write_line(SlitTorusDiagram& dg, const Stratum& st, LinePlan& plan) {
    LineWriter lw(dg, plan.level);
    size_t first_slit = dg.hslits.size();

    std::vector<int> evens, odds;
    for (int j : plan.zeros) {
        if (j == plan.decremented) continue;
        ((st.orders[j] % 2 == 0) ? evens : odds).push_back(j);
    }
    bool exceptional = plan.decremented < 0 && (int)plan.zeros.size() >= 4 &&
                       (int)plan.zeros.size() % 2 == 0;
    for (int j : plan.zeros) exceptional = exceptional && st.orders[j] == 1;

    if (exceptional) {
        lw.exceptional_quad();
        for (size_t t = 4; t < plan.zeros.size(); t += 2) lw.two_odd(1, 1);
    } else {
        for (int j : evens) lw.cyclic(st.orders[j]);
        for (size_t t = 0; t + 1 < odds.size(); t += 2)
            lw.two_odd(st.orders[odds[t + 1]], st.orders[odds[t]], plan.pair_spacing);
        if (odds.size() % 2) fail(Errc::Internal, "unpaired odd zero on an even line");
        if (plan.decremented >= 0) {
            int q = st.orders[plan.decremented] - 1;
            if (q >= 2) {
                lw.cyclic(q);
                plan.dec_end = lw.last_end();
            } else {
                plan.dec_end = -1; // no slits; any clean column carries the zero
            }
        }
    }
    for (size_t t = first_slit; t < dg.hslits.size(); ++t) {
        dg.hslits[t].x0 += plan.shift;
        dg.hslits[t].x1 += plan.shift;
    }
}

} // namespace

namespace {

bool bare_pair_classes(const Stratum& st, const Partition& p) {
    if (p.empty()) return false;
    for (auto& cls : p) {
        if (cls.size() != 2) return false;
        for (int j : cls)
            if (st.orders[j] != 1) return false;
    }
    return true;
}

} // namespace

std::optional<SlitTorusDiagram> general_diagram(const Stratum& st, const Partition& p, int d) {
    check_partition(st, p);
    check_width(st, p, d);
    if (d < 2) fail(Errc::WidthTooSmall, "need d >= 2");

    // Classes that are bare pairs of simple zeros only produce crossings of
    // even horizontal displacement, which spans an index-two sublattice when
    // d is even. Repair: explicit covers at the degenerate widths (no diagram
    // form), and alternating 2/3 cross-pair spacings when there is room.
    bool all_pair_ones = bare_pair_classes(st, p);
    if (all_pair_ones && d % 2 == 0 && ((int)p.size() == 1 || d == 4)) return std::nullopt;

    std::vector<LinePlan> evens, odds;
    for (auto& cls : p) {
        LinePlan plan;
        plan.zeros = sorted_desc(st, cls);
        int sum = 0;
        for (int j : cls) sum += st.orders[j];
        if (sum % 2 == 0) {
            evens.push_back(std::move(plan));
        } else {
            // lower the smallest odd order by one; its pattern goes last
            int dec = -1;
            for (int j : plan.zeros)
                if (st.orders[j] % 2 == 1 && (dec < 0 || st.orders[j] < st.orders[dec])) dec = j;
            plan.decremented = dec;
            odds.push_back(std::move(plan));
        }
    }
    if (odds.size() % 2) fail(Errc::Internal, "odd number of odd-sum classes");

    if (all_pair_ones && d % 2 == 0) {
        for (size_t i = 0; i < evens.size(); ++i) evens[i].pair_spacing = 2 + (int)(i % 2);
    }

    int l = (int)(evens.size() + odds.size());
    int level = 0;
    for (auto& plan : evens) plan.level = level++;
    for (auto& plan : odds) plan.level = level++;

    auto emit = [&](bool with_vslits, const std::vector<std::array<int, 3>>& vplace) {
        SlitTorusDiagram dg;
        dg.d = d;
        dg.levels = std::max(l, 1);
        for (auto& plan : evens) write_line(dg, st, plan);
        for (auto& plan : odds) write_line(dg, st, plan);
        if (with_vslits) {
            for (auto& [lev, x0, x1] : vplace) {
                int base = (int)dg.vslits.size();
                dg.vslits.push_back({lev, Rat(x0)});
                dg.vslits.push_back({lev, Rat(x1)});
                dg.vpair.resize(dg.vslits.size());
                dg.vpair[base] = base + 1;
                dg.vpair[base + 1] = base;
            }
        }
        return dg;
    };

    if (odds.empty()) return emit(false, {});

    // pick attachment columns for the vertical slit pairs: compile without
    // them first and read off where the decremented zeros sit
    SlitTorusDiagram probe = emit(false, {});
    CompiledDiagram cd = compile_diagram(probe);

    auto dirty_columns = [&](const LinePlan& plan) {
        std::set<int> cols;
        for (auto& h : probe.hslits) {
            if (h.level != plan.level) continue;
            for (Rat x = h.x0; x <= h.x1; x += 1)
                if (is_integer(x)) cols.insert((int)(rat_num(x) % d));
        }
        return cols;
    };
    auto max_x1 = [&](const LinePlan& plan) {
        Rat m = 0;
        for (auto& h : probe.hslits)
            if (h.level == plan.level) m = std::max(m, h.x1);
        return (int)rat_num(Rat(floor_rat(m)) == m ? m : m + Rat(1, 2));
    };
    auto zero_columns = [&](const LinePlan& plan) -> std::set<int> {
        if (plan.dec_end < 0) return {}; // degenerate: any clean column
        int want = st.orders[plan.decremented] - 1;
        for (size_t zi = 0; zi < cd.surface.zero_marks.size(); ++zi) {
            auto [v, o] = cd.surface.zero_marks[zi];
            if (o != want) continue;
            auto cols = vertex_columns_on_level(cd, v, plan.level);
            bool has_end = false;
            for (auto& x : cols) has_end = has_end || (x == plan.dec_end);
            if (!has_end) continue;
            std::set<int> icols;
            for (auto& x : cols)
                if (is_integer(x)) icols.insert((int)(rat_num(x) % d));
            return icols;
        }
        fail(Errc::Internal, "could not locate the decremented zero");
    };

    std::vector<std::array<int, 3>> vplace;
    for (size_t t = 0; t + 1 < odds.size(); t += 2) {
        LinePlan& a = odds[t];
        LinePlan& b = odds[t + 1];
        if (b.level != a.level + 1) fail(Errc::Internal, "paired lines not adjacent");
        std::set<int> colsA0 = zero_columns(a), colsB0 = zero_columns(b);
        std::set<int> dirtyA0 = dirty_columns(a), dirtyB0 = dirty_columns(b);
        int maxShiftA = d - max_x1(a), maxShiftB = d - max_x1(b);
        auto shifted = [&](const std::set<int>& cols, int by) {
            std::set<int> out;
            for (int c : cols) out.insert((c + by) % d);
            return out;
        };
        int bestX = -1, bestA = 0, bestB = 0;
        for (int total = 0; total < 2 * d && bestX < 0; ++total) {
            for (int ta = 0; ta <= std::min(total, maxShiftA) && bestX < 0; ++ta) {
                int tb = total - ta;
                if (tb > maxShiftB) continue;
                std::set<int> colsA = shifted(colsA0, ta), colsB = shifted(colsB0, tb);
                std::set<int> dirtyA = shifted(dirtyA0, ta), dirtyB = shifted(dirtyB0, tb);
                for (int x = d - 1; x >= 0; --x) {
                    bool okA = colsA0.empty() ? !dirtyA.count(x) : colsA.count(x) > 0;
                    bool okB = colsB0.empty() ? !dirtyB.count(x) : colsB.count(x) > 0;
                    int x1 = (x + 1) % d;
                    if (okA && okB && !dirtyA.count(x1) && !dirtyB.count(x1)) {
                        bestX = x;
                        bestA = ta;
                        bestB = tb;
                        break;
                    }
                }
            }
        }
        if (bestX < 0) fail(Errc::Internal, "no attachment column for the vertical slits");
        a.shift = bestA;
        b.shift = bestB;
        vplace.push_back({a.level, bestX, (bestX + 1) % d});
    }

    return emit(true, vplace);
}

GridSurface build_general(const Stratum& st, const Partition& p, int d) {
    std::optional<SlitTorusDiagram> dg = general_diagram(st, p, d);
    if (dg) return finish(*dg);
    // explicit covers for the bare-pair strata at the degenerate even widths
    int m = (int)p.size();
    if (m == 1) {
        // two simple zeros over one point: three-cell ramification tower
        Perm r = identity_perm(d), u(d);
        r[d - 3] = d - 2;
        r[d - 2] = d - 1;
        r[d - 1] = d - 3;
        for (int i = 0; i + 2 < d; ++i) u[i] = (i + 1) % (d - 2);
        u[d - 2] = d - 1;
        u[d - 1] = d - 2;
        return make_grid_surface(d, r, u, 1, 1);
    }
    // d == 4: no room for unequal spacings; Klein-type branch permutations
    MonodromyDatum md;
    md.d = 4;
    md.r = perm_from_cycles(4, {{0, 1, 2, 3}});
    md.u = perm_from_cycles(4, {{0, 2}});
    Perm v1 = perm_from_cycles(4, {{0, 1}, {2, 3}});
    Perm v2 = perm_from_cycles(4, {{0, 3}, {1, 2}});
    Perm v3 = perm_from_cycles(4, {{0, 2}, {1, 3}});
    if (m % 2 == 0) md.sigma = {v1, v2};
    else md.sigma = {v1, v1, v3};
    while ((int)md.sigma.size() < m) {
        md.sigma.push_back(v1);
        md.sigma.push_back(v1);
    }
    return realize_cover(md);
}

GridSurface build_component(const Stratum& st, Label label, const Partition& p, int d) {
    int g = st.genus();
    if (g < 2) fail(Errc::WrongGenus, "strata need genus >= 2");
    std::set<Label> labels = stratum_components(st);
    if (!labels.count(label))
        fail(Errc::NoSuchComponent,
             st.str() + " has no component '" + label_str(label) + "'");
    check_partition(st, p);
    check_width(st, p, d);

    GridSurface out = [&] {
        switch (label) {
            case Label::Hyperelliptic:
                if (st.zero_count() == 1) return build_hyp_minimal(g, d);
                return build_hyp_double(g, d, p.size() == 1);
            case Label::SpinOdd:
                return build_odd(st, p, d);
            case Label::SpinEven:
                return build_even(st, p, d);
            case Label::NonHyperelliptic:
                return build_general(st, p, d);
            case Label::Connected:
                if (st.all_even()) return build_odd(st, p, d); // H(2) only
                return build_general(st, p, d);
        }
        fail(Errc::Internal, "unreachable");
    }();

    // full verification before returning
    if (!(stratum_of(out) == st))
        fail(Errc::VerificationFailed, "built surface lies in " + stratum_of(out).str());
    if (out.volume() != d) fail(Errc::VerificationFailed, "built surface has the wrong volume");
    PeriodLattice lat = absolute_period_lattice(out);
    if (!lat.is_unit) fail(Errc::VerificationFailed, "absolute periods do not span Z+iZ");
    if (!psi_matches(out, st, p))
        fail(Errc::VerificationFailed, "branch classes disagree with the requested partition");
    ComponentLabel cl = component_of(out);
    if (cl.tag != label)
        fail(Errc::VerificationFailed, std::string("built surface lies in component '") +
                                           label_str(cl.tag) + "'");
    return out;
}

} // namespace stratumforge
