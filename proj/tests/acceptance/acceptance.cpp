// Acceptance suite: one pass/fail line per criterion.
//
// 1. reference fixtures verify to their catalogued component data
// 2. builder soundness sweep over every component, class split and width
// 3. desk-scale existence certification for every branch data with d <= 6
// 4. checker and oracle agree on realizability, including exact thresholds
// 5. spin parity is basis independent; detour sides agree
// 6. exact-algebra properties on random rational cocycles
// 7. component census of all origamis up to seven cells
// 8. genus-two polygon constructions with exact (also irrational) periods

#include "stratumforge/builders.hpp"
#include "stratumforge/checker.hpp"
#include "stratumforge/errors.hpp"
#include "stratumforge/invariants.hpp"
#include "stratumforge/io.hpp"
#include "stratumforge/oracle.hpp"
#include "stratumforge/polygon.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <sstream>
#include <thread>

using namespace stratumforge;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    std::vector<std::string> problems;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    explicit Criterion(std::string n) : name(std::move(n)) {}
    void expect(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
    void finish() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        if (problems.empty()) {
            std::cout << "[PASS] " << name << " (" << ms / 1000.0 << " s)\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << name << " (" << ms / 1000.0 << " s)\n";
            for (size_t i = 0; i < problems.size() && i < 10; ++i)
                std::cout << "       - " << problems[i] << "\n";
            if (problems.size() > 10)
                std::cout << "       ... " << problems.size() - 10 << " more\n";
        }
        std::cout.flush();
    }
};

Stratum H(std::vector<int> orders) {
    Stratum st;
    st.orders = std::move(orders);
    std::sort(st.orders.rbegin(), st.orders.rend());
    return st;
}

std::string fixture_path(const std::string& name) {
    return std::string(STRATUMFORGE_SOURCE_DIR) + "/fixtures/" + name;
}

// all partitions of the zero set up to renaming zeros of equal order
std::vector<Partition> index_partitions(const Stratum& st) {
    int k = st.zero_count();
    std::vector<Partition> out;
    std::set<std::multiset<std::multiset<int>>> seen;
    std::vector<int> cls(k, -1);
    std::function<void(int, int)> rec = [&](int at, int used) {
        if (at == k) {
            Partition p(used);
            for (int j = 0; j < k; ++j) p[cls[j]].push_back(j);
            std::multiset<std::multiset<int>> key;
            for (auto& c : p) {
                std::multiset<int> orders;
                for (int j : c) orders.insert(st.orders[j]);
                key.insert(orders);
            }
            if (seen.insert(key).second) out.push_back(p);
            return;
        }
        for (int c = 0; c <= used && c < k; ++c) {
            cls[at] = c;
            rec(at + 1, std::max(used, c + 1));
        }
    };
    rec(0, 0);
    return out;
}

void criterion1() {
    Criterion c("criterion 1: reference fixtures verify to their catalogue data");
    struct Fx {
        const char* name;
        const char* stratum;
        Label label;
        int d;
        bool has_diagram;
        bool check_involution; // expect a genus-zero involution with 2g+2 fixed points
    };
    const Fx fixtures[] = {
        {"hyp_4_d5", "H(4)", Label::Hyperelliptic, 5, true, true},
        {"hyp_33_d4", "H(3,3)", Label::Hyperelliptic, 4, true, true},
        {"hyp_33_d8", "H(3,3)", Label::Hyperelliptic, 8, false, true},
        {"odd_6_d7", "H(6)", Label::SpinOdd, 7, true, false},
        {"hyp_22_d6", "H(2,2)", Label::Hyperelliptic, 6, false, true},
        {"even_6_d7", "H(6)", Label::SpinEven, 7, true, false},
        {"conn_1335_d6", "H(5,3,3,1)", Label::Connected, 6, true, false},
        {"conn_1111_d8", "H(1,1,1,1)", Label::Connected, 8, true, false},
    };
    for (const Fx& f : fixtures) {
        try {
            GridSurface s =
                read_origami_text(slurp(fixture_path(std::string(f.name) + ".origami")));
            if (f.has_diagram) {
                SlitTorusDiagram dg =
                    read_diagram_text(slurp(fixture_path(std::string(f.name) + ".diagram")));
                GridSurface from_dg = compile_diagram(dg).surface;
                c.expect(isomorphic(from_dg, s),
                         std::string(f.name) + ": diagram and origami forms disagree");
            }
            c.expect(stratum_of(s).str() == f.stratum, std::string(f.name) + ": wrong stratum");
            c.expect(component_of(s).tag == f.label, std::string(f.name) + ": wrong component");
            c.expect(s.volume() == f.d, std::string(f.name) + ": wrong volume");
            c.expect(absolute_period_lattice(s).is_unit,
                     std::string(f.name) + ": lattice not Z+iZ");
            if (f.check_involution) {
                int want = 2 * s.genus() + 2;
                bool found = false;
                for (auto& inv : involution_search(s))
                    found = found || (inv.quotient_genus == 0 && inv.fixed_points() == want);
                c.expect(found, std::string(f.name) + ": no involution with 2g+2 fixed points");
            }
        } catch (const std::exception& e) {
            c.expect(false, std::string(f.name) + ": " + e.what());
        }
    }
    c.finish();
}

void criterion2() {
    Criterion c("criterion 2: builder soundness sweep (g <= 5, all labels, all splits)");
    long long built = 0;
    for (int g = 2; g <= 5; ++g) {
        for (auto& orders : partitions_of(2 * g - 2)) {
            Stratum st = H(orders);
            for (Label lab : stratum_components(st)) {
                for (auto& p : index_partitions(st)) {
                    int dmin = min_width(st, p);
                    for (int d = dmin; d <= dmin + 2; ++d) {
                        try {
                            GridSurface s = build_component(st, lab, p, d);
                            // build_component verifies internally; re-assert the contract
                            bool ok = stratum_of(s) == st && s.volume() == d &&
                                      absolute_period_lattice(s).is_unit &&
                                      psi_matches(s, st, p) && component_of(s).tag == lab;
                            c.expect(ok, st.str() + " " + label_str(lab) + " P=" +
                                             partition_str(p) + " d=" + std::to_string(d) +
                                             ": pipeline mismatch");
                            ++built;
                        } catch (const std::exception& e) {
                            c.expect(false, st.str() + " " + label_str(lab) + " P=" +
                                                partition_str(p) + " d=" + std::to_string(d) +
                                                ": " + e.what());
                        }
                    }
                }
            }
        }
    }
    c.expect(built > 900, "sweep unexpectedly small");
    c.finish();
}

// candidate (stratum, class sizes, d) triples from branch data with d <= 6;
// genus capped through total ramification <= 6 to keep the sweep finite
std::vector<std::tuple<Stratum, std::vector<int>, int>> branch_candidates() {
    std::set<std::tuple<std::vector<int>, std::vector<int>, int>> seen;
    std::vector<std::tuple<Stratum, std::vector<int>, int>> out;
    for (int d = 2; d <= 6; ++d) {
        std::vector<std::vector<int>> parts;
        for (auto& q : partitions_of(d))
            if (q[0] > 1) parts.push_back(q);
        std::function<void(size_t, int, std::vector<int>&, std::vector<int>&)> rec =
            [&](size_t from, int excess, std::vector<int>& orders, std::vector<int>& sizes) {
                if (!sizes.empty() && excess % 2 == 0 && excess >= 2) {
                    std::vector<int> so = orders, ss = sizes;
                    std::sort(so.rbegin(), so.rend());
                    std::sort(ss.rbegin(), ss.rend());
                    if (seen.insert({so, ss, d}).second) {
                        Stratum st;
                        st.orders = so;
                        out.push_back({st, ss, d});
                    }
                }
                if (excess >= 6) return;
                for (size_t t = from; t < parts.size(); ++t) {
                    int e = 0, cnt = 0;
                    for (int part : parts[t])
                        if (part > 1) {
                            e += part - 1;
                            ++cnt;
                        }
                    if (excess + e > 6) continue;
                    for (int part : parts[t])
                        if (part > 1) orders.push_back(part - 1);
                    sizes.push_back(cnt);
                    rec(t, excess + e, orders, sizes);
                    sizes.pop_back();
                    for (int i = 0; i < cnt; ++i) orders.pop_back();
                }
            };
        std::vector<int> orders, sizes;
        rec(0, 0, orders, sizes);
    }
    return out;
}

void criterion3() {
    Criterion c("criterion 3: certified witnesses for every branch data with d <= 6");
    auto cases = branch_candidates();
    std::vector<std::tuple<Stratum, Label, std::vector<int>, int>> tasks;
    for (auto& [st, sizes, d] : cases) {
        if (st.genus() < 2) continue;
        for (Label lab : stratum_components(st)) tasks.push_back({st, lab, sizes, d});
    }
    std::mutex mu;
    std::vector<std::string> problems;
    std::atomic<size_t> next{0};
    auto work = [&]() {
        while (true) {
            size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            auto& [st, lab, sizes, d] = tasks[t];
            try {
                Certificate cert = certify(st, lab, sizes, d, true);
                GridSurface w = realize_cover(*cert.witness);
                bool ok = stratum_of(w) == st && component_of(w).tag == lab &&
                          absolute_period_lattice(w).is_unit && w.volume() == d;
                if (!ok) {
                    std::lock_guard<std::mutex> lk(mu);
                    problems.push_back(st.str() + " " + label_str(lab) + " d=" +
                                       std::to_string(d) + ": witness invariants mismatch");
                }
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lk(mu);
                problems.push_back(st.str() + " " + label_str(lab) + " d=" + std::to_string(d) +
                                   ": " + e.what());
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < 4; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    for (auto& pr : problems) c.expect(false, pr);
    c.expect(tasks.size() > 100, "candidate sweep unexpectedly small");
    c.finish();
}

ExactCocycle synthetic_cocycle(const Stratum& st, const std::vector<int>& sizes, int d) {
    ExactCocycle chi;
    chi.g = st.genus();
    chi.orders = st.orders;
    auto rv = [](Rat x, Rat y) {
        return Vec2{Scalar::rational(x), Scalar::rational(y)};
    };
    chi.a.assign(chi.g, rv(0, 0));
    chi.b.assign(chi.g, rv(0, 0));
    chi.a[0] = rv(1, 0);
    chi.b[0] = rv(0, 1);
    chi.a[1] = rv(1, 0);
    chi.b[1] = rv(0, d - 1);
    std::vector<Rat> offsets;
    for (size_t t = 0; t < sizes.size(); ++t)
        offsets.push_back(t == 0 ? Rat(0) : Rat(1, (int)t + 1));
    int at = 0;
    std::vector<Rat> delta(st.zero_count());
    for (size_t t = 0; t < sizes.size(); ++t)
        for (int i = 0; i < sizes[t]; ++i) delta[at++] = offsets[t];
    for (int j = 1; j < st.zero_count(); ++j) chi.rel.push_back(rv(delta[j], 0));
    chi.validate();
    return chi;
}

void criterion4() {
    Criterion c("criterion 4: checker verdicts match exhaustive oracle existence");
    auto cases = branch_candidates();
    std::set<std::pair<std::vector<int>, std::vector<int>>> shapes;
    for (auto& [st, sizes, d] : cases) shapes.insert({st.orders, sizes});
    std::vector<std::pair<Stratum, std::vector<int>>> tasks;
    for (auto& [orders, sizes] : shapes) {
        Stratum st = H(orders);
        if (st.genus() >= 2) tasks.push_back({st, sizes});
    }
    std::mutex mu;
    std::vector<std::string> problems;
    std::atomic<long long> agreed{0};
    std::atomic<size_t> next{0};
    auto work = [&]() {
        while (true) {
            size_t t = next.fetch_add(1);
            if (t >= tasks.size()) break;
            auto& [st, sizes] = tasks[t];
            for (int d = 2; d <= 6; ++d) {
                ExactCocycle chi = synthetic_cocycle(st, sizes, d);
                RealizabilityVerdict v = theorem1_check(chi);
                std::string tag = st.str() + " d=" + std::to_string(d);
                if (!v.lattice || v.ratio != d) {
                    std::lock_guard<std::mutex> lk(mu);
                    problems.push_back(tag + ": bad synthetic cocycle");
                    continue;
                }
                std::vector<int> got;
                for (auto& cls : v.psi) got.push_back((int)cls.size());
                std::sort(got.rbegin(), got.rend());
                std::vector<int> want = sizes;
                std::sort(want.rbegin(), want.rend());
                if (got != want) {
                    std::lock_guard<std::mutex> lk(mu);
                    problems.push_back(tag + ": synthetic class sizes drifted");
                    continue;
                }
                try {
                    certify(st, *stratum_components(st).begin(), sizes, d, v.realizable);
                    ++agreed;
                } catch (const Error& e) {
                    std::lock_guard<std::mutex> lk(mu);
                    if (e.code == Errc::CertificationFailed)
                        problems.push_back(tag + ": checker and oracle disagree");
                    else
                        problems.push_back(tag + ": " + e.what());
                }
            }
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < 4; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();
    for (auto& pr : problems) c.expect(false, pr);

    // the named double-zero thresholds, exact
    {
        ExactCocycle c8 = synthetic_cocycle(H({3, 3}), {2}, 8);
        c8.rel[0] = {Scalar::rational(2), Scalar::rational(1)};
        c.expect(theorem1_check(c8).realizable, "H(3,3) joined pair at V=8 must be realizable");
        GridSurface w8 = build_component(H({3, 3}), Label::Hyperelliptic, {{0, 1}}, 8);
        c.expect(w8.volume() == 8, "H(3,3) witness at V=8");
        ExactCocycle c7 = synthetic_cocycle(H({3, 3}), {2}, 7);
        c7.rel[0] = {Scalar::rational(2), Scalar::rational(1)};
        c.expect(!theorem1_check(c7).realizable, "H(3,3) joined pair at V=7 must fail");
        ExactCocycle c4 = synthetic_cocycle(H({3, 3}), {1, 1}, 4);
        c.expect(theorem1_check(c4).realizable, "H(3,3) split pair at V=4 must be realizable");
        ExactCocycle c3 = synthetic_cocycle(H({3, 3}), {1, 1}, 3);
        c.expect(!theorem1_check(c3).realizable, "H(3,3) split pair at V=3 must fail");
        ExactCocycle m5 = synthetic_cocycle(H({4}), {1}, 5);
        c.expect(theorem1_check(m5).realizable, "H(4) at V=5 must be realizable");
        ExactCocycle m4 = synthetic_cocycle(H({4}), {1}, 4);
        c.expect(!theorem1_check(m4).realizable, "H(4) at V=4 must fail");
    }
    c.expect(agreed > 150, "agreement sweep unexpectedly small");
    c.finish();
}

void criterion5() {
    Criterion c("criterion 5: spin parity under 200 random symplectic changes x 20 origamis");
    std::mt19937 rng(424242);
    std::vector<GridSurface> pool;
    while ((int)pool.size() < 20) {
        int n = 3 + (int)(rng() % 6);
        Perm r = identity_perm(n), u = identity_perm(n);
        std::shuffle(r.begin(), r.end(), rng);
        std::shuffle(u.begin(), u.end(), rng);
        if (!transitive(r, u)) continue;
        GridSurface s = make_grid_surface(n, r, u);
        if (s.genus() < 2) continue;
        bool even = true;
        for (auto& [v, o] : s.zero_marks) even = even && o % 2 == 0;
        if (!even) continue;
        pool.push_back(std::move(s));
    }
    for (auto& s : pool) {
        SpinForm f = spin_form(s);
        int g = s.genus();
        int reference = 0;
        for (int i = 0; i < g; ++i) reference ^= f.qvals[2 * i] & f.qvals[2 * i + 1];
        c.expect(reference == arf_invariant(s), "arf disagrees with its spin form");
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<Chain> b = f.basis;
            for (int step = 0; step < 3; ++step) {
                int j = (int)(rng() % (2 * g));
                long long k = 1 + (long long)(rng() % 2);
                std::vector<Chain> nb = b;
                for (int t = 0; t < 2 * g; ++t) {
                    long long pair = intersection(s, b[t], b[j]);
                    if (!pair) continue;
                    for (int e = 0; e < s.num_edges(); ++e) nb[t][e] += k * pair * b[j][e];
                }
                b = nb;
            }
            int arf = 0;
            for (int i = 0; i < g; ++i) arf ^= f.eval(b[2 * i]) & f.eval(b[2 * i + 1]);
            if (arf != reference) {
                c.expect(false, "arf changed under a symplectic basis change");
                break;
            }
        }
        SymplecticBasis sb = homology_symplectic_basis(s);
        for (auto& path : sb.paths)
            c.expect(winding_parity(s, path, Detour::Left) ==
                         winding_parity(s, path, Detour::Right),
                     "left and right detours disagree");
    }
    c.finish();
}

void criterion6() {
    Criterion c("criterion 6: exact-algebra properties on 1000 random rational cocycles");
    std::mt19937 rng(777);
    auto rnd = [&]() { return Rat((int)(rng() % 11) - 5, 1 + (int)(rng() % 4)); };
    auto rv = [](Rat x, Rat y) {
        return Vec2{Scalar::rational(x), Scalar::rational(y)};
    };
    int lattice_seen = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        ExactCocycle chi;
        chi.g = 2 + (int)(rng() % 2);
        int total = 2 * chi.g - 2;
        int k = 1 + (int)(rng() % 3);
        if (k > total) k = total;
        chi.orders.assign(k, 1);
        int left = total - k;
        for (int j = 0; left > 0; j = (j + 1) % k) {
            ++chi.orders[j];
            --left;
        }
        std::sort(chi.orders.rbegin(), chi.orders.rend());
        for (int i = 0; i < chi.g; ++i) {
            chi.a.push_back(rv(rnd(), rnd()));
            chi.b.push_back(rv(rnd(), rnd()));
        }
        for (int j = 1; j < k; ++j) chi.rel.push_back(rv(rnd(), rnd()));
        chi.validate();

        LatticeResult lat = is_lattice(chi);
        Scalar vol = volume(chi);
        if (lat.lattice) {
            ++lattice_seen;
            auto it = lat.covolume.c.begin();
            Rat ratio = vol.c.count(it->first) ? vol.c.at(it->first) / it->second : Rat(0);
            c.expect(is_integer(ratio) && vol == lat.covolume.scaled(ratio),
                     "volume over covolume is not an integer");
        }

        Mat2Rat m{{{rnd(), rnd()}, {rnd(), rnd()}}};
        Rat det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        if (det <= 0) {
            m[0][0] += (1 - det);
            det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
        }
        if (det > 0) {
            ExactCocycle moved = gl2_act(m, chi);
            c.expect(volume(moved) == vol.scaled(det), "volume not scaled by det");
            LatticeResult lat2 = is_lattice(moved);
            c.expect(lat.lattice == lat2.lattice, "lattice status not preserved");
            if (lat.lattice && lat2.lattice)
                c.expect(lat2.covolume == lat.covolume.scaled(det),
                         "covolume not scaled by det");
            if (k >= 2)
                c.expect(psi_of_cocycle(moved) == psi_of_cocycle(chi),
                         "branch classes not preserved by the group action");
        }

        if (k >= 2) {
            std::vector<Vec2> shift;
            for (int j = 1; j < k; ++j) {
                int i = (int)(rng() % chi.g);
                long long c1 = (long long)(rng() % 3) - 1, c2 = (long long)(rng() % 3) - 1;
                Vec2 w{chi.a[i].x.scaled(c1) + chi.b[i].x.scaled(c2),
                       chi.a[i].y.scaled(c1) + chi.b[i].y.scaled(c2)};
                shift.push_back(w);
            }
            ExactCocycle pushed = point_push(chi, shift);
            c.expect(psi_of_cocycle(pushed) == psi_of_cocycle(chi),
                     "branch classes not preserved by point pushing");
            c.expect(restrict_cocycle(pushed) == restrict_cocycle(chi),
                     "restriction changed by point pushing");
        }
    }
    c.expect(lattice_seen >= 100, "too few lattice cases sampled");
    c.finish();
}

void criterion7() {
    Criterion c("criterion 7: census labels match the component table up to seven cells");
    for (int N = 1; N <= 7; ++N) {
        std::map<std::string, std::set<Label>> at_n;
        for (auto& row : census(N, 4)) {
            if (row.stratum.orders.empty()) continue;
            at_n[row.stratum.str()].insert(row.label);
        }
        for (auto& [stname, labels] : at_n) {
            Stratum st = parse_stratum(stname);
            int weight = 0;
            for (int o : st.orders) weight += o + 1;
            c.expect(weight <= N, stname + " appears below its minimal degree");
            c.expect(labels == stratum_components(st),
                     stname + " labels at N=" + std::to_string(N) + " differ from the table");
        }
        for (int total = 2; total <= 12; total += 2) {
            for (auto& orders : partitions_of(total)) {
                Stratum st = H(orders);
                int weight = 0;
                for (int o : st.orders) weight += o + 1;
                if (weight > N) continue;
                c.expect(at_n.count(st.str()) > 0,
                         st.str() + " missing from the census at N=" + std::to_string(N));
            }
        }
    }
    c.finish();
}

void criterion8() {
    Criterion c("criterion 8: genus-two polygon constructions with exact periods");
    std::mt19937 rng(1212);
    BasisContext ctx;
    ctx.reals.push_back({"sqrt2", "1.41421356237309504880168872420969807857", Rat(2)});
    auto irr = [&](Rat q, Rat r2coef) {
        Scalar s = Scalar::rational(q);
        if (r2coef != 0) s = s + Scalar::basis_element(1).scaled(r2coef);
        return s;
    };
    int built = 0;
    int attempts = 0;
    while (built < 50 && attempts < 500) {
        ++attempts;
        bool use_irrational = built % 2 == 0;
        bool minimal = built % 4 < 2;
        auto small = [&]() { return Rat(1 + (int)(rng() % 4), 7 + (int)(rng() % 5)); };
        Rat eps = use_irrational ? Rat(1, 50 + (int)(rng() % 50)) : Rat(0);

        ExactCocycle chi;
        chi.ctx = ctx;
        chi.g = 2;
        chi.orders = minimal ? std::vector<int>{2} : std::vector<int>{1, 1};
        chi.a = {{irr(1, eps), Scalar::rational(0)},
                 {irr(small(), eps / 3), irr(small() - Rat(1, 2), 0)}};
        chi.b = {{irr(small(), -eps / 2), irr(1, eps / 5)},
                 {Scalar::rational(small()), irr(1, 0)}};
        if (!minimal) chi.rel = {{irr(small() / 2, eps / 7), Scalar::rational(small() / 3)}};
        chi.validate();

        try {
            Stratum target = H(chi.orders);
            PolygonSurface ps = build_genus2(chi, target);
            auto [st, area] = verify_polygon_surface(ps);
            c.expect(st == target, "polygon surface in the wrong stratum");
            c.expect(area == volume(chi), "polygon area differs from the cocycle volume");
            ++built;
        } catch (const Error& e) {
            if (e.code != Errc::NotNormalized)
                c.expect(false, std::string("construction failed: ") + e.what());
        }
    }
    c.expect(built == 50, "fewer than 50 normalized samples built");
    c.finish();
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
