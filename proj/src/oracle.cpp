#include "stratumforge/oracle.hpp"
#include "stratumforge/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace stratumforge {

namespace {

// stratum of a unit origami from the commutator cycle type
Stratum stratum_from_commutator(const Perm& r, const Perm& u) {
    Stratum st;
    for (int len : cycle_type(commutator(r, u)))
        if (len > 1) st.orders.push_back(len - 1);
    return st;
}

std::pair<Perm, Perm> canonical_pair(const Perm& r, const Perm& u) {
    int n = (int)r.size();
    std::pair<Perm, Perm> best;
    bool have = false;
    for (int start = 0; start < n; ++start) {
        std::vector<int> newid(n, -1), order;
        newid[start] = 0;
        order.push_back(start);
        for (int at = 0; at < (int)order.size(); ++at) {
            for (int j : {r[order[at]], u[order[at]]}) {
                if (newid[j] < 0) {
                    newid[j] = (int)order.size();
                    order.push_back(j);
                }
            }
        }
        if ((int)order.size() != n) fail(Errc::NotTransitive, "pair not transitive");
        Perm r2(n), u2(n);
        for (int i = 0; i < n; ++i) {
            r2[newid[i]] = newid[r[i]];
            u2[newid[i]] = newid[u[i]];
        }
        auto cand = std::make_pair(std::move(r2), std::move(u2));
        if (!have || cand < best) {
            best = std::move(cand);
            have = true;
        }
    }
    return best;
}

std::vector<std::pair<Perm, Perm>> canonical_pairs(int N, const std::optional<Stratum>& filter) {
    std::set<std::pair<Perm, Perm>> seen;
    for (auto& type : partitions_of(N)) {
        Perm r = canonical_of_type(N, type);
        Perm u = identity_perm(N);
        do {
            if (!transitive(r, u)) continue;
            if (filter && !(stratum_from_commutator(r, u) == *filter)) continue;
            seen.insert(canonical_pair(r, u));
        } while (std::next_permutation(u.begin(), u.end()));
    }
    return {seen.begin(), seen.end()};
}

} // namespace

std::vector<GridSurface> enumerate_origamis(int N, const std::optional<Stratum>& filter,
                                            int bound) {
    if (N < 1 || N > bound)
        fail(Errc::BoundExceeded, "enumeration limited to " + std::to_string(bound) + " cells");
    std::vector<GridSurface> out;
    for (auto& [r, u] : canonical_pairs(N, filter)) out.push_back(make_grid_surface(N, r, u));
    return out;
}

std::vector<CensusRow> census(int N, int jobs, int bound) {
    if (N < 1 || N > bound)
        fail(Errc::BoundExceeded, "census limited to " + std::to_string(bound) + " cells");
    auto types = partitions_of(N);
    int nt = (int)types.size();
    jobs = std::max(1, std::min(jobs, nt));
    std::vector<std::map<std::pair<Stratum, Label>, long long>> partials(jobs);

    auto work = [&](int slot) {
        for (int t = slot; t < nt; t += jobs) {
            Perm r = canonical_of_type(N, types[t]);
            std::set<std::pair<Perm, Perm>> seen;
            Perm u = identity_perm(N);
            do {
                if (!transitive(r, u)) continue;
                seen.insert(canonical_pair(r, u));
            } while (std::next_permutation(u.begin(), u.end()));
            for (auto& [cr, cu] : seen) {
                GridSurface s = make_grid_surface(N, cr, cu);
                Stratum st = stratum_of(s);
                Label lab = st.orders.empty() ? Label::Connected : component_of(s).tag;
                partials[slot][{st, lab}] += 1;
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::thread> threads;
        for (int j = 0; j < jobs; ++j) threads.emplace_back(work, j);
        for (auto& th : threads) th.join();
    }
    // canonical pairs found from different r-types are distinct (the type of r
    // is conjugation invariant), so the partial counts just add up
    std::map<std::pair<Stratum, Label>, long long> total;
    for (auto& p : partials)
        for (auto& [key, cnt] : p) total[key] += cnt;
    std::vector<CensusRow> rows;
    for (auto& [key, cnt] : total) rows.push_back({key.first, key.second, cnt});
    return rows;
}

void MonodromyDatum::validate() const {
    if (d < 1) fail(Errc::BadPermutation, "degree must be positive");
    if ((int)r.size() != d || (int)u.size() != d || !is_permutation(r) || !is_permutation(u))
        fail(Errc::BadPermutation, "r, u must be permutations of the sheets");
    Perm prod = identity_perm(d);
    for (auto& s : sigma) {
        if ((int)s.size() != d || !is_permutation(s))
            fail(Errc::BadPermutation, "branch permutations must act on the sheets");
        prod = compose(prod, s); // builds sigma_l ... sigma_1 as t grows
    }
    // prod = sigma_1 applied first: recompute properly
    prod = identity_perm(d);
    for (auto it = sigma.rbegin(); it != sigma.rend(); ++it) prod = compose(prod, *it);
    if (!(prod == commutator(r, u)))
        fail(Errc::BadPermutation, "branch permutations do not compose to [r, u]");
    std::vector<const Perm*> gens{&r, &u};
    for (auto& s : sigma) gens.push_back(&s);
    if (!transitive(gens, d)) fail(Errc::NotTransitive, "monodromy group not transitive");
}

bool MonodromyDatum::operator<(const MonodromyDatum& o) const {
    if (d != o.d) return d < o.d;
    if (r != o.r) return r < o.r;
    if (u != o.u) return u < o.u;
    return sigma < o.sigma;
}

GridSurface realize_cover(const MonodromyDatum& m) {
    m.validate();
    int l = (int)m.sigma.size();
    int W = l + 1;
    int n = m.d * W;
    // model permutations: crossing the horizontal axis in column c permutes the
    // sheets by U_c = u o s'_1 o ... o s'_c with s'_t = A sigma_t^-1 A^-1
    Perm A = compose(inverse(m.u), inverse(m.r));
    Perm Ainv = inverse(A);
    std::vector<Perm> U(W);
    U[0] = m.u;
    for (int t = 1; t <= l; ++t) {
        Perm sp = compose(compose(A, inverse(m.sigma[t - 1])), Ainv);
        U[t] = compose(U[t - 1], sp);
    }
    // seam consistency: U_l = r^-1 U_0 r
    if (!(U[l] == compose(compose(inverse(m.r), m.u), m.r)))
        fail(Errc::Internal, "cover model seam mismatch");
    Perm right(n), up(n);
    auto id = [&](int s, int c) { return s * W + c; };
    for (int s = 0; s < m.d; ++s)
        for (int c = 0; c < W; ++c) {
            right[id(s, c)] = (c + 1 < W) ? id(s, c + 1) : id(m.r[s], 0);
            up[id(s, c)] = id(U[c][s], c);
        }
    return make_grid_surface(n, right, up, Rat(1, W), 1);
}

MonodromyDatum canonical_datum(const MonodromyDatum& m) {
    int d = m.d;
    MonodromyDatum best;
    bool have = false;
    for (int start = 0; start < d; ++start) {
        std::vector<int> newid(d, -1), order;
        newid[start] = 0;
        order.push_back(start);
        for (int at = 0; at < (int)order.size(); ++at) {
            int i = order[at];
            std::vector<int> nexts{m.r[i], m.u[i]};
            for (auto& s : m.sigma) nexts.push_back(s[i]);
            for (int j : nexts)
                if (newid[j] < 0) {
                    newid[j] = (int)order.size();
                    order.push_back(j);
                }
        }
        if ((int)order.size() != d) fail(Errc::NotTransitive, "monodromy group not transitive");
        MonodromyDatum cand;
        cand.d = d;
        cand.r.resize(d);
        cand.u.resize(d);
        cand.sigma.assign(m.sigma.size(), Perm(d));
        for (int i = 0; i < d; ++i) {
            cand.r[newid[i]] = newid[m.r[i]];
            cand.u[newid[i]] = newid[m.u[i]];
            for (size_t t = 0; t < m.sigma.size(); ++t) cand.sigma[t][newid[i]] = newid[m.sigma[t][i]];
        }
        if (!have || cand < best) {
            best = std::move(cand);
            have = true;
        }
    }
    return best;
}

std::vector<MonodromyDatum> hurwitz_orbit(const MonodromyDatum& m0, size_t cap) {
    m0.validate();
    std::set<MonodromyDatum> seen;
    std::vector<MonodromyDatum> queue{canonical_datum(m0)};
    seen.insert(queue[0]);
    for (size_t at = 0; at < queue.size(); ++at) {
        MonodromyDatum cur = queue[at];
        std::vector<MonodromyDatum> nexts;
        int l = (int)cur.sigma.size();
        for (int t = 0; t + 1 < l; ++t) {
            // braid swap and its inverse; both keep sigma_l ... sigma_1 fixed
            MonodromyDatum a = cur;
            a.sigma[t] = cur.sigma[t + 1];
            a.sigma[t + 1] = conjugate(cur.sigma[t], inverse(cur.sigma[t + 1]));
            nexts.push_back(a);
            MonodromyDatum b = cur;
            b.sigma[t] = conjugate(cur.sigma[t + 1], cur.sigma[t]);
            b.sigma[t + 1] = cur.sigma[t];
            nexts.push_back(b);
        }
        for (const Perm* g : {&cur.r, &cur.u}) {
            MonodromyDatum c = cur;
            c.r = conjugate(cur.r, *g);
            c.u = conjugate(cur.u, *g);
            for (auto& s : c.sigma) s = conjugate(s, *g);
            nexts.push_back(c);
        }
        for (auto& nx : nexts) {
            MonodromyDatum canon = canonical_datum(nx);
            if (seen.insert(canon).second) {
                if (seen.size() > cap) fail(Errc::BoundExceeded, "orbit exceeds the state budget");
                queue.push_back(std::move(canon));
            }
        }
    }
    return queue;
}

namespace {

// distinct ways to distribute the zero orders into classes of the given sizes
void class_assignments(const std::vector<int>& orders, const std::vector<int>& sizes,
                       std::vector<std::vector<std::vector<int>>>& out) {
    int k = (int)orders.size();
    std::vector<int> cls(k, -1);
    std::vector<int> room(sizes.begin(), sizes.end());
    std::set<std::vector<std::multiset<int>>> seen;
    auto rec = [&](auto&& self, int at) -> void {
        if (at == k) {
            std::vector<std::multiset<int>> key(sizes.size());
            for (int j = 0; j < k; ++j) key[cls[j]].insert(orders[j]);
            std::sort(key.begin(), key.end());
            if (!seen.insert(key).second) return;
            std::vector<std::vector<int>> classes(sizes.size());
            for (int j = 0; j < k; ++j) classes[cls[j]].push_back(j);
            out.push_back(std::move(classes));
            return;
        }
        for (int c = 0; c < (int)sizes.size(); ++c) {
            if (!room[c]) continue;
            --room[c];
            cls[at] = c;
            self(self, at + 1);
            ++room[c];
            cls[at] = -1;
        }
    };
    rec(rec, 0);
}

const std::vector<Perm>& class_cache(int n, const std::vector<int>& type) {
    static std::map<std::pair<int, std::vector<int>>, std::vector<Perm>> cache;
    auto key = std::make_pair(n, type);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, class_elements(n, type)).first;
    return it->second;
}

} // namespace

Certificate certify(const Stratum& st, Label label, const std::vector<int>& psi_shape, int d,
                    bool expect_exists) {
    Certificate cert;
    cert.stratum = st;
    cert.label = label;
    cert.psi_shape = psi_shape;
    cert.d = d;
    if (d < 1 || d > 6) fail(Errc::BoundExceeded, "certification is exhaustive only up to d = 6");
    int k = st.zero_count();
    int sum_sizes = std::accumulate(psi_shape.begin(), psi_shape.end(), 0);
    if (sum_sizes != k) fail(Errc::SizeMismatch, "class sizes must sum to the zero count");

    if (!stratum_components(st).count(label)) {
        cert.notes.push_back("label is not a component of " + st.str());
        cert.exists = false;
        if (expect_exists) fail(Errc::CertificationFailed, cert.notes.back());
        return cert;
    }

    std::vector<std::vector<std::vector<int>>> assignments;
    class_assignments(st.orders, psi_shape, assignments);

    std::vector<std::vector<std::vector<int>>> branch_types; // per assignment: cycle types
    for (auto& classes : assignments) {
        std::vector<std::vector<int>> types;
        bool ok = true;
        for (auto& cls : classes) {
            int used = 0;
            std::vector<int> type;
            for (int j : cls) {
                type.push_back(st.orders[j] + 1);
                used += st.orders[j] + 1;
            }
            if (used > d) {
                ok = false;
                break;
            }
            type.insert(type.end(), d - used, 1);
            std::sort(type.rbegin(), type.rend());
            types.push_back(std::move(type));
        }
        if (ok) branch_types.push_back(std::move(types));
        else
            cert.notes.push_back("an assignment needs local degrees beyond d = " +
                                 std::to_string(d));
    }
    if (branch_types.empty()) {
        cert.notes.push_back("no branch data fits inside degree " + std::to_string(d));
        cert.exists = false;
        if (expect_exists)
            fail(Errc::CertificationFailed, "expected a witness but no branch data fits");
        return cert;
    }

    for (auto& types : branch_types) {
        int l = (int)types.size();
        for (auto& rtype : partitions_of(d)) {
            Perm r = canonical_of_type(d, rtype);
            Perm u = identity_perm(d);
            do {
                Perm com = commutator(r, u);
                // choose sigma_1..sigma_{l-1} freely, sigma_l is forced
                std::vector<Perm> pick(l);
                auto rec = [&](auto&& self, int t, const Perm& partial) -> bool {
                    // partial = sigma_t ... sigma_1 composed so far
                    if (t == l - 1) {
                        Perm last = compose(com, inverse(partial));
                        if (cycle_type(last) != types[l - 1]) return false;
                        pick[l - 1] = last;
                        ++cert.tuples_checked;
                        MonodromyDatum cand;
                        cand.d = d;
                        cand.r = r;
                        cand.u = u;
                        cand.sigma = pick;
                        std::vector<const Perm*> gens{&cand.r, &cand.u};
                        for (auto& sg : cand.sigma) gens.push_back(&sg);
                        if (!transitive(gens, d)) return false;
                        GridSurface cover = realize_cover(cand);
                        if (!(stratum_of(cover) == st)) return false;
                        PeriodLattice lat = absolute_period_lattice(cover);
                        if (!lat.is_unit) return false;
                        {
                            BranchProfile bp = branch_profile(cover);
                            std::vector<int> sizes;
                            for (auto& cls : bp.zero_classes) sizes.push_back((int)cls.size());
                            std::sort(sizes.rbegin(), sizes.rend());
                            std::vector<int> want = psi_shape;
                            std::sort(want.rbegin(), want.rend());
                            if (sizes != want) return false;
                        }
                        if (component_of(cover).tag != label) return false;
                        cert.witness = cand;
                        cert.exists = true;
                        return true;
                    }
                    for (const Perm& sg : class_cache(d, types[t])) {
                        pick[t] = sg;
                        if (self(self, t + 1, compose(sg, partial))) return true;
                    }
                    return false;
                };
                if (rec(rec, 0, identity_perm(d))) break;
            } while (!cert.exists && std::next_permutation(u.begin(), u.end()));
            if (cert.exists) break;
        }
        if (cert.exists) break;
    }

    if (cert.exists && !expect_exists)
        fail(Errc::CertificationFailed, "expected nonexistence but found a witness");
    if (!cert.exists && expect_exists)
        fail(Errc::CertificationFailed, "expected a witness but the enumeration is exhausted");
    return cert;
}

} // namespace stratumforge
