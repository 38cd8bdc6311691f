#include "stratumforge/perm.hpp"
#include "stratumforge/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace stratumforge {

bool is_permutation(const Perm& p) {
    int n = (int)p.size();
    std::vector<char> seen(n, 0);
    for (int v : p) {
        if (v < 0 || v >= n || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm inverse(const Perm& p) {
    Perm q(p.size());
    for (int i = 0; i < (int)p.size(); ++i) q[p[i]] = i;
    return q;
}

Perm compose(const Perm& p, const Perm& q) {
    Perm r(p.size());
    for (int i = 0; i < (int)p.size(); ++i) r[i] = p[q[i]];
    return r;
}

Perm commutator(const Perm& p, const Perm& q) {
    return compose(compose(p, q), compose(inverse(p), inverse(q)));
}

Perm conjugate(const Perm& p, const Perm& by) {
    // by^-1 p by
    return compose(compose(inverse(by), p), by);
}

std::vector<std::vector<int>> cycles_of(const Perm& p) {
    int n = (int)p.size();
    std::vector<char> seen(n, 0);
    std::vector<std::vector<int>> cys;
    for (int i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::vector<int> c;
        int j = i;
        while (!seen[j]) {
            seen[j] = 1;
            c.push_back(j);
            j = p[j];
        }
        cys.push_back(std::move(c));
    }
    return cys;
}

std::vector<int> cycle_type(const Perm& p) {
    std::vector<int> t;
    for (auto& c : cycles_of(p)) t.push_back((int)c.size());
    std::sort(t.rbegin(), t.rend());
    return t;
}

bool transitive(const std::vector<const Perm*>& gens, int n) {
    if (n <= 0) return false;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        for (auto* g : gens) {
            int j = (*g)[i];
            if (!seen[j]) {
                seen[j] = 1;
                ++count;
                stack.push_back(j);
            }
        }
    }
    return count == n;
}

Perm perm_from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    Perm p = identity_perm(n);
    for (auto& c : cycles) {
        for (size_t t = 0; t < c.size(); ++t) {
            int from = c[t], to = c[(t + 1) % c.size()];
            if (from < 0 || from >= n) fail(Errc::BadPermutation, "cycle entry out of range");
            p[from] = to;
        }
    }
    if (!is_permutation(p)) fail(Errc::BadPermutation, "overlapping cycles");
    return p;
}

Perm canonical_of_type(int n, const std::vector<int>& type) {
    Perm p = identity_perm(n);
    int at = 0;
    for (int len : type) {
        for (int t = 0; t < len; ++t) p[at + t] = at + (t + 1) % len;
        at += len;
    }
    if (at > n) fail(Errc::BadPermutation, "cycle type too long");
    return p;
}

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    // descending parts
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

std::vector<Perm> class_elements(int n, const std::vector<int>& type) {
    std::vector<Perm> out;
    Perm rep = canonical_of_type(n, type);
    // conjugate rep by all of S_n, dedupe
    Perm g = identity_perm(n);
    std::vector<Perm> seen;
    do {
        Perm c = conjugate(rep, g);
        out.push_back(std::move(c));
    } while (std::next_permutation(g.begin(), g.end()));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string perm_str(const Perm& p) {
    std::ostringstream os;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) os << ' ';
        os << p[i] + 1;
    }
    return os.str();
}

} // namespace stratumforge
