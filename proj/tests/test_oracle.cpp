#include <doctest.h>

#include "stratumforge/errors.hpp"
#include "stratumforge/invariants.hpp"
#include "stratumforge/oracle.hpp"

using namespace stratumforge;

namespace {
Stratum H(std::vector<int> orders) {
    Stratum st;
    st.orders = std::move(orders);
    std::sort(st.orders.rbegin(), st.orders.rend());
    return st;
}
} // namespace

TEST_CASE("enumeration of one-cell origamis") {
    auto all = enumerate_origamis(1);
    REQUIRE(all.size() == 1);
    CHECK(all[0].genus() == 1);
}

TEST_CASE("three-cell census knows the H(2) count") {
    auto inH2 = enumerate_origamis(3, H({2}));
    CHECK(!inH2.empty());
    for (auto& s : inH2) {
        CHECK(stratum_of(s).orders == std::vector<int>{2});
        CHECK(component_of(s).tag == Label::Connected);
    }
}

TEST_CASE("five-cell enumeration sees both components of H(4)") {
    auto all = enumerate_origamis(5, H({4}));
    std::set<Label> seen;
    for (auto& s : all) seen.insert(component_of(s).tag);
    CHECK(seen == std::set<Label>{Label::Hyperelliptic, Label::SpinOdd});
}

TEST_CASE("census of small degrees") {
    auto rows2 = census(2);
    for (auto& r : rows2) CHECK(r.stratum.orders.empty()); // only tori at N <= 2
    auto rows3 = census(3);
    bool h2 = false;
    for (auto& r : rows3)
        if (r.stratum.str() == "H(2)") h2 = true;
    CHECK(h2);
    CHECK_THROWS_AS(census(9), Error);
    // parallel census agrees with the serial one
    auto rows5a = census(5, 1), rows5b = census(5, 4);
    REQUIRE(rows5a.size() == rows5b.size());
    for (size_t i = 0; i < rows5a.size(); ++i) {
        CHECK(rows5a[i].stratum == rows5b[i].stratum);
        CHECK(rows5a[i].count == rows5b[i].count);
    }
}

TEST_CASE("monodromy data validate and realize") {
    MonodromyDatum m;
    m.d = 3;
    m.r = perm_from_cycles(3, {{0, 1, 2}});
    m.u = perm_from_cycles(3, {{0, 1}});
    m.sigma = {commutator(m.r, m.u)};
    m.validate();
    GridSurface s = realize_cover(m);
    CHECK(stratum_of(s).orders == std::vector<int>{2});
    CHECK(s.volume() == 3);
    CHECK(absolute_period_lattice(s).is_unit);

    MonodromyDatum bad = m;
    bad.sigma = {identity_perm(3)};
    CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("orbit of a single branch point is its conjugation class") {
    MonodromyDatum m;
    m.d = 3;
    m.r = perm_from_cycles(3, {{0, 1, 2}});
    m.u = perm_from_cycles(3, {{0, 1}});
    m.sigma = {commutator(m.r, m.u)};
    auto orbit = hurwitz_orbit(m);
    CHECK(orbit.size() == 1); // whole-tuple conjugations are canonically trivial
    for (auto& dat : orbit) {
        GridSurface s = realize_cover(dat);
        CHECK(component_of(s).tag == Label::Connected);
    }
}

TEST_CASE("braid moves reorder two branch points") {
    // degree-2 cover with two simple branch points
    MonodromyDatum m;
    m.d = 2;
    m.r = identity_perm(2);
    m.u = perm_from_cycles(2, {{0, 1}});
    Perm t = perm_from_cycles(2, {{0, 1}});
    m.sigma = {t, t};
    m.validate();
    auto orbit = hurwitz_orbit(m);
    CHECK(orbit.size() == 1);
    GridSurface s = realize_cover(m);
    CHECK(stratum_of(s).orders == std::vector<int>{1, 1});
    CHECK(absolute_period_lattice(s).is_unit);
}

TEST_CASE("orbit invariants stay constant") {
    // two branch points of type (2,2) over a degree-4 base
    MonodromyDatum m;
    m.d = 4;
    m.r = perm_from_cycles(4, {{0, 1, 2, 3}});
    m.u = perm_from_cycles(4, {{0, 2}});
    Perm v1 = perm_from_cycles(4, {{0, 1}, {2, 3}});
    Perm v2 = perm_from_cycles(4, {{0, 3}, {1, 2}});
    m.sigma = {v1, v2};
    m.validate();
    auto orbit = hurwitz_orbit(m);
    CHECK(!orbit.empty());
    std::set<std::string> strata;
    for (auto& dat : orbit) strata.insert(stratum_of(realize_cover(dat)).str());
    CHECK(strata.size() == 1);
}

TEST_CASE("certification finds the small witnesses") {
    Certificate c = certify(H({2}), Label::Connected, {1}, 3, true);
    CHECK(c.exists);
    REQUIRE(c.witness);
    GridSurface w = realize_cover(*c.witness);
    CHECK(stratum_of(w).orders == std::vector<int>{2});

    Certificate c2 = certify(H({1, 1}), Label::Connected, {1, 1}, 2, true);
    CHECK(c2.exists);

    // structural nonexistence: a local degree of four cannot fit in degree 3
    Certificate c3 = certify(H({3, 3}), Label::Hyperelliptic, {1, 1}, 3, false);
    CHECK_FALSE(c3.exists);
    CHECK(!c3.notes.empty());

    CHECK_THROWS_AS(certify(H({3, 3}), Label::Hyperelliptic, {1, 1}, 3, true), Error);
}

TEST_CASE("certification separates components at the same degree") {
    Certificate hyp = certify(H({4}), Label::Hyperelliptic, {1}, 5, true);
    Certificate odd = certify(H({4}), Label::SpinOdd, {1}, 5, true);
    CHECK(hyp.exists);
    CHECK(odd.exists);
    CHECK(component_of(realize_cover(*hyp.witness)).tag == Label::Hyperelliptic);
    CHECK(component_of(realize_cover(*odd.witness)).tag == Label::SpinOdd);
}

TEST_CASE("unbranched covers are counted by the divisor sum") {
    // connected degree-N torus covers up to isomorphism correspond to index-N
    // sublattices of Z^2, and there are sigma_1(N) of those
    auto sigma1 = [](int n) {
        long long s = 0;
        for (int t = 1; t <= n; ++t)
            if (n % t == 0) s += t;
        return s;
    };
    for (int n = 1; n <= 6; ++n) {
        long long tori = 0;
        for (auto& row : census(n))
            if (row.stratum.orders.empty()) tori += row.count;
        CHECK(tori == sigma1(n));
    }
}

TEST_CASE("orbit invariants are constant across a braid orbit of three points") {
    MonodromyDatum m;
    m.d = 4;
    m.r = perm_from_cycles(4, {{0, 1, 2, 3}});
    m.u = perm_from_cycles(4, {{0, 2}});
    Perm t01 = perm_from_cycles(4, {{0, 1}});
    Perm t23 = perm_from_cycles(4, {{2, 3}});
    Perm last = compose(commutator(m.r, m.u), inverse(compose(t23, t01)));
    m.sigma = {t01, t23, last};
    m.validate();
    auto orbit = hurwitz_orbit(m);
    CHECK(orbit.size() > 1);
    std::set<std::string> strata, labels;
    std::set<size_t> classes;
    for (auto& dat : orbit) {
        GridSurface s = realize_cover(dat);
        strata.insert(stratum_of(s).str());
        labels.insert(label_str(component_of(s).tag));
        classes.insert(branch_profile(s).zero_classes.size());
    }
    CHECK(strata.size() == 1);
    CHECK(labels.size() == 1);
    CHECK(classes.size() == 1);
}
