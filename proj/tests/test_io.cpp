#include <doctest.h>

#include "stratumforge/builders.hpp"
#include "stratumforge/errors.hpp"
#include "stratumforge/io.hpp"

#include <random>

using namespace stratumforge;

TEST_CASE("origami text round trip is exact") {
    std::mt19937 rng(19);
    int tried = 0;
    while (tried < 20) {
        int n = 1 + (int)(rng() % 7);
        Perm r = identity_perm(n), u = identity_perm(n);
        std::shuffle(r.begin(), r.end(), rng);
        std::shuffle(u.begin(), u.end(), rng);
        if (!transitive(r, u)) continue;
        ++tried;
        GridSurface s = make_grid_surface(n, r, u, Rat(1, 2), 1);
        std::string text = write_origami_text(s);
        GridSurface back = read_origami_text(text);
        CHECK(back.right == s.right);
        CHECK(back.up == s.up);
        CHECK(back.sx == s.sx);
        CHECK(write_origami_text(back) == text);

        std::string js = write_origami_json(s);
        GridSurface jback = read_origami_json(js);
        CHECK(jback.right == s.right);
        CHECK(write_origami_json(jback) == js);
    }
}

TEST_CASE("origami reader validates marks") {
    std::string good = "n=3 sx=1 sy=1\nr=2 3 1\nu=2 1 3\n";
    GridSurface s = read_origami_text(good);
    CHECK(stratum_of(s).orders == std::vector<int>{2});
    std::string lying = good + "marks=0:4\n";
    CHECK_THROWS_AS(read_origami_text(lying), Error);
    CHECK_THROWS_AS(read_origami_text("n=2 sx=1 sy=1\nr=1 1\nu=1 2\n"), Error);
}

TEST_CASE("diagram text round trip") {
    SlitTorusDiagram dg;
    dg.d = 7;
    dg.levels = 2;
    dg.hslits = {{0, Rat(0), Rat(1)}, {0, Rat(1), Rat(2)}, {1, Rat(3), Rat(7, 2)}, {1, Rat(7, 2), Rat(4)}};
    dg.hpair = {1, 0, 3, 2};
    dg.vslits = {{0, Rat(5)}, {0, Rat(6)}};
    dg.vpair = {1, 0};
    std::string text = write_diagram_text(dg);
    SlitTorusDiagram back = read_diagram_text(text);
    CHECK(back.d == dg.d);
    CHECK(back.levels == dg.levels);
    CHECK(back.hpair == dg.hpair);
    CHECK(back.vpair == dg.vpair);
    REQUIRE(back.hslits.size() == dg.hslits.size());
    for (size_t i = 0; i < dg.hslits.size(); ++i) {
        CHECK(back.hslits[i].level == dg.hslits[i].level);
        CHECK(back.hslits[i].x0 == dg.hslits[i].x0);
        CHECK(back.hslits[i].x1 == dg.hslits[i].x1);
    }
    CHECK(write_diagram_text(back) == text);
}

TEST_CASE("cocycle json round trip") {
    ExactCocycle chi;
    chi.ctx.reals.push_back({"sqrt2", "1.41421356237309504880", Rat(2)});
    chi.g = 2;
    chi.orders = {1, 1};
    auto rv = [](Rat x, Rat y) {
        return Vec2{Scalar::rational(x), Scalar::rational(y)};
    };
    chi.a = {rv(1, 0), {Scalar::basis_element(1), Scalar::rational(0)}};
    chi.b = {rv(0, 1), rv(Rat(-1, 3), 2)};
    chi.rel = {rv(Rat(1, 2), 0)};
    std::string js = write_cocycle_json(chi);
    ExactCocycle back = read_cocycle_json(js);
    CHECK(back.g == chi.g);
    CHECK(back.orders == chi.orders);
    CHECK(back.a == chi.a);
    CHECK(back.b == chi.b);
    CHECK(back.rel == chi.rel);
    CHECK(back.ctx.reals[0].name == "sqrt2");
    REQUIRE(back.ctx.reals[0].square.has_value());
    CHECK(*back.ctx.reals[0].square == 2);
    CHECK(write_cocycle_json(back) == js);
}

TEST_CASE("monodromy json round trip") {
    MonodromyDatum m;
    m.d = 3;
    m.r = perm_from_cycles(3, {{0, 1, 2}});
    m.u = perm_from_cycles(3, {{0, 1}});
    m.sigma = {commutator(m.r, m.u)};
    std::string js = write_monodromy_json(m);
    MonodromyDatum back = read_monodromy_json(js);
    CHECK(back == m);
}

TEST_CASE("verdict json carries the witness partition") {
    ExactCocycle chi;
    chi.g = 2;
    chi.orders = {1, 1};
    auto rv = [](Rat x, Rat y) {
        return Vec2{Scalar::rational(x), Scalar::rational(y)};
    };
    chi.a = {rv(1, 0), rv(1, 0)};
    chi.b = {rv(0, 1), rv(0, 3)};
    chi.rel = {rv(Rat(1, 2), 0)};
    RealizabilityVerdict v = theorem1_check(chi);
    std::string js = verdict_json(v, chi.ctx);
    CHECK(js.find("\"realizable\": true") != std::string::npos);
    CHECK(js.find("applies_to_all_components") != std::string::npos);
}
