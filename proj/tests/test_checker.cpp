#include <doctest.h>

#include "stratumforge/checker.hpp"
#include "stratumforge/errors.hpp"

#include <random>

using namespace stratumforge;

namespace {

Vec2 rational_vec(const Rat& x, const Rat& y) {
    return {Scalar::rational(x), Scalar::rational(y)};
}

// lattice cocycle with V = d, absolute image Z+iZ, prescribed class offsets
ExactCocycle lattice_cocycle(const std::vector<int>& orders,
                             const std::vector<std::vector<int>>& classes, int d) {
    ExactCocycle chi;
    int total = 0;
    for (int o : orders) total += o;
    chi.g = total / 2 + 1;
    chi.orders = orders;
    chi.a.assign(chi.g, rational_vec(0, 0));
    chi.b.assign(chi.g, rational_vec(0, 0));
    chi.a[0] = rational_vec(1, 0);
    chi.b[0] = rational_vec(0, 1);
    chi.a[1] = rational_vec(1, 0);
    chi.b[1] = rational_vec(0, d - 1);
    std::vector<Rat> offset(orders.size(), Rat(0));
    for (size_t c = 0; c < classes.size(); ++c)
        for (int j : classes[c]) offset[j] = Rat(1, (int)c + 2) * (c == 0 ? Rat(0) : Rat(1));
    for (size_t j = 1; j < orders.size(); ++j) chi.rel.push_back(rational_vec(offset[j], 0));
    chi.validate();
    return chi;
}

} // namespace

TEST_CASE("volume of simple cocycles") {
    ExactCocycle chi;
    chi.g = 2;
    chi.orders = {2};
    chi.a = {rational_vec(1, 0), rational_vec(0, 0)};
    chi.b = {rational_vec(0, 1), rational_vec(0, 0)};
    CHECK(volume(chi) == Scalar::rational(1));

    // two handles splitting volume 1, as in the dense-orbit normal form
    int n = 7;
    ExactCocycle psi;
    psi.g = 2;
    psi.orders = {1, 1};
    psi.rel = {rational_vec(0, 0)};
    psi.a = {rational_vec(Rat(n - 1, n), 0), rational_vec(Rat(1, n), 0)};
    psi.b = {rational_vec(0, 1), rational_vec(0, 1)};
    CHECK(volume(psi) == Scalar::rational(1));
}

TEST_CASE("volume over an irrational tower") {
    ExactCocycle chi;
    chi.ctx.reals.push_back({"sqrt2", "1.41421356237309504880", Rat(2)});
    Scalar r2 = Scalar::basis_element(1);
    chi.g = 2;
    chi.orders = {2};
    chi.a = {rational_vec(1, 0), rational_vec(0, 1)};
    chi.b = {{r2, Scalar::rational(1)}, rational_vec(-1, 0)};
    CHECK(volume(chi) == Scalar::rational(2));
}

TEST_CASE("lattice detection") {
    ExactCocycle chi;
    chi.g = 2;
    chi.orders = {2};
    chi.a = {rational_vec(1, 0), rational_vec(0, 0)};
    chi.b = {rational_vec(0, 1), rational_vec(0, 0)};
    LatticeResult l = is_lattice(chi);
    CHECK(l.lattice);
    CHECK(l.covolume == Scalar::rational(1));

    chi.ctx.reals.push_back({"sqrt2", "1.41421356237309504880", Rat(2)});
    chi.a[1] = {Scalar::basis_element(1), Scalar::rational(0)};
    LatticeResult l2 = is_lattice(chi);
    CHECK_FALSE(l2.lattice);
    CHECK(l2.rank == 3);

    ExactCocycle flat;
    flat.g = 2;
    flat.orders = {2};
    flat.a = {rational_vec(1, 0), rational_vec(Rat(1, 2), 0)};
    flat.b = {rational_vec(2, 0), rational_vec(3, 0)};
    CHECK_FALSE(is_lattice(flat).lattice);
}

TEST_CASE("branch classes of a cocycle") {
    ExactCocycle chi = lattice_cocycle({1, 1}, {{0}, {1}}, 4);
    chi.rel[0] = rational_vec(Rat(1, 2), 0);
    Partition p = psi_of_cocycle(chi);
    CHECK(p.size() == 2);

    chi.rel[0] = rational_vec(3, 2);
    p = psi_of_cocycle(chi);
    CHECK(p.size() == 1);

    ExactCocycle single = lattice_cocycle({2}, {{0}}, 3);
    CHECK(psi_of_cocycle(single).size() == 1);
}

TEST_CASE("minmax assignment agrees with full enumeration") {
    auto naive = [](const std::vector<int>& sizes, const std::vector<Int>& w) {
        int k = (int)w.size(), l = (int)sizes.size();
        std::vector<int> cls(k, 0);
        Int best = -1;
        while (true) {
            std::vector<int> cnt(l, 0);
            std::vector<Int> load(l, 0);
            for (int j = 0; j < k; ++j) {
                ++cnt[cls[j]];
                load[cls[j]] += w[j];
            }
            bool ok = true;
            for (int c = 0; c < l; ++c) ok = ok && cnt[c] == sizes[c];
            if (ok) {
                Int v = 0;
                for (auto& x : load) v = std::max(v, x);
                if (best < 0 || v < best) best = v;
            }
            int at = k - 1;
            while (at >= 0 && cls[at] == l - 1) cls[at--] = 0;
            if (at < 0) break;
            ++cls[at];
        }
        return best;
    };
    std::mt19937 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + (int)(rng() % 6);
        std::vector<Int> w;
        for (int j = 0; j < k; ++j) w.push_back(1 + (int)(rng() % 7));
        // random size split
        std::vector<int> sizes;
        int left = k;
        while (left > 0) {
            int c = 1 + (int)(rng() % left);
            sizes.push_back(c);
            left -= c;
        }
        MinmaxResult mm = minmax_assignment(sizes, w);
        CHECK(mm.value == naive(sizes, w));
    }
    CHECK(minmax_assignment({2, 2}, {Int(2), Int(2), Int(4), Int(6)}).value == 8);
    // eight weights, mixed class sizes
    CHECK(minmax_assignment({3, 3, 2}, {Int(7), Int(5), Int(5), Int(3), Int(3), Int(2), Int(2), Int(1)}).value ==
          naive({3, 3, 2}, {Int(7), Int(5), Int(5), Int(3), Int(3), Int(2), Int(2), Int(1)}));
    CHECK(minmax_assignment({4}, {Int(1), Int(2), Int(3), Int(4)}).value == 10);
    CHECK(minmax_assignment({1, 1, 1}, {Int(3), Int(5), Int(7)}).value == 7);
    CHECK_THROWS_AS(minmax_assignment({2}, {Int(1)}), Error);
}

TEST_CASE("realizability thresholds at the double-zero strata") {
    // one class of two order-3 zeros: realizable at V = 8, not at 7
    ExactCocycle chi8 = lattice_cocycle({3, 3}, {{0, 1}}, 8);
    chi8.rel[0] = rational_vec(2, 1);
    RealizabilityVerdict v8 = theorem1_check(chi8);
    CHECK(v8.realizable);
    CHECK(v8.ratio == 8);
    CHECK(v8.minmax == 8);

    ExactCocycle chi7 = lattice_cocycle({3, 3}, {{0, 1}}, 7);
    chi7.rel[0] = rational_vec(2, 1);
    RealizabilityVerdict v7 = theorem1_check(chi7);
    CHECK_FALSE(v7.realizable);
    CHECK(v7.failing == "inequality");

    // split classes: realizable at V = 4, not at 3
    ExactCocycle chi4 = lattice_cocycle({3, 3}, {{0}, {1}}, 4);
    chi4.rel[0] = rational_vec(Rat(1, 2), 0);
    CHECK(theorem1_check(chi4).realizable);
    ExactCocycle chi3 = lattice_cocycle({3, 3}, {{0}, {1}}, 3);
    chi3.rel[0] = rational_vec(Rat(1, 2), 0);
    CHECK_FALSE(theorem1_check(chi3).realizable);
}

TEST_CASE("non-positive volume is never realizable") {
    ExactCocycle chi;
    chi.g = 2;
    chi.orders = {2};
    chi.a = {rational_vec(1, 0), rational_vec(0, 0)};
    chi.b = {rational_vec(0, -1), rational_vec(0, 0)};
    RealizabilityVerdict v = theorem1_check(chi);
    CHECK_FALSE(v.realizable);
    CHECK(v.failing == "volume");
}

TEST_CASE("group actions on cocycles") {
    ExactCocycle chi = lattice_cocycle({2}, {{0}}, 3);
    Mat2Rat id{{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}};
    ExactCocycle same = gl2_act(id, chi);
    CHECK(volume(same) == volume(chi));

    Mat2Rat stretch{{{Rat(2), Rat(0)}, {Rat(0), Rat(1)}}};
    CHECK(volume(gl2_act(stretch, chi)) == volume(chi) + volume(chi));

    Mat2Rat rot{{{Rat(0), Rat(-1)}, {Rat(1), Rat(0)}}};
    CHECK(volume(gl2_act(rot, chi)) == volume(chi));

    Mat2Rat sing{{{Rat(1), Rat(0)}, {Rat(2), Rat(0)}}};
    CHECK_THROWS_AS(gl2_act(sing, chi), Error);
}

TEST_CASE("point pushing shifts relative periods inside the lattice") {
    ExactCocycle chi = lattice_cocycle({1, 1}, {{0}, {1}}, 4);
    chi.rel[0] = rational_vec(Rat(1, 2), 0);
    Partition before = psi_of_cocycle(chi);

    ExactCocycle same = point_push(chi, {rational_vec(0, 0)});
    CHECK(restrict_cocycle(same) == restrict_cocycle(chi));
    CHECK(same.rel[0] == chi.rel[0]);

    ExactCocycle moved = point_push(chi, {rational_vec(1, 1)});
    CHECK(moved.rel[0] == rational_vec(Rat(3, 2), 1));
    CHECK(psi_of_cocycle(moved) == before);
    CHECK(restrict_cocycle(moved) == restrict_cocycle(chi));

    CHECK_THROWS_AS(point_push(chi, {rational_vec(Rat(1, 2), 0)}), Error);
}

TEST_CASE("restriction drops relative data only") {
    ExactCocycle chi = lattice_cocycle({1, 1}, {{0}, {1}}, 4);
    chi.rel[0] = rational_vec(Rat(1, 3), 0);
    AbsoluteCocycle abs = restrict_cocycle(chi);
    CHECK(volume(abs) == volume(chi));
}

TEST_CASE("random rational cocycles have integral volume ratio when lattice") {
    std::mt19937 rng(71);
    int lattice_count = 0;
    for (int trial = 0; trial < 200; ++trial) {
        ExactCocycle chi;
        chi.g = 2 + (int)(rng() % 2);
        chi.orders.assign(1, 2 * chi.g - 2);
        auto rnd = [&]() { return Rat((int)(rng() % 9) - 4, 1 + (int)(rng() % 3)); };
        for (int i = 0; i < chi.g; ++i) {
            chi.a.push_back(rational_vec(rnd(), rnd()));
            chi.b.push_back(rational_vec(rnd(), rnd()));
        }
        LatticeResult l = is_lattice(chi);
        if (!l.lattice) continue;
        ++lattice_count;
        Scalar v = volume(chi);
        auto it = l.covolume.c.begin();
        Rat ratio = v.c.count(it->first) ? v.c.at(it->first) / it->second : Rat(0);
        CHECK(is_integer(ratio));
        CHECK(v == l.covolume.scaled(ratio));
    }
    CHECK(lattice_count > 50);
}
