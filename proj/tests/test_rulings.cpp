#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace lch;

namespace {

std::vector<std::vector<int>> switch_sets(const std::vector<NormalRuling>& rs) {
    std::vector<std::vector<int>> out;
    for (const auto& r : rs) {
        std::vector<int> s;
        for (std::size_t i = 0; i < r.switches.size(); ++i)
            if (r.switches[i]) s.push_back(static_cast<int>(i) + 1);
        out.push_back(s);
    }
    return out;
}

// A(x) computed directly from pair configurations of the ruling disks.
long long profile(const FrontDiagram& d, const MaslovPotential& mu, const std::vector<int>& rho, int gap, int m) {
    long long A = 0;
    const int n = static_cast<int>(rho.size());
    for (int i = 0; i < n; ++i) {
        if (rho[i] < i) continue;
        for (int j = i + 1; j < n; ++j) {
            if (rho[j] < j) continue;
            // disks (i, rho[i]) above-or-outside (j, rho[j]) since i < j
            long long Mi = mu.at(d, gap, i), Mj = mu.at(d, gap, j);
            bool disjoint = rho[i] < j;
            bool nested = rho[j] < rho[i];
            if (disjoint && degree_graded(Mi - Mj - 1, m)) ++A;
            if (nested && degree_graded(Mi - Mj, m)) ++A;
        }
    }
    return A;
}

std::vector<FrontDiagram> sample_diagrams() {
    std::vector<FrontDiagram> ds;
    for (const auto& n : support::corpus()) ds.push_back(support::load(n));
    ds.push_back(support::load("torus25"));
    ds.push_back(support::load("plat6"));
    ds.push_back(support::load("plat6b"));
    std::mt19937 rng(17);
    for (int it = 0; it < 60; ++it) ds.push_back(support::random_plat(rng, 1 + rng() % 3, rng() % 9));
    return ds;
}

}  // namespace

TEST_CASE("ruling examples") {
    auto u = support::load("unknot");
    auto ru = enumerate_rulings(u, maslov_potential(u), 0);
    REQUIRE(ru.size() == 1);
    CHECK(ruling_stats(u, ru[0], 0).j == -1);
    CHECK(ruling_stats(u, ru[0], 0).r == 0);

    auto t = support::load("trefoil");
    auto mt = maslov_potential(t);
    auto rt = enumerate_rulings(t, mt, 0);
    CHECK(switch_sets(rt) == std::vector<std::vector<int>>{{1}, {3}, {1, 2, 3}});
    std::map<std::string, int> js;
    for (const auto& r : rt) js[r.id()] = ruling_stats(t, r, 0).j;
    CHECK(js == std::map<std::string, int>{{"{1,2,3}", 1}, {"{1}", -1}, {"{3}", -1}});

    auto s = support::load("stabunknot");
    CHECK(enumerate_rulings(s, maslov_potential(s), 2).empty());
}

TEST_CASE("ruling polynomial examples") {
    auto t = support::load("trefoil");
    auto R = ruling_polynomial(t, maslov_potential(t), 0);
    CHECK(R == LaurentPoly::monomial(1) + LaurentPoly::monomial(-1, 2));
    auto h = support::load("hopf");
    CHECK(ruling_polynomial(h, maslov_potential(h), 0) == LaurentPoly::monomial(0) + LaurentPoly::monomial(-2));
    auto s = support::load("stabunknot");
    CHECK(ruling_polynomial(s, maslov_potential(s), 1).is_zero());
    CHECK_THROWS_AS(ruling_polynomial(s, maslov_potential(s), 0), GradingError);
}

TEST_CASE("ruling statistics examples") {
    auto t = support::load("trefoil");
    auto mt = maslov_potential(t);
    for (int m : {0, 1}) {
        for (const auto& r : enumerate_rulings(t, mt, m)) {
            auto st = ruling_stats(t, r, m);
            if (r.id() == "{1,2,3}") {
                CHECK(st.j == 1);
                CHECK(st.r == (m == 1 ? 2 : 0));
            }
            if (r.id() == "{1}") {
                CHECK(st.j == -1);
                CHECK(st.returns_graded == 1);
                CHECK(r.classes[2].kind == CrossingKind::Return);
                CHECK(st.r == (m == 1 ? 3 : 1));
            }
        }
    }
}

TEST_CASE("switch types on the six strand plat") {
    auto d = support::load("plat6");
    auto mu = maslov_potential(d);
    std::set<std::string> tags;
    for (const auto& r : enumerate_rulings(d, mu, 0))
        for (const auto& c : r.classes) tags.insert(c.tag());
    for (const char* t : {"S1", "S2", "S3", "R1", "R2", "R3", "D"}) CHECK(tags.count(t) == 1);
}

TEST_CASE("enumeration matches a subset oracle") {
    for (const auto& d : sample_diagrams()) {
        auto mu = maslov_potential(d);
        for (int m : support::valid_ms(d)) {
            auto got = switch_sets(enumerate_rulings(d, mu, m));
            auto want = support::naive_ruling_switch_sets(d, mu, m);
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);
        }
    }
}

TEST_CASE("ruling invariants") {
    for (const auto& d : sample_diagrams()) {
        auto mu = maslov_potential(d);
        for (int m : support::valid_ms(d)) {
            auto rs = enumerate_rulings(d, mu, m);
            std::set<long long> j2r, rd;
            for (const auto& r : rs) {
                auto st = ruling_stats(d, r, m);
                j2r.insert(st.j + 2LL * st.r);
                rd.insert(st.returns_graded - st.departures_graded);
                CHECK(st.r >= 0);
                CHECK(st.j >= -d.num_components);
                // switch classification covers exactly the three normal cases
                for (std::size_t ci = 0; ci < r.classes.size(); ++ci) {
                    const auto& c = r.classes[ci];
                    CHECK(c.kind != CrossingKind::Pass);
                    if (c.kind == CrossingKind::Switch) CHECK((c.type >= 1 && c.type <= 3));
                    CHECK((c.kind == CrossingKind::Switch) == static_cast<bool>(r.switches[ci]));
                }
                // involutions are fixed point free
                for (const auto& inv : r.involutions)
                    for (std::size_t i = 0; i < inv.size(); ++i) {
                        CHECK(inv[i] != static_cast<int>(i));
                        CHECK(inv[inv[i]] == static_cast<int>(i));
                    }
            }
            CHECK(j2r.size() <= 1);
            CHECK(rd.size() <= 1);
            auto R = ruling_polynomial(d, mu, m);
            if (!R.is_zero()) CHECK(R.min_degree() + d.num_components >= 0);
        }
    }
}

TEST_CASE("returns minus departures equals the change in the disk profile") {
    for (const auto& d : sample_diagrams()) {
        auto mu = maslov_potential(d);
        for (int m : support::valid_ms(d)) {
            for (const auto& r : enumerate_rulings(d, mu, m)) {
                auto st = ruling_stats(d, r, m);
                const int g0 = d.first_crossing_gap(), g1 = d.last_crossing_gap();
                long long a0 = profile(d, mu, r.involutions[g0], g0, m);
                long long a1 = profile(d, mu, r.involutions[g1], g1, m);
                CHECK(a0 == disk_profile(d, mu, r, g0, m));
                CHECK(a1 == disk_profile(d, mu, r, g1, m));
                CHECK(st.returns_graded - st.departures_graded == a1 - a0);
                // step by step: +1 at graded returns, -1 at graded departures
                for (std::size_t ci = 0; ci < d.crossing_events.size(); ++ci) {
                    int e = d.crossing_events[ci];
                    long long before = profile(d, mu, r.involutions[e], e, m);
                    long long after = profile(d, mu, r.involutions[e + 1], e + 1, m);
                    const auto& c = r.classes[ci];
                    long long want = 0;
                    if (c.kind == CrossingKind::Return && c.graded) want = 1;
                    if (c.kind == CrossingKind::Departure && c.graded) want = -1;
                    CHECK(after - before == want);
                }
            }
        }
    }
}

TEST_CASE("ruling from switches rebuilds every ruling") {
    for (const auto& d : sample_diagrams()) {
        auto mu = maslov_potential(d);
        for (int m : support::valid_ms(d))
            for (const auto& r : enumerate_rulings(d, mu, m)) {
                auto back = ruling_from_switches(d, mu, m, r.switches);
                REQUIRE(back.has_value());
                CHECK(back->involutions == r.involutions);
                CHECK(back->id() == r.id());
            }
    }
}
