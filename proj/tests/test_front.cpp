#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace lch;

namespace {

int rotation_from_cusps(const FrontDiagram& d, int comp) {
    int down = 0, up = 0;
    for (int e = 0; e < d.num_events(); ++e) {
        if (d.events[e].kind == EventKind::Crossing || d.component_of_event(e) != comp) continue;
        (d.cusp_goes_down(e) ? down : up) += 1;
    }
    return (down - up) / 2;
}

}  // namespace

TEST_CASE("parse the small diagrams") {
    auto u = parse_front("L 1 / R 1");
    CHECK(u.num_components == 1);
    CHECK(u.rotation == std::vector<int>{0});
    CHECK(u.left_cusp_events.size() == 1);
    CHECK(u.right_cusp_events.size() == 1);

    auto t = support::load("trefoil");
    CHECK(t.num_components == 1);
    CHECK(t.gcd_rotation == 0);
    CHECK(t.crossing_events.size() == 3);

    auto s = support::load("stabunknot");
    CHECK(s.num_components == 1);
    CHECK(s.gcd_rotation == 1);
    CHECK(maslov_potential(s).modulus == 2);

    auto h = support::load("hopf");
    CHECK(h.num_components == 2);
    CHECK(h.offsets_directive == std::vector<long long>{0, -1});
}

TEST_CASE("one crossing unknot has rotation zero") {
    auto d = support::load("unknot_x");
    CHECK(d.num_components == 1);
    CHECK(d.gcd_rotation == 0);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_front("L 1\nQ 2\n"), SyntaxError);
    CHECK_THROWS_AS(parse_front("L 1\nX\n"), SyntaxError);
    CHECK_THROWS_AS(parse_front("L x\n"), SyntaxError);
    CHECK_THROWS_AS(parse_front("L 1\nL 3\nR 1\n"), ShapeError);
    CHECK_THROWS_AS(parse_front("L 1\nR 1\nL 1\nR 1\n"), ShapeError);
    CHECK_THROWS_AS(parse_front("L 3\nR 1\n"), ShapeError);
    CHECK_THROWS_AS(parse_front("L 1\nR 2\n"), ShapeError);
    CHECK_THROWS_AS(parse_front("L 1\nR 1\nmark 1 2\n"), MarkError);
    CHECK_THROWS_AS(parse_front("L1/L3/X2/X2/R1/R1\nmark 1 2\n"), MarkError);
    CHECK_THROWS_AS(parse_front("L 1\nR 1\nmark 2 1\n"), MarkError);
    CHECK_THROWS_AS(parse_front(""), ShapeError);
}

TEST_CASE("default marks sit on the leftmost right cusp of each component") {
    auto t = support::load("trefoil");
    REQUIRE(t.marked_cusp.size() == 1);
    CHECK(t.marked_cusp[0] == t.right_cusp_events[0]);
    auto h = support::load("hopf");
    REQUIRE(h.marked_cusp.size() == 2);
    for (int c = 0; c < 2; ++c) {
        int first = -1;
        for (int e : h.right_cusp_events)
            if (h.component_of_event(e) == c) {
                first = e;
                break;
            }
        CHECK(h.marked_cusp[c] == first);
    }
    auto moved = parse_front("L1/L3/X2/X2/X2/R1/R1\nmark 1 2\n");
    CHECK(moved.marked_cusp[0] == moved.right_cusp_events[1]);
}

TEST_CASE("serialization round trip") {
    for (const auto& name : support::corpus()) {
        auto d = support::load(name);
        auto text = serialize_front(d);
        auto back = parse_front(text);
        CHECK(back.events == d.events);
        CHECK(back.offsets_directive == d.offsets_directive);
        CHECK(serialize_front(back) == text);
    }
    auto m = parse_front("L1/L3/X2/X2/X2/R1/R1\nmark 1 2\n");
    CHECK(serialize_front(m) == "L 1\nL 3\nX 2\nX 2\nX 2\nR 1\nR 1\nmark 1 2\n");
}

TEST_CASE("random plats round trip through text") {
    std::mt19937 rng(3);
    for (int it = 0; it < 100; ++it) {
        auto d = support::random_plat(rng, 1 + rng() % 3, rng() % 8);
        CHECK(parse_front(serialize_front(d)).events == d.events);
    }
}

TEST_CASE("maslov potential examples") {
    auto u = support::load("unknot");
    auto mu = maslov_potential(u);
    CHECK(mu.at(u, 1, 0) == 1);
    CHECK(mu.at(u, 1, 1) == 0);

    auto t = support::load("trefoil");
    auto mt = maslov_potential(t);
    CHECK(crossing_degrees(t, mt) == std::vector<long long>{0, 0, 0});

    auto h = support::load("hopf");
    CHECK(crossing_degrees(h, maslov_potential(h)) == std::vector<long long>{0, 0});
    auto hz = maslov_potential(h, std::vector<long long>{0, 0});
    auto dz = crossing_degrees(h, hz);
    std::sort(dz.begin(), dz.end());
    CHECK(dz == std::vector<long long>{-1, 1});

    auto ux = support::load("unknot_x");
    CHECK(crossing_degrees(ux, maslov_potential(ux)) == std::vector<long long>{0});

    CHECK(crossing_degrees(u, mu).empty());
    CHECK(build_dga(u, mu).gens.at(0).degree == 1);
}

TEST_CASE("cusp constraints hold on every corpus diagram") {
    std::mt19937 rng(8);
    std::vector<FrontDiagram> ds;
    for (const auto& n : support::corpus()) ds.push_back(support::load(n));
    for (int it = 0; it < 60; ++it) ds.push_back(support::random_plat(rng, 1 + rng() % 3, rng() % 9));
    for (const auto& d : ds) {
        auto mu = maslov_potential(d);
        for (int e = 0; e < d.num_events(); ++e) {
            const auto& ev = d.events[e];
            if (ev.kind == EventKind::Crossing) continue;
            int g = ev.kind == EventKind::LeftCusp ? e + 1 : e;
            CHECK(reduce_mod(mu.at(d, g, ev.k0()) - mu.at(d, g, ev.k0() + 1) - 1, mu.modulus) == 0);
        }
    }
}

TEST_CASE("reversing a component negates its rotation number") {
    std::mt19937 rng(21);
    for (int it = 0; it < 60; ++it) {
        auto d = support::random_plat(rng, 1 + rng() % 3, rng() % 9);
        for (int c = 0; c < d.num_components; ++c) {
            CHECK(rotation_from_cusps(d, c) == d.rotation[c]);
            auto r = reverse_orientation(d, c);
            CHECK(rotation_from_cusps(r, c) == -d.rotation[c]);
            for (int o = 0; o < d.num_components; ++o)
                if (o != c) CHECK(rotation_from_cusps(r, o) == d.rotation[o]);
        }
    }
}

TEST_CASE("offsets move degrees only at crossings between components") {
    std::mt19937 rng(4);
    for (int it = 0; it < 60; ++it) {
        auto d = support::random_plat(rng, 2 + rng() % 2, 2 + rng() % 7);
        if (d.gcd_rotation != 0) continue;
        auto base = crossing_degrees(d, maslov_potential(d));
        std::vector<long long> off(d.num_components);
        for (auto& o : off) o = static_cast<long long>(rng() % 5) - 2;
        auto moved = crossing_degrees(d, maslov_potential(d, off));
        for (std::size_t ci = 0; ci < base.size(); ++ci) {
            int e = d.crossing_events[ci];
            int k = d.events[e].k0();
            int ca = d.strands[d.strand_at[e][k]].component;
            int cb = d.strands[d.strand_at[e][k + 1]].component;
            if (ca == cb) CHECK(moved[ci] == base[ci]);
            else CHECK(moved[ci] - base[ci] == off[ca] - off[cb]);
        }
    }
}

TEST_CASE("grading checks") {
    auto t = support::load("trefoil");
    CHECK_NOTHROW(check_grading(t, 0));
    CHECK_NOTHROW(check_grading(t, 5));
    auto s = support::load("stabunknot");
    CHECK_THROWS_AS(check_grading(s, 0), GradingError);
    CHECK_NOTHROW(check_grading(s, 1));
    CHECK_NOTHROW(check_grading(s, 2));
    CHECK_THROWS_AS(check_grading(s, 3), GradingError);
    CHECK_THROWS_AS(check_grading(t, -1), GradingError);
}
