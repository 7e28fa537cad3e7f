#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace lch;

TEST_CASE("augmentation counts of the small diagrams") {
    auto t = support::load("trefoil");
    auto mt = maslov_potential(t);
    auto gt = build_dga(t, mt);
    CHECK(count_augmentations(gt, 0, field_of_order(2)) == 5);
    CHECK(count_augmentations(gt, 0, field_of_order(3)) == 10);
    CHECK(count_augmentations(gt, 1, field_of_order(2)) == 20);

    auto u = support::load("unknot");
    auto gu = build_dga(u, maslov_potential(u));
    auto one = enumerate_augmentations(gu, 0, field_of_order(2));
    REQUIRE(one.size() == 1);
    CHECK(one[0].t == std::vector<FqElem>{1});
    CHECK(one[0].gen == std::vector<FqElem>{0});

    auto s = support::load("stabunknot");
    CHECK(enumerate_augmentations(build_dga(s, maslov_potential(s)), 2, field_of_order(3)).empty());

    auto h = support::load("hopf");
    auto gh = build_dga(h, maslov_potential(h));
    for (long q : {2, 3, 4, 5}) CHECK(count_augmentations(gh, 0, field_of_order(q)) == q * q - q + 1);
}

TEST_CASE("library counts match an independent evaluator over prime fields") {
    std::vector<FrontDiagram> ds;
    for (const auto& n : support::corpus()) ds.push_back(support::load(n));
    std::mt19937 rng(12);
    for (int it = 0; it < 25; ++it) ds.push_back(support::random_plat(rng, 1 + rng() % 2, rng() % 6));
    for (const auto& d : ds) {
        auto mu = maslov_potential(d);
        auto g = build_dga(d, mu);
        for (int m : support::valid_ms(d))
            for (long long p : {2, 3}) {
                auto lib = count_augmentations(g, m, field_of_order(p));
                CHECK(lib == support::naive_aug_count_prime(g, m, p));
            }
    }
}

TEST_CASE("enumerated augmentations satisfy the differential") {
    auto t = support::load("trefoil");
    auto g = build_dga(t, maslov_potential(t));
    Fq F = field_of_order(4);
    auto augs = enumerate_augmentations(g, 1, F);
    CHECK(augs.size() == 272);
    for (const auto& a : augs) CHECK(is_augmentation(g, a, F));
    auto sorted = augs;
    std::sort(sorted.begin(), sorted.end());
    CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    Augmentation bad = augs.front();
    bad.t[0] = F.add(bad.t[0], 1) == 0 ? 2 : F.add(bad.t[0], 1);
    CHECK_FALSE(is_augmentation(g, bad, F));
}

TEST_CASE("brute force respects the cap") {
    auto t = support::load("trefoil");
    auto g = build_dga(t, maslov_potential(t));
    BruteOptions opt;
    opt.cap = 10;
    CHECK_THROWS_AS(count_augmentations(g, 0, field_of_order(3), opt), ScaleError);
}

TEST_CASE("thread count does not change results") {
    auto d = support::load("plat6");
    auto g = build_dga(d, maslov_potential(d));
    Fq F = field_of_order(3);
    BruteOptions one, many;
    one.threads = 1;
    many.threads = 4;
    auto a = enumerate_augmentations(g, 0, F, one);
    auto b = enumerate_augmentations(g, 0, F, many);
    CHECK(a == b);
}

TEST_CASE("variety dimension") {
    auto t = support::load("trefoil");
    CHECK(variety_dim(t, maslov_potential(t), 0) == 2);
    auto h = support::load("hopf");
    CHECK(variety_dim(h, maslov_potential(h), 0) == 2);
    auto u = support::load("unknot");
    CHECK(variety_dim(u, maslov_potential(u), 1) == 1);
    auto s = support::load("stabunknot");
    CHECK_FALSE(variety_dim(s, maslov_potential(s), 1).has_value());
}

TEST_CASE("augmentation number reports") {
    auto t = support::load("trefoil");
    auto mt = maslov_potential(t);
    for (Method meth : {Method::Brute, Method::Mcs, Method::Ruling}) {
        auto r = aug_number(t, mt, 0, field_of_order(2), meth);
        CHECK(r.count == 5);
        CHECK(r.dim == 2);
        CHECK(r.aug_number == BigRational(5, 4));
        auto r1 = aug_number(t, mt, 1, field_of_order(2), meth);
        CHECK(r1.count == 20);
        CHECK(r1.dim == 4);
        CHECK(r1.aug_number == BigRational(5, 4));
    }
    auto r1 = aug_number(t, mt, 1, field_of_order(2), Method::Ruling);
    std::map<std::string, BigInt> per(r1.per_ruling.begin(), r1.per_ruling.end());
    CHECK(per["{1,2,3}"] == 4);
    CHECK(per["{1}"] == 8);
    CHECK(per["{3}"] == 8);

    auto h = support::load("hopf");
    auto rh = aug_number(h, maslov_potential(h), 0, field_of_order(3), Method::Brute);
    CHECK(rh.count == 7);
    CHECK(rh.dim == 2);
    CHECK(rh.aug_number == BigRational(7, 9));

    auto s = support::load("stabunknot");
    auto rs = aug_number(s, maslov_potential(s), 2, field_of_order(3), Method::Brute);
    CHECK(rs.count == 0);
    CHECK_FALSE(rs.dim.has_value());
    CHECK(rs.aug_number == 0);
}

TEST_CASE("main identity on the small diagrams") {
    auto u = support::load("unknot");
    for (int m : {0, 1, 2})
        for (const auto& row : verify_main_theorem(u, maslov_potential(u), m, {2, 3, 4, 5})) {
            CHECK(row.equal);
            CHECK(row.aug_number == 1);
        }
    auto t = support::load("trefoil");
    auto rows = verify_main_theorem(t, maslov_potential(t), 0, {2, 3, 4, 5});
    REQUIRE(rows.size() == 4);
    CHECK(rows[0].aug_number == BigRational(5, 4));
    CHECK(rows[1].aug_number == BigRational(10, 9));
    CHECK(rows[2].aug_number == BigRational(17, 16));
    for (const auto& r : rows) CHECK(r.equal);
    auto s = support::load("stabunknot");
    for (int m : {1, 2})
        for (const auto& row : verify_main_theorem(s, maslov_potential(s), m, {2, 3})) {
            CHECK(row.equal);
            CHECK(row.aug_number == 0);
            CHECK(row.rhs == 0);
        }
}

TEST_CASE("stabilizing the algebra leaves the augmentation number unchanged") {
    for (const char* name : {"unknot", "trefoil", "hopf"}) {
        auto d = support::load(name);
        auto mu = maslov_potential(d);
        auto g = build_dga(d, mu);
        auto dim = variety_dim(d, mu, 0);
        for (int m : support::valid_ms(d)) {
            auto dm = variety_dim(d, mu, m);
            for (long long k : {0LL, 1LL, static_cast<long long>(m), static_cast<long long>(m) - 1}) {
                auto s = stabilize(g, k);
                for (long q : {2, 3}) {
                    Fq F = field_of_order(q);
                    BigInt base = count_augmentations(g, m, F);
                    BigInt stab = count_augmentations(s, m, F);
                    bool e_free = degree_graded(k, m);
                    CHECK(stab == base * (e_free ? q : 1));
                    BigRational before = BigRational(base) * rational_pow(q, -*dm);
                    BigRational after = BigRational(stab) * rational_pow(q, -(*dm + (e_free ? 1 : 0)));
                    CHECK(before == after);
                }
            }
        }
        (void)dim;
    }
}

TEST_CASE("even graded knot augmentations send t to -1") {
    for (const char* name : {"unknot", "unknot_x", "trefoil", "torus25", "plat6"}) {
        auto d = support::load(name);
        auto g = build_dga(d, maslov_potential(d));
        for (int m : {0, 2})
            for (long long q : {3, 5}) {
                Fq F = field_of_order(q);
                for (const auto& a : enumerate_augmentations(g, m, F)) CHECK(a.t[0] == F.neg(1));
            }
    }
}

TEST_CASE("counts do not depend on orientation or knot offsets") {
    for (const char* name : {"trefoil", "hopf", "unknot_x", "torus25"}) {
        auto d = support::load(name);
        auto mu = maslov_potential(d);
        for (int m : support::valid_ms(d)) {
            Fq F = field_of_order(3);
            BigInt base = count_augmentations(build_dga(d, mu), m, F);
            for (int c = 0; c < d.num_components; ++c) {
                auto r = reverse_orientation(d, c);
                CHECK(count_augmentations(build_dga(r, mu), m, F) == base);
            }
            if (d.num_components == 1) {
                auto shifted = maslov_potential(d, std::vector<long long>{3});
                CHECK(count_augmentations(build_dga(d, shifted), m, F) == base);
            }
        }
    }
}

TEST_CASE("counts are the same for every choice of field modulus") {
    auto t = support::load("trefoil");
    auto g = build_dga(t, maslov_potential(t));
    for (auto [p, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        BigInt base = count_augmentations(g, 1, field_make(p, k));
        for (const auto& f : monic_irreducibles(p, k)) CHECK(count_augmentations(g, 1, Fq(p, k, f)) == base);
    }
}
