#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace lch;

namespace {

std::vector<FrontDiagram> random_diagrams(unsigned seed, int count, int max_cusps, int max_crossings) {
    std::mt19937 rng(seed);
    std::vector<FrontDiagram> out;
    for (int i = 0; i < count; ++i)
        out.push_back(support::random_plat(rng, 1 + rng() % max_cusps, rng() % (max_crossings + 1)));
    return out;
}

}  // namespace

TEST_CASE("three counting methods agree on random plats") {
    for (const auto& d : random_diagrams(31, 150, 3, 8)) {
        auto mu = maslov_potential(d);
        for (int m : support::valid_ms(d))
            for (long long q : {2, 3, 4, 5}) {
                std::vector<VerifyRow> rows;
                try {
                    rows = verify_main_theorem(d, mu, m, {q});
                } catch (const ScaleError&) {
                    rows = verify_main_theorem(d, mu, m, {q}, {Method::Mcs, Method::Ruling});
                }
                REQUIRE(rows.size() == 1);
                CHECK_MESSAGE(rows[0].equal, serialize_front(d) << " m=" << m << " q=" << q << " "
                                                                << rows[0].mismatch);
            }
    }
}

TEST_CASE("theta is a bijection on random plats") {
    for (const auto& d : random_diagrams(32, 80, 3, 7)) {
        auto mu = maslov_potential(d);
        auto g = build_dga(d, mu);
        for (int m : support::valid_ms(d)) {
            Fq F = field_of_order(3);
            auto augs = enumerate_augmentations(g, m, F);
            auto forms = enumerate_aforms(d, mu, m, F);
            CHECK(augs.size() == forms.size());
            std::set<Augmentation> img;
            for (const auto& a : forms) img.insert(theta(d, mu, m, a, F));
            CHECK(img == std::set<Augmentation>(augs.begin(), augs.end()));
        }
    }
}

TEST_CASE("phi and psi invert each other on random plats") {
    for (const auto& d : random_diagrams(33, 80, 3, 8)) {
        auto mu = maslov_potential(d);
        for (int m : support::valid_ms(d))
            for (long long q : {2, 3}) {
                Fq F = field_of_order(q);
                std::map<std::string, long long> per;
                for (const auto& a : enumerate_aforms(d, mu, m, F)) {
                    auto ps = psi(d, mu, m, a, F);
                    CHECK(validate_srform(d, mu, m, ps.rho, ps.srform, F).ok);
                    CHECK(phi(d, mu, m, ps.rho, ps.srform, F).aform == a);
                    ++per[ps.rho.id()];
                }
                for (const auto& r : enumerate_rulings(d, mu, m)) {
                    auto pts = z_rho_points(d, mu, r, m, F);
                    CHECK(per[r.id()] == static_cast<long long>(pts.size()));
                    for (const auto& p : pts) {
                        auto sr = lambda_sr(d, mu, m, r, p, F);
                        CHECK(sr_point(d, mu, m, r, sr, F) == p);
                        auto back = psi(d, mu, m, phi(d, mu, m, r, sr, F).aform, F);
                        CHECK(back.rho.id() == r.id());
                        CHECK(back.srform == sr);
                    }
                }
            }
    }
}

TEST_CASE("contraction scales the solution count") {
    std::mt19937 rng(34);
    for (long q : {2, 3, 4}) {
        Fq F = field_of_order(q);
        for (int it = 0; it < 40; ++it) {
            RulingGraph g;
            g.num_t = 1 + static_cast<int>(rng() % 2);
            const int nv = 1 + static_cast<int>(rng() % 4);
            for (int v = 0; v < nv; ++v) {
                GraphLabel l;
                l.sign = rng() % 2 ? 1 : -1;
                l.texp.assign(g.num_t, 0);
                if (rng() % 2) l.texp[rng() % g.num_t] = 1;
                g.labels.push_back(l);
            }
            const int ne = static_cast<int>(rng() % 6);
            for (int e = 0; e < ne && nv > 1; ++e) {
                int a = static_cast<int>(rng() % nv), b = static_cast<int>(rng() % nv);
                while (a == b) b = static_cast<int>(rng() % nv);
                g.edges.push_back({a, b, rng() % 2 ? EdgeType::D : EdgeType::N});
            }
            for (std::size_t e = 0; e < g.edges.size(); ++e) {
                int s = 0;
                auto c = contract(g, static_cast<int>(e), &s);
                CHECK(s >= 1);
                CHECK(count_solutions(g, F) == support::ipow(q - 1, s - 1) * count_solutions(c, F));
            }
        }
    }
}

TEST_CASE("ruling polynomial evaluated at q matches the count") {
    for (const auto& d : random_diagrams(35, 100, 3, 10)) {
        auto mu = maslov_potential(d);
        for (int m : support::valid_ms(d)) {
            auto R = ruling_polynomial(d, mu, m);
            auto dim = variety_dim(d, mu, m);
            for (long long q : {2, 3, 5}) {
                auto rep = aug_number(d, mu, m, field_of_order(q), Method::Ruling);
                CHECK(rep.aug_number == rhs_exact(R, d.num_components, q));
                if (!dim) CHECK(rep.count == 0);
            }
        }
    }
}
