#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "lch/algebra.hpp"
#include "lch/aug.hpp"
#include "lch/dga.hpp"
#include "lch/errors.hpp"
#include "lch/front.hpp"
#include "lch/mcs.hpp"
#include "lch/rulings.hpp"

namespace support {

inline std::string read_data(const std::string& name) {
    std::ifstream in(std::string(LCH_DATA_DIR) + "/" + name + ".front");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline lch::FrontDiagram load(const std::string& name) { return lch::parse_front(read_data(name)); }

inline const std::vector<std::string>& corpus() {
    static const std::vector<std::string> names = {"unknot", "unknot_x", "hopf", "trefoil", "stabunknot",
                                                   "trefoil_stab"};
    return names;
}

inline std::vector<int> valid_ms(const lch::FrontDiagram& d) {
    std::vector<int> out;
    for (int m : {0, 1, 2}) {
        try {
            lch::check_grading(d, m);
            out.push_back(m);
        } catch (const lch::GradingError&) {
        }
    }
    return out;
}

// Switch sets of all m-graded normal rulings, found by trying every subset of
// crossings and replaying the involution by hand.
inline std::vector<std::vector<int>> naive_ruling_switch_sets(const lch::FrontDiagram& d,
                                                              const lch::MaslovPotential& mu, int m) {
    using namespace lch;
    const int n = static_cast<int>(d.crossing_events.size());
    auto degs = crossing_degrees(d, mu);
    std::vector<std::vector<int>> out;
    for (long mask = 0; mask < (1L << n); ++mask) {
        std::vector<int> rho;
        bool ok = true;
        for (int e = 0; e < d.num_events() && ok; ++e) {
            const auto& ev = d.events[e];
            const int k = ev.k0();
            if (ev.kind == EventKind::LeftCusp) {
                for (auto& x : rho)
                    if (x >= k) x += 2;
                rho.insert(rho.begin() + k, {k + 1, k});
            } else if (ev.kind == EventKind::RightCusp) {
                if (rho[k] != k + 1) {
                    ok = false;
                    break;
                }
                rho.erase(rho.begin() + k, rho.begin() + k + 2);
                for (auto& x : rho)
                    if (x > k + 1) x -= 2;
            } else {
                const int ci = d.crossing_index(e);
                const bool sw = (mask >> ci) & 1;
                const int a = rho[k], b = rho[k + 1];
                if (a == k + 1) {
                    ok = false;  // crossing strands paired with each other
                    break;
                }
                if (sw) {
                    if (!degree_graded(degs[ci], m)) {
                        ok = false;
                        break;
                    }
                    bool normal = (a < k && b > k + 1) || (b < a && a < k) || (k + 1 < b && b < a);
                    if (!normal) {
                        ok = false;
                        break;
                    }
                } else {
                    std::vector<int> r2(rho.size());
                    auto sw2 = [k](int x) { return x == k ? k + 1 : x == k + 1 ? k : x; };
                    for (std::size_t i = 0; i < rho.size(); ++i) r2[sw2(static_cast<int>(i))] = sw2(rho[i]);
                    rho = r2;
                }
            }
        }
        if (!ok) continue;
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) s.push_back(i + 1);
        out.push_back(s);
    }
    return out;
}

// Augmentation count from a direct evaluation of the differential with
// plain modular integers; only prime fields.
inline long naive_aug_count_prime(const lch::Dga& g, int m, long long p) {
    std::vector<int> free_gens;
    for (std::size_t i = 0; i < g.gens.size(); ++i)
        if (lch::degree_graded(g.gens[i].degree, m)) free_gens.push_back(static_cast<int>(i));
    const int c = g.num_t;
    std::vector<long long> t(c, 1), x(g.gens.size(), 0);
    auto md = [p](long long v) { return ((v % p) + p) % p; };
    auto pw = [&](long long b, long long e) {
        long long r = 1;
        if (e < 0) {
            // inverse by Fermat
            long long inv = 1;
            for (long long i = 0; i < p - 2; ++i) inv = md(inv * b);
            b = inv;
            e = -e;
        }
        for (long long i = 0; i < e; ++i) r = md(r * b);
        return r;
    };
    long count = 0;
    std::function<void(std::size_t)> gen_loop;
    auto check = [&]() {
        for (const auto& terms : g.diff) {
            long long s = 0;
            for (const auto& term : terms) {
                long long v = md(term.coeff);
                for (int i = 0; i < c; ++i) v = md(v * pw(t[i], term.texp[i]));
                for (int l : term.word) v = md(v * x[l]);
                s = md(s + v);
            }
            if (s) return false;
        }
        return true;
    };
    gen_loop = [&](std::size_t i) {
        if (i == free_gens.size()) {
            if (check()) ++count;
            return;
        }
        for (long long v = 0; v < p; ++v) {
            x[free_gens[i]] = v;
            gen_loop(i + 1);
        }
        x[free_gens[i]] = 0;
    };
    std::function<void(int)> t_loop = [&](int i) {
        if (i == c) {
            gen_loop(0);
            return;
        }
        for (long long v = 1; v < p; ++v) {
            t[i] = v;
            t_loop(i + 1);
        }
    };
    t_loop(0);
    return count;
}

inline long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Random nearly plat front with `cusps` left cusps stacked as L1/L3/...
// and right cusps at position 1.
inline lch::FrontDiagram random_plat(std::mt19937& rng, int cusps, int crossings) {
    std::string s;
    for (int i = 0; i < cusps; ++i) s += "L " + std::to_string(2 * i + 1) + "\n";
    const int strands = 2 * cusps;
    for (int i = 0; i < crossings; ++i) s += "X " + std::to_string(1 + rng() % (strands - 1)) + "\n";
    for (int i = 0; i < cusps; ++i) s += "R 1\n";
    return lch::parse_front(s);
}

}  // namespace support
