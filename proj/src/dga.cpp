#include "lch/dga.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace lch {

namespace {

using TermKey = std::pair<std::vector<int>, std::vector<int>>;  // (word, texp)

void add_to(std::map<TermKey, long long>& acc, const std::vector<int>& word, const std::vector<int>& texp,
            long long c) {
    if (c == 0) return;
    auto& x = acc[{word, texp}];
    x += c;
    if (x == 0) acc.erase({word, texp});
}

std::vector<DgaTerm> to_terms(const std::map<TermKey, long long>& acc) {
    std::vector<DgaTerm> out;
    for (const auto& [key, c] : acc) out.push_back({c, key.second, key.first});
    return out;
}

int parity(long long deg) { return static_cast<int>(((deg % 2) + 2) % 2); }

struct Sweeper {
    const FrontDiagram& d;
    const std::vector<int>& gen_of_crossing;  // crossing index -> generator id
    std::map<TermKey, long long>* acc = nullptr;
    std::vector<int> texp0;

    // Sign of a negative corner at crossing event c: bottom corners are negative
    // quadrants of sign -1 when the understrand runs right, top corners when it runs left.
    int corner_sign(int c, bool bottom) const {
        int p = d.events[c].k0();
        bool under_right = d.strands[d.strand_at[c][p + 1]].rightward;
        return (bottom == under_right) ? -1 : 1;
    }

    void run(int e, int u, int v, int sign, std::vector<int>& up, std::vector<int>& low) {
        // Moving left across event e-1.
        int c = e - 1;
        if (c < 0) return;
        const auto& ev = d.events[c];
        int p = ev.k0();
        if (ev.kind == EventKind::LeftCusp) {
            if (u == p && v == p + 1) {
                std::vector<int> word = up;
                word.insert(word.end(), low.rbegin(), low.rend());
                add_to(*acc, word, texp0, sign);
                return;
            }
            auto hit = [p](int x) { return x == p || x == p + 1; };
            if (hit(u) || hit(v)) return;
            run(c, u > p + 1 ? u - 2 : u, v > p + 1 ? v - 2 : v, sign, up, low);
            return;
        }
        if (ev.kind == EventKind::RightCusp) {
            run(c, u >= p ? u + 2 : u, v >= p ? v + 2 : v, sign, up, low);
            return;
        }
        int letter = gen_of_crossing[d.crossing_index(c)];
        // Options for each path: (new position, corner?)
        std::vector<std::pair<int, bool>> uo, vo;
        if (u == p + 1) {
            uo = {{p, false}, {p + 1, true}};
        } else if (u == p) {
            uo = {{p + 1, false}};
        } else {
            uo = {{u, false}};
        }
        if (v == p) {
            vo = {{p + 1, false}, {p, true}};
        } else if (v == p + 1) {
            vo = {{p, false}};
        } else {
            vo = {{v, false}};
        }
        for (auto [u2, cu] : uo) {
            for (auto [v2, cv] : vo) {
                if (u2 >= v2) continue;
                int s = sign;
                if (cu) {
                    s *= corner_sign(c, true);
                    up.push_back(letter);
                }
                if (cv) {
                    s *= corner_sign(c, false);
                    low.push_back(letter);
                }
                run(c, u2, v2, s, up, low);
                if (cu) up.pop_back();
                if (cv) low.pop_back();
            }
        }
    }
};

}  // namespace

long long Dga::word_degree(const std::vector<int>& w) const {
    long long s = 0;
    for (int x : w) s += gens[x].degree;
    return reduce_mod(s, modulus);
}

Dga build_dga(const FrontDiagram& d, const MaslovPotential& mu) {
    Dga g;
    g.modulus = mu.modulus;
    g.num_t = d.num_components;
    auto degs = crossing_degrees(d, mu);
    std::vector<int> gen_of_crossing;
    for (std::size_t i = 0; i < d.crossing_events.size(); ++i) {
        gen_of_crossing.push_back(static_cast<int>(g.gens.size()));
        g.gens.push_back({"q" + std::to_string(i + 1), GenSource::Crossing, d.crossing_events[i], degs[i]});
    }
    for (std::size_t i = 0; i < d.right_cusp_events.size(); ++i)
        g.gens.push_back({"b" + std::to_string(i + 1), GenSource::RightCusp, d.right_cusp_events[i],
                          reduce_mod(1, g.modulus)});

    Sweeper sw{d, gen_of_crossing, nullptr, {}};
    sw.texp0.assign(g.num_t, 0);
    for (const auto& gen : g.gens) {
        std::map<TermKey, long long> acc;
        sw.acc = &acc;
        int e = gen.event;
        int k = d.events[e].k0();
        std::vector<int> up, low;
        if (gen.source == GenSource::Crossing) {
            bool over_left = !d.strands[d.strand_at[e][k]].rightward;
            bool under_left = !d.strands[d.strand_at[e][k + 1]].rightward;
            int eps = (over_left ? 1 : -1) * (under_left ? -1 : 1);
            sw.run(e, k, k + 1, eps, up, low);
        } else {
            sw.run(e, k, k + 1, 1, up, low);
            std::vector<int> texp(g.num_t, 0);
            if (d.is_marked(e)) texp[d.component_of_event(e)] = d.cusp_goes_down(e) ? 1 : -1;
            add_to(acc, {}, texp, 1);
        }
        g.diff.push_back(to_terms(acc));
    }
    return g;
}

namespace {

// d applied to a single word, Leibniz rule with Koszul signs.
void differentiate_word(const Dga& g, const std::vector<int>& w, const std::vector<int>& texp, long long coeff,
                        std::map<TermKey, long long>& acc) {
    int sgn = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (const auto& t : g.diff[w[i]]) {
            std::vector<int> word(w.begin(), w.begin() + i);
            word.insert(word.end(), t.word.begin(), t.word.end());
            word.insert(word.end(), w.begin() + i + 1, w.end());
            std::vector<int> te = texp;
            for (std::size_t j = 0; j < te.size(); ++j) te[j] += t.texp[j];
            add_to(acc, word, te, coeff * sgn * t.coeff);
        }
        if (parity(g.gens[w[i]].degree)) sgn = -sgn;
    }
}

}  // namespace

DSquaredReport d_squared_check(const Dga& g) {
    DSquaredReport rep;
    for (std::size_t x = 0; x < g.gens.size(); ++x) {
        std::map<TermKey, long long> acc;
        for (const auto& t : g.diff[x]) differentiate_word(g, t.word, t.texp, t.coeff, acc);
        for (const auto& t : to_terms(acc)) rep.nonzero.emplace_back(static_cast<int>(x), t);
    }
    return rep;
}

std::vector<std::pair<int, DgaTerm>> degree_check(const Dga& g) {
    std::vector<std::pair<int, DgaTerm>> bad;
    for (std::size_t x = 0; x < g.gens.size(); ++x)
        for (const auto& t : g.diff[x])
            if (g.word_degree(t.word) != reduce_mod(g.gens[x].degree - 1, g.modulus))
                bad.emplace_back(static_cast<int>(x), t);
    return bad;
}

Dga stabilize(const Dga& g, long long k) {
    Dga s = g;
    int idx = 1;
    for (const auto& gen : g.gens)
        if (gen.source == GenSource::Stabilization) ++idx;
    idx = (idx + 1) / 2;
    int e = static_cast<int>(s.gens.size());
    s.gens.push_back({"e" + std::to_string(idx), GenSource::Stabilization, -1, reduce_mod(k, g.modulus)});
    s.gens.push_back({"f" + std::to_string(idx), GenSource::Stabilization, -1, reduce_mod(k - 1, g.modulus)});
    s.diff.push_back({DgaTerm{1, std::vector<int>(g.num_t, 0), {e + 1}}});
    s.diff.push_back({});
    return s;
}

std::string term_to_string(const Dga& g, const DgaTerm& t) {
    std::ostringstream os;
    os << t.coeff;
    for (std::size_t i = 0; i < t.texp.size(); ++i)
        if (t.texp[i]) os << "*t" << (i + 1) << "^" << t.texp[i];
    for (int x : t.word) os << "*" << g.gens[x].name;
    return os.str();
}

}  // namespace lch
