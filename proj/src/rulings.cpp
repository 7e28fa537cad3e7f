#include "lch/rulings.hpp"

#include <algorithm>
#include <functional>

#include "lch/errors.hpp"

namespace lch {

std::string CrossingClass::tag() const {
    switch (kind) {
        case CrossingKind::Switch: return "S" + std::to_string(type);
        case CrossingKind::Return: return "R" + std::to_string(type);
        case CrossingKind::Departure: return "D";
        case CrossingKind::Pass: return "P";
    }
    return "?";
}

std::string NormalRuling::id() const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < switches.size(); ++i) {
        if (!switches[i]) continue;
        if (!first) s += ",";
        s += std::to_string(i + 1);
        first = false;
    }
    return s + "}";
}

namespace {

bool normal_at(const std::vector<int>& r, int k) {
    int a = r[k], b = r[k + 1];
    return (a < k && k + 1 < b) || (k + 1 < b && b < a) || (b < a && a < k);
}

std::vector<int> conjugate(const std::vector<int>& r, int k) {
    std::vector<int> out = r;
    auto sw = [k](int x) { return x == k ? k + 1 : x == k + 1 ? k : x; };
    for (std::size_t i = 0; i < r.size(); ++i) out[sw(static_cast<int>(i))] = sw(r[i]);
    return out;
}

std::vector<int> insert_pair(const std::vector<int>& r, int k) {
    std::vector<int> out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (static_cast<int>(i) == k) {
            out.push_back(k + 1);
            out.push_back(k);
        }
        int v = r[i];
        out.push_back(v >= k ? v + 2 : v);
    }
    if (static_cast<int>(r.size()) == k) {
        out.push_back(k + 1);
        out.push_back(k);
    }
    return out;
}

std::vector<int> remove_pair(const std::vector<int>& r, int k) {
    std::vector<int> out;
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (static_cast<int>(i) == k || static_cast<int>(i) == k + 1) continue;
        int v = r[i];
        out.push_back(v > k + 1 ? v - 2 : v);
    }
    return out;
}

int sort_key_cmp(const std::vector<bool>& a, const std::vector<bool>& b) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i] != b[i]) return a[i] ? 1 : -1;
    return 0;
}

}  // namespace

bool switch_allowed(const std::vector<int>& rho, int k) { return rho[k] != k + 1 && normal_at(rho, k); }

CrossingClass classify_crossing(const std::vector<int>& r, int k, bool is_switch) {
    CrossingClass c;
    int a = r[k], b = r[k + 1];
    if (is_switch) {
        c.kind = CrossingKind::Switch;
        if (a < k && k + 1 < b) c.type = 1;
        else if (b < a && a < k) c.type = 2;
        else if (k + 1 < b && b < a) c.type = 3;
        return c;
    }
    if (normal_at(r, k)) {
        c.kind = CrossingKind::Departure;
        return c;
    }
    if (b < k && k + 1 < a) {
        c.kind = CrossingKind::Return;
        c.type = 1;
    } else if (a < b && b < k) {
        c.kind = CrossingKind::Return;
        c.type = 2;
    } else if (k + 1 < a && a < b) {
        c.kind = CrossingKind::Return;
        c.type = 3;
    }
    return c;
}

std::vector<NormalRuling> enumerate_rulings(const FrontDiagram& d, const MaslovPotential& mu, int m) {
    check_grading(d, m);
    auto degs = crossing_degrees(d, mu);
    const int n = d.num_events();
    std::vector<NormalRuling> out;
    NormalRuling cur;
    cur.switches.assign(d.crossing_events.size(), false);
    cur.classes.resize(d.crossing_events.size());
    cur.involutions.push_back({});

    std::function<void(int)> rec = [&](int e) {
        const auto& r = cur.involutions.back();
        if (e == n) {
            out.push_back(cur);
            return;
        }
        const auto& ev = d.events[e];
        int k = ev.k0();
        if (ev.kind == EventKind::LeftCusp) {
            cur.involutions.push_back(insert_pair(r, k));
            rec(e + 1);
            cur.involutions.pop_back();
            return;
        }
        if (ev.kind == EventKind::RightCusp) {
            if (r[k] != k + 1) return;
            cur.involutions.push_back(remove_pair(r, k));
            rec(e + 1);
            cur.involutions.pop_back();
            return;
        }
        if (r[k] == k + 1) return;
        int ci = d.crossing_index(e);
        bool graded = degree_graded(degs[ci], m);
        // Non-switch branch first, so output comes out in ascending bitmask order after sorting.
        {
            auto before = r;
            cur.classes[ci] = classify_crossing(before, k, false);
            cur.classes[ci].graded = graded;
            cur.switches[ci] = false;
            cur.involutions.push_back(conjugate(before, k));
            rec(e + 1);
            cur.involutions.pop_back();
        }
        if (graded && switch_allowed(cur.involutions.back(), k)) {
            auto before = cur.involutions.back();
            cur.classes[ci] = classify_crossing(before, k, true);
            cur.classes[ci].graded = true;
            cur.switches[ci] = true;
            cur.involutions.push_back(before);
            rec(e + 1);
            cur.involutions.pop_back();
            cur.switches[ci] = false;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const NormalRuling& a, const NormalRuling& b) {
        return sort_key_cmp(a.switches, b.switches) < 0;
    });
    return out;
}

std::optional<NormalRuling> ruling_from_switches(const FrontDiagram& d, const MaslovPotential& mu, int m,
                                                 const std::vector<bool>& switches) {
    auto degs = crossing_degrees(d, mu);
    NormalRuling rho;
    rho.switches = switches;
    rho.classes.resize(d.crossing_events.size());
    rho.involutions.push_back({});
    for (int e = 0; e < d.num_events(); ++e) {
        const auto r = rho.involutions.back();
        const auto& ev = d.events[e];
        int k = ev.k0();
        if (ev.kind == EventKind::LeftCusp) {
            rho.involutions.push_back(insert_pair(r, k));
        } else if (ev.kind == EventKind::RightCusp) {
            if (r[k] != k + 1) return std::nullopt;
            rho.involutions.push_back(remove_pair(r, k));
        } else {
            if (r[k] == k + 1) return std::nullopt;
            int ci = d.crossing_index(e);
            bool graded = degree_graded(degs[ci], m);
            bool sw = switches[ci];
            if (sw && !(graded && switch_allowed(r, k))) return std::nullopt;
            rho.classes[ci] = classify_crossing(r, k, sw);
            rho.classes[ci].graded = graded;
            rho.involutions.push_back(sw ? r : conjugate(r, k));
        }
    }
    return rho;
}

RulingStats ruling_stats(const FrontDiagram& d, const NormalRuling& rho, int m) {
    RulingStats st;
    int switches = 0;
    for (std::size_t i = 0; i < rho.classes.size(); ++i) {
        const auto& c = rho.classes[i];
        if (c.kind == CrossingKind::Switch) {
            ++switches;
            st.switch_list.emplace_back(static_cast<int>(i), c.type);
        } else if (c.kind == CrossingKind::Return && c.graded) {
            ++st.returns_graded;
            st.return_list.emplace_back(static_cast<int>(i), c.type);
        } else if (c.kind == CrossingKind::Departure && c.graded) {
            ++st.departures_graded;
        }
    }
    int cusps = static_cast<int>(d.right_cusp_events.size());
    st.j = switches - cusps;
    st.r = st.returns_graded + (m == 1 ? cusps : 0);
    return st;
}

LaurentPoly ruling_polynomial(const FrontDiagram& d, const MaslovPotential& mu, int m) {
    LaurentPoly R;
    for (const auto& rho : enumerate_rulings(d, mu, m)) R.add_term(ruling_stats(d, rho, m).j, 1);
    return R;
}

long long disk_profile(const FrontDiagram& d, const MaslovPotential& mu, const NormalRuling& rho, int gap, int m) {
    const auto& r = rho.involutions[gap];
    std::vector<std::pair<int, int>> disks;
    for (std::size_t i = 0; i < r.size(); ++i)
        if (static_cast<int>(i) < r[i]) disks.emplace_back(static_cast<int>(i), r[i]);
    long long A = 0;
    for (std::size_t x = 0; x < disks.size(); ++x) {
        for (std::size_t y = x + 1; y < disks.size(); ++y) {
            auto [a1, a2] = disks[x];
            auto [b1, b2] = disks[y];
            long long Ma = mu.at(d, gap, a1), Mb = mu.at(d, gap, b1);
            if (a2 < b1) {
                if (same_mod(Ma, Mb + 1, m)) ++A;
            } else if (b2 < a2) {
                if (same_mod(Ma, Mb, m)) ++A;
            }
        }
    }
    return A;
}

}  // namespace lch
