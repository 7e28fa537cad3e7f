#include "lch/mcs.hpp"

#include <algorithm>
#include <functional>

#include "lch/aug.hpp"
#include "lch/errors.hpp"

namespace lch {

Mcs empty_mcs(const FrontDiagram& d) {
    Mcs c;
    c.gap_marks.assign(d.num_events() + 1, {});
    return c;
}

int mark_count(const Mcs& c) {
    int n = 0;
    for (const auto& g : c.gap_marks) n += static_cast<int>(g.size());
    return n;
}

void apply_handleslide(Complex& c, const Mark& h, const Fq& F) {
    const int n = c.size;
    const FqElem r = h.coeff;
    if (r == 0) return;
    for (int j = 0; j < n; ++j) {
        FqElem v = c.get(h.bottom, j);
        if (v) c.set(h.top, j, F.add(c.get(h.top, j), F.mul(r, v)));
    }
    for (int i = 0; i < n; ++i) {
        FqElem v = c.get(i, h.top);
        if (v) c.set(i, h.bottom, F.sub(c.get(i, h.bottom), F.mul(r, v)));
    }
}

bool d_squared_zero(const Complex& c, const Fq& F) {
    for (int i = 0; i < c.size; ++i)
        for (int j = 0; j < c.size; ++j) {
            FqElem s = 0;
            for (int k = 0; k < c.size; ++k) s = F.add(s, F.mul(c.get(i, k), c.get(k, j)));
            if (s) return false;
        }
    return true;
}

namespace {

void swap_basis(Complex& c, int k) {
    const int n = c.size;
    for (int j = 0; j < n; ++j) std::swap(c.a[k * n + j], c.a[(k + 1) * n + j]);
    for (int i = 0; i < n; ++i) std::swap(c.a[i * n + k], c.a[i * n + k + 1]);
}

Complex resized(const Complex& c, int new_size, const std::function<int(int)>& old_to_new) {
    Complex r;
    r.size = new_size;
    r.a.assign(static_cast<std::size_t>(new_size) * new_size, 0);
    for (int i = 0; i < c.size; ++i) {
        int ni = old_to_new(i);
        if (ni < 0) continue;
        for (int j = 0; j < c.size; ++j) {
            int nj = old_to_new(j);
            if (nj >= 0) r.set(ni, nj, c.get(i, j));
        }
    }
    return r;
}

std::string event_label(const FrontDiagram& d, int e) {
    const auto& ev = d.events[e];
    std::string k = ev.kind == EventKind::LeftCusp ? "left cusp" : ev.kind == EventKind::Crossing ? "crossing"
                                                                                                  : "right cusp";
    return k + " at event " + std::to_string(e + 1);
}

}  // namespace

Propagator::Propagator(const FrontDiagram& d, const MaslovPotential& mu, int m, const Fq& F,
                       std::vector<FqElem> marked_values)
    : dg_(d), mu_(mu), m_(m), F_(F), marked_(std::move(marked_values)) {
    derive_ = marked_.empty();
    if (derive_) marked_.assign(d.num_components, 0);
    d_.size = 0;
}

void Propagator::apply_mark(const Mark& h) {
    if (h.top < 0 || h.top >= h.bottom || h.bottom >= d_.size)
        throw ShapeError("handleslide endpoints out of range in gap " + std::to_string(gap_));
    if (!same_mod(mu_.at(dg_, gap_, h.top), mu_.at(dg_, gap_, h.bottom), m_))
        throw GradingError("handleslide in gap " + std::to_string(gap_) + " joins strands of different degree");
    apply_handleslide(d_, h, F_);
}

void Propagator::pass_event() {
    const int e = gap_;
    const auto& ev = dg_.events[e];
    const int k = ev.k0();
    if (ev.kind == EventKind::LeftCusp) {
        d_ = resized(d_, d_.size + 2, [k](int i) { return i < k ? i : i + 2; });
        d_.set(k, k + 1, 1);
    } else if (ev.kind == EventKind::Crossing) {
        if (d_.get(k, k + 1) != 0)
            throw ObstructionAt(e, e, "nonzero <d e_k, e_k+1> before " + event_label(dg_, e));
        swap_basis(d_, k);
    } else {
        FqElem c = d_.get(k, k + 1);
        if (dg_.is_marked(e)) {
            int comp = dg_.component_of_event(e);
            if (derive_) {
                if (c == 0) throw ObstructionAt(e, e, "zero coefficient before marked " + event_label(dg_, e));
                marked_[comp] = F_.neg(c);
            } else if (c != F_.neg(marked_[comp])) {
                throw ObstructionAt(e, e, "coefficient differs from -s before " + event_label(dg_, e));
            }
        } else if (c != F_.neg(1)) {
            throw ObstructionAt(e, e, "coefficient is not -1 before " + event_label(dg_, e));
        }
        const FqElem cinv = F_.inv(c);
        Complex q = d_;
        for (int i = 0; i < d_.size; ++i) {
            FqElem x = d_.get(i, k + 1);
            if (!x) continue;
            for (int j = 0; j < d_.size; ++j) {
                FqElem y = d_.get(k, j);
                if (y) q.set(i, j, F_.sub(q.get(i, j), F_.mul(F_.mul(x, y), cinv)));
            }
        }
        d_ = resized(q, d_.size - 2, [k](int i) { return i < k ? i : i <= k + 1 ? -1 : i - 2; });
    }
    ++gap_;
}

McsTrace build_complexes(const FrontDiagram& d, const MaslovPotential& mu, int m, const Mcs& c, const Fq& F) {
    if (static_cast<int>(c.gap_marks.size()) != d.num_events() + 1)
        throw ShapeError("mark list does not match the diagram");
    Propagator P(d, mu, m, F, c.marked_values);
    McsTrace tr;
    for (int g = 0; g <= d.num_events(); ++g) {
        int applied = 0;
        tr.slots.push_back({g, applied, P.complex()});
        for (const auto& h : c.gap_marks[g]) {
            P.apply_mark(h);
            tr.slots.push_back({g, ++applied, P.complex()});
        }
        if (g < d.num_events()) P.pass_event();
    }
    tr.marked_values = P.marked_values();
    return tr;
}

int alpha_sign(const FrontDiagram& d, int e) {
    int k = d.events[e].k0();
    return d.strands[d.strand_at[e][k + 1]].rightward ? -1 : 1;
}

int ell_sign(const FrontDiagram& d, int component) {
    return d.cusp_goes_down(d.marked_cusp[component]) ? 1 : -1;
}

namespace {

bool crossing_graded(const std::vector<long long>& degs, int ci, int m) { return degree_graded(degs[ci], m); }

}  // namespace

FormCheck validate_aform(const FrontDiagram& d, const MaslovPotential& mu, int m, const Mcs& c, const Fq& F) {
    if (static_cast<int>(c.gap_marks.size()) != d.num_events() + 1) return {false, "mark list size"};
    auto degs = crossing_degrees(d, mu);
    for (int g = 0; g < static_cast<int>(c.gap_marks.size()); ++g) {
        const auto& marks = c.gap_marks[g];
        if (marks.empty()) continue;
        bool allowed = false;
        if (g < d.num_events()) {
            const auto& ev = d.events[g];
            if (ev.kind == EventKind::Crossing && crossing_graded(degs, d.crossing_index(g), m)) allowed = true;
            if (ev.kind == EventKind::RightCusp && m == 1) allowed = true;
            if (allowed && (marks.size() != 1 || marks[0].top != ev.k0() || marks[0].bottom != ev.k0() + 1))
                return {false, "gap " + std::to_string(g) + " must hold one mark on the event's strands"};
        }
        if (!allowed) return {false, "unexpected mark in gap " + std::to_string(g)};
    }
    try {
        build_complexes(d, mu, m, c, F);
    } catch (const Error& e) {
        return {false, e.what()};
    }
    return {true, ""};
}

Augmentation theta(const FrontDiagram& d, const MaslovPotential& mu, int m, const Mcs& aform, const Fq& F) {
    auto chk = validate_aform(d, mu, m, aform, F);
    if (!chk.ok) throw NotAForm(chk.reason);
    auto tr = build_complexes(d, mu, m, aform, F);
    auto degs = crossing_degrees(d, mu);
    Augmentation a;
    for (int i = 0; i < d.num_components; ++i) a.t.push_back(F.pow(tr.marked_values[i], ell_sign(d, i)));
    for (std::size_t ci = 0; ci < d.crossing_events.size(); ++ci) {
        int e = d.crossing_events[ci];
        FqElem lam = aform.gap_marks[e].empty() ? 0 : aform.gap_marks[e][0].coeff;
        a.gen.push_back(crossing_graded(degs, static_cast<int>(ci), m) ? F.mul(F.from_int(alpha_sign(d, e)), lam) : 0);
    }
    for (int e : d.right_cusp_events) {
        FqElem lam = aform.gap_marks[e].empty() ? 0 : aform.gap_marks[e][0].coeff;
        a.gen.push_back(m == 1 ? lam : 0);
    }
    return a;
}

Mcs theta_inv(const FrontDiagram& d, const MaslovPotential& mu, int m, const Augmentation& aug, const Fq& F) {
    const std::size_t nx = d.crossing_events.size();
    if (aug.t.size() != static_cast<std::size_t>(d.num_components) || aug.gen.size() != nx + d.right_cusp_events.size())
        throw NotAugmentation("augmentation has the wrong shape");
    auto degs = crossing_degrees(d, mu);
    Mcs c = empty_mcs(d);
    c.form = McsForm::A;
    for (int i = 0; i < d.num_components; ++i) {
        if (aug.t[i] == 0) throw NotAugmentation("t value is zero");
        c.marked_values.push_back(F.pow(aug.t[i], ell_sign(d, i)));
    }
    for (std::size_t ci = 0; ci < nx; ++ci) {
        int e = d.crossing_events[ci];
        FqElem v = aug.gen[ci];
        if (!crossing_graded(degs, static_cast<int>(ci), m)) {
            if (v) throw NotAugmentation("nonzero value on a generator of nonzero degree");
            continue;
        }
        FqElem lam = F.mul(F.from_int(alpha_sign(d, e)), v);
        if (lam) c.gap_marks[e].push_back({d.events[e].k0(), d.events[e].k0() + 1, lam});
    }
    for (std::size_t i = 0; i < d.right_cusp_events.size(); ++i) {
        int e = d.right_cusp_events[i];
        FqElem v = aug.gen[nx + i];
        if (m != 1) {
            if (v) throw NotAugmentation("nonzero value on a right cusp generator");
            continue;
        }
        if (v) c.gap_marks[e].push_back({d.events[e].k0(), d.events[e].k0() + 1, v});
    }
    try {
        build_complexes(d, mu, m, c, F);
    } catch (const ObstructionAt& e) {
        throw NotAugmentation(std::string("not an augmentation: ") + e.what());
    }
    return c;
}

namespace {

struct NodeBudget {
    long long left;
    void spend() {
        if (--left < 0) throw ScaleError("A-form search visited more nodes than the cap allows");
    }
};

template <class Leaf>
void aform_dfs(const FrontDiagram& d, const std::vector<long long>& degs, int m, const Fq& F, Propagator P,
               Mcs* cur, NodeBudget& budget, Leaf&& leaf) {
    const int n = d.num_events();
    while (P.gap() < n) {
        const int e = P.gap();
        const auto& ev = d.events[e];
        const int k = ev.k0();
        bool branch = (ev.kind == EventKind::Crossing && crossing_graded(degs, d.crossing_index(e), m)) ||
                      (ev.kind == EventKind::RightCusp && m == 1);
        if (!branch) {
            try {
                P.pass_event();
            } catch (const ObstructionAt&) {
                return;
            }
            continue;
        }
        if (ev.kind == EventKind::Crossing && P.complex().get(k, k + 1) != 0) return;
        for (int v = 0; v < F.q(); ++v) {
            budget.spend();
            Propagator P2 = P;
            Mark h{k, k + 1, static_cast<FqElem>(v)};
            if (v) P2.apply_mark(h);
            if (cur && v) cur->gap_marks[e].push_back(h);
            bool ok = true;
            try {
                P2.pass_event();
            } catch (const ObstructionAt&) {
                ok = false;
            }
            if (ok) aform_dfs(d, degs, m, F, P2, cur, budget, leaf);
            if (cur && v) cur->gap_marks[e].pop_back();
        }
        return;
    }
    leaf(P);
}

}  // namespace

std::vector<Mcs> enumerate_aforms(const FrontDiagram& d, const MaslovPotential& mu, int m, const Fq& F, long long cap) {
    check_grading(d, m);
    auto degs = crossing_degrees(d, mu);
    NodeBudget budget{cap};
    std::vector<Mcs> out;
    Mcs cur = empty_mcs(d);
    cur.form = McsForm::A;
    aform_dfs(d, degs, m, F, Propagator(d, mu, m, F, {}), &cur, budget, [&](const Propagator& P) {
        Mcs c = cur;
        c.marked_values = P.marked_values();
        out.push_back(std::move(c));
    });
    return out;
}

BigInt enumerate_aform_count(const FrontDiagram& d, const MaslovPotential& mu, int m, const Fq& F, long long cap) {
    check_grading(d, m);
    auto degs = crossing_degrees(d, mu);
    NodeBudget budget{cap};
    long long n = 0;
    aform_dfs(d, degs, m, F, Propagator(d, mu, m, F, {}), nullptr, budget, [&](const Propagator&) { ++n; });
    return BigInt(static_cast<long>(n));
}

FqElem half_disk_sum(const FrontDiagram& d, int gap, int i, int j, const std::vector<FqElem>& lambda, const Fq& F) {
    std::function<FqElem(int, int, int)> rec = [&](int g, int u, int v) -> FqElem {
        if (g == 0) return 0;
        const int c = g - 1;
        const auto& ev = d.events[c];
        const int p = ev.k0();
        if (ev.kind == EventKind::LeftCusp) {
            if (u == p && v == p + 1) return 1;
            if (u == p || u == p + 1 || v == p || v == p + 1) return 0;
            return rec(c, u > p + 1 ? u - 2 : u, v > p + 1 ? v - 2 : v);
        }
        if (ev.kind == EventKind::RightCusp) return rec(c, u >= p ? u + 2 : u, v >= p ? v + 2 : v);
        const FqElem lam = lambda[d.crossing_index(c)];
        FqElem total = 0;
        // Upper boundary on the lower crossing strand: pass, or turn at the bottom quadrant (+lambda).
        // Lower boundary on the upper crossing strand: pass, or turn at the top quadrant (-lambda).
        if (u == p && v == p + 1) return 0;
        int u_pass = u == p ? p + 1 : u == p + 1 ? p : u;
        int v_pass = v == p ? p + 1 : v == p + 1 ? p : v;
        if (u_pass < v_pass) total = F.add(total, rec(c, u_pass, v_pass));
        if (lam) {
            if (u == p + 1 && p + 1 < v_pass) total = F.add(total, F.mul(lam, rec(c, p + 1, v_pass)));
            if (v == p && u_pass < p) total = F.sub(total, F.mul(lam, rec(c, u_pass, p)));
        }
        return total;
    };
    return rec(gap, i, j);
}

// ---------------------------------------------------------------------------
// Ruling graphs and disk equations

RulingGraph ruling_graph(const FrontDiagram& d, const NormalRuling& rho) {
    RulingGraph g;
    g.num_t = d.num_components;
    std::vector<int> disk_at;  // position -> disk id
    for (int e = 0; e < d.num_events(); ++e) {
        const auto& ev = d.events[e];
        const int k = ev.k0();
        if (ev.kind == EventKind::LeftCusp) {
            int id = static_cast<int>(g.labels.size());
            g.labels.push_back({-1, std::vector<int>(g.num_t, 0)});
            disk_at.insert(disk_at.begin() + k, {id, id});
        } else if (ev.kind == EventKind::Crossing) {
            int ci = d.crossing_index(e);
            const auto& cls = rho.classes[ci];
            if (cls.kind == CrossingKind::Switch) {
                int dk = disk_at[k], dk1 = disk_at[k + 1];
                if (cls.type == 1) g.edges.push_back({dk, dk1, EdgeType::D});
                else if (cls.type == 2) g.edges.push_back({dk, dk1, EdgeType::N});
                else g.edges.push_back({dk1, dk, EdgeType::N});
            } else {
                std::swap(disk_at[k], disk_at[k + 1]);
            }
        } else {
            int id = disk_at[k];
            if (d.is_marked(e)) g.labels[id].texp[d.component_of_event(e)] = 1;
            disk_at.erase(disk_at.begin() + k, disk_at.begin() + k + 2);
        }
    }
    return g;
}

std::vector<DiskEquation> disk_equations(const RulingGraph& g) {
    std::vector<DiskEquation> eqs(g.labels.size());
    for (std::size_t v = 0; v < g.labels.size(); ++v) eqs[v].rhs = g.labels[v];
    for (std::size_t j = 0; j < g.edges.size(); ++j) {
        const auto& e = g.edges[j];
        if (e.from == e.to) {
            eqs[e.from].factors.emplace_back(static_cast<int>(j), FactorKind::NegX2);
            continue;
        }
        eqs[e.from].factors.emplace_back(static_cast<int>(j), FactorKind::NegX);
        eqs[e.to].factors.emplace_back(static_cast<int>(j), e.type == EdgeType::D ? FactorKind::X : FactorKind::XInv);
    }
    return eqs;
}

namespace {

FqElem label_value(const GraphLabel& l, const std::vector<FqElem>& t, const Fq& F) {
    FqElem v = F.from_int(l.sign);
    for (std::size_t i = 0; i < l.texp.size(); ++i)
        if (l.texp[i]) v = F.mul(v, F.pow(t[i], l.texp[i]));
    return v;
}

FqElem factor_value(FactorKind k, FqElem x, const Fq& F) {
    switch (k) {
        case FactorKind::NegX: return F.neg(x);
        case FactorKind::X: return x;
        case FactorKind::XInv: return F.inv(x);
        case FactorKind::NegX2: return F.neg(F.mul(x, x));
    }
    return 0;
}

// Odometer over (F^x)^n.
bool next_units(std::vector<FqElem>& v, const Fq& F) {
    for (int i = static_cast<int>(v.size()) - 1; i >= 0; --i) {
        if (++v[i] < static_cast<FqElem>(F.q())) return true;
        v[i] = 1;
    }
    return false;
}

}  // namespace

bool solves(const RulingGraph& g, const std::vector<FqElem>& t, const std::vector<FqElem>& x, const Fq& F) {
    for (const auto& eq : disk_equations(g)) {
        FqElem lhs = 1;
        for (auto [j, kind] : eq.factors) lhs = F.mul(lhs, factor_value(kind, x[j], F));
        if (lhs != label_value(eq.rhs, t, F)) return false;
    }
    return true;
}

BigInt count_solutions(const RulingGraph& g, const Fq& F) {
    std::vector<FqElem> t(g.num_t, 1), x(g.edges.size(), 1);
    long long n = 0;
    const auto eqs = disk_equations(g);
    do {
        do {
            bool ok = true;
            for (const auto& eq : eqs) {
                FqElem lhs = 1;
                for (auto [j, kind] : eq.factors) lhs = F.mul(lhs, factor_value(kind, x[j], F));
                if (lhs != label_value(eq.rhs, t, F)) {
                    ok = false;
                    break;
                }
            }
            if (ok) ++n;
        } while (next_units(x, F));
    } while (next_units(t, F));
    return BigInt(static_cast<long>(n));
}

RulingGraph contract(const RulingGraph& g, int edge, int* removed) {
    const GraphEdge ek = g.edges.at(edge);
    if (ek.from == ek.to) throw LoopEdge("cannot contract a loop edge");
    const int vi = ek.from, vj = ek.to;
    auto between = [&](const GraphEdge& e) {
        return (e.from == vi && e.to == vj) || (e.from == vj && e.to == vi);
    };
    std::vector<GraphEdge> kept;
    int s = 0;
    for (const auto& e : g.edges) {
        if (between(e) && e.type == ek.type) {
            ++s;
            continue;
        }
        kept.push_back(e);
    }
    if (removed) *removed = s;
    const GraphLabel& wi = g.labels[vi];
    const GraphLabel& wj = g.labels[vj];
    GraphLabel merged;
    merged.sign = (s % 2 ? -1 : 1) * wi.sign * wj.sign;
    merged.texp.resize(g.num_t);
    for (int i = 0; i < g.num_t; ++i)
        merged.texp[i] = (ek.type == EdgeType::N ? wi.texp[i] : -wi.texp[i]) + wj.texp[i];
    if (ek.type == EdgeType::D) {
        for (auto& e : kept) {
            bool one_end = (e.from == vi) != (e.to == vi);
            if (one_end) e.type = e.type == EdgeType::D ? EdgeType::N : EdgeType::D;
        }
    }
    RulingGraph r;
    r.num_t = g.num_t;
    std::vector<int> remap(g.labels.size(), -1);
    for (int v = 0; v < static_cast<int>(g.labels.size()); ++v) {
        if (v == vi || v == vj) continue;
        remap[v] = static_cast<int>(r.labels.size());
        r.labels.push_back(g.labels[v]);
    }
    const int mv = static_cast<int>(r.labels.size());
    remap[vi] = remap[vj] = mv;
    r.labels.push_back(merged);
    for (auto e : kept) {
        e.from = remap[e.from];
        e.to = remap[e.to];
        r.edges.push_back(e);
    }
    return r;
}

// ---------------------------------------------------------------------------
// SR-form construction and parsing

namespace {

struct SrParams {
    std::vector<FqElem> r_cross;  // per crossing; 0 where no left mark
    std::vector<FqElem> r_cusp;   // per right cusp (m = 1)
    std::vector<FqElem> marked;
};

struct SrLayout {
    Mcs mcs;
    std::vector<std::vector<Mark>> right_marks;  // per crossing
    std::vector<int> right_count;                 // per gap: marks owned by the previous crossing
};

bool graded_cluster(const CrossingClass& c) {
    return c.kind == CrossingKind::Switch || (c.kind == CrossingKind::Return && c.graded);
}

// Disk coefficients a (upper/outer) and b (lower/inner) read at a cluster's left edge.
std::pair<FqElem, FqElem> cluster_ab(const Complex& D, const std::vector<int>& rho, int k) {
    std::vector<int> A = {k, k + 1, rho[k], rho[k + 1]};
    int alpha = *std::min_element(A.begin(), A.end());
    int beta = 1 << 30;
    for (int x : A)
        if (x != alpha && x != rho[alpha]) beta = std::min(beta, x);
    FqElem a = D.get(alpha, rho[alpha]);
    FqElem b = D.get(beta, rho[beta]);
    if (a == 0 || b == 0) throw Error("Internal", "ruling disk coefficient vanished at a cluster");
    return {a, b};
}

std::pair<int, int> companions(const std::vector<int>& rho, int k) {
    int c1 = rho[k], c2 = rho[k + 1];
    return {std::min(c1, c2), std::max(c1, c2)};
}

// Marks to the right of a graded switch or return with left coefficient r.
std::vector<Mark> right_cluster(const CrossingClass& cls, const std::vector<int>& rho, int k, FqElem r, FqElem a,
                                FqElem b, const Fq& F) {
    std::vector<Mark> out;
    auto [c1, c2] = companions(rho, k);
    if (cls.kind == CrossingKind::Switch) {
        FqElem rinv = F.inv(r);
        out.push_back({k, k + 1, F.neg(rinv)});
        if (cls.type != 1) out.push_back({c1, c2, F.mul(F.mul(a, rinv), F.inv(b))});
    } else if (cls.kind == CrossingKind::Return) {
        if (cls.type == 2) out.push_back({c1, c2, F.mul(F.mul(a, r), F.inv(b))});
        if (cls.type == 3) out.push_back({c1, c2, F.mul(F.mul(F.inv(a), r), b)});
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Mark& h) { return h.coeff == 0; }), out.end());
    return out;
}

SrLayout sr_build(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho,
                  const SrParams& prm, const Fq& F) {
    SrLayout L;
    L.mcs = empty_mcs(d);
    L.mcs.form = McsForm::SR;
    L.mcs.marked_values = prm.marked;
    L.right_marks.assign(d.crossing_events.size(), {});
    L.right_count.assign(d.num_events() + 1, 0);
    Propagator P(d, mu, m, F, prm.marked);
    for (int e = 0; e < d.num_events(); ++e) {
        const auto& ev = d.events[e];
        const int k = ev.k0();
        if (ev.kind == EventKind::Crossing) {
            const int ci = d.crossing_index(e);
            const auto& cls = rho.classes[ci];
            if (graded_cluster(cls)) {
                FqElem r = prm.r_cross[ci];
                if (cls.kind == CrossingKind::Switch && r == 0) throw NotSRForm("switch coefficient is zero");
                auto [a, b] = cluster_ab(P.complex(), rho.involutions[e], k);
                if (r) {
                    Mark h{k, k + 1, r};
                    L.mcs.gap_marks[e].push_back(h);
                    P.apply_mark(h);
                }
                P.pass_event();
                auto rm = right_cluster(cls, rho.involutions[e], k, r, a, b, F);
                for (const auto& h : rm) {
                    L.mcs.gap_marks[e + 1].push_back(h);
                    P.apply_mark(h);
                }
                L.right_marks[ci] = rm;
                L.right_count[e + 1] = static_cast<int>(rm.size());
                continue;
            }
        } else if (ev.kind == EventKind::RightCusp && m == 1) {
            FqElem z = prm.r_cusp[d.right_cusp_index(e)];
            if (z) {
                Mark h{k, k + 1, z};
                L.mcs.gap_marks[e].push_back(h);
                P.apply_mark(h);
            }
        }
        P.pass_event();
    }
    return L;
}

std::optional<SrParams> sr_parse(const FrontDiagram& d, int m, const NormalRuling& rho, const Mcs& c) {
    SrParams prm;
    prm.r_cross.assign(d.crossing_events.size(), 0);
    prm.r_cusp.assign(d.right_cusp_events.size(), 0);
    prm.marked = c.marked_values;
    if (static_cast<int>(c.gap_marks.size()) != d.num_events() + 1) return std::nullopt;
    for (int g = 0; g <= d.num_events(); ++g) {
        const auto& marks = c.gap_marks[g];
        std::size_t idx = 0;
        if (g > 0 && d.events[g - 1].kind == EventKind::Crossing) {
            int ci = d.crossing_index(g - 1);
            const auto& cls = rho.classes[ci];
            int expect = 0;
            if (cls.kind == CrossingKind::Switch) expect = cls.type == 1 ? 1 : 2;
            else if (cls.kind == CrossingKind::Return && cls.graded && cls.type != 1 && prm.r_cross[ci] != 0)
                expect = 1;
            idx = static_cast<std::size_t>(expect);
            if (idx > marks.size()) return std::nullopt;
        }
        if (g < d.num_events()) {
            const auto& ev = d.events[g];
            const int k = ev.k0();
            bool optional_left = false, required_left = false;
            if (ev.kind == EventKind::Crossing) {
                const auto& cls = rho.classes[d.crossing_index(g)];
                required_left = cls.kind == CrossingKind::Switch;
                optional_left = cls.kind == CrossingKind::Return && cls.graded;
            } else if (ev.kind == EventKind::RightCusp && m == 1) {
                optional_left = true;
            }
            if (required_left || optional_left) {
                if (idx < marks.size() && marks[idx].top == k && marks[idx].bottom == k + 1) {
                    FqElem r = marks[idx].coeff;
                    if (ev.kind == EventKind::Crossing) prm.r_cross[d.crossing_index(g)] = r;
                    else prm.r_cusp[d.right_cusp_index(g)] = r;
                    ++idx;
                } else if (required_left) {
                    return std::nullopt;
                }
            }
        }
        if (idx != marks.size()) return std::nullopt;
    }
    return prm;
}

bool is_standard(const Complex& D, const std::vector<int>& rho) {
    for (int i = 0; i < D.size; ++i)
        for (int j = i + 1; j < D.size; ++j)
            if ((D.get(i, j) != 0) != (rho[i] == j)) return false;
    return true;
}

}  // namespace

FormCheck validate_srform(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho,
                          const Mcs& c, const Fq& F) {
    Mcs cc = c;
    if (cc.marked_values.empty()) {
        try {
            cc.marked_values = build_complexes(d, mu, m, c, F).marked_values;
        } catch (const Error& e) {
            return {false, e.what()};
        }
    }
    auto prm = sr_parse(d, m, rho, cc);
    if (!prm) return {false, "marks do not follow the SR pattern of the ruling"};
    try {
        auto L = sr_build(d, mu, m, rho, *prm, F);
        if (L.mcs.gap_marks != cc.gap_marks) return {false, "follower marks differ from the SR pattern"};
    } catch (const Error& e) {
        return {false, e.what()};
    }
    return {true, ""};
}

FormCheck validate_form(const FrontDiagram& d, const MaslovPotential& mu, int m, const Mcs& c, const Fq& F,
                        McsForm form, const NormalRuling* rho) {
    switch (form) {
        case McsForm::A: return validate_aform(d, mu, m, c, F);
        case McsForm::SR:
            if (!rho) return {false, "SR-form check needs a ruling"};
            return validate_srform(d, mu, m, *rho, c, F);
        case McsForm::Generic:
            try {
                build_complexes(d, mu, m, c, F);
            } catch (const Error& e) {
                return {false, e.what()};
            }
            return {true, ""};
    }
    return {false, "unknown form"};
}

std::vector<ZPoint> z_rho_points(const FrontDiagram& d, const MaslovPotential& mu, const NormalRuling& rho, int m,
                                 const Fq& F) {
    (void)mu;
    auto g = ruling_graph(d, rho);
    const int r = ruling_stats(d, rho, m).r;
    std::vector<ZPoint> out;
    std::vector<FqElem> t(g.num_t, 1), x(g.edges.size(), 1);
    do {
        do {
            if (!solves(g, t, x, F)) continue;
            std::vector<FqElem> z(r, 0);
            while (true) {
                out.push_back({t, x, z});
                int i = r - 1;
                for (; i >= 0; --i) {
                    if (++z[i] < static_cast<FqElem>(F.q())) break;
                    z[i] = 0;
                }
                if (i < 0) break;
            }
        } while (next_units(x, F));
    } while (next_units(t, F));
    return out;
}

Mcs lambda_sr(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho, const ZPoint& p,
              const Fq& F) {
    SrParams prm;
    prm.r_cross.assign(d.crossing_events.size(), 0);
    prm.r_cusp.assign(d.right_cusp_events.size(), 0);
    prm.marked = p.t;
    std::size_t xi = 0, zi = 0;
    for (std::size_t ci = 0; ci < d.crossing_events.size(); ++ci) {
        const auto& cls = rho.classes[ci];
        if (cls.kind == CrossingKind::Switch) {
            if (xi >= p.x.size()) throw NotASolution("too few switch coordinates");
            FqElem x = p.x[xi++];
            prm.r_cross[ci] = cls.type == 3 ? F.neg(x) : x;
        } else if (cls.kind == CrossingKind::Return && cls.graded) {
            if (zi >= p.z.size()) throw NotASolution("too few return coordinates");
            prm.r_cross[ci] = p.z[zi++];
        }
    }
    if (m == 1)
        for (std::size_t i = 0; i < d.right_cusp_events.size(); ++i) {
            if (zi >= p.z.size()) throw NotASolution("too few cusp coordinates");
            prm.r_cusp[i] = p.z[zi++];
        }
    if (xi != p.x.size() || zi != p.z.size() || p.t.size() != static_cast<std::size_t>(d.num_components))
        throw NotASolution("point has the wrong shape");
    try {
        return sr_build(d, mu, m, rho, prm, F).mcs;
    } catch (const ObstructionAt& e) {
        throw NotASolution(std::string("point does not solve the disk equations: ") + e.what());
    }
}

ZPoint sr_point(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho, const Mcs& sr,
                const Fq& F) {
    auto chk = validate_srform(d, mu, m, rho, sr, F);
    if (!chk.ok) throw NotSRForm(chk.reason);
    Mcs cc = sr;
    if (cc.marked_values.empty()) cc.marked_values = build_complexes(d, mu, m, sr, F).marked_values;
    auto prm = *sr_parse(d, m, rho, cc);
    ZPoint p;
    p.t = prm.marked;
    for (std::size_t ci = 0; ci < d.crossing_events.size(); ++ci) {
        const auto& cls = rho.classes[ci];
        if (cls.kind == CrossingKind::Switch) p.x.push_back(cls.type == 3 ? F.neg(prm.r_cross[ci]) : prm.r_cross[ci]);
        else if (cls.kind == CrossingKind::Return && cls.graded) p.z.push_back(prm.r_cross[ci]);
    }
    if (m == 1)
        for (auto z : prm.r_cusp) p.z.push_back(z);
    return p;
}

bool sr_standard_between_clusters(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho,
                                  const Mcs& sr, const Fq& F) {
    auto chk = validate_srform(d, mu, m, rho, sr, F);
    if (!chk.ok) return false;
    Mcs cc = sr;
    if (cc.marked_values.empty()) cc.marked_values = build_complexes(d, mu, m, sr, F).marked_values;
    auto prm = *sr_parse(d, m, rho, cc);
    auto L = sr_build(d, mu, m, rho, prm, F);
    Propagator P(d, mu, m, F, cc.marked_values);
    for (int g = 0; g <= d.num_events(); ++g) {
        const auto& marks = cc.gap_marks[g];
        int owned = L.right_count[g];
        for (int i = 0; i < owned; ++i) P.apply_mark(marks[i]);
        if (!is_standard(P.complex(), rho.involutions[g])) return false;
        for (std::size_t i = owned; i < marks.size(); ++i) P.apply_mark(marks[i]);
        if (g < d.num_events()) P.pass_event();
    }
    return true;
}

// ---------------------------------------------------------------------------
// Handleslide moves

std::vector<std::vector<FqElem>> tangle_matrix(const std::vector<Mark>& tangle, int size, const Fq& F) {
    std::vector<std::vector<FqElem>> M(size, std::vector<FqElem>(size, 0));
    for (int i = 0; i < size; ++i) M[i][i] = 1;
    for (const auto& h : tangle) {
        // M <- M (I - r E_{top,bottom}): column bottom -= r column top
        for (int i = 0; i < size; ++i) M[i][h.bottom] = F.sub(M[i][h.bottom], F.mul(h.coeff, M[i][h.top]));
    }
    return M;
}

void move_type0_insert(std::vector<Mark>& t, std::size_t at, int top, int bottom) {
    t.insert(t.begin() + static_cast<long>(at), Mark{top, bottom, 0});
}

void move_type0_remove(std::vector<Mark>& t, std::size_t at) {
    if (t.at(at).coeff != 0) throw Error("BadMove", "type 0 removes trivial marks only");
    t.erase(t.begin() + static_cast<long>(at));
}

Mark move_type1_slide(const Mark& h, int k) {
    if (h.top == k && h.bottom == k + 1) throw Error("BadMove", "mark joins the crossing strands");
    auto sw = [k](int x) { return x == k ? k + 1 : x == k + 1 ? k : x; };
    Mark r{sw(h.top), sw(h.bottom), h.coeff};
    if (r.top > r.bottom) std::swap(r.top, r.bottom);
    return r;
}

void move_type2_swap(std::vector<Mark>& t, std::size_t i, const Fq& F) {
    const Mark h1 = t.at(i), h2 = t.at(i + 1);
    std::vector<Mark> mid;
    if (h1.bottom == h2.top) mid.push_back({h1.top, h2.bottom, F.neg(F.mul(h1.coeff, h2.coeff))});
    else if (h1.top == h2.bottom) mid.push_back({h2.top, h1.bottom, F.mul(h1.coeff, h2.coeff)});
    std::vector<Mark> repl = {h2};
    repl.insert(repl.end(), mid.begin(), mid.end());
    repl.push_back(h1);
    t.erase(t.begin() + static_cast<long>(i), t.begin() + static_cast<long>(i + 2));
    t.insert(t.begin() + static_cast<long>(i), repl.begin(), repl.end());
}

void move_type3_merge(std::vector<Mark>& t, std::size_t i, const Fq& F) {
    const Mark h1 = t.at(i), h2 = t.at(i + 1);
    if (h1.top != h2.top || h1.bottom != h2.bottom) throw Error("BadMove", "merge needs equal endpoints");
    t[i].coeff = F.add(h1.coeff, h2.coeff);
    t.erase(t.begin() + static_cast<long>(i + 1));
}

void move_type4_insert_pair(std::vector<Mark>& t, std::size_t at, int top, int bottom, FqElem r, const Fq& F) {
    t.insert(t.begin() + static_cast<long>(at), {Mark{top, bottom, r}, Mark{top, bottom, F.neg(r)}});
}

HandleslideCollection::HandleslideCollection(int size, bool transposed, const Fq& F)
    : n_(size), transposed_(transposed), F_(F) {
    M_.assign(static_cast<std::size_t>(n_) * n_, 0);
    Minv_ = M_;
    for (int i = 0; i < n_; ++i) m(i, i) = mi(i, i) = 1;
}

void HandleslideCollection::incorporate_right(const Mark& h) {
    // M <- M P_h, Minv <- P_h^{-1} Minv, with P_h = I - r E_{tb}
    for (int i = 0; i < n_; ++i) m(i, h.bottom) = F_.sub(m(i, h.bottom), F_.mul(h.coeff, m(i, h.top)));
    for (int j = 0; j < n_; ++j) mi(h.top, j) = F_.add(mi(h.top, j), F_.mul(h.coeff, mi(h.bottom, j)));
}

void HandleslideCollection::incorporate_left(const Mark& h) {
    // M <- P_h M, Minv <- Minv P_h^{-1}
    for (int j = 0; j < n_; ++j) m(h.top, j) = F_.sub(m(h.top, j), F_.mul(h.coeff, m(h.bottom, j)));
    for (int i = 0; i < n_; ++i) mi(i, h.bottom) = F_.add(mi(i, h.bottom), F_.mul(h.coeff, mi(i, h.top)));
}

FqElem HandleslideCollection::remove_left(int k) {
    FqElem r = coeff(k, k + 1);
    // M = P_h' M3, so M3 = P_h'^{-1} M and M3^{-1} = Minv P_h'
    for (int j = 0; j < n_; ++j) m(k, j) = F_.add(m(k, j), F_.mul(r, m(k + 1, j)));
    for (int i = 0; i < n_; ++i) mi(i, k + 1) = F_.sub(mi(i, k + 1), F_.mul(r, mi(i, k)));
    return r;
}

void HandleslideCollection::pass_crossing(int k) {
    if (coeff(k, k + 1) != 0) throw Error("BadMove", "collection holds a mark on the crossing strands");
    for (auto* A : {&M_, &Minv_}) {
        auto& a = *A;
        for (int j = 0; j < n_; ++j) std::swap(a[k * n_ + j], a[(k + 1) * n_ + j]);
        for (int i = 0; i < n_; ++i) std::swap(a[i * n_ + k], a[i * n_ + k + 1]);
    }
}

FqElem HandleslideCollection::coeff(int top, int bottom) const {
    const std::size_t idx = static_cast<std::size_t>(top) * n_ + bottom;
    return transposed_ ? Minv_[idx] : F_.neg(M_[idx]);
}

std::vector<Mark> HandleslideCollection::marks() const {
    std::vector<Mark> out;
    for (int t = n_ - 1; t >= 0; --t)
        for (int b = t + 1; b < n_; ++b) {
            FqElem c = coeff(t, b);
            if (c) out.push_back({t, b, c});
        }
    if (transposed_) std::reverse(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Phi and Psi

namespace {

// Positions, in the gap after the last crossing, of the two strands meeting at each right cusp.
std::vector<std::pair<int, int>> cusp_pairs(const FrontDiagram& d) {
    const int g = d.last_crossing_gap();
    std::vector<std::pair<int, int>> out;
    for (int e : d.right_cusp_events) {
        int k = d.events[e].k0();
        int sa = d.strand_at[e][k], sb = d.strand_at[e][k + 1];
        const auto& row = d.strand_at[g];
        int pa = static_cast<int>(std::find(row.begin(), row.end(), sa) - row.begin());
        int pb = static_cast<int>(std::find(row.begin(), row.end(), sb) - row.begin());
        out.emplace_back(std::min(pa, pb), std::max(pa, pb));
    }
    return out;
}

}  // namespace

PhiResult phi(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho, const Mcs& sr,
              const Fq& F) {
    auto chk = validate_srform(d, mu, m, rho, sr, F);
    if (!chk.ok) throw NotSRForm(chk.reason);
    Mcs cc = sr;
    if (cc.marked_values.empty()) cc.marked_values = build_complexes(d, mu, m, sr, F).marked_values;
    const auto prm = *sr_parse(d, m, rho, cc);
    const auto L = sr_build(d, mu, m, rho, prm, F);
    auto degs = crossing_degrees(d, mu);

    PhiResult res;
    res.aform = empty_mcs(d);
    res.aform.form = McsForm::A;
    res.aform.marked_values = cc.marked_values;
    HandleslideCollection V(d.gap_size[d.first_crossing_gap()], true, F);
    for (std::size_t ci = 0; ci < d.crossing_events.size(); ++ci) {
        const int e = d.crossing_events[ci];
        const int k = d.events[e].k0();
        if (!degree_graded(degs[ci], m)) {
            V.pass_crossing(k);
            res.trace.push_back({static_cast<int>(ci), "type1", V.marks()});
            continue;
        }
        const FqElem r = prm.r_cross[ci];
        if (r == 0) res.trace.push_back({static_cast<int>(ci), "type0", {{k, k + 1, 0}}});
        V.incorporate_right({k, k + 1, r});
        res.trace.push_back({static_cast<int>(ci), "type5", V.marks()});
        const FqElem rp = V.remove_left(k);
        res.trace.push_back({static_cast<int>(ci), "type6", {{k, k + 1, rp}}});
        if (rp) res.aform.gap_marks[e].push_back({k, k + 1, rp});
        V.pass_crossing(k);
        res.trace.push_back({static_cast<int>(ci), "type1", V.marks()});
        for (const auto& h : L.right_marks[ci]) {
            V.incorporate_right(h);
            res.trace.push_back({static_cast<int>(ci), "type5", V.marks()});
        }
    }
    if (m == 1) {
        auto pairs = cusp_pairs(d);
        for (std::size_t i = 0; i < d.right_cusp_events.size(); ++i) {
            const int e = d.right_cusp_events[i];
            const int k = d.events[e].k0();
            FqElem v = F.add(prm.r_cusp[i], V.coeff(pairs[i].first, pairs[i].second));
            res.trace.push_back({-1, "type3", {{k, k + 1, v}}});
            if (v) res.aform.gap_marks[e].push_back({k, k + 1, v});
        }
    }
    res.trace.push_back({-1, "erase", V.marks()});
    auto out = validate_aform(d, mu, m, res.aform, F);
    if (!out.ok) throw Error("Internal", "phi produced an invalid A-form: " + out.reason);
    return res;
}

PsiResult psi(const FrontDiagram& d, const MaslovPotential& mu, int m, const Mcs& aform, const Fq& F) {
    auto chk = validate_aform(d, mu, m, aform, F);
    if (!chk.ok) throw NotAForm(chk.reason);
    Mcs ac = aform;
    if (ac.marked_values.empty()) ac.marked_values = build_complexes(d, mu, m, aform, F).marked_values;
    auto degs = crossing_degrees(d, mu);

    PsiResult res;
    std::vector<bool> switches(d.crossing_events.size(), false);
    SrParams prm;
    prm.r_cross.assign(d.crossing_events.size(), 0);
    prm.r_cusp.assign(d.right_cusp_events.size(), 0);
    prm.marked = ac.marked_values;
    Mcs built = empty_mcs(d);

    Propagator P(d, mu, m, F, ac.marked_values);
    while (P.gap() < d.first_crossing_gap()) P.pass_event();
    std::vector<int> rho;
    for (int i = 0; i < P.complex().size; ++i)
        for (int j = i + 1; j < P.complex().size; ++j)
            if (P.complex().get(i, j)) {
                rho.resize(P.complex().size);
                rho[i] = j;
                rho[j] = i;
            }
    rho.resize(P.complex().size);
    auto conj = [](std::vector<int> r, int k) {
        auto sw = [k](int x) { return x == k ? k + 1 : x == k + 1 ? k : x; };
        std::vector<int> o(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) o[sw(static_cast<int>(i))] = sw(r[i]);
        return o;
    };

    HandleslideCollection V(static_cast<int>(rho.size()), false, F);
    for (std::size_t ci = 0; ci < d.crossing_events.size(); ++ci) {
        const int e = d.crossing_events[ci];
        const int k = d.events[e].k0();
        const int cix = static_cast<int>(ci);
        if (!degree_graded(degs[ci], m)) {
            V.pass_crossing(k);
            res.trace.push_back({cix, "type1", V.marks()});
            P.pass_event();
            rho = conj(rho, k);
            continue;
        }
        const FqElem lam = ac.gap_marks[e].empty() ? 0 : ac.gap_marks[e][0].coeff;
        V.incorporate_right({k, k + 1, lam});
        res.trace.push_back({cix, "type5", V.marks()});
        const FqElem rp = V.remove_left(k);
        res.trace.push_back({cix, "type6", {{k, k + 1, rp}}});
        V.pass_crossing(k);
        res.trace.push_back({cix, "type1", V.marks()});

        const auto& r0 = rho;
        const int a0 = r0[k], b0 = r0[k + 1];
        auto [a, b] = cluster_ab(P.complex(), r0, k);
        auto [c1, c2] = companions(r0, k);
        std::vector<Mark> right;
        bool is_switch = false;
        if ((a0 < k && k + 1 < b0) || (b0 < a0 && a0 < k) || (k + 1 < b0 && b0 < a0)) {
            if (rp != 0) {
                is_switch = true;
                const FqElem rinv = F.inv(rp);
                res.trace.push_back({cix, "type4", {{k, k + 1, F.neg(rinv)}, {k, k + 1, rinv}}});
                right.push_back({k, k + 1, F.neg(rinv)});
                V.incorporate_left({k, k + 1, rinv});
                if (!(a0 < k && k + 1 < b0)) {
                    const FqElem c = F.mul(F.mul(a, rinv), F.inv(b));
                    res.trace.push_back({cix, "type4", {{c1, c2, c}, {c1, c2, F.neg(c)}}});
                    right.push_back({c1, c2, c});
                    V.incorporate_left({c1, c2, F.neg(c)});
                }
                res.trace.push_back({cix, "type5", V.marks()});
            }
        } else if (a0 < b0 && b0 < k) {
            const FqElem c = F.mul(F.mul(a, rp), F.inv(b));
            res.trace.push_back({cix, "type4", {{c1, c2, c}, {c1, c2, F.neg(c)}}});
            if (c) right.push_back({c1, c2, c});
            V.incorporate_left({c1, c2, F.neg(c)});
            res.trace.push_back({cix, "type5", V.marks()});
        } else if (k + 1 < a0 && a0 < b0) {
            const FqElem c = F.mul(F.mul(F.inv(a), rp), b);
            res.trace.push_back({cix, "type4", {{c1, c2, c}, {c1, c2, F.neg(c)}}});
            if (c) right.push_back({c1, c2, c});
            V.incorporate_left({c1, c2, F.neg(c)});
            res.trace.push_back({cix, "type5", V.marks()});
        }
        switches[ci] = is_switch;
        prm.r_cross[ci] = rp;
        if (rp) {
            built.gap_marks[e].push_back({k, k + 1, rp});
            P.apply_mark({k, k + 1, rp});
        }
        P.pass_event();
        for (const auto& h : right) {
            built.gap_marks[e + 1].push_back(h);
            P.apply_mark(h);
        }
        if (!is_switch) rho = conj(rho, k);
    }
    if (m == 1) {
        auto pairs = cusp_pairs(d);
        for (std::size_t i = 0; i < d.right_cusp_events.size(); ++i) {
            const int e = d.right_cusp_events[i];
            const int k = d.events[e].k0();
            FqElem lam = ac.gap_marks[e].empty() ? 0 : ac.gap_marks[e][0].coeff;
            FqElem v = F.add(lam, V.coeff(pairs[i].first, pairs[i].second));
            res.trace.push_back({-1, "type3", {{k, k + 1, v}}});
            prm.r_cusp[i] = v;
            if (v) built.gap_marks[e].push_back({k, k + 1, v});
        }
    }
    res.trace.push_back({-1, "erase", V.marks()});

    auto ruling = ruling_from_switches(d, mu, m, switches);
    if (!ruling) throw Error("Internal", "psi produced switches that do not form a normal ruling");
    res.rho = *ruling;
    auto L = sr_build(d, mu, m, res.rho, prm, F);
    if (L.mcs.gap_marks != built.gap_marks) throw Error("Internal", "psi marks disagree with the SR pattern");
    res.srform = L.mcs;
    return res;
}

Augmentation phi_rho(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho,
                     const ZPoint& p, const Fq& F) {
    auto sr = lambda_sr(d, mu, m, rho, p, F);
    auto a = phi(d, mu, m, rho, sr, F).aform;
    return theta(d, mu, m, a, F);
}

}  // namespace lch
