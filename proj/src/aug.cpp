#include "lch/aug.hpp"

#include <cstdlib>
#include <functional>
#include <thread>

#include "lch/errors.hpp"
#include "lch/mcs.hpp"
#include "lch/rulings.hpp"

namespace lch {

int worker_count(int requested) {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    int n = requested > 0 ? requested : hw;
    if (const char* env = std::getenv("LCH_THREADS")) {
        int cap = std::atoi(env);
        if (cap >= 1 && cap < n) n = cap;
    }
    return n;
}

std::vector<int> augmentable_generators(const Dga& g, int m) {
    std::vector<int> out;
    for (std::size_t i = 0; i < g.gens.size(); ++i)
        if (degree_graded(g.gens[i].degree, m)) out.push_back(static_cast<int>(i));
    return out;
}

namespace {

struct CompiledTerm {
    FqElem coeff;
    std::vector<std::pair<int, int>> tpow;  // (t index, exponent)
    std::vector<int> vars;                  // indices into the augmentable list
};

struct CompiledSystem {
    std::vector<std::vector<CompiledTerm>> eqs;
};

CompiledSystem compile(const Dga& g, int m, const Fq& F) {
    auto aug = augmentable_generators(g, m);
    std::vector<int> slot(g.gens.size(), -1);
    for (std::size_t i = 0; i < aug.size(); ++i) slot[aug[i]] = static_cast<int>(i);
    CompiledSystem sys;
    for (const auto& terms : g.diff) {
        std::vector<CompiledTerm> eq;
        for (const auto& t : terms) {
            CompiledTerm ct;
            ct.coeff = F.from_int(t.coeff);
            if (ct.coeff == 0) continue;
            bool dead = false;
            for (int x : t.word) {
                if (slot[x] < 0) {
                    dead = true;
                    break;
                }
                ct.vars.push_back(slot[x]);
            }
            if (dead) continue;
            for (std::size_t i = 0; i < t.texp.size(); ++i)
                if (t.texp[i]) ct.tpow.emplace_back(static_cast<int>(i), t.texp[i]);
            eq.push_back(std::move(ct));
        }
        if (!eq.empty()) sys.eqs.push_back(std::move(eq));
    }
    return sys;
}

bool satisfied(const CompiledSystem& sys, const std::vector<FqElem>& t, const std::vector<FqElem>& x,
               const Fq& F) {
    for (const auto& eq : sys.eqs) {
        FqElem sum = 0;
        for (const auto& term : eq) {
            FqElem v = term.coeff;
            for (auto [i, e] : term.tpow) v = F.mul(v, F.pow(t[i], e));
            for (int j : term.vars) {
                v = F.mul(v, x[j]);
                if (v == 0) break;
            }
            sum = F.add(sum, v);
        }
        if (sum != 0) return false;
    }
    return true;
}

template <class Sink>
void scan(const Dga& g, int m, const Fq& F, const BruteOptions& opt, Sink&& make_sink) {
    const auto sys = compile(g, m, F);
    const auto aug = augmentable_generators(g, m);
    const int c = g.num_t;
    const int n0 = static_cast<int>(aug.size());
    const int q = F.q();
    // Radices: t coordinates range over 1..q-1, generator coordinates over 0..q-1.
    std::vector<int> radix;
    for (int i = 0; i < c; ++i) radix.push_back(q - 1);
    for (int i = 0; i < n0; ++i) radix.push_back(q);
    long double total_ld = 1;
    for (int r : radix) total_ld *= r;
    if (total_ld > static_cast<long double>(opt.cap))
        throw ScaleError("search space of " + std::to_string(static_cast<long long>(total_ld)) +
                         " points exceeds cap " + std::to_string(opt.cap));
    const long long total = static_cast<long long>(total_ld);
    const int workers = static_cast<int>(std::min<long long>(worker_count(opt.threads), std::max(1LL, total / 4096)));
    auto sinks = make_sink(workers);
    auto work = [&](int w) {
        long long lo = total * w / workers, hi = total * (w + 1) / workers;
        if (lo >= hi) return;
        std::vector<int> digit(radix.size());
        long long idx = lo;
        for (int i = static_cast<int>(radix.size()) - 1; i >= 0; --i) {
            digit[i] = static_cast<int>(idx % radix[i]);
            idx /= radix[i];
        }
        std::vector<FqElem> t(c), x(n0);
        for (int i = 0; i < c; ++i) t[i] = static_cast<FqElem>(digit[i] + 1);
        for (int i = 0; i < n0; ++i) x[i] = static_cast<FqElem>(digit[c + i]);
        for (long long p = lo; p < hi; ++p) {
            if (satisfied(sys, t, x, F)) sinks[w](t, x);
            for (int i = static_cast<int>(radix.size()) - 1; i >= 0; --i) {
                if (++digit[i] < radix[i]) {
                    if (i < c) t[i] = static_cast<FqElem>(digit[i] + 1);
                    else x[i - c] = static_cast<FqElem>(digit[i]);
                    break;
                }
                digit[i] = 0;
                if (i < c) t[i] = 1;
                else x[i - c] = 0;
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> th;
        for (int w = 0; w < workers; ++w) th.emplace_back(work, w);
        for (auto& t : th) t.join();
    }
}

}  // namespace

bool is_augmentation(const Dga& g, const Augmentation& a, const Fq& F) {
    // Evaluates every differential directly with the full assignment.
    for (const auto& terms : g.diff) {
        FqElem sum = 0;
        for (const auto& t : terms) {
            FqElem v = F.from_int(t.coeff);
            for (std::size_t i = 0; i < t.texp.size(); ++i)
                if (t.texp[i]) v = F.mul(v, F.pow(a.t[i], t.texp[i]));
            for (int x : t.word) v = F.mul(v, a.gen[x]);
            sum = F.add(sum, v);
        }
        if (sum != 0) return false;
    }
    for (auto v : a.t)
        if (v == 0) return false;
    return true;
}

std::vector<Augmentation> enumerate_augmentations(const Dga& g, int m, const Fq& F, const BruteOptions& opt) {
    const auto aug = augmentable_generators(g, m);
    std::vector<std::vector<Augmentation>> parts;
    scan(g, m, F, opt, [&](int workers) {
        parts.resize(workers);
        std::vector<std::function<void(const std::vector<FqElem>&, const std::vector<FqElem>&)>> sinks;
        for (int w = 0; w < workers; ++w)
            sinks.push_back([&, w](const std::vector<FqElem>& t, const std::vector<FqElem>& x) {
                Augmentation a;
                a.t = t;
                a.gen.assign(g.gens.size(), 0);
                for (std::size_t i = 0; i < aug.size(); ++i) a.gen[aug[i]] = x[i];
                parts[w].push_back(std::move(a));
            });
        return sinks;
    });
    std::vector<Augmentation> out;
    for (auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

BigInt count_augmentations(const Dga& g, int m, const Fq& F, const BruteOptions& opt) {
    std::vector<long long> counts;
    scan(g, m, F, opt, [&](int workers) {
        counts.assign(workers, 0);
        std::vector<std::function<void(const std::vector<FqElem>&, const std::vector<FqElem>&)>> sinks;
        for (int w = 0; w < workers; ++w)
            sinks.push_back([&, w](const std::vector<FqElem>&, const std::vector<FqElem>&) { ++counts[w]; });
        return sinks;
    });
    BigInt total = 0;
    for (auto c : counts) total += static_cast<long>(c);
    return total;
}

std::optional<long long> variety_dim(const FrontDiagram& d, const MaslovPotential& mu, int m) {
    std::optional<long long> best;
    for (const auto& rho : enumerate_rulings(d, mu, m)) {
        auto st = ruling_stats(d, rho, m);
        long long v = st.j + d.num_components + st.r;
        if (!best || v > *best) best = v;
    }
    return best;
}

std::string method_name(Method m) {
    switch (m) {
        case Method::Brute: return "brute";
        case Method::Mcs: return "mcs";
        case Method::Ruling: return "ruling";
    }
    return "?";
}

namespace {

BigInt ipow(long long b, long long e) {
    BigInt r;
    BigInt base = static_cast<long>(b);
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return r;
}

BigRational normalize(const BigInt& count, const std::optional<long long>& dim, long long q) {
    if (!dim || count == 0) return 0;
    BigRational r = BigRational(count) * rational_pow(q, -*dim);
    r.canonicalize();
    return r;
}

}  // namespace

AugVarietyReport aug_number(const FrontDiagram& d, const MaslovPotential& mu, int m, const Fq& F, Method method,
                            const BruteOptions& opt) {
    check_grading(d, m);
    AugVarietyReport rep;
    rep.m = m;
    rep.q = F.q();
    rep.dim = variety_dim(d, mu, m);
    const int c = d.num_components;
    for (const auto& rho : enumerate_rulings(d, mu, m)) {
        auto st = ruling_stats(d, rho, m);
        rep.per_ruling.emplace_back(rho.id(), ipow(F.q() - 1, st.j + c) * ipow(F.q(), st.r));
    }
    switch (method) {
        case Method::Brute: rep.count = count_augmentations(build_dga(d, mu), m, F, opt); break;
        case Method::Mcs: rep.count = enumerate_aform_count(d, mu, m, F, opt.cap); break;
        case Method::Ruling:
            rep.count = 0;
            for (const auto& pr : rep.per_ruling) rep.count += pr.second;
            break;
    }
    rep.aug_number = normalize(rep.count, rep.dim, F.q());
    return rep;
}

std::vector<VerifyRow> verify_main_theorem(const FrontDiagram& d, const MaslovPotential& mu, int m,
                                           const std::vector<long long>& q_list, const std::vector<Method>& methods,
                                           const BruteOptions& opt) {
    check_grading(d, m);
    std::vector<VerifyRow> rows;
    const auto R = ruling_polynomial(d, mu, m);
    const auto dim = variety_dim(d, mu, m);
    for (long long q : q_list) {
        Fq F = field_of_order(q);
        VerifyRow row;
        row.m = m;
        row.q = q;
        row.dim = dim;
        row.rhs = rhs_exact(R, d.num_components, q);
        row.equal = true;
        bool first = true;
        for (Method meth : methods) {
            auto rep = aug_number(d, mu, m, F, meth, opt);
            if (meth == Method::Brute) row.brute = rep.count;
            if (meth == Method::Mcs) row.mcs = rep.count;
            if (meth == Method::Ruling) row.ruling = rep.count;
            if (first) row.aug_number = rep.aug_number;
            first = false;
            if (rep.aug_number != row.rhs && row.equal) {
                row.equal = false;
                row.mismatch = method_name(meth) + " gives " + to_string(rep.aug_number) + " but rhs is " +
                               to_string(row.rhs);
            }
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace lch
