// Command line front end.
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "lch/algebra.hpp"
#include "lch/aug.hpp"
#include "lch/dga.hpp"
#include "lch/errors.hpp"
#include "lch/front.hpp"
#include "lch/mcs.hpp"
#include "lch/rulings.hpp"

using json = nlohmann::ordered_json;
using namespace lch;

namespace {

struct Options {
    std::string verb;
    std::string file;
    int m = 0;
    std::string q_list = "2";
    std::string method = "all";
    std::string offsets;
    std::vector<std::string> marks;
    std::string format = "json";
    long long cap = 100000000;
    std::string ruling;
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
        if (!item.empty()) out.push_back(item);
    return out;
}

long long to_ll(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("bad " + what + ": '" + s + "'");
}

json big(const BigInt& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

json laurent_json(const LaurentPoly& p) {
    json terms = json::array();
    for (auto [e, c] : p.terms()) terms.push_back({e, c});
    return {{"terms", terms}};
}

json mcs_json(const Mcs& c, const Fq& F) {
    json marks = json::array();
    for (std::size_t g = 0; g < c.gap_marks.size(); ++g)
        for (const auto& h : c.gap_marks[g])
            marks.push_back({{"slot", g}, {"top", h.top}, {"bottom", h.bottom}, {"coeff", F.to_string(h.coeff)}});
    json mv = json::array();
    for (auto v : c.marked_values) mv.push_back(F.to_string(v));
    const char* tag = c.form == McsForm::A ? "A" : c.form == McsForm::SR ? "SR" : "generic";
    return {{"marks", marks}, {"marked_values", mv}, {"form", tag}};
}

json trace_json(const std::vector<MoveRecord>& trace, const Fq& F) {
    json out = json::array();
    for (const auto& r : trace) {
        json tangle = json::array();
        for (const auto& h : r.tangle) tangle.push_back({h.top, h.bottom, F.to_string(h.coeff)});
        out.push_back({{"crossing", r.crossing}, {"move", r.move}, {"tangle", tangle}});
    }
    return out;
}

json aug_json(const Augmentation& a, const Fq& F) {
    json t = json::array(), g = json::array();
    for (auto v : a.t) t.push_back(F.to_string(v));
    for (auto v : a.gen) g.push_back(F.to_string(v));
    return {{"t", t}, {"gens", g}};
}

const char* kind_name(EventKind k) {
    return k == EventKind::LeftCusp ? "L" : k == EventKind::RightCusp ? "R" : "X";
}

const char* source_name(GenSource s) {
    return s == GenSource::Crossing ? "crossing" : s == GenSource::RightCusp ? "right_cusp" : "stabilization";
}

std::vector<Method> methods_of(const std::string& s) {
    if (s == "all") return {Method::Brute, Method::Mcs, Method::Ruling};
    if (s == "brute") return {Method::Brute};
    if (s == "mcs") return {Method::Mcs};
    if (s == "ruling") return {Method::Ruling};
    throw UsageError("unknown method '" + s + "'");
}

// Renders rows as aligned columns; anything else as key: value lines.
std::string table(const json& j) {
    std::ostringstream os;
    auto cell = [](const json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_object() || v.is_array()) {
            if (v.is_object()) {
                std::string s;
                for (auto it = v.begin(); it != v.end(); ++it) {
                    if (!s.empty()) s += " ";
                    s += it.key() + "=" + (it.value().is_string() ? it.value().get<std::string>() : it.value().dump());
                }
                return s;
            }
            return v.dump();
        }
        return v.dump();
    };
    for (auto it = j.begin(); it != j.end(); ++it) {
        const auto& v = it.value();
        if (it.key() == "rows" && v.is_array() && !v.empty() && v[0].is_object()) {
            std::vector<std::string> cols;
            for (auto c = v[0].begin(); c != v[0].end(); ++c) cols.push_back(c.key());
            std::vector<std::vector<std::string>> cells;
            std::vector<std::size_t> width;
            for (const auto& c : cols) width.push_back(c.size());
            for (const auto& row : v) {
                std::vector<std::string> line;
                for (std::size_t i = 0; i < cols.size(); ++i) {
                    line.push_back(row.contains(cols[i]) ? cell(row[cols[i]]) : "");
                    width[i] = std::max(width[i], line.back().size());
                }
                cells.push_back(line);
            }
            auto emit = [&](const std::vector<std::string>& line) {
                for (std::size_t i = 0; i < line.size(); ++i) {
                    os << line[i];
                    if (i + 1 < line.size()) os << std::string(width[i] - line[i].size() + 2, ' ');
                }
                os << "\n";
            };
            emit(cols);
            for (const auto& line : cells) emit(line);
        } else {
            os << it.key() << ": " << cell(v) << "\n";
        }
    }
    return os.str();
}

struct Context {
    const Options& opt;
    FrontDiagram d;
    MaslovPotential mu;
    std::vector<long long> qs;
    BruteOptions brute;
};

json report_row(const AugVarietyReport& r, const std::map<Method, BigInt>& counts, const BigRational& rhs) {
    json c = json::object();
    for (auto [meth, v] : counts) c[method_name(meth)] = big(v);
    return {{"m", r.m},
            {"q", r.q},
            {"counts", c},
            {"dim", r.dim ? json(*r.dim) : json(nullptr)},
            {"aug_number", to_string(r.aug_number)},
            {"rhs", to_string(rhs)},
            {"equal", r.aug_number == rhs}};
}

int cmd_parse(Context& cx, json& out) {
    json ev = json::array();
    for (const auto& e : cx.d.events) ev.push_back({kind_name(e.kind), e.pos});
    json strands = json::array();
    for (std::size_t s = 0; s < cx.d.strands.size(); ++s)
        strands.push_back({{"component", cx.d.strands[s].component},
                           {"rightward", cx.d.strands[s].rightward},
                           {"maslov", cx.mu.mu[s]}});
    out["events"] = ev;
    out["components"] = cx.d.num_components;
    out["rotation"] = cx.d.rotation;
    out["gcd_rotation"] = cx.d.gcd_rotation;
    out["maslov_modulus"] = cx.mu.modulus;
    out["offsets"] = cx.mu.offsets;
    out["marked_cusps"] = cx.d.marked_cusp;
    out["strands"] = strands;
    out["crossing_degrees"] = crossing_degrees(cx.d, cx.mu);
    return 0;
}

int cmd_rulings(Context& cx, json& out) {
    check_grading(cx.d, cx.opt.m);
    json rows = json::array();
    for (const auto& r : enumerate_rulings(cx.d, cx.mu, cx.opt.m)) {
        auto st = ruling_stats(cx.d, r, cx.opt.m);
        std::vector<int> sw;
        std::vector<std::string> tags;
        for (std::size_t i = 0; i < r.switches.size(); ++i)
            if (r.switches[i]) sw.push_back(static_cast<int>(i) + 1);
        for (const auto& c : r.classes) tags.push_back(c.tag());
        rows.push_back({{"id", r.id()}, {"switches", sw}, {"tags", tags}, {"j", st.j}, {"r", st.r}});
    }
    out["m"] = cx.opt.m;
    out["rows"] = rows;
    return 0;
}

int cmd_rp(Context& cx, json& out) {
    out = laurent_json(ruling_polynomial(cx.d, cx.mu, cx.opt.m));
    return 0;
}

int cmd_dga(Context& cx, json& out) {
    auto g = build_dga(cx.d, cx.mu);
    json gens = json::array(), diff = json::array();
    for (std::size_t i = 0; i < g.gens.size(); ++i) {
        gens.push_back({{"name", g.gens[i].name}, {"degree", g.gens[i].degree}, {"source", source_name(g.gens[i].source)}});
        json terms = json::array();
        for (const auto& t : g.diff[i]) {
            std::vector<std::string> letters;
            for (int l : t.word) letters.push_back(g.gens[l].name);
            terms.push_back({{"sign", t.coeff}, {"t_exponents", t.texp}, {"letters", letters}});
        }
        diff.push_back({{"generator", g.gens[i].name}, {"terms", terms}});
    }
    out["grading_modulus"] = g.modulus;
    out["generators"] = gens;
    out["differential"] = diff;
    return 0;
}

int cmd_aug(Context& cx, json& out) {
    check_grading(cx.d, cx.opt.m);
    auto meths = methods_of(cx.opt.method);
    auto R = ruling_polynomial(cx.d, cx.mu, cx.opt.m);
    json rows = json::array();
    for (long long q : cx.qs) {
        Fq F = field_of_order(q);
        std::map<Method, BigInt> counts;
        AugVarietyReport last;
        for (auto meth : meths) {
            last = aug_number(cx.d, cx.mu, cx.opt.m, F, meth, cx.brute);
            counts[meth] = last.count;
        }
        auto row = report_row(last, counts, rhs_exact(R, cx.d.num_components, q));
        row["count"] = big(last.count);
        rows.push_back(row);
    }
    out["rows"] = rows;
    return 0;
}

int cmd_verify(Context& cx, json& out) {
    check_grading(cx.d, cx.opt.m);
    auto meths = methods_of(cx.opt.method);
    json rows = json::array();
    bool all = true;
    for (const auto& v : verify_main_theorem(cx.d, cx.mu, cx.opt.m, cx.qs, meths, cx.brute)) {
        json c = json::object();
        if (v.brute) c["brute"] = big(*v.brute);
        if (v.mcs) c["mcs"] = big(*v.mcs);
        if (v.ruling) c["ruling"] = big(*v.ruling);
        json row = {{"m", v.m},
                    {"q", v.q},
                    {"counts", c},
                    {"dim", v.dim ? json(*v.dim) : json(nullptr)},
                    {"aug_number", to_string(v.aug_number)},
                    {"rhs", to_string(v.rhs)},
                    {"equal", v.equal}};
        if (!v.equal) row["mismatch"] = v.mismatch;
        all = all && v.equal;
        rows.push_back(row);
    }
    out["rows"] = rows;
    return all ? 0 : 1;
}

int cmd_mcs_count(Context& cx, json& out) {
    check_grading(cx.d, cx.opt.m);
    json rows = json::array();
    for (long long q : cx.qs) {
        Fq F = field_of_order(q);
        rows.push_back({{"m", cx.opt.m}, {"q", q}, {"aforms", big(enumerate_aform_count(cx.d, cx.mu, cx.opt.m, F, cx.opt.cap))}});
    }
    out["rows"] = rows;
    return 0;
}

bool wanted(const Options& opt, const NormalRuling& r) { return opt.ruling.empty() || opt.ruling == r.id(); }

int cmd_mcs_phi(Context& cx, json& out) {
    check_grading(cx.d, cx.opt.m);
    json items = json::array();
    for (long long q : cx.qs) {
        Fq F = field_of_order(q);
        for (const auto& r : enumerate_rulings(cx.d, cx.mu, cx.opt.m)) {
            if (!wanted(cx.opt, r)) continue;
            for (const auto& p : z_rho_points(cx.d, cx.mu, r, cx.opt.m, F)) {
                auto sr = lambda_sr(cx.d, cx.mu, cx.opt.m, r, p, F);
                auto res = phi(cx.d, cx.mu, cx.opt.m, r, sr, F);
                items.push_back({{"q", q},
                                 {"ruling", r.id()},
                                 {"before", mcs_json(sr, F)},
                                 {"after", mcs_json(res.aform, F)},
                                 {"augmentation", aug_json(theta(cx.d, cx.mu, cx.opt.m, res.aform, F), F)},
                                 {"trace", trace_json(res.trace, F)}});
            }
        }
    }
    out["items"] = items;
    return 0;
}

int cmd_mcs_psi(Context& cx, json& out) {
    check_grading(cx.d, cx.opt.m);
    json items = json::array();
    for (long long q : cx.qs) {
        Fq F = field_of_order(q);
        for (const auto& a : enumerate_aforms(cx.d, cx.mu, cx.opt.m, F, cx.opt.cap)) {
            auto res = psi(cx.d, cx.mu, cx.opt.m, a, F);
            if (!wanted(cx.opt, res.rho)) continue;
            items.push_back({{"q", q},
                             {"ruling", res.rho.id()},
                             {"before", mcs_json(a, F)},
                             {"after", mcs_json(res.srform, F)},
                             {"trace", trace_json(res.trace, F)}});
        }
    }
    out["items"] = items;
    return 0;
}

int cmd_partition(Context& cx, json& out) {
    check_grading(cx.d, cx.opt.m);
    const int m = cx.opt.m;
    auto g = build_dga(cx.d, cx.mu);
    json rows = json::array();
    bool all = true;
    for (long long q : cx.qs) {
        Fq F = field_of_order(q);
        std::set<Augmentation> uni;
        std::size_t total = 0;
        bool sizes_ok = true;
        for (const auto& r : enumerate_rulings(cx.d, cx.mu, m)) {
            auto st = ruling_stats(cx.d, r, m);
            std::set<Augmentation> img;
            for (const auto& p : z_rho_points(cx.d, cx.mu, r, m, F)) img.insert(phi_rho(cx.d, cx.mu, m, r, p, F));
            BigInt want;
            mpz_ui_pow_ui(want.get_mpz_t(), static_cast<unsigned long>(q - 1),
                          static_cast<unsigned long>(st.j + cx.d.num_components));
            BigInt qr;
            mpz_ui_pow_ui(qr.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(st.r));
            want *= qr;
            bool ok = BigInt(static_cast<unsigned long>(img.size())) == want;
            sizes_ok = sizes_ok && ok;
            rows.push_back({{"q", q}, {"ruling", r.id()}, {"image", img.size()}, {"expected", big(want)}, {"equal", ok}});
            total += img.size();
            uni.insert(img.begin(), img.end());
        }
        auto brute = enumerate_augmentations(g, m, F, cx.brute);
        bool disjoint = uni.size() == total;
        bool covers = std::set<Augmentation>(brute.begin(), brute.end()) == uni;
        rows.push_back({{"q", q}, {"ruling", "union"}, {"image", uni.size()}, {"expected", brute.size()},
                        {"equal", disjoint && covers}});
        all = all && sizes_ok && disjoint && covers;
    }
    out["m"] = m;
    out["rows"] = rows;
    return all ? 0 : 1;
}

int run(int argc, char** argv) {
    Options opt;
    CLI::App app{"Legendrian front invariants"};
    app.add_option("verb", opt.verb, "parse|rulings|rp|dga|aug|verify|mcs-count|mcs-phi|mcs-psi|partition")
        ->required()
        ->check(CLI::IsMember({"parse", "rulings", "rp", "dga", "aug", "verify", "mcs-count", "mcs-phi", "mcs-psi",
                               "partition"}));
    app.add_option("file", opt.file, "front file")->required();
    app.add_option("--m", opt.m, "grading modulus");
    app.add_option("--q", opt.q_list, "comma separated field orders");
    app.add_option("--method", opt.method, "brute|mcs|ruling|all")
        ->check(CLI::IsMember({"brute", "mcs", "ruling", "all"}));
    app.add_option("--offsets", opt.offsets, "comma separated Maslov offsets per component");
    app.add_option("--mark", opt.marks, "marked right cusp comp:idx (1-based), repeatable");
    app.add_option("--format", opt.format, "json|table")->check(CLI::IsMember({"json", "table"}));
    app.add_option("--cap", opt.cap, "search size limit");
    app.add_option("--ruling", opt.ruling, "restrict mcs-phi/mcs-psi to one ruling, e.g. {1,3}");
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    std::ifstream in(opt.file);
    if (!in) throw UsageError("cannot read " + opt.file);
    std::stringstream ss;
    ss << in.rdbuf();
    auto d = parse_front(ss.str());
    if (!opt.marks.empty()) {
        std::vector<std::pair<int, int>> marks;
        for (const auto& s : opt.marks) {
            auto parts = split(s, ':');
            if (parts.size() != 2) throw UsageError("bad --mark '" + s + "'");
            marks.emplace_back(static_cast<int>(to_ll(parts[0], "--mark")), static_cast<int>(to_ll(parts[1], "--mark")));
        }
        d = with_marks(d, marks);
    }
    std::optional<std::vector<long long>> offsets;
    if (!opt.offsets.empty()) {
        offsets.emplace();
        for (const auto& s : split(opt.offsets, ',')) offsets->push_back(to_ll(s, "--offsets"));
    }
    Context cx{opt, d, maslov_potential(d, offsets), {}, {}};
    for (const auto& s : split(opt.q_list, ',')) {
        long long q = to_ll(s, "--q");
        prime_power(q);
        cx.qs.push_back(q);
    }
    if (cx.qs.empty()) throw UsageError("--q needs at least one order");
    cx.brute.cap = opt.cap;

    json out = json::object();
    int code = 0;
    if (opt.verb == "parse") code = cmd_parse(cx, out);
    else if (opt.verb == "rulings") code = cmd_rulings(cx, out);
    else if (opt.verb == "rp") code = cmd_rp(cx, out);
    else if (opt.verb == "dga") code = cmd_dga(cx, out);
    else if (opt.verb == "aug") code = cmd_aug(cx, out);
    else if (opt.verb == "verify") code = cmd_verify(cx, out);
    else if (opt.verb == "mcs-count") code = cmd_mcs_count(cx, out);
    else if (opt.verb == "mcs-phi") code = cmd_mcs_phi(cx, out);
    else if (opt.verb == "mcs-psi") code = cmd_mcs_psi(cx, out);
    else code = cmd_partition(cx, out);

    if (opt.format == "table") std::cout << table(out);
    else std::cout << out.dump(2) << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ObstructionAt& e) {
        std::cout << json{{"error", e.kind()}, {"message", e.what()}, {"event", e.event()}}.dump(2) << "\n";
    } catch (const Error& e) {
        std::cout << json{{"error", e.kind()}, {"message", e.what()}}.dump(2) << "\n";
    } catch (const std::exception& e) {
        std::cout << json{{"error", "InternalError"}, {"message", e.what()}}.dump(2) << "\n";
    }
    return 2;
}
