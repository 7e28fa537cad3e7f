#include "lch/front.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "lch/errors.hpp"

namespace lch {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

long long parse_int(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw SyntaxError("line " + std::to_string(line) + ": bad integer '" + tok + "'");
    }
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream is(s);
    std::vector<std::string> out;
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

// Partner strand across the cusp at the given event.
int across(const FrontDiagram& d, int strand, int event) {
    const auto& ev = d.events[event];
    int k = ev.k0();
    if (ev.kind == EventKind::LeftCusp) {
        int u = d.strand_at[event + 1][k], l = d.strand_at[event + 1][k + 1];
        return strand == u ? l : u;
    }
    int u = d.strand_at[event][k], l = d.strand_at[event][k + 1];
    return strand == u ? l : u;
}

// Walks a component starting on the lower strand of its leftmost cusp, moving right.
// Calls visit(from, to, cusp_event, went_down) at every cusp.
template <class F>
void walk_component(const FrontDiagram& d, int comp, F&& visit) {
    int e0 = d.component_first_cusp[comp];
    int k = d.events[e0].k0();
    int start = d.strand_at[e0 + 1][k + 1];
    int s = start;
    bool rightward = true;
    do {
        const Strand& st = d.strands[s];
        int cusp = rightward ? st.right_event : st.left_event;
        bool upper = rightward ? st.upper_at_right : st.upper_at_left;
        int t = across(d, s, cusp);
        visit(s, t, cusp, upper);
        s = t;
        rightward = !rightward;
    } while (s != start);
}

void assign_marks(FrontDiagram& d, const std::vector<std::pair<int, int>>& marks) {
    d.marked_cusp.assign(d.num_components, -1);
    for (int e : d.right_cusp_events) {
        int c = d.component_of_event(e);
        if (d.marked_cusp[c] < 0) d.marked_cusp[c] = e;
    }
    for (auto [comp, ord] : marks) {
        if (comp < 1 || comp > d.num_components)
            throw MarkError("mark names component " + std::to_string(comp) + " which does not exist");
        if (ord < 1 || ord > static_cast<int>(d.right_cusp_events.size()))
            throw MarkError("mark names right cusp " + std::to_string(ord) + " which does not exist");
        int e = d.right_cusp_events[ord - 1];
        if (d.component_of_event(e) != comp - 1)
            throw MarkError("right cusp " + std::to_string(ord) + " is not on component " +
                            std::to_string(comp));
        d.marked_cusp[comp - 1] = e;
    }
    d.mark_directives = marks;
}

}  // namespace

int FrontDiagram::crossing_index(int event) const {
    auto it = std::lower_bound(crossing_events.begin(), crossing_events.end(), event);
    if (it == crossing_events.end() || *it != event) return -1;
    return static_cast<int>(it - crossing_events.begin());
}

int FrontDiagram::right_cusp_index(int event) const {
    auto it = std::lower_bound(right_cusp_events.begin(), right_cusp_events.end(), event);
    if (it == right_cusp_events.end() || *it != event) return -1;
    return static_cast<int>(it - right_cusp_events.begin());
}

int FrontDiagram::component_of_event(int event) const {
    const auto& ev = events[event];
    int g = ev.kind == EventKind::LeftCusp ? event + 1 : event;
    return strands[strand_at[g][ev.k0()]].component;
}

bool FrontDiagram::is_marked(int event) const {
    return std::find(marked_cusp.begin(), marked_cusp.end(), event) != marked_cusp.end();
}

bool FrontDiagram::cusp_goes_down(int event) const {
    const auto& ev = events[event];
    int g = ev.kind == EventKind::LeftCusp ? event + 1 : event;
    int upper = strand_at[g][ev.k0()];
    // Leaving the upper strand at a right cusp means it was travelling right.
    return ev.kind == EventKind::RightCusp ? strands[upper].rightward : !strands[upper].rightward;
}

int FrontDiagram::first_crossing_gap() const { return static_cast<int>(left_cusp_events.size()); }
int FrontDiagram::last_crossing_gap() const {
    return static_cast<int>(left_cusp_events.size() + crossing_events.size());
}

FrontDiagram make_front(const std::vector<FrontEvent>& events, const std::vector<long long>& offsets,
                        const std::vector<std::pair<int, int>>& marks) {
    FrontDiagram d;
    d.events = events;
    if (events.empty()) throw ShapeError("diagram has no events");

    int phase = 0;
    int s = 0;
    d.gap_size.push_back(0);
    d.strand_at.push_back({});
    for (std::size_t i = 0; i < events.size(); ++i) {
        const auto& ev = events[i];
        int ph = ev.kind == EventKind::LeftCusp ? 0 : ev.kind == EventKind::Crossing ? 1 : 2;
        if (ph < phase)
            throw ShapeError("event " + std::to_string(i + 1) + ": events must be ordered L*, X*, R*");
        phase = ph;
        int k = ev.pos;
        std::vector<int> cur = d.strand_at.back();
        if (ev.kind == EventKind::LeftCusp) {
            if (k < 1 || k > s + 1)
                throw ShapeError("event " + std::to_string(i + 1) + ": left cusp at " +
                                 std::to_string(k) + " with " + std::to_string(s) + " strands");
            int u = static_cast<int>(d.strands.size());
            Strand su, sl;
            su.left_event = sl.left_event = static_cast<int>(i);
            su.upper_at_left = true;
            d.strands.push_back(su);
            d.strands.push_back(sl);
            cur.insert(cur.begin() + (k - 1), {u, u + 1});
            s += 2;
            d.left_cusp_events.push_back(static_cast<int>(i));
        } else {
            if (k < 1 || k + 1 > s)
                throw ShapeError("event " + std::to_string(i + 1) + ": position " + std::to_string(k) +
                                 " needs two strands, have " + std::to_string(s));
            if (ev.kind == EventKind::Crossing) {
                std::swap(cur[k - 1], cur[k]);
                d.crossing_events.push_back(static_cast<int>(i));
            } else {
                d.strands[cur[k - 1]].right_event = static_cast<int>(i);
                d.strands[cur[k - 1]].upper_at_right = true;
                d.strands[cur[k]].right_event = static_cast<int>(i);
                cur.erase(cur.begin() + (k - 1), cur.begin() + (k + 1));
                s -= 2;
                d.right_cusp_events.push_back(static_cast<int>(i));
            }
        }
        d.gap_size.push_back(s);
        d.strand_at.push_back(std::move(cur));
    }
    if (s != 0) throw ShapeError("diagram ends with " + std::to_string(s) + " open strands");

    // Components, numbered by leftmost cusp.
    for (int e : d.left_cusp_events) {
        int u = d.strand_at[e + 1][d.events[e].k0()];
        if (d.strands[u].component >= 0) continue;
        int c = d.num_components++;
        d.component_first_cusp.push_back(e);
        d.rotation.push_back(0);
        int down = 0, up = 0;
        bool rightward = true;
        walk_component(d, c, [&](int from, int, int, bool went_down) {
            d.strands[from].component = c;
            d.strands[from].rightward = rightward;
            rightward = !rightward;
            (went_down ? down : up) += 1;
        });
        d.rotation[c] = (down - up) / 2;
    }
    long long g = 0;
    for (int r : d.rotation) g = std::gcd(g, static_cast<long long>(r < 0 ? -r : r));
    d.gcd_rotation = g;

    if (static_cast<int>(offsets.size()) > d.num_components)
        throw ShapeError("offsets directive lists more values than components");
    d.offsets_directive = offsets;
    assign_marks(d, marks);
    return d;
}

FrontDiagram with_marks(const FrontDiagram& d, const std::vector<std::pair<int, int>>& marks) {
    FrontDiagram r = d;
    assign_marks(r, marks);
    return r;
}

FrontDiagram reverse_orientation(const FrontDiagram& d, int component) {
    FrontDiagram r = d;
    for (auto& s : r.strands)
        if (s.component == component) s.rightward = !s.rightward;
    r.rotation[component] = -r.rotation[component];
    return r;
}

FrontDiagram parse_front(const std::string& text) {
    std::vector<FrontEvent> events;
    std::vector<long long> offsets;
    std::vector<std::pair<int, int>> marks;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        std::string line = trim(raw);
        if (line.empty()) continue;
        if (line.rfind("offsets:", 0) == 0) {
            for (auto& t : split_ws(line.substr(8))) offsets.push_back(parse_int(t, lineno));
            continue;
        }
        auto toks = split_ws(line);
        if (toks[0] == "mark") {
            if (toks.size() != 3) throw SyntaxError("line " + std::to_string(lineno) + ": mark needs 2 integers");
            marks.emplace_back(static_cast<int>(parse_int(toks[1], lineno)),
                               static_cast<int>(parse_int(toks[2], lineno)));
            continue;
        }
        // One or more events separated by '/'.
        std::stringstream parts(line);
        std::string part;
        while (std::getline(parts, part, '/')) {
            std::string ev = trim(part);
            if (ev.empty()) throw SyntaxError("line " + std::to_string(lineno) + ": empty event");
            char c = ev[0];
            EventKind kind;
            if (c == 'L') kind = EventKind::LeftCusp;
            else if (c == 'X') kind = EventKind::Crossing;
            else if (c == 'R') kind = EventKind::RightCusp;
            else throw SyntaxError("line " + std::to_string(lineno) + ": unknown token '" + ev + "'");
            std::string num = trim(ev.substr(1));
            if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
                throw SyntaxError("line " + std::to_string(lineno) + ": bad position in '" + ev + "'");
            events.push_back({kind, static_cast<int>(parse_int(num, lineno))});
        }
    }
    return make_front(events, offsets, marks);
}

std::string serialize_front(const FrontDiagram& d) {
    std::string out;
    for (const auto& ev : d.events) {
        out += ev.kind == EventKind::LeftCusp ? 'L' : ev.kind == EventKind::Crossing ? 'X' : 'R';
        out += ' ';
        out += std::to_string(ev.pos);
        out += '\n';
    }
    if (!d.offsets_directive.empty()) {
        out += "offsets:";
        for (auto o : d.offsets_directive) out += " " + std::to_string(o);
        out += '\n';
    }
    for (auto [c, i] : d.mark_directives) out += "mark " + std::to_string(c) + " " + std::to_string(i) + "\n";
    return out;
}

long long reduce_mod(long long v, long long modulus) {
    if (modulus == 0) return v;
    long long r = v % modulus;
    return r < 0 ? r + modulus : r;
}

MaslovPotential maslov_potential(const FrontDiagram& d, const std::optional<std::vector<long long>>& offsets) {
    MaslovPotential mp;
    mp.modulus = 2 * d.gcd_rotation;
    mp.offsets.assign(d.num_components, 0);
    const auto& src = offsets ? *offsets : d.offsets_directive;
    if (static_cast<int>(src.size()) > d.num_components)
        throw ShapeError("more offsets than components");
    for (std::size_t i = 0; i < src.size(); ++i) mp.offsets[i] = src[i];
    mp.mu.assign(d.strands.size(), 0);
    for (int c = 0; c < d.num_components; ++c) {
        int e0 = d.component_first_cusp[c];
        int start = d.strand_at[e0 + 1][d.events[e0].k0() + 1];
        long long cur = mp.offsets[c];
        mp.mu[start] = cur;
        walk_component(d, c, [&](int, int to, int, bool went_down) {
            cur += went_down ? -1 : 1;
            if (to == start) {
                if (reduce_mod(cur - mp.offsets[c], mp.modulus) != 0)
                    throw InconsistentPotential("cusp constraints do not close up");
                return;
            }
            mp.mu[to] = cur;
        });
    }
    for (auto& v : mp.mu) v = reduce_mod(v, mp.modulus);
    return mp;
}

std::vector<long long> crossing_degrees(const FrontDiagram& d, const MaslovPotential& mu) {
    std::vector<long long> out;
    for (int e : d.crossing_events) {
        int k = d.events[e].k0();
        out.push_back(reduce_mod(mu.at(d, e, k) - mu.at(d, e, k + 1), mu.modulus));
    }
    return out;
}

void check_grading(const FrontDiagram& d, int m) {
    long long two_r = 2 * d.gcd_rotation;
    if (m < 0) throw GradingError("m must be non-negative");
    if (m == 0) {
        if (two_r != 0) throw GradingError("m = 0 requires r(L) = 0");
        return;
    }
    if (two_r % m != 0)
        throw GradingError("m = " + std::to_string(m) + " does not divide 2r(L) = " + std::to_string(two_r));
}

bool degree_graded(long long degree, int m) {
    if (m == 0) return degree == 0;
    return reduce_mod(degree, m) == 0;
}

bool same_mod(long long a, long long b, int m) { return degree_graded(a - b, m); }

}  // namespace lch
