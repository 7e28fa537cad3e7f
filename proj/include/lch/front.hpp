#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace lch {

enum class EventKind { LeftCusp, Crossing, RightCusp };

struct FrontEvent {
    EventKind kind;
    int pos;  // 1-based strand index, 1 = top
    int k0() const { return pos - 1; }
    bool operator==(const FrontEvent& o) const { return kind == o.kind && pos == o.pos; }
};

// A strand runs from a left cusp to a right cusp. Positions below are 0-based.
struct Strand {
    int left_event = -1;
    int right_event = -1;
    bool upper_at_left = false;
    bool upper_at_right = false;
    int component = -1;  // 0-based
    bool rightward = false;
};

struct FrontDiagram {
    std::vector<FrontEvent> events;
    std::vector<int> gap_size;                  // strands in gap g (left of event g)
    std::vector<std::vector<int>> strand_at;    // [gap][pos] -> strand id
    std::vector<Strand> strands;

    int num_components = 0;
    std::vector<int> component_first_cusp;      // event index of leftmost cusp
    std::vector<int> rotation;                  // per component
    long long gcd_rotation = 0;
    std::vector<int> marked_cusp;               // per component, event index of a right cusp

    std::vector<int> crossing_events;
    std::vector<int> right_cusp_events;
    std::vector<int> left_cusp_events;

    // Directives as written, kept for serialization.
    std::vector<long long> offsets_directive;
    std::vector<std::pair<int, int>> mark_directives;  // (component, right-cusp ordinal), 1-based

    int num_events() const { return static_cast<int>(events.size()); }
    int crossing_index(int event) const;     // -1 if not a crossing
    int right_cusp_index(int event) const;   // -1 if not a right cusp
    int component_of_event(int event) const; // component of the strands at a cusp
    // Strand entering event e from the left at 0-based position p.
    int strand_left(int e, int p) const { return strand_at[e][p]; }
    bool is_marked(int event) const;
    // Orientation at a cusp runs from the upper strand to the lower one.
    bool cusp_goes_down(int event) const;
    int first_crossing_gap() const;   // gap after the last left cusp
    int last_crossing_gap() const;    // gap before the first right cusp
};

FrontDiagram parse_front(const std::string& text);
std::string serialize_front(const FrontDiagram& d);

// Builds and validates a diagram; marks use (component, right-cusp ordinal), 1-based.
FrontDiagram make_front(const std::vector<FrontEvent>& events,
                        const std::vector<long long>& offsets = {},
                        const std::vector<std::pair<int, int>>& marks = {});

FrontDiagram with_marks(const FrontDiagram& d, const std::vector<std::pair<int, int>>& marks);
// Same diagram with one component traversed the other way.
FrontDiagram reverse_orientation(const FrontDiagram& d, int component);

struct MaslovPotential {
    long long modulus = 0;            // 2 r(L); 0 means integer valued
    std::vector<long long> mu;        // per strand
    std::vector<long long> offsets;   // per component
    long long at(const FrontDiagram& d, int gap, int pos) const { return mu[d.strand_at[gap][pos]]; }
};

long long reduce_mod(long long v, long long modulus);

// Offsets default to the diagram's directive, else all 0.
MaslovPotential maslov_potential(const FrontDiagram& d,
                                 const std::optional<std::vector<long long>>& offsets = std::nullopt);

// One residue per crossing, in event order.
std::vector<long long> crossing_degrees(const FrontDiagram& d, const MaslovPotential& mu);

// Throws GradingError unless m = 0 with r(L) = 0, or m >= 1 dividing 2 r(L).
void check_grading(const FrontDiagram& d, int m);
bool degree_graded(long long degree, int m);
bool same_mod(long long a, long long b, int m);

}  // namespace lch
