#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lch/algebra.hpp"
#include "lch/front.hpp"

namespace lch {

enum class CrossingKind { Switch, Return, Departure, Pass };

struct CrossingClass {
    CrossingKind kind = CrossingKind::Pass;
    int type = 0;        // 1..3 for switches and returns
    bool graded = false;
    std::string tag() const;  // "S1", "R2", "D", "P"
};

struct NormalRuling {
    std::vector<bool> switches;                 // per crossing
    std::vector<std::vector<int>> involutions;  // per gap, 0-based partner
    std::vector<CrossingClass> classes;         // per crossing
    std::string id() const;                     // switch positions, 1-based, e.g. "{1,3}"
};

struct RulingStats {
    int j = 0;
    int returns_graded = 0;
    int departures_graded = 0;
    int r = 0;
    std::vector<std::pair<int, int>> switch_list;  // (crossing index, type)
    std::vector<std::pair<int, int>> return_list;  // graded returns only
};

// Classifies a crossing at 0-based position k given the pairing just left of it.
CrossingClass classify_crossing(const std::vector<int>& before, int k, bool is_switch);
bool switch_allowed(const std::vector<int>& rho, int k);

// Rebuilds a ruling from its switch set; nullopt if the choice is not a valid m-graded ruling.
std::optional<NormalRuling> ruling_from_switches(const FrontDiagram& d, const MaslovPotential& mu, int m,
                                                 const std::vector<bool>& switches);

std::vector<NormalRuling> enumerate_rulings(const FrontDiagram& d, const MaslovPotential& mu, int m);
LaurentPoly ruling_polynomial(const FrontDiagram& d, const MaslovPotential& mu, int m);
RulingStats ruling_stats(const FrontDiagram& d, const NormalRuling& rho, int m);

// A(x) = sum over disk pairs of a_ij at the given gap.
long long disk_profile(const FrontDiagram& d, const MaslovPotential& mu, const NormalRuling& rho, int gap, int m);

}  // namespace lch
