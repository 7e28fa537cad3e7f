#pragma once

#include <map>
#include <string>
#include <vector>

#include "lch/front.hpp"

namespace lch {

enum class GenSource { Crossing, RightCusp, Stabilization };

struct Generator {
    std::string name;
    GenSource source = GenSource::Crossing;
    int event = -1;       // event index, -1 for stabilization generators
    long long degree = 0; // reduced mod the grading modulus
};

// coeff * t^texp * (letters in order)
struct DgaTerm {
    long long coeff = 0;
    std::vector<int> texp;
    std::vector<int> word;
};

struct Dga {
    std::vector<Generator> gens;
    std::vector<std::vector<DgaTerm>> diff;  // per generator, sorted by (word, texp)
    long long modulus = 0;
    int num_t = 0;
    long long word_degree(const std::vector<int>& w) const;
};

Dga build_dga(const FrontDiagram& d, const MaslovPotential& mu);

struct DSquaredReport {
    // (generator id, offending term) for every nonzero coefficient of d^2
    std::vector<std::pair<int, DgaTerm>> nonzero;
    bool ok() const { return nonzero.empty(); }
};
DSquaredReport d_squared_check(const Dga& g);

// Terms whose degree is not deg(x) - 1; empty when the grading is respected.
std::vector<std::pair<int, DgaTerm>> degree_check(const Dga& g);

Dga stabilize(const Dga& g, long long k);

std::string term_to_string(const Dga& g, const DgaTerm& t);

}  // namespace lch
