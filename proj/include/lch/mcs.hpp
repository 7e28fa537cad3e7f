#pragma once

#include <compare>
#include <string>
#include <vector>

#include "lch/algebra.hpp"
#include "lch/front.hpp"
#include "lch/rulings.hpp"

namespace lch {

struct Augmentation;

// Handleslide between 0-based strand positions top < bottom of its gap.
struct Mark {
    int top = 0;
    int bottom = 0;
    FqElem coeff = 0;
    auto operator<=>(const Mark&) const = default;
};

enum class McsForm { Generic, SR, A };

struct Mcs {
    std::vector<std::vector<Mark>> gap_marks;  // per gap, left to right
    std::vector<FqElem> marked_values;         // per component; empty = derive
    McsForm form = McsForm::Generic;
    bool operator==(const Mcs& o) const {
        return gap_marks == o.gap_marks && marked_values == o.marked_values;
    }
};

Mcs empty_mcs(const FrontDiagram& d);
int mark_count(const Mcs& c);

// Dense upper triangular differential: entry (i, j) = <d e_i, e_j> for i < j.
struct Complex {
    int size = 0;
    std::vector<FqElem> a;
    FqElem get(int i, int j) const { return a[static_cast<std::size_t>(i) * size + j]; }
    void set(int i, int j, FqElem v) { a[static_cast<std::size_t>(i) * size + j] = v; }
    bool operator==(const Complex&) const = default;
};

// Change of basis for a handleslide: row top += r row bottom, column bottom -= r column top.
void apply_handleslide(Complex& c, const Mark& h, const Fq& F);
bool d_squared_zero(const Complex& c, const Fq& F);

// Incremental left-to-right propagation of complexes.
class Propagator {
public:
    Propagator(const FrontDiagram& d, const MaslovPotential& mu, int m, const Fq& F,
               std::vector<FqElem> marked_values);
    void apply_mark(const Mark& h);
    // Passes event `gap()`; throws ObstructionAt if the coefficient condition fails.
    void pass_event();
    int gap() const { return gap_; }
    const Complex& complex() const { return d_; }
    const std::vector<FqElem>& marked_values() const { return marked_; }

private:
    const FrontDiagram& dg_;
    const MaslovPotential& mu_;
    int m_;
    const Fq& F_;
    std::vector<FqElem> marked_;
    bool derive_;
    int gap_ = 0;
    Complex d_;
};

struct McsSlot {
    int gap = 0;
    int marks_applied = 0;
    Complex d;
};

struct McsTrace {
    std::vector<McsSlot> slots;
    std::vector<FqElem> marked_values;
};

McsTrace build_complexes(const FrontDiagram& d, const MaslovPotential& mu, int m, const Mcs& c, const Fq& F);

struct FormCheck {
    bool ok = false;
    std::string reason;
};

FormCheck validate_aform(const FrontDiagram& d, const MaslovPotential& mu, int m, const Mcs& c, const Fq& F);
FormCheck validate_srform(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho,
                          const Mcs& c, const Fq& F);
FormCheck validate_form(const FrontDiagram& d, const MaslovPotential& mu, int m, const Mcs& c, const Fq& F,
                        McsForm form, const NormalRuling* rho = nullptr);

// Sign rules relating augmentations and A-form coefficients.
int alpha_sign(const FrontDiagram& d, int crossing_event);
int ell_sign(const FrontDiagram& d, int component);

Augmentation theta(const FrontDiagram& d, const MaslovPotential& mu, int m, const Mcs& aform, const Fq& F);
Mcs theta_inv(const FrontDiagram& d, const MaslovPotential& mu, int m, const Augmentation& aug, const Fq& F);

std::vector<Mcs> enumerate_aforms(const FrontDiagram& d, const MaslovPotential& mu, int m, const Fq& F,
                                  long long cap = 100000000);
BigInt enumerate_aform_count(const FrontDiagram& d, const MaslovPotential& mu, int m, const Fq& F,
                             long long cap = 100000000);

// Signed sum over half-disks with right edge at `gap`, upper boundary at i and lower at j.
FqElem half_disk_sum(const FrontDiagram& d, int gap, int i, int j, const std::vector<FqElem>& lambda_per_crossing,
                     const Fq& F);

// Ruling graphs.
enum class EdgeType { D, N };

struct GraphLabel {
    int sign = -1;
    std::vector<int> texp;
};

struct GraphEdge {
    int from = 0;
    int to = 0;
    EdgeType type = EdgeType::D;
};

struct RulingGraph {
    int num_t = 0;
    std::vector<GraphLabel> labels;
    std::vector<GraphEdge> edges;
};

RulingGraph ruling_graph(const FrontDiagram& d, const NormalRuling& rho);

enum class FactorKind { NegX, X, XInv, NegX2 };
struct DiskEquation {
    std::vector<std::pair<int, FactorKind>> factors;  // (edge, kind)
    GraphLabel rhs;
};
std::vector<DiskEquation> disk_equations(const RulingGraph& g);
bool solves(const RulingGraph& g, const std::vector<FqElem>& t, const std::vector<FqElem>& x, const Fq& F);
BigInt count_solutions(const RulingGraph& g, const Fq& F);
RulingGraph contract(const RulingGraph& g, int edge, int* removed = nullptr);

// Points of Z_rho: t in (F^x)^c, x in (F^x)^switches, z in F^r.
struct ZPoint {
    std::vector<FqElem> t, x, z;
    auto operator<=>(const ZPoint&) const = default;
};

std::vector<ZPoint> z_rho_points(const FrontDiagram& d, const MaslovPotential& mu, const NormalRuling& rho, int m,
                                 const Fq& F);
Mcs lambda_sr(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho, const ZPoint& p,
              const Fq& F);
ZPoint sr_point(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho, const Mcs& sr,
                const Fq& F);
// True when every complex between mark clusters is standard with respect to rho.
bool sr_standard_between_clusters(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho,
                                  const Mcs& sr, const Fq& F);

// Handleslide moves on a tangle (a list of marks in one gap, left to right).
std::vector<std::vector<FqElem>> tangle_matrix(const std::vector<Mark>& tangle, int size, const Fq& F);
void move_type0_insert(std::vector<Mark>& t, std::size_t at, int top, int bottom);
void move_type0_remove(std::vector<Mark>& t, std::size_t at);
Mark move_type1_slide(const Mark& h, int k);
void move_type2_swap(std::vector<Mark>& t, std::size_t i, const Fq& F);
void move_type3_merge(std::vector<Mark>& t, std::size_t i, const Fq& F);
void move_type4_insert_pair(std::vector<Mark>& t, std::size_t at, int top, int bottom, FqElem r, const Fq& F);

// A set of handleslides held as the product of their elementary matrices.
// Proper order: larger top first, ties by smaller bottom; transposed order is the reverse.
class HandleslideCollection {
public:
    HandleslideCollection(int size, bool transposed, const Fq& F);
    void incorporate_right(const Mark& h);  // Type 5, h to the right of V
    void incorporate_left(const Mark& h);   // Type 5, h to the left of V
    FqElem remove_left(int k);              // Type 6, returns the coefficient of (k, k+1)
    void pass_crossing(int k);              // Type 1 on every mark, then reorder
    FqElem coeff(int top, int bottom) const;
    std::vector<Mark> marks() const;        // nonzero marks in the collection's order
    int size() const { return n_; }

private:
    int n_;
    bool transposed_;
    const Fq& F_;
    std::vector<FqElem> M_, Minv_;
    FqElem& m(int i, int j) { return M_[static_cast<std::size_t>(i) * n_ + j]; }
    FqElem& mi(int i, int j) { return Minv_[static_cast<std::size_t>(i) * n_ + j]; }
};

struct MoveRecord {
    int crossing = -1;  // crossing index, -1 for the terminal step
    std::string move;
    std::vector<Mark> tangle;
};

struct PhiResult {
    Mcs aform;
    std::vector<MoveRecord> trace;
};

struct PsiResult {
    Mcs srform;
    NormalRuling rho;
    std::vector<MoveRecord> trace;
};

PhiResult phi(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho, const Mcs& sr,
              const Fq& F);
PsiResult psi(const FrontDiagram& d, const MaslovPotential& mu, int m, const Mcs& aform, const Fq& F);
Augmentation phi_rho(const FrontDiagram& d, const MaslovPotential& mu, int m, const NormalRuling& rho,
                     const ZPoint& p, const Fq& F);

}  // namespace lch
