#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "lch/algebra.hpp"
#include "lch/dga.hpp"
#include "lch/front.hpp"

namespace lch {

struct Augmentation {
    std::vector<FqElem> t;    // per component, nonzero
    std::vector<FqElem> gen;  // per generator, 0 off the augmentable degrees
    auto operator<=>(const Augmentation&) const = default;
};

struct BruteOptions {
    long long cap = 100000000;
    int threads = 0;  // 0: LCH_THREADS or hardware concurrency
};

int worker_count(int requested);

std::vector<int> augmentable_generators(const Dga& g, int m);
bool is_augmentation(const Dga& g, const Augmentation& a, const Fq& F);

std::vector<Augmentation> enumerate_augmentations(const Dga& g, int m, const Fq& F, const BruteOptions& opt = {});
BigInt count_augmentations(const Dga& g, int m, const Fq& F, const BruteOptions& opt = {});

std::optional<long long> variety_dim(const FrontDiagram& d, const MaslovPotential& mu, int m);

enum class Method { Brute, Mcs, Ruling };
std::string method_name(Method m);

struct AugVarietyReport {
    int m = 0;
    long long q = 0;
    BigInt count;
    std::optional<long long> dim;
    BigRational aug_number;
    std::vector<std::pair<std::string, BigInt>> per_ruling;
};

AugVarietyReport aug_number(const FrontDiagram& d, const MaslovPotential& mu, int m, const Fq& F, Method method,
                            const BruteOptions& opt = {});

struct VerifyRow {
    int m = 0;
    long long q = 0;
    std::optional<BigInt> brute, mcs, ruling;
    std::optional<long long> dim;
    BigRational aug_number;
    BigRational rhs;
    bool equal = false;
    std::string mismatch;
};

std::vector<VerifyRow> verify_main_theorem(const FrontDiagram& d, const MaslovPotential& mu, int m,
                                           const std::vector<long long>& q_list,
                                           const std::vector<Method>& methods = {Method::Brute, Method::Mcs,
                                                                                 Method::Ruling},
                                           const BruteOptions& opt = {});

}  // namespace lch
