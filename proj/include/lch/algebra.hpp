#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace lch {

using BigRational = mpq_class;
using BigInt = mpz_class;

std::string to_string(const BigRational& r);  // always "num/den"

// Elements of GF(p^k) are encoded as integers 0..q-1: the polynomial
// c0 + c1 x + ... is stored as c0 + c1 p + c2 p^2 + ...
using FqElem = std::uint32_t;

enum class FieldOp { Add, Sub, Mul, Div, Inv, Neg };

class Fq {
public:
    // An empty modulus selects the lexicographically least irreducible.
    Fq(int p, int k, std::vector<int> modulus = {});

    int p() const { return p_; }
    int k() const { return k_; }
    int q() const { return q_; }
    // Monic modulus, constant term first; the leading 1 is included.
    const std::vector<int>& modulus() const { return modulus_; }

    FqElem zero() const { return 0; }
    FqElem one() const { return 1; }
    FqElem from_int(long long n) const;
    std::vector<int> coeffs(FqElem a) const;
    FqElem from_coeffs(const std::vector<int>& c) const;

    FqElem add(FqElem a, FqElem b) const {
        return add_table_.empty() ? add_slow(a, b) : add_table_[a * q_ + b];
    }
    FqElem neg(FqElem a) const { return neg_[a]; }
    FqElem sub(FqElem a, FqElem b) const { return add(a, neg_[b]); }
    FqElem mul(FqElem a, FqElem b) const {
        if (a == 0 || b == 0) return 0;
        int s = log_[a] + log_[b];
        if (s >= q_ - 1) s -= q_ - 1;
        return exp_[s];
    }
    FqElem inv(FqElem a) const;
    FqElem div(FqElem a, FqElem b) const { return mul(a, inv(b)); }
    FqElem pow(FqElem a, long long e) const;
    FqElem arith(FqElem a, FqElem b, FieldOp op) const;

    std::string to_string(FqElem a) const;

private:
    FqElem add_slow(FqElem a, FqElem b) const;
    FqElem polymul_mod(FqElem a, FqElem b) const;

    int p_, k_, q_;
    std::vector<int> modulus_;
    std::vector<FqElem> add_table_;
    std::vector<FqElem> neg_;
    std::vector<int> log_;
    std::vector<FqElem> exp_;
};

bool is_prime(long long n);
// Returns (p, k) with q = p^k, or throws NotPrime.
std::pair<int, int> prime_power(long long q);
Fq field_make(int p, int k);
Fq field_of_order(long long q);
// Lexicographically least monic irreducible of degree k (constant term first).
std::vector<int> least_irreducible(int p, int k);
std::vector<std::vector<int>> monic_irreducibles(int p, int k);

// Integer Laurent polynomial in one variable z.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly monomial(long long exp, long long coeff = 1);

    const std::map<long long, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    long long degree() const;       // max exponent; requires nonzero
    long long min_degree() const;
    long long coeff(long long e) const;
    void add_term(long long exp, long long coeff);

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    std::string to_string() const;

private:
    std::map<long long, long long> terms_;
};

enum class RingOp { Add, Mul };
LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, RingOp op);

BigInt binomial(long long n, long long k);
BigRational rational_pow(long long q, long long e);

// q^{-(d+c)/2} z^c R(z) with z = q^{1/2} - q^{-1/2}, exactly.
BigRational rhs_exact(const LaurentPoly& R, int c, long long q);

}  // namespace lch
