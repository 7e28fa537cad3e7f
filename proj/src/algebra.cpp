#include "lch/algebra.hpp"

#include <sstream>

#include "lch/errors.hpp"

namespace lch {

std::string to_string(const BigRational& r) {
    mpq_class c(r);
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<int, int> prime_power(long long q) {
    if (q < 2) throw NotPrime("order " + std::to_string(q) + " is not a prime power");
    long long p = 2;
    while (q % p != 0) ++p;
    int k = 0;
    long long r = q;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    if (r != 1) throw NotPrime("order " + std::to_string(q) + " is not a prime power");
    return {static_cast<int>(p), k};
}

namespace {

using Poly = std::vector<int>;  // constant term first, no trailing zeros

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
    trim(a);
    int dm = static_cast<int>(m.size()) - 1;
    // m is monic
    while (static_cast<int>(a.size()) - 1 >= dm) {
        int shift = static_cast<int>(a.size()) - 1 - dm;
        int c = a.back();
        for (int i = 0; i <= dm; ++i) {
            a[i + shift] = ((a[i + shift] - c * m[i]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

// Odometer over all monic polynomials of degree d, lowest coefficient varying fastest.
bool next_coeffs(std::vector<int>& c, int p) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (++c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

bool irreducible(const Poly& f, int p) {
    int n = static_cast<int>(f.size()) - 1;
    for (int d = 1; 2 * d <= n; ++d) {
        std::vector<int> c(d, 0);
        do {
            Poly g(c);
            g.push_back(1);
            if (poly_mod(f, g, p).empty()) return false;
        } while (next_coeffs(c, p));
    }
    return true;
}

// Lexicographic order on coefficient vectors with the constant term first.
bool lex_next(std::vector<int>& c, int p) {
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) {
        if (++c[i] < p) return true;
        c[i] = 0;
    }
    return false;
}

}  // namespace

std::vector<int> least_irreducible(int p, int k) {
    std::vector<int> c(k, 0);
    do {
        Poly f(c);
        f.push_back(1);
        if (irreducible(f, p)) return f;
    } while (lex_next(c, p));
    throw Error("Internal", "no irreducible polynomial found");
}

std::vector<std::vector<int>> monic_irreducibles(int p, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> c(k, 0);
    do {
        Poly f(c);
        f.push_back(1);
        if (irreducible(f, p)) out.push_back(f);
    } while (lex_next(c, p));
    return out;
}

Fq::Fq(int p, int k, std::vector<int> modulus) : p_(p), k_(k) {
    if (k < 1) throw DegreeZero("extension degree must be at least 1");
    if (!is_prime(p)) throw NotPrime(std::to_string(p) + " is not prime");
    long long q = 1;
    for (int i = 0; i < k; ++i) {
        q *= p;
        if (q > 1000000) throw ScaleError("field too large");
    }
    q_ = static_cast<int>(q);
    if (modulus.empty()) {
        modulus_ = least_irreducible(p, k);
    } else {
        bool ok = static_cast<int>(modulus.size()) == k + 1 && modulus.back() == 1;
        for (int x : modulus) ok = ok && x >= 0 && x < p;
        if (!ok || !irreducible(Poly(modulus), p)) throw Error("NotIrreducible", "modulus is not a monic irreducible");
        modulus_ = std::move(modulus);
    }

    neg_.resize(q_);
    for (int a = 0; a < q_; ++a) {
        auto c = coeffs(a);
        for (auto& x : c) x = (p_ - x) % p_;
        neg_[a] = from_coeffs(c);
    }
    if (q_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(q_) * q_);
        for (int a = 0; a < q_; ++a)
            for (int b = 0; b < q_; ++b) add_table_[a * q_ + b] = add_slow(a, b);
    }

    // Find a generator of the multiplicative group and build log/exp tables.
    log_.assign(q_, -1);
    exp_.assign(q_ - 1, 0);
    for (int g = 1; g < q_; ++g) {
        FqElem x = 1;
        bool ok = true;
        std::vector<char> seen(q_, 0);
        for (int e = 0; e < q_ - 1; ++e) {
            if (seen[x]) {
                ok = false;
                break;
            }
            seen[x] = 1;
            exp_[e] = x;
            x = polymul_mod(x, g);
        }
        if (ok) break;
    }
    for (int e = 0; e < q_ - 1; ++e) log_[exp_[e]] = e;
}

FqElem Fq::from_int(long long n) const {
    long long r = ((n % p_) + p_) % p_;
    return static_cast<FqElem>(r);
}

std::vector<int> Fq::coeffs(FqElem a) const {
    std::vector<int> c(k_, 0);
    for (int i = 0; i < k_; ++i) {
        c[i] = static_cast<int>(a % p_);
        a /= p_;
    }
    return c;
}

FqElem Fq::from_coeffs(const std::vector<int>& c) const {
    FqElem v = 0;
    for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i) v = v * p_ + ((c[i] % p_) + p_) % p_;
    return v;
}

FqElem Fq::add_slow(FqElem a, FqElem b) const {
    FqElem r = 0, base = 1;
    for (int i = 0; i < k_; ++i) {
        r += ((a % p_ + b % p_) % p_) * base;
        a /= p_;
        b /= p_;
        base *= p_;
    }
    return r;
}

FqElem Fq::polymul_mod(FqElem a, FqElem b) const {
    auto ca = coeffs(a), cb = coeffs(b);
    Poly prod(2 * k_, 0);
    for (int i = 0; i < k_; ++i)
        for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
    Poly r = poly_mod(prod, modulus_, p_);
    r.resize(k_, 0);
    return from_coeffs(r);
}

FqElem Fq::inv(FqElem a) const {
    if (a == 0) throw DivByZero("inverse of zero");
    int l = log_[a];
    return exp_[l == 0 ? 0 : q_ - 1 - l];
}

FqElem Fq::pow(FqElem a, long long e) const {
    if (e < 0) return pow(inv(a), -e);
    if (a == 0) return e == 0 ? 1 : 0;
    long long l = (static_cast<long long>(log_[a]) * (e % (q_ - 1))) % (q_ - 1);
    return exp_[l];
}

FqElem Fq::arith(FqElem a, FqElem b, FieldOp op) const {
    switch (op) {
        case FieldOp::Add: return add(a, b);
        case FieldOp::Sub: return sub(a, b);
        case FieldOp::Mul: return mul(a, b);
        case FieldOp::Div: return div(a, b);
        case FieldOp::Inv: return inv(a);
        case FieldOp::Neg: return neg(a);
    }
    return 0;
}

std::string Fq::to_string(FqElem a) const {
    if (k_ == 1) return std::to_string(a);
    auto c = coeffs(a);
    std::string s;
    for (int i = k_ - 1; i >= 0; --i) {
        if (c[i] == 0) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || c[i] != 1) s += std::to_string(c[i]);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

Fq field_make(int p, int k) { return Fq(p, k); }

Fq field_of_order(long long q) {
    auto [p, k] = prime_power(q);
    return Fq(p, k);
}

LaurentPoly LaurentPoly::monomial(long long exp, long long coeff) {
    LaurentPoly r;
    r.add_term(exp, coeff);
    return r;
}

long long LaurentPoly::degree() const { return terms_.rbegin()->first; }
long long LaurentPoly::min_degree() const { return terms_.begin()->first; }

long long LaurentPoly::coeff(long long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(long long exp, long long coeff) {
    if (coeff == 0) return;
    auto& c = terms_[exp];
    c += coeff;
    if (c == 0) terms_.erase(exp);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto [e1, c1] : terms_)
        for (auto [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [e, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        long long a = c < 0 ? -c : c;
        if (a != 1 || e == 0) os << a;
        if (e != 0) os << "z";
        if (e != 0 && e != 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, RingOp op) {
    return op == RingOp::Add ? a + b : a * b;
}

BigInt binomial(long long n, long long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigRational rational_pow(long long q, long long e) {
    BigInt base = static_cast<long>(q);
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
    BigRational r = e < 0 ? BigRational(BigInt(1), p) : BigRational(p);
    r.canonicalize();
    return r;
}

BigRational rhs_exact(const LaurentPoly& R, int c, long long q) {
    if (R.is_zero()) return 0;
    const long long d = R.degree();
    const int parity = static_cast<int>(((R.degree() % 2) + 2) % 2);
    for (auto [e, n] : R.terms()) {
        if ((((e % 2) + 2) % 2) != parity)
            throw ParityError("ruling polynomial has exponents of mixed parity");
        if (e + c < 0) throw NegativeExponentError("z^c R has a negative exponent");
    }
    BigRational total = 0;
    for (auto [e0, n] : R.terms()) {
        long long e = e0 + c;
        for (long long k = 0; k <= e; ++k) {
            BigRational term = BigRational(binomial(e, k)) * rational_pow(q, (e - 2 * k - d - c) / 2);
            if (k % 2) term = -term;
            total += term * BigRational(BigInt(static_cast<long>(n)));
        }
    }
    total.canonicalize();
    return total;
}

}  // namespace lch
