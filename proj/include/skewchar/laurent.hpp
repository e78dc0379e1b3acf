#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace skewchar {

using Monomial = std::vector<int>;

// Exact Laurent polynomial in x1..xn with arbitrary-precision integer coefficients.
// Terms are kept in a map ordered lexicographically by exponent vector; zero
// coefficients are never stored.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, mpz_class>;

    explicit LaurentPoly(int n_vars = 0) : n_(n_vars) {}

    static LaurentPoly constant(int n_vars, const mpz_class& c);
    static LaurentPoly monomial(Monomial exps, const mpz_class& c = 1);
    // x_i^power, i is 1-based.
    static LaurentPoly variable(int n_vars, int i, int power = 1);

    int n_vars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    mpz_class coeff(const Monomial& m) const;

    // Adds c*x^m; the monomial length must equal n_vars.
    void add_term(const Monomial& m, const mpz_class& c);

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const mpz_class& c);
    LaurentPoly operator-() const;

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(LaurentPoly a, const mpz_class& c) { return a *= c; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    // Sum of all coefficients, i.e. the value at (1,...,1).
    mpz_class coefficient_sum() const;

    // "-2*x1^-1*x2 + 3". Terms are listed comparing exponents from the last
    // variable to the first, larger exponents first.
    std::string to_string() const;

private:
    void check_same(const LaurentPoly& o) const;

    int n_;
    TermMap terms_;
};

// Throws NonExactDivision if some coefficient is not divisible by d.
LaurentPoly poly_div_exact_int(const LaurentPoly& a, const mpz_class& d);

// Throws PreconditionError on a zero coordinate or a length mismatch.
mpq_class poly_eval(const LaurentPoly& p, const std::vector<mpq_class>& point);

// x_i -> x_i^{-1}.
LaurentPoly bar_involution(const LaurentPoly& p);

// Substitutes x_i -> x_i^k for every variable.
LaurentPoly scale_exponents(const LaurentPoly& p, int k);

}  // namespace skewchar
