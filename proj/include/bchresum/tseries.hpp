#pragma once

#include "bchresum/ncpoly.hpp"

#include <map>
#include <string>

namespace bchresum {

/// Polynomial in a formal parameter t with NCPoly coefficients:
/// sum_p t^p c_p. Zero coefficients are never stored.
class TSeries {
  public:
    using CoeffMap = std::map<int, NCPoly>;

    TSeries(Alphabet alphabet, int trunc_degree);

    /// t^power * c
    static TSeries monomial(int power, NCPoly c);

    Alphabet alphabet() const { return alphabet_; }
    int trunc_degree() const { return degree_; }
    const CoeffMap &coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    std::size_t term_count() const;

    /// Coefficient of t^power (zero polynomial when absent).
    NCPoly coeff(int power) const;
    void add_term(int power, const NCPoly &c);

    NCPoly zero_poly() const { return NCPoly(alphabet_, degree_); }

    TSeries &operator+=(const TSeries &o);
    TSeries &operator-=(const TSeries &o);
    TSeries &operator*=(const Scalar &s);
    TSeries operator-() const;

    friend TSeries operator+(TSeries a, const TSeries &b) { return a += b; }
    friend TSeries operator-(TSeries a, const TSeries &b) { return a -= b; }
    friend TSeries operator*(TSeries a, const Scalar &s) { return a *= s; }
    friend TSeries operator*(const Scalar &s, TSeries a) { return a *= s; }
    friend TSeries operator*(const TSeries &a, const TSeries &b);

    friend bool operator==(const TSeries &, const TSeries &) = default;

    /// e.g. "t (u) + t^2 (1/4 wu - 1/4 uw)"
    std::string to_text() const;

  private:
    void check_compatible(const TSeries &o) const;

    Alphabet alphabet_;
    int degree_;
    CoeffMap coeffs_;
};

TSeries tseries_mul(const TSeries &a, const TSeries &b);
TSeries tseries_commutator(const TSeries &a, const TSeries &b);
/// Definite integral from 0: t^p c -> t^{p+1} c/(p+1).
TSeries tseries_integrate(const TSeries &a);
TSeries tseries_derivative(const TSeries &a);
/// Sum of all coefficients (t = 1).
NCPoly tseries_eval_t1(const TSeries &a);

/// exp(s t ad w) applied termwise: t^p c -> sum_j s^j/j! t^{p+j} (ad w)^j c.
/// Only meaningful for the UW alphabet.
TSeries apply_exp_ad_w(const TSeries &v, const Scalar &s);

/// Restricts every coefficient to terms with the given count of `letter`.
TSeries letter_degree_part(const TSeries &a, int letter, int degree);
/// Restricts every coefficient to terms with count of `letter` at most `max_degree`.
TSeries letter_degree_at_most(const TSeries &a, int letter, int max_degree);
TSeries truncated(const TSeries &a, int new_degree);

} // namespace bchresum
