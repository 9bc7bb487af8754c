#ifndef UMBRA_POLY_HPP
#define UMBRA_POLY_HPP

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "umbra/rational.hpp"

namespace umbra {

class Poly2;

/// Dense univariate polynomial over Rational, coefficients ascending in x.
/// Canonical zero is the empty coefficient list; degree() of zero is -1.
class Poly1 {
  public:
    Poly1() = default;
    explicit Poly1(std::vector<Rational> coeffs);

    static Poly1 constant(const Rational& c);
    static Poly1 monomial(int degree, const Rational& c = Rational(1));
    static Poly1 variable() { return monomial(1); }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Coefficient of x^k; zero beyond the degree.
    Rational coeff(int k) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational leading() const;

    Poly1 operator-() const;
    Poly1& operator+=(const Poly1& o);
    Poly1& operator-=(const Poly1& o);
    friend Poly1 operator+(Poly1 a, const Poly1& b) { return a += b; }
    friend Poly1 operator-(Poly1 a, const Poly1& b) { return a -= b; }
    friend Poly1 operator*(const Poly1& a, const Poly1& b);
    friend Poly1 operator*(const Poly1& p, const Rational& c);
    friend Poly1 operator*(const Rational& c, const Poly1& p) { return p * c; }
    friend bool operator==(const Poly1& a, const Poly1& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly1& a, const Poly1& b) { return !(a == b); }

    /// Exact Horner evaluation.
    Rational operator()(const Rational& a) const;

    Poly1 derivative() const;
    /// Antiderivative with zero constant term.
    Poly1 antiderivative() const;
    /// p(x + c).
    Poly1 taylor_shift(const Rational& c) const;
    /// Truncation: drops all coefficients of degree > d.
    Poly1 truncate(int d) const;

    std::string str() const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// ∫_x^{x+1} p(u) du, exact.
Poly1 definite_unit_integral(const Poly1& p);

/// p(r(x,y)) expanded exactly.
Poly2 substitute(const Poly1& p, const Poly2& r);

/// Sparse bivariate polynomial over Rational, key = (x-exponent, y-exponent).
/// No zero coefficients are stored.
class Poly2 {
  public:
    using Key = std::pair<int, int>;

    Poly2() = default;
    static Poly2 constant(const Rational& c);
    static Poly2 monomial(int i, int j, const Rational& c = Rational(1));
    /// Embeds a univariate polynomial as a polynomial in x (resp. y).
    static Poly2 from_x(const Poly1& p);
    static Poly2 from_y(const Poly1& p);

    void add_term(int i, int j, const Rational& c);
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int x_degree() const;
    int y_degree() const;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& o);
    Poly2& operator-=(const Poly2& o);
    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);
    friend Poly2 operator*(const Poly2& p, const Rational& c);
    friend Poly2 operator*(const Rational& c, const Poly2& p) { return p * c; }
    friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly2& a, const Poly2& b) { return !(a == b); }

    /// y := 0 (a Poly1 in x).
    Poly1 eval_y0() const;
    /// y := c (a Poly1 in x).
    Poly1 eval_y(const Rational& c) const;
    /// y := x, merging exponents (the multiplication map of K[x] ⊗ K[x]).
    Poly1 collapse_xy() const;
    Poly2 swap_xy() const;
    /// Coefficient of y^j as a Poly1 in x.
    Poly1 coeff_of_y(int j) const;
    /// Coefficient of x^i as a Poly1 in y.
    Poly1 coeff_of_x(int i) const;

    std::string str() const;

  private:
    std::map<Key, Rational> terms_;
};

/// Sparse trivariate polynomial over (x, y, z); carrier for coassociativity
/// and formal-shift checks. No zero coefficients stored.
class Poly3 {
  public:
    using Key = std::array<int, 3>;

    Poly3() = default;

    void add_term(int i, int j, int k, const Rational& c);
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly3& operator+=(const Poly3& o);
    Poly3& operator-=(const Poly3& o);
    friend Poly3 operator+(Poly3 a, const Poly3& b) { return a += b; }
    friend Poly3 operator-(Poly3 a, const Poly3& b) { return a -= b; }
    friend bool operator==(const Poly3& a, const Poly3& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Poly3& a, const Poly3& b) { return !(a == b); }

    std::string str() const;

  private:
    std::map<Key, Rational> terms_;
};

/// p(x + z, y): shifts the x-variable of a Poly2 by the formal variable z.
Poly3 shift_x_by_z(const Poly2& p);

}  // namespace umbra

#endif
