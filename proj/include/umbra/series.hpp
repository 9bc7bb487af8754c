#ifndef UMBRA_SERIES_HPP
#define UMBRA_SERIES_HPP

#include <vector>

#include "umbra/poly.hpp"
#include "umbra/rational.hpp"

namespace umbra {

/// Truncated formal power series in t with Poly1 coefficients (polynomials
/// in x). Exactly order+1 coefficient slots are kept; every operation is
/// exact below the truncation order and silently discards degrees above it.
class Series {
  public:
    explicit Series(int order);
    Series(int order, std::vector<Poly1> coeffs);

    static Series one(int order);
    /// The series t.
    static Series t(int order);
    /// Scalar coefficient series Σ c_k t^k.
    static Series from_scalars(int order, const std::vector<Rational>& cs);

    int order() const { return order_; }
    const Poly1& coeff(int k) const;
    void set_coeff(int k, Poly1 p);

    bool constant_term_is_zero() const { return coeffs_[0].is_zero(); }
    bool constant_term_is_one() const { return coeffs_[0] == Poly1::constant(Rational(1)); }

    Series operator-() const;
    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    /// Cauchy product truncated at the shared order; orders must match.
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Series& s, const Rational& c);
    friend Series operator*(const Series& s, const Poly1& p);
    friend bool operator==(const Series& a, const Series& b);
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    /// Division by t; requires zero constant term. The result has order-1.
    Series shift_down() const;

  private:
    int order_;
    std::vector<Poly1> coeffs_;
};

/// exp(u) = Σ u^k / k!; requires u to have zero constant term.
Series series_exp(const Series& u);

/// log(1+u) = Σ_{k≥1} (-1)^{k+1} u^k / k; requires u to have zero constant term.
Series series_log1p(const Series& u);

/// u^ρ for rational ρ; requires constant term 1. Computed as exp(ρ·log u).
Series series_pow(const Series& u, const Rational& rho);

/// a · b^{-1}; requires b to have constant term 1.
Series series_div_unit(const Series& a, const Series& b);

}  // namespace umbra

#endif
