#ifndef UMBRA_OPERATORS_HPP
#define UMBRA_OPERATORS_HPP

#include <optional>
#include <vector>

#include "umbra/poly.hpp"
#include "umbra/rational.hpp"

namespace umbra {

/// Linear operator K[x] → K[x] restricted to degrees ≤ trunc, stored through
/// its images of x^0..x^trunc (the columns of an (N+1)×(N+1) matrix over the
/// monomial basis). Images are truncated to degree ≤ trunc at construction.
///
/// degree_shift is the minimal d with deg(T x^n) ≤ n + d over all stored
/// columns; verifications restrict their quantifiers to the input range where
/// truncation cannot have dropped information.
class EndoOp {
  public:
    EndoOp(int trunc, std::vector<Poly1> images);

    static EndoOp identity(int trunc);
    static EndoOp zero(int trunc);
    static EndoOp derivative(int trunc);
    /// Rank-one evaluation operator p ↦ p(c) (a constant polynomial).
    static EndoOp evaluation(int trunc, const Rational& c = Rational(0));

    int trunc() const { return trunc_; }
    int degree_shift() const { return degree_shift_; }
    const Poly1& image(int n) const;
    const std::vector<Poly1>& images() const { return images_; }

    /// Exact linear extension; requires deg p ≤ trunc.
    Poly1 apply(const Poly1& p) const;

    EndoOp operator-() const;
    EndoOp& operator+=(const EndoOp& o);
    friend EndoOp operator+(EndoOp a, const EndoOp& b) { return a += b; }
    friend EndoOp operator-(const EndoOp& a, const EndoOp& b) { return a + (-b); }
    friend EndoOp operator*(const EndoOp& op, const Rational& c);
    friend EndoOp operator*(const Rational& c, const EndoOp& op) { return op * c; }
    friend bool operator==(const EndoOp& a, const EndoOp& b) {
        return a.trunc_ == b.trunc_ && a.images_ == b.images_;
    }
    friend bool operator!=(const EndoOp& a, const EndoOp& b) { return !(a == b); }

  private:
    int trunc_;
    int degree_shift_;
    std::vector<Poly1> images_;
};

/// Linear operator K[x] → K[x,y] on degrees ≤ trunc, stored through the
/// images of x^0..x^trunc.
class BivarOp {
  public:
    BivarOp(int trunc, std::vector<Poly2> images);

    int trunc() const { return trunc_; }
    const Poly2& image(int n) const;
    const std::vector<Poly2>& images() const { return images_; }

    Poly2 apply(const Poly1& p) const;

    friend bool operator==(const BivarOp& a, const BivarOp& b) {
        return a.trunc_ == b.trunc_ && a.images_ == b.images_;
    }
    friend bool operator!=(const BivarOp& a, const BivarOp& b) { return !(a == b); }

  private:
    int trunc_;
    std::vector<Poly2> images_;
};

/// Operator with action x^n ↦ images[n]; trunc = images.size() - 1.
EndoOp op_from_images(std::vector<Poly1> images);

/// a ∘ b (apply b first).
EndoOp op_compose(const EndoOp& a, const EndoOp& b);

/// Exact triangular inverse; requires a degree-preserving operator
/// (degree_shift = 0 with deg(T x^n) = n for every n).
EndoOp op_invert(const EndoOp& a);

/// E^c: x^n ↦ (x+c)^n.
EndoOp shift_endo(int trunc, const Rational& c);

/// x^n ↦ (x + y + offset)^n; offset 0 gives the formal shift E^y and
/// offset −c gives E^{y−c}.
BivarOp shift_bivar(int trunc, const Rational& offset = Rational(0));

/// Σ_k coeffs[k] D^k acting on degrees ≤ coeffs.size()-1; shift-invariant
/// by construction.
EndoOp op_from_d_series(const std::vector<Rational>& coeffs);

/// Σ_k a[k](x) D^k on degrees ≤ trunc.
EndoOp op_from_xd(int trunc, const std::vector<Poly1>& a);

/// The unique a_0..a_N with T x^n = Σ_k a_k(x)·n!/(n−k)!·x^{n−k} for n ≤ N.
std::vector<Poly1> expand_in_xd(const EndoOp& T);

/// Applies T to the y-variable of p, treating x-monomials as scalars.
/// Requires y-degree ≤ T.trunc().
Poly2 transport_apply_y(const EndoOp& T, const Poly2& p);

/// Applies T to the x-variable of p, treating y-monomials as scalars.
Poly2 apply_to_x(const EndoOp& T, const Poly2& p);

/// The two sides of the formal-shift commutation at degree n,
/// T(E^y x^n) and E^y(T x^n), as elements of K[x,y].
std::pair<Poly2, Poly2> endo_shift_sides(const EndoOp& T, int n);

/// First degree at which T fails to commute with the formal shift E^y,
/// checked on x^n for n ≤ trunc − max(degree_shift, 0); nullopt if none.
std::optional<int> endo_shift_defect(const EndoOp& T);
bool is_shift_invariant(const EndoOp& T);

/// The two sides of F(E^z x^n) = E^z(F x^n) with the shift in the third
/// formal variable z.
std::pair<Poly3, Poly3> bivar_shift_sides(const BivarOp& F, int n);

/// Formal-shift commutation for K[x] → K[x,y] operators, as Poly3 identities
/// F(E^z x^n) = E^z(F x^n) for n ≤ trunc − 1; returns the first failure.
std::optional<int> bivar_shift_defect(const BivarOp& F);
bool is_shift_invariant(const BivarOp& F);

/// Expansion coefficients c_n = (T q_n)(0) with T = Σ_n c_n Q^n exactly on
/// degrees ≤ trunc, where basic is the basic sequence of Q (q_n(0) = δ_{n0},
/// Q q_n = q_{n−1}). Throws if T and Q fail to commute, reporting the
/// witness degree.
std::vector<Rational> expand_in_q(const EndoOp& T, const EndoOp& Q,
                                  const std::vector<Poly1>& basic);

/// Σ_n coeffs[n] Q^n.
EndoOp op_from_q_powers(const std::vector<Rational>& coeffs, const EndoOp& Q);

}  // namespace umbra

#endif
