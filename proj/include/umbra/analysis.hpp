#ifndef UMBRA_ANALYSIS_HPP
#define UMBRA_ANALYSIS_HPP

#include <optional>
#include <vector>

#include "umbra/operators.hpp"
#include "umbra/poly.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

/// Solution surface of the problem Q_x u = Q_y u, u(x,0) = p(x), together
/// with its exact residual and initial gap (both zero when verified).
struct CauchyWitness {
    Poly2 u;
    Poly2 residual;      // Q_x u − Q_y u
    Poly1 initial_gap;   // u(x,0) − p(x)
    bool verified() const { return residual.is_zero() && initial_gap.is_zero(); }
};

/// u = G^{(y)} p with G = Σ q_k(y) Q^k; requires deg p ≤ truncation and
/// basic to be the basic sequence of Q.
CauchyWitness cauchy_solve(const EndoOp& Q, const PolySeq& basic, const Poly1& p);

/// The derivative of y ↦ G^{(y)} at 0, as Σ_k (D q_k)(0) Q^k. The algebraic
/// limit (the y¹-coefficient of each image of G) is computed independently
/// and compared entrywise; a mismatch throws.
EndoOp infinitesimal_generator(const EndoOp& Q, const PolySeq& basic);

/// Checks Σ_k y^k D^k p(x) / k! = p(x+y) exactly.
VerifyReport heaviside_check(const Poly1& p, int trunc);

/// (F⊗I)∘F = (I⊗F)∘F as maps x^n → K[x,y,z], n ≤ trunc.
VerifyReport coassociativity_check(const BivarOp& F);

/// Symmetry of Σ p_k(x) p_{n-k}(y) under x ↔ y; requires the convolution
/// identity for (F, p) (reported distinctly in the note when violated).
VerifyReport cocommutativity_check(const BivarOp& F, const PolySeq& p);

/// Solves (ε⊗I)∘F = I for the counit functional ε on x^0..x^N.
/// Throws when the system is inconsistent or underdetermined.
std::vector<Rational> counit_from_f(const BivarOp& F);

/// Tests multiplicativity F(x^{i+j}) = F(x^i)·F(x^j); a multiplicative F must
/// be E^{y-c} and the shift constant c is returned, otherwise nullopt.
std::optional<Rational> bialgebra_detect(const BivarOp& F);

/// Hopf axiom for Δ = E^{y-c}: multiplication after (S⊗I)∘Δ equals
/// unit∘counit on x^0..x^N, with S: (x-c)^n ↦ (-1)^n (x-c)^n.
VerifyReport antipode_check(const Rational& c, int trunc);

}  // namespace umbra

#endif
