#ifndef UMBRA_FAMILIES_HPP
#define UMBRA_FAMILIES_HPP

#include <string>

#include "umbra/operators.hpp"
#include "umbra/rational.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

enum class Family {
    powers,            // x^n / n!
    lower_factorial,   // x(x-1)...(x-n+1)
    rising_factorial,  // x(x+1)...(x+n-1)
    abel,              // x(x-na)^{n-1}
    hermite,           // [t^n] e^{xt - ν t²/2}
    laguerre,          // [t^n] (1-t)^{-α-1} e^{x t/(t-1)}
    bernoulli2,        // [t^n] t/log(1+t) · (1+t)^x
    legendre_derived,  // Legendre-based sequence for Q = D + xD²
    hermite_derived,   // Hermite-based sequence for Q = D/2 + xD²/2 - D³/4
};

struct FamilySpec {
    Family family;
    int trunc = 12;
    Rational nu = Rational(0);     // hermite variance
    Rational alpha = Rational(0);  // laguerre order
    Rational a = Rational(0);      // abel parameter
};

Family family_from_name(const std::string& name);
std::string family_name(Family f);

/// The family's polynomial sequence, extracted exactly from its generating
/// series or closed form.
PolySeq family_sequence(const FamilySpec& spec);

/// The degree-lowering operator with Q p_n = p_{n-1} for this family.
EndoOp family_q(const FamilySpec& spec);

/// Whether the family has a stated Sheffer operator P.
bool family_has_p(Family f);

/// The family's Sheffer operator (powers, hermite, laguerre, bernoulli2).
EndoOp family_p(const FamilySpec& spec);

/// The solution operator of the convolution identity for this family:
/// P_y ∘ E^y when P is stated, the pipeline F otherwise.
BivarOp family_f(const FamilySpec& spec);

/// Runs the convolution identity F p_n = Σ p_k(x) p_{n-k}(y) for the family.
VerifyReport family_convolution_check(const FamilySpec& spec);

}  // namespace umbra

#endif
