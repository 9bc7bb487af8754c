#include "umbra/families.hpp"

#include <stdexcept>

#include "umbra/series.hpp"

namespace umbra {

Family family_from_name(const std::string& name) {
    if (name == "powers") return Family::powers;
    if (name == "lower_factorial") return Family::lower_factorial;
    if (name == "rising_factorial") return Family::rising_factorial;
    if (name == "abel") return Family::abel;
    if (name == "hermite") return Family::hermite;
    if (name == "laguerre") return Family::laguerre;
    if (name == "bernoulli2") return Family::bernoulli2;
    if (name == "legendre_derived") return Family::legendre_derived;
    if (name == "hermite_derived") return Family::hermite_derived;
    throw std::invalid_argument("unknown family \"" + name + "\"");
}

std::string family_name(Family f) {
    switch (f) {
        case Family::powers: return "powers";
        case Family::lower_factorial: return "lower_factorial";
        case Family::rising_factorial: return "rising_factorial";
        case Family::abel: return "abel";
        case Family::hermite: return "hermite";
        case Family::laguerre: return "laguerre";
        case Family::bernoulli2: return "bernoulli2";
        case Family::legendre_derived: return "legendre_derived";
        case Family::hermite_derived: return "hermite_derived";
    }
    throw std::logic_error("family_name: bad enum value");
}

namespace {

PolySeq series_coefficients(const Series& s, int trunc) {
    std::vector<Poly1> polys;
    for (int n = 0; n <= trunc; ++n) polys.push_back(s.coeff(n));
    return PolySeq(trunc, std::move(polys));
}

Series hermite_series(int order, const Rational& nu) {
    // e^{xt - ν t²/2}
    Series u(order);
    if (order >= 1) u.set_coeff(1, Poly1::variable());
    if (order >= 2) u.set_coeff(2, Poly1::constant(-nu * Rational(1, 2)));
    return series_exp(u);
}

Series laguerre_series(int order, const Rational& alpha) {
    // (1-t)^{-α-1} e^{x t/(t-1)} with t/(t-1) = -Σ_{k≥1} t^k
    const Series one_minus_t = Series::one(order) - Series::t(order);
    Series f(order);
    for (int k = 1; k <= order; ++k) f.set_coeff(k, Poly1::constant(Rational(-1)));
    return series_pow(one_minus_t, -alpha - Rational(1)) * series_exp(f * Poly1::variable());
}

Series bernoulli2_series(int order) {
    // t/log(1+t) · (1+t)^x; the quotient is 1/v with log(1+t) = t·v(t),
    // so v needs one extra order before the shift down.
    const Series v = series_log1p(Series::t(order + 1)).shift_down();
    const Series quotient = series_div_unit(Series::one(order), v);
    const Series power = series_exp(series_log1p(Series::t(order)) * Poly1::variable());
    return quotient * power;
}

PolySeq legendre_derived_sequence(int trunc) {
    // Three-term recurrence (k+1) P_{k+1} = (2k+1) u P_k - k P_{k-1},
    // then p_n = Σ_k c_{n,k} (x+1)^k (x-1)^{n-k} / (n!)².
    std::vector<Poly1> legendre;
    legendre.push_back(Poly1::constant(Rational(1)));
    if (trunc >= 1) legendre.push_back(Poly1::variable());
    for (int k = 1; k < trunc; ++k) {
        const Poly1 next = (Poly1::variable() * legendre[k]) * Rational(2 * k + 1, k + 1) -
                           legendre[k - 1] * Rational(k, k + 1);
        legendre.push_back(next);
    }

    std::vector<Poly1> xp1_pow{Poly1::constant(Rational(1))};
    std::vector<Poly1> xm1_pow{Poly1::constant(Rational(1))};
    const Poly1 xp1({Rational(1), Rational(1)});
    const Poly1 xm1({Rational(-1), Rational(1)});
    for (int k = 1; k <= trunc; ++k) {
        xp1_pow.push_back(xp1_pow.back() * xp1);
        xm1_pow.push_back(xm1_pow.back() * xm1);
    }

    std::vector<Poly1> polys;
    for (int n = 0; n <= trunc; ++n) {
        Poly1 hom;
        for (int k = 0; k <= n; ++k) {
            const Rational c = legendre[n].coeff(k);
            if (!c.is_zero()) hom += xp1_pow[k] * xm1_pow[n - k] * c;
        }
        if (hom.degree() != n)
            throw std::logic_error("legendre_derived: homogenization degenerated");
        polys.push_back(hom * (Rational::factorial(n) * Rational::factorial(n)).inv());
    }
    return PolySeq(trunc, std::move(polys));
}

PolySeq hermite_derived_sequence(int trunc) {
    // [t^n] e^{2xt - t²} / n!: the Hermite-type sequence annihilated one step
    // at a time by D/2 + xD²/2 - D³/4.
    Series u(trunc);
    if (trunc >= 1) u.set_coeff(1, Poly1::monomial(1, Rational(2)));
    if (trunc >= 2) u.set_coeff(2, Poly1::constant(Rational(-1)));
    const Series s = series_exp(u);
    std::vector<Poly1> polys;
    for (int n = 0; n <= trunc; ++n)
        polys.push_back(s.coeff(n) * Rational::factorial(n).inv());
    return PolySeq(trunc, std::move(polys));
}

}  // namespace

PolySeq family_sequence(const FamilySpec& spec) {
    const int n = spec.trunc;
    if (n < 0) throw std::invalid_argument("family_sequence: negative truncation");
    switch (spec.family) {
        case Family::powers:
            return divided_powers_seq(n);
        case Family::lower_factorial: {
            std::vector<Poly1> polys{Poly1::constant(Rational(1))};
            for (int k = 1; k <= n; ++k)
                polys.push_back(polys.back() * Poly1({Rational(-(k - 1)), Rational(1)}));
            return PolySeq(n, std::move(polys));
        }
        case Family::rising_factorial: {
            std::vector<Poly1> polys{Poly1::constant(Rational(1))};
            for (int k = 1; k <= n; ++k)
                polys.push_back(polys.back() * Poly1({Rational(k - 1), Rational(1)}));
            return PolySeq(n, std::move(polys));
        }
        case Family::abel: {
            std::vector<Poly1> polys{Poly1::constant(Rational(1))};
            for (int k = 1; k <= n; ++k) {
                Poly1 p = Poly1::variable();
                const Poly1 shifted({-spec.a * Rational(k), Rational(1)});
                for (int i = 0; i < k - 1; ++i) p = p * shifted;
                polys.push_back(std::move(p));
            }
            return PolySeq(n, std::move(polys));
        }
        case Family::hermite:
            return series_coefficients(hermite_series(n, spec.nu), n);
        case Family::laguerre:
            return series_coefficients(laguerre_series(n, spec.alpha), n);
        case Family::bernoulli2:
            return series_coefficients(bernoulli2_series(n), n);
        case Family::legendre_derived:
            return legendre_derived_sequence(n);
        case Family::hermite_derived:
            return hermite_derived_sequence(n);
    }
    throw std::logic_error("family_sequence: bad enum value");
}

EndoOp family_q(const FamilySpec& spec) {
    const int n = spec.trunc;
    switch (spec.family) {
        case Family::powers:
        case Family::hermite:
            return EndoOp::derivative(n);
        case Family::laguerre: {
            // Q = D/(D - I) = -Σ_{k≥1} D^k
            std::vector<Rational> coeffs(n + 1, Rational(-1));
            coeffs[0] = Rational(0);
            return op_from_d_series(coeffs);
        }
        case Family::bernoulli2:
            return shift_endo(n, Rational(1)) - EndoOp::identity(n);
        case Family::legendre_derived:
            return op_from_xd(n, {Poly1(), Poly1::constant(Rational(1)), Poly1::variable()});
        case Family::hermite_derived:
            return op_from_xd(n, {Poly1(), Poly1::constant(Rational(1, 2)),
                                  Poly1::monomial(1, Rational(1, 2)),
                                  Poly1::constant(Rational(-1, 4))});
        case Family::lower_factorial:
        case Family::rising_factorial:
        case Family::abel:
            return q_from_sequence(family_sequence(spec));
    }
    throw std::logic_error("family_q: bad enum value");
}

bool family_has_p(Family f) {
    return f == Family::powers || f == Family::hermite || f == Family::laguerre ||
           f == Family::bernoulli2;
}

EndoOp family_p(const FamilySpec& spec) {
    const int n = spec.trunc;
    switch (spec.family) {
        case Family::powers:
            return EndoOp::identity(n);
        case Family::hermite: {
            // e^{-ν D²/2}: coefficient of D^{2k} is (-ν/2)^k / k!
            std::vector<Rational> coeffs(n + 1, Rational(0));
            Rational c(1);
            for (int k = 0; 2 * k <= n; ++k) {
                coeffs[2 * k] = c;
                c *= -spec.nu * Rational(1, 2) * Rational(1, k + 1);
            }
            return op_from_d_series(coeffs);
        }
        case Family::laguerre: {
            // (I-D)^{α+1} through the exact binomial series
            const Series s =
                series_pow(Series::one(n) - Series::t(n), spec.alpha + Rational(1));
            std::vector<Rational> coeffs;
            for (int k = 0; k <= n; ++k) coeffs.push_back(s.coeff(k).coeff(0));
            return op_from_d_series(coeffs);
        }
        case Family::bernoulli2: {
            std::vector<Poly1> images;
            for (int k = 0; k <= n; ++k)
                images.push_back(definite_unit_integral(Poly1::monomial(k)));
            return EndoOp(n, std::move(images));
        }
        default:
            throw std::invalid_argument("family_p: family \"" + family_name(spec.family) +
                                        "\" has no stated Sheffer operator");
    }
}

BivarOp family_f(const FamilySpec& spec) {
    const int n = spec.trunc;
    if (family_has_p(spec.family)) {
        const EndoOp p = family_p(spec);
        const BivarOp shift = shift_bivar(n);
        std::vector<Poly2> images;
        for (int m = 0; m <= n; ++m) images.push_back(transport_apply_y(p, shift.image(m)));
        return BivarOp(n, std::move(images));
    }
    return generalized_sheffer(family_sequence(spec)).F;
}

VerifyReport family_convolution_check(const FamilySpec& spec) {
    return verify_convolution(family_f(spec), family_sequence(spec));
}

}  // namespace umbra
