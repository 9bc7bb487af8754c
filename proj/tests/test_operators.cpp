#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "umbra/operators.hpp"
#include "umbra/umbral.hpp"

using namespace umbra;

namespace {

constexpr int N = 8;

Rational random_rational(std::mt19937_64& gen) {
    return Rational(static_cast<long>(gen() % 19) - 9, static_cast<long>(gen() % 4) + 1);
}

std::vector<Rational> random_d_coeffs(std::mt19937_64& gen, int trunc, bool unit_leading_term) {
    std::vector<Rational> cs;
    for (int k = 0; k <= trunc; ++k) cs.push_back(random_rational(gen));
    if (unit_leading_term && cs[0].is_zero()) cs[0] = Rational(1);
    return cs;
}

}  // namespace

TEST_CASE("op_from_images basics") {
    std::vector<Poly1> ident;
    for (int n = 0; n <= N; ++n) ident.push_back(Poly1::monomial(n));
    CHECK(op_from_images(ident) == EndoOp::identity(N));

    std::vector<Poly1> deriv{Poly1()};
    for (int n = 1; n <= N; ++n) deriv.push_back(Poly1::monomial(n - 1, Rational(n)));
    CHECK(op_from_images(deriv) == EndoOp::derivative(N));

    std::vector<Poly1> shifted;
    for (int n = 0; n <= N; ++n) shifted.push_back(Poly1::monomial(n).taylor_shift(Rational(1)));
    CHECK(op_from_images(shifted) == shift_endo(N, Rational(1)));
}

TEST_CASE("compose and invert") {
    CHECK(op_invert(EndoOp::identity(N)) == EndoOp::identity(N));
    CHECK(op_compose(shift_endo(N, Rational(1)), shift_endo(N, Rational(-1))) ==
          EndoOp::identity(N));

    // e^{-D²/2} at order 4; its inverse is the series at the opposite sign
    const std::vector<Rational> minus = {Rational(1), Rational(0), Rational(-1, 2), Rational(0),
                                         Rational(1, 8)};
    const std::vector<Rational> plus = {Rational(1), Rational(0), Rational(1, 2), Rational(0),
                                        Rational(1, 8)};
    const EndoOp gauss = op_from_d_series(minus);
    CHECK(op_invert(gauss) == op_from_d_series(plus));
    CHECK(op_compose(op_invert(gauss), gauss) == EndoOp::identity(4));

    CHECK_THROWS_AS(op_invert(EndoOp::derivative(N)), std::domain_error);
}

TEST_CASE("inverse algebra on seeded degree-preserving operators") {
    std::mt19937_64 gen(23);
    for (int i = 0; i < 10; ++i) {
        std::vector<Poly1> a_imgs, b_imgs;
        for (int n = 0; n <= N; ++n) {
            std::vector<Rational> ca, cb;
            for (int k = 0; k <= n; ++k) {
                ca.push_back(random_rational(gen));
                cb.push_back(random_rational(gen));
            }
            if (ca.back().is_zero()) ca.back() = Rational(1);
            if (cb.back().is_zero()) cb.back() = Rational(1);
            a_imgs.emplace_back(std::move(ca));
            b_imgs.emplace_back(std::move(cb));
        }
        const EndoOp a = op_from_images(a_imgs), b = op_from_images(b_imgs);
        CHECK(op_invert(op_invert(a)) == a);
        CHECK(op_invert(op_compose(a, b)) == op_compose(op_invert(b), op_invert(a)));
    }
}

TEST_CASE("shift operators") {
    CHECK(shift_endo(N, Rational(0)) == EndoOp::identity(N));

    Poly2 expected;
    expected.add_term(2, 0, Rational(1));
    expected.add_term(1, 1, Rational(2));
    expected.add_term(0, 2, Rational(1));
    CHECK(shift_bivar(N).apply(Poly1::monomial(2)) == expected);

    const Poly1 lower = Poly1::variable() * Poly1({Rational(-1), Rational(1)});  // x(x-1)
    CHECK(shift_endo(N, Rational(1)).apply(lower) == Poly1({Rational(0), Rational(1), Rational(1)}));
}

TEST_CASE("transport to the y variable") {
    Poly2 xyy;  // x y²
    xyy.add_term(1, 2, Rational(1));
    Poly2 expected;
    expected.add_term(1, 1, Rational(2));
    CHECK(transport_apply_y(EndoOp::derivative(N), xyy) == expected);

    Poly2 mixed;  // 3x²y + 5x² + y²
    mixed.add_term(2, 1, Rational(3));
    mixed.add_term(2, 0, Rational(5));
    mixed.add_term(0, 2, Rational(1));
    Poly2 constant_slice;
    constant_slice.add_term(2, 0, Rational(5));
    CHECK(transport_apply_y(EndoOp::evaluation(N), mixed) == constant_slice);

    Poly2 y;
    y.add_term(0, 1, Rational(1));
    Poly2 y_plus_1;
    y_plus_1.add_term(0, 1, Rational(1));
    y_plus_1.add_term(0, 0, Rational(1));
    CHECK(transport_apply_y(shift_endo(N, Rational(1)), y) == y_plus_1);

    Poly2 deep;
    deep.add_term(0, N + 1, Rational(1));
    CHECK_THROWS_AS(transport_apply_y(EndoOp::derivative(N), deep), std::invalid_argument);
}

TEST_CASE("shift invariance of endomorphisms") {
    CHECK(is_shift_invariant(EndoOp::derivative(N)));

    std::vector<Poly1> mul_x;
    for (int n = 0; n <= N; ++n) mul_x.push_back(Poly1::monomial(n + 1));
    CHECK_FALSE(is_shift_invariant(op_from_images(mul_x)));

    // Q = D + xD² fails on x²
    const EndoOp q = op_from_xd(N, {Poly1(), Poly1::constant(Rational(1)), Poly1::variable()});
    CHECK(endo_shift_defect(q) == 2);
}

TEST_CASE("numeric and formal shift commutation agree") {
    std::mt19937_64 gen(31);
    for (int i = 0; i < 10; ++i) {
        const EndoOp t = op_from_d_series(random_d_coeffs(gen, N, false));
        CHECK(is_shift_invariant(t));
        for (int j = 0; j < 5; ++j) {
            const Rational c = random_rational(gen);
            const EndoOp shift = shift_endo(N, c);
            CHECK(op_compose(t, shift) == op_compose(shift, t));
        }
    }

    // conversely, failing the formal test shows up at a numeric shift
    std::vector<Poly1> mul_x;
    for (int n = 0; n <= N; ++n) mul_x.push_back(Poly1::monomial(n + 1));
    const EndoOp t = op_from_images(mul_x);
    const EndoOp e1 = shift_endo(N, Rational(1));
    CHECK(op_compose(t, e1) != op_compose(e1, t));
}

TEST_CASE("expansion in powers of a delta operator") {
    const PolySeq divided = divided_powers_seq(N);

    const auto taylor = expand_in_q(shift_endo(N, Rational(1)), EndoOp::derivative(N),
                                    divided.polys());
    for (int n = 0; n <= N; ++n) CHECK(taylor[n] == Rational::factorial(n).inv());

    const auto ident = expand_in_q(EndoOp::identity(N), EndoOp::derivative(N), divided.polys());
    CHECK(ident[0] == Rational(1));
    for (int n = 1; n <= N; ++n) CHECK(ident[n] == Rational(0));

    // P p(x) = ∫_x^{x+1} p: coefficients 1/(n+1)!, cross-checked against the
    // integral evaluated on x^n/n! at 0.
    std::vector<Poly1> integral_images;
    for (int n = 0; n <= N; ++n) integral_images.push_back(definite_unit_integral(Poly1::monomial(n)));
    const EndoOp bernoulli_p = op_from_images(integral_images);
    const auto c = expand_in_q(bernoulli_p, EndoOp::derivative(N), divided.polys());
    for (int n = 0; n <= N; ++n) {
        CHECK(c[n] == Rational::factorial(n + 1).inv());
        CHECK(c[n] == definite_unit_integral(divided.at(n))(Rational(0)));
    }
    CHECK(op_from_q_powers(c, EndoOp::derivative(N)) == bernoulli_p);
}

TEST_CASE("expand_in_q rejects non-commuting operators") {
    std::vector<Poly1> mul_x;
    for (int n = 0; n <= N; ++n) mul_x.push_back(Poly1::monomial(n + 1));
    CHECK_THROWS_WITH_AS(
        expand_in_q(op_from_images(mul_x), EndoOp::derivative(N), divided_powers_seq(N).polys()),
        doctest::Contains("witness degree 0"), std::domain_error);
}

TEST_CASE("expansion as sums of a_k(x) D^k") {
    const EndoOp q1 = op_from_xd(N, {Poly1(), Poly1::constant(Rational(1)), Poly1::variable()});
    const auto a1 = expand_in_xd(q1);
    CHECK(a1[0].is_zero());
    CHECK(a1[1] == Poly1::constant(Rational(1)));
    CHECK(a1[2] == Poly1::variable());
    for (int k = 3; k <= N; ++k) CHECK(a1[k].is_zero());

    const EndoOp q2 = op_from_xd(N, {Poly1(), Poly1::constant(Rational(1, 2)),
                                     Poly1::monomial(1, Rational(1, 2)),
                                     Poly1::constant(Rational(-1, 4))});
    const auto a2 = expand_in_xd(q2);
    CHECK(a2[1] == Poly1::constant(Rational(1, 2)));
    CHECK(a2[2] == Poly1::monomial(1, Rational(1, 2)));
    CHECK(a2[3] == Poly1::constant(Rational(-1, 4)));

    const auto a3 = expand_in_xd(EndoOp::identity(N));
    CHECK(a3[0] == Poly1::constant(Rational(1)));
    for (int k = 1; k <= N; ++k) CHECK(a3[k].is_zero());

    // round trip on seeded operators with polynomial coefficients
    std::mt19937_64 gen(37);
    for (int i = 0; i < 10; ++i) {
        std::vector<Poly1> coeffs;
        for (int k = 0; k <= N; ++k) {
            std::vector<Rational> cs;
            for (int d = 0; d <= static_cast<int>(gen() % 3); ++d) cs.push_back(random_rational(gen));
            coeffs.emplace_back(std::move(cs));
        }
        const EndoOp t = op_from_xd(N, coeffs);
        CHECK(op_from_xd(N, expand_in_xd(t)) == t);
    }
}

TEST_CASE("operators from constant-coefficient derivative series") {
    const std::vector<Rational> gauss = {Rational(1), Rational(0), Rational(-1, 2), Rational(0),
                                         Rational(1, 8)};
    CHECK(op_from_d_series(gauss).apply(Poly1::monomial(2)) ==
          Poly1({Rational(-1), Rational(0), Rational(1)}));

    const EndoOp i_minus_d = op_from_d_series({Rational(1), Rational(-1)});
    CHECK(i_minus_d.apply(Poly1::variable()) == Poly1({Rational(-1), Rational(1)}));

    std::vector<Rational> unit(N + 1, Rational(0));
    unit[0] = Rational(1);
    CHECK(op_from_d_series(unit) == EndoOp::identity(N));

    std::mt19937_64 gen(41);
    for (int i = 0; i < 20; ++i)
        CHECK(is_shift_invariant(op_from_d_series(random_d_coeffs(gen, N, false))));
}

TEST_CASE("bivariate shift invariance") {
    CHECK(is_shift_invariant(shift_bivar(N)));

    // P_y E^y for P = e^{-D²/2}
    std::vector<Rational> gauss(N + 1, Rational(0));
    Rational c(1);
    for (int k = 0; 2 * k <= N; ++k) {
        gauss[2 * k] = c;
        c *= Rational(-1, 2) * Rational(1, k + 1);
    }
    const EndoOp p = op_from_d_series(gauss);
    std::vector<Poly2> images;
    for (int n = 0; n <= N; ++n)
        images.push_back(transport_apply_y(p, shift_bivar(N).image(n)));
    CHECK(is_shift_invariant(BivarOp(N, std::move(images))));

    // the translation operator of Q = D + xD² is not shift-invariant
    const EndoOp q = op_from_xd(N, {Poly1(), Poly1::constant(Rational(1)), Poly1::variable()});
    const BivarOp g = generalized_translation(q, basic_from_q(q));
    CHECK(bivar_shift_defect(g) == 2);
}
