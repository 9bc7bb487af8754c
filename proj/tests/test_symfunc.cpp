#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "umbra/symfunc.hpp"

using namespace umbra;

namespace {

constexpr int N = 8;

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Product on Λ[y], used by the ring-map test.
SymFY symfy_mul(const SymFY& a, const SymFY& b, int trunc) {
    SymFY out(trunc);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const SymF prod =
                SymF::monomial(trunc, ka.second) * SymF::monomial(trunc, kb.second);
            for (const auto& [nu, v] : prod.coeffs())
                out.add_term(ka.first + kb.first, nu, ca * cb * v);
        }
    return out;
}

}  // namespace

TEST_CASE("partition basics and conjugation") {
    CHECK(P({3, 1}).conjugate() == P({2, 1, 1}));
    CHECK(Partition().conjugate() == Partition());
    for (const auto& la : partitions_up_to(10)) CHECK(la.conjugate().conjugate() == la);
    CHECK_THROWS_AS(P({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(P({0}), std::invalid_argument);
}

TEST_CASE("reverse lexicographic order") {
    CHECK(rlex_compare(P({4}), P({3, 1})) < 0);
    CHECK(rlex_compare(P({3, 1}), P({2, 2})) < 0);
    CHECK(rlex_compare(P({2, 2}), P({2, 1, 1})) < 0);
    CHECK(rlex_compare(P({2, 1, 1}), P({1, 1, 1, 1})) < 0);
    CHECK(rlex_compare(P({3, 1}), P({3, 1})) == 0);

    // strict total order on each P_n: trichotomy and transitivity
    for (int n = 0; n <= N; ++n) {
        const auto parts = partitions_of(n);
        for (const auto& a : parts)
            for (const auto& b : parts) {
                const int ab = rlex_compare(a, b);
                CHECK(ab == -rlex_compare(b, a));
                CHECK((ab == 0) == (a == b));
                for (const auto& c : parts)
                    if (ab < 0 && rlex_compare(b, c) < 0) CHECK(rlex_compare(a, c) < 0);
            }
    }
}

TEST_CASE("symmetric shift on basis elements") {
    SymFY expected(N);
    expected.add_term(0, P({2, 1}), Rational(1));
    expected.add_term(1, P({2}), Rational(1));
    expected.add_term(2, P({1}), Rational(1));
    CHECK(sym_shift(SymF::monomial(N, P({2, 1}))) == expected);

    // h_n picks up all powers of y, e_n only the first
    for (int n = 1; n <= 6; ++n) {
        SymFY h_expected(N);
        for (int k = 0; k <= n; ++k) {
            const SymF tail = SymF::complete(N, n - k);
            for (const auto& [la, c] : tail.coeffs()) h_expected.add_term(k, la, c);
        }
        CHECK(sym_shift(SymF::complete(N, n)) == h_expected);

        SymFY e_expected(N);
        const SymF en = SymF::elementary(N, n);
        const SymF en1 = SymF::elementary(N, n - 1);
        for (const auto& [la, c] : en.coeffs()) e_expected.add_term(0, la, c);
        for (const auto& [la, c] : en1.coeffs()) e_expected.add_term(1, la, c);
        CHECK(sym_shift(SymF::elementary(N, n)) == e_expected);
    }

    SymFY one(N);
    one.add_term(0, Partition(), Rational(1));
    CHECK(sym_shift(SymF::monomial(N, Partition())) == one);
}

TEST_CASE("single-variable evaluation") {
    CHECK(eval_single(SymF::monomial(N, P({3}))) == Poly1::monomial(3));
    CHECK(eval_single(SymF::monomial(N, P({1, 1}))).is_zero());
    CHECK(eval_single(SymF::complete(N, 2)) == Poly1::monomial(2));
}

TEST_CASE("symmetric derivative convention") {
    CHECK(d_lambda(N, P({1})).apply(SymF::monomial(N, P({2, 1}))) == SymF::monomial(N, P({2})));
    CHECK(d_lambda(N, P({2})).apply(SymF::monomial(N, P({2, 1}))) == SymF::monomial(N, P({1})));
    CHECK(d_lambda(N, P({1})).apply(SymF::monomial(N, P({1, 1}))) == SymF::monomial(N, P({1})));
    CHECK(d_lambda(N, P({2})).apply(SymF::monomial(N, P({1, 1}))).is_zero());
    CHECK(d_lambda(N, Partition()) == SymOp::identity(N));
}

TEST_CASE("shift expansion in the one-row derivatives") {
    CHECK(shift_expansion_check(N).ok);
}

TEST_CASE("expansion of shift-invariant operators") {
    const Rational a(2, 3);
    const auto shift_coeffs = theta_expansion(sym_shift_at(N, a));
    for (const auto& [la, c] : shift_coeffs) {
        CHECK(la.length() <= 1);
        CHECK(c == a.pow(la.weight()));
    }
    CHECK(shift_coeffs.size() == static_cast<size_t>(N + 1));

    const auto ident_coeffs = theta_expansion(SymOp::identity(N));
    CHECK(ident_coeffs.size() == 1);
    CHECK(ident_coeffs.at(Partition()) == Rational(1));

    const auto d1_coeffs = theta_expansion(d_lambda(N, P({1})));
    CHECK(d1_coeffs.size() == 1);
    CHECK(d1_coeffs.at(P({1})) == Rational(1));

    // a combination with a multi-row derivative term round-trips exactly
    std::map<Partition, SymF> combo_images;
    for (const auto& mu : partitions_up_to(N)) {
        SymF img(N);
        if (auto rest = mu.remove_all(P({2}))) img.add_term(*rest, Rational(1));
        if (auto rest = mu.remove_all(P({1, 1}))) img.add_term(*rest, Rational(3));
        combo_images.emplace(mu, std::move(img));
    }
    const auto combo = theta_expansion(SymOp(N, std::move(combo_images)));
    CHECK(combo.size() == 2);
    CHECK(combo.at(P({2})) == Rational(1));
    CHECK(combo.at(P({1, 1})) == Rational(3));

    // the grading operator is not shift-invariant
    std::map<Partition, SymF> grading;
    for (const auto& la : partitions_up_to(N))
        grading.emplace(la, SymF::monomial(N, la, Rational(la.weight())));
    CHECK_THROWS_AS(theta_expansion(SymOp(N, std::move(grading))), std::domain_error);
}

TEST_CASE("linear divided powers sequences") {
    std::vector<SymF> e_seq, h_seq;
    for (int n = 0; n <= N; ++n) {
        e_seq.push_back(SymF::elementary(N, n));
        h_seq.push_back(SymF::complete(N, n));
    }
    CHECK(verify_linear_divided(e_seq).ok);
    CHECK(verify_linear_divided(h_seq).ok);
}

TEST_CASE("the symmetric shift is a ring map") {
    const SymF e1 = SymF::elementary(N, 1);
    const SymFY shifted_square = sym_shift(e1 * e1);
    const SymFY square_of_shift = symfy_mul(sym_shift(e1), sym_shift(e1), N);
    CHECK(shifted_square == square_of_shift);
}

TEST_CASE("full sequence predicate") {
    CHECK(is_full_sequence(full_m_conjugate(N)).ok);

    const FullSeq e = full_elementary(N);
    CHECK(is_full_sequence(e).ok);
    SymF e11(N);
    e11.add_term(P({2}), Rational(1));
    e11.add_term(P({1, 1}), Rational(2));
    CHECK(e.at(P({1, 1})) == e11);

    const VerifyReport h_report = is_full_sequence(full_complete(N));
    CHECK_FALSE(h_report.ok);
    CHECK(h_report.violations.front().degree == 2);  // h_2 contains m_(2) ≪ (1,1)
}

TEST_CASE("full divided powers identity") {
    const FullSeq e = full_elementary(6);
    CHECK(verify_full_divided(e).ok);

    // λ = (1,1): E^y e₁² = e₁² + 2y·e₁ + y²
    SymFY expected(6);
    expected.add_term(0, P({2}), Rational(1));
    expected.add_term(0, P({1, 1}), Rational(2));
    expected.add_term(1, P({1}), Rational(2));
    expected.add_term(2, Partition(), Rational(1));
    CHECK(full_divided_rhs(e, P({1, 1})) == expected);

    const FullSeq m = full_m_conjugate(6);
    const VerifyReport m_report = verify_full_divided(m);
    CHECK_FALSE(m_report.ok);
    // witness at λ = (1,1): the right-hand side has the extra term 2y·m_(1)
    SymFY lhs = sym_shift(m.at(P({1, 1})));
    SymFY rhs = full_divided_rhs(m, P({1, 1}));
    SymFY extra(6);
    extra.add_term(1, P({1}), Rational(2));
    CHECK(rhs - lhs == extra);
    bool witness_at_11 = false;
    for (const auto& v : m_report.violations) witness_at_11 |= (v.degree == 2);
    CHECK(witness_at_11);
}

TEST_CASE("derived comultiplication images scale quadratically") {
    const FullSeq e3 = scale_fullseq(full_elementary(4), Rational(3));
    const auto images = derive_sym_f(e3);
    for (const auto& [la, img] : images) {
        // F p_λ = 3 E^y p_λ with p_λ = 3 e_λ
        SymFY expected(4);
        const SymFY shifted = sym_shift(e3.at(la));
        for (const auto& [key, c] : shifted.terms())
            expected.add_term(key.first, key.second, c * Rational(3));
        CHECK(img == expected);
    }
}

TEST_CASE("symmetric sheffer verification") {
    const auto e_report = sym_sheffer_verify(full_elementary(6));
    CHECK(e_report.shift_invariant);
    CHECK(e_report.c == Rational(1));

    for (const Rational& c : {Rational(3), Rational(2), Rational(-1, 2)}) {
        const auto scaled = sym_sheffer_verify(scale_fullseq(full_elementary(5), c));
        CHECK(scaled.shift_invariant);
        CHECK(scaled.c == c);
    }

    const auto m_report = sym_sheffer_verify(full_m_conjugate(5));
    CHECK_FALSE(m_report.shift_invariant);
    CHECK_FALSE(m_report.c.has_value());
    CHECK_FALSE(m_report.details.violations.empty());

    CHECK_THROWS_AS(sym_sheffer_verify(full_complete(4)), std::invalid_argument);
}

TEST_CASE("alternating elementary-complete identity") {
    CHECK(sym_antipode_identity(N).ok);

    // n = 2 by hand in monomial coordinates
    const SymF h2 = SymF::complete(N, 2);
    const SymF e1h1 = SymF::elementary(N, 1) * SymF::complete(N, 1);
    const SymF e2 = SymF::elementary(N, 2);
    SymF expected_h2(N);
    expected_h2.add_term(P({2}), Rational(1));
    expected_h2.add_term(P({1, 1}), Rational(1));
    CHECK(h2 == expected_h2);
    SymF expected_cross(N);
    expected_cross.add_term(P({2}), Rational(1));
    expected_cross.add_term(P({1, 1}), Rational(2));
    CHECK(e1h1 == expected_cross);
    CHECK((h2 - e1h1 + e2).is_zero());
}
