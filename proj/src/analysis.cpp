#include "umbra/analysis.hpp"

#include <stdexcept>

#include "umbra/linalg.hpp"

namespace umbra {

CauchyWitness cauchy_solve(const EndoOp& Q, const PolySeq& basic, const Poly1& p) {
    const int n = Q.trunc();
    if (basic.trunc() != n) throw std::invalid_argument("cauchy_solve: mismatched truncations");
    if (p.degree() > n) throw std::invalid_argument("cauchy_solve: input degree exceeds truncation");

    Poly2 u;
    Poly1 v = p;  // Q^k p
    for (int k = 0; k <= n && !v.is_zero(); ++k) {
        u += Poly2::from_y(basic.at(k)) * Poly2::from_x(v);
        v = Q.apply(v);
    }

    const Poly2 residual = apply_to_x(Q, u) - transport_apply_y(Q, u);
    const Poly1 initial_gap = u.eval_y0() - p;
    return CauchyWitness{std::move(u), residual, initial_gap};
}

EndoOp infinitesimal_generator(const EndoOp& Q, const PolySeq& basic) {
    const int n = Q.trunc();
    if (basic.trunc() != n)
        throw std::invalid_argument("infinitesimal_generator: mismatched truncations");

    std::vector<Rational> coeffs;
    for (int k = 0; k <= n; ++k) coeffs.push_back(basic.at(k).coeff(1));  // (D q_k)(0)
    EndoOp generator = op_from_q_powers(coeffs, Q);

    // The algebraic limit: the y¹-coefficient of each image of G^{(y)}.
    const BivarOp g = generalized_translation(Q, basic);
    std::vector<Poly1> limit_images;
    for (int m = 0; m <= n; ++m) limit_images.push_back(g.image(m).coeff_of_y(1));
    const EndoOp limit(n, std::move(limit_images));

    if (generator != limit)
        throw std::logic_error("infinitesimal_generator: series form disagrees with the y-slope");
    return generator;
}

VerifyReport heaviside_check(const Poly1& p, int trunc) {
    if (p.degree() > trunc)
        throw std::invalid_argument("heaviside_check: input degree exceeds truncation");
    VerifyReport report;
    report.checked_hi = std::max(p.degree(), 0);

    Poly2 lhs;
    Poly1 d = p;
    Rational inv_fact(1);
    for (int k = 0; !d.is_zero(); ++k) {
        lhs += Poly2::from_x(d) * Poly2::monomial(0, k, inv_fact);
        d = d.derivative();
        inv_fact /= Rational(k + 1);
    }

    Poly2 xy;
    xy.add_term(1, 0, Rational(1));
    xy.add_term(0, 1, Rational(1));
    const Poly2 rhs = substitute(p, xy);
    if (lhs != rhs) report.fail(std::max(p.degree(), 0), lhs.str(), rhs.str());
    return report;
}

VerifyReport coassociativity_check(const BivarOp& F) {
    const int n = F.trunc();
    VerifyReport report;
    report.checked_hi = n;
    for (int m = 0; m <= n; ++m) {
        const Poly2& delta = F.image(m);
        if (delta.x_degree() > n || delta.y_degree() > n)
            throw std::invalid_argument("coassociativity_check: image degree exceeds truncation");
        // (F⊗I): expand the first leg x^i through F, second leg y^j becomes z^j.
        Poly3 lhs;
        for (const auto& [key, c] : delta.terms())
            for (const auto& [ikey, v] : F.image(key.first).terms())
                lhs.add_term(ikey.first, ikey.second, key.second, c * v);
        // (I⊗F): first leg stays, second leg expands into legs (y, z).
        Poly3 rhs;
        for (const auto& [key, c] : delta.terms())
            for (const auto& [jkey, v] : F.image(key.second).terms())
                rhs.add_term(key.first, jkey.first, jkey.second, c * v);
        if (lhs != rhs) report.fail(m, lhs.str(), rhs.str());
    }
    return report;
}

VerifyReport cocommutativity_check(const BivarOp& F, const PolySeq& p) {
    VerifyReport report;
    report.checked_hi = p.trunc();
    const VerifyReport conv = verify_convolution(F, p);
    if (!conv.ok) {
        report.absorb(conv, "precondition: convolution identity fails");
        return report;
    }
    for (int n = 0; n <= p.trunc(); ++n) {
        const Poly2 rhs = convolution_rhs(p, n);
        const Poly2 swapped = rhs.swap_xy();
        if (rhs != swapped) report.fail(n, rhs.str(), swapped.str());
    }
    return report;
}

std::vector<Rational> counit_from_f(const BivarOp& F) {
    const int n = F.trunc();
    // Unknowns e_0..e_n; for each basis degree m and each y-power j:
    // Σ_i e_i · [x^i y^j](F x^m) = δ_{jm}.
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (int m = 0; m <= n; ++m) {
        const Poly2& img = F.image(m);
        const int jmax = std::max(img.y_degree(), m);
        for (int j = 0; j <= jmax; ++j) {
            std::vector<Rational> row(n + 1, Rational(0));
            for (const auto& [key, c] : img.terms()) {
                if (key.second != j) continue;
                if (key.first > n)
                    throw std::invalid_argument("counit_from_f: image degree exceeds truncation");
                row[key.first] = c;
            }
            rows.push_back(std::move(row));
            rhs.emplace_back(j == m ? 1 : 0);
        }
    }
    auto solution = detail::solve_exact(std::move(rows), std::move(rhs));
    if (!solution)
        throw std::domain_error(
            "counit_from_f: no unique counit (F is not a valid comultiplication)");
    return *solution;
}

std::optional<Rational> bialgebra_detect(const BivarOp& F) {
    const int n = F.trunc();
    if (n < 1) throw std::invalid_argument("bialgebra_detect: truncation must be at least 1");
    for (int i = 0; i <= n; ++i)
        for (int j = i; i + j <= n; ++j)
            if (F.image(i + j) != F.image(i) * F.image(j)) return std::nullopt;

    // A multiplicative solution is substitution by r(x,y); the convolution
    // setting forces r = x + y - c.
    const Poly2& r = F.image(1);
    Rational c(0);
    bool shift_form = F.image(0) == Poly2::constant(Rational(1));
    for (const auto& [key, v] : r.terms()) {
        if (key == Poly2::Key{1, 0} || key == Poly2::Key{0, 1}) {
            if (!v.is_one()) shift_form = false;
        } else if (key == Poly2::Key{0, 0}) {
            c = -v;
        } else {
            shift_form = false;
        }
    }
    if (r.terms().count({1, 0}) == 0 || r.terms().count({0, 1}) == 0) shift_form = false;
    if (!shift_form)
        throw std::logic_error("bialgebra_detect: multiplicative operator is not a shift");
    return c;
}

VerifyReport antipode_check(const Rational& c, int trunc) {
    VerifyReport report;
    report.checked_hi = trunc;
    const BivarOp delta = shift_bivar(trunc, -c);
    // S: (x-c)^n ↦ (-1)^n (x-c)^n, i.e. substitution x ↦ 2c - x.
    std::vector<Poly1> s_images;
    const Poly1 reflect({Rational(2) * c, Rational(-1)});
    Poly1 pw = Poly1::constant(Rational(1));
    s_images.push_back(pw);
    for (int k = 1; k <= trunc; ++k) {
        pw = pw * reflect;
        s_images.push_back(pw);
    }
    const EndoOp antipode(trunc, std::move(s_images));

    for (int m = 0; m <= trunc; ++m) {
        const Poly1 folded = apply_to_x(antipode, delta.image(m)).collapse_xy();
        const Poly1 expected = Poly1::constant(c.pow(m));  // unit ∘ counit on x^m
        if (folded != expected) report.fail(m, folded.str(), expected.str());
    }
    return report;
}

}  // namespace umbra
