#include "umbra/umbral.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

namespace umbra {

PolySeq::PolySeq(int trunc, std::vector<Poly1> polys) : trunc_(trunc), polys_(std::move(polys)) {
    if (trunc < 0) throw std::invalid_argument("PolySeq: negative truncation");
    if (polys_.size() != static_cast<size_t>(trunc + 1))
        throw std::invalid_argument("PolySeq: expected trunc+1 polynomials");
    for (int n = 0; n <= trunc_; ++n) {
        if (polys_[n].degree() != n) {
            std::ostringstream os;
            os << "PolySeq: entry at index " << n << " must have degree exactly " << n;
            throw std::invalid_argument(os.str());
        }
    }
}

const Poly1& PolySeq::at(int n) const {
    if (n < 0 || n > trunc_) throw std::out_of_range("PolySeq::at");
    return polys_[n];
}

PolySeq divided_powers_seq(int trunc) {
    std::vector<Poly1> polys;
    for (int n = 0; n <= trunc; ++n)
        polys.push_back(Poly1::monomial(n, Rational::factorial(n).inv()));
    return PolySeq(trunc, std::move(polys));
}

PolySeq random_polyseq(std::uint64_t seed, int trunc) {
    std::mt19937_64 gen(seed);
    const auto draw_num = [&]() { return static_cast<long>(gen() % 19) - 9; };
    const auto draw_den = [&]() { return static_cast<long>(gen() % 4) + 1; };
    std::vector<Poly1> polys;
    for (int n = 0; n <= trunc; ++n) {
        std::vector<Rational> cs;
        for (int k = 0; k <= n; ++k) cs.emplace_back(draw_num(), draw_den());
        if (cs.back().is_zero()) cs.back() = Rational(1);
        polys.emplace_back(std::move(cs));
    }
    return PolySeq(trunc, std::move(polys));
}

void VerifyReport::fail(int degree, std::string lhs, std::string rhs) {
    ok = false;
    violations.push_back({degree, std::move(lhs), std::move(rhs)});
}

void VerifyReport::add_note(const std::string& s) {
    if (!note.empty()) note += "; ";
    note += s;
}

void VerifyReport::absorb(const VerifyReport& r, const std::string& label) {
    if (r.ok) return;
    ok = false;
    for (const auto& v : r.violations) violations.push_back(v);
    add_note(label);
}

EndoOp q_from_sequence(const PolySeq& p) {
    const int n = p.trunc();
    const EndoOp to_p = op_from_images(p.polys());       // x^k ↦ p_k
    std::vector<Poly1> down;                             // x^k ↦ x^{k-1}
    down.push_back(Poly1());
    for (int k = 1; k <= n; ++k) down.push_back(Poly1::monomial(k - 1));
    return op_compose(to_p, op_compose(op_from_images(std::move(down)), op_invert(to_p)));
}

PolySeq basic_from_q(const EndoOp& Q) {
    const int n = Q.trunc();
    if (!Q.image(0).is_zero())
        throw std::domain_error("basic_from_q: Q does not kill constants");
    for (int k = 1; k <= n; ++k) {
        if (Q.image(k).degree() != k - 1) {
            std::ostringstream os;
            os << "basic_from_q: Q does not lower degree by exactly one (witness degree " << k
               << ")";
            throw std::domain_error(os.str());
        }
    }
    std::vector<Poly1> q;
    q.push_back(Poly1::constant(Rational(1)));
    for (int m = 1; m <= n; ++m) {
        // Solve Q(Σ_{k=1..m} c_k x^k) = q_{m-1} with the triangular descent
        // on leading coefficients; the constant term is fixed to zero.
        std::vector<Rational> c(m + 1, Rational(0));
        Poly1 residual = q[m - 1];
        for (int k = m; k >= 1; --k) {
            c[k] = residual.coeff(k - 1) / Q.image(k).coeff(k - 1);
            if (!c[k].is_zero()) residual -= Q.image(k) * c[k];
        }
        if (!residual.is_zero())
            throw std::logic_error("basic_from_q: triangular solve left a residual");
        q.emplace_back(std::move(c));
    }
    return PolySeq(n, std::move(q));
}

EndoOp sheffer_operator(const PolySeq& p, const PolySeq& basic) {
    if (p.trunc() != basic.trunc())
        throw std::invalid_argument("sheffer_operator: mismatched truncations");
    return op_compose(op_from_images(p.polys()), op_invert(op_from_images(basic.polys())));
}

BivarOp generalized_translation(const EndoOp& Q, const PolySeq& basic) {
    const int n = Q.trunc();
    if (basic.trunc() != n)
        throw std::invalid_argument("generalized_translation: mismatched truncations");
    std::vector<Poly2> images;
    for (int m = 0; m <= n; ++m) {
        Poly2 img;
        Poly1 v = Poly1::monomial(m);  // Q^k x^m
        for (int k = 0; k <= n && !v.is_zero(); ++k) {
            img += Poly2::from_y(basic.at(k)) * Poly2::from_x(v);
            v = Q.apply(v);
        }
        images.push_back(std::move(img));
    }
    return BivarOp(n, std::move(images));
}

ShefferData generalized_sheffer(const PolySeq& p) {
    const int n = p.trunc();
    EndoOp q_op = q_from_sequence(p);
    PolySeq basic = basic_from_q(q_op);
    EndoOp p_op = sheffer_operator(p, basic);
    BivarOp g = generalized_translation(q_op, basic);
    std::vector<Poly2> f_images;
    for (int m = 0; m <= n; ++m) f_images.push_back(transport_apply_y(p_op, g.image(m)));
    BivarOp f(n, std::move(f_images));

    for (int m = 0; m <= n; ++m)
        if (p_op.image(m).degree() != m)
            throw std::logic_error("generalized_sheffer: P is not invertible");
    if (op_compose(p_op, q_op) != op_compose(q_op, p_op))
        throw std::logic_error("generalized_sheffer: P and Q do not commute");

    return ShefferData{std::move(q_op), std::move(basic), std::move(p_op), std::move(g),
                       std::move(f)};
}

Poly2 convolution_rhs(const PolySeq& p, int n) {
    Poly2 rhs;
    for (int k = 0; k <= n; ++k) rhs += Poly2::from_x(p.at(k)) * Poly2::from_y(p.at(n - k));
    return rhs;
}

VerifyReport verify_convolution(const BivarOp& F, const PolySeq& p) {
    if (F.trunc() != p.trunc())
        throw std::invalid_argument("verify_convolution: mismatched truncations");
    VerifyReport report;
    report.checked_hi = p.trunc();
    for (int n = 0; n <= p.trunc(); ++n) {
        const Poly2 lhs = F.apply(p.at(n));
        const Poly2 rhs = convolution_rhs(p, n);
        if (lhs != rhs) report.fail(n, lhs.str(), rhs.str());
    }
    return report;
}

VerifyReport verify_divided_powers(const PolySeq& p) {
    return verify_convolution(shift_bivar(p.trunc()), p);
}

VerifyReport verify_binomial(const PolySeq& q) {
    VerifyReport report;
    report.checked_hi = q.trunc();
    Poly2 xy;
    xy.add_term(1, 0, Rational(1));
    xy.add_term(0, 1, Rational(1));
    for (int n = 0; n <= q.trunc(); ++n) {
        const Poly2 lhs = substitute(q.at(n), xy);
        Poly2 rhs;
        for (int k = 0; k <= n; ++k)
            rhs += Poly2::from_x(q.at(k)) * Poly2::from_y(q.at(n - k)) * Rational::binomial(n, k);
        if (lhs != rhs) report.fail(n, lhs.str(), rhs.str());
    }
    return report;
}

VerifyReport verify_sheffer_pair(const PolySeq& s, const PolySeq& p) {
    if (s.trunc() != p.trunc())
        throw std::invalid_argument("verify_sheffer_pair: mismatched truncations");
    VerifyReport report;
    report.checked_hi = s.trunc();
    const VerifyReport dp = verify_divided_powers(p);
    if (!dp.ok) {
        report.absorb(dp, "precondition: p is not a divided powers sequence");
        return report;
    }
    Poly2 xy;
    xy.add_term(1, 0, Rational(1));
    xy.add_term(0, 1, Rational(1));
    for (int n = 0; n <= s.trunc(); ++n) {
        const Poly2 lhs = substitute(s.at(n), xy);
        Poly2 rhs;
        for (int k = 0; k <= n; ++k)
            rhs += Poly2::from_y(p.at(n - k)) * Poly2::from_x(s.at(k));
        if (lhs != rhs) report.fail(n, lhs.str(), rhs.str());
    }
    return report;
}

EndoOp recover_operator(const BivarOp& F) {
    std::vector<Poly1> images;
    for (int n = 0; n <= F.trunc(); ++n) images.push_back(F.image(n).eval_y0());
    return EndoOp(F.trunc(), std::move(images));
}

VerifyReport sheffer_theorem_check(const BivarOp& F, const PolySeq& p) {
    const int n = p.trunc();
    VerifyReport report;
    report.checked_hi = n;

    const VerifyReport conv = verify_convolution(F, p);
    if (!conv.ok) {
        report.absorb(conv, "precondition: convolution identity fails");
        return report;
    }
    if (const auto defect = bivar_shift_defect(F)) {
        const auto [lhs, rhs] = bivar_shift_sides(F, *defect);
        report.fail(*defect, lhs.str(), rhs.str());
        report.add_note("precondition: F is not shift-invariant");
        return report;
    }

    const EndoOp recovered = recover_operator(F);

    bool invertible = true;
    for (int m = 0; m <= n; ++m) {
        if (recovered.image(m).degree() != m) {
            report.fail(m, recovered.image(m).str(), Poly1::monomial(m).str());
            report.add_note("P is not invertible");
            invertible = false;
            break;
        }
    }
    if (const auto defect = endo_shift_defect(recovered)) {
        const auto [lhs, rhs] = endo_shift_sides(recovered, *defect);
        report.fail(*defect, lhs.str(), rhs.str());
        report.add_note("P is not shift-invariant");
    }
    if (invertible) {
        const EndoOp p_inv = op_invert(recovered);
        std::vector<Poly1> q_polys;
        for (int m = 0; m <= n; ++m) q_polys.push_back(p_inv.apply(p.at(m)));
        const PolySeq q(n, std::move(q_polys));
        report.absorb(verify_divided_powers(q), "P^{-1} p is not a divided powers sequence");
    }
    const BivarOp shifted = shift_bivar(n);
    for (int m = 0; m <= n; ++m) {
        const Poly2 expected = transport_apply_y(recovered, shifted.image(m));
        if (F.image(m) != expected) {
            report.fail(m, F.image(m).str(), expected.str());
            report.add_note("F differs from P_y E^y");
            break;
        }
    }
    return report;
}

BivarOp bivar_from_convolution(const PolySeq& p) {
    const int n = p.trunc();
    const EndoOp from_p = op_invert(op_from_images(p.polys()));  // p-coordinates of x^m
    std::vector<Poly2> images;
    for (int m = 0; m <= n; ++m) {
        Poly2 img;
        const Poly1& coords = from_p.image(m);
        for (int k = 0; k <= coords.degree(); ++k) {
            const Rational c = coords.coeff(k);
            if (!c.is_zero()) img += convolution_rhs(p, k) * c;
        }
        images.push_back(std::move(img));
    }
    return BivarOp(n, std::move(images));
}

}  // namespace umbra
