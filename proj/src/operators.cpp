#include "umbra/operators.hpp"

#include <sstream>
#include <stdexcept>

namespace umbra {

namespace {

int shift_of(const std::vector<Poly1>& images, int trunc) {
    // Minimal d with deg(image_n) ≤ n + d; all-zero images give the sentinel
    // -(trunc+1), the strongest bound expressible at this truncation.
    int d = -(trunc + 1);
    for (size_t n = 0; n < images.size(); ++n)
        if (!images[n].is_zero()) d = std::max(d, images[n].degree() - static_cast<int>(n));
    return d;
}

}  // namespace

EndoOp::EndoOp(int trunc, std::vector<Poly1> images) : trunc_(trunc), images_(std::move(images)) {
    if (trunc < 0) throw std::invalid_argument("EndoOp: negative truncation");
    if (images_.size() != static_cast<size_t>(trunc + 1))
        throw std::invalid_argument("EndoOp: expected trunc+1 images");
    for (auto& img : images_) img = img.truncate(trunc_);
    degree_shift_ = shift_of(images_, trunc_);
}

EndoOp EndoOp::identity(int trunc) {
    std::vector<Poly1> images;
    for (int n = 0; n <= trunc; ++n) images.push_back(Poly1::monomial(n));
    return EndoOp(trunc, std::move(images));
}

EndoOp EndoOp::zero(int trunc) {
    return EndoOp(trunc, std::vector<Poly1>(trunc + 1));
}

EndoOp EndoOp::derivative(int trunc) {
    std::vector<Poly1> images;
    images.push_back(Poly1());
    for (int n = 1; n <= trunc; ++n)
        images.push_back(Poly1::monomial(n - 1, Rational(n)));
    return EndoOp(trunc, std::move(images));
}

EndoOp EndoOp::evaluation(int trunc, const Rational& c) {
    std::vector<Poly1> images;
    for (int n = 0; n <= trunc; ++n) images.push_back(Poly1::constant(c.pow(n)));
    return EndoOp(trunc, std::move(images));
}

const Poly1& EndoOp::image(int n) const {
    if (n < 0 || n > trunc_) throw std::out_of_range("EndoOp::image");
    return images_[n];
}

Poly1 EndoOp::apply(const Poly1& p) const {
    if (p.degree() > trunc_)
        throw std::invalid_argument("EndoOp::apply: input degree exceeds truncation");
    Poly1 r;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational c = p.coeff(k);
        if (!c.is_zero()) r += images_[k] * c;
    }
    return r;
}

EndoOp EndoOp::operator-() const {
    std::vector<Poly1> images;
    for (const auto& img : images_) images.push_back(-img);
    return EndoOp(trunc_, std::move(images));
}

EndoOp& EndoOp::operator+=(const EndoOp& o) {
    if (trunc_ != o.trunc_) throw std::invalid_argument("EndoOp: mismatched truncations");
    for (int n = 0; n <= trunc_; ++n) images_[n] += o.images_[n];
    degree_shift_ = shift_of(images_, trunc_);
    return *this;
}

EndoOp operator*(const EndoOp& op, const Rational& c) {
    std::vector<Poly1> images;
    for (const auto& img : op.images_) images.push_back(img * c);
    return EndoOp(op.trunc_, std::move(images));
}

BivarOp::BivarOp(int trunc, std::vector<Poly2> images) : trunc_(trunc), images_(std::move(images)) {
    if (trunc < 0) throw std::invalid_argument("BivarOp: negative truncation");
    if (images_.size() != static_cast<size_t>(trunc + 1))
        throw std::invalid_argument("BivarOp: expected trunc+1 images");
}

const Poly2& BivarOp::image(int n) const {
    if (n < 0 || n > trunc_) throw std::out_of_range("BivarOp::image");
    return images_[n];
}

Poly2 BivarOp::apply(const Poly1& p) const {
    if (p.degree() > trunc_)
        throw std::invalid_argument("BivarOp::apply: input degree exceeds truncation");
    Poly2 r;
    for (int k = 0; k <= p.degree(); ++k) {
        const Rational c = p.coeff(k);
        if (!c.is_zero()) r += images_[k] * c;
    }
    return r;
}

EndoOp op_from_images(std::vector<Poly1> images) {
    if (images.empty()) throw std::invalid_argument("op_from_images: empty image list");
    const int trunc = static_cast<int>(images.size()) - 1;
    return EndoOp(trunc, std::move(images));
}

EndoOp op_compose(const EndoOp& a, const EndoOp& b) {
    if (a.trunc() != b.trunc()) throw std::invalid_argument("op_compose: mismatched truncations");
    std::vector<Poly1> images;
    for (int n = 0; n <= b.trunc(); ++n) images.push_back(a.apply(b.image(n)));
    return EndoOp(a.trunc(), std::move(images));
}

EndoOp op_invert(const EndoOp& a) {
    const int n = a.trunc();
    for (int k = 0; k <= n; ++k)
        if (a.image(k).degree() != k)
            throw std::domain_error("op_invert: operator is singular or not degree-preserving");
    // Columns of the inverse solve the upper-triangular system T g = x^m.
    std::vector<Poly1> inv_images;
    for (int m = 0; m <= n; ++m) {
        std::vector<Rational> g(n + 1, Rational(0));
        for (int i = n; i >= 0; --i) {
            Rational rhs = (i == m) ? Rational(1) : Rational(0);
            for (int j = i + 1; j <= n; ++j) {
                if (g[j].is_zero()) continue;
                rhs -= a.image(j).coeff(i) * g[j];
            }
            g[i] = rhs / a.image(i).coeff(i);
        }
        inv_images.emplace_back(std::move(g));
    }
    return EndoOp(n, std::move(inv_images));
}

EndoOp shift_endo(int trunc, const Rational& c) {
    std::vector<Poly1> images;
    for (int n = 0; n <= trunc; ++n) images.push_back(Poly1::monomial(n).taylor_shift(c));
    return EndoOp(trunc, std::move(images));
}

BivarOp shift_bivar(int trunc, const Rational& offset) {
    Poly2 base;
    base.add_term(1, 0, Rational(1));
    base.add_term(0, 1, Rational(1));
    base.add_term(0, 0, offset);
    std::vector<Poly2> images;
    Poly2 pw = Poly2::constant(Rational(1));
    images.push_back(pw);
    for (int n = 1; n <= trunc; ++n) {
        pw = pw * base;
        images.push_back(pw);
    }
    return BivarOp(trunc, std::move(images));
}

EndoOp op_from_d_series(const std::vector<Rational>& coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("op_from_d_series: empty coefficients");
    const int n = static_cast<int>(coeffs.size()) - 1;
    std::vector<Poly1> a;
    for (const auto& c : coeffs) a.push_back(Poly1::constant(c));
    return op_from_xd(n, a);
}

EndoOp op_from_xd(int trunc, const std::vector<Poly1>& a) {
    std::vector<Poly1> images;
    for (int n = 0; n <= trunc; ++n) {
        Poly1 img;
        Rational falling(1);  // n!/(n-k)!
        for (int k = 0; k <= n && k < static_cast<int>(a.size()); ++k) {
            if (!a[k].is_zero()) img += a[k] * Poly1::monomial(n - k, falling);
            falling *= Rational(n - k);
        }
        images.push_back(img);
    }
    return EndoOp(trunc, std::move(images));
}

std::vector<Poly1> expand_in_xd(const EndoOp& T) {
    const int n = T.trunc();
    std::vector<Poly1> a;
    for (int m = 0; m <= n; ++m) {
        Poly1 rest = T.image(m);
        Rational falling(1);  // m!/(m-k)!
        for (int k = 0; k < m; ++k) {
            rest -= a[k] * Poly1::monomial(m - k, falling);
            falling *= Rational(m - k);
        }
        a.push_back(rest * Rational::factorial(m).inv());
    }
    return a;
}

Poly2 transport_apply_y(const EndoOp& T, const Poly2& p) {
    if (p.y_degree() > T.trunc())
        throw std::invalid_argument("transport_apply_y: y-degree exceeds truncation");
    Poly2 r;
    for (const auto& [key, c] : p.terms()) {
        const Poly1 img = T.image(key.second);  // T y^j, read in y
        for (int k = 0; k <= img.degree(); ++k) r.add_term(key.first, k, c * img.coeff(k));
    }
    return r;
}

Poly2 apply_to_x(const EndoOp& T, const Poly2& p) {
    if (p.x_degree() > T.trunc())
        throw std::invalid_argument("apply_to_x: x-degree exceeds truncation");
    Poly2 r;
    for (const auto& [key, c] : p.terms()) {
        const Poly1 img = T.image(key.first);
        for (int k = 0; k <= img.degree(); ++k) r.add_term(k, key.second, c * img.coeff(k));
    }
    return r;
}

std::pair<Poly2, Poly2> endo_shift_sides(const EndoOp& T, int n) {
    Poly2 xy;
    xy.add_term(1, 0, Rational(1));
    xy.add_term(0, 1, Rational(1));
    Poly2 lhs;  // T acting on the x-variable of (x+y)^n
    for (int k = 0; k <= n; ++k) {
        const Poly1 img = T.image(k);
        const Rational c = Rational::binomial(n, k);
        for (int i = 0; i <= img.degree(); ++i) lhs.add_term(i, n - k, c * img.coeff(i));
    }
    return {lhs, substitute(T.image(n), xy)};
}

std::optional<int> endo_shift_defect(const EndoOp& T) {
    const int hi = T.trunc() - std::max(T.degree_shift(), 0);
    for (int n = 0; n <= hi; ++n) {
        const auto [lhs, rhs] = endo_shift_sides(T, n);
        if (lhs != rhs) return n;
    }
    return std::nullopt;
}

bool is_shift_invariant(const EndoOp& T) { return !endo_shift_defect(T).has_value(); }

std::pair<Poly3, Poly3> bivar_shift_sides(const BivarOp& F, int n) {
    Poly3 lhs;
    for (int k = 0; k <= n; ++k) {
        const Rational c = Rational::binomial(n, k);
        for (const auto& [key, v] : F.image(k).terms())
            lhs.add_term(key.first, key.second, n - k, c * v);
    }
    return {lhs, shift_x_by_z(F.image(n))};
}

std::optional<int> bivar_shift_defect(const BivarOp& F) {
    for (int n = 0; n + 1 <= F.trunc(); ++n) {
        const auto [lhs, rhs] = bivar_shift_sides(F, n);
        if (lhs != rhs) return n;
    }
    return std::nullopt;
}

bool is_shift_invariant(const BivarOp& F) { return !bivar_shift_defect(F).has_value(); }

std::vector<Rational> expand_in_q(const EndoOp& T, const EndoOp& Q,
                                  const std::vector<Poly1>& basic) {
    const int n = T.trunc();
    if (Q.trunc() != n) throw std::invalid_argument("expand_in_q: mismatched truncations");
    if (basic.size() != static_cast<size_t>(n + 1))
        throw std::invalid_argument("expand_in_q: basic sequence has wrong length");
    for (int m = 0; m + 1 <= n; ++m) {
        if (T.apply(Q.image(m)) != Q.apply(T.image(m))) {
            std::ostringstream os;
            os << "expand_in_q: T and Q do not commute (witness degree " << m << ")";
            throw std::domain_error(os.str());
        }
    }
    std::vector<Rational> c;
    for (int m = 0; m <= n; ++m) c.push_back(T.apply(basic[m])(Rational(0)));
    return c;
}

EndoOp op_from_q_powers(const std::vector<Rational>& coeffs, const EndoOp& Q) {
    EndoOp acc = EndoOp::zero(Q.trunc());
    EndoOp pw = EndoOp::identity(Q.trunc());
    for (size_t k = 0; k < coeffs.size(); ++k) {
        if (k > 0) pw = op_compose(Q, pw);
        if (!coeffs[k].is_zero()) acc += pw * coeffs[k];
    }
    return acc;
}

}  // namespace umbra
