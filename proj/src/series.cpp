#include "umbra/series.hpp"

#include <stdexcept>

namespace umbra {

Series::Series(int order) : order_(order) {
    if (order < 0) throw std::invalid_argument("Series: negative order");
    coeffs_.resize(order + 1);
}

Series::Series(int order, std::vector<Poly1> coeffs) : Series(order) {
    if (coeffs.size() > static_cast<size_t>(order + 1))
        throw std::invalid_argument("Series: more coefficients than order+1");
    for (size_t k = 0; k < coeffs.size(); ++k) coeffs_[k] = std::move(coeffs[k]);
}

Series Series::one(int order) {
    Series s(order);
    s.coeffs_[0] = Poly1::constant(Rational(1));
    return s;
}

Series Series::t(int order) {
    Series s(order);
    if (order >= 1) s.coeffs_[1] = Poly1::constant(Rational(1));
    return s;
}

Series Series::from_scalars(int order, const std::vector<Rational>& cs) {
    Series s(order);
    for (size_t k = 0; k < cs.size() && k <= static_cast<size_t>(order); ++k)
        s.coeffs_[k] = Poly1::constant(cs[k]);
    return s;
}

const Poly1& Series::coeff(int k) const {
    if (k < 0 || k > order_) throw std::out_of_range("Series::coeff");
    return coeffs_[k];
}

void Series::set_coeff(int k, Poly1 p) {
    if (k < 0 || k > order_) throw std::out_of_range("Series::set_coeff");
    coeffs_[k] = std::move(p);
}

Series Series::operator-() const {
    Series r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Series& Series::operator+=(const Series& o) {
    if (order_ != o.order_) throw std::invalid_argument("Series: mismatched orders");
    for (int k = 0; k <= order_; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

Series& Series::operator-=(const Series& o) {
    if (order_ != o.order_) throw std::invalid_argument("Series: mismatched orders");
    for (int k = 0; k <= order_; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

Series operator*(const Series& a, const Series& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("Series: mismatched orders");
    Series r(a.order_);
    for (int i = 0; i <= a.order_; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= a.order_; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return r;
}

Series operator*(const Series& s, const Rational& c) {
    Series r(s);
    for (auto& p : r.coeffs_) p = p * c;
    return r;
}

Series operator*(const Series& s, const Poly1& p) {
    Series r(s);
    for (auto& q : r.coeffs_) q = q * p;
    return r;
}

bool operator==(const Series& a, const Series& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

Series Series::shift_down() const {
    if (!constant_term_is_zero())
        throw std::domain_error("Series::shift_down: nonzero constant term");
    if (order_ == 0) throw std::domain_error("Series::shift_down: order 0");
    Series r(order_ - 1);
    for (int k = 0; k < order_; ++k) r.coeffs_[k] = coeffs_[k + 1];
    return r;
}

Series series_exp(const Series& u) {
    if (!u.constant_term_is_zero())
        throw std::domain_error("series_exp: nonzero constant term");
    const int n = u.order();
    Series acc = Series::one(n);
    Series term = Series::one(n);
    for (int k = 1; k <= n; ++k) {
        term = (term * u) * Rational(1, k);
        acc += term;
    }
    return acc;
}

Series series_log1p(const Series& u) {
    if (!u.constant_term_is_zero())
        throw std::domain_error("series_log1p: nonzero constant term");
    const int n = u.order();
    Series acc(n);
    Series upow = Series::one(n);
    for (int k = 1; k <= n; ++k) {
        upow = upow * u;
        acc += upow * Rational((k % 2 == 1) ? 1 : -1, k);
    }
    return acc;
}

Series series_pow(const Series& u, const Rational& rho) {
    if (!u.constant_term_is_one())
        throw std::domain_error("series_pow: constant term is not 1");
    Series shifted = u - Series::one(u.order());
    return series_exp(series_log1p(shifted) * rho);
}

Series series_div_unit(const Series& a, const Series& b) {
    if (a.order() != b.order()) throw std::invalid_argument("Series: mismatched orders");
    if (!b.constant_term_is_one())
        throw std::domain_error("series_div_unit: divisor constant term is not 1");
    const int n = b.order();
    // b^{-1} by the triangular recurrence inv_m = -Σ_{k=1..m} b_k inv_{m-k}
    Series inv = Series::one(n);
    for (int m = 1; m <= n; ++m) {
        Poly1 s;
        for (int k = 1; k <= m; ++k) s += b.coeff(k) * inv.coeff(m - k);
        inv.set_coeff(m, -s);
    }
    return a * inv;
}

}  // namespace umbra
