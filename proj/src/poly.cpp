#include "umbra/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace umbra {

Poly1::Poly1(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Poly1::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly1 Poly1::constant(const Rational& c) {
    if (c.is_zero()) return Poly1();
    return Poly1({c});
}

Poly1 Poly1::monomial(int degree, const Rational& c) {
    if (degree < 0) throw std::invalid_argument("Poly1::monomial: negative degree");
    if (c.is_zero()) return Poly1();
    std::vector<Rational> cs(degree + 1, Rational(0));
    cs.back() = c;
    return Poly1(std::move(cs));
}

Rational Poly1::coeff(int k) const {
    if (k < 0 || k > degree()) return Rational(0);
    return coeffs_[k];
}

Rational Poly1::leading() const {
    if (is_zero()) return Rational(0);
    return coeffs_.back();
}

Poly1 Poly1::operator-() const {
    Poly1 r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Poly1& Poly1::operator+=(const Poly1& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
}

Poly1& Poly1::operator-=(const Poly1& o) {
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
}

Poly1 operator*(const Poly1& a, const Poly1& b) {
    if (a.is_zero() || b.is_zero()) return Poly1();
    std::vector<Rational> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Poly1(std::move(cs));
}

Poly1 operator*(const Poly1& p, const Rational& c) {
    if (c.is_zero()) return Poly1();
    Poly1 r(p);
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

Rational Poly1::operator()(const Rational& a) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + *it;
    return acc;
}

Poly1 Poly1::derivative() const {
    if (degree() < 1) return Poly1();
    std::vector<Rational> cs(coeffs_.size() - 1, Rational(0));
    for (size_t k = 1; k < coeffs_.size(); ++k) cs[k - 1] = coeffs_[k] * Rational(static_cast<long>(k));
    return Poly1(std::move(cs));
}

Poly1 Poly1::antiderivative() const {
    if (is_zero()) return Poly1();
    std::vector<Rational> cs(coeffs_.size() + 1, Rational(0));
    for (size_t k = 0; k < coeffs_.size(); ++k)
        cs[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
    return Poly1(std::move(cs));
}

Poly1 Poly1::taylor_shift(const Rational& c) const {
    // Horner: p(x+c) = (...((a_n)(x+c) + a_{n-1})(x+c) + ...)
    Poly1 xc({c, Rational(1)});
    Poly1 acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xc + constant(*it);
    return acc;
}

Poly1 Poly1::truncate(int d) const {
    if (degree() <= d) return *this;
    if (d < 0) return Poly1();
    return Poly1(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + d + 1));
}

std::string Poly1::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        os << coeffs_[k].str();
        if (k >= 1) os << "*x^" << k;
        first = false;
    }
    return os.str();
}

Poly1 definite_unit_integral(const Poly1& p) {
    const Poly1 a = p.antiderivative();
    return a.taylor_shift(Rational(1)) - a;
}

Poly2 substitute(const Poly1& p, const Poly2& r) {
    Poly2 acc;
    const auto& cs = p.coeffs();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc = acc * r;
        acc += Poly2::constant(*it);
    }
    return acc;
}

Poly2 Poly2::constant(const Rational& c) { return monomial(0, 0, c); }

Poly2 Poly2::monomial(int i, int j, const Rational& c) {
    Poly2 p;
    p.add_term(i, j, c);
    return p;
}

Poly2 Poly2::from_x(const Poly1& p) {
    Poly2 r;
    for (int k = 0; k <= p.degree(); ++k) r.add_term(k, 0, p.coeff(k));
    return r;
}

Poly2 Poly2::from_y(const Poly1& p) {
    Poly2 r;
    for (int k = 0; k <= p.degree(); ++k) r.add_term(0, k, p.coeff(k));
    return r;
}

void Poly2::add_term(int i, int j, const Rational& c) {
    if (c.is_zero()) return;
    if (i < 0 || j < 0) throw std::invalid_argument("Poly2: negative exponent");
    auto [it, inserted] = terms_.try_emplace({i, j}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

int Poly2::x_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.first);
    return d;
}

int Poly2::y_degree() const {
    int d = -1;
    for (const auto& [k, c] : terms_) d = std::max(d, k.second);
    return d;
}

Poly2 Poly2::operator-() const {
    Poly2 r(*this);
    for (auto& [k, c] : r.terms_) c = -c;
    return r;
}

Poly2& Poly2::operator+=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    Poly2 r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

Poly2 operator*(const Poly2& p, const Rational& c) {
    Poly2 r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : p.terms_) r.add_term(k.first, k.second, v * c);
    return r;
}

Poly1 Poly2::eval_y0() const {
    std::vector<Rational> cs;
    for (const auto& [k, c] : terms_) {
        if (k.second != 0) continue;
        if (static_cast<size_t>(k.first) >= cs.size()) cs.resize(k.first + 1, Rational(0));
        cs[k.first] = c;
    }
    return Poly1(std::move(cs));
}

Poly1 Poly2::eval_y(const Rational& c) const {
    Poly1 r;
    for (const auto& [k, v] : terms_)
        r += Poly1::monomial(k.first, v * c.pow(k.second));
    return r;
}

Poly1 Poly2::collapse_xy() const {
    Poly1 r;
    for (const auto& [k, v] : terms_) r += Poly1::monomial(k.first + k.second, v);
    return r;
}

Poly2 Poly2::swap_xy() const {
    Poly2 r;
    for (const auto& [k, v] : terms_) r.add_term(k.second, k.first, v);
    return r;
}

Poly1 Poly2::coeff_of_y(int j) const {
    std::vector<Rational> cs;
    for (const auto& [k, c] : terms_) {
        if (k.second != j) continue;
        if (static_cast<size_t>(k.first) >= cs.size()) cs.resize(k.first + 1, Rational(0));
        cs[k.first] = c;
    }
    return Poly1(std::move(cs));
}

Poly1 Poly2::coeff_of_x(int i) const {
    std::vector<Rational> cs;
    for (const auto& [k, c] : terms_) {
        if (k.first != i) continue;
        if (static_cast<size_t>(k.second) >= cs.size()) cs.resize(k.second + 1, Rational(0));
        cs[k.second] = c;
    }
    return Poly1(std::move(cs));
}

std::string Poly2::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << c.str();
        if (k.first > 0) os << "*x^" << k.first;
        if (k.second > 0) os << "*y^" << k.second;
        first = false;
    }
    return os.str();
}

void Poly3::add_term(int i, int j, int k, const Rational& c) {
    if (c.is_zero()) return;
    if (i < 0 || j < 0 || k < 0) throw std::invalid_argument("Poly3: negative exponent");
    auto [it, inserted] = terms_.try_emplace({i, j, k}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly3& Poly3::operator+=(const Poly3& o) {
    for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], k[2], c);
    return *this;
}

Poly3& Poly3::operator-=(const Poly3& o) {
    for (const auto& [k, c] : o.terms_) add_term(k[0], k[1], k[2], -c);
    return *this;
}

std::string Poly3::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) os << " + ";
        os << c.str();
        if (k[0] > 0) os << "*x^" << k[0];
        if (k[1] > 0) os << "*y^" << k[1];
        if (k[2] > 0) os << "*z^" << k[2];
        first = false;
    }
    return os.str();
}

Poly3 shift_x_by_z(const Poly2& p) {
    Poly3 r;
    for (const auto& [k, c] : p.terms()) {
        const int i = k.first, j = k.second;
        // (x+z)^i expanded by the binomial theorem
        for (int a = 0; a <= i; ++a)
            r.add_term(a, j, i - a, c * Rational::binomial(i, a));
    }
    return r;
}

}  // namespace umbra
