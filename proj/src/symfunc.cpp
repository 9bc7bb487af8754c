#include "umbra/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "umbra/linalg.hpp"

namespace umbra {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::single(int n) {
    if (n < 0) throw std::invalid_argument("Partition::single: negative part");
    if (n == 0) return Partition();
    return Partition({n});
}

int Partition::part(int i) const {
    if (i < 1 || i > length()) return 0;
    return parts_[i - 1];
}

Partition Partition::conjugate() const {
    std::vector<int> conj;
    for (int i = 1; i <= part(1); ++i) {
        int count = 0;
        for (int p : parts_)
            if (p >= i) ++count;
        conj.push_back(count);
    }
    return Partition(std::move(conj));
}

std::optional<Partition> Partition::remove_part(int v) const {
    auto it = std::find(parts_.begin(), parts_.end(), v);
    if (it == parts_.end()) return std::nullopt;
    std::vector<int> rest(parts_.begin(), it);
    rest.insert(rest.end(), std::next(it), parts_.end());
    return Partition(std::move(rest));
}

std::optional<Partition> Partition::remove_all(const Partition& other) const {
    std::optional<Partition> cur = *this;
    for (int v : other.parts()) {
        cur = cur->remove_part(v);
        if (!cur) return std::nullopt;
    }
    return cur;
}

std::string Partition::str() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) os << ",";
        os << parts_[i];
    }
    os << ")";
    return os.str();
}

int rlex_compare(const Partition& a, const Partition& b) {
    // Compare at the largest index where the zero-padded part vectors differ.
    const int len = std::max(a.length(), b.length());
    for (int i = len; i >= 1; --i) {
        if (a.part(i) == b.part(i)) continue;
        return a.part(i) < b.part(i) ? -1 : 1;
    }
    return 0;
}

bool operator<(const Partition& a, const Partition& b) {
    if (a.weight() != b.weight()) return a.weight() < b.weight();
    return rlex_compare(a, b) < 0;
}

namespace {

void gen_partitions(int n, int maxpart, std::vector<int>& stack, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(stack));
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        stack.push_back(p);
        gen_partitions(n - p, p, stack, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> stack;
    gen_partitions(n, n, stack, out);
    return out;
}

std::vector<Partition> partitions_up_to(int n) {
    std::vector<Partition> out;
    for (int w = 0; w <= n; ++w) {
        auto pw = partitions_of(w);
        out.insert(out.end(), pw.begin(), pw.end());
    }
    return out;
}

SymF::SymF(int trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("SymF: negative truncation");
}

SymF SymF::monomial(int trunc, const Partition& la, const Rational& c) {
    SymF f(trunc);
    f.add_term(la, c);
    return f;
}

SymF SymF::elementary(int trunc, int n) {
    return monomial(trunc, Partition(std::vector<int>(n, 1)));
}

SymF SymF::complete(int trunc, int n) {
    SymF f(trunc);
    for (const auto& la : partitions_of(n)) f.add_term(la, Rational(1));
    return f;
}

void SymF::add_term(const Partition& la, const Rational& c) {
    if (c.is_zero()) return;
    if (la.weight() > trunc_) return;  // beyond the truncation, silently dropped
    auto [it, inserted] = coeffs_.try_emplace(la, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

Rational SymF::coeff(const Partition& la) const {
    auto it = coeffs_.find(la);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

Rational SymF::augmentation() const { return coeff(Partition()); }

bool SymF::homogeneous_of(int w) const {
    for (const auto& [la, c] : coeffs_)
        if (la.weight() != w) return false;
    return true;
}

SymF SymF::operator-() const {
    SymF r(trunc_);
    for (const auto& [la, c] : coeffs_) r.coeffs_.emplace(la, -c);
    return r;
}

SymF& SymF::operator+=(const SymF& o) {
    if (trunc_ != o.trunc_) throw std::invalid_argument("SymF: mismatched truncations");
    for (const auto& [la, c] : o.coeffs_) add_term(la, c);
    return *this;
}

SymF& SymF::operator-=(const SymF& o) {
    if (trunc_ != o.trunc_) throw std::invalid_argument("SymF: mismatched truncations");
    for (const auto& [la, c] : o.coeffs_) add_term(la, -c);
    return *this;
}

namespace {

/// Number of slot vectors (a, b) with a + b = nu, the nonzero entries of a
/// forming the part-multiset of la and those of b forming mu.
long count_overlays(const std::vector<int>& nu, std::map<int, int> la_left,
                    std::map<int, int> mu_left, size_t slot) {
    if (slot == nu.size()) return (la_left.empty() && mu_left.empty()) ? 1 : 0;
    long total = 0;
    // a-value 0: the full slot must come from mu.
    {
        auto it = mu_left.find(nu[slot]);
        if (it != mu_left.end()) {
            if (--it->second == 0) mu_left.erase(it);
            total += count_overlays(nu, la_left, mu_left, slot + 1);
            ++mu_left[nu[slot]];
        }
    }
    // a-value v > 0 from la's remaining parts (distinct values only).
    std::vector<int> values;
    for (const auto& [v, cnt] : la_left) values.push_back(v);
    for (int v : values) {
        if (v > nu[slot]) continue;
        const int b = nu[slot] - v;
        auto la_next = la_left;
        if (--la_next[v] == 0) la_next.erase(v);
        auto mu_next = mu_left;
        if (b > 0) {
            auto it = mu_next.find(b);
            if (it == mu_next.end()) continue;
            if (--it->second == 0) mu_next.erase(it);
        }
        total += count_overlays(nu, std::move(la_next), std::move(mu_next), slot + 1);
    }
    return total;
}

std::map<int, int> part_counts(const Partition& la) {
    std::map<int, int> counts;
    for (int v : la.parts()) ++counts[v];
    return counts;
}

SymF mono_mul(int trunc, const Partition& la, const Partition& mu) {
    SymF out(trunc);
    const int w = la.weight() + mu.weight();
    if (w > trunc) return out;
    if (la.empty()) return SymF::monomial(trunc, mu);
    if (mu.empty()) return SymF::monomial(trunc, la);
    for (const auto& nu : partitions_of(w)) {
        if (nu.length() > la.length() + mu.length()) continue;
        const long count = count_overlays(nu.parts(), part_counts(la), part_counts(mu), 0);
        if (count != 0) out.add_term(nu, Rational(count));
    }
    return out;
}

Partition sorted_partition(std::vector<int> values) {
    std::erase(values, 0);
    std::sort(values.begin(), values.end(), std::greater<>());
    return Partition(std::move(values));
}

}  // namespace

SymF operator*(const SymF& a, const SymF& b) {
    if (a.trunc_ != b.trunc_) throw std::invalid_argument("SymF: mismatched truncations");
    SymF out(a.trunc_);
    for (const auto& [la, ca] : a.coeffs_) {
        for (const auto& [mu, cb] : b.coeffs_) {
            if (la.weight() + mu.weight() > a.trunc_) continue;
            const SymF prod = mono_mul(a.trunc_, la, mu);
            const Rational c = ca * cb;
            for (const auto& [nu, v] : prod.coeffs()) out.add_term(nu, v * c);
        }
    }
    return out;
}

SymF operator*(const SymF& f, const Rational& c) {
    SymF out(f.trunc_);
    if (c.is_zero()) return out;
    for (const auto& [la, v] : f.coeffs_) out.coeffs_.emplace(la, v * c);
    return out;
}

std::string SymF::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [la, c] : coeffs_) {
        if (!first) os << " + ";
        os << c.str() << "*m" << la.str();
        first = false;
    }
    return os.str();
}

void SymFY::add_term(int k, const Partition& la, const Rational& c) {
    if (c.is_zero()) return;
    if (k < 0) throw std::invalid_argument("SymFY: negative y-exponent");
    if (k + la.weight() > trunc_) return;
    auto [it, inserted] = terms_.try_emplace({k, la}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymFY& SymFY::operator+=(const SymFY& o) {
    if (trunc_ != o.trunc_) throw std::invalid_argument("SymFY: mismatched truncations");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
    return *this;
}

SymFY& SymFY::operator-=(const SymFY& o) {
    if (trunc_ != o.trunc_) throw std::invalid_argument("SymFY: mismatched truncations");
    for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
    return *this;
}

SymFY operator*(const SymFY& f, const Rational& c) {
    SymFY out(f.trunc_);
    if (c.is_zero()) return out;
    for (const auto& [key, v] : f.terms_) out.terms_.emplace(key, v * c);
    return out;
}

std::string SymFY::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        os << c.str();
        if (key.first > 0) os << "*y^" << key.first;
        os << "*m" << key.second.str();
        first = false;
    }
    return os.str();
}

void SymFYZ::add_term(int ky, int kz, const Partition& la, const Rational& c) {
    if (c.is_zero()) return;
    if (ky < 0 || kz < 0) throw std::invalid_argument("SymFYZ: negative exponent");
    if (ky + kz + la.weight() > trunc_) return;
    auto [it, inserted] = terms_.try_emplace({ky, kz, la}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::string SymFYZ::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        if (!first) os << " + ";
        os << c.str();
        if (std::get<0>(key) > 0) os << "*y^" << std::get<0>(key);
        if (std::get<1>(key) > 0) os << "*z^" << std::get<1>(key);
        os << "*m" << std::get<2>(key).str();
        first = false;
    }
    return os.str();
}

SymFY sym_shift(const SymF& f) {
    SymFY out(f.trunc());
    for (const auto& [la, c] : f.coeffs()) {
        out.add_term(0, la, c);
        int previous = -1;
        for (int v : la.parts()) {
            if (v == previous) continue;  // one removal per distinct part value
            previous = v;
            out.add_term(v, *la.remove_part(v), c);
        }
    }
    return out;
}

Poly1 eval_single(const SymF& f) {
    Poly1 out;
    for (const auto& [la, c] : f.coeffs()) {
        if (la.length() > 1) continue;
        out += Poly1::monomial(la.empty() ? 0 : la.part(1), c);
    }
    return out;
}

SymOp::SymOp(int trunc, std::map<Partition, SymF> images)
    : trunc_(trunc), images_(std::move(images)) {
    for (const auto& la : partitions_up_to(trunc_))
        if (images_.find(la) == images_.end())
            throw std::invalid_argument("SymOp: missing image for " + la.str());
}

SymOp SymOp::identity(int trunc) {
    std::map<Partition, SymF> images;
    for (const auto& la : partitions_up_to(trunc)) images.emplace(la, SymF::monomial(trunc, la));
    return SymOp(trunc, std::move(images));
}

const SymF& SymOp::image(const Partition& la) const {
    auto it = images_.find(la);
    if (it == images_.end()) throw std::out_of_range("SymOp::image: " + la.str());
    return it->second;
}

SymF SymOp::apply(const SymF& f) const {
    SymF out(trunc_);
    for (const auto& [la, c] : f.coeffs()) {
        const SymF& img = image(la);
        for (const auto& [mu, v] : img.coeffs()) out.add_term(mu, v * c);
    }
    return out;
}

SymOp d_lambda(int trunc, const Partition& la) {
    std::map<Partition, SymF> images;
    for (const auto& mu : partitions_up_to(trunc)) {
        SymF img(trunc);
        if (auto rest = mu.remove_all(la)) img.add_term(*rest, Rational(1));
        images.emplace(mu, std::move(img));
    }
    return SymOp(trunc, std::move(images));
}

SymOp sym_shift_at(int trunc, const Rational& a) {
    std::map<Partition, SymF> images;
    for (const auto& mu : partitions_up_to(trunc)) {
        SymF img(trunc);
        const SymFY shifted = sym_shift(SymF::monomial(trunc, mu));
        for (const auto& [key, c] : shifted.terms())
            img.add_term(key.second, c * a.pow(key.first));
        images.emplace(mu, std::move(img));
    }
    return SymOp(trunc, std::move(images));
}

VerifyReport shift_expansion_check(int trunc) {
    VerifyReport report;
    report.checked_hi = trunc;
    std::vector<SymOp> d_row;  // D_{(n)} for n = 0..trunc
    for (int n = 0; n <= trunc; ++n) d_row.push_back(d_lambda(trunc, Partition::single(n)));
    for (const auto& mu : partitions_up_to(trunc)) {
        const SymFY lhs = sym_shift(SymF::monomial(trunc, mu));
        SymFY rhs(trunc);
        for (int n = 0; n <= trunc; ++n)
            for (const auto& [la, c] : d_row[n].image(mu).coeffs()) rhs.add_term(n, la, c);
        if (lhs != rhs) report.fail(mu.weight(), lhs.str(), rhs.str());
    }
    return report;
}

std::map<Partition, Rational> theta_expansion(const SymOp& theta) {
    const int n = theta.trunc();
    // Shift-invariance precondition, with a formal shift variable.
    for (const auto& mu : partitions_up_to(n)) {
        SymFY lhs(n);  // θ applied to the symmetric-function part of E^a m_μ
        const SymFY mu_shifted = sym_shift(SymF::monomial(n, mu));
        for (const auto& [key, c] : mu_shifted.terms())
            for (const auto& [la, v] : theta.image(key.second).coeffs())
                lhs.add_term(key.first, la, c * v);
        SymFY rhs(n);  // E^a applied to θ m_μ
        for (const auto& [la, v] : theta.image(mu).coeffs()) {
            const SymFY la_shifted = sym_shift(SymF::monomial(n, la));
            for (const auto& [key, c] : la_shifted.terms())
                rhs.add_term(key.first, key.second, v * c);
        }
        if (lhs != rhs)
            throw std::domain_error("theta_expansion: operator is not shift-invariant (witness m" +
                                    mu.str() + ")");
    }

    std::map<Partition, Rational> coeffs;
    for (const auto& la : partitions_up_to(n)) {
        const Rational c = theta.image(la).augmentation();
        if (!c.is_zero()) coeffs.emplace(la, c);
    }

    // Reconstruction Σ c_λ D_λ must reproduce θ on every basis element.
    for (const auto& mu : partitions_up_to(n)) {
        SymF rebuilt(n);
        for (const auto& [la, c] : coeffs)
            if (auto rest = mu.remove_all(la)) rebuilt.add_term(*rest, c);
        if (rebuilt != theta.image(mu))
            throw std::domain_error("theta_expansion: reconstruction mismatch at m" + mu.str());
    }
    return coeffs;
}

FullSeq::FullSeq(int trunc, std::map<Partition, SymF> entries)
    : trunc_(trunc), entries_(std::move(entries)) {
    for (const auto& la : partitions_up_to(trunc_))
        if (entries_.find(la) == entries_.end())
            throw std::invalid_argument("FullSeq: missing entry for " + la.str());
}

const SymF& FullSeq::at(const Partition& la) const {
    auto it = entries_.find(la);
    if (it == entries_.end()) throw std::out_of_range("FullSeq::at: " + la.str());
    return it->second;
}

namespace {

FullSeq full_from_row(int trunc, const std::function<SymF(int)>& row) {
    // p_λ = Π row(λ_i), built by peeling the first part so lower-weight
    // entries are reused.
    std::map<Partition, SymF> entries;
    entries.emplace(Partition(), SymF::monomial(trunc, Partition()));
    for (int w = 1; w <= trunc; ++w) {
        for (const auto& la : partitions_of(w)) {
            std::vector<int> rest_parts(la.parts().begin() + 1, la.parts().end());
            const SymF& rest = entries.at(Partition(std::move(rest_parts)));
            entries.emplace(la, row(la.part(1)) * rest);
        }
    }
    return FullSeq(trunc, std::move(entries));
}

}  // namespace

FullSeq full_elementary(int trunc) {
    return full_from_row(trunc, [trunc](int n) { return SymF::elementary(trunc, n); });
}

FullSeq full_complete(int trunc) {
    return full_from_row(trunc, [trunc](int n) { return SymF::complete(trunc, n); });
}

FullSeq full_m_conjugate(int trunc) {
    std::map<Partition, SymF> entries;
    for (const auto& la : partitions_up_to(trunc))
        entries.emplace(la, SymF::monomial(trunc, la.conjugate()));
    return FullSeq(trunc, std::move(entries));
}

FullSeq scale_fullseq(const FullSeq& s, const Rational& c) {
    std::map<Partition, SymF> entries;
    for (const auto& [la, f] : s.entries()) entries.emplace(la, f * c);
    return FullSeq(s.trunc(), std::move(entries));
}

VerifyReport is_full_sequence(const FullSeq& s) {
    VerifyReport report;
    report.checked_hi = s.trunc();
    for (const auto& [la, f] : s.entries()) {
        const Partition conj = la.conjugate();
        if (!f.homogeneous_of(la.weight())) {
            report.fail(la.weight(), "p" + la.str() + " = " + f.str(),
                        "homogeneous of degree " + std::to_string(la.weight()));
            continue;
        }
        if (f.coeff(conj).is_zero()) {
            report.fail(la.weight(), "p" + la.str() + " = " + f.str(),
                        "nonzero coefficient on m" + conj.str());
            continue;
        }
        for (const auto& [mu, c] : f.coeffs()) {
            if (rlex_compare(mu, conj) < 0) {
                report.fail(la.weight(), "p" + la.str() + " contains m" + mu.str(),
                            "support must follow m" + conj.str() + " in reverse-lex order");
                break;
            }
        }
    }
    return report;
}

SymFY full_divided_rhs(const FullSeq& s, const Partition& la) {
    SymFY rhs(s.trunc());
    const auto& parts = la.parts();
    std::vector<int> alpha(parts.size(), 0);
    while (true) {
        std::vector<int> beta(parts.size());
        for (size_t i = 0; i < parts.size(); ++i) beta[i] = parts[i] - alpha[i];
        const SymF& left = s.at(sorted_partition(alpha));
        const Poly1 right = eval_single(s.at(sorted_partition(beta)));
        for (int k = 0; k <= right.degree(); ++k) {
            const Rational ck = right.coeff(k);
            if (ck.is_zero()) continue;
            for (const auto& [rho, v] : left.coeffs()) rhs.add_term(k, rho, ck * v);
        }
        // Odometer over the coordinatewise box 0 ≤ α ≤ λ.
        size_t i = 0;
        while (i < alpha.size() && alpha[i] == parts[i]) alpha[i++] = 0;
        if (i == alpha.size()) break;
        ++alpha[i];
    }
    return rhs;
}

VerifyReport verify_full_divided(const FullSeq& s) {
    VerifyReport report;
    report.checked_hi = s.trunc();
    for (const auto& [la, f] : s.entries()) {
        const SymFY lhs = sym_shift(f);
        const SymFY rhs = full_divided_rhs(s, la);
        if (lhs != rhs) {
            report.fail(la.weight(), "E^y p" + la.str() + " = " + lhs.str(), rhs.str());
        }
    }
    return report;
}

std::map<Partition, SymFY> derive_sym_f(const FullSeq& s) {
    std::map<Partition, SymFY> images;
    for (const auto& [la, f] : s.entries()) images.emplace(la, full_divided_rhs(s, la));
    return images;
}

SymShefferReport sym_sheffer_verify(const FullSeq& s) {
    const int n = s.trunc();
    if (!is_full_sequence(s).ok)
        throw std::invalid_argument("sym_sheffer_verify: input is not a full sequence");

    const auto on_basis = derive_sym_f(s);

    // Change of basis: express each m_μ through the p_λ of the same weight,
    // then carry the images over; full sequences are bases, so the per-weight
    // systems are uniquely solvable.
    std::map<Partition, SymFY> on_monomials;
    for (int w = 0; w <= n; ++w) {
        const auto lambdas = partitions_of(w);
        const size_t dim = lambdas.size();
        std::vector<std::vector<Rational>> matrix(dim, std::vector<Rational>(dim, Rational(0)));
        for (size_t col = 0; col < dim; ++col) {
            const SymF& p = s.at(lambdas[col]);
            for (size_t row = 0; row < dim; ++row) matrix[row][col] = p.coeff(lambdas[row]);
        }
        for (size_t row = 0; row < dim; ++row) {
            std::vector<Rational> unit(dim, Rational(0));
            unit[row] = Rational(1);
            const auto coords = detail::solve_exact(matrix, std::move(unit));
            if (!coords) throw std::logic_error("sym_sheffer_verify: basis change failed");
            SymFY img(n);
            for (size_t col = 0; col < dim; ++col) {
                if ((*coords)[col].is_zero()) continue;
                img += on_basis.at(lambdas[col]) * (*coords)[col];
            }
            on_monomials.emplace(lambdas[row], std::move(img));
        }
    }

    SymShefferReport report;
    report.details.checked_hi = n;
    report.shift_invariant = true;
    for (const auto& mu : partitions_up_to(n)) {
        // F^y E^z m_μ: shift with z first, then apply F to the Λ part.
        SymFYZ lhs(n);
        const SymFY mu_shifted = sym_shift(SymF::monomial(n, mu));
        for (const auto& [key, c] : mu_shifted.terms())
            for (const auto& [fkey, v] : on_monomials.at(key.second).terms())
                lhs.add_term(fkey.first, key.first, fkey.second, c * v);
        // E^z F^y m_μ: apply F first, then shift each Λ coefficient with z.
        SymFYZ rhs(n);
        for (const auto& [fkey, v] : on_monomials.at(mu).terms()) {
            const SymFY leg_shifted = sym_shift(SymF::monomial(n, fkey.second));
            for (const auto& [key, c] : leg_shifted.terms())
                rhs.add_term(fkey.first, key.first, key.second, v * c);
        }
        if (lhs != rhs) {
            report.shift_invariant = false;
            report.details.fail(mu.weight(), "F E^z m" + mu.str() + " = " + lhs.str(),
                                "E^z F m" + mu.str() + " = " + rhs.str());
            report.details.add_note("commutation witness at m" + mu.str());
            break;
        }
    }

    if (report.shift_invariant) {
        const Rational c = s.at(Partition()).augmentation();
        for (const auto& mu : partitions_up_to(n)) {
            SymFY expected(n);
            const SymFY mu_shifted = sym_shift(SymF::monomial(n, mu));
            for (const auto& [key, v] : mu_shifted.terms())
                expected.add_term(key.first, key.second, v * c);
            if (on_monomials.at(mu) != expected)
                throw std::logic_error(
                    "sym_sheffer_verify: shift-invariant operator differs from c·E^y");
        }
        report.c = c;
    }
    return report;
}

VerifyReport sym_antipode_identity(int trunc) {
    VerifyReport report;
    report.checked_hi = trunc;
    for (int n = 0; n <= trunc; ++n) {
        SymF acc(trunc);
        for (int k = 0; k <= n; ++k) {
            const SymF term = SymF::elementary(trunc, k) * SymF::complete(trunc, n - k);
            acc += (k % 2 == 0) ? term : -term;
        }
        SymF expected(trunc);
        if (n == 0) expected.add_term(Partition(), Rational(1));
        if (acc != expected) report.fail(n, acc.str(), expected.str());
    }
    return report;
}

VerifyReport verify_linear_divided(const std::vector<SymF>& seq) {
    VerifyReport report;
    report.checked_hi = static_cast<int>(seq.size()) - 1;
    for (size_t n = 0; n < seq.size(); ++n) {
        const SymFY lhs = sym_shift(seq[n]);
        SymFY rhs(seq[n].trunc());
        for (size_t k = 0; k <= n; ++k) {
            const Poly1 right = eval_single(seq[n - k]);
            for (int j = 0; j <= right.degree(); ++j) {
                const Rational cj = right.coeff(j);
                if (cj.is_zero()) continue;
                for (const auto& [rho, v] : seq[k].coeffs()) rhs.add_term(j, rho, cj * v);
            }
        }
        if (lhs != rhs) report.fail(static_cast<int>(n), lhs.str(), rhs.str());
    }
    return report;
}

}  // namespace umbra
