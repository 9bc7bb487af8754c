#ifndef UMBRA_SYMFUNC_HPP
#define UMBRA_SYMFUNC_HPP

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "umbra/poly.hpp"
#include "umbra/rational.hpp"
#include "umbra/umbral.hpp"

namespace umbra {

/// Integer partition: weakly decreasing positive parts; the empty partition
/// has weight 0.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    /// The one-part partition (n), or () when n = 0.
    static Partition single(int n);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    /// Part at 1-based index i, zero beyond the length.
    int part(int i) const;

    Partition conjugate() const;
    /// Removes one part equal to v; nullopt when absent.
    std::optional<Partition> remove_part(int v) const;
    /// Removes the part-multiset of other; nullopt when not contained.
    std::optional<Partition> remove_all(const Partition& other) const;

    std::string str() const;

    friend bool operator==(const Partition& a, const Partition& b) {
        return a.parts_ == b.parts_;
    }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// Total order: weight first, then reverse lexicographic.
    friend bool operator<(const Partition& a, const Partition& b);

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

/// Reverse lexicographic comparison at the largest differing index:
/// -1 when a ≪ b, 0 on equality, +1 when b ≪ a.
int rlex_compare(const Partition& a, const Partition& b);

std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_up_to(int n);

/// Symmetric function truncated at total degree trunc, in monomial-basis
/// coordinates. No zero coefficients are stored.
class SymF {
  public:
    explicit SymF(int trunc);
    static SymF monomial(int trunc, const Partition& la, const Rational& c = Rational(1));
    /// Elementary e_n = m_{(1,...,1)}.
    static SymF elementary(int trunc, int n);
    /// Complete homogeneous h_n = Σ_{λ⊢n} m_λ.
    static SymF complete(int trunc, int n);

    int trunc() const { return trunc_; }
    const std::map<Partition, Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    void add_term(const Partition& la, const Rational& c);
    Rational coeff(const Partition& la) const;
    /// Evaluation at all variables zero (the coefficient of m_()).
    Rational augmentation() const;
    /// True when every stored term has weight w.
    bool homogeneous_of(int w) const;

    SymF operator-() const;
    SymF& operator+=(const SymF& o);
    SymF& operator-=(const SymF& o);
    friend SymF operator+(SymF a, const SymF& b) { return a += b; }
    friend SymF operator-(SymF a, const SymF& b) { return a -= b; }
    /// Exact product of monomial symmetric functions, truncated at trunc.
    friend SymF operator*(const SymF& a, const SymF& b);
    friend SymF operator*(const SymF& f, const Rational& c);
    friend SymF operator*(const Rational& c, const SymF& f) { return f * c; }
    friend bool operator==(const SymF& a, const SymF& b) {
        return a.trunc_ == b.trunc_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const SymF& a, const SymF& b) { return !(a == b); }

    std::string str() const;

  private:
    int trunc_;
    std::map<Partition, Rational> coeffs_;
};

/// Element of Λ[y] truncated at total degree trunc: terms y^k ⊗ m_λ with
/// k + |λ| ≤ trunc.
class SymFY {
  public:
    explicit SymFY(int trunc) : trunc_(trunc) {}

    int trunc() const { return trunc_; }
    const std::map<std::pair<int, Partition>, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add_term(int k, const Partition& la, const Rational& c);

    SymFY& operator+=(const SymFY& o);
    SymFY& operator-=(const SymFY& o);
    friend SymFY operator+(SymFY a, const SymFY& b) { return a += b; }
    friend SymFY operator-(SymFY a, const SymFY& b) { return a -= b; }
    friend SymFY operator*(const SymFY& f, const Rational& c);
    friend bool operator==(const SymFY& a, const SymFY& b) {
        return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymFY& a, const SymFY& b) { return !(a == b); }

    std::string str() const;

  private:
    int trunc_;
    std::map<std::pair<int, Partition>, Rational> terms_;
};

/// Element of Λ[y,z], carrier for the symmetric shift-invariance test.
class SymFYZ {
  public:
    explicit SymFYZ(int trunc) : trunc_(trunc) {}

    bool is_zero() const { return terms_.empty(); }
    void add_term(int ky, int kz, const Partition& la, const Rational& c);

    friend bool operator==(const SymFYZ& a, const SymFYZ& b) {
        return a.trunc_ == b.trunc_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const SymFYZ& a, const SymFYZ& b) { return !(a == b); }

    std::string str() const;

  private:
    int trunc_;
    std::map<std::tuple<int, int, Partition>, Rational> terms_;
};

/// The symmetric shift E^y q(x₁,x₂,…) = q(y,x₁,x₂,…), on the monomial basis:
/// m_λ ↦ Σ_r y^r m_{λ minus one part r} over r ∈ {0} ∪ {part values of λ}.
SymFY sym_shift(const SymF& f);

/// Evaluation (y,0,0,…): m_λ ↦ y^{λ₁} when λ has at most one part, else 0.
Poly1 eval_single(const SymF& f);

/// Linear operator Λ_{≤N} → Λ_{≤N} stored through its images on the
/// monomial basis (explicitly graded by partition weight).
class SymOp {
  public:
    SymOp(int trunc, std::map<Partition, SymF> images);
    static SymOp identity(int trunc);

    int trunc() const { return trunc_; }
    const SymF& image(const Partition& la) const;
    SymF apply(const SymF& f) const;

    friend bool operator==(const SymOp& a, const SymOp& b) {
        return a.trunc_ == b.trunc_ && a.images_ == b.images_;
    }
    friend bool operator!=(const SymOp& a, const SymOp& b) { return !(a == b); }

  private:
    int trunc_;
    std::map<Partition, SymF> images_;
};

/// The symmetric derivative D_λ: m_μ ↦ m_{μ∖λ} (part-multiset removal), 0
/// when the parts of λ are not contained in μ.
SymOp d_lambda(int trunc, const Partition& la);

/// Numeric shift E^a: m_λ ↦ m_λ(a, x₁, x₂, …).
SymOp sym_shift_at(int trunc, const Rational& a);

/// Verifies E^a = Σ_n a^n D_{(n)} with a formal, on every m_μ with |μ| ≤ N.
VerifyReport shift_expansion_check(int trunc);

/// Expansion θ = Σ_λ ε(θ m_λ) D_λ for a shift-invariant θ; the coefficients
/// are returned and the reconstruction is verified on every basis element.
std::map<Partition, Rational> theta_expansion(const SymOp& theta);

/// Partition-indexed family p_λ of symmetric functions for all |λ| ≤ trunc.
class FullSeq {
  public:
    FullSeq(int trunc, std::map<Partition, SymF> entries);

    int trunc() const { return trunc_; }
    const SymF& at(const Partition& la) const;
    const std::map<Partition, SymF>& entries() const { return entries_; }

  private:
    int trunc_;
    std::map<Partition, SymF> entries_;
};

/// p_λ = e_λ = Π e_{λ_i}.
FullSeq full_elementary(int trunc);
/// p_λ = h_λ = Π h_{λ_i}.
FullSeq full_complete(int trunc);
/// p_λ = m_{λ'}, the canonical full sequence.
FullSeq full_m_conjugate(int trunc);
FullSeq scale_fullseq(const FullSeq& s, const Rational& c);

/// Full-sequence test: homogeneity, support on μ following λ' in reverse
/// lexicographic order, and nonzero coefficient on m_{λ'}.
VerifyReport is_full_sequence(const FullSeq& s);

/// The convolution right-hand sides Σ_α p_α · p_{λ-α}(y,0,…), α running over
/// the coordinatewise box 0 ≤ α ≤ λ (all other integer vectors contribute 0).
SymFY full_divided_rhs(const FullSeq& s, const Partition& la);

/// Checks E^y p_λ = Σ_α p_α p_{λ-α}(y,0,…) for every |λ| ≤ trunc.
VerifyReport verify_full_divided(const FullSeq& s);

/// The images of the operator F^y determined by the convolution identity on
/// the full-sequence basis.
std::map<Partition, SymFY> derive_sym_f(const FullSeq& s);

struct SymShefferReport {
    bool shift_invariant = false;
    std::optional<Rational> c;
    VerifyReport details;
};

/// Builds F^y from the convolution identity, tests its commutation with the
/// symmetric shift, and when shift-invariant verifies F^y = c·E^y with
/// c = p_()(0,0,…).
SymShefferReport sym_sheffer_verify(const FullSeq& s);

/// Σ_{k=0}^{n} (-1)^k e_k h_{n-k} = δ_{n0} for all n ≤ trunc.
VerifyReport sym_antipode_identity(int trunc);

/// The linear divided-powers identity E^y p_n = Σ p_k · p_{n-k}(y,0,…) for a
/// graded sequence of homogeneous symmetric functions.
VerifyReport verify_linear_divided(const std::vector<SymF>& seq);

}  // namespace umbra

#endif
