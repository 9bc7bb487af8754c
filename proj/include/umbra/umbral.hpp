#ifndef UMBRA_UMBRAL_HPP
#define UMBRA_UMBRAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "umbra/operators.hpp"
#include "umbra/poly.hpp"

namespace umbra {

/// Graded polynomial sequence p_0..p_N with deg p_n = n exactly.
class PolySeq {
  public:
    PolySeq(int trunc, std::vector<Poly1> polys);

    int trunc() const { return trunc_; }
    const Poly1& at(int n) const;
    const std::vector<Poly1>& polys() const { return polys_; }

    friend bool operator==(const PolySeq& a, const PolySeq& b) {
        return a.trunc_ == b.trunc_ && a.polys_ == b.polys_;
    }
    friend bool operator!=(const PolySeq& a, const PolySeq& b) { return !(a == b); }

  private:
    int trunc_;
    std::vector<Poly1> polys_;
};

/// x^n / n!.
PolySeq divided_powers_seq(int trunc);

/// Deterministic seeded sequence for property runs: integer numerators in
/// [-9, 9], denominators in {1, 2, 3, 4}, leading coefficient forced nonzero.
PolySeq random_polyseq(std::uint64_t seed, int trunc);

struct Violation {
    int degree;
    std::string lhs;
    std::string rhs;
};

/// Outcome of an exact identity check over a degree range.
/// ok holds exactly when no violations were recorded.
struct VerifyReport {
    bool ok = true;
    int checked_lo = 0;
    int checked_hi = -1;
    std::vector<Violation> violations;
    std::string note;

    void fail(int degree, std::string lhs, std::string rhs);
    void add_note(const std::string& s);
    /// Folds in a sub-report; labels its contribution when it failed.
    void absorb(const VerifyReport& r, const std::string& label);
};

/// The objects produced by the generalized construction: the degree-lowering
/// operator Q of the input sequence, its basic sequence, the invertible
/// operator P carrying basic onto the input, the translation operator
/// G = Σ q_n(y) Q^n, and F = P_y ∘ G.
struct ShefferData {
    EndoOp Q;
    PolySeq basic;
    EndoOp P;
    BivarOp G;
    BivarOp F;
};

/// The unique operator with Q p_n = p_{n-1} and Q p_0 = 0.
EndoOp q_from_sequence(const PolySeq& p);

/// The unique sequence with Q q_n = q_{n-1} and q_n(0) = δ_{n0}; requires Q
/// to lower degree by exactly one and kill constants (witness reported).
PolySeq basic_from_q(const EndoOp& Q);

/// The invertible operator with P q_n = p_n.
EndoOp sheffer_operator(const PolySeq& p, const PolySeq& basic);

/// G = Σ_n q_n(y) Q^n; the sum terminates because Q^k lowers degree by k.
BivarOp generalized_translation(const EndoOp& Q, const PolySeq& basic);

/// Full pipeline p ↦ (Q, basic, P, G, F = P_y ∘ G); asserts P∘Q = Q∘P and
/// that P is invertible.
ShefferData generalized_sheffer(const PolySeq& p);

/// Σ_{k=0}^{n} p_k(x) p_{n-k}(y).
Poly2 convolution_rhs(const PolySeq& p, int n);

/// Checks F p_n(x) = Σ p_k(x) p_{n-k}(y) exactly for all n ≤ trunc.
VerifyReport verify_convolution(const BivarOp& F, const PolySeq& p);

/// Divided-powers check: the convolution identity with F = E^y.
VerifyReport verify_divided_powers(const PolySeq& p);

/// Binomial-type check: E^y q_n = Σ C(n,k) q_k(x) q_{n-k}(y).
VerifyReport verify_binomial(const PolySeq& q);

/// Sheffer-pair check: E^y s_n(x) = Σ p_{n-k}(y) s_k(x); the precondition
/// that p is a divided powers sequence is reported distinctly via the note.
VerifyReport verify_sheffer_pair(const PolySeq& s, const PolySeq& p);

/// P = ε_y ∘ F (sets y := 0 in each image).
EndoOp recover_operator(const BivarOp& F);

/// Verifies the equivalence conclusion for a shift-invariant F obeying the
/// convolution identity: P = ε_y∘F is invertible and shift-invariant,
/// (P⁻¹ p_n) is a divided powers sequence, and F = P_y ∘ E^y exactly.
/// Precondition and conjunct failures are reported separately in the note.
VerifyReport sheffer_theorem_check(const BivarOp& F, const PolySeq& p);

/// The unique BivarOp with F p_n = Σ p_k(x) p_{n-k}(y) on the basis p,
/// re-expressed on the monomial basis.
BivarOp bivar_from_convolution(const PolySeq& p);

}  // namespace umbra

#endif
