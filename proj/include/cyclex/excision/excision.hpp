#pragma once

#include "cyclex/algebra/algebra.hpp"
#include "cyclex/core/chain_complex.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cyclex {

/// Surjection f : A -> B with kernel I, a linear section of f and I as an algebra.
class Extension {
public:
    /// Throws MorphismError unless f is surjective.
    Extension(std::string name, AlgebraMorphism f);

    const std::string& name() const { return name_; }
    const Algebra& ambient() const { return f_.source(); }
    const Algebra& quotient() const { return f_.target(); }
    AlgebraPtr ambient_ptr() const { return f_.source_ptr(); }
    AlgebraPtr quotient_ptr() const { return f_.target_ptr(); }
    const AlgebraMorphism& projection() const { return f_; }
    const Ideal& ideal() const { return ideal_; }
    AlgebraPtr ideal_algebra() const { return ideal_.as_algebra(); }
    const AlgebraMorphism& ideal_inclusion() const { return inclusion_; }
    /// dim(A) x dim(B) with f * section = id.
    const SparseMatrix& section() const { return section_; }

private:
    std::string name_;
    AlgebraMorphism f_;
    Ideal ideal_;
    AlgebraMorphism inclusion_;
    SparseMatrix section_;
};

/// Named extensions:
///   split_product            Q x 0 -> Q x Q -> Q
///   square_zero[(k)]         V -> Q + V -> Q, dim V = k (default 1)
///   dual_numbers             (e) -> Q[e] -> Q
///   trunc3 | trunc(k)        (t) -> Q[t]/t^k -> Q
///   trunc_step[(k)]          (t^{k-1}) -> Q[t]/t^k -> Q[t]/t^{k-1}, k >= 2 (default 3)
///   upper_triangular         strictly upper -> UT_2(Q) -> Q x Q
///   matrix_dual              e M_2(Q) -> M_2(Q[e]) -> M_2(Q)
///   aug(P)                   augmentation of the preset P
///   matrix(r, P)             M_r of the augmentation of P
///   tensor(C, P)             C (x) P -> C through the augmentation of P
///   identity(P)              P -> P with I = 0
///   zero(P)                  P -> 0 with I = P
/// Throws ConfigError on unknown names.
Extension named_extension(std::string_view expression);
std::vector<std::string> extension_names();

/// Augmentation B -> Q of an augmented algebra as a morphism.
AlgebraMorphism augmentation_morphism(const AlgebraPtr& b);

struct HUnitalVerdict {
    bool pass = true;
    /// Degrees whose Bar homology was computed; a PASS only covers these.
    Interval certified;
    std::vector<std::size_t> betti;
    std::optional<int> failing_degree;
};

/// Bar(A, A) acyclic on [0, D-1]. D >= 2.
HUnitalVerdict h_unitality_check(const AlgebraPtr& a, int degree_bound);
/// Bar(A, M) acyclic on [0, D-1]. D >= 2.
HUnitalVerdict h_unitary_check(const Bimodule& m, int degree_bound);

enum class FiltrationKind { FBar, FHoch, QBar, QHoch };
const char* to_string(FiltrationKind k);

struct FiltrationStage {
    int n = 0;
    FiltrationKind kind = FiltrationKind::FBar;
    ComplexPtr complex;
    /// The unfiltered complex: Bar/Hoch(A, M) for F, Bar/Hoch(A, B) for Q.
    ComplexPtr ambient;
    /// F: inclusion stage_p -> ambient_p. Q: projection ambient_p -> stage_p.
    std::vector<SparseMatrix> structure_map;
};

/// F^n: spaces M (x) A^p for p <= n and M (x) A^n (x) I^{p-n} above, degrees 0..D.
/// The inclusion is checked to be a chain map.
FiltrationStage filtration_F(const Extension& ext, const Bimodule& m, int n, int degree_bound, bool hoch);

/// Q^n: spaces B^{(x)p+1} for p <= n and B^{(x)n+1} (x) A^{p-n} above, degrees 0..D,
/// as a quotient of Bar/Hoch(A, B). The projection is checked to be a chain map.
FiltrationStage filtration_Q(const Extension& ext, int n, int degree_bound, bool hoch);

/// dim ker(Q^n_p -> Q^{n+1}_p) for p = 0..D, from the rank of the transition map.
std::vector<std::size_t> filtration_Q_kernel_dims(const Extension& ext, int n, int degree_bound);

/// Model A^n (x) B (x) I^q (x) M for F^{n+1}/F^n in degree n+1+q. The
/// induced differential is id on A^n (x) B tensored with the Bar-type
/// operator on I^q (x) M: internal products only in the Bar case, and with
/// the final i_q.m term in the Hochschild case.
struct GradedPieceVerdict {
    bool pass = true;
    Interval checked;
    std::optional<int> failing_degree;
    /// signs[k] is the sign of the isomorphism in degree checked.lo + k.
    std::vector<int> signs;
    std::vector<std::size_t> dims;
};

GradedPieceVerdict graded_piece_F_check(const Extension& ext, const Bimodule& m, int n, int degree_bound, bool hoch);

struct RelativeHomology {
    /// Homology of the homotopy fiber of HH(A) -> HH(B) (or HC), on [0, D-2].
    HomologyReport report;
    std::vector<std::size_t> source_betti, target_betti;
    /// rel_n = dim ker(H_n A -> H_n B) + dim coker(H_{n+1} A -> H_{n+1} B) on every reported n.
    bool les_consistent = true;
};

RelativeHomology relative_hh(const Extension& ext, int degree_bound);
RelativeHomology relative_hc(const Extension& ext, int degree_bound);

struct ExcisionTheory {
    std::string theory;
    /// Quasi-iso test of eta : X(I) -> hofib(X(A) -> X(B)) on cone degrees.
    QuasiIsoVerdict verdict;
    /// eta is an isomorphism on H_n for n <= iso_through (when verdict holds).
    int iso_through = 0;
    std::vector<std::size_t> ideal_betti, relative_betti;
};

struct WodzickiVerdict {
    HUnitalVerdict ideal_h_unital;
    ExcisionTheory hh, hc;
    bool pass = true;
};

/// eta for one theory (HC when cyclic, else HH), cone checked on degrees [-1, D-1].
ExcisionTheory excision_check(const Extension& ext, int degree_bound, bool cyclic);

/// Builds eta_HH and eta_HC as chain maps into the homotopy fibers and tests
/// them up to degree D-2. Verdicts are descriptive: failures are reported, not thrown.
WodzickiVerdict wodzicki_verify(const Extension& ext, int degree_bound);

/// Consequences of the filtration argument. `hypothesis` records
/// whether the H-unitality premise held up to D; `conclusion` is checked
/// regardless.
struct CorollaryReport {
    std::string name;
    bool hypothesis = false;
    bool conclusion = false;
    std::string detail;
};

/// M H-unitary over I => Bar(A, M) acyclic and Hoch(I, M) -> Hoch(A, M) a quasi-iso.
CorollaryReport corollary_hiha(const Extension& ext, const Bimodule& m, int degree_bound);
/// I H-unital => Hoch(A, N (x) I) acyclic for N = B.
CorollaryReport corollary_bmod_hunital(const Extension& ext, int degree_bound);
/// I H-unital => Bar(A, B) -> Bar(B) and Hoch(A, B) -> Hoch(B) quasi-isos.
CorollaryReport corollary_hahb(const Extension& ext, int degree_bound);

} // namespace cyclex
