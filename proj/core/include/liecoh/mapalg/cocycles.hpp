#ifndef LIECOH_MAPALG_COCYCLES_HPP
#define LIECOH_MAPALG_COCYCLES_HPP

#include "liecoh/ce/complex.hpp"
#include "liecoh/mapalg/graded.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace liecoh {

/// Type I: w(x t^a, y t^b) = k(x,y) [t^{a+b} sum_i b_i delta_i], valued in
/// reduced 1-forms. Throws NotInvariant.
GradedCochain type1_cocycle(const LieAlgebra& k, int r, const BilinearFormSym& kappa);

/// Type II: w(x t^a, y t^b) = eta(x,y) t^{a+b}, valued in functions.
/// Throws NotACocycle unless eta is in Z^2(k, V) for trivial V.
GradedCochain type2_cocycle(const LieAlgebra& k, int r, const Cochain& eta);

/// Variable type II: w(x t^a, y t^b) = sum_g eta_g(x,y) t^{a+b+g}.
GradedCochain type2_variable_cocycle(const LieAlgebra& k, int r, const std::map<MultiIndex, Cochain>& table);

struct Type2Coboundary {
    bool coboundary = false;
    /// B(y t^d) = sum_g beta_g(y) t^{d+g} with dB = w, when coboundary.
    std::optional<GradedCochain> witness;
    /// Table entries whose value is not a coboundary.
    std::vector<MultiIndex> obstructions;
};
Type2Coboundary type2_coboundary(const LieAlgebra& k, int r, const std::map<MultiIndex, Cochain>& table);

/// Type III: k(xi1, d xi2) - k(xi2, d xi1) - d(eta(xi1, xi2)) in 1-forms.
/// Throws KappaNotExact unless d eta = G(k).
GradedCochain type3_cocycle(const LieAlgebra& k, int r, const BilinearFormSym& kappa, const Cochain& eta);
/// Same with eta solved from d eta = G(k).
GradedCochain type3_cocycle(const LieAlgebra& k, int r, const BilinearFormSym& kappa);

/// k(d xi1, d xi2) in 2-forms. On gauge_semidirect(k, r) the vector-field
/// slots contribute zero.
GradedCochain curvature_cocycle(const LieAlgebra& k, int r, const BilinearFormSym& kappa);

/// Finite (beta_a, beta_s) data; entries outside the tables are zero.
struct CocyclePair {
    std::size_t module_dim = 1;
    /// (exponent g, 0-based axis i) -> beta_a(t^g delta_i).
    std::map<std::pair<MultiIndex, std::size_t>, BilinearFormSym> beta_a;
    /// g -> beta_s(t^g).
    std::map<MultiIndex, Cochain> beta_s;

    /// Exponents appearing in either table.
    std::vector<MultiIndex> touched() const;
};

/// G(beta_a(d t^g)) - d beta_s(t^g) as a 3-cochain on k.
Cochain coupling_defect(const LieAlgebra& k, int r, const CocyclePair& pair, const MultiIndex& g);

struct CouplingWitness {
    MultiIndex monomial;
    Cochain defect;
    /// (e_i t^g, e_j, e_k) with d w != 0.
    std::vector<GBasis> triple;
    Value d_value;
};
/// First touched monomial violating the coupling, with a verified triple.
std::optional<CouplingWitness> find_coupling_violation(const LieAlgebra& k, int r, const CocyclePair& pair);

/// sum_i (b_i - a_i) beta_a(t^{a+b} delta_i)(x,y) - beta_s(t^{a+b})(x,y).
/// Throws NotInvariant on a non-invariant beta_a entry and
/// CouplingViolated on a decoupled monomial.
GradedCochain pair_cocycle(const LieAlgebra& k, int r, const CocyclePair& pair);
/// The same evaluator without validation.
GradedCochain pair_cocycle_unchecked(const LieAlgebra& k, int r, const CocyclePair& pair);

/// Kac-Moody data: beta_a(t^0 delta_axis) = k / 2.
CocyclePair kac_moody_pair(const BilinearFormSym& kappa, int r, std::size_t axis = 0);

/// Cycle integral (1-based axis) composed with a reduced-form cocycle.
GradedCochain reduction_residue(const GradedCochain& w, int axis);
/// Evaluation at t = point composed with a function-valued cocycle.
GradedCochain reduction_eval(const GradedCochain& w, const std::vector<Scalar>& point);
/// Restriction of a vector-valued cochain to constants k (x) 1.
Cochain restrict_to_constants(const GradedCochain& w, std::size_t algebra_dim, int r);

/// z (+)_w g for a vector- or function-valued 2-cochain w. Slots of g
/// come first, then c_1..c_dv. Scalar values land on the central slots in
/// degree 0; function values t^g land on degree g.
GradedAlgebra central_extension(const GradedAlgebra& g, const GradedCochain& w);

/// [[a,b],c] + [[b,c],a] + [[c,a],b].
GElement jacobiator(const GradedAlgebra& g, const GBasis& a, const GBasis& b, const GBasis& c);
struct JacobiFinding {
    bool holds = true;
    std::vector<GBasis> triple;
    GElement defect;
};
JacobiFinding jacobi_on(const GradedAlgebra& g, const std::vector<std::vector<GBasis>>& triples);

/// Equal bracket tables on all pairs of window basis elements.
bool brackets_agree(const GradedAlgebra& a, const GradedAlgebra& b, int window);

/// Extension by zero to gauge_semidirect(k, r): w~((xi,X),(xi',X')) = w(xi,xi').
GradedCochain extended_cocycle(const GradedCochain& w, std::size_t gauge_slots);
/// L_X(w(xi1,xi2)) = w(X.xi1, xi2) + w(xi1, X.xi2) in gauge_semidirect(k, r);
/// X is a vector-field basis element (slot >= dim k).
bool invariance_check(const LieAlgebra& k, int r, const GradedCochain& w, const GBasis& x, const GBasis& xi1,
                      const GBasis& xi2);

}  // namespace liecoh

#endif
