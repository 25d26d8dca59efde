#ifndef LIECOH_SEMIDIRECT_SEMIDIRECT_HPP
#define LIECOH_SEMIDIRECT_SEMIDIRECT_HPP

#include "liecoh/ce/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liecoh {

/// h = n x|_S g together with an h-module V (matrices on the h basis: n
/// first, then g).
class SemidirectContext {
public:
    SemidirectContext(SemidirectData data, ModuleAction v);

    const SemidirectData& data() const { return data_; }
    const LieAlgebra& h() const { return h_; }
    const LieAlgebra& n() const { return data_.n; }
    const LieAlgebra& g() const { return data_.g; }
    const ModuleAction& v_h() const { return v_; }
    const ModuleAction& v_n() const { return v_n_; }
    const ModuleAction& v_g() const { return v_g_; }
    std::size_t dim_n() const { return data_.n.dim(); }
    std::size_t dim_g() const { return data_.g.dim(); }

    /// (x.c)(n_1..n_q) = x.c(..) - sum_i c(.., S(x) n_i, ..) on flat C^q(n,V).
    const std::vector<Matrix>& g_on_cochains(std::size_t q) const { return q == 1 ? act1_ : act2_; }
    /// Z^1(n,V): basis in flat C^1(n,V) coordinates and the g-module on it.
    const std::vector<Vector>& z1_basis() const { return z1_; }
    const ModuleAction& z1_module() const { return z1_mod_; }
    /// V^n as a g-module, with its basis in V.
    const std::vector<Vector>& vn_basis() const { return vn_; }
    const ModuleAction& vn_module() const { return vn_mod_; }

    /// Coordinates of a 1-cocycle of n in the Z^1 basis.
    Vector z1_coordinates(const Vector& c1) const;
    Vector z1_vector(const Vector& coords) const;

private:
    SemidirectData data_;
    LieAlgebra h_;
    ModuleAction v_, v_n_, v_g_;
    std::vector<Matrix> act1_, act2_;
    std::vector<Vector> z1_;
    ModuleAction z1_mod_;
    std::vector<Vector> vn_;
    ModuleAction vn_mod_;
};

/// Restriction of a cochain on h to n (first block) or g (second block).
Cochain restrict_to_n(const SemidirectContext& s, const Cochain& w);
Cochain restrict_to_g(const SemidirectContext& s, const Cochain& w);

/// Matrices of R_n: H^2(h,V) -> H^2(n,V) and R_g: H^2(h,V) -> H^2(g,V) on
/// the representative bases.
struct RestrictionMaps {
    Matrix r_n;
    Matrix r_g;
};
RestrictionMaps restriction_maps(const SemidirectContext& s);

/// Inflation of f in Z^2(g, V^n) to a V-valued 2-cocycle on h.
Cochain inflate(const SemidirectContext& s, const Cochain& f);

/// H^2(n,V)^[g]: classes with d_n theta(x) = x.f for some theta.
struct BracketGroup {
    /// Basis of the subspace in H^2(n,V) coordinates.
    std::vector<Vector> basis;
    /// For each basis class: representative f and theta(x_a) in C^1(n,V).
    std::vector<Cochain> representatives;
    std::vector<std::vector<Vector>> thetas;
    std::size_t dim() const { return basis.size(); }
};
BracketGroup bracket_group(const SemidirectContext& s);
/// H^2(n,V)^g: classes with x.[f] = 0, in H^2(n,V) coordinates.
std::vector<Vector> invariant_classes(const SemidirectContext& s);

/// theta(x_a) with d_n theta(x_a) = x_a.f, or empty when f is not in the
/// bracket group.
std::optional<std::vector<Vector>> solve_theta(const SemidirectContext& s, const Cochain& f);

/// d_g theta in Z^2(g, Z^1(n,V)).
Cochain gamma_cocycle(const SemidirectContext& s, const std::vector<Vector>& theta);
/// -d_n o f_g in Z^2(g, Z^1(n,V)).
Cochain eta_cocycle(const SemidirectContext& s, const Cochain& f_g);
/// w_theta((n1,x1),(n2,x2)) = theta(x1)(n2) - theta(x2)(n1); throws
/// NotACocycle unless theta is a 1-cocycle of g with values in Z^1(n,V).
Cochain phi_cocycle(const SemidirectContext& s, const Cochain& theta);
/// For theta = d_g beta (beta in Z^1(n,V)), the cochain beta~ on h
/// extending beta by zero on g.
Cochain phi_witness(const SemidirectContext& s, const Vector& beta_z1);

struct ExactSequenceReport {
    std::size_t dim_h1_g_z1 = 0;
    std::size_t dim_h2_h = 0;
    std::size_t dim_h2_n = 0;
    std::size_t dim_h2_n_bracket = 0;
    std::size_t dim_h2_g = 0;
    std::size_t dim_h2_g_z1 = 0;
    /// H^2(h) x H^1(g, Z^1).
    Matrix phi;
    /// (H^2(n)^[g] + H^2(g)) x H^2(h), first block in bracket-group coordinates.
    Matrix restriction;
    /// H^2(g, Z^1) x (H^2(n)^[g] + H^2(g)).
    Matrix gamma_minus_eta;
    std::size_t rank_phi = 0;
    std::size_t rank_restriction = 0;
    bool exact_at_h2h = false;
    bool exact_at_middle = false;
    bool ri_zero = false;
    bool bracket_equals_invariant = false;
    bool gamma_well_defined = false;
    /// A vector in one subspace and not the other, if exactness fails.
    std::optional<Vector> counterexample;

    bool all_ok() const {
        return exact_at_h2h && exact_at_middle && ri_zero && bracket_equals_invariant && gamma_well_defined;
    }
};

ExactSequenceReport verify_exact_sequence(const SemidirectContext& s);

/// Named test instances: heis3 x| ab(1) (grading), sl2 x| ab(1) (ad h),
/// ab(2) x| ab(1) (rotation, shear, zero), ab(1) x| ab(2) on Q^2 with a
/// nilpotent n-action, aff(1) = ab(1) x| ab(1) on Q^2.
struct SemidirectInstance {
    std::string name;
    SemidirectData data;
    std::vector<Matrix> module;
    SemidirectContext context() const;
};
std::vector<SemidirectInstance> standard_semidirect_instances();
/// Throws InvalidArgument for unknown names.
SemidirectInstance semidirect_instance(const std::string& name);

}  // namespace liecoh

#endif
