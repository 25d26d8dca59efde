#ifndef LIECOH_MULTILOOP_MULTILOOP_HPP
#define LIECOH_MULTILOOP_MULTILOOP_HPP

#include "liecoh/mapalg/cocycles.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liecoh {

/// Operator on k (x) Laurent_r: x t^a -> chi(a) sigma(x) t^{A a}.
struct DeltaGenerator {
    Matrix sigma;
    LatticeAction lattice;
    /// Declared order; 0 skips the order check.
    int order = 0;

    GElement apply(const GElement& x) const;
    DeltaGenerator compose(const DeltaGenerator& inner) const;
    friend bool operator==(const DeltaGenerator& a, const DeltaGenerator& b) {
        return a.sigma == b.sigma && a.lattice == b.lattice;
    }
};

/// sigma_i in Aut(k) of order m_i with roots zeta_i; the generators act by
/// x t^a -> zeta_i^{a_i} sigma_i(x) t^a.
struct MultiloopSpec {
    int r = 0;
    std::vector<int> orders;
    std::vector<Scalar> roots;
    std::vector<Matrix> sigmas;
    bool require_primitive = true;

    /// Throws NotAutomorphism, OrderViolation, NonCommutingAutomorphisms or
    /// InvalidArgument (root of the wrong order).
    void validate(const LieAlgebra& k) const;
    std::vector<DeltaGenerator> generators() const;
};

/// One step of an iterated loop construction: adds a variable t_new and
/// imposes f(zeta t_new) = sigma(f(t_new)), where sigma acts on the
/// previous algebra by a lattice action on the old variables together
/// with a matrix on k.
struct LoopStep {
    Matrix sigma;
    /// Acts on the previous variables; empty for identity.
    std::vector<std::vector<int>> lattice;
    int order = 1;
    Scalar root = Scalar(1);
};

/// Per orbit: the orbit of exponents and a basis of the fixed component.
struct OrbitComponent {
    MultiIndex rep;
    std::vector<MultiIndex> orbit;
    std::vector<GElement> basis;
};

/// Fixed points of a finite group Delta acting on k (x) Laurent_r,
/// restricted to the exponent box [-N, N]^r. Components are indexed by
/// orbits of the lattice parts; for multiloop algebras orbits are single
/// exponents and this is the Z^r-grading.
class FixedPointAlgebra {
public:
    /// Validates that the generators commute and have their declared
    /// orders on the window and that sigma parts are automorphisms; lattice
    /// parts must be signed permutations.
    FixedPointAlgebra(std::string name, LieAlgebra k, int r, std::vector<DeltaGenerator> gens, int window);

    const std::string& name() const { return name_; }
    const LieAlgebra& base() const { return k_; }
    int vars() const { return r_; }
    int window() const { return n_; }
    const std::vector<DeltaGenerator>& generators() const { return gens_; }
    const GradedAlgebra& ambient() const { return ambient_; }
    const std::vector<OrbitComponent>& components() const { return comps_; }
    const OrbitComponent& component(const MultiIndex& alpha) const;
    /// Canonical orbit representative (largest exponent in the orbit).
    MultiIndex orbit_rep(const MultiIndex& alpha) const;
    std::vector<MultiIndex> orbit_of(const MultiIndex& alpha) const;
    std::size_t dim_at(const MultiIndex& alpha) const { return component(alpha).basis.size(); }

    bool is_fixed(const GElement& x) const;
    GElement bracket(const GElement& x, const GElement& y) const { return ambient_.bracket(x, y); }
    /// Splits an element into orbit components.
    std::map<MultiIndex, GElement> split(const GElement& x) const;
    /// Coordinates of a fixed element supported in one orbit.
    Vector coordinates(const MultiIndex& rep, const GElement& x) const;
    /// Fixed basis of an orbit that may lie outside the window.
    std::vector<GElement> fixed_basis(const MultiIndex& alpha) const;

    /// All pairs of basis elements whose bracket support stays in the
    /// window are mapped into the algebra.
    bool closed_on_window() const;

    /// Dimension of the Delta-fixed functions in the orbit of alpha.
    std::size_t fixed_ring_dim(const MultiIndex& alpha) const;

    /// Bracket table on the window: for every ordered pair of basis
    /// elements with bracket in the window, the coordinates of the bracket.
    std::string table_digest() const;

private:
    std::string name_;
    LieAlgebra k_;
    int r_;
    int n_;
    std::vector<DeltaGenerator> gens_;
    std::vector<std::vector<std::vector<int>>> lattice_group_;
    GradedAlgebra ambient_;
    std::vector<OrbitComponent> comps_;
    std::map<MultiIndex, std::size_t> index_;
};

struct GradedBasisReport {
    int window = 0;
    /// orbit representative -> dimension.
    std::map<MultiIndex, std::size_t> dims;
    bool closed = false;
    std::string to_string(const FixedPointAlgebra& a) const;
};

FixedPointAlgebra multiloop_build(const LieAlgebra& k, const MultiloopSpec& spec, int window);
GradedBasisReport basis_report(const FixedPointAlgebra& a);

/// L(...L(k, sigma_1)..., sigma_s); throws OrderViolation or
/// NotAutomorphism (a step that does not preserve the previous algebra).
FixedPointAlgebra iterated_loop(const LieAlgebra& k, const std::vector<LoopStep>& steps, int window);

/// {f : f(t1, -t2) = f(t1^-1, t2), f(-t1, t2) = sigma1(f)} in sl_n (x)
/// Laurent_2 with sigma1(x) = -x^T. Throws InvalidArgument for n < 2.
FixedPointAlgebra klein_bottle_algebra(std::size_t n, int window);
/// The same algebra as an iterated loop algebra.
FixedPointAlgebra klein_bottle_iterated(std::size_t n, int window);
Matrix minus_transpose(std::size_t n);

/// Centroid maps of orbit degree D: phi with phi(L_O) in the sum of L_P
/// over orbits P meeting O + D, phi[x,y] = [phi x, y] = [x, phi y] on all
/// pairs whose bracket support stays in the window.
struct CentroidDegree {
    MultiIndex rep;
    std::size_t orbit_size = 0;
    std::size_t dim = 0;
    std::size_t fixed_ring_dim = 0;
    std::size_t full_ring_dim = 0;
};

struct CentroidReport {
    int window = 0;
    int shift_window = 0;
    std::vector<CentroidDegree> degrees;
    /// Degree-0 centroid maps, as matrices on the window basis (orbits in
    /// component order).
    std::vector<Matrix> degree_zero_basis;
    bool matches_fixed_ring = false;
    /// First degree where the centroid differs from the full Laurent ring.
    std::optional<MultiIndex> full_ring_witness;
};

/// Throws WindowTooSmall if shift_window > window / 2 or an orbit in the
/// window is not reached by any constraint.
CentroidReport graded_centroid(const FixedPointAlgebra& a, int shift_window);

/// [k(xi_1, d xi_2)] on the fixed-point algebra. Throws NotEquivariant when
/// k(sigma x, sigma y) != k(x, y) for a generator.
GradedCochain gauge_type1_on_multiloop(const FixedPointAlgebra& a, const BilinearFormSym& kappa);
/// Value is fixed by the lattice parts of all generators.
bool is_delta_fixed(const FixedPointAlgebra& a, const ReducedOneForm& w);

}  // namespace liecoh

#endif
