#ifndef LIECOH_CE_COMPLEX_HPP
#define LIECOH_CE_COMPLEX_HPP

#include "liecoh/ce/cochain.hpp"
#include "liecoh/liealg/lie_algebra.hpp"

#include <optional>

namespace liecoh {

/// Matrix of d: C^p(g,V) -> C^{p+1}(g,V) in the flat cochain coordinates.
///
/// (d w)(x_0..x_p) = sum_i (-1)^i x_i.w(..^x_i..)
///                 + sum_{i<j} (-1)^{i+j} w([x_i,x_j], ..^x_i..^x_j..)
SparseMatrix ce_matrix(const LieAlgebra& g, const ModuleAction& v, std::size_t p);

Cochain ce_d(const LieAlgebra& g, const ModuleAction& v, const Cochain& c);

/// (i_x c)(x_1..x_{p-1}) = c(x, x_1, ..., x_{p-1}).
Cochain contract(const Cochain& c, const Vector& x);

/// (L_x c)(x_1..x_p) = x.c(x_1..x_p) - sum_i c(.., [x,x_i], ..).
Cochain lie_derivative(const LieAlgebra& g, const ModuleAction& v, const Cochain& c, const Vector& x);

struct CohomologyReport {
    std::size_t degree = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim = 0;
    std::vector<Cochain> representatives;
};

/// H^p(g,V) with canonical representatives: each representative is the
/// normal form, modulo the RREF of B^p, of a kernel basis vector of d that
/// is independent of B^p and of the earlier ones.
class CohomologySpace {
public:
    CohomologySpace(const LieAlgebra& g, const ModuleAction& v, std::size_t p);

    std::size_t degree() const { return p_; }
    std::size_t dim() const { return reps_.size(); }
    std::size_t dim_cocycles() const { return dim_z_; }
    std::size_t dim_coboundaries() const { return b_.rank(); }
    const std::vector<Cochain>& representatives() const { return reps_; }

    bool is_cocycle(const Cochain& c) const;
    bool is_coboundary(const Cochain& c) const;
    /// Coordinates of [c] in the representative basis; throws NotACocycle.
    Vector coordinates(const Cochain& c) const;
    Cochain from_coordinates(const Vector& coords) const;
    CohomologyReport report() const;

private:
    void check_shape(const Cochain& c) const;

    std::size_t p_;
    std::size_t n_;
    std::size_t dv_;
    SparseMatrix d_;
    Echelon b_;
    std::size_t dim_z_ = 0;
    std::vector<Cochain> reps_;
    std::vector<std::size_t> pivot_coords_;
    Matrix pivot_inverse_;
};

CohomologyReport cohomology(const LieAlgebra& g, const ModuleAction& v, std::size_t p);

struct CoboundaryResult {
    bool exact = false;
    /// d(potential) = target when exact.
    std::optional<Cochain> potential;
    /// y with y D = 0 and y . target != 0 when not exact (D the matrix of d).
    Vector certificate;
};

/// Solves d eta = w; throws NotACocycle unless d w = 0.
CoboundaryResult coboundary_solve(const LieAlgebra& g, const ModuleAction& v, const Cochain& w);

}  // namespace liecoh

#endif
