#ifndef LIECOH_LIEALG_LIE_ALGEBRA_HPP
#define LIECOH_LIEALG_LIE_ALGEBRA_HPP

#include "liecoh/exactalg/sparse.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace liecoh {

/// [e_i, e_j] = out, given for i < j (or i > j, stored with the sign flipped).
struct BracketEntry {
    std::size_t i;
    std::size_t j;
    SparseVec out;
};

/// Finite-dimensional Lie algebra given by structure constants.
///
/// Only pairs i < j are part of the defining data; the full table is
/// derived from them. Construction validates the Jacobi identity on all
/// basis triples.
class LieAlgebra {
public:
    LieAlgebra() : field_(FieldSpec::rationals()) {}

    /// Throws AntisymmetryViolation for nonzero [e_i, e_i] or for an
    /// unordered pair given twice inconsistently, JacobiViolation with the
    /// offending triple otherwise.
    static LieAlgebra from_structure(const Field& field, std::vector<std::string> names,
                                     const std::vector<BracketEntry>& brackets);

    const Field& field() const { return field_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    /// Throws InvalidArgument for unknown names.
    std::size_t index_of(const std::string& name) const;

    const SparseVec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
    Vector bracket(const Vector& x, const Vector& y) const;
    /// Nonzero brackets with i < j, in lexicographic order.
    std::vector<BracketEntry> structure() const;
    bool is_abelian() const;

    /// Matrix of ad(x) in the standard basis.
    Matrix ad(const Vector& x) const;
    Matrix ad_basis(std::size_t i) const;

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b);

private:
    Field field_;
    std::vector<std::string> names_;
    std::vector<SparseVec> table_;
};

/// Returns the first basis triple (i<j<k) violating Jacobi, if any.
bool find_jacobi_violation(const LieAlgebra& g, std::size_t& i, std::size_t& j, std::size_t& k);

/// Representation of a Lie algebra on Q^d by matrices rho(e_i).
class ModuleAction {
public:
    ModuleAction() = default;
    /// Validates rho([e_i,e_j]) = [rho(e_i), rho(e_j)]; throws NotAHomomorphism.
    ModuleAction(const LieAlgebra& g, std::vector<Matrix> rho);

    static ModuleAction trivial(const LieAlgebra& g, std::size_t d);
    static ModuleAction adjoint(const LieAlgebra& g);
    static ModuleAction coadjoint(const LieAlgebra& g);

    std::size_t dim() const { return dim_; }
    std::size_t algebra_dim() const { return rho_.size(); }
    const Matrix& rho(std::size_t i) const { return rho_[i]; }
    const std::vector<Matrix>& matrices() const { return rho_; }
    Matrix rho_of(const Vector& x) const;
    Vector act(const Vector& x, const Vector& v) const;
    bool is_trivial() const;

    /// Module over a subalgebra whose i-th basis vector is parent basis
    /// vector indices[i].
    ModuleAction restrict_to(const LieAlgebra& sub, const std::vector<std::size_t>& indices) const;

    friend bool operator==(const ModuleAction& a, const ModuleAction& b) {
        return a.dim_ == b.dim_ && a.rho_ == b.rho_;
    }

private:
    std::size_t dim_ = 0;
    std::vector<Matrix> rho_;
};

/// Lie algebra with a faithful matrix realization (sl, gl and relatives).
struct MatrixRealization {
    LieAlgebra algebra;
    std::vector<Matrix> basis;

    Matrix element(const Vector& x) const;
    /// Coordinates of a matrix in the span of `basis`; throws if outside.
    Vector coordinates(const Matrix& m) const;
};

/// Builds brackets from commutators of the given independent matrices.
MatrixRealization algebra_from_matrices(const Field& field, std::vector<std::string> names,
                                        std::vector<Matrix> basis);

MatrixRealization sl_realization(std::size_t n);
MatrixRealization gl_realization(std::size_t d);

LieAlgebra sl(std::size_t n);
LieAlgebra gl(std::size_t d);
LieAlgebra abelian(std::size_t n);
LieAlgebra heisenberg3();
/// aff(1) = span{x, y} with [x, y] = y.
LieAlgebra aff1();

/// Data for n x_S g with S: g -> der(n).
struct SemidirectData {
    LieAlgebra n;
    LieAlgebra g;
    /// S(g_a) as dim(n) x dim(n) matrices.
    std::vector<Matrix> action;
};

/// Basis: n first, then g. Throws NotADerivation / NotAHomomorphism.
LieAlgebra semidirect_sum(const SemidirectData& data);
void validate_semidirect(const SemidirectData& data);

/// T*(h) = h* x h with the coadjoint action; basis h* (names suffixed '*') then h.
LieAlgebra cotangent(const LieAlgebra& h);
SemidirectData cotangent_data(const LieAlgebra& h);

/// Parses "sl(n)", "gl(d)", "abelian(n)", "heisenberg(3)", "aff(1)" and
/// "cotangent(<name>)".
LieAlgebra standard_algebra(const std::string& name);

Subspace derived_subalgebra(const LieAlgebra& g);
bool is_perfect(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);

/// True iff phi is invertible and phi[x,y] = [phi x, phi y] on basis pairs.
bool is_automorphism(const LieAlgebra& g, const Matrix& phi);

}  // namespace liecoh

#endif
