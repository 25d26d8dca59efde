#ifndef LIECOH_CE_FORMS_HPP
#define LIECOH_CE_FORMS_HPP

#include "liecoh/ce/complex.hpp"

#include <vector>

namespace liecoh {

/// Symmetric bilinear map k x k -> V, stored on basis pairs.
class BilinearFormSym {
public:
    BilinearFormSym() = default;
    BilinearFormSym(std::size_t algebra_dim, std::size_t module_dim);
    /// Flat layout: pair (i <= j) in lex order, times module_dim.
    static BilinearFormSym from_flat(std::size_t algebra_dim, std::size_t module_dim, const Vector& flat);
    /// Scalar-valued form from a symmetric n x n matrix.
    static BilinearFormSym from_matrix(const Matrix& m);

    std::size_t algebra_dim() const { return n_; }
    std::size_t module_dim() const { return dv_; }

    const Vector& at(std::size_t i, std::size_t j) const { return table_[i * n_ + j]; }
    void set(std::size_t i, std::size_t j, const Vector& v);
    Vector operator()(const Vector& x, const Vector& y) const;
    Vector flat() const;
    /// Gram matrix of component a.
    Matrix gram(std::size_t a = 0) const;
    bool is_zero() const;

    BilinearFormSym& operator+=(const BilinearFormSym& o);
    friend BilinearFormSym operator+(BilinearFormSym a, const BilinearFormSym& b) { return a += b; }
    friend BilinearFormSym operator*(const Scalar& s, BilinearFormSym a);
    friend bool operator==(const BilinearFormSym& a, const BilinearFormSym& b) {
        return a.n_ == b.n_ && a.dv_ == b.dv_ && a.table_ == b.table_;
    }

private:
    std::size_t n_ = 0;
    std::size_t dv_ = 0;
    std::vector<Vector> table_;
};

/// Number of pairs i <= j among n indices, and the rank of (i, j) in lex order.
std::size_t pair_count(std::size_t n);
std::size_t pair_rank(std::size_t n, std::size_t i, std::size_t j);

/// z.k(x,y) = k([z,x],y) + k(x,[z,y]) for all basis triples.
bool is_invariant(const LieAlgebra& g, const ModuleAction& v, const BilinearFormSym& k);
/// Basis of Sym^2(g,V)^g.
std::vector<BilinearFormSym> invariant_sym_forms(const LieAlgebra& g, const ModuleAction& v);

BilinearFormSym killing_form(const LieAlgebra& g);
/// tr(x y) in the given realization.
BilinearFormSym trace_form(const MatrixRealization& m);
/// tr(x) tr(y) in the given realization.
BilinearFormSym trace_square_form(const MatrixRealization& m);

/// V(g) = S^2(g) / g.S^2(g) and the quotient map k_u(x,y) = [x v y].
struct UniversalForm {
    std::size_t dim = 0;
    /// Symmetric-square pairs whose classes form the basis of V(g).
    std::vector<std::pair<std::size_t, std::size_t>> basis_pairs;
    BilinearFormSym kappa;
};

UniversalForm universal_form(const LieAlgebra& g);

/// The unique lambda (dim V x dim V(g)) with k = lambda o k_u; throws
/// NotInvariant when k does not factor.
Matrix factor_through_universal(const LieAlgebra& g, const UniversalForm& u, const BilinearFormSym& k);

/// G(k)(x,y,z) = k([x,y],z), a V-valued 3-cochain for the trivial module.
/// Throws NotInvariant.
Cochain cartan_map(const LieAlgebra& g, const BilinearFormSym& k);
/// Solves d eta = G(k) with trivial action on V.
CoboundaryResult cartan_exactness(const LieAlgebra& g, const BilinearFormSym& k);

/// V = Z^2(g, F)^* with basis dual to a kernel basis f_1..f_q of d_2, and
/// eta_u(x,x')[l] = f_l(x,x').
struct UniversalType2 {
    std::vector<Cochain> cocycles;
    Cochain eta;
};

UniversalType2 universal_type2_target(const LieAlgebra& g);

}  // namespace liecoh

#endif
