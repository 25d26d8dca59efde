#ifndef LIECOH_VFIELDS_VFIELDS_HPP
#define LIECOH_VFIELDS_VFIELDS_HPP

#include "liecoh/mapalg/cocycles.hpp"

#include <string>
#include <vector>

namespace liecoh {

/// X = sum_i f_i d_i with d_i = t_i d/dt_i on T^r.
class VectorField {
public:
    explicit VectorField(int vars = 0);
    explicit VectorField(std::vector<LaurentPoly> components);
    /// t^a d_axis (0-based axis).
    static VectorField basis(const MultiIndex& alpha, std::size_t axis);
    /// L_m = t^m d on T^1.
    static VectorField witt(int m);
    static VectorField from_element(const GElement& x, int vars);

    int vars() const { return r_; }
    const std::vector<LaurentPoly>& components() const { return f_; }
    const LaurentPoly& operator[](std::size_t i) const { return f_.at(i); }
    /// Element of vector_field_algebra(r).
    GElement to_element() const;
    /// X(h) = sum_i f_i d_i h.
    LaurentPoly apply(const LaurentPoly& h) const;

    friend VectorField operator+(const VectorField& a, const VectorField& b);
    friend VectorField operator*(const Scalar& s, const VectorField& a);
    friend bool operator==(const VectorField& a, const VectorField& b) { return a.r_ == b.r_ && a.f_ == b.f_; }
    std::string to_string() const;

private:
    int r_;
    std::vector<LaurentPoly> f_;
};

/// [X,Y]_i = sum_j (f_j d_j g_i - g_j d_j f_i).
VectorField bracket(const VectorField& x, const VectorField& y);

/// r x r matrix of functions.
using FunctionMatrix = std::vector<std::vector<LaurentPoly>>;

/// theta(X)_ij = -d_j f_i in the log frame.
FunctionMatrix crossed_hom_theta(const VectorField& x);
/// X.theta(Y) - Y.theta(X) + [theta(X), theta(Y)] - theta([X,Y]); zero for a
/// crossed homomorphism.
FunctionMatrix crossed_hom_defect(const VectorField& x, const VectorField& y);
/// theta(X) in mapping_algebra(gl(r), r), slot i*r + j for E_ij.
GElement theta_element(const VectorField& x);

/// The action of vector_field_algebra(r) on form values by Lie derivative.
ValueAction vf_action(int r);

/// Psi-bar_k, Psi_k and Phi_k as cochains on vector_field_algebra(r).
/// Psi-bar_1 = Phi_1 = Tr theta (functions); Psi_1 = Tr d theta (1-forms);
/// Psi_2 = sum_S2 sgn Tr(d theta ^ d theta) (2-forms);
/// Psi-bar_2 = [Tr(theta_1 d theta_2 - theta_2 d theta_1)] (reduced 1-forms);
/// Phi_2 = sum_S3 sgn Tr(theta theta theta) (functions). Throws
/// InvalidArgument for k outside {1, 2}.
GradedCochain psibar_k(int k, int r);
GradedCochain psi_k(int k, int r);
GradedCochain phi_k(int k, int r);

/// Cup product of two cochains on a vector-field algebra with values
/// functions x forms (any order), multiplied pointwise.
GradedCochain cup(const GradedCochain& a, const GradedCochain& b);
/// Applies the de Rham differential to the values (forms or reduced 1-forms).
GradedCochain d_values(const GradedCochain& w);

/// (theta* w)(X,Y) = w(theta X, theta Y) for w on mapping_algebra(gl(r), r),
/// as a cochain on vector_field_algebra(r).
GradedCochain pullback_cocycle(const GradedCochain& w);

/// Witt scalar cocycle (L_m, L_n) -> 2 m^3 delta_{m+n,0}.
GradedCochain virasoro_cocycle();
/// The same plus d(beta), beta(L_0) = -1: (L_m, L_-m) -> 2(m^3 - m).
GradedCochain virasoro_normal_form();
/// The potential of the shift between the two forms.
GradedCochain virasoro_shift_potential();

/// w^[2](X,Y) = i_Y i_X w for a closed (p+2)-form, p in {0, 1}. Values are
/// functions (p = 0) or reduced 1-forms (p = 1). Throws NotClosed.
GradedCochain transfer_cocycle(const TorusForm& w);
/// beta(X) = i_X mu (p = 0) or [i_X mu] (p = 1); d beta = (d mu)^[2].
GradedCochain transfer_potential(const TorusForm& mu);

/// Constant-function embedding of a scalar cocycle on vector_field_algebra(r).
GradedCochain times_one(const GradedCochain& w, int r);
/// beta(X) = f for X = f d on T^1; a function-valued 1-cocycle.
GradedCochain witt_coefficient_cocycle();

/// Coboundary system on a window: unknowns are homogeneous beta(e) for
/// basis e with |deg e| <= 2N, equations are d beta = w on pairs with
/// |deg| <= N.
struct WindowSystem {
    int window = 0;
    std::vector<GBasis> unknown_basis;
    std::vector<std::size_t> unknown_offset;
    std::vector<std::pair<GBasis, GBasis>> pairs;
    std::vector<std::size_t> row_offset;
    SparseMatrix d;
};
WindowSystem window_system(const GradedAlgebra& g, const ValueSpace& space, const ValueAction& act, int n);
/// Right-hand side of w on the window pairs.
Vector window_rhs(const WindowSystem& s, const GradedCochain& w);

struct WindowCertificate {
    enum class Status { feasible, infeasible };
    Status status = Status::feasible;
    int window = 0;
    /// Potential on the unknown basis when feasible.
    GradedCochain potential;
    /// y with y D = 0 and y w != 0 when infeasible.
    Vector certificate;
    Scalar pairing;
    bool verified = false;
};
WindowCertificate window_coboundary_cert(const GradedAlgebra& g, const GradedCochain& w, const ValueAction& act, int n);

/// Independence of k classes: rows y_1..y_k of the left kernel of D with
/// the k x k matrix (y_i . w_j) invertible.
struct BatchCertificate {
    bool independent = false;
    int window = 0;
    std::vector<Vector> rows;
    Matrix pairings;
    bool verified = false;
};
BatchCertificate batch_independence_cert(const GradedAlgebra& g, const std::vector<GradedCochain>& ws,
                                         const ValueAction& act, int n);

/// Named candidate classes for function-valued H^2 of V(T^1).
struct NamedCocycle {
    std::string name;
    GradedCochain cocycle;
};
std::vector<NamedCocycle> h2vect_candidates();
/// Greedily keeps candidates whose batch with the kept ones stays
/// independent at window n.
std::vector<NamedCocycle> select_independent(const std::vector<NamedCocycle>& candidates, int n);

}  // namespace liecoh

#endif
