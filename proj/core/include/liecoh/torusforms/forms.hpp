#ifndef LIECOH_TORUSFORMS_FORMS_HPP
#define LIECOH_TORUSFORMS_FORMS_HPP

#include "liecoh/ce/forms.hpp"
#include "liecoh/ce/products.hpp"
#include "liecoh/exactalg/laurent.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace liecoh {

/// V-valued p-form on the torus T^r in the logarithmic frame
/// delta_i = dt_i / t_i. Terms are keyed by (exponent, increasing axes),
/// axes 0-based. Degrees above r give the zero space.
class TorusForm {
public:
    using Key = std::pair<MultiIndex, Tuple>;
    using Terms = std::map<Key, Vector>;

    explicit TorusForm(int vars = 0, std::size_t degree = 0, std::size_t module_dim = 1);
    static TorusForm function(const LaurentPoly& f);
    /// Degree-0 form with one Laurent polynomial per module coordinate.
    static TorusForm functions(int vars, const std::vector<LaurentPoly>& fs);
    /// coeff * t^alpha delta_{axes}; axes in any order (sign applied).
    static TorusForm monomial(const MultiIndex& alpha, const Tuple& axes, const Vector& coeff);
    /// The scalar form delta_axis (0-based).
    static TorusForm delta(int vars, std::size_t axis);

    int vars() const { return r_; }
    std::size_t degree() const { return p_; }
    std::size_t module_dim() const { return dv_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& alpha, Tuple axes, const Vector& coeff);
    Vector coefficient(const MultiIndex& alpha, const Tuple& axes) const;
    /// Coefficient of delta_axes in module coordinate a.
    LaurentPoly component(const Tuple& axes, std::size_t a = 0) const;

    /// f * this.
    TorusForm multiply(const LaurentPoly& f) const;
    /// Applies a linear map to the values.
    TorusForm apply(const Matrix& m) const;

    TorusForm operator-() const;
    TorusForm& operator+=(const TorusForm& o);
    TorusForm& operator-=(const TorusForm& o);
    friend TorusForm operator+(TorusForm a, const TorusForm& b) { return a += b; }
    friend TorusForm operator-(TorusForm a, const TorusForm& b) { return a -= b; }
    friend TorusForm operator*(const Scalar& s, const TorusForm& a);
    friend bool operator==(const TorusForm& a, const TorusForm& b) {
        return a.r_ == b.r_ && a.p_ == b.p_ && a.dv_ == b.dv_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TorusForm& a, const TorusForm& b) { return !(a == b); }

    std::string to_string() const;

private:
    void check_compatible(const TorusForm& o) const;

    int r_;
    std::size_t p_;
    std::size_t dv_;
    Terms terms_;
};

/// d(f delta_I) = sum_j d_j(f) delta_j ^ delta_I.
TorusForm derham_d(const TorusForm& w);
/// Contraction with X = sum_i x[i] t_i d/dt_i.
TorusForm interior(const TorusForm& w, const std::vector<LaurentPoly>& x);
/// L_X = i_X d + d i_X.
TorusForm form_lie_derivative(const TorusForm& w, const std::vector<LaurentPoly>& x);
/// Wedge product with values combined by a pairing.
TorusForm wedge(const TorusForm& a, const TorusForm& b, const Pairing& pairing);
/// a ^_k b for k-valued forms and a symmetric form k: k -> V.
TorusForm wedge_kappa(const TorusForm& a, const TorusForm& b, const BilinearFormSym& k);
Pairing pairing_of(const BilinearFormSym& k);

/// Lattice substitution t^alpha -> chi(alpha) t^{A alpha}, chi(alpha) =
/// prod_i chi_i^{alpha_i}; on the frame delta_j -> sum_i A_ij delta_i.
struct LatticeAction {
    std::vector<std::vector<int>> a;
    std::vector<Scalar> chi;

    static LatticeAction identity(int r);
    int vars() const { return static_cast<int>(a.size()); }
    MultiIndex map_index(const MultiIndex& alpha) const;
    Scalar character(const MultiIndex& alpha) const;
    LatticeAction compose(const LatticeAction& inner) const;
    friend bool operator==(const LatticeAction& x, const LatticeAction& y) { return x.a == y.a && x.chi == y.chi; }
};

TorusForm pullback(const TorusForm& w, const LatticeAction& g);

/// Class in Omega^1 / dA. For alpha != 0 the coordinate along the pivot
/// axis (first axis with alpha_i != 0) is eliminated; alpha = 0 keeps all.
class ReducedOneForm {
public:
    explicit ReducedOneForm(int vars = 0, std::size_t module_dim = 1) : r_(vars), dv_(module_dim) {}
    static ReducedOneForm reduce(const TorusForm& w);

    int vars() const { return r_; }
    std::size_t module_dim() const { return dv_; }
    /// Per exponent: coordinates axis * module_dim + a.
    const std::map<MultiIndex, Vector>& components() const { return comps_; }
    Vector component(const MultiIndex& alpha) const;
    bool is_zero() const { return comps_.empty(); }

    /// Canonical 1-form representative.
    TorusForm lift() const;
    /// Integral over the axis-th fundamental circle (1-based), normalized
    /// by the constant term.
    Vector cycle_integral(int axis) const;
    ReducedOneForm apply(const Matrix& m) const;

    ReducedOneForm operator-() const;
    ReducedOneForm& operator+=(const ReducedOneForm& o);
    ReducedOneForm& operator-=(const ReducedOneForm& o);
    friend ReducedOneForm operator+(ReducedOneForm a, const ReducedOneForm& b) { return a += b; }
    friend ReducedOneForm operator-(ReducedOneForm a, const ReducedOneForm& b) { return a -= b; }
    friend ReducedOneForm operator*(const Scalar& s, const ReducedOneForm& a);
    friend bool operator==(const ReducedOneForm& a, const ReducedOneForm& b) {
        return a.r_ == b.r_ && a.dv_ == b.dv_ && a.comps_ == b.comps_;
    }
    friend bool operator!=(const ReducedOneForm& a, const ReducedOneForm& b) { return !(a == b); }

    std::string to_string() const;

private:
    void add_component(const MultiIndex& alpha, Vector v);

    int r_;
    std::size_t dv_;
    std::map<MultiIndex, Vector> comps_;
};

inline ReducedOneForm reduce_oneform(const TorusForm& w) { return ReducedOneForm::reduce(w); }
inline Vector cycle_integral(const ReducedOneForm& w, int axis) { return w.cycle_integral(axis); }
ReducedOneForm pullback(const ReducedOneForm& w, const LatticeAction& g);

/// Dimension of the reduced 1-form space in exponent alpha (r - 1 or r).
std::size_t reduced_dim(const MultiIndex& alpha);

}  // namespace liecoh

#endif
