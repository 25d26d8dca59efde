#ifndef LIECOH_MAPALG_GRADED_HPP
#define LIECOH_MAPALG_GRADED_HPP

#include "liecoh/torusforms/forms.hpp"

#include <functional>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace liecoh {

/// Homogeneous basis element: slot `slot` in degree `deg` of a Z^r-graded
/// algebra whose graded pieces all have the same finite slot count.
struct GBasis {
    MultiIndex deg;
    std::size_t slot = 0;

    friend bool operator<(const GBasis& a, const GBasis& b) {
        return a.deg != b.deg ? a.deg < b.deg : a.slot < b.slot;
    }
    friend bool operator==(const GBasis& a, const GBasis& b) { return a.deg == b.deg && a.slot == b.slot; }
};

/// Finite linear combination of graded basis elements.
class GElement {
public:
    using Terms = std::map<GBasis, Scalar>;

    GElement() = default;
    static GElement basis(const GBasis& b, const Scalar& c = Scalar(1));
    /// sum_i x[i] e_i t^alpha.
    static GElement monomial(const MultiIndex& alpha, const Vector& x);

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    void add(const GBasis& b, const Scalar& c);
    Scalar coefficient(const GBasis& b) const;

    GElement& operator+=(const GElement& o);
    GElement& operator-=(const GElement& o);
    friend GElement operator+(GElement a, const GElement& b) { return a += b; }
    friend GElement operator-(GElement a, const GElement& b) { return a -= b; }
    friend GElement operator*(const Scalar& s, const GElement& a);
    friend bool operator==(const GElement& a, const GElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const GElement& a, const GElement& b) { return !(a == b); }

    std::string to_string(const std::vector<std::string>& slot_names) const;

private:
    Terms terms_;
};

/// Z^r-graded Lie algebra with `slots` basis elements in every degree.
struct GradedAlgebra {
    std::string name;
    int r = 0;
    std::vector<std::string> slot_names;
    std::function<GElement(const GBasis&, const GBasis&)> bracket_basis;

    std::size_t slots() const { return slot_names.size(); }
    GElement bracket(const GElement& a, const GElement& b) const;
    /// All basis elements with max-norm degree <= n.
    std::vector<GBasis> window_basis(int n) const;
};

/// k (x) Laurent polynomials in r variables: [x t^a, y t^b] = [x,y] t^{a+b}.
GradedAlgebra mapping_algebra(const LieAlgebra& k, int r);

/// Polynomial vector fields on T^r: slot i in degree a is t^a d_i with
/// d_i = t_i d/dt_i.
GradedAlgebra vector_field_algebra(int r);
/// (k (x) Laurent) x| V(T^r): slots are the basis of k, then d_1..d_r;
/// [X, xi] = X.xi.
GradedAlgebra gauge_semidirect(const LieAlgebra& k, int r);
/// Component functions of the vector field t^a d_i (slot first_vf + i).
std::vector<LaurentPoly> vf_components(const GBasis& b, std::size_t first_vf, int r);

/// Values of cochains on graded algebras.
using Value = std::variant<Vector, TorusForm, ReducedOneForm>;

/// Value space descriptor: plain vectors, V-valued p-forms (p = 0 for
/// functions) or reduced 1-forms, all with dim V = dv.
struct ValueSpace {
    enum class Kind { scalar, forms, reduced };
    Kind kind = Kind::scalar;
    int r = 0;
    std::size_t p = 0;
    std::size_t dv = 1;

    static ValueSpace scalars(std::size_t dv) { return {Kind::scalar, 0, 0, dv}; }
    static ValueSpace forms(int r, std::size_t p, std::size_t dv) { return {Kind::forms, r, p, dv}; }
    static ValueSpace functions(int r, std::size_t dv) { return {Kind::forms, r, 0, dv}; }
    static ValueSpace reduced(int r, std::size_t dv) { return {Kind::reduced, r, 1, dv}; }

    Value zero() const;
    /// Dimension of the homogeneous component of degree alpha.
    std::size_t dim_at(const MultiIndex& alpha) const;
    Vector coordinates(const Value& v, const MultiIndex& alpha) const;
    Value unit(const MultiIndex& alpha, std::size_t k) const;
    std::string describe() const;
    friend bool operator==(const ValueSpace& a, const ValueSpace& b) {
        return a.kind == b.kind && a.r == b.r && a.p == b.p && a.dv == b.dv;
    }
};

Value value_add(const Value& a, const Value& b);
Value value_scale(const Scalar& s, const Value& a);
bool value_is_zero(const Value& v);
bool value_equal(const Value& a, const Value& b);
std::string value_to_string(const Value& v);

/// Action of basis elements on values; empty means trivial.
using ValueAction = std::function<Value(const GBasis&, const Value&)>;

/// Vector-field slots (>= first_vf) act on form values by the Lie
/// derivative, on reduced 1-forms through representatives, and trivially
/// on scalars; other slots act trivially.
ValueAction lie_derivative_action(std::size_t first_vf, int r);

/// Alternating p-linear map on a graded algebra, defined on basis tuples.
struct GradedCochain {
    std::size_t degree = 0;
    ValueSpace space;
    std::function<Value(const std::vector<GBasis>&)> on_basis;

    Value evaluate(const std::vector<GElement>& xs) const;
    Value operator()(const GElement& a, const GElement& b) const { return evaluate({a, b}); }
};

GradedCochain zero_cochain(std::size_t degree, const ValueSpace& space);
GradedCochain operator+(const GradedCochain& a, const GradedCochain& b);
GradedCochain operator-(const GradedCochain& a, const GradedCochain& b);
GradedCochain operator*(const Scalar& s, const GradedCochain& a);
/// Post-composes values with a map between value spaces.
GradedCochain compose(const GradedCochain& c, const ValueSpace& target, std::function<Value(const Value&)> f);

/// (d w)(x_0..x_p) = sum_i (-1)^i x_i.w(..) + sum_{i<j} (-1)^{i+j} w([x_i,x_j],..).
Value d_evaluate(const GradedAlgebra& g, const GradedCochain& w, const ValueAction& act, const std::vector<GElement>& xs);
GradedCochain d_cochain(const GradedAlgebra& g, const GradedCochain& w, const ValueAction& act);

/// Alternation defect and closedness on explicit basis tuples.
bool is_alternating_on(const GradedCochain& w, const std::vector<std::vector<GBasis>>& tuples);
bool is_closed_on(const GradedAlgebra& g, const GradedCochain& w, const ValueAction& act,
                  const std::vector<std::vector<GBasis>>& tuples);

/// Seeded random basis tuples in the window [-n, n]^r.
std::vector<std::vector<GBasis>> random_tuples(const GradedAlgebra& g, int n, std::size_t arity, std::size_t count,
                                               unsigned seed);

}  // namespace liecoh

#endif
