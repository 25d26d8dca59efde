#ifndef LIECOH_EXACTALG_LAURENT_HPP
#define LIECOH_EXACTALG_LAURENT_HPP

#include "liecoh/exactalg/scalar.hpp"

#include <map>
#include <string>
#include <vector>

namespace liecoh {

/// Exponent vector in Z^r, ordered lexicographically.
using MultiIndex = std::vector<int>;

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b);
MultiIndex operator-(const MultiIndex& a, const MultiIndex& b);
MultiIndex operator-(const MultiIndex& a);
bool is_zero_index(const MultiIndex& a);
/// Max norm.
int max_abs(const MultiIndex& a);
std::string index_to_string(const MultiIndex& a);
/// All exponents in the box [-n, n]^r in lexicographic order.
std::vector<MultiIndex> box(int r, int n);

/// Element of Q(zeta)[t_1^{+-1}, ..., t_r^{+-1}].
class LaurentPoly {
public:
    using Terms = std::map<MultiIndex, Scalar>;

    explicit LaurentPoly(int vars = 0) : vars_(vars) {}
    static LaurentPoly constant(int vars, const Scalar& c);
    static LaurentPoly monomial(const MultiIndex& alpha, const Scalar& c = Scalar(1));
    /// t_i (1-based axis).
    static LaurentPoly variable(int vars, int axis);

    int vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const MultiIndex& alpha) const;
    Scalar constant_term() const;
    std::size_t size() const { return terms_.size(); }

    void add_term(const MultiIndex& alpha, const Scalar& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Scalar& c);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const Scalar& c, LaurentPoly a) { return a *= c; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// Evaluation at t_i = point[i].
    Scalar evaluate(const std::vector<Scalar>& point) const;

    std::string to_string() const;

private:
    void check(const MultiIndex& alpha) const;

    int vars_;
    Terms terms_;
};

/// t_i d/dt_i (1-based axis): t^alpha -> alpha_i t^alpha.
LaurentPoly laurent_partial(const LaurentPoly& f, int axis);

}  // namespace liecoh

#endif
