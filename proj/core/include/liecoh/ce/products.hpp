#ifndef LIECOH_CE_PRODUCTS_HPP
#define LIECOH_CE_PRODUCTS_HPP

#include "liecoh/ce/complex.hpp"

namespace liecoh {

/// Bilinear pairing V1 x V2 -> W: component c is v1^T P_c v2.
struct Pairing {
    std::vector<Matrix> components;

    std::size_t out_dim() const { return components.size(); }
    Vector operator()(const Vector& a, const Vector& b) const;
    static Pairing scalar_product();
};

/// (c1 u c2)(x_1..x_{p+q}) = sum over (p,q)-shuffles s of
/// sgn(s) P(c1(x_s(1)..x_s(p)), c2(x_s(p+1)..x_s(p+q))).
Cochain cup_product(const Cochain& c1, const Cochain& c2, const Pairing& pairing);

/// z (+)_w g for a 2-cochain w with values in a trivial module V. The basis
/// is g followed by central elements c1..c_dimV. Throws JacobiViolation
/// when w is not a cocycle.
LieAlgebra central_extension(const LieAlgebra& g, const Cochain& w);

struct LiftCheck {
    /// g.w - w = d theta, where (g.w)(u,v) = gV w(gG^-1 u, gG^-1 v).
    bool condition = false;
    /// (z,x) -> (gV z + theta(gG x), gG x) is an automorphism of V (+)_w g.
    bool lift_is_automorphism = false;
};

/// Throws NotAutomorphism unless gamma_g is an automorphism of g and
/// gamma_v is invertible.
LiftCheck lift_automorphism_check(const LieAlgebra& g, const Matrix& gamma_v, const Matrix& gamma_g,
                                  const Cochain& w, const Cochain& theta);

}  // namespace liecoh

#endif
