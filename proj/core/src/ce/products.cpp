#include "liecoh/ce/products.hpp"

#include "liecoh/errors.hpp"

#include <set>

namespace liecoh {

Vector Pairing::operator()(const Vector& a, const Vector& b) const {
    Vector out(components.size());
    for (std::size_t c = 0; c < components.size(); ++c) {
        const Matrix& p = components[c];
        if (p.rows() != a.size() || p.cols() != b.size()) throw DimensionMismatch("pairing: argument length");
        out[c] = dot(a, p.apply(b));
    }
    return out;
}

Pairing Pairing::scalar_product() {
    Matrix one(1, 1);
    one(0, 0) = Scalar(1);
    return {{one}};
}

Cochain cup_product(const Cochain& c1, const Cochain& c2, const Pairing& pairing) {
    const std::size_t n = c1.algebra_dim();
    if (c2.algebra_dim() != n) throw DimensionMismatch("cup_product: algebras differ");
    for (const auto& m : pairing.components) {
        if (m.rows() != c1.module_dim() || m.cols() != c2.module_dim()) throw DimensionMismatch("cup_product: pairing shape");
    }
    const std::size_t p = c1.degree(), q = c2.degree();
    Cochain out(p + q, n, pairing.out_dim());
    if (p + q > n) return out;
    for (const Tuple& t : subsets(n, p + q)) {
        Vector val(pairing.out_dim());
        for (const Tuple& a : subsets(p + q, p)) {
            Tuple left, right;
            std::size_t inv = 0, ai = 0;
            for (std::size_t k = 0; k < p + q; ++k) {
                if (ai < p && a[ai] == k) {
                    inv += k - ai;
                    left.push_back(t[k]);
                    ++ai;
                } else {
                    right.push_back(t[k]);
                }
            }
            Vector term = pairing(c1.value(left), c2.value(right));
            add_scaled(val, Scalar(inv % 2 == 0 ? 1 : -1), term);
        }
        out.set(t, val);
    }
    return out;
}

LieAlgebra central_extension(const LieAlgebra& g, const Cochain& w) {
    const std::size_t n = g.dim(), dv = w.module_dim();
    if (w.degree() != 2 || w.algebra_dim() != n) throw DimensionMismatch("central_extension: expects a 2-cochain on g");
    std::vector<std::string> names = g.names();
    std::set<std::string> taken(names.begin(), names.end());
    for (std::size_t a = 0; a < dv; ++a) {
        std::string name = "c" + std::to_string(a + 1);
        while (taken.count(name)) name += "'";
        taken.insert(name);
        names.push_back(name);
    }
    std::vector<BracketEntry> br;
    for (const Tuple& t : subsets(n, 2)) {
        std::vector<SparseVec::Entry> e = g.bracket_basis(t[0], t[1]).entries();
        Vector val = w.value(t);
        for (std::size_t a = 0; a < dv; ++a) {
            if (!val[a].is_zero()) e.emplace_back(n + a, val[a]);
        }
        SparseVec out = SparseVec::from_entries(std::move(e));
        if (!out.empty()) br.push_back({t[0], t[1], std::move(out)});
    }
    return LieAlgebra::from_structure(g.field(), std::move(names), br);
}

LiftCheck lift_automorphism_check(const LieAlgebra& g, const Matrix& gamma_v, const Matrix& gamma_g,
                                  const Cochain& w, const Cochain& theta) {
    const std::size_t n = g.dim(), dv = w.module_dim();
    if (w.degree() != 2 || w.algebra_dim() != n || theta.degree() != 1 || theta.algebra_dim() != n ||
        theta.module_dim() != dv || gamma_v.rows() != dv || gamma_v.cols() != dv) {
        throw DimensionMismatch("lift_automorphism_check: shapes");
    }
    if (!is_automorphism(g, gamma_g)) throw NotAutomorphism("gamma_g is not an automorphism of g");
    auto gv_inv = gamma_v.inverse();
    if (!gv_inv) throw NotAutomorphism("gamma_v is not invertible");
    const Matrix gg_inv = *gamma_g.inverse();

    LiftCheck res;
    Cochain moved(2, n, dv);
    for (const Tuple& t : subsets(n, 2)) {
        moved.set(t, gamma_v.apply(w.evaluate({gg_inv.column(t[0]), gg_inv.column(t[1])})));
    }
    Cochain lhs = moved - w;
    res.condition = (lhs == ce_d(g, ModuleAction::trivial(g, dv), theta));

    // Lift matrix on the basis of V (+)_w g: g coordinates first, then V.
    Matrix lift(n + dv, n + dv);
    for (std::size_t j = 0; j < n; ++j) {
        Vector gx = gamma_g.column(j);
        Vector th = theta.evaluate({gx});
        for (std::size_t i = 0; i < n; ++i) lift(i, j) = gx[i];
        for (std::size_t a = 0; a < dv; ++a) lift(n + a, j) = th[a];
    }
    for (std::size_t a = 0; a < dv; ++a) {
        for (std::size_t b = 0; b < dv; ++b) lift(n + b, n + a) = gamma_v(b, a);
    }
    try {
        res.lift_is_automorphism = is_automorphism(central_extension(g, w), lift);
    } catch (const JacobiViolation&) {
        res.lift_is_automorphism = false;
    }
    return res;
}

}  // namespace liecoh
