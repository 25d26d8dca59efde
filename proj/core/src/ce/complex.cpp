#include "liecoh/ce/complex.hpp"

#include "liecoh/errors.hpp"

#include <algorithm>
#include <map>

namespace liecoh {

SparseMatrix ce_matrix(const LieAlgebra& g, const ModuleAction& v, std::size_t p) {
    const std::size_t n = g.dim(), dv = v.dim();
    if (v.algebra_dim() != n) throw DimensionMismatch("module does not match the algebra");
    const std::size_t rows = binomial(n, p + 1) * dv, cols = binomial(n, p) * dv;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
    auto add = [&](std::size_t r, std::size_t c, const Scalar& s) {
        if (s.is_zero()) return;
        auto [it, inserted] = acc.try_emplace({r, c}, s);
        if (!inserted) it->second += s;
    };
    const bool trivial = v.is_trivial();
    const auto& targets = subsets(n, p + 1);
    for (std::size_t t = 0; t < targets.size(); ++t) {
        const Tuple& T = targets[t];
        if (!trivial) {
            for (std::size_t i = 0; i <= p; ++i) {
                Tuple s = T;
                s.erase(s.begin() + static_cast<std::ptrdiff_t>(i));
                const std::size_t sr = subset_rank(n, s);
                const Matrix& rho = v.rho(T[i]);
                Scalar sign(i % 2 == 0 ? 1 : -1);
                for (std::size_t a = 0; a < dv; ++a) {
                    for (std::size_t b = 0; b < dv; ++b) {
                        if (!rho(a, b).is_zero()) add(t * dv + a, sr * dv + b, sign * rho(a, b));
                    }
                }
            }
        }
        for (std::size_t i = 0; i <= p; ++i) {
            for (std::size_t j = i + 1; j <= p; ++j) {
                const SparseVec& br = g.bracket_basis(T[i], T[j]);
                if (br.empty()) continue;
                Tuple rest;
                for (std::size_t k = 0; k <= p; ++k) {
                    if (k != i && k != j) rest.push_back(T[k]);
                }
                const long sign = ((i + j) % 2 == 0) ? 1 : -1;
                for (const auto& [k, c] : br.entries()) {
                    if (std::binary_search(rest.begin(), rest.end(), k)) continue;
                    Tuple s = rest;
                    auto pos = std::lower_bound(s.begin(), s.end(), k);
                    const long sign2 = ((pos - s.begin()) % 2 == 0) ? 1 : -1;
                    s.insert(pos, k);
                    const std::size_t sr = subset_rank(n, s);
                    Scalar coef = Scalar(sign * sign2) * c;
                    for (std::size_t b = 0; b < dv; ++b) add(t * dv + b, sr * dv + b, coef);
                }
            }
        }
    }
    std::vector<Triplet> trip;
    trip.reserve(acc.size());
    for (auto& [rc, s] : acc) {
        if (!s.is_zero()) trip.push_back({rc.first, rc.second, s});
    }
    return SparseMatrix::from_triplets(rows, cols, trip);
}

Cochain ce_d(const LieAlgebra& g, const ModuleAction& v, const Cochain& c) {
    if (c.algebra_dim() != g.dim() || c.module_dim() != v.dim()) throw DimensionMismatch("ce_d: cochain shape");
    SparseMatrix d = ce_matrix(g, v, c.degree());
    return Cochain::from_flat(c.degree() + 1, g.dim(), v.dim(), d.apply(c.flat()));
}

Cochain contract(const Cochain& c, const Vector& x) {
    if (c.degree() == 0) throw InvalidArgument("contract: degree must be at least 1");
    const std::size_t n = c.algebra_dim();
    if (x.size() != n) throw DimensionMismatch("contract: element length");
    Cochain out(c.degree() - 1, n, c.module_dim());
    for (const Tuple& t : subsets(n, c.degree() - 1)) {
        Vector val(c.module_dim());
        for (std::size_t k = 0; k < n; ++k) {
            if (x[k].is_zero()) continue;
            Tuple idx{k};
            idx.insert(idx.end(), t.begin(), t.end());
            add_scaled(val, x[k], c.on_basis(idx));
        }
        out.set(t, val);
    }
    return out;
}

Cochain lie_derivative(const LieAlgebra& g, const ModuleAction& v, const Cochain& c, const Vector& x) {
    const std::size_t n = g.dim(), p = c.degree();
    Matrix rho = v.rho_of(x);
    Cochain out(p, n, v.dim());
    for (const Tuple& t : subsets(n, p)) {
        Vector val = rho.apply(c.value(t));
        for (std::size_t i = 0; i < p; ++i) {
            std::vector<Vector> args;
            for (std::size_t k = 0; k < p; ++k) args.push_back(unit_vector(n, t[k]));
            args[i] = g.bracket(x, args[i]);
            add_scaled(val, Scalar(-1), c.evaluate(args));
        }
        out.set(t, val);
    }
    return out;
}

CohomologySpace::CohomologySpace(const LieAlgebra& g, const ModuleAction& v, std::size_t p)
    : p_(p), n_(g.dim()), dv_(v.dim()), d_(ce_matrix(g, v, p)), b_(binomial(g.dim(), p) * v.dim()) {
    const std::size_t cols = binomial(n_, p) * dv_;
    if (p > 0) {
        SparseMatrix prev = ce_matrix(g, v, p - 1);
        std::vector<SparseVec> cols_prev;
        SparseMatrix t = prev.transpose();
        for (std::size_t i = 0; i < t.rows(); ++i) {
            if (!t.row(i).empty()) cols_prev.push_back(t.row(i));
        }
        b_.insert_all(std::move(cols_prev));
    }
    std::vector<Vector> z = kernel_basis(d_);
    dim_z_ = z.size();
    Echelon combined = b_;
    std::vector<SparseVec> nf_rows;
    for (const auto& zv : z) {
        SparseVec s = SparseVec::from_dense(zv);
        if (!combined.insert(s)) continue;
        SparseVec nf = b_.reduce(s);
        reps_.push_back(Cochain::from_flat(p, n_, dv_, nf.to_dense(cols)));
        nf_rows.push_back(std::move(nf));
    }
    // Coordinates are read off k pivot coordinates of the representatives.
    Echelon reps_ech(cols);
    for (const auto& r : nf_rows) reps_ech.insert(r);
    pivot_coords_ = reps_ech.pivots();
    const std::size_t k = reps_.size();
    Matrix m(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) m(i, j) = reps_[j].flat()[pivot_coords_[i]];
    }
    auto inv = m.inverse();
    if (!inv) throw Error("cohomology: representatives not independent");
    pivot_inverse_ = *inv;
}

void CohomologySpace::check_shape(const Cochain& c) const {
    if (c.degree() != p_ || c.algebra_dim() != n_ || c.module_dim() != dv_) throw DimensionMismatch("cochain shape does not match cohomology space");
}

bool CohomologySpace::is_cocycle(const Cochain& c) const {
    check_shape(c);
    return is_zero(d_.apply(c.flat()));
}

bool CohomologySpace::is_coboundary(const Cochain& c) const {
    check_shape(c);
    return b_.contains(SparseVec::from_dense(c.flat()));
}

Vector CohomologySpace::coordinates(const Cochain& c) const {
    if (!is_cocycle(c)) throw NotACocycle("coordinates requested for a non-cocycle");
    SparseVec nf = b_.reduce(SparseVec::from_dense(c.flat()));
    const std::size_t k = reps_.size();
    Vector rhs(k);
    for (std::size_t i = 0; i < k; ++i) rhs[i] = nf.get(pivot_coords_[i]);
    Vector coords = pivot_inverse_.apply(rhs);
    Vector check(c.flat().size());
    for (std::size_t j = 0; j < k; ++j) add_scaled(check, coords[j], reps_[j].flat());
    if (check != nf.to_dense(c.flat().size())) throw Error("cohomology coordinates failed to reproduce the class");
    return coords;
}

Cochain CohomologySpace::from_coordinates(const Vector& coords) const {
    if (coords.size() != reps_.size()) throw DimensionMismatch("cohomology coordinates length");
    Cochain c(p_, n_, dv_);
    for (std::size_t j = 0; j < coords.size(); ++j) c += coords[j] * reps_[j];
    return c;
}

CohomologyReport CohomologySpace::report() const {
    return {p_, dim_z_, b_.rank(), reps_.size(), reps_};
}

CohomologyReport cohomology(const LieAlgebra& g, const ModuleAction& v, std::size_t p) {
    return CohomologySpace(g, v, p).report();
}

CoboundaryResult coboundary_solve(const LieAlgebra& g, const ModuleAction& v, const Cochain& w) {
    if (w.algebra_dim() != g.dim() || w.module_dim() != v.dim()) throw DimensionMismatch("coboundary_solve: cochain shape");
    if (w.degree() < g.dim() && !ce_d(g, v, w).is_zero()) throw NotACocycle("target of coboundary_solve is not closed");
    CoboundaryResult res;
    if (w.degree() == 0) {
        res.exact = w.is_zero();
        if (res.exact) {
            res.potential = Cochain();
        } else {
            res.certificate = w.flat();
        }
        return res;
    }
    SparseMatrix d = ce_matrix(g, v, w.degree() - 1);
    SolveResult s = solve(d, w.flat());
    res.exact = s.feasible;
    if (s.feasible) {
        res.potential = Cochain::from_flat(w.degree() - 1, g.dim(), v.dim(), s.solution);
    } else {
        res.certificate = s.certificate;
    }
    return res;
}

}  // namespace liecoh
