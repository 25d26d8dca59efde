#include "liecoh/ce/forms.hpp"

#include "liecoh/errors.hpp"

#include <map>

namespace liecoh {

std::size_t pair_count(std::size_t n) { return n * (n + 1) / 2; }

std::size_t pair_rank(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    // rows 0..i-1 contribute n, n-1, ..., n-i+1 pairs
    return i * n - i * (i - 1) / 2 + (j - i);
}

BilinearFormSym::BilinearFormSym(std::size_t algebra_dim, std::size_t module_dim)
    : n_(algebra_dim), dv_(module_dim), table_(algebra_dim * algebra_dim, Vector(module_dim)) {}

BilinearFormSym BilinearFormSym::from_flat(std::size_t algebra_dim, std::size_t module_dim, const Vector& flat) {
    if (flat.size() != pair_count(algebra_dim) * module_dim) throw DimensionMismatch("bilinear form: flat length");
    BilinearFormSym k(algebra_dim, module_dim);
    for (std::size_t i = 0; i < algebra_dim; ++i) {
        for (std::size_t j = i; j < algebra_dim; ++j) {
            const std::size_t base = pair_rank(algebra_dim, i, j) * module_dim;
            k.set(i, j, Vector(flat.begin() + static_cast<std::ptrdiff_t>(base),
                               flat.begin() + static_cast<std::ptrdiff_t>(base + module_dim)));
        }
    }
    return k;
}

BilinearFormSym BilinearFormSym::from_matrix(const Matrix& m) {
    if (m.rows() != m.cols() || m != m.transpose()) throw InvalidArgument("bilinear form: matrix not symmetric");
    BilinearFormSym k(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = i; j < m.rows(); ++j) k.set(i, j, {m(i, j)});
    }
    return k;
}

void BilinearFormSym::set(std::size_t i, std::size_t j, const Vector& v) {
    if (i >= n_ || j >= n_ || v.size() != dv_) throw DimensionMismatch("bilinear form: set");
    table_[i * n_ + j] = v;
    table_[j * n_ + i] = v;
}

Vector BilinearFormSym::operator()(const Vector& x, const Vector& y) const {
    if (x.size() != n_ || y.size() != n_) throw DimensionMismatch("bilinear form: argument length");
    Vector out(dv_);
    for (std::size_t i = 0; i < n_; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n_; ++j) {
            if (!y[j].is_zero()) add_scaled(out, x[i] * y[j], at(i, j));
        }
    }
    return out;
}

Vector BilinearFormSym::flat() const {
    Vector out;
    out.reserve(pair_count(n_) * dv_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = i; j < n_; ++j) out.insert(out.end(), at(i, j).begin(), at(i, j).end());
    }
    return out;
}

Matrix BilinearFormSym::gram(std::size_t a) const {
    Matrix m(n_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) m(i, j) = at(i, j)[a];
    }
    return m;
}

bool BilinearFormSym::is_zero() const {
    for (const auto& v : table_) {
        if (!liecoh::is_zero(v)) return false;
    }
    return true;
}

BilinearFormSym& BilinearFormSym::operator+=(const BilinearFormSym& o) {
    if (o.n_ != n_ || o.dv_ != dv_) throw DimensionMismatch("bilinear form: incompatible");
    for (std::size_t i = 0; i < table_.size(); ++i) add_to(table_[i], o.table_[i]);
    return *this;
}

BilinearFormSym operator*(const Scalar& s, BilinearFormSym a) {
    for (auto& v : a.table_) v = s * v;
    return a;
}

namespace {

// Rows (z, pair, a) of the invariance system z.k(i,j) - k([z,e_i],e_j) - k(e_i,[z,e_j]).
SparseMatrix invariance_system(const LieAlgebra& g, const ModuleAction& v) {
    const std::size_t n = g.dim(), dv = v.dim(), pc = pair_count(n);
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
    auto add = [&](std::size_t r, std::size_t c, const Scalar& s) {
        auto [it, inserted] = acc.try_emplace({r, c}, s);
        if (!inserted) it->second += s;
    };
    for (std::size_t z = 0; z < n; ++z) {
        const Matrix& rho = v.rho(z);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                const std::size_t pr = pair_rank(n, i, j);
                const std::size_t row0 = (z * pc + pr) * dv;
                for (std::size_t a = 0; a < dv; ++a) {
                    for (std::size_t b = 0; b < dv; ++b) {
                        if (!rho(a, b).is_zero()) add(row0 + a, pr * dv + b, rho(a, b));
                    }
                }
                for (const auto& [k, c] : g.bracket_basis(z, i).entries()) {
                    const std::size_t col = pair_rank(n, k, j) * dv;
                    for (std::size_t a = 0; a < dv; ++a) add(row0 + a, col + a, -c);
                }
                for (const auto& [k, c] : g.bracket_basis(z, j).entries()) {
                    const std::size_t col = pair_rank(n, i, k) * dv;
                    for (std::size_t a = 0; a < dv; ++a) add(row0 + a, col + a, -c);
                }
            }
        }
    }
    std::vector<Triplet> trip;
    for (auto& [rc, s] : acc) {
        if (!s.is_zero()) trip.push_back({rc.first, rc.second, s});
    }
    return SparseMatrix::from_triplets(n * pc * dv, pc * dv, trip);
}

}  // namespace

bool is_invariant(const LieAlgebra& g, const ModuleAction& v, const BilinearFormSym& k) {
    if (k.algebra_dim() != g.dim() || k.module_dim() != v.dim()) throw DimensionMismatch("is_invariant: form shape");
    return is_zero(invariance_system(g, v).apply(k.flat()));
}

std::vector<BilinearFormSym> invariant_sym_forms(const LieAlgebra& g, const ModuleAction& v) {
    std::vector<BilinearFormSym> out;
    for (const auto& f : kernel_basis(invariance_system(g, v))) {
        out.push_back(BilinearFormSym::from_flat(g.dim(), v.dim(), f));
    }
    return out;
}

BilinearFormSym killing_form(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Matrix> ad;
    for (std::size_t i = 0; i < n; ++i) ad.push_back(g.ad_basis(i));
    BilinearFormSym k(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) k.set(i, j, {(ad[i] * ad[j]).trace()});
    }
    return k;
}

BilinearFormSym trace_form(const MatrixRealization& m) {
    const std::size_t n = m.basis.size();
    BilinearFormSym k(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) k.set(i, j, {(m.basis[i] * m.basis[j]).trace()});
    }
    return k;
}

BilinearFormSym trace_square_form(const MatrixRealization& m) {
    const std::size_t n = m.basis.size();
    BilinearFormSym k(n, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) k.set(i, j, {m.basis[i].trace() * m.basis[j].trace()});
    }
    return k;
}

UniversalForm universal_form(const LieAlgebra& g) {
    const std::size_t n = g.dim(), pc = pair_count(n);
    Echelon w(pc);
    std::vector<SparseVec> gens;
    for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i; j < n; ++j) {
                std::vector<SparseVec::Entry> e;
                for (const auto& [k, c] : g.bracket_basis(z, i).entries()) e.emplace_back(pair_rank(n, k, j), c);
                for (const auto& [k, c] : g.bracket_basis(z, j).entries()) e.emplace_back(pair_rank(n, i, k), c);
                SparseVec s = SparseVec::from_entries(std::move(e));
                if (!s.empty()) gens.push_back(std::move(s));
            }
        }
    }
    w.insert_all(std::move(gens));
    const std::vector<std::size_t> free = w.free_columns();
    std::map<std::size_t, std::size_t> free_pos;
    for (std::size_t c = 0; c < free.size(); ++c) free_pos[free[c]] = c;

    UniversalForm u;
    u.dim = free.size();
    u.kappa = BilinearFormSym(n, u.dim);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            const std::size_t pr = pair_rank(n, i, j);
            if (free_pos.count(pr)) u.basis_pairs.emplace_back(i, j);
            SparseVec r = w.reduce(SparseVec::from_entries({{pr, Scalar(1)}}));
            Vector val(u.dim);
            for (const auto& [col, c] : r.entries()) val[free_pos.at(col)] = c;
            u.kappa.set(i, j, val);
        }
    }
    return u;
}

Matrix factor_through_universal(const LieAlgebra& g, const UniversalForm& u, const BilinearFormSym& k) {
    if (k.algebra_dim() != g.dim()) throw DimensionMismatch("factor_through_universal: form shape");
    const std::size_t dv = k.module_dim();
    // k_u maps the basis pairs to unit vectors, which determines lambda.
    Matrix lambda(dv, u.dim);
    for (std::size_t c = 0; c < u.dim; ++c) {
        const Vector& val = k.at(u.basis_pairs[c].first, u.basis_pairs[c].second);
        for (std::size_t a = 0; a < dv; ++a) lambda(a, c) = val[a];
    }
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i; j < g.dim(); ++j) {
            if (lambda.apply(u.kappa.at(i, j)) != k.at(i, j)) {
                throw NotInvariant("form does not factor through the universal form at (" + g.names()[i] + ", " +
                                   g.names()[j] + ")");
            }
        }
    }
    return lambda;
}

Cochain cartan_map(const LieAlgebra& g, const BilinearFormSym& k) {
    const std::size_t n = g.dim(), dv = k.module_dim();
    if (!is_invariant(g, ModuleAction::trivial(g, dv), k)) throw NotInvariant("cartan_map: form is not invariant");
    Cochain c(3, n, dv);
    for (const Tuple& t : subsets(n, 3)) {
        Vector val(dv);
        for (const auto& [m, s] : g.bracket_basis(t[0], t[1]).entries()) add_scaled(val, s, k.at(m, t[2]));
        c.set(t, val);
    }
    return c;
}

CoboundaryResult cartan_exactness(const LieAlgebra& g, const BilinearFormSym& k) {
    return coboundary_solve(g, ModuleAction::trivial(g, k.module_dim()), cartan_map(g, k));
}

UniversalType2 universal_type2_target(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    ModuleAction f = ModuleAction::trivial(g, 1);
    UniversalType2 out;
    for (const auto& z : kernel_basis(ce_matrix(g, f, 2))) out.cocycles.push_back(Cochain::from_flat(2, n, 1, z));
    const std::size_t q = out.cocycles.size();
    out.eta = Cochain(2, n, q);
    for (const Tuple& t : subsets(n, 2)) {
        Vector val(q);
        for (std::size_t l = 0; l < q; ++l) val[l] = out.cocycles[l].value(t)[0];
        out.eta.set(t, val);
    }
    return out;
}

}  // namespace liecoh
