#include "liecoh/liealg/lie_algebra.hpp"

#include "liecoh/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace liecoh {

namespace {

Vector sparse_to_dense(const SparseVec& v, std::size_t n) { return v.to_dense(n); }

std::string triple_message(const LieAlgebra& g, std::size_t i, std::size_t j, std::size_t k) {
    return "Jacobi identity fails on (" + g.names()[i] + ", " + g.names()[j] + ", " + g.names()[k] + ")";
}

}  // namespace

LieAlgebra LieAlgebra::from_structure(const Field& field, std::vector<std::string> names,
                                      const std::vector<BracketEntry>& brackets) {
    LieAlgebra g;
    g.field_ = field;
    const std::size_t n = names.size();
    std::set<std::string> unique(names.begin(), names.end());
    if (unique.size() != n) throw InvalidArgument("duplicate basis names");
    g.names_ = std::move(names);
    g.table_.assign(n * n, SparseVec());
    std::vector<bool> given(n * n, false);
    for (const auto& b : brackets) {
        if (b.i >= n || b.j >= n) throw InvalidArgument("bracket index out of range");
        if (!b.out.empty() && b.out.entries().back().first >= n) throw InvalidArgument("bracket value index out of range");
        for (const auto& [idx, c] : b.out.entries()) {
            (void)idx;
            if (!field.contains(c)) throw InvalidArgument("structure constant " + c.to_string() + " outside the field");
        }
        if (b.i == b.j) {
            if (!b.out.empty()) throw AntisymmetryViolation("[" + g.names_[b.i] + ", " + g.names_[b.i] + "] must vanish");
            continue;
        }
        std::size_t lo = std::min(b.i, b.j), hi = std::max(b.i, b.j);
        SparseVec v = b.i < b.j ? b.out : b.out.scaled(Scalar(-1));
        if (given[lo * n + hi]) {
            if (g.table_[lo * n + hi] != v) {
                throw AntisymmetryViolation("inconsistent brackets for (" + g.names_[lo] + ", " + g.names_[hi] + ")");
            }
            continue;
        }
        given[lo * n + hi] = true;
        g.table_[hi * n + lo] = v.scaled(Scalar(-1));
        g.table_[lo * n + hi] = std::move(v);
    }
    std::size_t i = 0, j = 0, k = 0;
    if (find_jacobi_violation(g, i, j, k)) throw JacobiViolation(i, j, k, triple_message(g, i, j, k));
    return g;
}

std::size_t LieAlgebra::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) throw InvalidArgument("unknown basis element '" + name + "'");
    return static_cast<std::size_t>(it - names_.begin());
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length");
    Vector r(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero() || i == j) continue;
            const SparseVec& b = table_[i * n + j];
            if (b.empty()) continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, a] : b.entries()) r[k] += c * a;
        }
    }
    return r;
}

std::vector<BracketEntry> LieAlgebra::structure() const {
    std::vector<BracketEntry> out;
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (!table_[i * n + j].empty()) out.push_back({i, j, table_[i * n + j]});
        }
    }
    return out;
}

bool LieAlgebra::is_abelian() const {
    return std::all_of(table_.begin(), table_.end(), [](const SparseVec& v) { return v.empty(); });
}

Matrix LieAlgebra::ad(const Vector& x) const {
    const std::size_t n = dim();
    Matrix m(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vector col = bracket(x, unit_vector(n, j));
        for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
    }
    return m;
}

Matrix LieAlgebra::ad_basis(std::size_t i) const { return ad(unit_vector(dim(), i)); }

bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.table_ == b.table_;
}

bool find_jacobi_violation(const LieAlgebra& g, std::size_t& i, std::size_t& j, std::size_t& k) {
    const std::size_t n = g.dim();
    auto br = [&](const SparseVec& x, std::size_t c) {
        Vector r(n);
        for (const auto& [a, s] : x.entries()) {
            for (const auto& [b, t] : g.bracket_basis(a, c).entries()) r[b] += s * t;
        }
        return r;
    };
    for (i = 0; i < n; ++i) {
        for (j = i + 1; j < n; ++j) {
            for (k = j + 1; k < n; ++k) {
                Vector s = br(g.bracket_basis(i, j), k);
                add_to(s, br(g.bracket_basis(j, k), i));
                add_to(s, br(g.bracket_basis(k, i), j));
                if (!is_zero(s)) return true;
            }
        }
    }
    return false;
}

ModuleAction::ModuleAction(const LieAlgebra& g, std::vector<Matrix> rho) : rho_(std::move(rho)) {
    if (rho_.size() != g.dim()) throw DimensionMismatch("module action needs one matrix per basis element");
    dim_ = rho_.empty() ? 0 : rho_[0].rows();
    for (const auto& m : rho_) {
        if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("module matrices must be square of equal size");
    }
    if (rho_.empty()) return;
    for (std::size_t i = 0; i < g.dim(); ++i) {
        for (std::size_t j = i + 1; j < g.dim(); ++j) {
            Matrix lhs(dim_, dim_);
            for (const auto& [k, c] : g.bracket_basis(i, j).entries()) lhs = lhs + c * rho_[k];
            if (lhs != commutator(rho_[i], rho_[j])) {
                throw NotAHomomorphism("module action fails on (" + g.names()[i] + ", " + g.names()[j] + ")");
            }
        }
    }
}

ModuleAction ModuleAction::trivial(const LieAlgebra& g, std::size_t d) {
    ModuleAction m;
    m.dim_ = d;
    m.rho_.assign(g.dim(), Matrix(d, d));
    return m;
}

ModuleAction ModuleAction::adjoint(const LieAlgebra& g) {
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < g.dim(); ++i) rho.push_back(g.ad_basis(i));
    ModuleAction m;
    m.dim_ = g.dim();
    m.rho_ = std::move(rho);
    return m;
}

ModuleAction ModuleAction::coadjoint(const LieAlgebra& g) {
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < g.dim(); ++i) rho.push_back(Scalar(-1) * g.ad_basis(i).transpose());
    ModuleAction m;
    m.dim_ = g.dim();
    m.rho_ = std::move(rho);
    return m;
}

Matrix ModuleAction::rho_of(const Vector& x) const {
    if (x.size() != rho_.size()) throw DimensionMismatch("rho_of: element length");
    Matrix m(dim_, dim_);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) m = m + x[i] * rho_[i];
    }
    return m;
}

Vector ModuleAction::act(const Vector& x, const Vector& v) const {
    if (x.size() != rho_.size() || v.size() != dim_) throw DimensionMismatch("module act: length");
    Vector r(dim_);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) add_scaled(r, x[i], rho_[i].apply(v));
    }
    return r;
}

bool ModuleAction::is_trivial() const {
    return std::all_of(rho_.begin(), rho_.end(), [](const Matrix& m) { return m.is_zero(); });
}

ModuleAction ModuleAction::restrict_to(const LieAlgebra& sub, const std::vector<std::size_t>& indices) const {
    std::vector<Matrix> rho;
    for (std::size_t i : indices) {
        if (i >= rho_.size()) throw InvalidArgument("restriction index out of range");
        rho.push_back(rho_[i]);
    }
    if (rho.empty()) {
        ModuleAction m = trivial(sub, dim_);
        return m;
    }
    return ModuleAction(sub, std::move(rho));
}

Matrix MatrixRealization::element(const Vector& x) const {
    if (x.size() != basis.size()) throw DimensionMismatch("realization: element length");
    Matrix m(basis.empty() ? 0 : basis[0].rows(), basis.empty() ? 0 : basis[0].cols());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i].is_zero()) m = m + x[i] * basis[i];
    }
    return m;
}

namespace {

Vector flatten(const Matrix& m) {
    Vector v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m(i, j));
    }
    return v;
}

}  // namespace

Vector MatrixRealization::coordinates(const Matrix& m) const {
    std::vector<Vector> cols;
    for (const auto& b : basis) cols.push_back(flatten(b));
    auto c = coordinates_in(cols, flatten(m));
    if (!c) throw InvalidArgument("matrix outside the realized algebra");
    return *c;
}

MatrixRealization algebra_from_matrices(const Field& field, std::vector<std::string> names,
                                        std::vector<Matrix> basis) {
    MatrixRealization r;
    r.basis = std::move(basis);
    std::vector<BracketEntry> br;
    const std::size_t n = r.basis.size();
    // Coordinates need the basis before the algebra exists.
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix c = commutator(r.basis[i], r.basis[j]);
            if (c.is_zero()) continue;
            br.push_back({i, j, SparseVec::from_dense(r.coordinates(c))});
        }
    }
    r.algebra = LieAlgebra::from_structure(field, std::move(names), br);
    return r;
}

namespace {

Matrix elementary(std::size_t n, std::size_t i, std::size_t j) {
    Matrix m(n, n);
    m(i, j) = Scalar(1);
    return m;
}

}  // namespace

MatrixRealization sl_realization(std::size_t n) {
    if (n < 2) throw InvalidArgument("sl(n) needs n >= 2");
    std::vector<std::string> names;
    std::vector<Matrix> basis;
    if (n == 2) {
        Matrix h(2, 2);
        h(0, 0) = Scalar(1);
        h(1, 1) = Scalar(-1);
        names = {"h", "e", "f"};
        basis = {h, elementary(2, 0, 1), elementary(2, 1, 0)};
    } else {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            Matrix h(n, n);
            h(i, i) = Scalar(1);
            h(i + 1, i + 1) = Scalar(-1);
            names.push_back("h" + std::to_string(i + 1));
            basis.push_back(h);
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
                basis.push_back(elementary(n, i, j));
            }
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < i; ++j) {
                names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
                basis.push_back(elementary(n, i, j));
            }
        }
    }
    return algebra_from_matrices(Field(FieldSpec::rationals()), std::move(names), std::move(basis));
}

MatrixRealization gl_realization(std::size_t d) {
    if (d < 1) throw InvalidArgument("gl(d) needs d >= 1");
    std::vector<std::string> names;
    std::vector<Matrix> basis;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
            basis.push_back(elementary(d, i, j));
        }
    }
    return algebra_from_matrices(Field(FieldSpec::rationals()), std::move(names), std::move(basis));
}

LieAlgebra sl(std::size_t n) { return sl_realization(n).algebra; }
LieAlgebra gl(std::size_t d) { return gl_realization(d).algebra; }

LieAlgebra abelian(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
    return LieAlgebra::from_structure(Field(FieldSpec::rationals()), names, {});
}

LieAlgebra heisenberg3() {
    return LieAlgebra::from_structure(Field(FieldSpec::rationals()), {"x", "y", "z"},
                                      {{0, 1, SparseVec::from_entries({{2, Scalar(1)}})}});
}

LieAlgebra aff1() {
    return LieAlgebra::from_structure(Field(FieldSpec::rationals()), {"x", "y"},
                                      {{0, 1, SparseVec::from_entries({{1, Scalar(1)}})}});
}

void validate_semidirect(const SemidirectData& d) {
    const std::size_t nn = d.n.dim(), ng = d.g.dim();
    if (d.action.size() != ng) throw DimensionMismatch("semidirect: one derivation per g basis element");
    for (const auto& s : d.action) {
        if (s.rows() != nn || s.cols() != nn) throw DimensionMismatch("semidirect: derivation size");
    }
    for (std::size_t a = 0; a < ng; ++a) {
        const Matrix& s = d.action[a];
        for (std::size_t i = 0; i < nn; ++i) {
            for (std::size_t j = i + 1; j < nn; ++j) {
                Vector ei = unit_vector(nn, i), ej = unit_vector(nn, j);
                Vector lhs = s.apply(d.n.bracket(ei, ej));
                Vector rhs = d.n.bracket(s.apply(ei), ej) + d.n.bracket(ei, s.apply(ej));
                if (lhs != rhs) {
                    throw NotADerivation("S(" + d.g.names()[a] + ") fails the Leibniz rule on (" + d.n.names()[i] +
                                         ", " + d.n.names()[j] + ")");
                }
            }
        }
    }
    for (std::size_t a = 0; a < ng; ++a) {
        for (std::size_t b = a + 1; b < ng; ++b) {
            Matrix lhs(nn, nn);
            for (const auto& [k, c] : d.g.bracket_basis(a, b).entries()) lhs = lhs + c * d.action[k];
            if (lhs != commutator(d.action[a], d.action[b])) {
                throw NotAHomomorphism("S is not a homomorphism on (" + d.g.names()[a] + ", " + d.g.names()[b] + ")");
            }
        }
    }
}

LieAlgebra semidirect_sum(const SemidirectData& d) {
    validate_semidirect(d);
    const std::size_t nn = d.n.dim(), ng = d.g.dim(), n = nn + ng;
    std::vector<std::string> names = d.n.names();
    for (auto s : d.g.names()) {
        // colliding names from g get primes appended
        while (std::find(names.begin(), names.end(), s) != names.end()) s += "'";
        names.push_back(s);
    }
    std::vector<BracketEntry> br;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            std::vector<SparseVec::Entry> out;
            if (j < nn) {
                for (const auto& e : d.n.bracket_basis(i, j).entries()) out.push_back(e);
            } else if (i < nn) {
                // [n_i, x_a] = -S(x_a) n_i
                const Matrix& s = d.action[j - nn];
                for (std::size_t k = 0; k < nn; ++k) {
                    if (!s(k, i).is_zero()) out.emplace_back(k, -s(k, i));
                }
            } else {
                for (const auto& [k, c] : d.g.bracket_basis(i - nn, j - nn).entries()) out.emplace_back(k + nn, c);
            }
            SparseVec v = SparseVec::from_entries(std::move(out));
            if (!v.empty()) br.push_back({i, j, std::move(v)});
        }
    }
    return LieAlgebra::from_structure(d.n.field(), std::move(names), br);
}

SemidirectData cotangent_data(const LieAlgebra& h) {
    std::vector<std::string> dual;
    for (const auto& s : h.names()) dual.push_back(s + "*");
    LieAlgebra hstar = LieAlgebra::from_structure(h.field(), dual, {});
    std::vector<Matrix> act;
    for (std::size_t i = 0; i < h.dim(); ++i) act.push_back(Scalar(-1) * h.ad_basis(i).transpose());
    return {hstar, h, act};
}

LieAlgebra cotangent(const LieAlgebra& h) { return semidirect_sum(cotangent_data(h)); }

namespace {

std::size_t parse_param(const std::string& s, const std::string& name) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
        throw InvalidArgument("bad parameter in '" + name + "'");
    }
    return static_cast<std::size_t>(std::stoul(s));
}

}  // namespace

LieAlgebra standard_algebra(const std::string& name) {
    auto open = name.find('(');
    if (open == std::string::npos || name.back() != ')') throw InvalidArgument("unknown algebra '" + name + "'");
    std::string head = name.substr(0, open);
    std::string arg = name.substr(open + 1, name.size() - open - 2);
    if (head == "cotangent") return cotangent(standard_algebra(arg));
    if (head == "sl") return sl(parse_param(arg, name));
    if (head == "gl") return gl(parse_param(arg, name));
    if (head == "abelian") return abelian(parse_param(arg, name));
    if (head == "heisenberg" && arg == "3") return heisenberg3();
    if (head == "aff" && arg == "1") return aff1();
    throw InvalidArgument("unknown algebra '" + name + "'");
}

Subspace derived_subalgebra(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    std::vector<Vector> span;
    for (const auto& b : g.structure()) span.push_back(sparse_to_dense(b.out, n));
    return Subspace::span(n, span);
}

bool is_perfect(const LieAlgebra& g) { return derived_subalgebra(g).dim() == g.dim(); }

Subspace center(const LieAlgebra& g) {
    const std::size_t n = g.dim();
    // x in center iff sum_i x_i [e_i, e_j] = 0 for all j.
    std::vector<Triplet> t;
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            for (const auto& [k, c] : g.bracket_basis(i, j).entries()) t.push_back({j * n + k, i, c});
        }
    }
    return Subspace::span(n, kernel_basis(SparseMatrix::from_triplets(n * n, n, t)));
}

bool is_automorphism(const LieAlgebra& g, const Matrix& phi) {
    const std::size_t n = g.dim();
    if (phi.rows() != n || phi.cols() != n || !phi.inverse()) return false;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector lhs = phi.apply(g.bracket_basis(i, j).to_dense(n));
            Vector rhs = g.bracket(phi.column(i), phi.column(j));
            if (lhs != rhs) return false;
        }
    }
    return true;
}

}  // namespace liecoh
