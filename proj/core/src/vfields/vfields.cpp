#include "liecoh/vfields/vfields.hpp"

#include "liecoh/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace liecoh {

VectorField::VectorField(int vars) : r_(vars), f_(static_cast<std::size_t>(vars), LaurentPoly(vars)) {}

VectorField::VectorField(std::vector<LaurentPoly> components)
    : r_(static_cast<int>(components.size())), f_(std::move(components)) {
    for (const auto& f : f_) {
        if (f.vars() != r_) throw DimensionMismatch("vector field: component variable count");
    }
}

VectorField VectorField::basis(const MultiIndex& alpha, std::size_t axis) {
    VectorField x(static_cast<int>(alpha.size()));
    if (axis >= alpha.size()) throw InvalidArgument("vector field: axis out of range");
    x.f_[axis] = LaurentPoly::monomial(alpha);
    return x;
}

VectorField VectorField::witt(int m) { return basis({m}, 0); }

VectorField VectorField::from_element(const GElement& x, int vars) {
    VectorField out(vars);
    for (const auto& [b, c] : x.terms()) out.f_.at(b.slot).add_term(b.deg, c);
    return out;
}

GElement VectorField::to_element() const {
    GElement out;
    for (std::size_t i = 0; i < f_.size(); ++i) {
        for (const auto& [alpha, c] : f_[i].terms()) out.add({alpha, i}, c);
    }
    return out;
}

LaurentPoly VectorField::apply(const LaurentPoly& h) const {
    LaurentPoly out(r_);
    for (int i = 0; i < r_; ++i) out += f_[static_cast<std::size_t>(i)] * laurent_partial(h, i + 1);
    return out;
}

VectorField operator+(const VectorField& a, const VectorField& b) {
    if (a.r_ != b.r_) throw DimensionMismatch("vector field sum");
    VectorField out = a;
    for (std::size_t i = 0; i < out.f_.size(); ++i) out.f_[i] += b.f_[i];
    return out;
}

VectorField operator*(const Scalar& s, const VectorField& a) {
    VectorField out = a;
    for (auto& f : out.f_) f *= s;
    return out;
}

std::string VectorField::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < f_.size(); ++i) {
        if (f_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << f_[i].to_string() << ") d" << i + 1;
    }
    return first ? "0" : os.str();
}

VectorField bracket(const VectorField& x, const VectorField& y) {
    if (x.vars() != y.vars()) throw DimensionMismatch("vector field bracket");
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < static_cast<std::size_t>(x.vars()); ++i) out.push_back(x.apply(y[i]) - y.apply(x[i]));
    return VectorField(std::move(out));
}

FunctionMatrix crossed_hom_theta(const VectorField& x) {
    const auto r = static_cast<std::size_t>(x.vars());
    FunctionMatrix t(r, std::vector<LaurentPoly>(r, LaurentPoly(x.vars())));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) t[i][j] = -laurent_partial(x[i], static_cast<int>(j) + 1);
    }
    return t;
}

namespace {

FunctionMatrix matmul(const FunctionMatrix& a, const FunctionMatrix& b, int vars) {
    const std::size_t n = a.size();
    FunctionMatrix out(n, std::vector<LaurentPoly>(n, LaurentPoly(vars)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = 0; k < n; ++k) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

// Matrix-valued 1-form d(theta) as an r x r table of 1-forms.
using FormMatrix = std::vector<std::vector<TorusForm>>;

FormMatrix d_matrix(const FunctionMatrix& t) {
    FormMatrix out;
    for (const auto& row : t) {
        std::vector<TorusForm> r;
        for (const auto& f : row) r.push_back(derham_d(TorusForm::function(f)));
        out.push_back(std::move(r));
    }
    return out;
}

Pairing product_pairing() {
    Pairing p;
    p.components.push_back(Matrix::identity(1));
    return p;
}

// Tr(A ^ B) for matrices of scalar forms.
TorusForm trace_wedge(const FormMatrix& a, const FormMatrix& b, int vars, std::size_t degree) {
    TorusForm out(vars, degree, 1);
    const Pairing mult = product_pairing();
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) out += wedge(a[i][j], b[j][i], mult);
    }
    return out;
}

FormMatrix as_forms(const FunctionMatrix& t) {
    FormMatrix out;
    for (const auto& row : t) {
        std::vector<TorusForm> r;
        for (const auto& f : row) r.push_back(TorusForm::function(f));
        out.push_back(std::move(r));
    }
    return out;
}

LaurentPoly trace(const FunctionMatrix& t, int vars) {
    LaurentPoly out(vars);
    for (std::size_t i = 0; i < t.size(); ++i) out += t[i][i];
    return out;
}

VectorField field_of(const GBasis& b) { return VectorField::basis(b.deg, b.slot); }

int sign_of(const std::vector<std::size_t>& perm) {
    int s = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        for (std::size_t j = i + 1; j < perm.size(); ++j) {
            if (perm[i] > perm[j]) s = -s;
        }
    }
    return s;
}

std::vector<std::vector<std::size_t>> permutations(std::size_t k) {
    std::vector<std::size_t> p(k);
    for (std::size_t i = 0; i < k; ++i) p[i] = i;
    std::vector<std::vector<std::size_t>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

}  // namespace

FunctionMatrix crossed_hom_defect(const VectorField& x, const VectorField& y) {
    const int r = x.vars();
    const FunctionMatrix tx = crossed_hom_theta(x), ty = crossed_hom_theta(y), txy = crossed_hom_theta(bracket(x, y));
    const FunctionMatrix ab = matmul(tx, ty, r), ba = matmul(ty, tx, r);
    FunctionMatrix out = txy;
    for (std::size_t i = 0; i < out.size(); ++i) {
        for (std::size_t j = 0; j < out.size(); ++j) {
            out[i][j] = x.apply(ty[i][j]) - y.apply(tx[i][j]) + ab[i][j] - ba[i][j] - txy[i][j];
        }
    }
    return out;
}

GElement theta_element(const VectorField& x) {
    const auto r = static_cast<std::size_t>(x.vars());
    const FunctionMatrix t = crossed_hom_theta(x);
    GElement out;
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            for (const auto& [alpha, c] : t[i][j].terms()) out.add({alpha, i * r + j}, c);
        }
    }
    return out;
}

ValueAction vf_action(int r) { return lie_derivative_action(0, r); }

GradedCochain psibar_k(int k, int r) {
    if (k == 1) {
        return {1, ValueSpace::functions(r, 1), [r](const std::vector<GBasis>& t) -> Value {
                    return TorusForm::function(trace(crossed_hom_theta(field_of(t.at(0))), r));
                }};
    }
    if (k == 2) {
        return {2, ValueSpace::reduced(r, 1), [r](const std::vector<GBasis>& t) -> Value {
                    const FunctionMatrix a = crossed_hom_theta(field_of(t.at(0)));
                    const FunctionMatrix b = crossed_hom_theta(field_of(t.at(1)));
                    TorusForm w = trace_wedge(as_forms(a), d_matrix(b), r, 1) - trace_wedge(as_forms(b), d_matrix(a), r, 1);
                    return ReducedOneForm::reduce(w);
                }};
    }
    throw InvalidArgument("psibar_k: k must be 1 or 2");
}

GradedCochain psi_k(int k, int r) {
    if (k != 1 && k != 2) throw InvalidArgument("psi_k: k must be 1 or 2");
    const auto ku = static_cast<std::size_t>(k);
    return {ku, ValueSpace::forms(r, ku, 1), [r, ku](const std::vector<GBasis>& t) -> Value {
                std::vector<FormMatrix> dth;
                for (const auto& b : t) dth.push_back(d_matrix(crossed_hom_theta(field_of(b))));
                if (ku == 1) {
                    TorusForm out(r, 1, 1);
                    for (std::size_t i = 0; i < dth[0].size(); ++i) out += dth[0][i][i];
                    return out;
                }
                return trace_wedge(dth[0], dth[1], r, 2) - trace_wedge(dth[1], dth[0], r, 2);
            }};
}

GradedCochain phi_k(int k, int r) {
    if (k == 1) return psibar_k(1, r);
    if (k != 2) throw InvalidArgument("phi_k: k must be 1 or 2");
    return {3, ValueSpace::functions(r, 1), [r](const std::vector<GBasis>& t) -> Value {
                std::vector<FunctionMatrix> th;
                for (const auto& b : t) th.push_back(crossed_hom_theta(field_of(b)));
                LaurentPoly out(r);
                for (const auto& p : permutations(3)) {
                    LaurentPoly term = trace(matmul(matmul(th[p[0]], th[p[1]], r), th[p[2]], r), r);
                    out += Scalar(sign_of(p)) * term;
                }
                return TorusForm::function(out);
            }};
}

GradedCochain cup(const GradedCochain& a, const GradedCochain& b) {
    if (a.space.kind != ValueSpace::Kind::forms || b.space.kind != ValueSpace::Kind::forms || a.space.dv != 1 ||
        b.space.dv != 1 || a.space.r != b.space.r) {
        throw InvalidArgument("cup: expects scalar form values on the same torus");
    }
    const std::size_t p = a.degree, q = b.degree;
    const int r = a.space.r;
    const ValueSpace space = ValueSpace::forms(r, a.space.p + b.space.p, 1);
    return {p + q, space, [a, b, p, q, space](const std::vector<GBasis>& t) -> Value {
                Value out = space.zero();
                const Pairing mult = product_pairing();
                for (const Tuple& s : subsets(p + q, p)) {
                    std::vector<GBasis> ta, tb;
                    std::vector<std::size_t> order;
                    std::size_t k = 0;
                    for (std::size_t i = 0; i < p + q; ++i) {
                        if (k < s.size() && s[k] == i) {
                            ta.push_back(t[i]);
                            ++k;
                        } else {
                            tb.push_back(t[i]);
                        }
                    }
                    order = s;
                    for (std::size_t i = 0; i < p + q; ++i) {
                        if (std::find(s.begin(), s.end(), i) == s.end()) order.push_back(i);
                    }
                    TorusForm w = wedge(std::get<TorusForm>(a.on_basis(ta)), std::get<TorusForm>(b.on_basis(tb)), mult);
                    out = value_add(out, value_scale(Scalar(sign_of(order)), w));
                }
                return out;
            }};
}

GradedCochain d_values(const GradedCochain& w) {
    if (w.space.kind == ValueSpace::Kind::scalar) throw InvalidArgument("d_values: expects form values");
    const ValueSpace target = ValueSpace::forms(w.space.r, w.space.p + 1, w.space.dv);
    return compose(w, target, [](const Value& v) -> Value {
        if (const auto* f = std::get_if<TorusForm>(&v)) return derham_d(*f);
        return derham_d(std::get<ReducedOneForm>(v).lift());
    });
}

GradedCochain pullback_cocycle(const GradedCochain& w) {
    if (w.degree != 2) throw InvalidArgument("pullback_cocycle: expects a 2-cochain");
    return {2, w.space, [w](const std::vector<GBasis>& t) -> Value {
                return w.evaluate({theta_element(field_of(t.at(0))), theta_element(field_of(t.at(1)))});
            }};
}

GradedCochain virasoro_cocycle() {
    return {2, ValueSpace::scalars(1), [](const std::vector<GBasis>& t) -> Value {
                const long m = t.at(0).deg.at(0), n = t.at(1).deg.at(0);
                return Vector{Scalar(m + n == 0 ? 2 * m * m * m : 0)};
            }};
}

GradedCochain virasoro_shift_potential() {
    return {1, ValueSpace::scalars(1), [](const std::vector<GBasis>& t) -> Value {
                return Vector{Scalar(t.at(0).deg.at(0) == 0 ? -1 : 0)};
            }};
}

GradedCochain virasoro_normal_form() {
    return virasoro_cocycle() + d_cochain(vector_field_algebra(1), virasoro_shift_potential(), {});
}

namespace {

void check_transfer_shape(const TorusForm& w, std::size_t lo, const char* what) {
    if (w.module_dim() != 1 || w.degree() < lo || w.degree() > lo + 1) {
        throw InvalidArgument(std::string(what) + ": unsupported form degree");
    }
}

Value as_value(TorusForm w) {
    if (w.degree() == 1) return ReducedOneForm::reduce(w);
    return w;
}

}  // namespace

GradedCochain transfer_cocycle(const TorusForm& w) {
    check_transfer_shape(w, 2, "transfer_cocycle");
    if (!derham_d(w).is_zero()) throw NotClosed("transfer_cocycle: form is not closed");
    const int r = w.vars();
    const std::size_t p = w.degree() - 2;
    const ValueSpace space = p == 0 ? ValueSpace::functions(r, 1) : ValueSpace::reduced(r, 1);
    return {2, space, [w](const std::vector<GBasis>& t) -> Value {
                const VectorField x = field_of(t.at(0)), y = field_of(t.at(1));
                return as_value(interior(interior(w, x.components()), y.components()));
            }};
}

GradedCochain transfer_potential(const TorusForm& mu) {
    check_transfer_shape(mu, 1, "transfer_potential");
    const int r = mu.vars();
    const std::size_t p = mu.degree() - 1;
    const ValueSpace space = p == 0 ? ValueSpace::functions(r, 1) : ValueSpace::reduced(r, 1);
    return {1, space, [mu](const std::vector<GBasis>& t) -> Value {
                return as_value(interior(mu, field_of(t.at(0)).components()));
            }};
}

GradedCochain times_one(const GradedCochain& w, int r) {
    if (w.space.kind != ValueSpace::Kind::scalar || w.space.dv != 1) throw InvalidArgument("times_one: scalar values");
    return compose(w, ValueSpace::functions(r, 1), [r](const Value& v) -> Value {
        return TorusForm::function(LaurentPoly::constant(r, std::get<Vector>(v)[0]));
    });
}

GradedCochain witt_coefficient_cocycle() {
    return {1, ValueSpace::functions(1, 1), [](const std::vector<GBasis>& t) -> Value {
                return TorusForm::function(LaurentPoly::monomial(t.at(0).deg));
            }};
}

WindowSystem window_system(const GradedAlgebra& g, const ValueSpace& space, const ValueAction& act, int n) {
    WindowSystem s;
    s.window = n;
    std::map<GBasis, std::size_t> offset;
    std::size_t cols = 0;
    for (const auto& e : g.window_basis(2 * n)) {
        const std::size_t k = space.dim_at(e.deg);
        if (k == 0) continue;
        s.unknown_basis.push_back(e);
        s.unknown_offset.push_back(cols);
        offset.emplace(e, cols);
        cols += k;
    }
    const auto basis = g.window_basis(n);
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
    auto push = [&acc](std::size_t row, std::size_t col, const Scalar& c) {
        auto [it, inserted] = acc.try_emplace({row, col}, c);
        if (!inserted) it->second += c;
    };
    std::size_t rows = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const GBasis& a = basis[i];
            const GBasis& b = basis[j];
            const MultiIndex deg = a.deg + b.deg;
            const std::size_t height = space.dim_at(deg);
            if (height == 0) continue;
            s.pairs.emplace_back(a, b);
            s.row_offset.push_back(rows);
            auto add_value = [&](const Value& v, std::size_t col, const Scalar& sign) {
                const Vector c = space.coordinates(v, deg);
                for (std::size_t row = 0; row < c.size(); ++row) {
                    if (!c[row].is_zero()) push(rows + row, col, sign * c[row]);
                }
            };
            if (act) {
                if (auto it = offset.find(b); it != offset.end()) {
                    for (std::size_t k = 0; k < space.dim_at(b.deg); ++k) {
                        add_value(act(a, space.unit(b.deg, k)), it->second + k, Scalar(1));
                    }
                }
                if (auto it = offset.find(a); it != offset.end()) {
                    for (std::size_t k = 0; k < space.dim_at(a.deg); ++k) {
                        add_value(act(b, space.unit(a.deg, k)), it->second + k, Scalar(-1));
                    }
                }
            }
            const GElement br = g.bracket_basis(a, b);
            for (const auto& [e, c] : br.terms()) {
                auto it = offset.find(e);
                if (it == offset.end()) continue;
                for (std::size_t k = 0; k < height; ++k) push(rows + k, it->second + k, -c);
            }
            rows += height;
        }
    }
    std::vector<Triplet> trips;
    for (const auto& [rc, c] : acc) {
        if (!c.is_zero()) trips.push_back({rc.first, rc.second, c});
    }
    s.d = SparseMatrix::from_triplets(rows, cols, trips);
    return s;
}

Vector window_rhs(const WindowSystem& s, const GradedCochain& w) {
    Vector out(s.d.rows());
    for (std::size_t p = 0; p < s.pairs.size(); ++p) {
        const auto& [a, b] = s.pairs[p];
        const Vector c = w.space.coordinates(w.on_basis({a, b}), a.deg + b.deg);
        for (std::size_t k = 0; k < c.size(); ++k) out[s.row_offset[p] + k] = c[k];
    }
    return out;
}

WindowCertificate window_coboundary_cert(const GradedAlgebra& g, const GradedCochain& w, const ValueAction& act, int n) {
    const WindowSystem s = window_system(g, w.space, act, n);
    const Vector rhs = window_rhs(s, w);
    SolveResult res = solve(s.d, rhs);
    WindowCertificate out;
    out.window = n;
    if (res.feasible) {
        out.status = WindowCertificate::Status::feasible;
        std::map<GBasis, Value> values;
        for (std::size_t u = 0; u < s.unknown_basis.size(); ++u) {
            const GBasis& e = s.unknown_basis[u];
            Value v = w.space.zero();
            for (std::size_t k = 0; k < w.space.dim_at(e.deg); ++k) {
                const Scalar& c = res.solution[s.unknown_offset[u] + k];
                if (!c.is_zero()) v = value_add(v, value_scale(c, w.space.unit(e.deg, k)));
            }
            values.emplace(e, v);
        }
        const ValueSpace space = w.space;
        out.potential = {1, space, [values, space](const std::vector<GBasis>& t) -> Value {
                             auto it = values.find(t.at(0));
                             return it == values.end() ? space.zero() : it->second;
                         }};
        out.verified = s.d.apply(res.solution) == rhs;
    } else {
        out.status = WindowCertificate::Status::infeasible;
        out.potential = zero_cochain(1, w.space);
        out.certificate = res.certificate;
        out.pairing = dot(res.certificate, rhs);
        out.verified = is_zero(s.d.left_apply(res.certificate)) && !out.pairing.is_zero();
    }
    return out;
}

BatchCertificate batch_independence_cert(const GradedAlgebra& g, const std::vector<GradedCochain>& ws,
                                         const ValueAction& act, int n) {
    BatchCertificate out;
    out.window = n;
    if (ws.empty()) {
        out.independent = true;
        out.verified = true;
        return out;
    }
    const WindowSystem s = window_system(g, ws.front().space, act, n);
    std::vector<Vector> rhs;
    for (const auto& w : ws) {
        if (!(w.space == ws.front().space)) throw InvalidArgument("batch_independence_cert: value spaces differ");
        rhs.push_back(window_rhs(s, w));
    }
    const std::size_t k = ws.size();
    Echelon ech(k);
    for (const auto& y : kernel_basis(s.d.transpose())) {
        Vector row(k);
        for (std::size_t j = 0; j < k; ++j) row[j] = dot(y, rhs[j]);
        if (ech.insert(SparseVec::from_dense(row))) out.rows.push_back(y);
        if (out.rows.size() == k) break;
    }
    out.independent = out.rows.size() == k;
    if (!out.independent) return out;
    out.pairings = Matrix(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) out.pairings(i, j) = dot(out.rows[i], rhs[j]);
    }
    bool ok = out.pairings.inverse().has_value();
    for (const auto& y : out.rows) ok = ok && is_zero(s.d.left_apply(y));
    out.verified = ok;
    return out;
}

std::vector<NamedCocycle> h2vect_candidates() {
    std::vector<NamedCocycle> out;
    out.push_back({"coefficient_cup_psibar1", cup(witt_coefficient_cocycle(), psibar_k(1, 1))});
    out.push_back({"virasoro_times_one", times_one(virasoro_cocycle(), 1)});
    GradedCochain gl1 = type1_cocycle(gl(1), 1, trace_square_form(gl_realization(1)));
    out.push_back({"residue_pullback_kappa1_times_one", times_one(reduction_residue(pullback_cocycle(gl1), 1), 1)});
    return out;
}

std::vector<NamedCocycle> select_independent(const std::vector<NamedCocycle>& candidates, int n) {
    const GradedAlgebra g = vector_field_algebra(1);
    std::vector<NamedCocycle> kept;
    for (const auto& c : candidates) {
        std::vector<GradedCochain> batch;
        for (const auto& k : kept) batch.push_back(k.cocycle);
        batch.push_back(c.cocycle);
        if (batch_independence_cert(g, batch, vf_action(1), n).independent) kept.push_back(c);
    }
    return kept;
}

}  // namespace liecoh
