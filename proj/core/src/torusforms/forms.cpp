#include "liecoh/torusforms/forms.hpp"

#include "liecoh/errors.hpp"

#include <algorithm>
#include <sstream>

namespace liecoh {

TorusForm::TorusForm(int vars, std::size_t degree, std::size_t module_dim) : r_(vars), p_(degree), dv_(module_dim) {
    if (vars < 0) throw InvalidArgument("torus form: negative rank");
}

TorusForm TorusForm::function(const LaurentPoly& f) { return functions(f.vars(), {f}); }

TorusForm TorusForm::functions(int vars, const std::vector<LaurentPoly>& fs) {
    TorusForm w(vars, 0, fs.size());
    for (std::size_t a = 0; a < fs.size(); ++a) {
        if (fs[a].vars() != vars) throw DimensionMismatch("torus form: variable count");
        for (const auto& [alpha, c] : fs[a].terms()) {
            Vector v(fs.size());
            v[a] = c;
            w.add_term(alpha, {}, v);
        }
    }
    return w;
}

TorusForm TorusForm::monomial(const MultiIndex& alpha, const Tuple& axes, const Vector& coeff) {
    TorusForm w(static_cast<int>(alpha.size()), axes.size(), coeff.size());
    w.add_term(alpha, axes, coeff);
    return w;
}

TorusForm TorusForm::delta(int vars, std::size_t axis) {
    return monomial(MultiIndex(static_cast<std::size_t>(vars), 0), {axis}, {Scalar(1)});
}

void TorusForm::add_term(const MultiIndex& alpha, Tuple axes, const Vector& coeff) {
    if (alpha.size() != static_cast<std::size_t>(r_) || axes.size() != p_ || coeff.size() != dv_) {
        throw DimensionMismatch("torus form: term shape");
    }
    for (auto i : axes) {
        if (i >= static_cast<std::size_t>(r_)) throw InvalidArgument("torus form: axis out of range");
    }
    int sign = sort_with_sign(axes);
    if (sign == 0 || liecoh::is_zero(coeff)) return;
    Key key{alpha, std::move(axes)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), sign > 0 ? coeff : -coeff);
        return;
    }
    add_scaled(it->second, Scalar(sign), coeff);
    if (liecoh::is_zero(it->second)) terms_.erase(it);
}

Vector TorusForm::coefficient(const MultiIndex& alpha, const Tuple& axes) const {
    auto it = terms_.find({alpha, axes});
    return it == terms_.end() ? Vector(dv_) : it->second;
}

LaurentPoly TorusForm::component(const Tuple& axes, std::size_t a) const {
    LaurentPoly f(r_);
    for (const auto& [key, v] : terms_) {
        if (key.second == axes) f.add_term(key.first, v[a]);
    }
    return f;
}

TorusForm TorusForm::multiply(const LaurentPoly& f) const {
    TorusForm out(r_, p_, dv_);
    for (const auto& [key, v] : terms_) {
        for (const auto& [beta, c] : f.terms()) out.add_term(key.first + beta, key.second, c * v);
    }
    return out;
}

TorusForm TorusForm::apply(const Matrix& m) const {
    if (m.cols() != dv_) throw DimensionMismatch("torus form: value map");
    TorusForm out(r_, p_, m.rows());
    for (const auto& [key, v] : terms_) out.add_term(key.first, key.second, m.apply(v));
    return out;
}

TorusForm TorusForm::operator-() const {
    TorusForm out = *this;
    for (auto& [key, v] : out.terms_) v = -v;
    return out;
}

void TorusForm::check_compatible(const TorusForm& o) const {
    if (o.r_ != r_ || o.p_ != p_ || o.dv_ != dv_) throw DimensionMismatch("incompatible torus forms");
}

TorusForm& TorusForm::operator+=(const TorusForm& o) {
    check_compatible(o);
    for (const auto& [key, v] : o.terms_) add_term(key.first, key.second, v);
    return *this;
}

TorusForm& TorusForm::operator-=(const TorusForm& o) {
    check_compatible(o);
    for (const auto& [key, v] : o.terms_) add_term(key.first, key.second, -v);
    return *this;
}

TorusForm operator*(const Scalar& s, const TorusForm& a) {
    TorusForm out(a.r_, a.p_, a.dv_);
    if (s.is_zero()) return out;
    for (const auto& [key, v] : a.terms_) out.terms_.emplace(key, s * v);
    return out;
}

std::string TorusForm::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, v] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << liecoh::to_string(v) << " t^" << index_to_string(key.first);
        for (std::size_t i = 0; i < key.second.size(); ++i) os << (i == 0 ? " d" : "^d") << key.second[i] + 1;
    }
    return os.str();
}

TorusForm derham_d(const TorusForm& w) {
    TorusForm out(w.vars(), w.degree() + 1, w.module_dim());
    if (w.degree() >= static_cast<std::size_t>(w.vars())) return out;
    for (const auto& [key, v] : w.terms()) {
        const auto& [alpha, axes] = key;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (alpha[j] == 0) continue;
            Tuple idx{j};
            idx.insert(idx.end(), axes.begin(), axes.end());
            out.add_term(alpha, idx, Scalar(alpha[j]) * v);
        }
    }
    return out;
}

TorusForm interior(const TorusForm& w, const std::vector<LaurentPoly>& x) {
    if (x.size() != static_cast<std::size_t>(w.vars())) throw DimensionMismatch("interior: vector field rank");
    if (w.degree() == 0) return TorusForm(w.vars(), 0, w.module_dim());
    TorusForm out(w.vars(), w.degree() - 1, w.module_dim());
    for (const auto& [key, v] : w.terms()) {
        const auto& [alpha, axes] = key;
        for (std::size_t k = 0; k < axes.size(); ++k) {
            Tuple rest = axes;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            Scalar sign(k % 2 == 0 ? 1 : -1);
            for (const auto& [beta, c] : x[axes[k]].terms()) out.add_term(alpha + beta, rest, (sign * c) * v);
        }
    }
    return out;
}

TorusForm form_lie_derivative(const TorusForm& w, const std::vector<LaurentPoly>& x) {
    TorusForm out(w.vars(), w.degree(), w.module_dim());
    if (w.degree() > static_cast<std::size_t>(w.vars())) return out;
    if (w.degree() > 0) out += derham_d(interior(w, x));
    out += interior(derham_d(w), x);
    return out;
}

TorusForm wedge(const TorusForm& a, const TorusForm& b, const Pairing& pairing) {
    if (a.vars() != b.vars()) throw DimensionMismatch("wedge: torus rank");
    for (const auto& m : pairing.components) {
        if (m.rows() != a.module_dim() || m.cols() != b.module_dim()) throw DimensionMismatch("wedge: pairing shape");
    }
    TorusForm out(a.vars(), a.degree() + b.degree(), pairing.out_dim());
    if (a.degree() + b.degree() > static_cast<std::size_t>(a.vars())) return out;
    for (const auto& [ka, va] : a.terms()) {
        for (const auto& [kb, vb] : b.terms()) {
            Tuple idx = ka.second;
            idx.insert(idx.end(), kb.second.begin(), kb.second.end());
            out.add_term(ka.first + kb.first, idx, pairing(va, vb));
        }
    }
    return out;
}

Pairing pairing_of(const BilinearFormSym& k) {
    Pairing p;
    for (std::size_t c = 0; c < k.module_dim(); ++c) p.components.push_back(k.gram(c));
    return p;
}

TorusForm wedge_kappa(const TorusForm& a, const TorusForm& b, const BilinearFormSym& k) {
    if (a.module_dim() != k.algebra_dim() || b.module_dim() != k.algebra_dim()) throw DimensionMismatch("wedge_kappa: values");
    return wedge(a, b, pairing_of(k));
}

LatticeAction LatticeAction::identity(int r) {
    LatticeAction g;
    g.a.assign(static_cast<std::size_t>(r), std::vector<int>(static_cast<std::size_t>(r), 0));
    for (int i = 0; i < r; ++i) g.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    g.chi.assign(static_cast<std::size_t>(r), Scalar(1));
    return g;
}

MultiIndex LatticeAction::map_index(const MultiIndex& alpha) const {
    if (alpha.size() != a.size()) throw DimensionMismatch("lattice action: rank");
    MultiIndex out(alpha.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < a.size(); ++j) out[i] += a[i][j] * alpha[j];
    }
    return out;
}

Scalar LatticeAction::character(const MultiIndex& alpha) const {
    Scalar s(1);
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != 0) s *= chi[i].pow(alpha[i]);
    }
    return s;
}

LatticeAction LatticeAction::compose(const LatticeAction& inner) const {
    // (this o inner)(t^alpha) = chi_in(alpha) chi_this(A_in alpha) t^{A A_in alpha}
    const std::size_t r = a.size();
    LatticeAction out;
    out.a.assign(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
            for (std::size_t k = 0; k < r; ++k) out.a[i][j] += a[i][k] * inner.a[k][j];
        }
    }
    out.chi.resize(r);
    for (std::size_t j = 0; j < r; ++j) {
        MultiIndex e(r, 0);
        e[j] = 1;
        out.chi[j] = inner.character(e) * character(inner.map_index(e));
    }
    return out;
}

TorusForm pullback(const TorusForm& w, const LatticeAction& g) {
    if (g.vars() != w.vars()) throw DimensionMismatch("pullback: rank");
    TorusForm out(w.vars(), w.degree(), w.module_dim());
    const std::size_t r = static_cast<std::size_t>(w.vars());
    for (const auto& [key, v] : w.terms()) {
        const auto& [alpha, axes] = key;
        const MultiIndex beta = g.map_index(alpha);
        const Scalar c = g.character(alpha);
        // expand delta_{j1} ^ ... ^ delta_{jp} with delta_j -> sum_i A_ij delta_i
        Tuple idx(axes.size());
        auto rec = [&](auto&& self, std::size_t k, const Scalar& coef) -> void {
            if (k == axes.size()) {
                out.add_term(beta, idx, coef * v);
                return;
            }
            for (std::size_t i = 0; i < r; ++i) {
                int aij = g.a[i][axes[k]];
                if (aij == 0) continue;
                idx[k] = i;
                self(self, k + 1, coef * Scalar(aij));
            }
        };
        rec(rec, 0, c);
    }
    return out;
}

namespace {

std::size_t pivot_axis(const MultiIndex& alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != 0) return i;
    }
    return alpha.size();
}

}  // namespace

std::size_t reduced_dim(const MultiIndex& alpha) {
    return is_zero_index(alpha) ? alpha.size() : alpha.size() - 1;
}

void ReducedOneForm::add_component(const MultiIndex& alpha, Vector v) {
    const std::size_t p = pivot_axis(alpha);
    if (p < alpha.size()) {
        for (std::size_t a = 0; a < dv_; ++a) {
            Scalar c = v[p * dv_ + a] / Scalar(alpha[p]);
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < alpha.size(); ++i) {
                if (alpha[i] != 0) v[i * dv_ + a] -= c * Scalar(alpha[i]);
            }
        }
    }
    auto it = comps_.find(alpha);
    if (it == comps_.end()) {
        if (!liecoh::is_zero(v)) comps_.emplace(alpha, std::move(v));
        return;
    }
    add_to(it->second, v);
    if (liecoh::is_zero(it->second)) comps_.erase(it);
}

ReducedOneForm ReducedOneForm::reduce(const TorusForm& w) {
    if (w.degree() != 1) throw InvalidArgument("reduce_oneform: expects a 1-form");
    ReducedOneForm out(w.vars(), w.module_dim());
    const std::size_t r = static_cast<std::size_t>(w.vars()), dv = w.module_dim();
    std::map<MultiIndex, Vector> raw;
    for (const auto& [key, v] : w.terms()) {
        auto [it, inserted] = raw.try_emplace(key.first, Vector(r * dv));
        for (std::size_t a = 0; a < dv; ++a) it->second[key.second[0] * dv + a] += v[a];
    }
    for (auto& [alpha, v] : raw) out.add_component(alpha, std::move(v));
    return out;
}

Vector ReducedOneForm::component(const MultiIndex& alpha) const {
    auto it = comps_.find(alpha);
    return it == comps_.end() ? Vector(static_cast<std::size_t>(r_) * dv_) : it->second;
}

TorusForm ReducedOneForm::lift() const {
    TorusForm out(r_, 1, dv_);
    for (const auto& [alpha, v] : comps_) {
        for (std::size_t i = 0; i < static_cast<std::size_t>(r_); ++i) {
            Vector c(v.begin() + static_cast<std::ptrdiff_t>(i * dv_), v.begin() + static_cast<std::ptrdiff_t>((i + 1) * dv_));
            out.add_term(alpha, {i}, c);
        }
    }
    return out;
}

Vector ReducedOneForm::cycle_integral(int axis) const {
    if (axis < 1 || axis > r_) throw InvalidArgument("cycle_integral: axis out of range");
    Vector v = component(MultiIndex(static_cast<std::size_t>(r_), 0));
    const std::size_t i = static_cast<std::size_t>(axis - 1);
    return Vector(v.begin() + static_cast<std::ptrdiff_t>(i * dv_), v.begin() + static_cast<std::ptrdiff_t>((i + 1) * dv_));
}

ReducedOneForm ReducedOneForm::apply(const Matrix& m) const { return reduce(lift().apply(m)); }

ReducedOneForm ReducedOneForm::operator-() const {
    ReducedOneForm out = *this;
    for (auto& [alpha, v] : out.comps_) v = -v;
    return out;
}

ReducedOneForm& ReducedOneForm::operator+=(const ReducedOneForm& o) {
    if (o.r_ != r_ || o.dv_ != dv_) throw DimensionMismatch("incompatible reduced forms");
    for (const auto& [alpha, v] : o.comps_) add_component(alpha, v);
    return *this;
}

ReducedOneForm& ReducedOneForm::operator-=(const ReducedOneForm& o) { return *this += -o; }

ReducedOneForm operator*(const Scalar& s, const ReducedOneForm& a) {
    ReducedOneForm out(a.r_, a.dv_);
    if (s.is_zero()) return out;
    for (const auto& [alpha, v] : a.comps_) out.comps_.emplace(alpha, s * v);
    return out;
}

std::string ReducedOneForm::to_string() const { return "[" + lift().to_string() + "]"; }

ReducedOneForm pullback(const ReducedOneForm& w, const LatticeAction& g) {
    return ReducedOneForm::reduce(pullback(w.lift(), g));
}

}  // namespace liecoh
