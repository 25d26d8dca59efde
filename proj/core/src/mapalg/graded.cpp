#include "liecoh/mapalg/graded.hpp"

#include "liecoh/errors.hpp"

#include <random>
#include <sstream>

namespace liecoh {

GElement GElement::basis(const GBasis& b, const Scalar& c) {
    GElement e;
    e.add(b, c);
    return e;
}

GElement GElement::monomial(const MultiIndex& alpha, const Vector& x) {
    GElement e;
    for (std::size_t i = 0; i < x.size(); ++i) e.add({alpha, i}, x[i]);
    return e;
}

void GElement::add(const GBasis& b, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Scalar GElement::coefficient(const GBasis& b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? Scalar(0) : it->second;
}

GElement& GElement::operator+=(const GElement& o) {
    for (const auto& [b, c] : o.terms_) add(b, c);
    return *this;
}

GElement& GElement::operator-=(const GElement& o) {
    for (const auto& [b, c] : o.terms_) add(b, -c);
    return *this;
}

GElement operator*(const Scalar& s, const GElement& a) {
    GElement out;
    if (s.is_zero()) return out;
    for (const auto& [b, c] : a.terms_) out.terms_.emplace(b, s * c);
    return out;
}

std::string GElement::to_string(const std::vector<std::string>& slot_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.to_string() << " " << slot_names.at(b.slot) << " t^" << index_to_string(b.deg);
    }
    return os.str();
}

GElement GradedAlgebra::bracket(const GElement& a, const GElement& b) const {
    GElement out;
    for (const auto& [ba, ca] : a.terms()) {
        for (const auto& [bb, cb] : b.terms()) out += (ca * cb) * bracket_basis(ba, bb);
    }
    return out;
}

std::vector<GBasis> GradedAlgebra::window_basis(int n) const {
    std::vector<GBasis> out;
    for (const auto& alpha : box(r, n)) {
        for (std::size_t s = 0; s < slots(); ++s) out.push_back({alpha, s});
    }
    return out;
}

GradedAlgebra mapping_algebra(const LieAlgebra& k, int r) {
    GradedAlgebra g;
    g.name = "mapping";
    g.r = r;
    g.slot_names = k.names();
    g.bracket_basis = [k](const GBasis& a, const GBasis& b) {
        GElement out;
        const MultiIndex deg = a.deg + b.deg;
        for (const auto& [i, c] : k.bracket_basis(a.slot, b.slot).entries()) out.add({deg, i}, c);
        return out;
    };
    return g;
}

GradedAlgebra vector_field_algebra(int r) {
    GradedAlgebra g;
    g.name = "vector_fields";
    g.r = r;
    for (int i = 1; i <= r; ++i) g.slot_names.push_back("d" + std::to_string(i));
    g.bracket_basis = [](const GBasis& a, const GBasis& b) {
        // [t^a d_i, t^b d_j] = b_i t^{a+b} d_j - a_j t^{a+b} d_i
        GElement out;
        const MultiIndex deg = a.deg + b.deg;
        out.add({deg, b.slot}, Scalar(b.deg[a.slot]));
        out.add({deg, a.slot}, Scalar(-a.deg[b.slot]));
        return out;
    };
    return g;
}

GradedAlgebra gauge_semidirect(const LieAlgebra& k, int r) {
    GradedAlgebra g;
    g.name = "gauge_semidirect";
    g.r = r;
    g.slot_names = k.names();
    const std::size_t n = k.dim();
    for (int i = 1; i <= r; ++i) g.slot_names.push_back("d" + std::to_string(i));
    g.bracket_basis = [k, n](const GBasis& a, const GBasis& b) {
        GElement out;
        const MultiIndex deg = a.deg + b.deg;
        const bool va = a.slot >= n, vb = b.slot >= n;
        if (!va && !vb) {
            for (const auto& [i, c] : k.bracket_basis(a.slot, b.slot).entries()) out.add({deg, i}, c);
        } else if (va && vb) {
            const std::size_t i = a.slot - n, j = b.slot - n;
            out.add({deg, b.slot}, Scalar(b.deg[i]));
            out.add({deg, a.slot}, Scalar(-a.deg[j]));
        } else if (va) {
            out.add({deg, b.slot}, Scalar(b.deg[a.slot - n]));
        } else {
            out.add({deg, a.slot}, Scalar(-a.deg[b.slot - n]));
        }
        return out;
    };
    return g;
}

std::vector<LaurentPoly> vf_components(const GBasis& b, std::size_t first_vf, int r) {
    std::vector<LaurentPoly> x(static_cast<std::size_t>(r), LaurentPoly(r));
    if (b.slot < first_vf || b.slot >= first_vf + static_cast<std::size_t>(r)) {
        throw InvalidArgument("vf_components: not a vector-field slot");
    }
    x[b.slot - first_vf] = LaurentPoly::monomial(b.deg);
    return x;
}

ValueAction lie_derivative_action(std::size_t first_vf, int r) {
    return [first_vf, r](const GBasis& b, const Value& v) -> Value {
        if (b.slot < first_vf) return value_scale(Scalar(0), v);
        auto x = vf_components(b, first_vf, r);
        if (const auto* w = std::get_if<TorusForm>(&v)) return form_lie_derivative(*w, x);
        if (const auto* w = std::get_if<ReducedOneForm>(&v)) {
            return ReducedOneForm::reduce(form_lie_derivative(w->lift(), x));
        }
        return value_scale(Scalar(0), v);
    };
}

namespace {

std::size_t pivot_of(const MultiIndex& alpha) {
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] != 0) return i;
    }
    return alpha.size();
}

}  // namespace

Value ValueSpace::zero() const {
    switch (kind) {
        case Kind::scalar:
            return Vector(dv);
        case Kind::forms:
            return TorusForm(r, p, dv);
        case Kind::reduced:
            return ReducedOneForm(r, dv);
    }
    return Vector(dv);
}

std::size_t ValueSpace::dim_at(const MultiIndex& alpha) const {
    switch (kind) {
        case Kind::scalar:
            return is_zero_index(alpha) ? dv : 0;
        case Kind::forms:
            return binomial(static_cast<std::size_t>(r), p) * dv;
        case Kind::reduced:
            return reduced_dim(alpha) * dv;
    }
    return 0;
}

Vector ValueSpace::coordinates(const Value& v, const MultiIndex& alpha) const {
    Vector out;
    switch (kind) {
        case Kind::scalar:
            if (is_zero_index(alpha)) out = std::get<Vector>(v);
            break;
        case Kind::forms: {
            const auto& w = std::get<TorusForm>(v);
            for (const Tuple& axes : subsets(static_cast<std::size_t>(r), p)) {
                Vector c = w.coefficient(alpha, axes);
                out.insert(out.end(), c.begin(), c.end());
            }
            break;
        }
        case Kind::reduced: {
            Vector c = std::get<ReducedOneForm>(v).component(alpha);
            const std::size_t piv = pivot_of(alpha);
            for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
                if (i == piv) continue;
                out.insert(out.end(), c.begin() + static_cast<std::ptrdiff_t>(i * dv),
                           c.begin() + static_cast<std::ptrdiff_t>((i + 1) * dv));
            }
            break;
        }
    }
    return out;
}

Value ValueSpace::unit(const MultiIndex& alpha, std::size_t k) const {
    if (k >= dim_at(alpha)) throw InvalidArgument("value space: coordinate out of range");
    const std::size_t a = k % dv, block = k / dv;
    switch (kind) {
        case Kind::scalar:
            return unit_vector(dv, a);
        case Kind::forms:
            return TorusForm::monomial(alpha, subsets(static_cast<std::size_t>(r), p)[block], unit_vector(dv, a));
        case Kind::reduced: {
            std::size_t axis = block;
            if (axis >= pivot_of(alpha)) ++axis;
            return ReducedOneForm::reduce(TorusForm::monomial(alpha, {axis}, unit_vector(dv, a)));
        }
    }
    return zero();
}

std::string ValueSpace::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::scalar:
            os << "scalars^" << dv;
            break;
        case Kind::forms:
            os << (p == 0 ? std::string("functions") : "forms" + std::to_string(p)) << "(T^" << r << ")^" << dv;
            break;
        case Kind::reduced:
            os << "reduced1(T^" << r << ")^" << dv;
            break;
    }
    return os.str();
}

Value value_add(const Value& a, const Value& b) {
    if (a.index() != b.index()) throw DimensionMismatch("value_add: different value kinds");
    return std::visit(
        [&](const auto& x) -> Value {
            using T = std::decay_t<decltype(x)>;
            return x + std::get<T>(b);
        },
        a);
}

Value value_scale(const Scalar& s, const Value& a) {
    return std::visit([&](const auto& x) -> Value { return s * x; }, a);
}

bool value_is_zero(const Value& v) {
    return std::visit(
        [](const auto& x) {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Vector>) {
                return is_zero(x);
            } else {
                return x.is_zero();
            }
        },
        v);
}

bool value_equal(const Value& a, const Value& b) { return a == b; }

std::string value_to_string(const Value& v) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, Vector>) {
                return to_string(x);
            } else {
                return x.to_string();
            }
        },
        v);
}

Value GradedCochain::evaluate(const std::vector<GElement>& xs) const {
    if (xs.size() != degree) throw DimensionMismatch("graded cochain: argument count");
    Value out = space.zero();
    std::vector<GBasis> idx(degree);
    auto rec = [&](auto&& self, std::size_t k, const Scalar& coef) -> void {
        if (k == degree) {
            Value v = on_basis(idx);
            if (!value_is_zero(v)) out = value_add(out, value_scale(coef, v));
            return;
        }
        for (const auto& [b, c] : xs[k].terms()) {
            idx[k] = b;
            self(self, k + 1, coef * c);
        }
    };
    rec(rec, 0, Scalar(1));
    return out;
}

GradedCochain zero_cochain(std::size_t degree, const ValueSpace& space) {
    return {degree, space, [space](const std::vector<GBasis>&) { return space.zero(); }};
}

GradedCochain operator+(const GradedCochain& a, const GradedCochain& b) {
    if (a.degree != b.degree || !(a.space == b.space)) throw DimensionMismatch("graded cochain sum");
    return {a.degree, a.space, [a, b](const std::vector<GBasis>& t) { return value_add(a.on_basis(t), b.on_basis(t)); }};
}

GradedCochain operator-(const GradedCochain& a, const GradedCochain& b) { return a + Scalar(-1) * b; }

GradedCochain operator*(const Scalar& s, const GradedCochain& a) {
    return {a.degree, a.space, [s, a](const std::vector<GBasis>& t) { return value_scale(s, a.on_basis(t)); }};
}

GradedCochain compose(const GradedCochain& c, const ValueSpace& target, std::function<Value(const Value&)> f) {
    return {c.degree, target, [c, f](const std::vector<GBasis>& t) { return f(c.on_basis(t)); }};
}

Value d_evaluate(const GradedAlgebra& g, const GradedCochain& w, const ValueAction& act, const std::vector<GElement>& xs) {
    const std::size_t p = w.degree;
    if (xs.size() != p + 1) throw DimensionMismatch("d_evaluate: argument count");
    Value out = w.space.zero();
    if (act) {
        for (std::size_t i = 0; i <= p; ++i) {
            std::vector<GElement> rest;
            for (std::size_t k = 0; k <= p; ++k) {
                if (k != i) rest.push_back(xs[k]);
            }
            Value inner = w.evaluate(rest);
            if (value_is_zero(inner)) continue;
            const Scalar sign(i % 2 == 0 ? 1 : -1);
            for (const auto& [b, c] : xs[i].terms()) out = value_add(out, value_scale(sign * c, act(b, inner)));
        }
    }
    for (std::size_t i = 0; i <= p; ++i) {
        for (std::size_t j = i + 1; j <= p; ++j) {
            GElement br = g.bracket(xs[i], xs[j]);
            if (br.is_zero()) continue;
            std::vector<GElement> args{br};
            for (std::size_t k = 0; k <= p; ++k) {
                if (k != i && k != j) args.push_back(xs[k]);
            }
            const Scalar sign((i + j) % 2 == 0 ? 1 : -1);
            out = value_add(out, value_scale(sign, w.evaluate(args)));
        }
    }
    return out;
}

GradedCochain d_cochain(const GradedAlgebra& g, const GradedCochain& w, const ValueAction& act) {
    return {w.degree + 1, w.space, [g, w, act](const std::vector<GBasis>& t) {
                std::vector<GElement> xs;
                for (const auto& b : t) xs.push_back(GElement::basis(b));
                return d_evaluate(g, w, act, xs);
            }};
}

bool is_alternating_on(const GradedCochain& w, const std::vector<std::vector<GBasis>>& tuples) {
    for (const auto& t : tuples) {
        for (std::size_t i = 0; i + 1 < t.size(); ++i) {
            auto s = t;
            std::swap(s[i], s[i + 1]);
            if (!value_is_zero(value_add(w.on_basis(t), w.on_basis(s)))) return false;
        }
    }
    return true;
}

bool is_closed_on(const GradedAlgebra& g, const GradedCochain& w, const ValueAction& act,
                  const std::vector<std::vector<GBasis>>& tuples) {
    for (const auto& t : tuples) {
        std::vector<GElement> xs;
        for (const auto& b : t) xs.push_back(GElement::basis(b));
        if (!value_is_zero(d_evaluate(g, w, act, xs))) return false;
    }
    return true;
}

std::vector<std::vector<GBasis>> random_tuples(const GradedAlgebra& g, int n, std::size_t arity, std::size_t count,
                                               unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> deg(-n, n);
    std::uniform_int_distribution<std::size_t> slot(0, g.slots() - 1);
    std::vector<std::vector<GBasis>> out;
    for (std::size_t k = 0; k < count; ++k) {
        std::vector<GBasis> t;
        for (std::size_t a = 0; a < arity; ++a) {
            MultiIndex alpha(static_cast<std::size_t>(g.r));
            for (auto& x : alpha) x = deg(rng);
            t.push_back({alpha, slot(rng)});
        }
        out.push_back(std::move(t));
    }
    return out;
}

}  // namespace liecoh
