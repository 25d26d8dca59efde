#include "liecoh/mapalg/cocycles.hpp"

#include "liecoh/errors.hpp"

#include <set>

namespace liecoh {

namespace {

void check_pair(const std::vector<GBasis>& t) {
    if (t.size() != 2) throw DimensionMismatch("mapping cocycle: expected two arguments");
}

bool out_of_range(const std::vector<GBasis>& t, std::size_t n) {
    for (const auto& b : t) {
        if (b.slot >= n) return true;
    }
    return false;
}

void require_cocycle(const LieAlgebra& k, const Cochain& eta, const char* what) {
    if (eta.degree() != 2 || eta.algebra_dim() != k.dim()) throw DimensionMismatch(what);
    if (!ce_d(k, ModuleAction::trivial(k, eta.module_dim()), eta).is_zero()) {
        throw NotACocycle(std::string(what) + ": eta is not a cocycle");
    }
}

Vector eta_at(const Cochain& eta, std::size_t i, std::size_t j) { return eta.on_basis({i, j}); }

}  // namespace

GradedCochain type1_cocycle(const LieAlgebra& k, int r, const BilinearFormSym& kappa) {
    if (!is_invariant(k, ModuleAction::trivial(k, kappa.module_dim()), kappa)) {
        throw NotInvariant("type1_cocycle: kappa is not invariant");
    }
    const std::size_t n = k.dim(), dv = kappa.module_dim();
    return {2, ValueSpace::reduced(r, dv), [kappa, r, n, dv](const std::vector<GBasis>& t) -> Value {
                check_pair(t);
                if (out_of_range(t, n)) return ReducedOneForm(r, dv);
                const Vector& c = kappa.at(t[0].slot, t[1].slot);
                TorusForm w(r, 1, dv);
                if (is_zero(c)) return ReducedOneForm(r, dv);
                const MultiIndex g = t[0].deg + t[1].deg;
                for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
                    w.add_term(g, {i}, Scalar(t[1].deg[i]) * c);
                }
                return ReducedOneForm::reduce(w);
            }};
}

GradedCochain type2_cocycle(const LieAlgebra& k, int r, const Cochain& eta) {
    require_cocycle(k, eta, "type2_cocycle");
    return type2_variable_cocycle(k, r, {{MultiIndex(static_cast<std::size_t>(r), 0), eta}});
}

GradedCochain type2_variable_cocycle(const LieAlgebra& k, int r, const std::map<MultiIndex, Cochain>& table) {
    std::size_t dv = 1;
    for (const auto& [g, eta] : table) {
        if (static_cast<int>(g.size()) != r) throw DimensionMismatch("type2_variable_cocycle: exponent size");
        require_cocycle(k, eta, "type2_variable_cocycle");
        dv = eta.module_dim();
    }
    const std::size_t n = k.dim();
    return {2, ValueSpace::functions(r, dv), [table, r, n, dv](const std::vector<GBasis>& t) -> Value {
                check_pair(t);
                TorusForm w(r, 0, dv);
                if (out_of_range(t, n)) return w;
                const MultiIndex base = t[0].deg + t[1].deg;
                for (const auto& [g, eta] : table) w.add_term(base + g, {}, eta_at(eta, t[0].slot, t[1].slot));
                return w;
            }};
}

Type2Coboundary type2_coboundary(const LieAlgebra& k, int r, const std::map<MultiIndex, Cochain>& table) {
    Type2Coboundary out;
    std::map<MultiIndex, Cochain> potentials;
    std::size_t dv = 1;
    for (const auto& [g, eta] : table) {
        dv = eta.module_dim();
        auto res = coboundary_solve(k, ModuleAction::trivial(k, dv), eta);
        if (res.exact) {
            potentials.emplace(g, *res.potential);
        } else {
            out.obstructions.push_back(g);
        }
    }
    out.coboundary = out.obstructions.empty();
    if (!out.coboundary) return out;
    const std::size_t n = k.dim();
    out.witness = GradedCochain{1, ValueSpace::functions(r, dv), [potentials, r, n, dv](const std::vector<GBasis>& t) -> Value {
                                    TorusForm w(r, 0, dv);
                                    if (t.size() != 1) throw DimensionMismatch("type2 witness: one argument");
                                    if (t[0].slot >= n) return w;
                                    for (const auto& [g, beta] : potentials) {
                                        w.add_term(t[0].deg + g, {}, beta.on_basis({t[0].slot}));
                                    }
                                    return w;
                                }};
    return out;
}

GradedCochain type3_cocycle(const LieAlgebra& k, int r, const BilinearFormSym& kappa, const Cochain& eta) {
    const Cochain gamma = cartan_map(k, kappa);
    if (eta.degree() != 2 || eta.algebra_dim() != k.dim() || eta.module_dim() != kappa.module_dim()) {
        throw DimensionMismatch("type3_cocycle: eta shape");
    }
    if (ce_d(k, ModuleAction::trivial(k, kappa.module_dim()), eta) != gamma) {
        throw KappaNotExact("type3_cocycle: d eta != G(kappa)");
    }
    const std::size_t n = k.dim(), dv = kappa.module_dim();
    return {2, ValueSpace::forms(r, 1, dv), [kappa, eta, r, n, dv](const std::vector<GBasis>& t) -> Value {
                check_pair(t);
                TorusForm w(r, 1, dv);
                if (out_of_range(t, n)) return w;
                const Vector& c = kappa.at(t[0].slot, t[1].slot);
                const Vector e = eta_at(eta, t[0].slot, t[1].slot);
                const MultiIndex g = t[0].deg + t[1].deg;
                for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
                    const Scalar a(t[0].deg[i]), b(t[1].deg[i]);
                    w.add_term(g, {i}, (b - a) * c - (a + b) * e);
                }
                return w;
            }};
}

GradedCochain type3_cocycle(const LieAlgebra& k, int r, const BilinearFormSym& kappa) {
    auto res = cartan_exactness(k, kappa);
    if (!res.exact) throw KappaNotExact("type3_cocycle: G(kappa) is not exact");
    return type3_cocycle(k, r, kappa, *res.potential);
}

GradedCochain curvature_cocycle(const LieAlgebra& k, int r, const BilinearFormSym& kappa) {
    if (!is_invariant(k, ModuleAction::trivial(k, kappa.module_dim()), kappa)) {
        throw NotInvariant("curvature_cocycle: kappa is not invariant");
    }
    const std::size_t n = k.dim(), dv = kappa.module_dim();
    return {2, ValueSpace::forms(r, 2, dv), [kappa, r, n, dv](const std::vector<GBasis>& t) -> Value {
                check_pair(t);
                TorusForm w(r, 2, dv);
                if (out_of_range(t, n)) return w;
                const Vector& c = kappa.at(t[0].slot, t[1].slot);
                const MultiIndex g = t[0].deg + t[1].deg;
                for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
                    for (std::size_t j = 0; j < static_cast<std::size_t>(r); ++j) {
                        if (i == j) continue;
                        w.add_term(g, {i, j}, Scalar(t[0].deg[i] * t[1].deg[j]) * c);
                    }
                }
                return w;
            }};
}

std::vector<MultiIndex> CocyclePair::touched() const {
    std::set<MultiIndex> s;
    for (const auto& [key, f] : beta_a) s.insert(key.first);
    for (const auto& [g, c] : beta_s) s.insert(g);
    return {s.begin(), s.end()};
}

Cochain coupling_defect(const LieAlgebra& k, int r, const CocyclePair& pair, const MultiIndex& g) {
    const std::size_t dv = pair.module_dim;
    Cochain out(3, k.dim(), dv);
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
        auto it = pair.beta_a.find({g, i});
        if (it == pair.beta_a.end() || g[i] == 0) continue;
        out += Scalar(g[i]) * cartan_map(k, it->second);
    }
    auto s = pair.beta_s.find(g);
    if (s != pair.beta_s.end()) out -= ce_d(k, ModuleAction::trivial(k, dv), s->second);
    return out;
}

std::optional<CouplingWitness> find_coupling_violation(const LieAlgebra& k, int r, const CocyclePair& pair) {
    const GradedAlgebra g = mapping_algebra(k, r);
    const GradedCochain w = pair_cocycle_unchecked(k, r, pair);
    const MultiIndex zero(static_cast<std::size_t>(r), 0);
    for (const auto& m : pair.touched()) {
        Cochain defect = coupling_defect(k, r, pair, m);
        if (defect.is_zero()) continue;
        for (const Tuple& s : subsets(k.dim(), 3)) {
            if (is_zero(defect.value(s))) continue;
            std::vector<GBasis> triple{{m, s[0]}, {zero, s[1]}, {zero, s[2]}};
            std::vector<GElement> xs;
            for (const auto& b : triple) xs.push_back(GElement::basis(b));
            Value dv = d_evaluate(g, w, {}, xs);
            if (value_is_zero(dv)) continue;
            return CouplingWitness{m, defect, triple, dv};
        }
    }
    return std::nullopt;
}

GradedCochain pair_cocycle_unchecked(const LieAlgebra& k, int r, const CocyclePair& pair) {
    const std::size_t n = k.dim(), dv = pair.module_dim;
    return {2, ValueSpace::scalars(dv), [pair, r, n, dv](const std::vector<GBasis>& t) -> Value {
                check_pair(t);
                Vector out(dv);
                if (out_of_range(t, n)) return out;
                const MultiIndex g = t[0].deg + t[1].deg;
                for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
                    const int c = t[1].deg[i] - t[0].deg[i];
                    if (c == 0) continue;
                    auto it = pair.beta_a.find({g, i});
                    if (it != pair.beta_a.end()) add_scaled(out, Scalar(c), it->second.at(t[0].slot, t[1].slot));
                }
                auto s = pair.beta_s.find(g);
                if (s != pair.beta_s.end()) add_scaled(out, Scalar(-1), s->second.on_basis({t[0].slot, t[1].slot}));
                return out;
            }};
}

GradedCochain pair_cocycle(const LieAlgebra& k, int r, const CocyclePair& pair) {
    for (const auto& [key, f] : pair.beta_a) {
        if (static_cast<int>(key.first.size()) != r || key.second >= static_cast<std::size_t>(r)) {
            throw DimensionMismatch("pair_cocycle: beta_a key");
        }
        if (f.module_dim() != pair.module_dim || f.algebra_dim() != k.dim()) {
            throw DimensionMismatch("pair_cocycle: beta_a value shape");
        }
        if (!is_invariant(k, ModuleAction::trivial(k, pair.module_dim), f)) {
            throw NotInvariant("pair_cocycle: beta_a(t^" + index_to_string(key.first) + " delta_" +
                               std::to_string(key.second + 1) + ") is not invariant");
        }
    }
    for (const auto& [g, c] : pair.beta_s) {
        if (static_cast<int>(g.size()) != r || c.degree() != 2 || c.algebra_dim() != k.dim() ||
            c.module_dim() != pair.module_dim) {
            throw DimensionMismatch("pair_cocycle: beta_s entry shape");
        }
    }
    for (const auto& m : pair.touched()) {
        if (!coupling_defect(k, r, pair, m).is_zero()) {
            throw CouplingViolated("pair_cocycle: coupling fails at t^" + index_to_string(m));
        }
    }
    return pair_cocycle_unchecked(k, r, pair);
}

CocyclePair kac_moody_pair(const BilinearFormSym& kappa, int r, std::size_t axis) {
    CocyclePair p;
    p.module_dim = kappa.module_dim();
    p.beta_a.emplace(std::make_pair(MultiIndex(static_cast<std::size_t>(r), 0), axis), Scalar::rational(1, 2) * kappa);
    return p;
}

GradedCochain reduction_residue(const GradedCochain& w, int axis) {
    if (w.space.kind != ValueSpace::Kind::reduced) throw InvalidArgument("reduction_residue: expects reduced 1-forms");
    return compose(w, ValueSpace::scalars(w.space.dv),
                   [axis](const Value& v) -> Value { return std::get<ReducedOneForm>(v).cycle_integral(axis); });
}

GradedCochain reduction_eval(const GradedCochain& w, const std::vector<Scalar>& point) {
    if (w.space.kind != ValueSpace::Kind::forms || w.space.p != 0) {
        throw InvalidArgument("reduction_eval: expects function values");
    }
    if (point.size() != static_cast<std::size_t>(w.space.r)) throw DimensionMismatch("reduction_eval: point size");
    const std::size_t dv = w.space.dv;
    return compose(w, ValueSpace::scalars(dv), [point, dv](const Value& v) -> Value {
        const auto& f = std::get<TorusForm>(v);
        Vector out(dv);
        for (std::size_t a = 0; a < dv; ++a) out[a] = f.component({}, a).evaluate(point);
        return out;
    });
}

Cochain restrict_to_constants(const GradedCochain& w, std::size_t algebra_dim, int r) {
    if (w.space.kind != ValueSpace::Kind::scalar) throw InvalidArgument("restrict_to_constants: expects vector values");
    Cochain out(w.degree, algebra_dim, w.space.dv);
    for (const Tuple& s : subsets(algebra_dim, w.degree)) {
        std::vector<GBasis> t;
        for (auto i : s) t.push_back({MultiIndex(static_cast<std::size_t>(r), 0), i});
        out.set(s, std::get<Vector>(w.on_basis(t)));
    }
    return out;
}

GradedAlgebra central_extension(const GradedAlgebra& g, const GradedCochain& w) {
    if (w.degree != 2) throw InvalidArgument("central_extension: expects a 2-cochain");
    const bool scalar = w.space.kind == ValueSpace::Kind::scalar;
    if (!scalar && !(w.space.kind == ValueSpace::Kind::forms && w.space.p == 0)) {
        throw InvalidArgument("central_extension: values must be vectors or functions");
    }
    GradedAlgebra out;
    out.name = g.name + "_ext";
    out.r = g.r;
    out.slot_names = g.slot_names;
    const std::size_t n = g.slots(), dv = w.space.dv;
    for (std::size_t a = 1; a <= dv; ++a) {
        std::string name = "c" + std::to_string(a);
        for (const auto& s : g.slot_names) {
            if (s == name) name += "'";
        }
        out.slot_names.push_back(name);
    }
    out.bracket_basis = [g, w, n, scalar](const GBasis& a, const GBasis& b) {
        GElement res;
        if (a.slot >= n || b.slot >= n) return res;
        res = g.bracket_basis(a, b);
        Value v = w.on_basis({a, b});
        if (scalar) {
            const auto& x = std::get<Vector>(v);
            const MultiIndex zero(static_cast<std::size_t>(g.r), 0);
            for (std::size_t l = 0; l < x.size(); ++l) res.add({zero, n + l}, x[l]);
        } else {
            for (const auto& [key, c] : std::get<TorusForm>(v).terms()) {
                for (std::size_t l = 0; l < c.size(); ++l) res.add({key.first, n + l}, c[l]);
            }
        }
        return res;
    };
    return out;
}

GElement jacobiator(const GradedAlgebra& g, const GBasis& a, const GBasis& b, const GBasis& c) {
    const GElement ea = GElement::basis(a), eb = GElement::basis(b), ec = GElement::basis(c);
    return g.bracket(g.bracket(ea, eb), ec) + g.bracket(g.bracket(eb, ec), ea) + g.bracket(g.bracket(ec, ea), eb);
}

JacobiFinding jacobi_on(const GradedAlgebra& g, const std::vector<std::vector<GBasis>>& triples) {
    for (const auto& t : triples) {
        if (t.size() != 3) throw DimensionMismatch("jacobi_on: triples expected");
        GElement j = jacobiator(g, t[0], t[1], t[2]);
        if (!j.is_zero()) return {false, t, j};
    }
    return {};
}

bool brackets_agree(const GradedAlgebra& a, const GradedAlgebra& b, int window) {
    if (a.r != b.r || a.slots() != b.slots()) return false;
    const auto basis = a.window_basis(window);
    for (const auto& x : basis) {
        for (const auto& y : basis) {
            if (a.bracket_basis(x, y) != b.bracket_basis(x, y)) return false;
        }
    }
    return true;
}

GradedCochain extended_cocycle(const GradedCochain& w, std::size_t gauge_slots) {
    return {w.degree, w.space, [w, gauge_slots](const std::vector<GBasis>& t) -> Value {
                if (out_of_range(t, gauge_slots)) return w.space.zero();
                return w.on_basis(t);
            }};
}

bool invariance_check(const LieAlgebra& k, int r, const GradedCochain& w, const GBasis& x, const GBasis& xi1,
                      const GBasis& xi2) {
    const std::size_t n = k.dim();
    if (x.slot < n || xi1.slot >= n || xi2.slot >= n) throw InvalidArgument("invariance_check: slot kinds");
    const GradedAlgebra g = gauge_semidirect(k, r);
    const ValueAction act = lie_derivative_action(n, r);
    const GElement ex = GElement::basis(x);
    const Value lhs = act(x, w.on_basis({xi1, xi2}));
    const Value rhs = value_add(w.evaluate({g.bracket(ex, GElement::basis(xi1)), GElement::basis(xi2)}),
                                w.evaluate({GElement::basis(xi1), g.bracket(ex, GElement::basis(xi2))}));
    return value_equal(lhs, rhs);
}

}  // namespace liecoh
