#include "doctest.h"

#include "zoo.hpp"

#include "liecoh/errors.hpp"
#include "liecoh/mapalg/cocycles.hpp"

#include <random>

using namespace liecoh;

namespace {

ModuleAction triv(const LieAlgebra& g, std::size_t d = 1) { return ModuleAction::trivial(g, d); }

MultiIndex idx(std::initializer_list<int> v) { return MultiIndex(v); }

GBasis gb(MultiIndex deg, std::size_t slot) { return {std::move(deg), slot}; }

// T*(aff(1)) with k(x*,x) = k(y*,y) = 1 and eta(x*,x) = eta(y*,y) = -1.
struct Cotangent {
    LieAlgebra k = cotangent(aff1());
    BilinearFormSym kappa{4, 1};
    Cochain eta{2, 4, 1};
    Cotangent() {
        kappa.set(0, 2, {Scalar(1)});
        kappa.set(1, 3, {Scalar(1)});
        eta.set({0, 2}, {Scalar(-1)});
        eta.set({1, 3}, {Scalar(-1)});
    }
};

// Constant term of f * D(g), D = t d/dt; the residue of f dg.
Scalar residue_oracle(int m, int n) {
    LaurentPoly f = LaurentPoly::monomial({m});
    LaurentPoly g = LaurentPoly::monomial({n});
    return (f * laurent_partial(g, 1)).constant_term();
}

Cochain random_cocycle(std::mt19937& rng, const LieAlgebra& k) {
    CohomologySpace h(k, triv(k), 2);
    auto z = kernel_basis(ce_matrix(k, triv(k), 2));
    Cochain out(2, k.dim(), 1);
    for (const auto& v : z) out += zoo::small(rng) * Cochain::from_flat(2, k.dim(), 1, v);
    return out;
}

}  // namespace

TEST_CASE("mapping algebra bracket and Jacobi") {
    GradedAlgebra g = mapping_algebra(sl(2), 2);
    GElement br = g.bracket(GElement::basis(gb(idx({1, 0}), 0)), GElement::basis(gb(idx({-2, 3}), 1)));
    // [h, e] = 2e
    CHECK(br == GElement::basis(gb(idx({-1, 3}), 1), Scalar(2)));
    CHECK(jacobi_on(g, random_tuples(g, 3, 3, 100, 7)).holds);
}

TEST_CASE("type I on loop sl2") {
    LieAlgebra k = sl(2);
    BilinearFormSym kil = killing_form(k);
    GradedCochain w = type1_cocycle(k, 1, kil);
    for (int m = -4; m <= 4; ++m) {
        for (int n = -4; n <= 4; ++n) {
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) {
                    auto v = std::get<ReducedOneForm>(w.on_basis({gb({m}, i), gb({n}, j)}));
                    CHECK(v.cycle_integral(1) == residue_oracle(m, n) * kil.at(i, j));
                }
            }
        }
    }
    SUBCASE("constants pair to zero") {
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) CHECK(value_is_zero(w.on_basis({gb({0}, i), gb({0}, j)})));
        }
    }
    SUBCASE("w(xi, xi) = 0") {
        std::mt19937 rng(3);
        for (int trial = 0; trial < 20; ++trial) {
            GElement xi;
            for (int a = 0; a < 4; ++a) xi += GElement::monomial({a - 2}, zoo::vec(rng, 3));
            CHECK(value_is_zero(w(xi, xi)));
        }
    }
    SUBCASE("non-invariant form is rejected") {
        CHECK_THROWS_AS(type1_cocycle(k, 1, BilinearFormSym::from_matrix(Matrix::identity(3))), NotInvariant);
    }
}

TEST_CASE("cocycle types are closed and alternating") {
    LieAlgebra k = sl(2);
    BilinearFormSym kil = killing_form(k);
    std::mt19937 rng(11);
    Cochain eta = random_cocycle(rng, k);
    for (int r : {1, 2}) {
        GradedAlgebra g = mapping_algebra(k, r);
        auto triples = random_tuples(g, 6, 3, 150, 100 + static_cast<unsigned>(r));
        auto pairs = random_tuples(g, 6, 2, 100, 200 + static_cast<unsigned>(r));
        std::vector<GradedCochain> cs{type1_cocycle(k, r, kil), type2_cocycle(k, r, eta),
                                      type3_cocycle(k, r, BilinearFormSym(3, 1), eta),
                                      curvature_cocycle(k, r, kil)};
        for (const auto& c : cs) {
            CHECK(is_alternating_on(c, pairs));
            CHECK(is_closed_on(g, c, {}, triples));
        }
    }
    SUBCASE("Killing form on sl2 has no type III cocycle") {
        CHECK_THROWS_AS(type3_cocycle(k, 1, kil), KappaNotExact);
    }
    SUBCASE("abelian algebra with any form") {
        LieAlgebra a = abelian(2);
        BilinearFormSym f = BilinearFormSym::from_matrix(Matrix::from_rows({{Scalar(1), Scalar(2)}, {Scalar(2), Scalar(-3)}}));
        GradedAlgebra g = mapping_algebra(a, 2);
        GradedCochain w = type3_cocycle(a, 2, f, Cochain(2, 2, 1));
        CHECK(is_closed_on(g, w, {}, random_tuples(g, 4, 3, 100, 5)));
    }
}

TEST_CASE("type III on the cotangent loop algebra") {
    Cotangent t;
    for (int r : {1, 2}) {
        GradedAlgebra g = mapping_algebra(t.k, r);
        GradedCochain w3 = type3_cocycle(t.k, r, t.kappa, t.eta);
        GradedCochain w1 = type1_cocycle(t.k, r, t.kappa);
        CHECK(is_closed_on(g, w3, {}, random_tuples(g, 6, 3, 150, 31)));
        for (const auto& p : random_tuples(g, 6, 2, 100, 32)) {
            const auto lhs = ReducedOneForm::reduce(std::get<TorusForm>(w3.on_basis(p)));
            const auto rhs = Scalar(2) * std::get<ReducedOneForm>(w1.on_basis(p));
            CHECK(lhs == rhs);
        }
    }
    SUBCASE("solved eta gives a cocycle too") {
        GradedAlgebra g = mapping_algebra(t.k, 1);
        CHECK(is_closed_on(g, type3_cocycle(t.k, 1, t.kappa), {}, random_tuples(g, 5, 3, 100, 33)));
    }
    SUBCASE("changing eta by a cocycle shifts by a coboundary") {
        std::mt19937 rng(4);
        Cochain c = random_cocycle(rng, t.k);
        REQUIRE(!c.is_zero());
        const int r = 2;
        GradedAlgebra g = mapping_algebra(t.k, r);
        GradedCochain diff = type3_cocycle(t.k, r, t.kappa, t.eta + c) - type3_cocycle(t.k, r, t.kappa, t.eta);
        GradedCochain wc = type2_cocycle(t.k, r, c);
        for (const auto& p : random_tuples(g, 5, 2, 50, 34)) {
            // the shift is -d(w_c) pointwise in the torus
            CHECK(diff.on_basis(p) == Value(Scalar(-1) * derham_d(std::get<TorusForm>(wc.on_basis(p)))));
        }
    }
    SUBCASE("wrong eta is rejected") {
        CHECK_THROWS_AS(type3_cocycle(t.k, 1, t.kappa, Cochain(2, 4, 1)), KappaNotExact);
    }
    SUBCASE("curvature is half of d applied to type III") {
        const int r = 2;
        GradedAlgebra g = mapping_algebra(t.k, r);
        GradedCochain w3 = type3_cocycle(t.k, r, t.kappa, t.eta);
        GradedCochain cv = curvature_cocycle(t.k, r, t.kappa);
        for (const auto& p : random_tuples(g, 5, 2, 50, 35)) {
            CHECK(derham_d(std::get<TorusForm>(w3.on_basis(p))) == Scalar(2) * std::get<TorusForm>(cv.on_basis(p)));
        }
    }
}

TEST_CASE("curvature cocycle") {
    LieAlgebra k = sl(2);
    BilinearFormSym kil = killing_form(k);
    GradedCochain c1 = curvature_cocycle(k, 1, kil);
    CHECK(value_is_zero(c1.on_basis({gb({2}, 1), gb({-1}, 2)})));
    GradedCochain c2 = curvature_cocycle(k, 2, kil);
    // e = slot 1, f = slot 2, k(e,f) = 4
    auto v = std::get<TorusForm>(c2.on_basis({gb(idx({1, 0}), 1), gb(idx({0, 1}), 2)}));
    CHECK(v == TorusForm::monomial(idx({1, 1}), {0, 1}, {Scalar(4)}));
    SUBCASE("vector-field directions contribute zero") {
        CHECK(value_is_zero(c2.on_basis({gb(idx({1, 0}), 3), gb(idx({0, 1}), 2)})));
    }
}

TEST_CASE("type II cocycles") {
    LieAlgebra h = heisenberg3();
    CohomologySpace h2(h, triv(h), 2);
    REQUIRE(h2.dim() == 2);
    const Cochain eta = h2.representatives()[0];
    SUBCASE("evaluation at t = 1 reproduces eta") {
        GradedCochain w = type2_cocycle(h, 2, eta);
        CHECK(restrict_to_constants(reduction_eval(w, {Scalar(1), Scalar(1)}), 3, 2) == eta);
    }
    SUBCASE("not a cocycle") {
        LieAlgebra k = cotangent(aff1());
        Cochain bad(2, 4, 1);
        for (const Tuple& s : subsets(4, 2)) {
            bad = Cochain(2, 4, 1);
            bad.set(s, {Scalar(1)});
            if (!ce_d(k, triv(k), bad).is_zero()) break;
        }
        CHECK_THROWS_AS(type2_cocycle(k, 1, bad), NotACocycle);
    }
    SUBCASE("nontrivial class is not a coboundary") {
        auto res = type2_coboundary(h, 1, {{idx({0}), eta}});
        CHECK_FALSE(res.coboundary);
        CHECK(res.obstructions == std::vector<MultiIndex>{idx({0})});
    }
    SUBCASE("coboundary table assembles a witness") {
        LieAlgebra k = sl(2);
        std::mt19937 rng(8);
        std::map<MultiIndex, Cochain> table;
        for (int g : {-2, 0, 3}) table.emplace(idx({g}), ce_d(k, triv(k), zoo::cochain(rng, 1, 3, 1)));
        auto res = type2_coboundary(k, 1, table);
        REQUIRE(res.coboundary);
        GradedAlgebra ga = mapping_algebra(k, 1);
        GradedCochain w = type2_variable_cocycle(k, 1, table);
        GradedCochain dw = d_cochain(ga, *res.witness, {});
        for (const auto& p : random_tuples(ga, 5, 2, 60, 9)) CHECK(dw.on_basis(p) == w.on_basis(p));
    }
    SUBCASE("zero table") {
        CHECK(type2_coboundary(h, 1, {}).coboundary);
    }
}

TEST_CASE("pair cocycles") {
    LieAlgebra k = sl(2);
    BilinearFormSym kil = killing_form(k);
    GradedAlgebra g = mapping_algebra(k, 1);
    SUBCASE("Kac-Moody data equals the residue of type I") {
        GradedCochain km = pair_cocycle(k, 1, kac_moody_pair(kil, 1));
        GradedCochain res = reduction_residue(type1_cocycle(k, 1, kil), 1);
        for (int m = -8; m <= 8; ++m) {
            for (int n = -8; n <= 8; ++n) {
                for (std::size_t i = 0; i < 3; ++i) {
                    for (std::size_t j = 0; j < 3; ++j) {
                        std::vector<GBasis> p{gb({m}, i), gb({n}, j)};
                        const Vector expect{Scalar(m + n == 0 ? n : 0) * kil.at(i, j)[0]};
                        CHECK(km.on_basis(p) == Value(expect));
                        CHECK(res.on_basis(p) == Value(expect));
                    }
                }
            }
        }
    }
    SUBCASE("evaluation-type data") {
        LieAlgebra h = heisenberg3();
        CocyclePair p;
        p.beta_s.emplace(idx({0}), CohomologySpace(h, triv(h), 2).representatives()[0]);
        GradedAlgebra gh = mapping_algebra(h, 1);
        CHECK(is_closed_on(gh, pair_cocycle(h, 1, p), {}, random_tuples(gh, 5, 3, 100, 1)));
    }
    SUBCASE("coupled and decoupled tables on the cotangent algebra") {
        Cotangent t;
        const int r = 2;
        GradedAlgebra gt = mapping_algebra(t.k, r);
        std::mt19937 rng(21);
        std::uniform_int_distribution<int> e(-2, 2);
        for (int trial = 0; trial < 10; ++trial) {
            CocyclePair p;
            for (int m = 0; m < 3; ++m) {
                MultiIndex gam{e(rng), e(rng)};
                Scalar s(0);
                for (std::size_t i = 0; i < 2; ++i) {
                    Scalar c = zoo::small(rng);
                    p.beta_a.insert_or_assign({gam, i}, c * t.kappa);
                    s += Scalar(gam[i]) * c;
                }
                p.beta_s.insert_or_assign(gam, s * t.eta + random_cocycle(rng, t.k));
            }
            GradedCochain w = pair_cocycle(t.k, r, p);
            CHECK(is_closed_on(gt, w, {}, random_tuples(gt, 4, 3, 60, 40 + static_cast<unsigned>(trial))));

            CocyclePair bad = p;
            auto it = bad.beta_s.begin();
            Cochain pert(2, 4, 1);
            pert.set({0, 1}, {Scalar(1)});
            REQUIRE(!ce_d(t.k, triv(t.k), pert).is_zero());
            it->second += pert;
            CHECK_THROWS_AS(pair_cocycle(t.k, r, bad), CouplingViolated);
            auto wit = find_coupling_violation(t.k, r, bad);
            REQUIRE(wit.has_value());
            CHECK(!value_is_zero(wit->d_value));
            std::vector<GElement> xs;
            for (const auto& b : wit->triple) xs.push_back(GElement::basis(b));
            CHECK(!value_is_zero(d_evaluate(gt, pair_cocycle_unchecked(t.k, r, bad), {}, xs)));
        }
    }
    SUBCASE("non-invariant beta_a") {
        CocyclePair p;
        p.beta_a.emplace(std::make_pair(idx({1}), std::size_t{0}), BilinearFormSym::from_matrix(Matrix::identity(3)));
        CHECK_THROWS_AS(pair_cocycle(k, 1, p), NotInvariant);
    }
}

TEST_CASE("reductions") {
    LieAlgebra k = sl(2);
    BilinearFormSym kil = killing_form(k);
    GradedCochain res = reduction_residue(type1_cocycle(k, 1, kil), 1);
    for (int m = -5; m <= 5; ++m) {
        CHECK(res.on_basis({gb({m}, 1), gb({-m}, 2)}) == Value(Vector{Scalar(-4 * m)}));
    }
    CHECK(value_is_zero(res.on_basis({gb({0}, 0), gb({0}, 0)})));
    CHECK_THROWS_AS(reduction_residue(type2_cocycle(k, 1, Cochain(2, 3, 1)), 1), InvalidArgument);
    SUBCASE("evaluation at a root of unity") {
        LieAlgebra h = heisenberg3();
        const Cochain eta = CohomologySpace(h, triv(h), 2).representatives()[1];
        GradedCochain ev = reduction_eval(type2_cocycle(h, 1, eta), {Scalar::zeta(4)});
        auto v = std::get<Vector>(ev.on_basis({gb({1}, 0), gb({2}, 1)}));
        CHECK(v == Scalar::zeta(4).pow(3) * eta.on_basis({0, 1}));
    }
}

TEST_CASE("central extensions of mapping algebras") {
    LieAlgebra k = sl(2);
    BilinearFormSym kil = killing_form(k);
    GradedAlgebra g = mapping_algebra(k, 1);
    SUBCASE("zero cocycle gives a direct sum") {
        GradedAlgebra e = central_extension(g, zero_cochain(2, ValueSpace::scalars(1)));
        CHECK(jacobi_on(e, random_tuples(e, 3, 3, 200, 2)).holds);
    }
    SUBCASE("affine bracket") {
        GradedAlgebra e = central_extension(g, pair_cocycle(k, 1, kac_moody_pair(kil, 1)));
        REQUIRE(e.slots() == 4);
        for (int m = -3; m <= 3; ++m) {
            GElement br = e.bracket_basis(gb({m}, 1), gb({-m}, 2));
            GElement expect = GElement::basis(gb({0}, 0)) + GElement::basis(gb({0}, 3), Scalar(-4 * m));
            CHECK(br == expect);
        }
        CHECK(jacobi_on(e, random_tuples(e, 4, 3, 300, 3)).holds);
        // the central element commutes with everything
        for (const auto& b : e.window_basis(2)) CHECK(e.bracket_basis(gb({0}, 3), b).is_zero());
    }
    SUBCASE("Jacobi fails exactly when the cochain is not closed") {
        Cotangent t;
        CocyclePair p;
        Cochain pert(2, 4, 1);
        pert.set({0, 1}, {Scalar(1)});
        p.beta_s.emplace(idx({1}), pert);
        GradedAlgebra gt = mapping_algebra(t.k, 1);
        GradedCochain w = pair_cocycle_unchecked(t.k, 1, p);
        GradedAlgebra e = central_extension(gt, w);
        std::vector<std::vector<GBasis>> window;
        const auto basis = gt.window_basis(1);
        for (std::size_t a = 0; a < basis.size(); ++a) {
            for (std::size_t b = a + 1; b < basis.size(); ++b) {
                for (std::size_t c = b + 1; c < basis.size(); ++c) window.push_back({basis[a], basis[b], basis[c]});
            }
        }
        for (const auto& tr : window) {
            const bool closed = is_closed_on(gt, w, {}, {tr});
            CHECK(closed == jacobi_on(e, {tr}).holds);
        }
        CHECK_FALSE(jacobi_on(e, window).holds);
        CHECK_FALSE(is_closed_on(gt, w, {}, window));
    }
    SUBCASE("type II extension is the loop algebra of the central extension") {
        LieAlgebra h = heisenberg3();
        const Cochain eta = CohomologySpace(h, triv(h), 2).representatives()[0];
        GradedAlgebra lhs = central_extension(mapping_algebra(h, 2), type2_cocycle(h, 2, eta));
        GradedAlgebra rhs = mapping_algebra(central_extension(h, eta), 2);
        CHECK(brackets_agree(lhs, rhs, 2));
        CHECK_FALSE(brackets_agree(lhs, mapping_algebra(h, 2), 1));
    }
}

TEST_CASE("vector fields and the semidirect sum") {
    GradedAlgebra w = vector_field_algebra(1);
    for (int m = -4; m <= 4; ++m) {
        for (int n = -4; n <= 4; ++n) {
            CHECK(w.bracket_basis(gb({m}, 0), gb({n}, 0)) == GElement::basis(gb({m + n}, 0), Scalar(n - m)));
        }
    }
    GradedAlgebra w2 = vector_field_algebra(2);
    CHECK(jacobi_on(w2, random_tuples(w2, 3, 3, 200, 4)).holds);

    LieAlgebra k = sl(2);
    BilinearFormSym kil = killing_form(k);
    GradedAlgebra s1 = gauge_semidirect(k, 1);
    GradedAlgebra s2 = gauge_semidirect(k, 2);
    CHECK(jacobi_on(s2, random_tuples(s2, 3, 3, 300, 5)).holds);

    SUBCASE("invariance of the cocycle types") {
        std::mt19937 rng(6);
        Cochain eta = random_cocycle(rng, k);
        Cotangent t;
        for (int r : {1, 2}) {
            std::vector<std::pair<LieAlgebra, GradedCochain>> cs{
                {k, type1_cocycle(k, r, kil)},
                {k, type2_cocycle(k, r, eta)},
                {t.k, type3_cocycle(t.k, r, t.kappa, t.eta)},
                {k, curvature_cocycle(k, r, kil)},
                {t.k, type1_cocycle(t.k, r, t.kappa)}};
            for (const auto& [alg, c] : cs) {
                GradedAlgebra s = gauge_semidirect(alg, r);
                const std::size_t n = alg.dim();
                for (const auto& tr : random_tuples(s, 3, 3, 60, 7 + static_cast<unsigned>(r))) {
                    GBasis x = tr[0];
                    x.slot = n + x.slot % static_cast<std::size_t>(r);
                    GBasis a = tr[1], b = tr[2];
                    a.slot %= n;
                    b.slot %= n;
                    CHECK(invariance_check(alg, r, c, x, a, b));
                }
            }
        }
    }
    SUBCASE("extended cocycles are closed on mixed triples") {
        for (const auto& [s, r] : {std::pair{s1, 1}, std::pair{s2, 2}}) {
            auto triples = random_tuples(s, 4, 3, 150, 12);
            ValueAction act = lie_derivative_action(3, r);
            CHECK(is_closed_on(s, extended_cocycle(type1_cocycle(k, r, kil), 3), act, triples));
            CHECK(is_closed_on(s, curvature_cocycle(k, r, kil), act, triples));
        }
        Cotangent t;
        GradedAlgebra st = gauge_semidirect(t.k, 2);
        CHECK(is_closed_on(st, extended_cocycle(type3_cocycle(t.k, 2, t.kappa, t.eta), 4), lie_derivative_action(4, 2),
                           random_tuples(st, 4, 3, 150, 13)));
    }
    SUBCASE("the Kac-Moody scalar cocycle is invariant") {
        GradedCochain km = pair_cocycle(k, 1, kac_moody_pair(kil, 1));
        for (int j = -3; j <= 3; ++j) CHECK(invariance_check(k, 1, km, gb({j}, 3), gb({1}, 1), gb({-1 - j}, 2)));
    }
}
