#include "doctest.h"

#include "zoo.hpp"

#include "liecoh/errors.hpp"
#include "liecoh/torusforms/forms.hpp"

#include <random>

using namespace liecoh;

namespace {

LaurentPoly random_poly(std::mt19937& rng, int r, int terms = 4, int range = 3) {
    std::uniform_int_distribution<int> e(-range, range);
    LaurentPoly f(r);
    for (int k = 0; k < terms; ++k) {
        MultiIndex a(static_cast<std::size_t>(r));
        for (auto& x : a) x = e(rng);
        f.add_term(a, zoo::small(rng));
    }
    return f;
}

TorusForm random_form(std::mt19937& rng, int r, std::size_t p, std::size_t dv = 1) {
    TorusForm w(r, p, dv);
    for (const Tuple& axes : subsets(static_cast<std::size_t>(r), p)) {
        for (std::size_t a = 0; a < dv; ++a) {
            LaurentPoly f = random_poly(rng, r, 3);
            for (const auto& [alpha, c] : f.terms()) {
                Vector v(dv);
                v[a] = c;
                w.add_term(alpha, axes, v);
            }
        }
    }
    return w;
}

std::vector<LaurentPoly> random_field(std::mt19937& rng, int r) {
    std::vector<LaurentPoly> x;
    for (int i = 0; i < r; ++i) x.push_back(random_poly(rng, r, 2, 2));
    return x;
}

}  // namespace

TEST_CASE("exterior derivative examples") {
    TorusForm f = TorusForm::function(LaurentPoly::monomial({1, 1}));
    TorusForm expected = TorusForm::monomial({1, 1}, {0}, {Scalar(1)}) + TorusForm::monomial({1, 1}, {1}, {Scalar(1)});
    CHECK(derham_d(f) == expected);
    // d(t2 delta_1) = t2 delta_2 ^ delta_1 = -t2 delta_1 ^ delta_2
    CHECK(derham_d(TorusForm::monomial({0, 1}, {0}, {Scalar(1)})) == TorusForm::monomial({0, 1}, {0, 1}, {Scalar(-1)}));
    CHECK(derham_d(TorusForm::function(LaurentPoly::constant(2, Scalar(7)))).is_zero());
}

TEST_CASE("d squared vanishes on torus forms") {
    std::mt19937 rng(1);
    for (int r = 1; r <= 3; ++r) {
        for (std::size_t p = 0; p + 2 <= static_cast<std::size_t>(r); ++p) {
            for (int trial = 0; trial < 5; ++trial) CHECK(derham_d(derham_d(random_form(rng, r, p, 2))).is_zero());
        }
    }
}

TEST_CASE("reduction of one-forms") {
    std::mt19937 rng(2);
    CHECK(reduce_oneform(derham_d(TorusForm::function(LaurentPoly::monomial({3, 1})))).is_zero());
    // r = 1: [t^m delta] = 0 unless m = 0
    for (int m = -4; m <= 4; ++m) {
        ReducedOneForm w = reduce_oneform(TorusForm::monomial({m}, {0}, {Scalar(1)}));
        CHECK(w.cycle_integral(1) == Vector{Scalar(m == 0 ? 1 : 0)});
        CHECK(w.is_zero() == (m != 0));
    }
    // t1 t2 (delta_1 + delta_2) is exact, so [t1 t2 delta_1] = -[t1 t2 delta_2]
    ReducedOneForm w = reduce_oneform(TorusForm::monomial({1, 1}, {0}, {Scalar(1)}));
    CHECK(w.component({1, 1}) == Vector{Scalar(0), Scalar(-1)});
    CHECK(w == -reduce_oneform(TorusForm::monomial({1, 1}, {1}, {Scalar(1)})));
    for (int trial = 0; trial < 20; ++trial) {
        TorusForm f = random_form(rng, 2, 0, 2);
        CHECK(reduce_oneform(derham_d(f)).is_zero());
        TorusForm a = random_form(rng, 2, 1, 2);
        ReducedOneForm ra = reduce_oneform(a);
        CHECK(reduce_oneform(ra.lift()) == ra);
        CHECK(reduce_oneform(a + derham_d(f)) == ra);
        for (const auto& [alpha, v] : ra.components()) {
            if (is_zero_index(alpha)) continue;
            std::size_t p = 0;
            while (alpha[p] == 0) ++p;
            CHECK(v[p * 2].is_zero());
            CHECK(v[p * 2 + 1].is_zero());
        }
        CHECK(cycle_integral(reduce_oneform(derham_d(f)), 1) == Vector(2));
    }
    ReducedOneForm d1 = reduce_oneform(TorusForm::delta(2, 0));
    CHECK(d1.cycle_integral(1) == Vector{Scalar(1)});
    CHECK(d1.cycle_integral(2) == Vector{Scalar(0)});
    CHECK_THROWS_AS(d1.cycle_integral(3), InvalidArgument);
}

TEST_CASE("graded dimension of reduced one-forms") {
    for (const auto& alpha : box(2, 2)) {
        Subspace s(3);
        // span of the classes of t^alpha delta_i, read in reduced coordinates
        for (std::size_t i = 0; i < 2; ++i) {
            Vector v = reduce_oneform(TorusForm::monomial(alpha, {i}, {Scalar(1)})).component(alpha);
            s.add({v[0], v[1], Scalar(0)});
        }
        CHECK(s.dim() == reduced_dim(alpha));
        CHECK(s.dim() == (is_zero_index(alpha) ? 2u : 1u));
    }
}

TEST_CASE("Cartan calculus on the torus") {
    std::mt19937 rng(4);
    for (int r = 1; r <= 3; ++r) {
        for (std::size_t p = 0; p <= static_cast<std::size_t>(r); ++p) {
            TorusForm w = random_form(rng, r, p);
            auto x = random_field(rng, r);
            // L_X commutes with d, and i_X i_X = 0
            if (p < static_cast<std::size_t>(r)) {
                CHECK(derham_d(form_lie_derivative(w, x)) == form_lie_derivative(derham_d(w), x));
            }
            CHECK(interior(interior(w, x), x).is_zero());
        }
        TorusForm f = random_form(rng, r, 0);
        auto x = random_field(rng, r);
        LaurentPoly xf(r);
        for (int i = 0; i < r; ++i) xf += x[static_cast<std::size_t>(i)] * laurent_partial(f.component({}), i + 1);
        CHECK(form_lie_derivative(f, x) == TorusForm::function(xf));
    }
}

TEST_CASE("wedge with an invariant form") {
    LieAlgebra g = sl(2);
    BilinearFormSym k = killing_form(g);
    Vector x = {Scalar(1), Scalar(2), Scalar(0)}, y = {Scalar(0), Scalar(1), Scalar(3)};
    TorusForm a = TorusForm::monomial({1, 0}, {0}, x), b = TorusForm::monomial({0, 1}, {1}, y);
    CHECK(wedge_kappa(a, b, k) == TorusForm::monomial({1, 1}, {0, 1}, k(x, y)));
    std::mt19937 rng(6);
    for (int trial = 0; trial < 10; ++trial) {
        TorusForm p = random_form(rng, 2, 1, 3), q = random_form(rng, 2, 1, 3);
        CHECK(wedge_kappa(p, q, k) == -wedge_kappa(q, p, k));
        TorusForm p1 = random_form(rng, 1, 1, 3), q1 = random_form(rng, 1, 1, 3);
        CHECK(wedge_kappa(p1, q1, k).is_zero());
    }
    CHECK(wedge_kappa(a, a, k).is_zero());
}

TEST_CASE("lattice pullback commutes with d") {
    std::mt19937 rng(8);
    LatticeAction g;
    g.a = {{-1, 0}, {0, 1}};
    g.chi = {Scalar(1), Scalar(-1)};
    for (std::size_t p = 0; p < 2; ++p) {
        TorusForm w = random_form(rng, 2, p, 2);
        CHECK(derham_d(pullback(w, g)) == pullback(derham_d(w), g));
    }
    CHECK(g.compose(g) == LatticeAction::identity(2));
    TorusForm w = random_form(rng, 2, 1);
    CHECK(pullback(reduce_oneform(derham_d(random_form(rng, 2, 0))), g).is_zero());
    CHECK(pullback(pullback(w, g), g) == w);
}
