#include "doctest.h"

#include "liecoh/errors.hpp"
#include "liecoh/exactalg/laurent.hpp"
#include "liecoh/exactalg/sparse.hpp"

#include <random>

using namespace liecoh;

namespace {

Scalar random_scalar(std::mt19937& rng, std::uint32_t order) {
    std::uniform_int_distribution<int> d(-3, 3);
    std::vector<mpq_class> c(euler_phi(order));
    for (auto& x : c) x = d(rng);
    return Scalar::from_coefficients(order, c);
}

SparseMatrix random_sparse(std::mt19937& rng, std::size_t rows, std::size_t cols, std::uint32_t order) {
    std::bernoulli_distribution fill(0.15);
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            if (fill(rng)) t.push_back({i, j, random_scalar(rng, order)});
        }
    }
    return SparseMatrix::from_triplets(rows, cols, t);
}

LaurentPoly random_laurent(std::mt19937& rng, int vars) {
    std::uniform_int_distribution<int> e(-3, 3);
    std::uniform_int_distribution<int> c(-5, 5);
    LaurentPoly p(vars);
    for (int k = 0; k < 5; ++k) {
        MultiIndex a(static_cast<std::size_t>(vars));
        for (auto& x : a) x = e(rng);
        p.add_term(a, Scalar(c(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("rational field arithmetic") {
    Field q = field_make(FieldSpec::rationals());
    CHECK(q.order() == 1);
    CHECK(q.zero().is_zero());
    CHECK(q.one().is_one());
    Scalar a = Scalar::rational(3, 4);
    CHECK(a / a == q.one());
    CHECK((a * Scalar::rational(4, 3)).is_one());
    CHECK(Scalar::parse_rational("-6/8") == Scalar::rational(-3, 4));
    CHECK(Scalar::parse_rational("-6/8").to_string() == "-3/4");
    CHECK_THROWS_AS(Scalar::parse_rational("1/0"), InvalidArgument);
    CHECK_THROWS_AS(Scalar::parse_rational("abc"), InvalidArgument);
    CHECK_THROWS_AS(field_make(FieldSpec::cyclotomic(0)), InvalidArgument);
}

TEST_CASE("cyclotomic relations") {
    Field f4 = field_make(FieldSpec::cyclotomic(4));
    CHECK(f4.zeta() * f4.zeta() == Scalar(-1));
    Scalar z3 = Scalar::zeta(3);
    CHECK((Scalar(1) + z3 + z3 * z3).is_zero());
    for (std::uint32_t m : {1u, 2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
        CHECK(Scalar::zeta(m).pow(m).is_one());
        CAPTURE(m);
        CHECK(cyclotomic_polynomial(m).size() == euler_phi(m) + 1);
    }
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    // mixed orders promote to the lcm
    Scalar s = Scalar::zeta(4) * Scalar::zeta(3);
    CHECK(s == Scalar::zeta(12, 7));
    CHECK(s.pow(12).is_one());
    CHECK(!s.pow(6).is_one());
    // inverses
    std::mt19937 rng(7);
    for (int k = 0; k < 20; ++k) {
        Scalar x = random_scalar(rng, 12);
        if (x.is_zero()) continue;
        CHECK((x * x.inverse()).is_one());
    }
    CHECK(Scalar::zeta(2) == Scalar(-1));
    CHECK((Scalar::zeta(8) * Scalar::zeta(8)) == Scalar::zeta(4));
}

TEST_CASE("laurent partial derivatives") {
    LaurentPoly t1cubed = LaurentPoly::monomial({3});
    CHECK(laurent_partial(t1cubed, 1) == Scalar(3) * t1cubed);
    CHECK(laurent_partial(LaurentPoly::constant(1, Scalar(5)), 1).is_zero());
    LaurentPoly g = LaurentPoly::monomial({2, -1});
    CHECK(laurent_partial(g, 2) == -g);
    CHECK_THROWS_AS(laurent_partial(g, 3), InvalidArgument);
    CHECK_THROWS_AS(laurent_partial(g, 0), InvalidArgument);

    std::mt19937 rng(11);
    for (int k = 0; k < 30; ++k) {
        LaurentPoly f = random_laurent(rng, 3);
        LaurentPoly h = random_laurent(rng, 3);
        for (int i = 1; i <= 3; ++i) {
            for (int j = 1; j <= 3; ++j) {
                CHECK(laurent_partial(laurent_partial(f, i), j) == laurent_partial(laurent_partial(f, j), i));
            }
            CHECK(laurent_partial(f * h, i) == laurent_partial(f, i) * h + f * laurent_partial(h, i));
        }
    }
}

TEST_CASE("kernel, image and solve basics") {
    SparseMatrix zero(2, 2);
    CHECK(kernel_basis(zero).size() == 2);
    SparseMatrix id = SparseMatrix::from_dense(Matrix::identity(3));
    CHECK(kernel_basis(id).empty());
    CHECK(image_basis(id).size() == 3);

    SparseMatrix a = SparseMatrix::from_triplets(2, 2, {{0, 0, 1}, {0, 1, 1}, {1, 0, 2}, {1, 1, 2}});
    SolveResult r = solve(a, Vector{Scalar(1), Scalar(3)});
    REQUIRE(!r.feasible);
    CHECK(r.certificate == Vector{Scalar(-2), Scalar(1)});
    CHECK(verify_solve(a, Vector{Scalar(1), Scalar(3)}, r));

    SolveResult ok = solve(a, Vector{Scalar(1), Scalar(2)});
    REQUIRE(ok.feasible);
    CHECK(a.apply(ok.solution) == Vector{Scalar(1), Scalar(2)});

    CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{0, 0, 1}, {0, 0, 2}}), InvalidArgument);
    CHECK_THROWS_AS(SparseMatrix::from_triplets(2, 2, {{2, 0, 1}}), InvalidArgument);
    CHECK_THROWS_AS(solve(a, Vector{Scalar(1)}), DimensionMismatch);
}

TEST_CASE("random sparse matrices over Q(zeta4)") {
    std::mt19937 rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 40);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t m = dim(rng), n = dim(rng);
        SparseMatrix a = random_sparse(rng, m, n, 4);
        auto ker = kernel_basis(a);
        std::size_t rk = rank(a);
        CHECK(rk == n - ker.size());
        CHECK(image_basis(a).size() == rk);
        for (const auto& v : ker) CHECK(is_zero(a.apply(v)));
        // feasible right-hand side
        Vector x(n);
        for (auto& s : x) s = random_scalar(rng, 4);
        Vector b = a.apply(x);
        SolveResult r = solve(a, b);
        CHECK(r.feasible);
        CHECK(verify_solve(a, b, r));
        // generic right-hand side: feasible iff no certificate
        Vector c(m);
        for (auto& s : c) s = random_scalar(rng, 4);
        SolveResult r2 = solve(a, c);
        CHECK(verify_solve(a, c, r2));
        if (!r2.feasible) {
            bool found = false;
            for (const auto& y : kernel_basis(a.transpose())) found = found || !dot(y, c).is_zero();
            CHECK(found);
        } else {
            for (const auto& y : kernel_basis(a.transpose())) CHECK(dot(y, c).is_zero());
        }
    }
}

TEST_CASE("echelon is canonical") {
    std::mt19937 rng(3);
    SparseMatrix a = random_sparse(rng, 12, 10, 3);
    Echelon e1 = echelon_of_rows(a);
    Echelon e2(10);
    for (std::size_t i = a.rows(); i-- > 0;) e2.insert(a.row(i));
    CHECK(e1.pivot_rows() == e2.pivot_rows());
}

TEST_CASE("subspace intersection") {
    Subspace x = Subspace::span(3, {unit_vector(3, 0), unit_vector(3, 1)});
    Subspace y = Subspace::span(3, {unit_vector(3, 1), unit_vector(3, 2)});
    Subspace z = intersect(x, y);
    CHECK(z.dim() == 1);
    CHECK(z.contains(unit_vector(3, 1)));
}
