// Acceptance suite: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include "ce_oracle.hpp"
#include "zoo.hpp"

#include "cli/commands.hpp"
#include "io/io.hpp"

#include "liecoh/errors.hpp"
#include "liecoh/multiloop/multiloop.hpp"
#include "liecoh/semidirect/semidirect.hpp"
#include "liecoh/vfields/vfields.hpp"

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>

using namespace liecoh;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Collects the first failing check and a short summary.
class Check {
public:
    void require(bool ok, const std::string& what) {
        if (!ok && pass_) {
            pass_ = false;
            failure_ = what;
        }
    }
    Outcome done(const std::string& summary) const { return {pass_, pass_ ? summary : "failed: " + failure_}; }

private:
    bool pass_ = true;
    std::string failure_;
};

ModuleAction triv(const LieAlgebra& g, std::size_t d = 1) { return ModuleAction::trivial(g, d); }
GBasis gb(MultiIndex deg, std::size_t slot) { return {std::move(deg), slot}; }
GBasis L(int m) { return {{m}, 0}; }

std::vector<std::pair<std::string, LieAlgebra>> built_algebras() {
    std::vector<std::pair<std::string, LieAlgebra>> out = {
        {"sl2", sl(2)},        {"gl2", gl(2)},           {"sl3", sl(3)},
        {"gl3", gl(3)},        {"abelian3", abelian(3)}, {"heisenberg3", heisenberg3()},
        {"aff1", aff1()},      {"T*(aff1)", cotangent(aff1())}, {"T*(sl2)", cotangent(sl(2))},
        {"heis x| grading", zoo::heis_graded()}};
    for (const auto& inst : standard_semidirect_instances()) out.emplace_back(inst.name, inst.context().h());
    return out;
}

// T*(aff(1)) with the pairing form and a solution of d eta = G(kappa).
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

Cochain random_cocycle(std::mt19937& rng, const LieAlgebra& k) {
    Cochain out(2, k.dim(), 1);
    for (const auto& v : kernel_basis(ce_matrix(k, triv(k), 2))) out += zoo::small(rng) * Cochain::from_flat(2, k.dim(), 1, v);
    return out;
}

// ---------------------------------------------------------------- 1
Outcome complex_property() {
    Check c;
    std::size_t maps = 0;
    for (const auto& [name, g] : built_algebras()) {
        for (const ModuleAction& v : {triv(g), ModuleAction::adjoint(g)}) {
            for (std::size_t p = 0; p + 1 < g.dim(); ++p) {
                c.require((ce_matrix(g, v, p + 1) * ce_matrix(g, v, p)).is_zero(), name + " p=" + std::to_string(p));
                ++maps;
            }
        }
    }
    return c.done(std::to_string(built_algebras().size()) + " algebras, trivial + adjoint, " + std::to_string(maps) +
                  " composites d_{p+1} d_p = 0");
}

// ---------------------------------------------------------------- 2
Outcome whitehead() {
    Check c;
    const LieAlgebra g = sl(2);
    const std::size_t expect[4] = {1, 0, 0, 1};
    for (std::size_t p = 0; p <= 3; ++p) {
        const CohomologySpace h(g, triv(g), p);
        c.require(h.dim() == expect[p], "engine H^" + std::to_string(p));
        c.require(oracle::betti(g, triv(g), p) == expect[p], "oracle H^" + std::to_string(p));
    }
    const CohomologySpace h3(g, triv(g), 3);
    const Cochain gamma = cartan_map(g, killing_form(g));
    c.require(h3.is_cocycle(gamma) && !h3.is_coboundary(gamma), "G(Killing) generates H^3");
    c.require(!is_zero(h3.coordinates(gamma)), "G(Killing) class nonzero");
    return c.done("dim H^1 = H^2 = 0, dim H^3 = 1 (engine = dense oracle), H^3 spanned by [G(Killing)]");
}

// ---------------------------------------------------------------- 3
Outcome invariant_forms() {
    Check c;
    const MatrixRealization gl2 = gl_realization(2);
    const auto forms = invariant_sym_forms(gl2.algebra, triv(gl2.algebra));
    c.require(forms.size() == 2, "dim Sym^2(gl2)^gl2");
    std::vector<Vector> flats;
    for (const auto& k : forms) flats.push_back(k.flat());
    const std::size_t n = pair_count(4);
    c.require(Subspace::span(n, flats) ==
                  Subspace::span(n, {trace_square_form(gl2).flat(), trace_form(gl2).flat()}),
              "basis spans {tr x tr y, tr xy}");
    c.require(universal_form(sl(2)).dim == 1, "dim V(sl2)");
    std::size_t factored = 0;
    for (const auto& [name, g] : built_algebras()) {
        if (g.dim() > 6) continue;
        const UniversalForm u = universal_form(g);
        const auto ks = invariant_sym_forms(g, triv(g));
        c.require(u.dim == ks.size(), name + ": dim V(g) = dim invariant forms");
        for (const auto& k : ks) {
            const Matrix lambda = factor_through_universal(g, u, k);
            for (std::size_t i = 0; i < g.dim(); ++i) {
                for (std::size_t j = i; j < g.dim(); ++j) c.require(lambda.apply(u.kappa.at(i, j)) == k.at(i, j), name + ": factorization");
            }
            ++factored;
        }
    }
    return c.done("gl2: dim 2 = span{tr(x)tr(y), tr(xy)}; dim V(sl2) = 1; " + std::to_string(factored) +
                  " forms factor through k_u");
}

// ---------------------------------------------------------------- 4
Outcome cartan_exactness_check() {
    Check c;
    const LieAlgebra g = sl(2);
    const Cochain gamma = cartan_map(g, killing_form(g));
    const CoboundaryResult r = cartan_exactness(g, killing_form(g));
    c.require(!r.exact, "Killing on sl2 infeasible");
    const SparseMatrix d2 = ce_matrix(g, triv(g), 2);
    c.require(is_zero(d2.left_apply(r.certificate)), "certificate y D = 0");
    const Scalar pairing = dot(r.certificate, gamma.flat());
    c.require(!pairing.is_zero(), "certificate pairs nontrivially");
    const Cotangent t;
    const CoboundaryResult rt = cartan_exactness(t.k, t.kappa);
    c.require(rt.exact, "T*(aff1) feasible");
    c.require(rt.potential && ce_d(t.k, triv(t.k), *rt.potential) == cartan_map(t.k, t.kappa), "d eta = G(k)");
    c.require(ce_d(t.k, triv(t.k), t.eta) == cartan_map(t.k, t.kappa), "eta = -(pairing) also solves");
    return c.done("sl2/Killing infeasible (y.G = " + pairing.to_string() + ", y D = 0); T*(aff1) feasible with verified eta");
}

// ---------------------------------------------------------------- 5
Outcome cocycle_closure() {
    Check c;
    const LieAlgebra k = sl(2);
    const BilinearFormSym kil = killing_form(k);
    std::mt19937 rng(5);
    const Cochain eta = random_cocycle(rng, k);
    c.require(!eta.is_zero(), "nonzero 2-cocycle");
    for (int r : {1, 2}) {
        const GradedAlgebra g = mapping_algebra(k, r);
        const auto triples = random_tuples(g, 6, 3, 500, 500 + static_cast<unsigned>(r));
        c.require(triples.size() == 500, "500 triples");
        // Killing is not exact on sl2, so type III uses the exact form 0
        const std::vector<std::pair<std::string, GradedCochain>> ws = {
            {"I", type1_cocycle(k, r, kil)}, {"II", type2_cocycle(k, r, eta)}, {"III", type3_cocycle(k, r, BilinearFormSym(3, 1), eta)}};
        for (const auto& [name, w] : ws) c.require(is_closed_on(g, w, {}, triples), "type " + name + " r=" + std::to_string(r));
    }
    return c.done("types I, II, III closed on 500 random triples, window 6, r = 1 and 2");
}

// ---------------------------------------------------------------- 6
Outcome kac_moody() {
    Check c;
    const LieAlgebra k = sl(2);
    const BilinearFormSym kil = killing_form(k);
    const GradedCochain res = reduction_residue(type1_cocycle(k, 1, kil), 1);
    const Scalar constant(1);
    std::size_t checked = 0;
    for (int m = -8; m <= 8; ++m) {
        for (int n = -8; n <= 8; ++n) {
            // independent residue: constant term of t^m * t d/dt(t^n)
            const Scalar residue = (LaurentPoly::monomial({m}) * laurent_partial(LaurentPoly::monomial({n}), 1)).constant_term();
            c.require(residue == Scalar(m + n == 0 ? n : 0), "oracle residue");
            for (std::size_t i = 0; i < 3; ++i) {
                for (std::size_t j = 0; j < 3; ++j) {
                    const Vector expect{constant * residue * kil.at(i, j)[0]};
                    c.require(res.on_basis({gb({m}, i), gb({n}, j)}) == Value(expect), "residue value");
                    ++checked;
                }
            }
        }
    }
    return c.done("residue o w_Killing = c n delta_{m+n,0} k(x,y) with c = 1 on " + std::to_string(checked) + " pairs");
}

// ---------------------------------------------------------------- 7
Outcome projection_identity() {
    Check c;
    const Cotangent t;
    const GradedAlgebra g = mapping_algebra(t.k, 1);
    const GradedCochain w3 = type3_cocycle(t.k, 1, t.kappa, t.eta);
    const GradedCochain w1 = type1_cocycle(t.k, 1, t.kappa);
    const auto pairs = random_tuples(g, 6, 2, 100, 77);
    for (const auto& p : pairs) {
        c.require(ReducedOneForm::reduce(std::get<TorusForm>(w3.on_basis(p))) == Scalar(2) * std::get<ReducedOneForm>(w1.on_basis(p)),
                  "q o w_{k,eta} = 2 w_k");
    }
    return c.done("q o w_{k,eta} = 2 w_k on " + std::to_string(pairs.size()) + " random pairs of T*(aff1) (x) Laurent_1");
}

// ---------------------------------------------------------------- 8
Outcome coupling() {
    Check c;
    const Cotangent t;
    const int r = 2;
    const GradedAlgebra g = mapping_algebra(t.k, r);
    std::mt19937 rng(88);
    std::uniform_int_distribution<int> e(-2, 2);
    Cochain pert(2, 4, 1);
    pert.set({0, 1}, {Scalar(1)});
    c.require(!ce_d(t.k, triv(t.k), pert).is_zero(), "perturbation is not a cocycle");
    int closed = 0, witnessed = 0;
    for (int trial = 0; trial < 20; ++trial) {
        CocyclePair p;
        for (int m = 0; m < 3; ++m) {
            const MultiIndex gam{e(rng), e(rng)};
            Scalar s(0);
            for (std::size_t i = 0; i < 2; ++i) {
                const Scalar a = zoo::small(rng);
                p.beta_a.insert_or_assign({gam, i}, a * t.kappa);
                s += Scalar(gam[i]) * a;
            }
            p.beta_s.insert_or_assign(gam, s * t.eta + random_cocycle(rng, t.k));
        }
        if (is_closed_on(g, pair_cocycle(t.k, r, p), {}, random_tuples(g, 4, 3, 60, 800 + static_cast<unsigned>(trial)))) ++closed;

        CocyclePair bad = p;
        bad.beta_s.begin()->second += pert;
        const auto wit = find_coupling_violation(t.k, r, bad);
        if (!wit) continue;
        std::vector<GElement> xs;
        for (const auto& b : wit->triple) xs.push_back(GElement::basis(b));
        const Value dv = d_evaluate(g, pair_cocycle_unchecked(t.k, r, bad), {}, xs);
        if (!value_is_zero(dv) && value_equal(dv, wit->d_value)) ++witnessed;
    }
    c.require(closed == 20, "coupled tables closed");
    c.require(witnessed == 20, "decoupled tables witnessed");
    return c.done(std::to_string(closed) + "/20 coupled tables closed; " + std::to_string(witnessed) +
                  "/20 decoupled perturbations with a verified triple d w != 0");
}

// ---------------------------------------------------------------- 9
Outcome virasoro() {
    Check c;
    const GradedAlgebra w = vector_field_algebra(1);
    const GradedCochain pulled =
        reduction_residue(Scalar(2) * pullback_cocycle(type1_cocycle(gl(1), 1, trace_form(gl_realization(1)))), 1);
    const Scalar c_prime(2);
    for (int m = -8; m <= 8; ++m) {
        const auto v = std::get<Vector>(pulled.on_basis({L(m), L(-m)}));
        c.require(v == Vector{c_prime * Scalar(m * m * m)}, "c' m^3 at m=" + std::to_string(m));
        // Gelfand-Fuks oracle: constant term of Df D^2 g - Dg D^2 f
        const LaurentPoly f = LaurentPoly::monomial({m}), h = LaurentPoly::monomial({-m});
        auto d = [](const LaurentPoly& x) { return laurent_partial(x, 1); };
        c.require(v[0] == (d(f) * d(d(h)) - d(h) * d(d(f))).constant_term(), "oracle");
    }
    const GradedCochain vir = virasoro_cocycle();
    const WindowCertificate cert = window_coboundary_cert(w, vir, {}, 3);
    c.require(cert.status == WindowCertificate::Status::infeasible && cert.verified, "window certificate N = 3");
    const WindowSystem s = window_system(w, vir.space, {}, 3);
    c.require(is_zero(s.d.left_apply(cert.certificate)) && !dot(cert.certificate, window_rhs(s, vir)).is_zero(), "certificate re-check");
    // explicit beta: beta(L_0) = -1, normal form = w + d beta
    const GradedCochain beta = virasoro_shift_potential();
    c.require(beta.on_basis({L(0)}) == Value(Vector{Scalar(-1)}), "beta(L_0) = -1");
    const GradedCochain shifted = vir + d_cochain(w, beta, {});
    for (int m = -6; m <= 6; ++m) {
        c.require(shifted.on_basis({L(m), L(-m)}) == Value(Vector{Scalar(2 * (m * m * m - m))}), "normal form 2(m^3 - m)");
    }
    return c.done("residue of 2 theta* w_k2 on (L_m, L_-m) = c' m^3 with c' = 2 for |m| <= 8; N = 3 Infeasible (pairing " +
                  cert.pairing.to_string() + "); w + d beta = 2(m^3 - m), beta(L_0) = -1; lower bound dim H^2 >= 1");
}

// ---------------------------------------------------------------- 10
Outcome psi_identities() {
    Check c;
    const int r = 2;
    const GradedAlgebra g = vector_field_algebra(r);
    const auto basis = g.window_basis(3);
    const GradedCochain pb1 = psibar_k(1, r), p1 = psi_k(1, r), pb2 = psibar_k(2, r), p2 = psi_k(2, r);
    const GradedCochain dpb1 = d_values(pb1), dpb2 = d_values(pb2);
    const GradedCochain w2 = pullback_cocycle(type1_cocycle(gl(2), r, trace_form(gl_realization(2))));
    const GradedCochain w1 = pullback_cocycle(type1_cocycle(gl(2), r, trace_square_form(gl_realization(2))));
    const GradedCochain cup1 = cup(pb1, p1);
    for (const auto& b : basis) c.require(value_equal(dpb1.on_basis({b}), p1.on_basis({b})), "d Psi-bar_1 = Psi_1");
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            const std::vector<GBasis> p{basis[i], basis[j]};
            c.require(value_equal(dpb2.on_basis(p), p2.on_basis(p)), "d Psi-bar_2 = Psi_2");
            c.require(value_equal(value_scale(Scalar(2), w2.on_basis(p)), pb2.on_basis(p)), "2 theta* w_k2 = Psi-bar_2");
            c.require(value_equal(value_scale(Scalar(2), w1.on_basis(p)),
                                  Value(ReducedOneForm::reduce(std::get<TorusForm>(cup1.on_basis(p))))),
                      "2 theta* w_k1 = Psi-bar_1 ^ Psi_1");
            ++pairs;
        }
    }
    return c.done("V(T^2), window 3: d Psi-bar_k = Psi_k and both pullback identities on all " + std::to_string(pairs) +
                  " basis pairs");
}

// ---------------------------------------------------------------- 11
Outcome h2vect() {
    Check c;
    const GradedAlgebra w = vector_field_algebra(1);
    const auto cands = h2vect_candidates();
    for (const auto& k : cands) c.require(is_closed_on(w, k.cocycle, vf_action(1), random_tuples(w, 4, 3, 100, 11)), k.name + " closed");
    const auto kept = select_independent(cands, 4);
    std::vector<GradedCochain> batch;
    std::string names;
    for (const auto& k : kept) {
        batch.push_back(k.cocycle);
        names += (names.empty() ? "" : ", ") + k.name;
    }
    c.require(kept.size() >= 2, "two independent classes");
    const BatchCertificate b = batch_independence_cert(w, batch, vf_action(1), 4);
    c.require(b.independent && b.verified, "batch certificate");
    return c.done(std::to_string(kept.size()) + " function-valued classes (" + names +
                  ") independent at window 4: lower bound dim >= 2; upper bound NOT verified");
}

// ---------------------------------------------------------------- 12
Outcome multiloop() {
    Check c;
    MultiloopSpec spec;
    spec.r = 1;
    spec.orders = {2};
    spec.roots = {Scalar(-1)};
    Matrix theta(3, 3);
    theta(0, 0) = Scalar(1);
    theta(1, 1) = Scalar(-1);
    theta(2, 2) = Scalar(-1);
    spec.sigmas = {theta};
    const FixedPointAlgebra tw = multiloop_build(sl(2), spec, 6);
    std::string dims;
    for (int a = -6; a <= 6; ++a) {
        // oracle: dim ker(theta - (-1)^a)
        const Matrix shifted = theta - Scalar(a % 2 == 0 ? 1 : -1) * Matrix::identity(3);
        oracle::Dense dense(3, std::vector<Scalar>(3));
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 3; ++j) dense[i][j] = shifted(i, j);
        }
        const std::size_t expect = 3 - oracle::rank(dense);
        c.require(tw.dim_at({a}) == expect, "twisted dim at " + std::to_string(a));
        if (a >= -2 && a <= 2) dims += (dims.empty() ? "" : ",") + std::to_string(tw.dim_at({a}));
    }
    c.require(tw.closed_on_window(), "twisted closed");
    const FixedPointAlgebra klein = klein_bottle_algebra(2, 4);
    c.require(klein.closed_on_window(), "Klein closed");
    const CentroidReport cr = graded_centroid(klein, 2);
    c.require(cr.matches_fixed_ring, "centroid = Delta-fixed ring");
    c.require(cr.full_ring_witness.has_value(), "witness against the full ring");
    std::string witness;
    if (cr.full_ring_witness) {
        for (const auto& d : cr.degrees) {
            if (d.rep == *cr.full_ring_witness) {
                witness = "(" + std::to_string(d.rep[0]) + "," + std::to_string(d.rep[1]) + "): " + std::to_string(d.dim) +
                          " vs full ring " + std::to_string(d.full_ring_dim);
            }
        }
    }
    return c.done("twisted loop sl2 dims (-2..2) " + dims + "; Klein n=2 centroid matches fixed ring on " +
                  std::to_string(cr.degrees.size()) + " degrees, differs from Laurent ring at " + witness);
}

// ---------------------------------------------------------------- 13
Outcome semidirect() {
    Check c;
    std::size_t n = 0;
    for (const auto& inst : standard_semidirect_instances()) {
        const auto rep = verify_exact_sequence(inst.context());
        c.require(rep.exact_at_h2h && rep.exact_at_middle, inst.name + ": exactness");
        c.require(rep.ri_zero, inst.name + ": RI = 0");
        c.require(rep.all_ok(), inst.name + ": report");
        ++n;
    }
    for (const char* name : {"sl2_ad_h", "sl2_ad_sl2"}) {
        const SemidirectContext s = semidirect_instance(name).context();
        c.require(is_perfect(s.n()) && s.v_h().is_trivial(), std::string(name) + ": hypotheses");
        const auto rep = verify_exact_sequence(s);
        c.require(rep.rank_phi == 0 && rep.rank_restriction == rep.dim_h2_h &&
                      rep.dim_h2_h == rep.dim_h2_n_bracket + rep.dim_h2_g,
                  std::string(name) + ": bijection");
        c.require(rep.dim_h2_h == oracle::betti(s.h(), s.v_h(), 2), std::string(name) + ": oracle dim");
    }
    c.require(n >= 3, "at least 3 instances");
    return c.done("4-term sequence exact (both inclusions) on " + std::to_string(n) +
                  " instances, RI = 0 everywhere; corollary bijection for n = sl2, V trivial");
}

// ---------------------------------------------------------------- 14
Outcome cartan_formula() {
    Check c;
    const std::vector<std::pair<std::string, LieAlgebra>> algs = {
        {"sl2", sl(2)}, {"gl2", gl(2)}, {"heisenberg3", heisenberg3()}, {"T*(aff1)", cotangent(aff1())}, {"heis x| grading", zoo::heis_graded()}};
    std::size_t checks = 0;
    for (const auto& [name, g] : algs) {
        for (const ModuleAction& v : {triv(g), ModuleAction::adjoint(g)}) {
            for (const auto& z : kernel_basis(ce_matrix(g, v, 2))) {
                const Cochain w = Cochain::from_flat(2, g.dim(), v.dim(), z);
                for (std::size_t i = 0; i < g.dim(); ++i) {
                    const Vector x = unit_vector(g.dim(), i);
                    c.require(lie_derivative(g, v, w, x) == ce_d(g, v, contract(w, x)), name + ": L_x w = d i_x w");
                    ++checks;
                }
            }
        }
    }
    return c.done("L_x w = d(i_x w) for every basis 2-cocycle and basis x, trivial + adjoint, 5 algebras (" +
                  std::to_string(checks) + " checks)");
}

// ---------------------------------------------------------------- 15
std::string run_cli(const std::string& args) {
    const std::string cmd = std::string("cd '") + LIECOH_EXAMPLES_DIR + "' && '" + LIECOH_CLI_PATH + "' " + args + " 2>/dev/null";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    if (!pipe) return out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, n);
    return out;
}

std::string read_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Outcome cli_golden() {
    Check c;
    const std::vector<std::pair<std::string, std::string>> cases = {
        {"validate_sl2", "validate sl2.json"},
        {"cohomology_sl2_h2", "cohomology sl2.json 2 trivial"},
        {"invariant_forms_gl2", "invariant-forms gl2.json --universal"},
        {"cartan_tstar_aff1", "cartan tstar_aff1.json tstar_aff1_pairing.json"},
        {"multiloop_twisted_sl2", "multiloop twisted_loop_sl2.json --window 4 --centroid"},
        {"witt_virasoro", "witt --virasoro --window 3 --certify"},
        {"semidirect_heisenberg_grading", "semidirect heisenberg3.json abelian1.json heisenberg3_grading_action.json trivial"}};
    for (const auto& [name, args] : cases) {
        const std::string a = run_cli(args), b = run_cli(args);
        c.require(!a.empty() && a == b, name + ": two runs identical");
        c.require(a == read_text(std::string(LIECOH_GOLDEN_DIR) + "/" + name + ".json"), name + ": golden file");
    }
    c.require(run_cli("cohomology sl2.json 2 trivial").find("\"dimH\": 0") != std::string::npos, "dimH 0 for sl2");
    std::size_t trips = 0;
    for (const char* f : {"sl2.json", "gl2.json", "tstar_aff1.json", "heisenberg3.json", "abelian1.json"}) {
        const auto r = io::parse_text(run_cli(std::string("validate ") + f), f);
        const io::json emitted = r["result"]["algebra"];
        const LieAlgebra g = io::algebra_from_json(emitted);
        const io::json again = io::algebra_to_json(g, io::algebra_name(emitted));
        c.require(again == emitted && io::digest(again) == r["result"]["digest"].get<std::string>(), std::string(f) + ": round trip");
        c.require(g == io::algebra_from_json(io::read_file(std::string(LIECOH_EXAMPLES_DIR) + "/" + f)), std::string(f) + ": same algebra");
        ++trips;
    }
    return c.done(std::to_string(cases.size()) + " CLI reports byte-identical across two runs and equal to golden files; " +
                  std::to_string(trips) + " AlgebraDocs round-trip with equal digests");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"complex property d^2 = 0", complex_property},
        {"Whitehead lemmas and H^3(sl2)", whitehead},
        {"invariant forms and universality", invariant_forms},
        {"Cartan exactness", cartan_exactness_check},
        {"cocycle closure types I/II/III", cocycle_closure},
        {"Kac-Moody normal form", kac_moody},
        {"projection identity", projection_identity},
        {"coupling theorem", coupling},
        {"Virasoro", virasoro},
        {"Psi identities", psi_identities},
        {"function-valued H^2 of V(T^1)", h2vect},
        {"multiloop and Klein bottle", multiloop},
        {"semidirect exact sequence", semidirect},
        {"Cartan formula on cocycles", cartan_formula},
        {"CLI golden files and round trip", cli_golden}};
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += o.pass ? 0 : 1;
        std::ostringstream line;
        line << (o.pass ? "PASS " : "FAIL ") << "AC" << std::setw(2) << std::setfill('0') << i + 1 << " " << criteria[i].first
             << " [" << std::fixed << std::setprecision(2) << secs << "s]: " << o.detail;
        std::cout << line.str() << "\n";
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failures)) << "/" << criteria.size() << " criteria passed\n";
    return failures;
}
