#include "liecoh/multiloop/multiloop.hpp"

#include "liecoh/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace liecoh {

namespace {

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix int_identity(int r) { return LatticeAction::identity(r).a; }

IntMatrix int_mul(const IntMatrix& a, const IntMatrix& b) {
    const std::size_t r = a.size();
    IntMatrix out(r, std::vector<int>(r, 0));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < r; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    }
    return out;
}

bool is_signed_permutation(const IntMatrix& a) {
    const std::size_t r = a.size();
    for (std::size_t i = 0; i < r; ++i) {
        if (a[i].size() != r) return false;
        int row = 0, col = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (a[i][j] != 0 && a[i][j] != 1 && a[i][j] != -1) return false;
            row += a[i][j] != 0;
            col += a[j][i] != 0;
        }
        if (row != 1 || col != 1) return false;
    }
    return true;
}

DeltaGenerator identity_generator(std::size_t dim, int r) {
    return {Matrix::identity(dim), LatticeAction::identity(r), 1};
}

DeltaGenerator power(const DeltaGenerator& g, int e, std::size_t dim, int r) {
    DeltaGenerator out = identity_generator(dim, r);
    for (int i = 0; i < e; ++i) out = g.compose(out);
    return out;
}

bool in_window(const MultiIndex& a, int n) { return max_abs(a) <= n; }

// Column position of (alpha, slot) inside an orbit block.
std::size_t orbit_position(const std::vector<MultiIndex>& orbit, const MultiIndex& alpha) {
    auto it = std::lower_bound(orbit.begin(), orbit.end(), alpha);
    if (it == orbit.end() || *it != alpha) throw InvalidArgument("multiloop: exponent outside orbit");
    return static_cast<std::size_t>(it - orbit.begin());
}

Vector orbit_vector(const std::vector<MultiIndex>& orbit, std::size_t dim, const GElement& x) {
    Vector v = zero_vector(orbit.size() * dim);
    for (const auto& [b, c] : x.terms()) v[orbit_position(orbit, b.deg) * dim + b.slot] += c;
    return v;
}

GElement orbit_element(const std::vector<MultiIndex>& orbit, std::size_t dim, const Vector& v) {
    GElement x;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_zero()) x.add({orbit[i / dim], i % dim}, v[i]);
    }
    return x;
}

}  // namespace

GElement DeltaGenerator::apply(const GElement& x) const {
    GElement out;
    for (const auto& [b, c] : x.terms()) {
        const MultiIndex beta = lattice.map_index(b.deg);
        const Scalar s = c * lattice.character(b.deg);
        for (std::size_t i = 0; i < sigma.rows(); ++i) {
            const Scalar& m = sigma(i, b.slot);
            if (!m.is_zero()) out.add({beta, i}, s * m);
        }
    }
    return out;
}

DeltaGenerator DeltaGenerator::compose(const DeltaGenerator& inner) const {
    return {sigma * inner.sigma, lattice.compose(inner.lattice), 0};
}

void MultiloopSpec::validate(const LieAlgebra& k) const {
    const std::size_t rr = static_cast<std::size_t>(r);
    if (r < 1 || orders.size() != rr || roots.size() != rr || sigmas.size() != rr) {
        throw InvalidArgument("multiloop spec: need r orders, roots and automorphisms");
    }
    const Matrix id = Matrix::identity(k.dim());
    for (std::size_t i = 0; i < rr; ++i) {
        const std::string tag = "sigma_" + std::to_string(i + 1);
        if (orders[i] < 1) throw InvalidArgument("multiloop spec: order of " + tag + " must be positive");
        if (sigmas[i].rows() != k.dim() || sigmas[i].cols() != k.dim()) {
            throw DimensionMismatch("multiloop spec: " + tag + " has the wrong size");
        }
        if (!is_automorphism(k, sigmas[i])) throw NotAutomorphism("multiloop spec: " + tag + " is not an automorphism");
        if (sigmas[i].pow(static_cast<unsigned long>(orders[i])) != id) {
            throw OrderViolation("multiloop spec: " + tag + "^" + std::to_string(orders[i]) + " != id");
        }
        if (!roots[i].pow(orders[i]).is_one()) {
            throw OrderViolation("multiloop spec: zeta_" + std::to_string(i + 1) + "^" + std::to_string(orders[i]) +
                                 " != 1");
        }
        if (require_primitive) {
            for (int d = 1; d < orders[i]; ++d) {
                if (orders[i] % d == 0 && roots[i].pow(d).is_one()) {
                    throw InvalidArgument("multiloop spec: zeta_" + std::to_string(i + 1) + " is not primitive");
                }
            }
        }
    }
    for (std::size_t i = 0; i < rr; ++i) {
        for (std::size_t j = i + 1; j < rr; ++j) {
            if (sigmas[i] * sigmas[j] != sigmas[j] * sigmas[i]) {
                throw NonCommutingAutomorphisms("multiloop spec: sigma_" + std::to_string(i + 1) + " and sigma_" +
                                                std::to_string(j + 1) + " do not commute");
            }
        }
    }
}

std::vector<DeltaGenerator> MultiloopSpec::generators() const {
    std::vector<DeltaGenerator> out;
    for (std::size_t i = 0; i < static_cast<std::size_t>(r); ++i) {
        LatticeAction l = LatticeAction::identity(r);
        l.chi[i] = roots[i];
        out.push_back({sigmas[i], l, orders[i]});
    }
    return out;
}

FixedPointAlgebra::FixedPointAlgebra(std::string name, LieAlgebra k, int r, std::vector<DeltaGenerator> gens,
                                     int window)
    : name_(std::move(name)), k_(std::move(k)), r_(r), n_(window), gens_(std::move(gens)) {
    if (r < 1) throw InvalidArgument("fixed-point algebra: r must be positive");
    if (window < 0) throw InvalidArgument("fixed-point algebra: negative window");
    const std::size_t dim = k_.dim();
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        const auto& g = gens_[i];
        const std::string tag = "generator " + std::to_string(i + 1);
        if (g.lattice.vars() != r || g.sigma.rows() != dim || g.sigma.cols() != dim) {
            throw DimensionMismatch("fixed-point algebra: " + tag + " has the wrong size");
        }
        if (!is_signed_permutation(g.lattice.a)) {
            throw InvalidArgument("fixed-point algebra: lattice part of " + tag + " is not a signed permutation");
        }
        if (!is_automorphism(k_, g.sigma)) throw NotAutomorphism("fixed-point algebra: " + tag);
        if (g.order > 0 && !(power(g, g.order, dim, r) == identity_generator(dim, r))) {
            throw OrderViolation("fixed-point algebra: " + tag + " does not have order dividing " +
                                 std::to_string(g.order));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (!(g.compose(gens_[j]) == gens_[j].compose(g))) {
                throw NonCommutingAutomorphisms("fixed-point algebra: generators " + std::to_string(j + 1) + " and " +
                                                std::to_string(i + 1) + " do not commute");
            }
        }
    }
    // group generated by the lattice parts
    std::set<IntMatrix> seen{int_identity(r)};
    std::vector<IntMatrix> frontier{int_identity(r)};
    while (!frontier.empty()) {
        std::vector<IntMatrix> next;
        for (const auto& m : frontier) {
            for (const auto& g : gens_) {
                IntMatrix p = int_mul(g.lattice.a, m);
                if (seen.insert(p).second) next.push_back(p);
            }
        }
        frontier = std::move(next);
    }
    lattice_group_.assign(seen.begin(), seen.end());
    ambient_ = mapping_algebra(k_, r);
    ambient_.name = name_;

    for (const auto& alpha : box(r, n_)) {
        MultiIndex rep = orbit_rep(alpha);
        if (rep != alpha) continue;
        OrbitComponent c;
        c.rep = rep;
        c.orbit = orbit_of(rep);
        c.basis = fixed_basis(rep);
        index_[rep] = comps_.size();
        comps_.push_back(std::move(c));
    }
}

std::vector<MultiIndex> FixedPointAlgebra::orbit_of(const MultiIndex& alpha) const {
    std::set<MultiIndex> s;
    for (const auto& m : lattice_group_) {
        MultiIndex b(alpha.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) b[i] += m[i][j] * alpha[j];
        }
        s.insert(b);
    }
    return {s.begin(), s.end()};
}

MultiIndex FixedPointAlgebra::orbit_rep(const MultiIndex& alpha) const { return orbit_of(alpha).back(); }

const OrbitComponent& FixedPointAlgebra::component(const MultiIndex& alpha) const {
    auto it = index_.find(orbit_rep(alpha));
    if (it == index_.end()) throw InvalidArgument("fixed-point algebra: exponent " + index_to_string(alpha) +
                                                  " outside the window");
    return comps_[it->second];
}

std::vector<GElement> FixedPointAlgebra::fixed_basis(const MultiIndex& alpha) const {
    const auto orbit = orbit_of(alpha);
    const std::size_t dim = k_.dim(), n = orbit.size() * dim;
    std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
    std::size_t row0 = 0;
    for (const auto& g : gens_) {
        for (std::size_t col = 0; col < n; ++col) {
            const GElement e = GElement::basis({orbit[col / dim], col % dim});
            Vector v = orbit_vector(orbit, dim, g.apply(e));
            v[col] -= Scalar(1);
            for (std::size_t i = 0; i < n; ++i) {
                if (!v[i].is_zero()) acc[{row0 + i, col}] += v[i];
            }
        }
        row0 += n;
    }
    std::vector<Triplet> trips;
    for (const auto& [rc, v] : acc) {
        if (!v.is_zero()) trips.push_back({rc.first, rc.second, v});
    }
    std::vector<GElement> out;
    for (const auto& v : kernel_basis(SparseMatrix::from_triplets(std::max<std::size_t>(row0, 1), n, trips))) {
        out.push_back(orbit_element(orbit, dim, v));
    }
    return out;
}

bool FixedPointAlgebra::is_fixed(const GElement& x) const {
    return std::all_of(gens_.begin(), gens_.end(), [&](const DeltaGenerator& g) { return g.apply(x) == x; });
}

std::map<MultiIndex, GElement> FixedPointAlgebra::split(const GElement& x) const {
    std::map<MultiIndex, GElement> out;
    for (const auto& [b, c] : x.terms()) out[orbit_rep(b.deg)].add(b, c);
    return out;
}

Vector FixedPointAlgebra::coordinates(const MultiIndex& rep, const GElement& x) const {
    const auto orbit = orbit_of(rep);
    const std::size_t dim = k_.dim();
    auto it = index_.find(orbit_rep(rep));
    const std::vector<GElement> basis = it != index_.end() ? comps_[it->second].basis : fixed_basis(rep);
    std::vector<Vector> cols;
    for (const auto& b : basis) cols.push_back(orbit_vector(orbit, dim, b));
    auto c = coordinates_in(cols, orbit_vector(orbit, dim, x));
    if (!c) throw InvalidArgument("fixed-point algebra: element is not fixed in orbit " + index_to_string(rep));
    return *c;
}

namespace {

bool bracket_in_window(const FixedPointAlgebra& a, const OrbitComponent& p, const OrbitComponent& q) {
    for (const auto& x : p.orbit) {
        for (const auto& y : q.orbit) {
            if (!in_window(x + y, a.window())) return false;
        }
    }
    return true;
}

}  // namespace

bool FixedPointAlgebra::closed_on_window() const {
    for (const auto& p : comps_) {
        for (const auto& q : comps_) {
            if (!bracket_in_window(*this, p, q)) continue;
            for (const auto& x : p.basis) {
                for (const auto& y : q.basis) {
                    if (!is_fixed(bracket(x, y))) return false;
                }
            }
        }
    }
    return true;
}

std::size_t FixedPointAlgebra::fixed_ring_dim(const MultiIndex& alpha) const {
    const auto orbit = orbit_of(alpha);
    const std::size_t n = orbit.size();
    std::vector<Triplet> trips;
    std::size_t row0 = 0;
    for (const auto& g : gens_) {
        std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
        for (std::size_t col = 0; col < n; ++col) {
            acc[{row0 + orbit_position(orbit, g.lattice.map_index(orbit[col])), col}] +=
                g.lattice.character(orbit[col]);
            acc[{row0 + col, col}] -= Scalar(1);
        }
        for (const auto& [rc, v] : acc) {
            if (!v.is_zero()) trips.push_back({rc.first, rc.second, v});
        }
        row0 += n;
    }
    return kernel_basis(SparseMatrix::from_triplets(std::max<std::size_t>(row0, 1), n, trips)).size();
}

std::string FixedPointAlgebra::table_digest() const {
    std::ostringstream os;
    for (const auto& c : comps_) os << index_to_string(c.rep) << ":" << c.basis.size() << ";";
    os << "\n";
    for (const auto& p : comps_) {
        for (const auto& q : comps_) {
            if (!bracket_in_window(*this, p, q)) continue;
            for (std::size_t i = 0; i < p.basis.size(); ++i) {
                for (std::size_t j = 0; j < q.basis.size(); ++j) {
                    const GElement br = bracket(p.basis[i], q.basis[j]);
                    if (br.is_zero()) continue;
                    os << index_to_string(p.rep) << "#" << i << "," << index_to_string(q.rep) << "#" << j << "->";
                    for (const auto& [rep, part] : split(br)) os << index_to_string(rep) << to_string(coordinates(rep, part));
                    os << "\n";
                }
            }
        }
    }
    return os.str();
}

std::string GradedBasisReport::to_string(const FixedPointAlgebra& a) const {
    std::ostringstream os;
    os << a.name() << " window " << window << (closed ? " (closed)" : " (NOT closed)") << "\n";
    for (const auto& c : a.components()) {
        os << "  " << index_to_string(c.rep) << " dim " << c.basis.size();
        for (const auto& b : c.basis) os << "  " << b.to_string(a.base().names());
        os << "\n";
    }
    return os.str();
}

FixedPointAlgebra multiloop_build(const LieAlgebra& k, const MultiloopSpec& spec, int window) {
    spec.validate(k);
    return FixedPointAlgebra("multiloop", k, spec.r, spec.generators(), window);
}

GradedBasisReport basis_report(const FixedPointAlgebra& a) {
    GradedBasisReport rep;
    rep.window = a.window();
    for (const auto& c : a.components()) rep.dims[c.rep] = c.basis.size();
    rep.closed = a.closed_on_window();
    return rep;
}

FixedPointAlgebra iterated_loop(const LieAlgebra& k, const std::vector<LoopStep>& steps, int window) {
    const int r = static_cast<int>(steps.size());
    if (r < 1) throw InvalidArgument("iterated_loop: no steps");
    const std::size_t dim = k.dim();
    std::vector<DeltaGenerator> gens;
    for (std::size_t j = 0; j < steps.size(); ++j) {
        const LoopStep& s = steps[j];
        const std::string tag = "step " + std::to_string(j + 1);
        if (s.order < 1) throw InvalidArgument("iterated_loop: " + tag + " needs a positive order");
        if (s.sigma.rows() != dim || s.sigma.cols() != dim) throw DimensionMismatch("iterated_loop: " + tag);
        DeltaGenerator g{s.sigma, LatticeAction::identity(r), s.order};
        if (!s.lattice.empty()) {
            if (s.lattice.size() != j) throw DimensionMismatch("iterated_loop: " + tag + " lattice size");
            for (std::size_t a = 0; a < j; ++a) {
                if (s.lattice[a].size() != j) throw DimensionMismatch("iterated_loop: " + tag + " lattice size");
                for (std::size_t b = 0; b < j; ++b) g.lattice.a[a][b] = s.lattice[a][b];
            }
        }
        g.lattice.chi[j] = s.root;
        if (!s.root.pow(s.order).is_one()) throw OrderViolation("iterated_loop: " + tag + " root order");
        if (!is_automorphism(k, s.sigma)) throw NotAutomorphism("iterated_loop: " + tag + " sigma");
        if (!is_signed_permutation(g.lattice.a)) {
            throw InvalidArgument("iterated_loop: " + tag + " lattice part is not a signed permutation");
        }
        if (!(power(g, s.order, dim, r) == identity_generator(dim, r))) {
            throw OrderViolation("iterated_loop: " + tag + " does not have order " + std::to_string(s.order));
        }
        for (std::size_t i = 0; i < j; ++i) {
            if (!(g.compose(gens[i]) == gens[i].compose(g))) {
                throw NotAutomorphism("iterated_loop: " + tag + " does not preserve the previous algebra");
            }
        }
        gens.push_back(g);
    }
    return FixedPointAlgebra("iterated_loop", k, r, gens, window);
}

Matrix minus_transpose(std::size_t n) {
    const MatrixRealization m = sl_realization(n);
    const std::size_t d = m.basis.size();
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < d; ++i) cols.push_back(m.coordinates(Scalar(-1) * m.basis[i].transpose()));
    return Matrix::from_columns(cols, d);
}

FixedPointAlgebra klein_bottle_algebra(std::size_t n, int window) {
    if (n < 2) throw InvalidArgument("klein_bottle_algebra: n must be at least 2");
    const LieAlgebra k = sl(n);
    DeltaGenerator tau1{minus_transpose(n), LatticeAction::identity(2), 2};
    tau1.lattice.chi[0] = Scalar(-1);
    DeltaGenerator tau2{Matrix::identity(k.dim()), LatticeAction::identity(2), 2};
    tau2.lattice.a[0][0] = -1;
    tau2.lattice.chi[1] = Scalar(-1);
    return FixedPointAlgebra("klein_bottle", k, 2, {tau1, tau2}, window);
}

FixedPointAlgebra klein_bottle_iterated(std::size_t n, int window) {
    if (n < 2) throw InvalidArgument("klein_bottle_iterated: n must be at least 2");
    const LieAlgebra k = sl(n);
    LoopStep s1{minus_transpose(n), {}, 2, Scalar(-1)};
    LoopStep s2{Matrix::identity(k.dim()), {{-1}}, 2, Scalar(-1)};
    return iterated_loop(k, {s1, s2}, window);
}

CentroidReport graded_centroid(const FixedPointAlgebra& a, int shift_window) {
    const int n = a.window();
    if (shift_window < 0 || 2 * shift_window > n) {
        throw WindowTooSmall("graded_centroid: shift window " + std::to_string(shift_window) + " needs window >= " +
                             std::to_string(2 * shift_window));
    }
    const auto& comps = a.components();

    // constrained pairs of components
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::vector<bool> reached(comps.size(), false);
    for (std::size_t p = 0; p < comps.size(); ++p) {
        for (std::size_t q = 0; q < comps.size(); ++q) {
            if (comps[p].basis.empty() || comps[q].basis.empty()) continue;
            if (!bracket_in_window(a, comps[p], comps[q])) continue;
            pairs.emplace_back(p, q);
            reached[p] = true;
        }
    }
    for (std::size_t p = 0; p < comps.size(); ++p) {
        if (!comps[p].basis.empty() && !reached[p]) {
            throw WindowTooSmall("graded_centroid: orbit " + index_to_string(comps[p].rep) + " is unconstrained");
        }
    }

    CentroidReport rep;
    rep.window = n;
    rep.shift_window = shift_window;
    rep.matches_fixed_ring = true;
    std::set<MultiIndex> shift_reps;
    for (const auto& d : box(a.vars(), shift_window)) shift_reps.insert(a.orbit_rep(d));

    for (const auto& shift : shift_reps) {
        const auto shift_orbit = a.orbit_of(shift);
        // unknown blocks phi_O: L_O -> sum of L_P, P meeting O + D
        struct Block {
            std::size_t offset = 0;
            std::vector<GElement> targets;
        };
        std::vector<Block> blocks(comps.size());
        std::size_t unknowns = 0;
        for (std::size_t c = 0; c < comps.size(); ++c) {
            std::set<MultiIndex> reps;
            for (const auto& x : comps[c].orbit) {
                for (const auto& d : shift_orbit) reps.insert(a.orbit_rep(x + d));
            }
            blocks[c].offset = unknowns;
            for (const auto& r : reps) {
                for (auto& t : a.fixed_basis(r)) blocks[c].targets.push_back(std::move(t));
            }
            unknowns += blocks[c].targets.size() * comps[c].basis.size();
        }
        auto var = [&](std::size_t c, std::size_t l, std::size_t k) {
            return blocks[c].offset + l * comps[c].basis.size() + k;
        };
        std::map<GBasis, std::size_t> row_of;
        std::map<std::pair<std::size_t, std::size_t>, Scalar> acc;
        std::size_t rows = 0;
        // rows are ambient coordinates of each pair equation
        auto add_eq = [&](const GElement& e, std::size_t v, const Scalar& s) {
            for (const auto& [b, c] : e.terms()) {
                auto [it, fresh] = row_of.try_emplace(b, 0);
                if (fresh) it->second = rows++;
                acc[{it->second, v}] += s * c;
            }
        };
        for (const auto& [p, q] : pairs) {
            for (std::size_t i = 0; i < comps[p].basis.size(); ++i) {
                for (std::size_t j = 0; j < comps[q].basis.size(); ++j) {
                    row_of.clear();
                    const GElement& x = comps[p].basis[i];
                    const GElement& y = comps[q].basis[j];
                    // phi[x,y]
                    const GElement br = a.bracket(x, y);
                    for (const auto& [orep, part] : a.split(br)) {
                        const std::size_t c3 = &a.component(orep) - comps.data();
                        const Vector co = a.coordinates(orep, part);
                        for (std::size_t k = 0; k < co.size(); ++k) {
                            if (co[k].is_zero()) continue;
                            for (std::size_t l = 0; l < blocks[c3].targets.size(); ++l) {
                                add_eq(blocks[c3].targets[l], var(c3, l, k), co[k]);
                            }
                        }
                    }
                    // - [phi x, y]
                    for (std::size_t l = 0; l < blocks[p].targets.size(); ++l) {
                        add_eq(a.bracket(blocks[p].targets[l], y), var(p, l, i), Scalar(-1));
                    }
                }
            }
        }
        std::vector<Triplet> trips;
        for (const auto& [rc, v] : acc) {
            if (!v.is_zero()) trips.push_back({rc.first, rc.second, v});
        }
        const auto kern = kernel_basis(SparseMatrix::from_triplets(std::max<std::size_t>(rows, 1), unknowns, trips));

        CentroidDegree cd;
        cd.rep = shift;
        cd.orbit_size = shift_orbit.size();
        cd.dim = kern.size();
        cd.fixed_ring_dim = a.fixed_ring_dim(shift);
        cd.full_ring_dim = shift_orbit.size();
        if (cd.dim != cd.fixed_ring_dim) rep.matches_fixed_ring = false;
        if (cd.dim != cd.full_ring_dim && !rep.full_ring_witness) rep.full_ring_witness = shift;
        rep.degrees.push_back(cd);

        if (is_zero_index(shift)) {
            std::vector<std::size_t> start(comps.size() + 1, 0);
            for (std::size_t c = 0; c < comps.size(); ++c) start[c + 1] = start[c] + comps[c].basis.size();
            for (const auto& v : kern) {
                Matrix m(start.back(), start.back());
                for (std::size_t c = 0; c < comps.size(); ++c) {
                    // degree-0 targets are the basis of the same orbit
                    for (std::size_t l = 0; l < blocks[c].targets.size(); ++l) {
                        for (std::size_t k = 0; k < comps[c].basis.size(); ++k) m(start[c] + l, start[c] + k) = v[var(c, l, k)];
                    }
                }
                rep.degree_zero_basis.push_back(m);
            }
        }
    }
    return rep;
}

GradedCochain gauge_type1_on_multiloop(const FixedPointAlgebra& a, const BilinearFormSym& kappa) {
    for (std::size_t i = 0; i < a.generators().size(); ++i) {
        const Matrix& s = a.generators()[i].sigma;
        for (std::size_t c = 0; c < kappa.module_dim(); ++c) {
            const Matrix g = kappa.gram(c);
            if (s.transpose() * g * s != g) {
                throw NotEquivariant("gauge_type1_on_multiloop: kappa is not invariant under generator " +
                                     std::to_string(i + 1));
            }
        }
    }
    return type1_cocycle(a.base(), a.vars(), kappa);
}

bool is_delta_fixed(const FixedPointAlgebra& a, const ReducedOneForm& w) {
    return std::all_of(a.generators().begin(), a.generators().end(),
                       [&](const DeltaGenerator& g) { return pullback(w, g.lattice) == w; });
}

}  // namespace liecoh
