#ifndef LIECOH_TESTS_ZOO_HPP
#define LIECOH_TESTS_ZOO_HPP

#include "liecoh/ce/cochain.hpp"
#include "liecoh/liealg/lie_algebra.hpp"

#include <random>
#include <string>
#include <vector>

namespace zoo {

struct Case {
    std::string name;
    liecoh::LieAlgebra g;
    liecoh::ModuleAction v;
};

inline liecoh::LieAlgebra heis_graded() {
    liecoh::Matrix d(3, 3);
    d(0, 0) = liecoh::Scalar(1);
    d(1, 1) = liecoh::Scalar(1);
    d(2, 2) = liecoh::Scalar(2);
    return liecoh::semidirect_sum({liecoh::heisenberg3(), liecoh::abelian(1), {d}});
}

inline std::vector<liecoh::LieAlgebra> algebras() {
    using namespace liecoh;
    return {sl(2), gl(2), abelian(2), abelian(3), heisenberg3(), aff1(), cotangent(aff1()), heis_graded(), sl(3)};
}

inline std::vector<Case> cases() {
    using namespace liecoh;
    std::vector<Case> out;
    for (const auto& g : algebras()) {
        std::string base = "dim" + std::to_string(g.dim()) + ":" + g.names()[0];
        out.push_back({base + "/trivial", g, ModuleAction::trivial(g, 1)});
        out.push_back({base + "/adjoint", g, ModuleAction::adjoint(g)});
        if (g.dim() <= 4) out.push_back({base + "/coadjoint", g, ModuleAction::coadjoint(g)});
    }
    return out;
}

inline liecoh::Scalar small(std::mt19937& rng, int range = 3) {
    std::uniform_int_distribution<int> d(-range, range);
    return liecoh::Scalar(d(rng));
}

inline liecoh::Vector vec(std::mt19937& rng, std::size_t n, int range = 3) {
    liecoh::Vector v(n);
    for (auto& x : v) x = small(rng, range);
    return v;
}

inline liecoh::Cochain cochain(std::mt19937& rng, std::size_t p, std::size_t n, std::size_t dv) {
    liecoh::Cochain c(p, n, dv);
    for (auto& x : c.flat()) x = small(rng);
    return c;
}

}  // namespace zoo

#endif
