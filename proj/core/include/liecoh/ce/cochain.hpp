#ifndef LIECOH_CE_COCHAIN_HPP
#define LIECOH_CE_COCHAIN_HPP

#include "liecoh/exactalg/dense.hpp"

#include <cstddef>
#include <vector>

namespace liecoh {

using Tuple = std::vector<std::size_t>;

std::size_t binomial(std::size_t n, std::size_t k);
/// Strictly increasing p-tuples from {0, ..., n-1} in lexicographic order.
const std::vector<Tuple>& subsets(std::size_t n, std::size_t p);
/// Position of a strictly increasing tuple in subsets(n, p).
std::size_t subset_rank(std::size_t n, const Tuple& s);
/// Sorts idx in place and returns the permutation sign, or 0 on repeats.
int sort_with_sign(Tuple& idx);

/// Alternating p-linear map g^p -> V, stored on strictly increasing basis
/// tuples. Degree-0 cochains are module vectors.
class Cochain {
public:
    Cochain() = default;
    Cochain(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim);
    static Cochain from_flat(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim, Vector data);

    std::size_t degree() const { return p_; }
    std::size_t algebra_dim() const { return n_; }
    std::size_t module_dim() const { return dv_; }
    std::size_t tuple_count() const { return binomial(n_, p_); }

    /// Coordinates: tuple rank * module_dim + module index.
    const Vector& flat() const { return data_; }
    Vector& flat() { return data_; }

    Vector value(const Tuple& sorted) const;
    void set(const Tuple& sorted, const Vector& v);
    /// Value on arbitrary basis indices, using alternation.
    Vector on_basis(Tuple idx) const;
    /// Multilinear evaluation on p elements of g.
    Vector evaluate(const std::vector<Vector>& xs) const;

    bool is_zero() const { return liecoh::is_zero(data_); }

    Cochain& operator+=(const Cochain& o);
    Cochain& operator-=(const Cochain& o);
    friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
    friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
    friend Cochain operator*(const Scalar& s, Cochain a);
    friend bool operator==(const Cochain& a, const Cochain& b) {
        return a.p_ == b.p_ && a.n_ == b.n_ && a.dv_ == b.dv_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Cochain& a, const Cochain& b) { return !(a == b); }

private:
    void check_compatible(const Cochain& o) const;

    std::size_t p_ = 0;
    std::size_t n_ = 0;
    std::size_t dv_ = 0;
    Vector data_;
};

}  // namespace liecoh

#endif
