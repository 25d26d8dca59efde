#include "liecoh/ce/cochain.hpp"

#include "liecoh/errors.hpp"

#include <map>
#include <mutex>

namespace liecoh {

std::size_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

const std::vector<Tuple>& subsets(std::size_t n, std::size_t p) {
    static std::mutex mutex;
    static std::map<std::pair<std::size_t, std::size_t>, std::vector<Tuple>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.try_emplace({n, p});
    if (!inserted) return it->second;
    std::vector<Tuple>& out = it->second;
    if (p > n) return out;
    Tuple cur(p);
    for (std::size_t i = 0; i < p; ++i) cur[i] = i;
    while (true) {
        out.push_back(cur);
        std::size_t k = p;
        while (k > 0 && cur[k - 1] == n - p + (k - 1)) --k;
        if (k == 0) break;
        ++cur[k - 1];
        for (std::size_t i = k; i < p; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

std::size_t subset_rank(std::size_t n, const Tuple& s) {
    const std::size_t p = s.size();
    std::size_t rank = 0;
    std::size_t prev = 0;
    for (std::size_t i = 0; i < p; ++i) {
        if (s[i] >= n || (i > 0 && s[i] <= s[i - 1])) throw InvalidArgument("subset_rank: tuple not increasing or out of range");
        for (std::size_t j = (i == 0 ? 0 : prev + 1); j < s[i]; ++j) rank += binomial(n - 1 - j, p - 1 - i);
        prev = s[i];
    }
    return rank;
}

int sort_with_sign(Tuple& idx) {
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i) {
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    }
    for (std::size_t i = 1; i < idx.size(); ++i) {
        if (idx[i - 1] == idx[i]) return 0;
    }
    return sign;
}

Cochain::Cochain(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim)
    : p_(degree), n_(algebra_dim), dv_(module_dim), data_(binomial(algebra_dim, degree) * module_dim) {}

Cochain Cochain::from_flat(std::size_t degree, std::size_t algebra_dim, std::size_t module_dim, Vector data) {
    Cochain c(degree, algebra_dim, module_dim);
    if (data.size() != c.data_.size()) throw DimensionMismatch("cochain data length");
    c.data_ = std::move(data);
    return c;
}

Vector Cochain::value(const Tuple& sorted) const {
    if (sorted.size() != p_) throw DimensionMismatch("cochain value: tuple length");
    const std::size_t base = subset_rank(n_, sorted) * dv_;
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(base),
                  data_.begin() + static_cast<std::ptrdiff_t>(base + dv_));
}

void Cochain::set(const Tuple& sorted, const Vector& v) {
    if (sorted.size() != p_ || v.size() != dv_) throw DimensionMismatch("cochain set: size");
    const std::size_t base = subset_rank(n_, sorted) * dv_;
    for (std::size_t a = 0; a < dv_; ++a) data_[base + a] = v[a];
}

Vector Cochain::on_basis(Tuple idx) const {
    int s = sort_with_sign(idx);
    if (s == 0) return Vector(dv_);
    Vector v = value(idx);
    if (s < 0) v = -v;
    return v;
}

Vector Cochain::evaluate(const std::vector<Vector>& xs) const {
    if (xs.size() != p_) throw DimensionMismatch("cochain evaluate: argument count");
    for (const auto& x : xs) {
        if (x.size() != n_) throw DimensionMismatch("cochain evaluate: element length");
    }
    Vector out(dv_);
    Tuple idx(p_);
    // depth-first over nonzero coordinates
    auto rec = [&](auto&& self, std::size_t k, const Scalar& coef) -> void {
        if (k == p_) {
            add_scaled(out, coef, on_basis(idx));
            return;
        }
        for (std::size_t i = 0; i < n_; ++i) {
            if (xs[k][i].is_zero()) continue;
            idx[k] = i;
            self(self, k + 1, coef * xs[k][i]);
        }
    };
    rec(rec, 0, Scalar(1));
    return out;
}

void Cochain::check_compatible(const Cochain& o) const {
    if (o.p_ != p_ || o.n_ != n_ || o.dv_ != dv_) throw DimensionMismatch("incompatible cochains");
}

Cochain& Cochain::operator+=(const Cochain& o) {
    check_compatible(o);
    add_to(data_, o.data_);
    return *this;
}

Cochain& Cochain::operator-=(const Cochain& o) {
    check_compatible(o);
    add_scaled(data_, Scalar(-1), o.data_);
    return *this;
}

Cochain operator*(const Scalar& s, Cochain a) {
    for (auto& x : a.data_) x *= s;
    return a;
}

}  // namespace liecoh
