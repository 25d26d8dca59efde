#include "liecoh/exactalg/laurent.hpp"

#include "liecoh/errors.hpp"

#include <cstdlib>
#include <sstream>

namespace liecoh {

MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw DimensionMismatch("multi-index length mismatch");
    MultiIndex c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

MultiIndex operator-(const MultiIndex& a, const MultiIndex& b) {
    if (a.size() != b.size()) throw DimensionMismatch("multi-index length mismatch");
    MultiIndex c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}

MultiIndex operator-(const MultiIndex& a) {
    MultiIndex c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = -a[i];
    return c;
}

bool is_zero_index(const MultiIndex& a) {
    for (int x : a) {
        if (x != 0) return false;
    }
    return true;
}

int max_abs(const MultiIndex& a) {
    int m = 0;
    for (int x : a) m = std::max(m, std::abs(x));
    return m;
}

std::string index_to_string(const MultiIndex& a) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) os << ',';
        os << a[i];
    }
    os << ')';
    return os.str();
}

std::vector<MultiIndex> box(int r, int n) {
    std::vector<MultiIndex> out;
    if (r < 0 || n < 0) throw InvalidArgument("box: negative size");
    MultiIndex cur(static_cast<std::size_t>(r), -n);
    while (true) {
        out.push_back(cur);
        int k = r - 1;
        while (k >= 0 && cur[static_cast<std::size_t>(k)] == n) {
            cur[static_cast<std::size_t>(k)] = -n;
            --k;
        }
        if (k < 0) break;
        ++cur[static_cast<std::size_t>(k)];
    }
    return out;
}

LaurentPoly LaurentPoly::constant(int vars, const Scalar& c) {
    LaurentPoly p(vars);
    p.add_term(MultiIndex(static_cast<std::size_t>(vars), 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(const MultiIndex& alpha, const Scalar& c) {
    LaurentPoly p(static_cast<int>(alpha.size()));
    p.add_term(alpha, c);
    return p;
}

LaurentPoly LaurentPoly::variable(int vars, int axis) {
    if (axis < 1 || axis > vars) throw InvalidArgument("variable axis out of range");
    MultiIndex a(static_cast<std::size_t>(vars), 0);
    a[static_cast<std::size_t>(axis - 1)] = 1;
    return monomial(a);
}

void LaurentPoly::check(const MultiIndex& alpha) const {
    if (alpha.size() != static_cast<std::size_t>(vars_)) throw DimensionMismatch("exponent length differs from variable count");
}

Scalar LaurentPoly::coefficient(const MultiIndex& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar LaurentPoly::constant_term() const { return coefficient(MultiIndex(static_cast<std::size_t>(vars_), 0)); }

void LaurentPoly::add_term(const MultiIndex& alpha, const Scalar& c) {
    check(alpha);
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& kv : r.terms_) kv.second = -kv.second;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.vars_ != vars_) throw DimensionMismatch("Laurent polynomials in different rings");
    for (const auto& [a, c] : o.terms_) add_term(a, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.vars_ != vars_) throw DimensionMismatch("Laurent polynomials in different rings");
    for (const auto& [a, c] : o.terms_) add_term(a, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ != b.vars_) throw DimensionMismatch("Laurent polynomials in different rings");
    LaurentPoly r(a.vars_);
    for (const auto& [x, c] : a.terms_) {
        for (const auto& [y, d] : b.terms_) r.add_term(x + y, c * d);
    }
    return r;
}

Scalar LaurentPoly::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != static_cast<std::size_t>(vars_)) throw DimensionMismatch("evaluation point dimension");
    Scalar s;
    for (const auto& [a, c] : terms_) {
        Scalar m = c;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != 0) m *= point[i].pow(a[i]);
        }
        s += m;
    }
    return s;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [a, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << '(' << c << ')';
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != 0) os << "*t" << (i + 1) << '^' << a[i];
        }
    }
    return os.str();
}

LaurentPoly laurent_partial(const LaurentPoly& f, int axis) {
    if (axis < 1 || axis > f.vars()) throw InvalidArgument("laurent_partial: axis out of range");
    LaurentPoly r(f.vars());
    for (const auto& [a, c] : f.terms()) {
        int e = a[static_cast<std::size_t>(axis - 1)];
        if (e != 0) r.add_term(a, Scalar(static_cast<long>(e)) * c);
    }
    return r;
}

}  // namespace liecoh
