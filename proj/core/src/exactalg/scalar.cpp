#include "liecoh/exactalg/scalar.hpp"

#include "liecoh/errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>

namespace liecoh {

namespace {

struct CycloData {
    std::uint32_t m = 1;
    std::uint32_t phi = 1;
    std::vector<long> poly;                       // Phi_m, monic, degree phi
    std::vector<std::vector<mpq_class>> powers;   // x^k mod Phi_m, k in [0, m)
};

std::vector<long> poly_divide_exact(std::vector<long> num, const std::vector<long>& den) {
    // den is monic; num divisible by den.
    std::size_t dn = den.size() - 1;
    std::vector<long> quot(num.size() - dn, 0);
    for (std::size_t k = num.size(); k-- > dn;) {
        long c = num[k];
        quot[k - dn] = c;
        if (c != 0) {
            for (std::size_t i = 0; i <= dn; ++i) num[k - dn + i] -= c * den[i];
        }
    }
    return quot;
}

std::vector<long> compute_cyclotomic(std::uint32_t m) {
    std::vector<long> num(m + 1, 0);
    num[0] = -1;
    num[m] = 1;
    for (std::uint32_t d = 1; d < m; ++d) {
        if (m % d == 0) num = poly_divide_exact(num, cyclotomic_polynomial(d));
    }
    return num;
}

const CycloData& cyclo(std::uint32_t m) {
    static std::mutex mutex;
    static std::map<std::uint32_t, std::unique_ptr<CycloData>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return *it->second;
    }
    auto data = std::make_unique<CycloData>();
    data->m = m;
    data->poly = cyclotomic_polynomial(m);
    data->phi = static_cast<std::uint32_t>(data->poly.size() - 1);
    const std::uint32_t phi = data->phi;
    std::vector<mpq_class> cur(phi, 0);
    cur[0] = 1;
    data->powers.reserve(m);
    for (std::uint32_t k = 0; k < m; ++k) {
        data->powers.push_back(cur);
        // multiply by x
        mpq_class top = cur[phi - 1];
        for (std::uint32_t i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (top != 0) {
            for (std::uint32_t i = 0; i < phi; ++i) cur[i] -= top * data->poly[i];
        }
    }
    std::lock_guard<std::mutex> lock(mutex);
    auto [it, inserted] = cache.emplace(m, std::move(data));
    return *it->second;
}

std::uint32_t lcm32(std::uint32_t a, std::uint32_t b) { return a / std::gcd(a, b) * b; }

/// Embeds coefficients of an element of Q(zeta_from) into Q(zeta_to).
std::vector<mpq_class> embed(const std::vector<mpq_class>& c, std::uint32_t from, std::uint32_t to) {
    const CycloData& dst = cyclo(to);
    std::vector<mpq_class> out(dst.phi, 0);
    if (c.empty()) return out;
    const std::uint32_t step = to / from;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        const auto& p = dst.powers[(i * step) % to];
        for (std::uint32_t j = 0; j < dst.phi; ++j) {
            if (p[j] != 0) out[j] += c[i] * p[j];
        }
    }
    return out;
}

std::vector<mpq_class> reduce_poly(const std::vector<mpq_class>& raw, const CycloData& cd) {
    std::vector<mpq_class> out(cd.phi, 0);
    for (std::size_t k = 0; k < raw.size(); ++k) {
        if (raw[k] == 0) continue;
        if (k < cd.phi) {
            out[k] += raw[k];
            continue;
        }
        const auto& p = cd.powers[k % cd.m];
        for (std::uint32_t j = 0; j < cd.phi; ++j) {
            if (p[j] != 0) out[j] += raw[k] * p[j];
        }
    }
    return out;
}

}  // namespace

std::uint32_t euler_phi(std::uint32_t m) {
    if (m == 0) throw InvalidArgument("euler_phi: order must be positive");
    std::uint32_t result = m;
    std::uint32_t n = m;
    for (std::uint32_t p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const std::vector<long>& cyclotomic_polynomial(std::uint32_t m) {
    if (m == 0) throw InvalidArgument("cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<std::uint32_t, std::vector<long>> cache;
    {
        std::lock_guard<std::mutex> lock(mutex);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    std::vector<long> poly = (m == 1) ? std::vector<long>{-1, 1} : compute_cyclotomic(m);
    std::lock_guard<std::mutex> lock(mutex);
    return cache.emplace(m, std::move(poly)).first->second;
}

Scalar::Scalar(long value) {
    if (value != 0) coeffs_.emplace_back(value);
}

Scalar::Scalar(mpq_class value) {
    value.canonicalize();
    if (value != 0) coeffs_.push_back(std::move(value));
}

Scalar Scalar::rational(long num, long den) {
    if (den == 0) throw InvalidArgument("rational with zero denominator");
    return Scalar(mpq_class(num, den));
}

Scalar Scalar::parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidArgument("empty scalar string");
    std::string body = text;
    if (body[0] == '+') body = body.substr(1);
    auto slash = body.find('/');
    auto digits_ok = [](const std::string& s, bool allow_sign) {
        if (s.empty()) return false;
        std::size_t start = 0;
        if (allow_sign && s[0] == '-') start = 1;
        if (start == s.size()) return false;
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return false;
        }
        return true;
    };
    std::string num = body.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : body.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) {
        throw InvalidArgument("malformed rational '" + text + "'");
    }
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw InvalidArgument("zero denominator in '" + text + "'");
    return Scalar(mpq_class(n, d));
}

Scalar Scalar::zeta(std::uint32_t m, long k) {
    if (m == 0) throw InvalidArgument("zeta: order must be positive");
    long e = k % static_cast<long>(m);
    if (e < 0) e += m;
    const CycloData& cd = cyclo(m);
    Scalar s;
    s.order_ = m;
    s.coeffs_ = cd.powers[static_cast<std::size_t>(e)];
    s.normalize();
    return s;
}

Scalar Scalar::from_coefficients(std::uint32_t m, const std::vector<mpq_class>& coeffs) {
    if (m == 0) throw InvalidArgument("cyclotomic order must be positive");
    const CycloData& cd = cyclo(m);
    Scalar s;
    s.order_ = m;
    s.coeffs_ = reduce_poly(coeffs, cd);
    s.normalize();
    return s;
}

bool Scalar::is_one() const { return order_ == 1 && coeffs_.size() == 1 && coeffs_[0] == 1; }

mpq_class Scalar::rational_value() const {
    if (!is_rational()) throw InvalidArgument("scalar " + to_string() + " is not rational");
    return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
}

std::vector<mpq_class> Scalar::coefficients_in(std::uint32_t m) const {
    if (m % order_ != 0) throw InvalidArgument("field order mismatch");
    if (coeffs_.empty()) return std::vector<mpq_class>(euler_phi(m), 0);
    if (m == order_) return coeffs_;
    return embed(coeffs_, order_, m);
}

void Scalar::normalize() {
    bool all_zero = true;
    bool higher_zero = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            all_zero = false;
            if (i > 0) higher_zero = false;
        }
    }
    if (all_zero) {
        coeffs_.clear();
        order_ = 1;
    } else if (higher_zero) {
        coeffs_.resize(1);
        order_ = 1;
    }
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    if (order_ == 1 && other.order_ == 1) {
        coeffs_[0] += other.coeffs_[0];
        if (coeffs_[0] == 0) coeffs_.clear();
        return *this;
    }
    std::uint32_t m = lcm32(order_, other.order_);
    std::vector<mpq_class> a = coefficients_in(m);
    std::vector<mpq_class> b = other.coefficients_in(m);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    coeffs_ = std::move(a);
    order_ = m;
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
    if (is_zero()) return *this;
    if (other.is_zero()) {
        coeffs_.clear();
        order_ = 1;
        return *this;
    }
    if (order_ == 1 && other.order_ == 1) {
        coeffs_[0] *= other.coeffs_[0];
        return *this;
    }
    if (other.order_ == 1) {
        for (auto& c : coeffs_) c *= other.coeffs_[0];
        return *this;
    }
    if (order_ == 1) {
        mpq_class f = coeffs_[0];
        *this = other;
        for (auto& c : coeffs_) c *= f;
        return *this;
    }
    std::uint32_t m = lcm32(order_, other.order_);
    const CycloData& cd = cyclo(m);
    std::vector<mpq_class> a = coefficients_in(m);
    std::vector<mpq_class> b = other.coefficients_in(m);
    std::vector<mpq_class> raw(2 * cd.phi - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] != 0) raw[i + j] += a[i] * b[j];
        }
    }
    coeffs_ = reduce_poly(raw, cd);
    order_ = m;
    normalize();
    return *this;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw InvalidArgument("division by zero");
    if (order_ == 1) return Scalar(mpq_class(1) / coeffs_[0]);
    // Solve (multiplication by this) * c = 1 over Q.
    const CycloData& cd = cyclo(order_);
    const std::size_t n = cd.phi;
    std::vector<std::vector<mpq_class>> mat(n, std::vector<mpq_class>(n + 1, 0));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<mpq_class> raw(n + j, 0);
        for (std::size_t i = 0; i < n; ++i) raw[i + j] = coeffs_[i];
        std::vector<mpq_class> col = reduce_poly(raw, cd);
        for (std::size_t i = 0; i < n; ++i) mat[i][j] = col[i];
    }
    mat[0][n] = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && mat[p][c] == 0) ++p;
        if (p == n) throw Error("cyclotomic inverse: singular multiplication matrix");
        std::swap(mat[p], mat[c]);
        mpq_class inv = 1 / mat[c][c];
        for (std::size_t k = c; k <= n; ++k) mat[c][k] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || mat[r][c] == 0) continue;
            mpq_class f = mat[r][c];
            for (std::size_t k = c; k <= n; ++k) mat[r][k] -= f * mat[c][k];
        }
    }
    std::vector<mpq_class> sol(n);
    for (std::size_t i = 0; i < n; ++i) sol[i] = mat[i][n];
    return from_coefficients(order_, sol);
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

Scalar Scalar::pow(long exponent) const {
    Scalar base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent) : static_cast<unsigned long>(exponent);
    Scalar result(1);
    while (e > 0) {
        if (e & 1UL) result *= base;
        base *= base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
    if (a.is_zero() || b.is_zero()) return false;
    return (a - b).is_zero();
}

std::size_t Scalar::size_hint() const {
    std::size_t s = 0;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        s += mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2);
    }
    return s;
}

std::string Scalar::to_string() const {
    if (coeffs_.empty()) return "0";
    if (order_ == 1) return coeffs_[0].get_str();
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ", ";
        os << coeffs_[i].get_str();
    }
    os << "]@" << order_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Field::Field(FieldSpec spec) : spec_(spec) {
    if (spec_.kind == FieldSpec::Kind::cyclotomic && spec_.order == 0) {
        throw InvalidArgument("cyclotomic field order must be positive");
    }
    if (spec_.kind == FieldSpec::Kind::rational) spec_.order = 1;
}

bool Field::contains(const Scalar& s) const { return order() % s.order() == 0; }

Field field_make(FieldSpec spec) { return Field(spec); }

}  // namespace liecoh
