#ifndef LIECOH_EXACTALG_SCALAR_HPP
#define LIECOH_EXACTALG_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace liecoh {

/// Euler's totient, used for the dimension of Q(zeta_m) over Q.
std::uint32_t euler_phi(std::uint32_t m);

/// Integer coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(std::uint32_t m);

/// An element of Q(zeta_m), stored as the coefficient list of a polynomial
/// of degree < phi(m) in zeta_m.
///
/// Zero is stored without coefficients. An element whose non-constant
/// coefficients vanish is always demoted to order 1, so rational values have
/// a single representation regardless of the field they came from. Binary
/// operations between different orders embed both operands in
/// Q(zeta_lcm) first.
class Scalar {
public:
    Scalar() = default;
    Scalar(long value);  // NOLINT(google-explicit-constructor)
    Scalar(int value) : Scalar(static_cast<long>(value)) {}  // NOLINT
    explicit Scalar(mpq_class value);

    static Scalar rational(long num, long den);
    /// Parses "a", "-a", "a/b".
    static Scalar parse_rational(const std::string& text);
    /// zeta_m^k.
    static Scalar zeta(std::uint32_t m, long k = 1);
    /// sum_i coeffs[i] * zeta_m^i; coeffs may be shorter than phi(m), or
    /// longer (higher powers are reduced).
    static Scalar from_coefficients(std::uint32_t m, const std::vector<mpq_class>& coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_rational() const { return order_ == 1; }
    /// Throws InvalidArgument unless is_rational().
    mpq_class rational_value() const;
    std::uint32_t order() const { return order_; }

    /// Coefficients as an element of Q(zeta_m); m must be a multiple of order().
    std::vector<mpq_class> coefficients_in(std::uint32_t m) const;
    const std::vector<mpq_class>& coefficients() const { return coeffs_; }

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    Scalar inverse() const;
    Scalar pow(long exponent) const;

    /// Rough bit size; the elimination prefers small pivots.
    std::size_t size_hint() const;

    /// "a/b" for rationals, "[c0, c1, ...]@m" otherwise.
    std::string to_string() const;

private:
    void normalize();

    std::uint32_t order_ = 1;
    std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Arithmetic context for a fixed field Q or Q(zeta_m).
struct FieldSpec {
    enum class Kind { rational, cyclotomic };
    Kind kind = Kind::rational;
    std::uint32_t order = 1;

    static FieldSpec rationals() { return {}; }
    static FieldSpec cyclotomic(std::uint32_t m) { return {Kind::cyclotomic, m}; }
    bool operator==(const FieldSpec&) const = default;
};

class Field {
public:
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const { return spec_; }
    /// m for Q(zeta_m); 1 for Q.
    std::uint32_t order() const { return spec_.kind == FieldSpec::Kind::rational ? 1 : spec_.order; }
    std::uint32_t degree() const { return euler_phi(order()); }

    Scalar zero() const { return {}; }
    Scalar one() const { return Scalar(1); }
    Scalar zeta() const { return Scalar::zeta(order()); }
    /// True if s lies in this field.
    bool contains(const Scalar& s) const;

    bool operator==(const Field& other) const { return order() == other.order(); }

private:
    FieldSpec spec_;
};

/// Validates the spec (order >= 1) and returns the field.
Field field_make(FieldSpec spec);

}  // namespace liecoh

#endif
