#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace arrcrit {

namespace detail {
struct FieldData;
}

/*
 * Coefficient field: either Q or a simple extension Q(t) = Q[t]/(m(t)) for a
 * monic m of degree >= 2. Fields are interned, so a Field is a cheap handle
 * and two handles compare equal iff their minimal polynomials agree.
 *
 * m is not checked for irreducibility. Over a reducible m the quotient is
 * only a ring and inverting a zero divisor throws.
 */
class Field {
public:
    Field() = default;

    static Field rational() { return Field{}; }
    /// min_poly lists coefficients from the constant term up to the leading 1.
    static Field extension(std::vector<mpq_class> min_poly);

    bool is_rational() const { return data_ == nullptr; }
    /// Dimension over Q: 1 for Q, deg(m) otherwise.
    std::size_t degree() const;
    /// Empty for Q.
    const std::vector<mpq_class>& min_poly() const;

    friend bool operator==(Field a, Field b) { return a.data_ == b.data_; }
    friend bool operator!=(Field a, Field b) { return a.data_ != b.data_; }

private:
    explicit Field(const detail::FieldData* d) : data_(d) {}
    const detail::FieldData* data_ = nullptr;
};

/*
 * Exact element of a Field, stored in the power basis 1, t, ..., t^{deg-1}.
 *
 * Canonical form: every coordinate is a reduced rational, the vector is
 * reduced mod m(t) and trailing zeros are trimmed (zero is the empty vector).
 * Plain rationals carry the rational field and mix freely with elements of
 * any extension; mixing two different extensions throws.
 */
class Scalar {
public:
    Scalar() = default;
    Scalar(int v) : Scalar(mpq_class(v)) {}
    Scalar(long v) : Scalar(mpq_class(v)) {}
    Scalar(long long v) : Scalar(mpq_class(static_cast<long>(v))) {}
    Scalar(const mpz_class& v) : Scalar(mpq_class(v)) {}
    Scalar(const mpq_class& v);
    Scalar(Field field, std::vector<mpq_class> coords);

    /// The class of t in Q(t).
    static Scalar generator(Field field);

    Field field() const { return field_; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// True when the value lies in Q (whatever the carrying field).
    bool is_rational() const { return coeffs_.size() <= 1; }
    /// Throws unless is_rational().
    mpq_class rational_value() const;
    /// Power-basis coordinates padded to field().degree().
    std::vector<mpq_class> coords() const;
    const std::vector<mpq_class>& trimmed_coords() const { return coeffs_; }

    Scalar inverse() const;
    Scalar pow(unsigned e) const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// "a" or "a/b" for rational values over Q, "[c0,c1,...]" over an extension.
    std::string str() const;

private:
    void reduce();
    static Field common_field(Field a, Field b);

    Field field_;
    std::vector<mpq_class> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

inline bool is_zero(const Scalar& s) { return s.is_zero(); }

/// Grammar: `a`, `a/b`, or `[c0, c1, ...]` (each ci rational) for extension
/// elements. Throws Error on malformed text, zero denominators, or a
/// coordinate list longer than the field degree.
Scalar parse_scalar(std::string_view text, Field field);
inline std::string format_scalar(const Scalar& s) { return s.str(); }

mpq_class parse_rational(std::string_view text);

enum class ArithOp { add, sub, mul, div };
Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b);

} // namespace arrcrit
