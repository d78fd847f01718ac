#include "arrcrit/scalar.hpp"

#include "arrcrit/error.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <ostream>
#include <sstream>

namespace arrcrit {

namespace detail {
struct FieldData {
    std::vector<mpq_class> min_poly; // monic, constant term first
};
} // namespace detail

namespace {

using Poly = std::vector<mpq_class>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of p modulo the monic polynomial m.
void reduce_mod(Poly& p, const Poly& m) {
    const std::size_t deg = m.size() - 1;
    trim(p);
    while (p.size() > deg) {
        const std::size_t shift = p.size() - 1 - deg;
        const mpq_class lead = p.back();
        for (std::size_t i = 0; i < deg; ++i) p[shift + i] -= lead * m[i];
        p.pop_back();
        trim(p);
    }
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

// Division with remainder for a nonzero divisor over Q.
void poly_divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    rem = a;
    trim(rem);
    quot.clear();
    if (rem.size() < b.size()) return;
    quot.assign(rem.size() - b.size() + 1, 0);
    const mpq_class lead = b.back();
    while (!rem.empty() && rem.size() >= b.size()) {
        const std::size_t shift = rem.size() - b.size();
        const mpq_class f = rem.back() / lead;
        quot[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) rem[shift + i] -= f * b[i];
        rem.pop_back();
        trim(rem);
    }
    trim(quot);
}

std::string_view strip(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

bool valid_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

std::string rational_str(const mpq_class& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

} // namespace

// ---------------------------------------------------------------- Field

Field Field::extension(std::vector<mpq_class> min_poly) {
    for (auto& c : min_poly) c.canonicalize();
    trim(min_poly);
    if (min_poly.size() < 3) throw Error("minimal polynomial must have degree >= 2");
    if (min_poly.back() != 1) throw Error("minimal polynomial must be monic");

    static std::mutex mu;
    static std::vector<std::unique_ptr<detail::FieldData>> registry;
    std::lock_guard lock(mu);
    for (const auto& d : registry)
        if (d->min_poly == min_poly) return Field(d.get());
    registry.push_back(std::make_unique<detail::FieldData>(detail::FieldData{std::move(min_poly)}));
    return Field(registry.back().get());
}

std::size_t Field::degree() const { return data_ ? data_->min_poly.size() - 1 : 1; }

const std::vector<mpq_class>& Field::min_poly() const {
    static const std::vector<mpq_class> empty;
    return data_ ? data_->min_poly : empty;
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(const mpq_class& v) {
    if (v != 0) {
        coeffs_.push_back(v);
        coeffs_.back().canonicalize();
    }
}

Scalar::Scalar(Field field, std::vector<mpq_class> coords) : field_(field), coeffs_(std::move(coords)) {
    for (auto& c : coeffs_) c.canonicalize();
    reduce();
}

Scalar Scalar::generator(Field field) {
    if (field.is_rational()) throw Error("Q has no generator");
    return Scalar(field, {0, 1});
}

void Scalar::reduce() {
    if (field_.is_rational()) {
        trim(coeffs_);
        if (coeffs_.size() > 1) throw Error("non-rational coordinates over Q");
        return;
    }
    reduce_mod(coeffs_, field_.min_poly());
}

Field Scalar::common_field(Field a, Field b) {
    if (a == b || b.is_rational()) return a;
    if (a.is_rational()) return b;
    throw Error("scalars belong to different fields");
}

bool Scalar::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

mpq_class Scalar::rational_value() const {
    if (!is_rational()) throw Error("scalar " + str() + " is not rational");
    return coeffs_.empty() ? mpq_class(0) : coeffs_[0];
}

std::vector<mpq_class> Scalar::coords() const {
    std::vector<mpq_class> out = coeffs_;
    out.resize(field_.degree(), 0);
    return out;
}

Scalar Scalar::operator-() const {
    Scalar r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
    field_ = common_field(field_, o.field_);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim(coeffs_);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    field_ = common_field(field_, o.field_);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim(coeffs_);
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    field_ = common_field(field_, o.field_);
    if (coeffs_.size() <= 1 && o.coeffs_.size() <= 1) {
        if (coeffs_.empty() || o.coeffs_.empty()) coeffs_.clear();
        else coeffs_[0] *= o.coeffs_[0];
        return *this;
    }
    coeffs_ = poly_mul(coeffs_, o.coeffs_);
    reduce();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
    if (o.is_zero()) throw Error("division by zero");
    field_ = common_field(field_, o.field_);
    if (o.coeffs_.size() == 1) {
        for (auto& c : coeffs_) c /= o.coeffs_[0];
        return *this;
    }
    return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error("division by zero");
    if (coeffs_.size() == 1) return Scalar(field_, {1 / coeffs_[0]});
    // Extended Euclid on (m, a): track s with s*a == r (mod m).
    const Poly& m = field_.min_poly();
    Poly r0 = m, r1 = coeffs_;
    Poly s0{}, s1{1};
    while (!r1.empty()) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly s = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    if (r0.size() != 1)
        throw Error("element " + str() + " is not invertible (minimal polynomial is reducible)");
    for (auto& c : s0) c /= r0[0];
    return Scalar(field_, std::move(s0));
}

Scalar Scalar::pow(unsigned e) const {
    Scalar result(field_, {1});
    Scalar base = *this;
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_ && !a.field_.is_rational() && !b.field_.is_rational())
        throw Error("comparing scalars from different fields");
    return a.coeffs_ == b.coeffs_;
}

std::string Scalar::str() const {
    if (field_.is_rational()) return coeffs_.empty() ? "0" : rational_str(coeffs_[0]);
    std::string out = "[";
    const auto c = coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (i) out += ",";
        out += rational_str(c[i]);
    }
    return out + "]";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

mpq_class parse_rational(std::string_view text) {
    text = strip(text);
    const auto slash = text.find('/');
    std::string_view num = strip(text.substr(0, slash));
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : strip(text.substr(slash + 1));
    if (!valid_integer(num) || !valid_integer(den))
        throw Error("malformed rational '" + std::string(text) + "'");
    if (num.front() == '+') num.remove_prefix(1);
    if (den.front() == '+') den.remove_prefix(1);
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw Error("zero denominator in '" + std::string(text) + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

Scalar parse_scalar(std::string_view text, Field field) {
    text = strip(text);
    if (text.empty()) throw Error("empty scalar");
    if (text.front() != '[') return Scalar(field, {parse_rational(text)});
    if (text.back() != ']') throw Error("malformed scalar '" + std::string(text) + "'");
    if (field.is_rational()) throw Error("coordinate list '" + std::string(text) + "' given over Q");
    std::string_view body = strip(text.substr(1, text.size() - 2));
    std::vector<mpq_class> coords;
    while (!body.empty()) {
        const auto comma = body.find(',');
        coords.push_back(parse_rational(body.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        body.remove_prefix(comma + 1);
        if (strip(body).empty()) throw Error("trailing comma in '" + std::string(text) + "'");
    }
    if (coords.empty()) throw Error("empty coordinate list");
    if (coords.size() > field.degree())
        throw Error("coordinate list '" + std::string(text) + "' longer than the field degree");
    return Scalar(field, std::move(coords));
}

Scalar scalar_arith(ArithOp op, const Scalar& a, const Scalar& b) {
    if (a.field() != b.field()) throw Error("scalars belong to different fields");
    switch (op) {
    case ArithOp::add: return a + b;
    case ArithOp::sub: return a - b;
    case ArithOp::mul: return a * b;
    case ArithOp::div: return a / b;
    }
    throw Error("unknown arithmetic operation");
}

} // namespace arrcrit
