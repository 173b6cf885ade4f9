#include "koszul/field.hpp"

#include <charconv>

namespace koszul {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::uint32_t reduce_mod(std::int64_t value, std::uint32_t p) {
    std::int64_t r = value % static_cast<std::int64_t>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

// Inverse of a modulo prime p via extended Euclid.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint32_t p) {
    if (p < 2 || p >= (1u << 31) || !is_prime_u32(p)) {
        throw std::invalid_argument("FieldSpec: modulus must be a prime in [2, 2^31): " +
                                    std::to_string(p));
    }
    return FieldSpec(FieldKind::prime, p);
}

std::string FieldSpec::to_string() const {
    return is_rationals() ? "Q" : "GF:" + std::to_string(characteristic_);
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "Q") return rationals();
    if (text.rfind("GF:", 0) == 0) {
        std::string_view num = text.substr(3);
        std::uint32_t p = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
        if (ec == std::errc() && ptr == num.data() + num.size()) {
            return prime(p);
        }
    }
    throw std::invalid_argument("FieldSpec: expected \"Q\" or \"GF:<p>\", got \"" +
                                std::string(text) + "\"");
}

Scalar Scalar::from_int(const FieldSpec& field, std::int64_t value) {
    Scalar s(field);
    if (field.is_rationals()) {
        s.rational_ = mpq_class(mpz_class(static_cast<long>(value)));
    } else {
        s.residue_ = reduce_mod(value, field.characteristic());
    }
    return s;
}

Scalar Scalar::from_rational(mpq_class value) {
    Scalar s(FieldSpec::rationals());
    value.canonicalize();
    s.rational_ = std::move(value);
    return s;
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Scalar: empty value");
    std::string buf(text);
    if (field.is_rationals()) {
        mpq_class q;
        if (q.set_str(buf, 10) != 0 || (buf.find('/') != std::string::npos && q.get_den() == 0)) {
            throw std::invalid_argument("Scalar: malformed rational \"" + buf + "\"");
        }
        if (q.get_den() == 0) throw std::invalid_argument("Scalar: zero denominator in \"" + buf + "\"");
        return from_rational(std::move(q));
    }
    mpz_class z;
    if (z.set_str(buf, 10) != 0) {
        throw std::invalid_argument("Scalar: malformed integer \"" + buf + "\"");
    }
    mpz_class r = z % field.characteristic();
    std::int64_t v = r.get_si();
    return from_int(field, v);
}

bool Scalar::is_zero() const {
    return field_.is_rationals() ? rational_ == 0 : residue_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rationals() ? rational_ == 1 : residue_ == 1;
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_) {
        throw std::invalid_argument("Scalar: field mismatch (" + field_.to_string() + " vs " +
                                    rhs.field_.to_string() + ")");
    }
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rational_ = rational_ + rhs.rational_;
    } else {
        std::uint64_t sum = static_cast<std::uint64_t>(residue_) + rhs.residue_;
        s.residue_ = static_cast<std::uint32_t>(sum % field_.characteristic());
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rational_ = rational_ * rhs.rational_;
    } else {
        s.residue_ = mul_mod(residue_, rhs.residue_, field_.characteristic());
    }
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rational_ = -rational_;
    } else {
        s.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
    }
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("Scalar: inverse of zero");
    Scalar s(field_);
    if (field_.is_rationals()) {
        s.rational_ = 1 / rational_;
    } else {
        s.residue_ = inv_mod(residue_, field_.characteristic());
    }
    return s;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_) return false;
    return field_.is_rationals() ? rational_ == rhs.rational_ : residue_ == rhs.residue_;
}

std::string Scalar::to_string() const {
    if (field_.is_rationals()) return rational_.get_str();
    return std::to_string(residue_);
}

const mpq_class& Scalar::rational() const {
    if (!field_.is_rationals()) throw std::logic_error("Scalar: not a rational");
    return rational_;
}

std::uint32_t Scalar::residue() const {
    if (!field_.is_prime()) throw std::logic_error("Scalar: not a prime-field element");
    return residue_;
}

}  // namespace koszul
