// Exact field arithmetic over the rationals and prime fields GF(p).
//
// Every value carries its field. Rationals are arbitrary-precision reduced
// fractions (GMP); prime-field elements are canonical residues in [0, p)
// with 64-bit widening products, so any modulus p < 2^31 is overflow-safe.

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace koszul {

enum class FieldKind { rationals, prime };

/// Ground field descriptor: the rationals or GF(p) for a prime p < 2^31.
class FieldSpec {
public:
    static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }

    /// Throws std::invalid_argument unless 2 <= p < 2^31 and p is prime.
    static FieldSpec prime(std::uint32_t p);

    FieldKind kind() const { return kind_; }

    /// 0 for the rationals, p for GF(p).
    std::uint32_t characteristic() const { return characteristic_; }

    bool is_rationals() const { return kind_ == FieldKind::rationals; }
    bool is_prime() const { return kind_ == FieldKind::prime; }

    bool operator==(const FieldSpec&) const = default;

    /// "Q" or "GF:p"; parse() accepts exactly these forms.
    std::string to_string() const;
    static FieldSpec parse(std::string_view text);

private:
    FieldSpec(FieldKind kind, std::uint32_t characteristic)
        : kind_(kind), characteristic_(characteristic) {}

    FieldKind kind_;
    std::uint32_t characteristic_;
};

/// A field element in canonical form: a reduced fraction with positive
/// denominator over Q, or a residue in [0, p) over GF(p). Equality is
/// representational equality. Mixed-field arithmetic throws.
class Scalar {
public:
    /// Rational zero. Prefer the named constructors below.
    Scalar() : field_(FieldSpec::rationals()), residue_(0) {}

    static Scalar zero(const FieldSpec& field) { return from_int(field, 0); }
    static Scalar one(const FieldSpec& field) { return from_int(field, 1); }
    static Scalar from_int(const FieldSpec& field, std::int64_t value);
    static Scalar from_rational(mpq_class value);

    /// Parses "n" or "n/d" over Q, a (possibly negative) integer over GF(p).
    static Scalar parse(const FieldSpec& field, std::string_view text);

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    Scalar operator-() const;
    Scalar inverse() const;  // throws std::domain_error on zero

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    std::string to_string() const;

    /// Underlying representation; each accessor requires the matching kind.
    const mpq_class& rational() const;
    std::uint32_t residue() const;

private:
    explicit Scalar(const FieldSpec& field) : field_(field), residue_(0) {}
    void require_same_field(const Scalar& rhs) const;

    FieldSpec field_;
    mpq_class rational_;      // active iff rationals
    std::uint32_t residue_;   // active iff prime
};

}  // namespace koszul
