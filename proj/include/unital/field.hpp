#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "unital/errors.hpp"

namespace unital {

enum class FieldKind { Prime, Extension, Rational };

class Elem;

namespace detail {
struct FieldData {
    FieldKind kind;
    mpz_class p;                    // characteristic; 0 for the rationals
    std::vector<mpz_class> modulus; // monic irreducible f, coefficients low-to-high (extension only)
    std::size_t ext_degree = 0;     // deg f
};
} // namespace detail

/// An exact field: a prime field F_p, a single-level extension F_p[t]/(f),
/// or the rational numbers. Immutable after construction; cheap to copy.
class Field {
public:
    static Field prime(const mpz_class& p);
    static Field extension(const mpz_class& p, std::vector<mpz_class> modulus);
    static Field rationals();

    FieldKind kind() const { return d_->kind; }
    const mpz_class& characteristic() const { return d_->p; }
    bool finite() const { return d_->kind != FieldKind::Rational; }
    mpz_class cardinality() const; // throws InvalidInput for the rationals
    /// Extension degree over the prime field (1 for a prime field).
    std::size_t degree() const;
    const std::vector<mpz_class>& modulus() const { return d_->modulus; }

    Elem zero() const;
    Elem one() const;
    /// Image of an integer under Z -> F (reduced mod p in positive characteristic).
    Elem from_integer(const mpz_class& n) const;
    Elem from_rational(const mpq_class& q) const; // rational field only
    /// Extension element from a coefficient vector (length <= degree), low-to-high.
    Elem from_coeffs(const std::vector<mpz_class>& coeffs) const;

    /// All elements of a finite field in canonical order: 0, 1, ..., p-1 for a
    /// prime field; coefficient vectors counted with the constant term fastest
    /// for an extension (F_4 enumerates as 0, 1, t, t+1). Deterministic.
    std::vector<Elem> enumerate() const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }
    /// True if both handles point at the same context instance.
    bool same_instance(const Field& other) const { return d_ == other.d_; }

    std::string describe() const;

private:
    explicit Field(std::shared_ptr<const detail::FieldData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::FieldData> d_;
    friend class Elem;
};

/// A field element in canonical form. Equality of elements is equality of
/// representations: residues in [0,p), coefficient vectors with entries in
/// [0,p), or reduced fractions with positive denominator.
class Elem {
public:
    Elem() = default;

    const Field& owner() const { return owner_; }

    bool is_zero() const;
    bool is_one() const;

    Elem operator+(const Elem& rhs) const;
    Elem operator-(const Elem& rhs) const;
    Elem operator*(const Elem& rhs) const;
    Elem operator/(const Elem& rhs) const; // throws InvalidInput on zero divisor
    Elem operator-() const;
    Elem& operator+=(const Elem& rhs) { *this = *this + rhs; return *this; }
    Elem& operator-=(const Elem& rhs) { *this = *this - rhs; return *this; }
    Elem& operator*=(const Elem& rhs) { *this = *this * rhs; return *this; }

    Elem inv() const;                    // throws InvalidInput on zero
    Elem pow(const mpz_class& k) const;  // negative k inverts first

    /// a^q for q a power of the characteristic; a field automorphism in
    /// positive characteristic. Throws InvalidInput in characteristic zero
    /// or when q is not a power of p.
    Elem frobenius(const mpz_class& q) const;

    bool operator==(const Elem& rhs) const;
    bool operator!=(const Elem& rhs) const { return !(*this == rhs); }

    /// Canonical residue (prime field only).
    const mpz_class& residue() const;
    /// Coefficient vector of length degree(), low-to-high (extension only).
    const std::vector<mpz_class>& coeffs() const;
    /// Reduced fraction (rational field only).
    const mpq_class& fraction() const;

    std::string str() const;

private:
    friend class Field;
    using Repr = std::variant<mpz_class, std::vector<mpz_class>, mpq_class>;
    Elem(Field owner, Repr repr) : owner_(std::move(owner)), repr_(std::move(repr)) {}
    void require_same_owner(const Elem& rhs) const;

    Field owner_{Field::rationals()};
    Repr repr_{mpq_class(0)};
};

/// Total order on canonical representations (enumeration order). Usable as a
/// deterministic tie-breaker; not compatible with field arithmetic.
bool elem_repr_less(const Elem& a, const Elem& b);

} // namespace unital
