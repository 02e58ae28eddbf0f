#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unital/algebra.hpp"
#include "unital/field.hpp"
#include "unital/linalg.hpp"

namespace unital {

enum class CoeffDomain { PrimeSubring, Subfield };

/// Additive subgroup of a coordinate space, given as the prime-subring span
/// of listed generators. The generators must span the ambient space over its
/// field; operations verify this before searching.
struct Subgroup {
    std::vector<std::vector<Elem>> generators;
    CoeffDomain coeffs = CoeffDomain::PrimeSubring;
};

struct UnitHit {
    std::vector<mpz_class> coefficients; // per generator
    AlgElem element;
};

/// Lexicographically first F_p-combination of the generators that is a unit.
/// The unit theorem guarantees one exists when the generators span.
UnitHit find_unit_in_span(const Algebra& a, const Subgroup& h,
                          std::uint64_t cap = kDefaultCap);

/// Number of F_p-coefficient vectors whose combination is a unit. For a
/// commutative algebra this is at least (p-1)^dim.
mpz_class count_units_in_span(const Algebra& a, const Subgroup& h,
                              std::uint64_t cap = kDefaultCap);

/// Lexicographically first F_p-combination c with offset + c a unit.
UnitHit find_unit_in_coset(const Algebra& a, const Subgroup& h, const AlgElem& offset,
                           std::uint64_t cap = kDefaultCap);

/// Characteristic-zero search: scans integer boxes of growing radius in lex
/// order within each shell. Terminates because the unit polynomial is nonzero
/// and cannot vanish on all of Z^g; the cap is only a safety valve.
UnitHit find_unit_char_zero(const Algebra& a, const Subgroup& h,
                            std::uint64_t cap = kDefaultCap);

/// Basis construction for the splitting algorithm: given a subfield E of F
/// and an E-basis C of W in F^n whose vectors are also an F-basis of F^n,
/// returns an E-basis B of W such that every E-combination with all
/// coefficients nonzero has all n coordinates nonzero. E must be F itself or
/// the prime field of F.
std::vector<std::vector<Elem>> split_unit_basis(const Field& e, const Field& f,
                                                std::size_t n,
                                                const std::vector<std::vector<Elem>>& c);

/// Exhaustive check that every full-support E-combination of B lands in
/// (F^*)^n. Requires E finite and (|E|-1)^|B| within the cap.
bool verify_unit_basis(const Field& e, const Field& f, std::size_t n,
                       const std::vector<std::vector<Elem>>& b,
                       std::uint64_t cap = kDefaultCap);

} // namespace unital
