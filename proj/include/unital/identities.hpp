#pragma once

#include <cstdint>
#include <vector>

#include "unital/field.hpp"
#include "unital/linalg.hpp"
#include "unital/multipoly.hpp"

namespace unital {

/// Subset of Z/pZ with distinct residues in [0, p).
struct ResidueSet {
    mpz_class p;
    std::vector<mpz_class> elements;
};

ResidueSet make_residue_set(const mpz_class& p, std::vector<mpz_class> elements);

struct SumsetReport {
    std::vector<mpz_class> sumset; // sorted
    std::size_t size = 0;
    std::size_t bound = 0; // min(|A| + |B| - 1, p)
    bool holds = false;    // always true; reported for audit
};

/// Exact sumset A + B in Z/pZ against the additive lower bound.
SumsetReport cauchy_davenport_check(const ResidueSet& a, const ResidueSet& b);

struct CoefficientReport {
    Elem coefficient; // of X_1^e ... X_n^e in prod_j (sum_i a_ij X_i)^e
    Elem det_power;   // (det A)^e
    bool equal = false;
};

/// Expands prod_j (sum_i a_ij X_i)^e and compares the central coefficient
/// with (det A)^e. Requires e = p^m - 1 for some m >= 1.
CoefficientReport glynn_coefficient(const Mat& a, const mpz_class& e,
                                    std::uint64_t cap = kDefaultCap);

/// sum over k^n of x_1^{d_1} ... x_n^{d_n}, computed as a product of
/// one-variable sums. Equals (-1)^n when every d_i is a positive multiple of
/// |k| - 1, and 0 otherwise.
Elem monomial_character_sum(const Field& k, const std::vector<mpz_class>& d);

struct PowerSumReport {
    Elem lhs;   // sum over the span of prod_i y_i^{q-1}
    Elem rhs;   // (-1)^n (det B)^{q-1}
    bool equal = false;
};

/// Sums y_1^{q-1} ... y_n^{q-1} over the k-span of a basis B of F^n, where k
/// is the prime subfield by default or the subfield of the given order.
PowerSumReport power_sum_subgroup(const Field& f, const std::vector<std::vector<Elem>>& basis,
                                  const mpz_class& subfield_order = 0,
                                  std::uint64_t cap = kDefaultCap);

} // namespace unital
