#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "unital/algebra.hpp"
#include "unital/field.hpp"
#include "unital/linalg.hpp"
#include "unital/unitsearch.hpp"

namespace unital {

namespace detail {
struct GaloisData {
    mpz_class p;
    std::size_t e = 0; // base field F_q, q = p^e
    std::size_t m = 0; // [F : E]
    mpz_class q;
    Field top;         // F = F_{q^m}
    Field prime;       // F_p
    Algebra group_ring; // F[G] for the cyclic group G of order m
    std::vector<Mat> frob_powers;   // x -> x^{q^j} as F_p-linear maps, j = 0..m-1
    std::vector<Elem> base_fp_basis; // F_p-basis of E inside F
};
} // namespace detail

/// Galois context for the extension F_{q^m} / F_q with cyclic Galois group
/// generated by x -> x^q. Carries the group ring F[G], precomputed Frobenius
/// powers as F_p-linear maps, and an F_p-basis of the base field.
class GaloisCtx {
public:
    /// Builds the tower; the top field modulus is chosen deterministically
    /// (first irreducible monic polynomial of degree e*m in enumeration
    /// order) unless one is supplied.
    static GaloisCtx make(const mpz_class& p, std::size_t e, std::size_t m,
                          std::vector<mpz_class> modulus = {});

    const mpz_class& p() const { return d_->p; }
    std::size_t base_degree() const { return d_->e; }
    std::size_t group_order() const { return d_->m; }
    const mpz_class& q() const { return d_->q; }
    const Field& top_field() const { return d_->top; }
    const Field& prime_field() const { return d_->prime; }
    const Algebra& group_ring() const { return d_->group_ring; }
    const std::vector<Elem>& base_fp_basis() const { return d_->base_fp_basis; }

    /// alpha^{q^j} via the precomputed linear maps.
    Elem conjugate(const Elem& alpha, std::size_t j) const;
    /// F_p-coordinate vector of a top-field element.
    std::vector<Elem> fp_coords(const Elem& alpha) const;

private:
    explicit GaloisCtx(std::shared_ptr<const detail::GaloisData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::GaloisData> d_;
};

/// phi(alpha) = sum_tau (tau^{-1} alpha) tau as an element of F[G].
AlgElem phi_map(const GaloisCtx& ctx, const Elem& alpha);

/// True iff the conjugates (sigma^j alpha) form a basis of F over E.
/// Decided through the group ring (phi(alpha) a unit of F[G]) and
/// cross-checked against the direct rank criterion; the two agree on every
/// input, so a mismatch signals a broken context.
bool is_normal_generator(const GaloisCtx& ctx, const Elem& alpha);

/// The two criteria individually, for audit.
bool normal_generator_via_group_ring(const GaloisCtx& ctx, const Elem& alpha);
bool normal_generator_via_rank(const GaloisCtx& ctx, const Elem& alpha);

struct NormalGeneratorHit {
    std::vector<mpz_class> coefficients;
    Elem alpha;
};

/// Lexicographically first prime-subring combination of the generators that
/// generates a normal basis. The generators must span F over E.
NormalGeneratorHit find_normal_generator(const GaloisCtx& ctx,
                                         const std::vector<Elem>& generators,
                                         std::uint64_t cap = kDefaultCap);

} // namespace unital
