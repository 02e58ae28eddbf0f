#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "unital/algebra.hpp"
#include "unital/linalg.hpp"
#include "unital/unitsearch.hpp"

namespace unital {

namespace detail {
struct ModuleData {
    Algebra algebra;
    std::size_t dim = 0;
    std::vector<Mat> action; // one d x d matrix per algebra basis element
};
} // namespace detail

/// Finite-dimensional left module over an Algebra, given by action matrices.
/// The action is verified against the structure constants at construction.
class AModule {
public:
    static AModule build(const Algebra& a, std::vector<Mat> action);
    /// Left regular module: the algebra acting on itself.
    static AModule regular(const Algebra& a);
    /// Block-diagonal direct sum.
    static AModule direct_sum(const AModule& m, const AModule& n);

    const Algebra& algebra() const { return d_->algebra; }
    const Field& field() const { return d_->algebra.field(); }
    std::size_t dim() const { return d_->dim; }
    const Mat& action(std::size_t i) const { return d_->action[i]; }
    /// rho(x) for an algebra element x.
    Mat act(const AlgElem& x) const;

    bool operator==(const AModule& other) const;
    bool operator!=(const AModule& other) const { return !(*this == other); }

private:
    explicit AModule(std::shared_ptr<const detail::ModuleData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::ModuleData> d_;
};

/// Row-reduced basis of Hom_A(M, N) = {h : h rho_M(e_i) = rho_N(e_i) h},
/// computed by solving the linear system in the matrix entries. Deterministic.
std::vector<Mat> hom_space(const AModule& m, const AModule& n);

struct GeneratorHit {
    std::vector<mpz_class> coefficients;
    std::vector<Elem> element;
};

/// Lexicographically first prime-subring combination x of the generators with
/// A x = M. Returns nullopt only after a full scan, which happens exactly
/// when M is not cyclic.
std::optional<GeneratorHit> find_generator(const AModule& m, const Subgroup& h,
                                           std::uint64_t cap = kDefaultCap);

/// Invertible equivariant map M -> N found by scanning prime-subring
/// combinations of a hom basis; nullopt is a verdict of non-isomorphism.
std::optional<Mat> find_isomorphism(const AModule& m, const AModule& n,
                                    std::uint64_t cap = kDefaultCap);

struct SummandWitness {
    Mat f; // M -> N
    Mat g; // N -> M
};

/// Searches Hom(M,N) x Hom(N,M) prime-subring combinations for a pair with
/// f g invertible in End_A(N); a hit certifies that N is a direct summand
/// of M, exhaustion certifies it is not.
std::optional<SummandWitness> summand_test(const AModule& m, const AModule& n,
                                           std::uint64_t cap = kDefaultCap);

} // namespace unital
