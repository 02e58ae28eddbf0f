#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "unital/field.hpp"
#include "unital/linalg.hpp"
#include "unital/multipoly.hpp"

namespace unital {

class AlgElem;

namespace detail {
struct AlgebraData {
    Field field;
    std::size_t dim = 0;
    std::vector<std::string> basis_names;
    std::vector<Elem> tensor; // c[(i*n + j)*n + k]: e_i e_j = sum_k c_ijk e_k
    std::vector<Elem> one;
    std::vector<Mat> left_mult; // M(e_i), columns are coordinates of e_i * e_j
};
} // namespace detail

/// Finite-dimensional associative unital algebra given by structure constants.
/// Associativity and the identity are verified at construction. Immutable.
class Algebra {
public:
    /// Validates shape, associativity and the identity vector.
    static Algebra build(const Field& field, std::vector<Elem> tensor,
                         std::vector<Elem> one,
                         std::vector<std::string> basis_names = {});
    /// m x m matrix algebra on the basis of matrix units.
    static Algebra matrix_algebra(const Field& field, std::size_t m);
    /// Group ring F[G] from a Cayley table (table[g][h] = index of g*h).
    static Algebra group_ring(const Field& field,
                              const std::vector<std::vector<std::size_t>>& cayley);
    /// Direct product with componentwise operations.
    static Algebra product(const Algebra& a, const Algebra& b);
    /// F^n with componentwise operations.
    static Algebra total_split(const Field& field, std::size_t n);

    const Field& field() const { return d_->field; }
    std::size_t dim() const { return d_->dim; }
    const std::vector<std::string>& basis_names() const { return d_->basis_names; }
    const Elem& structure(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t n = d_->dim;
        return d_->tensor[(i * n + j) * n + k];
    }
    const std::vector<Elem>& one_coords() const { return d_->one; }
    const Mat& basis_left_mult(std::size_t i) const { return d_->left_mult[i]; }

    AlgElem element(std::vector<Elem> coords) const;
    AlgElem zero() const;
    AlgElem one() const;
    AlgElem basis_element(std::size_t i) const;

    bool is_commutative() const;
    /// All |F|^dim elements in coordinate odometer order (finite field only).
    std::vector<AlgElem> enumerate(std::uint64_t cap = kDefaultCap) const;

    bool operator==(const Algebra& other) const;
    bool operator!=(const Algebra& other) const { return !(*this == other); }
    bool same_instance(const Algebra& other) const { return d_ == other.d_; }

private:
    explicit Algebra(std::shared_ptr<const detail::AlgebraData> d) : d_(std::move(d)) {}
    std::shared_ptr<const detail::AlgebraData> d_;
};

/// Element of an Algebra as a coordinate vector on the structural basis.
class AlgElem {
public:
    AlgElem(Algebra owner, std::vector<Elem> coords);

    const Algebra& owner() const { return owner_; }
    const std::vector<Elem>& coords() const { return coords_; }

    AlgElem operator+(const AlgElem& rhs) const;
    AlgElem operator-(const AlgElem& rhs) const;
    AlgElem operator*(const AlgElem& rhs) const;
    AlgElem operator-() const;
    AlgElem scaled(const Elem& s) const;
    bool operator==(const AlgElem& rhs) const;
    bool operator!=(const AlgElem& rhs) const { return !(*this == rhs); }
    bool is_zero() const;

private:
    Algebra owner_;
    std::vector<Elem> coords_;
};

/// Matrix of left multiplication by x on the structural basis.
Mat regular_representation(const AlgElem& x);

/// x is a unit iff det of its regular representation is nonzero.
bool is_unit(const AlgElem& x);

/// Two-sided inverse; throws InvalidInput when x is not a unit.
AlgElem inverse(const AlgElem& x);

/// det(sum_i X_i M(b_i)): evaluating it at the coordinates of x gives
/// det M(x), so its nonvanishing locus is exactly the unit group.
/// Refuses dimensions above dim_cap (symbolic expansion grows factorially).
MultiPoly unit_polynomial(const Algebra& a, std::size_t dim_cap = 8);

/// Basis of a two-sided ideal, reduced-row-echelon ordered.
struct IdealBasis {
    std::vector<std::vector<Elem>> vectors;
};

/// Validates that the span of the given vectors is a two-sided ideal and
/// returns its row-echelon basis.
IdealBasis ideal_basis(const Algebra& a, const std::vector<std::vector<Elem>>& vectors);

/// Jacobson radical of an algebra over a finite field, by exhausting the
/// criterion J(A) = {x : 1 + a x is a unit for every a}. Requires
/// |F|^dim <= cap.
IdealBasis jacobson_radical(const Algebra& a, std::uint64_t cap = kDefaultCap);

struct Quotient {
    Algebra algebra;
    Mat projection;                      // (dim - k) x dim, k = dim of ideal
    std::vector<std::size_t> complement; // basis indices surviving into the quotient
};

/// A/I on the complement basis (non-pivot coordinates of the ideal's echelon
/// form, in index order), together with the projection map.
Quotient quotient_by_ideal(const Algebra& a, const IdealBasis& ideal);

/// Project an element's coordinates through a quotient.
std::vector<Elem> project(const Quotient& q, const AlgElem& x);

} // namespace unital
