#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "unital/field.hpp"
#include "unital/linalg.hpp"

namespace unital {

using ExpVec = std::vector<std::uint32_t>;

/// Graded lexicographic order on exponent vectors: total degree first, then
/// lex with the first variable most significant.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

/// Sparse multivariate polynomial over an exact field. Stored coefficients
/// are never zero; term order is graded lex, which fixes serialization.
class MultiPoly {
public:
    MultiPoly(Field field, std::size_t nvars);
    static MultiPoly constant(const Field& field, std::size_t nvars, const Elem& c);
    static MultiPoly variable(const Field& field, std::size_t nvars, std::size_t index);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /// Total degree; -1 for the zero polynomial.
    std::int64_t total_degree() const;
    /// Degree in one variable; -1 for the zero polynomial.
    std::int64_t degree_in(std::size_t var) const;

    const std::map<ExpVec, Elem, GrlexLess>& terms() const { return terms_; }
    Elem coefficient(const ExpVec& exp) const;
    void set_coefficient(const ExpVec& exp, const Elem& c); // erases on zero

    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly operator-() const;
    MultiPoly scaled(const Elem& s) const;
    MultiPoly pow(std::uint64_t k) const;
    bool operator==(const MultiPoly& rhs) const;
    bool operator!=(const MultiPoly& rhs) const { return !(*this == rhs); }

    Elem evaluate(const std::vector<Elem>& point) const;

    /// Homogeneous part of top total degree; zero maps to zero.
    MultiPoly leading_form() const;

    std::string str() const;

private:
    Field field_;
    std::size_t nvars_;
    std::map<ExpVec, Elem, GrlexLess> terms_;
};

/// Grid S_1 x ... x S_n; the sets keep their given order, and elements within
/// a set are pairwise distinct.
struct GridSpec {
    std::vector<std::vector<Elem>> sets;
    std::size_t nvars() const { return sets.size(); }
};

GridSpec make_grid(const Field& field, std::vector<std::vector<Elem>> sets);

/// Division with remainder by h_i = prod_{s in S_i} (X_i - s), one variable at
/// a time in index order. The result agrees with the input on every grid point
/// and has degree < |S_i| in each X_i.
MultiPoly reduce_mod_grid(const MultiPoly& g, const GridSpec& grid);

struct CnCertificate {
    bool holds = false;
    std::vector<std::string> reasons; // empty when holds
};

/// Checks the non-vanishing hypothesis at exponent d: nonzero coefficient at
/// X^d, total degree equal to sum(d), and |S_i| > d_i for all i.
CnCertificate cn_certify(const MultiPoly& g, const ExpVec& d, const GridSpec& grid);

/// Lexicographically first grid point where g is nonzero (using each set's
/// given order), or nullopt if g vanishes on the whole grid.
std::optional<std::vector<Elem>> cn_witness(const MultiPoly& g, const GridSpec& grid,
                                            std::uint64_t cap = kDefaultCap);

/// Substitution X_j -> sum_i X_i * B[i][j]. A ring map; an automorphism when
/// B is invertible.
MultiPoly linear_substitute(const MultiPoly& g, const Mat& b);

/// True iff g has a nonzero term X^d with sum(d) = deg g and every d_i < p^m.
/// Such polynomials cannot vanish identically on grids with |S_i| = p^m.
bool has_cn_term(const MultiPoly& g, const mpz_class& p, std::uint32_t m);

} // namespace unital
