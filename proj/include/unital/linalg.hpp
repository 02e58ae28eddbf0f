#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "unital/field.hpp"

namespace unital {

/// Dense matrix over an exact field. Row-major.
class Mat {
public:
    Mat(Field field, std::size_t rows, std::size_t cols);
    static Mat identity(const Field& field, std::size_t n);
    static Mat from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows);
    static Mat from_columns(const Field& field, const std::vector<std::vector<Elem>>& cols);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Elem& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Mat operator+(const Mat& rhs) const;
    Mat operator-(const Mat& rhs) const;
    Mat operator*(const Mat& rhs) const;
    Mat scaled(const Elem& s) const;
    Mat transposed() const;
    bool operator==(const Mat& rhs) const;
    bool operator!=(const Mat& rhs) const { return !(*this == rhs); }

    std::vector<Elem> apply(const std::vector<Elem>& v) const;      // A * v
    std::vector<Elem> apply_row(const std::vector<Elem>& v) const;  // v^T * A

    std::vector<Elem> row(std::size_t r) const;
    std::vector<Elem> column(std::size_t c) const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

/// Row echelon data from exact Gaussian elimination. Pivot choice is the
/// first nonzero entry in column order, so everything here is deterministic.
struct Echelon {
    Mat rref;                        // reduced row echelon form
    std::vector<std::size_t> pivots; // pivot column per nonzero row
    std::size_t rank = 0;
};

Echelon reduced_row_echelon(const Mat& m);
std::size_t rank(const Mat& m);
Elem det(const Mat& m);
std::optional<Mat> inverse(const Mat& m);

/// Solve A x = b; std::nullopt when inconsistent. With multiple solutions the
/// free variables are set to zero (deterministic representative).
std::optional<std::vector<Elem>> solve(const Mat& a, const std::vector<Elem>& b);

/// Basis of the null space {x : A x = 0}, one vector per free column in
/// ascending column order.
std::vector<std::vector<Elem>> kernel_basis(const Mat& a);

/// True if v lies in the row space of `rows` (given as vectors of equal length).
bool in_span(const Field& field, const std::vector<std::vector<Elem>>& rows,
             const std::vector<Elem>& v);

/// Reduced row echelon basis of the span of the given vectors.
std::vector<std::vector<Elem>> span_basis(const Field& field,
                                          const std::vector<std::vector<Elem>>& vectors);

} // namespace unital
