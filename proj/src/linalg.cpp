#include "unital/linalg.hpp"

namespace unital {

Mat::Mat(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols),
      a_(rows * cols, field_.zero()) {}

Mat Mat::identity(const Field& field, std::size_t n) {
    Mat m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
}

Mat Mat::from_rows(const Field& field, const std::vector<std::vector<Elem>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows[0].size() : 0;
    Mat m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) throw InvalidInput("ragged matrix rows");
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::from_columns(const Field& field, const std::vector<std::vector<Elem>>& cols) {
    const std::size_t c = cols.size();
    const std::size_t r = c ? cols[0].size() : 0;
    Mat m(field, r, c);
    for (std::size_t j = 0; j < c; ++j) {
        if (cols[j].size() != r) throw InvalidInput("ragged matrix columns");
        for (std::size_t i = 0; i < r; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
}

Mat Mat::operator+(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix shape mismatch");
    Mat m(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] + rhs.a_[i];
    return m;
}

Mat Mat::operator-(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InvalidInput("matrix shape mismatch");
    Mat m(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] - rhs.a_[i];
    return m;
}

Mat Mat::operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw InvalidInput("matrix shape mismatch in product");
    Mat m(field_, rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Elem& x = at(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                const Elem& y = rhs.at(k, j);
                if (y.is_zero()) continue;
                m.at(i, j) += x * y;
            }
        }
    return m;
}

Mat Mat::scaled(const Elem& s) const {
    Mat m(field_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) m.a_[i] = a_[i] * s;
    return m;
}

Mat Mat::transposed() const {
    Mat m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

bool Mat::operator==(const Mat& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
    for (std::size_t i = 0; i < a_.size(); ++i)
        if (a_[i] != rhs.a_[i]) return false;
    return true;
}

std::vector<Elem> Mat::apply(const std::vector<Elem>& v) const {
    if (v.size() != cols_) throw InvalidInput("vector length mismatch");
    std::vector<Elem> out(rows_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero() || v[j].is_zero()) continue;
            out[i] += at(i, j) * v[j];
        }
    return out;
}

std::vector<Elem> Mat::apply_row(const std::vector<Elem>& v) const {
    if (v.size() != rows_) throw InvalidInput("vector length mismatch");
    std::vector<Elem> out(cols_, field_.zero());
    for (std::size_t i = 0; i < rows_; ++i) {
        if (v[i].is_zero()) continue;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            out[j] += v[i] * at(i, j);
        }
    }
    return out;
}

std::vector<Elem> Mat::row(std::size_t r) const {
    std::vector<Elem> out;
    out.reserve(cols_);
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(at(r, j));
    return out;
}

std::vector<Elem> Mat::column(std::size_t c) const {
    std::vector<Elem> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(at(i, c));
    return out;
}

Echelon reduced_row_echelon(const Mat& m) {
    Echelon e{m, {}, 0};
    Mat& a = e.rref;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(lead, j));
        const Elem s = a.at(lead, col).inv();
        for (std::size_t j = col; j < a.cols(); ++j) a.at(lead, j) = a.at(lead, j) * s;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead || a.at(i, col).is_zero()) continue;
            const Elem f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(lead, j);
        }
        e.pivots.push_back(col);
        ++lead;
    }
    e.rank = e.pivots.size();
    return e;
}

std::size_t rank(const Mat& m) { return reduced_row_echelon(m).rank; }

Elem det(const Mat& m) {
    if (m.rows() != m.cols()) throw InvalidInput("determinant of a non-square matrix");
    Mat a = m;
    const std::size_t n = a.rows();
    Elem d = a.field().one();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a.at(piv, col).is_zero()) ++piv;
        if (piv == n) return a.field().zero();
        if (piv != col) {
            for (std::size_t j = col; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            d = -d;
        }
        d = d * a.at(col, col);
        const Elem inv = a.at(col, col).inv();
        for (std::size_t i = col + 1; i < n; ++i) {
            if (a.at(i, col).is_zero()) continue;
            const Elem f = a.at(i, col) * inv;
            for (std::size_t j = col; j < n; ++j)
                a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        }
    }
    return d;
}

std::optional<Mat> inverse(const Mat& m) {
    if (m.rows() != m.cols()) throw InvalidInput("inverse of a non-square matrix");
    const std::size_t n = m.rows();
    Mat aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = m.field().one();
    }
    Echelon e = reduced_row_echelon(aug);
    for (std::size_t i = 0; i < n; ++i)
        if (i >= e.pivots.size() || e.pivots[i] != i) return std::nullopt;
    Mat inv(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = e.rref.at(i, n + j);
    return inv;
}

std::optional<std::vector<Elem>> solve(const Mat& a, const std::vector<Elem>& b) {
    if (b.size() != a.rows()) throw InvalidInput("rhs length mismatch");
    Mat aug(a.field(), a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[i];
    }
    Echelon e = reduced_row_echelon(aug);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        if (e.pivots[r] == a.cols()) return std::nullopt; // pivot in rhs column
    std::vector<Elem> x(a.cols(), a.field().zero());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.rref.at(r, a.cols());
    return x;
}

std::vector<std::vector<Elem>> kernel_basis(const Mat& a) {
    Echelon e = reduced_row_echelon(a);
    std::vector<bool> is_pivot(a.cols(), false);
    for (std::size_t c : e.pivots) is_pivot[c] = true;
    std::vector<std::vector<Elem>> basis;
    for (std::size_t free = 0; free < a.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Elem> v(a.cols(), a.field().zero());
        v[free] = a.field().one();
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.rref.at(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const Field& field, const std::vector<std::vector<Elem>>& rows,
             const std::vector<Elem>& v) {
    if (rows.empty()) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    Mat m = Mat::from_rows(field, rows);
    const std::size_t r0 = rank(m);
    auto extended = rows;
    extended.push_back(v);
    return rank(Mat::from_rows(field, extended)) == r0;
}

std::vector<std::vector<Elem>> span_basis(const Field& field,
                                          const std::vector<std::vector<Elem>>& vectors) {
    if (vectors.empty()) return {};
    Echelon e = reduced_row_echelon(Mat::from_rows(field, vectors));
    std::vector<std::vector<Elem>> basis;
    for (std::size_t r = 0; r < e.rank; ++r) basis.push_back(e.rref.row(r));
    return basis;
}

} // namespace unital
