#include "unital/algebra.hpp"

#include <algorithm>

namespace unital {

namespace {

std::vector<Elem> multiply_coords(const detail::AlgebraData& d,
                                  const std::vector<Elem>& x,
                                  const std::vector<Elem>& y) {
    const std::size_t n = d.dim;
    std::vector<Elem> z(n, d.field.zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Elem xy = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Elem& c = d.tensor[(i * n + j) * n + k];
                if (c.is_zero()) continue;
                z[k] += xy * c;
            }
        }
    }
    return z;
}

void validate_algebra(const detail::AlgebraData& d) {
    const std::size_t n = d.dim;
    if (n == 0) throw InvalidInput("algebra dimension must be at least 1");
    if (d.tensor.size() != n * n * n) throw InvalidInput("structure tensor shape mismatch");
    if (d.one.size() != n) throw InvalidInput("identity vector length mismatch");
    // identity: one * e_j = e_j = e_j * one
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Elem> ej(n, d.field.zero());
        ej[j] = d.field.one();
        if (multiply_coords(d, d.one, ej) != ej || multiply_coords(d, ej, d.one) != ej)
            throw InvalidInput("identity vector fails one*x = x*one = x");
    }
    // associativity on basis triples via the precomputed left multiplications:
    // M(e_i) M(e_j) must equal sum_k c_ijk M(e_k)
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Mat lhs = d.left_mult[i] * d.left_mult[j];
            Mat rhs(d.field, n, n);
            for (std::size_t k = 0; k < n; ++k) {
                const Elem& c = d.tensor[(i * n + j) * n + k];
                if (c.is_zero()) continue;
                rhs = rhs + d.left_mult[k].scaled(c);
            }
            if (lhs != rhs) throw InvalidInput("structure tensor is not associative");
        }
    }
}

std::vector<Mat> build_left_mult(const detail::AlgebraData& d) {
    const std::size_t n = d.dim;
    std::vector<Mat> ms;
    ms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Mat m(d.field, n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                m.at(k, j) = d.tensor[(i * n + j) * n + k];
        ms.push_back(std::move(m));
    }
    return ms;
}

std::vector<std::string> default_names(const std::string& prefix, std::size_t n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
    return names;
}

} // namespace

Algebra Algebra::build(const Field& field, std::vector<Elem> tensor,
                       std::vector<Elem> one, std::vector<std::string> basis_names) {
    auto d = std::make_shared<detail::AlgebraData>();
    d->field = field;
    const std::size_t n3 = tensor.size();
    std::size_t n = 0;
    while (n * n * n < n3) ++n;
    if (n * n * n != n3) throw InvalidInput("structure tensor size is not a cube");
    d->dim = n;
    for (const auto& c : tensor)
        if (c.owner() != field) throw InvalidInput("structure constant owner mismatch");
    for (const auto& c : one)
        if (c.owner() != field) throw InvalidInput("identity coordinate owner mismatch");
    d->tensor = std::move(tensor);
    d->one = std::move(one);
    d->basis_names = basis_names.empty() ? default_names("e", n) : std::move(basis_names);
    if (d->basis_names.size() != n) throw InvalidInput("basis name count mismatch");
    d->left_mult = build_left_mult(*d);
    validate_algebra(*d);
    return Algebra(std::move(d));
}

Algebra Algebra::matrix_algebra(const Field& field, std::size_t m) {
    if (m == 0) throw InvalidInput("matrix algebra needs m >= 1");
    const std::size_t n = m * m;
    std::vector<Elem> tensor(n * n * n, field.zero());
    auto idx = [m](std::size_t i, std::size_t j) { return i * m + j; };
    // b_ij b_kl = delta_jk b_il
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    if (j == k)
                        tensor[(idx(i, j) * n + idx(k, l)) * n + idx(i, l)] = field.one();
    std::vector<Elem> one(n, field.zero());
    for (std::size_t i = 0; i < m; ++i) one[idx(i, i)] = field.one();
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            names.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    return build(field, std::move(tensor), std::move(one), std::move(names));
}

Algebra Algebra::group_ring(const Field& field,
                            const std::vector<std::vector<std::size_t>>& cayley) {
    const std::size_t m = cayley.size();
    if (m == 0) throw InvalidInput("empty Cayley table");
    for (const auto& row : cayley) {
        if (row.size() != m) throw InvalidInput("Cayley table is not square");
        for (auto v : row)
            if (v >= m) throw InvalidInput("Cayley table entry out of range");
    }
    // two-sided identity
    std::size_t id = m;
    for (std::size_t e = 0; e < m; ++e) {
        bool ok = true;
        for (std::size_t g = 0; g < m; ++g)
            if (cayley[e][g] != g || cayley[g][e] != g) { ok = false; break; }
        if (ok) { id = e; break; }
    }
    if (id == m) throw InvalidInput("Cayley table has no identity element");
    // rows and columns are permutations
    for (std::size_t g = 0; g < m; ++g) {
        std::vector<bool> seen_row(m, false), seen_col(m, false);
        for (std::size_t h = 0; h < m; ++h) {
            if (seen_row[cayley[g][h]] || seen_col[cayley[h][g]])
                throw InvalidInput("Cayley table row or column is not a permutation");
            seen_row[cayley[g][h]] = seen_col[cayley[h][g]] = true;
        }
    }
    // associativity and inverses
    for (std::size_t a = 0; a < m; ++a) {
        bool has_inverse = false;
        for (std::size_t b = 0; b < m; ++b) {
            if (cayley[a][b] == id && cayley[b][a] == id) has_inverse = true;
            for (std::size_t c = 0; c < m; ++c)
                if (cayley[cayley[a][b]][c] != cayley[a][cayley[b][c]])
                    throw InvalidInput("Cayley table is not associative");
        }
        if (!has_inverse) throw InvalidInput("Cayley table element lacks an inverse");
    }
    std::vector<Elem> tensor(m * m * m, field.zero());
    for (std::size_t g = 0; g < m; ++g)
        for (std::size_t h = 0; h < m; ++h)
            tensor[(g * m + h) * m + cayley[g][h]] = field.one();
    std::vector<Elem> one(m, field.zero());
    one[id] = field.one();
    return build(field, std::move(tensor), std::move(one), default_names("g", m));
}

Algebra Algebra::product(const Algebra& a, const Algebra& b) {
    if (a.field() != b.field()) throw InvalidInput("product parts live over different fields");
    const Field& F = a.field();
    const std::size_t na = a.dim(), nb = b.dim(), n = na + nb;
    std::vector<Elem> tensor(n * n * n, F.zero());
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j)
            for (std::size_t k = 0; k < na; ++k)
                tensor[(i * n + j) * n + k] = a.structure(i, j, k);
    for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < nb; ++k)
                tensor[((na + i) * n + (na + j)) * n + (na + k)] = b.structure(i, j, k);
    std::vector<Elem> one;
    one.reserve(n);
    for (const auto& c : a.one_coords()) one.push_back(c);
    for (const auto& c : b.one_coords()) one.push_back(c);
    std::vector<std::string> names;
    for (const auto& s : a.basis_names()) names.push_back("l." + s);
    for (const auto& s : b.basis_names()) names.push_back("r." + s);
    return build(F, std::move(tensor), std::move(one), std::move(names));
}

Algebra Algebra::total_split(const Field& field, std::size_t n) {
    if (n == 0) throw InvalidInput("totally split algebra needs n >= 1");
    std::vector<Elem> tensor(n * n * n, field.zero());
    for (std::size_t i = 0; i < n; ++i) tensor[(i * n + i) * n + i] = field.one();
    std::vector<Elem> one(n, field.one());
    return build(field, std::move(tensor), std::move(one), default_names("e", n));
}

AlgElem Algebra::element(std::vector<Elem> coords) const {
    return AlgElem(*this, std::move(coords));
}

AlgElem Algebra::zero() const {
    return AlgElem(*this, std::vector<Elem>(dim(), field().zero()));
}

AlgElem Algebra::one() const { return AlgElem(*this, d_->one); }

AlgElem Algebra::basis_element(std::size_t i) const {
    if (i >= dim()) throw InvalidInput("basis index out of range");
    std::vector<Elem> v(dim(), field().zero());
    v[i] = field().one();
    return AlgElem(*this, std::move(v));
}

bool Algebra::is_commutative() const {
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (structure(i, j, k) != structure(j, i, k)) return false;
    return true;
}

std::vector<AlgElem> Algebra::enumerate(std::uint64_t cap) const {
    if (!field().finite()) throw InvalidInput("cannot enumerate over an infinite field");
    const auto scalars = field().enumerate();
    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(), mpz_class(static_cast<unsigned long>(scalars.size())).get_mpz_t(),
               static_cast<unsigned long>(dim()));
    if (total > mpz_class(static_cast<unsigned long>(cap)))
        throw CapExceeded("algebra has " + total.get_str() + " elements, cap is " +
                          std::to_string(cap));
    std::vector<AlgElem> out;
    std::vector<std::size_t> idx(dim(), 0);
    for (;;) {
        std::vector<Elem> coords;
        coords.reserve(dim());
        for (std::size_t i = 0; i < dim(); ++i) coords.push_back(scalars[idx[i]]);
        out.push_back(AlgElem(*this, std::move(coords)));
        std::size_t i = dim();
        bool done = true;
        while (i-- > 0) {
            if (++idx[i] < scalars.size()) { done = false; break; }
            idx[i] = 0;
        }
        if (done) break;
    }
    return out;
}

bool Algebra::operator==(const Algebra& other) const {
    if (d_ == other.d_) return true;
    return d_->field == other.d_->field && d_->dim == other.d_->dim &&
           d_->tensor == other.d_->tensor && d_->one == other.d_->one;
}

AlgElem::AlgElem(Algebra owner, std::vector<Elem> coords)
    : owner_(std::move(owner)), coords_(std::move(coords)) {
    if (coords_.size() != owner_.dim())
        throw InvalidInput("element coordinate length mismatch");
    for (const auto& c : coords_)
        if (c.owner() != owner_.field())
            throw InvalidInput("element coordinate owner mismatch");
}

AlgElem AlgElem::operator+(const AlgElem& rhs) const {
    if (owner_ != rhs.owner_) throw InvalidInput("algebra element owner mismatch");
    std::vector<Elem> z = coords_;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += rhs.coords_[i];
    return AlgElem(owner_, std::move(z));
}

AlgElem AlgElem::operator-(const AlgElem& rhs) const {
    if (owner_ != rhs.owner_) throw InvalidInput("algebra element owner mismatch");
    std::vector<Elem> z = coords_;
    for (std::size_t i = 0; i < z.size(); ++i) z[i] -= rhs.coords_[i];
    return AlgElem(owner_, std::move(z));
}

AlgElem AlgElem::operator*(const AlgElem& rhs) const {
    if (owner_ != rhs.owner_) throw InvalidInput("algebra element owner mismatch");
    const std::size_t n = owner_.dim();
    std::vector<Elem> z(n, owner_.field().zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (coords_[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (rhs.coords_[j].is_zero()) continue;
            const Elem xy = coords_[i] * rhs.coords_[j];
            for (std::size_t k = 0; k < n; ++k) {
                const Elem& c = owner_.structure(i, j, k);
                if (c.is_zero()) continue;
                z[k] += xy * c;
            }
        }
    }
    return AlgElem(owner_, std::move(z));
}

AlgElem AlgElem::operator-() const {
    std::vector<Elem> z;
    z.reserve(coords_.size());
    for (const auto& c : coords_) z.push_back(-c);
    return AlgElem(owner_, std::move(z));
}

AlgElem AlgElem::scaled(const Elem& s) const {
    std::vector<Elem> z;
    z.reserve(coords_.size());
    for (const auto& c : coords_) z.push_back(c * s);
    return AlgElem(owner_, std::move(z));
}

bool AlgElem::operator==(const AlgElem& rhs) const {
    return owner_ == rhs.owner_ && coords_ == rhs.coords_;
}

bool AlgElem::is_zero() const {
    for (const auto& c : coords_)
        if (!c.is_zero()) return false;
    return true;
}

Mat regular_representation(const AlgElem& x) {
    const Algebra& a = x.owner();
    Mat m(a.field(), a.dim(), a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (x.coords()[i].is_zero()) continue;
        m = m + a.basis_left_mult(i).scaled(x.coords()[i]);
    }
    return m;
}

bool is_unit(const AlgElem& x) { return !det(regular_representation(x)).is_zero(); }

AlgElem inverse(const AlgElem& x) {
    const Algebra& a = x.owner();
    auto v = solve(regular_representation(x), a.one_coords());
    if (!v) throw InvalidInput("element is not a unit");
    AlgElem inv = a.element(std::move(*v));
    if (x * inv != a.one() || inv * x != a.one())
        throw InvalidInput("element is not a unit"); // singular regular representation
    return inv;
}

MultiPoly unit_polynomial(const Algebra& a, std::size_t dim_cap) {
    const std::size_t n = a.dim();
    if (n > dim_cap)
        throw CapExceeded("unit polynomial refused for dim " + std::to_string(n) +
                          " > cap " + std::to_string(dim_cap));
    const Field& F = a.field();
    // entries of sum_i X_i M(b_i)
    std::vector<MultiPoly> entry(n * n, MultiPoly(F, n));
    for (std::size_t i = 0; i < n; ++i) {
        const Mat& m = a.basis_left_mult(i);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) {
                if (m.at(r, c).is_zero()) continue;
                ExpVec e(n, 0);
                e[i] = 1;
                MultiPoly term(F, n);
                term.set_coefficient(e, m.at(r, c));
                entry[r * n + c] = entry[r * n + c] + term;
            }
    }
    // determinant by minors over column subsets; row = popcount(mask) - 1
    std::vector<MultiPoly> minor(std::size_t(1) << n, MultiPoly(F, n));
    minor[0] = MultiPoly::constant(F, n, F.one());
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int r = __builtin_popcount(mask) - 1;
        MultiPoly acc(F, n);
        int sign = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (!(mask & (1u << c))) continue;
            const MultiPoly& e = entry[static_cast<std::size_t>(r) * n + c];
            if (!e.is_zero()) {
                MultiPoly sub = e * minor[mask & ~(1u << c)];
                acc = (sign > 0) ? acc + sub : acc - sub;
            }
            sign = -sign;
        }
        minor[mask] = std::move(acc);
    }
    return minor[(std::size_t(1) << n) - 1];
}

IdealBasis ideal_basis(const Algebra& a, const std::vector<std::vector<Elem>>& vectors) {
    for (const auto& v : vectors)
        if (v.size() != a.dim()) throw InvalidInput("ideal vector length mismatch");
    auto basis = span_basis(a.field(), vectors);
    if (basis.size() != vectors.size())
        throw InvalidInput("ideal vectors are linearly dependent");
    for (const auto& v : basis) {
        const AlgElem x = a.element(v);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            const AlgElem b = a.basis_element(i);
            if (!in_span(a.field(), basis, (b * x).coords()) ||
                !in_span(a.field(), basis, (x * b).coords()))
                throw InvalidInput("vectors do not span a two-sided ideal");
        }
    }
    return IdealBasis{std::move(basis)};
}

IdealBasis jacobson_radical(const Algebra& a, std::uint64_t cap) {
    if (!a.field().finite())
        throw InvalidInput("radical enumeration requires a finite field");
    const auto elements = a.enumerate(cap);
    const AlgElem id = a.one();
    std::vector<std::vector<Elem>> members;
    for (const auto& x : elements) {
        bool in_radical = true;
        for (const auto& y : elements) {
            if (!is_unit(id + y * x)) { in_radical = false; break; }
        }
        if (in_radical && !x.is_zero()) members.push_back(x.coords());
    }
    return IdealBasis{span_basis(a.field(), members)};
}

Quotient quotient_by_ideal(const Algebra& a, const IdealBasis& ideal) {
    const std::size_t n = a.dim();
    const Field& F = a.field();
    // re-validate: two-sided ideal, echelonized
    IdealBasis checked = ideal_basis(a, ideal.vectors);
    const std::size_t k = checked.vectors.size();
    if (k == n) throw InvalidInput("cannot form the quotient by the whole algebra");

    std::vector<std::size_t> pivots;
    std::vector<bool> is_pivot(n, false);
    if (k > 0) {
        Echelon e = reduced_row_echelon(Mat::from_rows(F, checked.vectors));
        pivots = e.pivots;
        for (std::size_t c : pivots) is_pivot[c] = true;
        checked.vectors.clear();
        for (std::size_t r = 0; r < e.rank; ++r) checked.vectors.push_back(e.rref.row(r));
    }
    std::vector<std::size_t> complement;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) complement.push_back(c);
    const std::size_t q = complement.size();

    // projection: eliminate pivot coordinates with the echelon rows, then
    // read off the complement coordinates
    auto reduce = [&](std::vector<Elem> v) {
        for (std::size_t r = 0; r < k; ++r) {
            const Elem f = v[pivots[r]];
            if (f.is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c)
                v[c] -= f * checked.vectors[r][c];
        }
        std::vector<Elem> out;
        out.reserve(q);
        for (std::size_t c : complement) out.push_back(v[c]);
        return out;
    };

    Mat proj(F, q, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<Elem> ej(n, F.zero());
        ej[j] = F.one();
        auto col = reduce(std::move(ej));
        for (std::size_t i = 0; i < q; ++i) proj.at(i, j) = col[i];
    }

    std::vector<Elem> tensor(q * q * q, F.zero());
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            const AlgElem prod = a.basis_element(complement[i]) * a.basis_element(complement[j]);
            auto pc = reduce(prod.coords());
            for (std::size_t l = 0; l < q; ++l) tensor[(i * q + j) * q + l] = pc[l];
        }
    std::vector<Elem> one = reduce(a.one_coords());
    std::vector<std::string> names;
    for (std::size_t c : complement) names.push_back(a.basis_names()[c]);
    Algebra quo = Algebra::build(F, std::move(tensor), std::move(one), std::move(names));
    return Quotient{std::move(quo), std::move(proj), std::move(complement)};
}

std::vector<Elem> project(const Quotient& q, const AlgElem& x) {
    return q.projection.apply(x.coords());
}

} // namespace unital
