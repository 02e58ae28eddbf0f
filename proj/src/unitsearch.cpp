#include "unital/unitsearch.hpp"

#include <algorithm>

namespace unital {

namespace {

void check_span_hypothesis(const Field& f, const std::vector<std::vector<Elem>>& gens,
                           std::size_t ambient_dim) {
    if (gens.empty()) throw InvalidInput("subgroup has no generators");
    for (const auto& g : gens) {
        if (g.size() != ambient_dim) throw InvalidInput("generator length mismatch");
        for (const auto& c : g)
            if (c.owner() != f) throw InvalidInput("generator owner mismatch");
    }
    if (rank(Mat::from_rows(f, gens)) != ambient_dim)
        throw InvalidInput("generators do not span the ambient space");
}

void check_prime_scan_preconditions(const Algebra& a, const Subgroup& h,
                                    std::uint64_t cap, mpz_class& p_out) {
    if (h.coeffs != CoeffDomain::PrimeSubring)
        throw InvalidInput("scan requires prime-subring coefficients");
    const mpz_class& p = a.field().characteristic();
    if (p == 0) throw InvalidInput("scan requires positive characteristic");
    check_span_hypothesis(a.field(), h.generators, a.dim());
    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(), p.get_mpz_t(),
               static_cast<unsigned long>(h.generators.size()));
    if (total > mpz_class(static_cast<unsigned long>(cap)))
        throw CapExceeded("scan over " + total.get_str() + " combinations exceeds cap " +
                          std::to_string(cap));
    p_out = p;
}

// Lexicographic odometer over [0,p)^g, first coordinate most significant.
// Returns false once the space is exhausted.
bool advance_mod_p(std::vector<mpz_class>& x, const mpz_class& p) {
    std::size_t i = x.size();
    while (i-- > 0) {
        x[i] += 1;
        if (x[i] < p) return true;
        x[i] = 0;
    }
    return false;
}

AlgElem combine(const Algebra& a, const Subgroup& h, const std::vector<mpz_class>& x) {
    std::vector<Elem> coords(a.dim(), a.field().zero());
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (x[k] == 0) continue;
        const Elem s = a.field().from_integer(x[k]);
        for (std::size_t i = 0; i < a.dim(); ++i)
            coords[i] += s * h.generators[k][i];
    }
    return a.element(std::move(coords));
}

} // namespace

UnitHit find_unit_in_span(const Algebra& a, const Subgroup& h, std::uint64_t cap) {
    mpz_class p;
    check_prime_scan_preconditions(a, h, cap, p);
    std::vector<mpz_class> x(h.generators.size(), mpz_class(0));
    do {
        AlgElem candidate = combine(a, h, x);
        if (is_unit(candidate)) return UnitHit{x, std::move(candidate)};
    } while (advance_mod_p(x, p));
    // unreachable when the spanning hypothesis holds (unit theorem)
    throw std::logic_error("exhausted a spanning subgroup without finding a unit");
}

mpz_class count_units_in_span(const Algebra& a, const Subgroup& h, std::uint64_t cap) {
    mpz_class p;
    check_prime_scan_preconditions(a, h, cap, p);
    std::vector<mpz_class> x(h.generators.size(), mpz_class(0));
    mpz_class count = 0;
    do {
        if (is_unit(combine(a, h, x))) ++count;
    } while (advance_mod_p(x, p));
    return count;
}

UnitHit find_unit_in_coset(const Algebra& a, const Subgroup& h, const AlgElem& offset,
                           std::uint64_t cap) {
    mpz_class p;
    check_prime_scan_preconditions(a, h, cap, p);
    if (offset.owner() != a) throw InvalidInput("coset offset owner mismatch");
    std::vector<mpz_class> x(h.generators.size(), mpz_class(0));
    do {
        AlgElem candidate = offset + combine(a, h, x);
        if (is_unit(candidate)) return UnitHit{x, std::move(candidate)};
    } while (advance_mod_p(x, p));
    throw std::logic_error("exhausted a spanning subgroup without finding a coset unit");
}

UnitHit find_unit_char_zero(const Algebra& a, const Subgroup& h, std::uint64_t cap) {
    if (a.field().kind() != FieldKind::Rational)
        throw InvalidInput("characteristic-zero search requires the rational field");
    if (h.coeffs != CoeffDomain::PrimeSubring)
        throw InvalidInput("scan requires prime-subring (integer) coefficients");
    check_span_hypothesis(a.field(), h.generators, a.dim());
    const std::size_t g = h.generators.size();
    std::uint64_t tested = 0;
    for (mpz_class r = 0;; ++r) {
        // lex scan of the box [-r, r]^g, keeping only the shell max|x_i| = r
        std::vector<mpz_class> x(g, mpz_class(-r));
        for (;;) {
            bool on_shell = false;
            for (const auto& v : x)
                if (v == r || v == -r) { on_shell = true; break; }
            if (on_shell) {
                if (++tested > cap)
                    throw CapExceeded("char-zero search exceeded cap " + std::to_string(cap));
                AlgElem candidate = combine(a, h, x);
                if (is_unit(candidate)) return UnitHit{x, std::move(candidate)};
            }
            std::size_t i = x.size();
            bool carried_out = true;
            while (i-- > 0) {
                x[i] += 1;
                if (x[i] <= r) { carried_out = false; break; }
                x[i] = -r;
            }
            if (carried_out) break;
        }
    }
}

namespace {

// Subfield structure for the two supported cases: E = F, or E the prime
// field of an extension F. Elements of E are carried as E-field values;
// embed/coordinates translate against F.
struct SubfieldRel {
    Field e, f;
    std::size_t deg; // [F : E]

    static SubfieldRel make(const Field& e, const Field& f) {
        if (e == f) return SubfieldRel{e, f, 1};
        if (e.kind() == FieldKind::Prime && f.kind() == FieldKind::Extension &&
            e.characteristic() == f.characteristic())
            return SubfieldRel{e, f, f.degree()};
        throw InvalidInput("base field must be the whole field or its prime field");
    }

    Elem embed(const Elem& x) const {
        if (deg == 1) return x;
        return f.from_coeffs({x.residue()});
    }

    std::vector<Elem> coords(const Elem& x) const {
        if (deg == 1) return {x};
        std::vector<Elem> out;
        out.reserve(deg);
        for (const auto& c : x.coeffs()) out.push_back(e.from_integer(c));
        return out;
    }
};

} // namespace

std::vector<std::vector<Elem>> split_unit_basis(const Field& e, const Field& f,
                                                std::size_t n,
                                                const std::vector<std::vector<Elem>>& c) {
    const SubfieldRel rel = SubfieldRel::make(e, f);
    if (c.size() != n) throw InvalidInput("expected n basis vectors for W");
    for (const auto& v : c) {
        if (v.size() != n) throw InvalidInput("basis vector length mismatch");
        for (const auto& x : v)
            if (x.owner() != f) throw InvalidInput("basis vector owner mismatch");
    }
    if (n == 0) return {};

    // Coordinate functionals on the basis (c_j): row k lists the k-th
    // coordinate of each c_j. Their wedge is det != 0 iff C is an F-basis.
    std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n, f.zero()));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 0; j < n; ++j) rows[k][j] = c[j][k];
    if (det(Mat::from_rows(f, rows)).is_zero())
        throw InvalidInput("W (x)_E F -> F^n is not an isomorphism: C is F-dependent");

    std::vector<std::vector<Elem>> chosen(n); // rho_i as E-row-vectors on the dual basis
    for (std::size_t i = 0; i < n; ++i) {
        // W_i = W  ∩ ker(coordinate i): solve over E in the C-coordinates
        Mat constraints(e, rel.deg, n);
        for (std::size_t j = 0; j < n; ++j) {
            const auto cc = rel.coords(c[j][i]);
            for (std::size_t l = 0; l < rel.deg; ++l) constraints.at(l, j) = cc[l];
        }
        const auto wi = kernel_basis(constraints);
        // Functionals on W vanishing on W_i: annihilator of W_i in E^n
        std::vector<std::vector<Elem>> phi;
        if (wi.empty()) {
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Elem> dual(n, e.zero());
                dual[j] = e.one();
                phi.push_back(std::move(dual));
            }
        } else {
            phi = kernel_basis(Mat::from_rows(e, wi));
        }
        // First functional keeping the wedge with the remaining projections nonzero.
        bool found = false;
        for (const auto& rho : phi) {
            std::vector<Elem> row(n, f.zero());
            for (std::size_t j = 0; j < n; ++j) row[j] = rel.embed(rho[j]);
            std::vector<Elem> saved = std::move(rows[i]);
            rows[i] = std::move(row);
            if (!det(Mat::from_rows(f, rows)).is_zero()) {
                chosen[i] = rho;
                found = true;
                break;
            }
            rows[i] = std::move(saved);
        }
        if (!found)
            throw std::logic_error("no admissible functional despite the invariant");
    }

    // B = preimage of the standard basis under x -> (rho_i(x)): columns of the
    // inverse of the rho matrix, expressed back on C.
    Mat r(e, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r.at(i, j) = chosen[i][j];
    auto rinv = inverse(r);
    if (!rinv) throw std::logic_error("functional matrix is singular despite nonzero wedge");
    std::vector<std::vector<Elem>> b;
    b.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Elem> vec(n, f.zero());
        for (std::size_t j = 0; j < n; ++j) {
            const Elem s = rel.embed(rinv->at(j, k));
            if (s.is_zero()) continue;
            for (std::size_t t = 0; t < n; ++t) vec[t] += s * c[j][t];
        }
        b.push_back(std::move(vec));
    }
    return b;
}

bool verify_unit_basis(const Field& e, const Field& f, std::size_t n,
                       const std::vector<std::vector<Elem>>& b, std::uint64_t cap) {
    const SubfieldRel rel = SubfieldRel::make(e, f);
    if (!e.finite()) throw InvalidInput("exhaustive verification requires a finite base field");
    for (const auto& v : b)
        if (v.size() != n) throw InvalidInput("basis vector length mismatch");
    std::vector<Elem> nonzero;
    for (const auto& x : e.enumerate())
        if (!x.is_zero()) nonzero.push_back(x);
    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(),
               mpz_class(static_cast<unsigned long>(nonzero.size())).get_mpz_t(),
               static_cast<unsigned long>(b.size()));
    if (total > mpz_class(static_cast<unsigned long>(cap)))
        throw CapExceeded("verification over " + total.get_str() +
                          " combinations exceeds cap " + std::to_string(cap));
    if (b.empty()) return true;
    std::vector<std::size_t> idx(b.size(), 0);
    for (;;) {
        std::vector<Elem> sum(n, f.zero());
        for (std::size_t k = 0; k < b.size(); ++k) {
            const Elem s = rel.embed(nonzero[idx[k]]);
            for (std::size_t t = 0; t < n; ++t) sum[t] += s * b[k][t];
        }
        for (const auto& coord : sum)
            if (coord.is_zero()) return false;
        std::size_t i = b.size();
        bool done = true;
        while (i-- > 0) {
            if (++idx[i] < nonzero.size()) { done = false; break; }
            idx[i] = 0;
        }
        if (done) return true;
    }
}

} // namespace unital
