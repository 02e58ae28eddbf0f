#include "unital/identities.hpp"

#include <algorithm>
#include <set>

namespace unital {

namespace {

bool is_prime(const mpz_class& p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (mpz_class d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

} // namespace

ResidueSet make_residue_set(const mpz_class& p, std::vector<mpz_class> elements) {
    if (!is_prime(p)) throw InvalidInput("residue modulus is not prime");
    std::set<mpz_class> seen;
    for (const auto& x : elements) {
        if (x < 0 || x >= p) throw InvalidInput("residue out of range");
        if (!seen.insert(x).second) throw InvalidInput("repeated residue");
    }
    return ResidueSet{p, std::move(elements)};
}

SumsetReport cauchy_davenport_check(const ResidueSet& a, const ResidueSet& b) {
    if (a.p != b.p) throw InvalidInput("residue sets have different moduli");
    if (a.elements.empty() || b.elements.empty())
        throw InvalidInput("residue sets must be nonempty");
    std::set<mpz_class> sums;
    for (const auto& x : a.elements)
        for (const auto& y : b.elements) sums.insert((x + y) % a.p);
    SumsetReport rep;
    rep.sumset.assign(sums.begin(), sums.end());
    rep.size = rep.sumset.size();
    const mpz_class bound =
        std::min(mpz_class(a.elements.size() + b.elements.size() - 1), a.p);
    rep.bound = static_cast<std::size_t>(bound.get_ui());
    rep.holds = rep.size >= rep.bound;
    return rep;
}

CoefficientReport glynn_coefficient(const Mat& a, const mpz_class& e, std::uint64_t cap) {
    if (a.rows() != a.cols()) throw InvalidInput("matrix must be square");
    const Field& F = a.field();
    const mpz_class& p = F.characteristic();
    if (p == 0) throw InvalidInput("identity requires positive characteristic");
    // e must be p^m - 1 for some m >= 1
    mpz_class q = e + 1;
    if (q < p) throw InvalidInput("exponent must be p^m - 1 for some m >= 1");
    while (q > 1) {
        if (q % p != 0) throw InvalidInput("exponent must be p^m - 1 for some m >= 1");
        q /= p;
    }
    const std::size_t n = a.rows();
    CoefficientReport rep{F.one(), F.one(), false};
    if (n == 0) { rep.equal = true; return rep; }
    if (!e.fits_ulong_p()) throw CapExceeded("exponent too large to expand");
    const std::uint64_t eu = e.get_ui();
    // crude bound on the monomial count of the full expansion
    mpz_class bound = 1;
    for (std::size_t i = 1; i < n; ++i) {
        bound *= static_cast<unsigned long>(n) * eu + i;
        bound /= static_cast<unsigned long>(i);
    }
    if (bound > mpz_class(static_cast<unsigned long>(cap)))
        throw CapExceeded("expansion of about " + bound.get_str() +
                          " monomials exceeds cap " + std::to_string(cap));
    MultiPoly prod = MultiPoly::constant(F, n, F.one());
    for (std::size_t j = 0; j < n; ++j) {
        MultiPoly lin(F, n);
        for (std::size_t i = 0; i < n; ++i) {
            if (a.at(i, j).is_zero()) continue;
            ExpVec ev(n, 0);
            ev[i] = 1;
            lin.set_coefficient(ev, a.at(i, j));
        }
        prod = prod * lin.pow(eu);
    }
    ExpVec center(n, static_cast<std::uint32_t>(eu));
    rep.coefficient = prod.coefficient(center);
    rep.det_power = det(a).pow(e);
    rep.equal = rep.coefficient == rep.det_power;
    return rep;
}

Elem monomial_character_sum(const Field& k, const std::vector<mpz_class>& d) {
    if (!k.finite()) throw InvalidInput("character sum requires a finite field");
    for (const auto& di : d)
        if (di < 0) throw InvalidInput("exponents must be nonnegative");
    const auto elements = k.enumerate();
    Elem prod = k.one();
    for (const auto& di : d) {
        Elem s = k.zero();
        for (const auto& x : elements) {
            if (di == 0) s += k.one(); // x^0 = 1, including x = 0
            else if (!x.is_zero()) s += x.pow(di);
        }
        prod *= s;
    }
    return prod;
}

PowerSumReport power_sum_subgroup(const Field& f, const std::vector<std::vector<Elem>>& basis,
                                  const mpz_class& subfield_order, std::uint64_t cap) {
    const mpz_class& p = f.characteristic();
    if (p == 0) throw InvalidInput("power sum requires positive characteristic");
    const std::size_t n = basis.size();
    for (const auto& b : basis)
        if (b.size() != n) throw InvalidInput("basis vectors must have length n");
    Mat bm(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) bm.at(i, j) = basis[i][j];
    const Elem d = n ? det(bm) : f.one();
    if (n && d.is_zero()) throw InvalidInput("vectors do not form a basis of F^n");

    // coefficient subfield: the prime field by default
    mpz_class q = subfield_order == 0 ? p : subfield_order;
    std::vector<Elem> k_elements;
    if (q == p) {
        for (mpz_class i = 0; i < p; ++i) k_elements.push_back(f.from_integer(i));
    } else {
        mpz_class t = q;
        while (t > 1) {
            if (t % p != 0) throw InvalidInput("subfield order must be a power of p");
            t /= p;
        }
        if (!f.finite() || f.cardinality() < q)
            throw InvalidInput("subfield order exceeds the field");
        for (const auto& x : f.enumerate())
            if (x.pow(q) == x) k_elements.push_back(x);
        if (mpz_class(static_cast<unsigned long>(k_elements.size())) != q)
            throw InvalidInput("field has no subfield of the given order");
    }

    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n));
    if (total > mpz_class(static_cast<unsigned long>(cap)))
        throw CapExceeded("span enumeration of " + total.get_str() +
                          " points exceeds cap " + std::to_string(cap));

    const mpz_class exp = q - 1;
    Elem lhs = f.zero();
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        std::vector<Elem> y(n, f.zero());
        for (std::size_t i = 0; i < n; ++i) {
            if (k_elements[idx[i]].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) y[j] += k_elements[idx[i]] * basis[i][j];
        }
        Elem term = f.one();
        for (const auto& c : y) term *= c.pow(exp);
        lhs += term;
        std::size_t i = n;
        bool done = true;
        while (i-- > 0) {
            if (++idx[i] < k_elements.size()) { done = false; break; }
            idx[i] = 0;
        }
        if (done) break;
    }
    Elem rhs = d.pow(exp);
    if (n % 2 == 1) rhs = -rhs;
    PowerSumReport rep{lhs, rhs, lhs == rhs};
    return rep;
}

} // namespace unital
