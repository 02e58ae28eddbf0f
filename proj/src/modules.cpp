#include "unital/modules.hpp"

namespace unital {

AModule AModule::build(const Algebra& a, std::vector<Mat> action) {
    auto d = std::make_shared<detail::ModuleData>();
    d->algebra = a;
    if (action.size() != a.dim())
        throw InvalidInput("need one action matrix per algebra basis element");
    const std::size_t dim = action.empty() ? 0 : action[0].rows();
    if (dim == 0) throw InvalidInput("module dimension must be at least 1");
    for (const auto& m : action) {
        if (m.rows() != dim || m.cols() != dim) throw InvalidInput("action matrix shape mismatch");
        if (m.field() != a.field()) throw InvalidInput("action matrix owner mismatch");
    }
    d->dim = dim;
    d->action = std::move(action);
    // rho(one) = identity
    Mat rho_one(a.field(), dim, dim);
    for (std::size_t i = 0; i < a.dim(); ++i) {
        if (a.one_coords()[i].is_zero()) continue;
        rho_one = rho_one + d->action[i].scaled(a.one_coords()[i]);
    }
    if (rho_one != Mat::identity(a.field(), dim))
        throw InvalidInput("action violates rho(one) = identity");
    // rho(e_i) rho(e_j) = sum_k c_ijk rho(e_k)
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < a.dim(); ++j) {
            Mat lhs = d->action[i] * d->action[j];
            Mat rhs(a.field(), dim, dim);
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const Elem& c = a.structure(i, j, k);
                if (c.is_zero()) continue;
                rhs = rhs + d->action[k].scaled(c);
            }
            if (lhs != rhs)
                throw InvalidInput("action violates the structure constants");
        }
    return AModule(std::move(d));
}

AModule AModule::regular(const Algebra& a) {
    std::vector<Mat> action;
    action.reserve(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) action.push_back(a.basis_left_mult(i));
    return build(a, std::move(action));
}

AModule AModule::direct_sum(const AModule& m, const AModule& n) {
    if (m.algebra() != n.algebra())
        throw InvalidInput("direct sum requires a common algebra");
    const Algebra& a = m.algebra();
    const std::size_t dm = m.dim(), dn = n.dim();
    std::vector<Mat> action;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        Mat blk(a.field(), dm + dn, dm + dn);
        for (std::size_t r = 0; r < dm; ++r)
            for (std::size_t c = 0; c < dm; ++c) blk.at(r, c) = m.action(i).at(r, c);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dn; ++c) blk.at(dm + r, dm + c) = n.action(i).at(r, c);
        action.push_back(std::move(blk));
    }
    return build(a, std::move(action));
}

Mat AModule::act(const AlgElem& x) const {
    if (x.owner() != algebra()) throw InvalidInput("module action owner mismatch");
    Mat m(field(), dim(), dim());
    for (std::size_t i = 0; i < algebra().dim(); ++i) {
        if (x.coords()[i].is_zero()) continue;
        m = m + action(i).scaled(x.coords()[i]);
    }
    return m;
}

bool AModule::operator==(const AModule& other) const {
    if (d_ == other.d_) return true;
    if (d_->algebra != other.d_->algebra || d_->dim != other.d_->dim) return false;
    for (std::size_t i = 0; i < d_->action.size(); ++i)
        if (d_->action[i] != other.d_->action[i]) return false;
    return true;
}

std::vector<Mat> hom_space(const AModule& m, const AModule& n) {
    if (m.algebra() != n.algebra()) throw InvalidInput("hom space requires a common algebra");
    const Field& F = m.field();
    const std::size_t dm = m.dim(), dn = n.dim();
    const std::size_t unknowns = dn * dm; // h[r][c] -> r*dm + c
    const std::size_t na = m.algebra().dim();
    Mat sys(F, na * dn * dm, unknowns);
    std::size_t eq = 0;
    for (std::size_t i = 0; i < na; ++i) {
        // h * rho_M(e_i) - rho_N(e_i) * h = 0, entry (r, c)
        const Mat& rm = m.action(i);
        const Mat& rn = n.action(i);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) {
                for (std::size_t k = 0; k < dm; ++k)
                    sys.at(eq, r * dm + k) += rm.at(k, c);
                for (std::size_t k = 0; k < dn; ++k)
                    sys.at(eq, k * dm + c) -= rn.at(r, k);
                ++eq;
            }
    }
    std::vector<Mat> basis;
    for (const auto& v : kernel_basis(sys)) {
        Mat h(F, dn, dm);
        for (std::size_t r = 0; r < dn; ++r)
            for (std::size_t c = 0; c < dm; ++c) h.at(r, c) = v[r * dm + c];
        basis.push_back(std::move(h));
    }
    return basis;
}

namespace {

bool advance_mod_p(std::vector<mpz_class>& x, const mpz_class& p) {
    std::size_t i = x.size();
    while (i-- > 0) {
        x[i] += 1;
        if (x[i] < p) return true;
        x[i] = 0;
    }
    return false;
}

void check_scan_size(const mpz_class& p, std::size_t count, std::uint64_t cap) {
    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(count));
    if (total > mpz_class(static_cast<unsigned long>(cap)))
        throw CapExceeded("scan over " + total.get_str() + " combinations exceeds cap " +
                          std::to_string(cap));
}

Mat combine_mats(const Field& f, const std::vector<Mat>& basis,
                 const std::vector<mpz_class>& x, std::size_t rows, std::size_t cols) {
    Mat h(f, rows, cols);
    for (std::size_t k = 0; k < basis.size(); ++k) {
        if (x[k] == 0) continue;
        h = h + basis[k].scaled(f.from_integer(x[k]));
    }
    return h;
}

} // namespace

std::optional<GeneratorHit> find_generator(const AModule& m, const Subgroup& h,
                                           std::uint64_t cap) {
    if (h.coeffs != CoeffDomain::PrimeSubring)
        throw InvalidInput("generator scan requires prime-subring coefficients");
    const mpz_class& p = m.field().characteristic();
    if (p == 0) throw InvalidInput("generator scan requires positive characteristic");
    if (h.generators.empty()) throw InvalidInput("subgroup has no generators");
    for (const auto& g : h.generators)
        if (g.size() != m.dim()) throw InvalidInput("generator length mismatch");
    if (rank(Mat::from_rows(m.field(), h.generators)) != m.dim())
        throw InvalidInput("generators do not span the module");
    check_scan_size(p, h.generators.size(), cap);

    const std::size_t na = m.algebra().dim();
    std::vector<mpz_class> x(h.generators.size(), mpz_class(0));
    do {
        std::vector<Elem> v(m.dim(), m.field().zero());
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k] == 0) continue;
            const Elem s = m.field().from_integer(x[k]);
            for (std::size_t i = 0; i < m.dim(); ++i) v[i] += s * h.generators[k][i];
        }
        // A v spans M  <=>  the orbit vectors rho(e_i) v have full rank
        std::vector<std::vector<Elem>> orbit;
        orbit.reserve(na);
        for (std::size_t i = 0; i < na; ++i) orbit.push_back(m.action(i).apply(v));
        if (rank(Mat::from_rows(m.field(), orbit)) == m.dim())
            return GeneratorHit{x, std::move(v)};
    } while (advance_mod_p(x, p));
    return std::nullopt;
}

std::optional<Mat> find_isomorphism(const AModule& m, const AModule& n, std::uint64_t cap) {
    if (m.algebra() != n.algebra()) throw InvalidInput("isomorphism search requires a common algebra");
    const mpz_class& p = m.field().characteristic();
    if (p == 0) throw InvalidInput("isomorphism scan requires positive characteristic");
    if (m.dim() != n.dim()) return std::nullopt;
    const auto basis = hom_space(m, n);
    if (basis.empty()) return std::nullopt;
    check_scan_size(p, basis.size(), cap);
    std::vector<mpz_class> x(basis.size(), mpz_class(0));
    do {
        Mat h = combine_mats(m.field(), basis, x, n.dim(), m.dim());
        if (!det(h).is_zero()) return h;
    } while (advance_mod_p(x, p));
    return std::nullopt;
}

std::optional<SummandWitness> summand_test(const AModule& m, const AModule& n,
                                           std::uint64_t cap) {
    if (m.algebra() != n.algebra()) throw InvalidInput("summand test requires a common algebra");
    const mpz_class& p = m.field().characteristic();
    if (p == 0) throw InvalidInput("summand scan requires positive characteristic");
    const auto v = hom_space(m, n);
    const auto w = hom_space(n, m);
    if (v.empty() || w.empty()) return std::nullopt;
    check_scan_size(p, v.size() + w.size(), cap);
    std::vector<mpz_class> x(v.size() + w.size(), mpz_class(0));
    std::vector<mpz_class> xf(v.size()), xg(w.size());
    do {
        std::copy(x.begin(), x.begin() + v.size(), xf.begin());
        std::copy(x.begin() + v.size(), x.end(), xg.begin());
        Mat f = combine_mats(m.field(), v, xf, n.dim(), m.dim());
        Mat g = combine_mats(m.field(), w, xg, m.dim(), n.dim());
        // f g lies in End_A(N); invertibility there is matrix invertibility
        if (!det(f * g).is_zero()) return SummandWitness{std::move(f), std::move(g)};
    } while (advance_mod_p(x, p));
    return std::nullopt;
}

} // namespace unital
