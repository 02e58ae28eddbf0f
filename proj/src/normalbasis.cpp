#include "unital/normalbasis.hpp"

namespace unital {

namespace {

// First irreducible monic polynomial of degree d over F_p, by counting
// coefficient vectors with the constant term fastest.
std::vector<mpz_class> first_irreducible(const mpz_class& p, std::size_t d) {
    std::vector<mpz_class> coeffs(d + 1, mpz_class(0));
    coeffs[d] = 1;
    for (;;) {
        try {
            Field::extension(p, coeffs); // validates irreducibility
            return coeffs;
        } catch (const InvalidInput&) {
        }
        std::size_t i = 0;
        for (; i < d; ++i) {
            coeffs[i] += 1;
            if (coeffs[i] < p) break;
            coeffs[i] = 0;
        }
        if (i == d)
            throw std::logic_error("no irreducible polynomial found"); // cannot happen
    }
}

std::vector<std::vector<std::size_t>> cyclic_table(std::size_t m) {
    std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) t[i][j] = (i + j) % m;
    return t;
}

} // namespace

GaloisCtx GaloisCtx::make(const mpz_class& p, std::size_t e, std::size_t m,
                          std::vector<mpz_class> modulus) {
    if (e == 0 || m == 0) throw InvalidInput("tower degrees must be at least 1");
    auto d = std::make_shared<detail::GaloisData>();
    d->p = p;
    d->e = e;
    d->m = m;
    mpz_pow_ui(d->q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e));
    const std::size_t top_deg = e * m;
    d->prime = Field::prime(p);
    if (top_deg == 1) {
        d->top = d->prime;
        if (!modulus.empty()) throw InvalidInput("prime top field takes no modulus");
    } else {
        if (modulus.empty()) modulus = first_irreducible(p, top_deg);
        d->top = Field::extension(p, std::move(modulus));
        if (d->top.degree() != top_deg)
            throw InvalidInput("modulus degree must equal e*m");
    }

    // x -> x^q as an F_p-linear map, then its powers
    const std::size_t n = top_deg;
    auto to_coords = [&](const Elem& x) {
        std::vector<Elem> out;
        out.reserve(n);
        if (d->top.kind() == FieldKind::Prime) {
            out.push_back(x);
        } else {
            for (const auto& c : x.coeffs()) out.push_back(d->prime.from_integer(c));
        }
        return out;
    };
    Mat frob(d->prime, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Elem tj = d->top.kind() == FieldKind::Prime
                      ? d->top.one()
                      : d->top.from_coeffs([&] {
                            std::vector<mpz_class> c(j + 1, mpz_class(0));
                            c[j] = 1;
                            return c;
                        }());
        const auto col = to_coords(tj.pow(d->q));
        for (std::size_t i = 0; i < n; ++i) frob.at(i, j) = col[i];
    }
    d->frob_powers.reserve(m);
    Mat acc = Mat::identity(d->prime, n);
    for (std::size_t j = 0; j < m; ++j) {
        d->frob_powers.push_back(acc);
        acc = frob * acc;
    }
    // order of Frobenius is exactly m (acc is now frob^m)
    if (acc != Mat::identity(d->prime, n))
        throw InvalidInput("Frobenius power q^m does not fix the top field");
    for (std::size_t j = 1; j < m; ++j)
        if (d->frob_powers[j] == d->frob_powers[0])
            throw InvalidInput("Frobenius has order below m; tower is inconsistent");

    // F_p-basis of E = fixed field of x -> x^q: kernel of (frob - id)
    Mat fixed = frob - Mat::identity(d->prime, n);
    const auto ker = kernel_basis(fixed);
    if (ker.size() != e)
        throw InvalidInput("fixed field of Frobenius has unexpected dimension");
    const auto monomials = [&](std::size_t idx) {
        if (d->top.kind() == FieldKind::Prime) return d->top.one();
        std::vector<mpz_class> c(idx + 1, mpz_class(0));
        c[idx] = 1;
        return d->top.from_coeffs(c);
    };
    for (const auto& v : ker) {
        Elem x = d->top.zero();
        for (std::size_t i = 0; i < n; ++i) {
            if (v[i].is_zero()) continue;
            x += d->top.from_integer(v[i].residue()) * monomials(i);
        }
        d->base_fp_basis.push_back(std::move(x));
    }

    d->group_ring = Algebra::group_ring(d->top, cyclic_table(m));

    // spot validation at enumerable scale: sigma fixes exactly q elements
    mpz_class size;
    mpz_pow_ui(size.get_mpz_t(), d->q.get_mpz_t(), static_cast<unsigned long>(m));
    if (size <= 4096) {
        std::size_t fixed_count = 0;
        for (const auto& x : d->top.enumerate())
            if (x.pow(d->q) == x) ++fixed_count;
        if (mpz_class(static_cast<unsigned long>(fixed_count)) != d->q)
            throw InvalidInput("Frobenius fixed field has wrong cardinality");
    }
    return GaloisCtx(std::move(d));
}

Elem GaloisCtx::conjugate(const Elem& alpha, std::size_t j) const {
    if (alpha.owner() != d_->top) throw InvalidInput("element is not in the top field");
    j %= d_->m;
    if (j == 0) return alpha;
    const auto col = d_->frob_powers[j].apply(fp_coords(alpha));
    if (d_->top.kind() == FieldKind::Prime) return col[0];
    std::vector<mpz_class> coeffs;
    coeffs.reserve(col.size());
    for (const auto& c : col) coeffs.push_back(c.residue());
    return d_->top.from_coeffs(coeffs);
}

std::vector<Elem> GaloisCtx::fp_coords(const Elem& alpha) const {
    std::vector<Elem> out;
    if (d_->top.kind() == FieldKind::Prime) {
        out.push_back(d_->prime.from_integer(alpha.residue()));
    } else {
        out.reserve(alpha.coeffs().size());
        for (const auto& c : alpha.coeffs()) out.push_back(d_->prime.from_integer(c));
    }
    return out;
}

AlgElem phi_map(const GaloisCtx& ctx, const Elem& alpha) {
    const std::size_t m = ctx.group_order();
    std::vector<Elem> coords;
    coords.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
        coords.push_back(ctx.conjugate(alpha, (m - j) % m)); // tau^{-1} alpha at tau = sigma^j
    return ctx.group_ring().element(std::move(coords));
}

bool normal_generator_via_group_ring(const GaloisCtx& ctx, const Elem& alpha) {
    return is_unit(phi_map(ctx, alpha));
}

bool normal_generator_via_rank(const GaloisCtx& ctx, const Elem& alpha) {
    // E-independence of the conjugates is F_p-independence of the products
    // (F_p-basis of E) x (conjugates).
    const std::size_t n = ctx.base_degree() * ctx.group_order();
    std::vector<std::vector<Elem>> rows;
    rows.reserve(n);
    for (std::size_t j = 0; j < ctx.group_order(); ++j) {
        const Elem conj = ctx.conjugate(alpha, j);
        for (const auto& b : ctx.base_fp_basis())
            rows.push_back(ctx.fp_coords(b * conj));
    }
    return rank(Mat::from_rows(ctx.prime_field(), rows)) == n;
}

bool is_normal_generator(const GaloisCtx& ctx, const Elem& alpha) {
    const bool via_ring = normal_generator_via_group_ring(ctx, alpha);
    const bool via_rank = normal_generator_via_rank(ctx, alpha);
    if (via_ring != via_rank)
        throw std::logic_error("normal basis criteria disagree; context is inconsistent");
    return via_ring;
}

NormalGeneratorHit find_normal_generator(const GaloisCtx& ctx,
                                         const std::vector<Elem>& generators,
                                         std::uint64_t cap) {
    if (generators.empty()) throw InvalidInput("subgroup has no generators");
    for (const auto& g : generators)
        if (g.owner() != ctx.top_field())
            throw InvalidInput("generator is not in the top field");
    // spanning F over E means the products (E-basis) x (generators) span over F_p
    const std::size_t n = ctx.base_degree() * ctx.group_order();
    std::vector<std::vector<Elem>> rows;
    for (const auto& g : generators)
        for (const auto& b : ctx.base_fp_basis()) rows.push_back(ctx.fp_coords(b * g));
    if (rank(Mat::from_rows(ctx.prime_field(), rows)) != n)
        throw InvalidInput("generators do not span F over the base field");

    mpz_class total;
    mpz_pow_ui(total.get_mpz_t(), ctx.p().get_mpz_t(),
               static_cast<unsigned long>(generators.size()));
    if (total > mpz_class(static_cast<unsigned long>(cap)))
        throw CapExceeded("scan over " + total.get_str() + " combinations exceeds cap " +
                          std::to_string(cap));

    std::vector<mpz_class> x(generators.size(), mpz_class(0));
    for (;;) {
        Elem alpha = ctx.top_field().zero();
        for (std::size_t k = 0; k < x.size(); ++k) {
            if (x[k] == 0) continue;
            alpha += ctx.top_field().from_integer(x[k]) * generators[k];
        }
        if (is_normal_generator(ctx, alpha)) return NormalGeneratorHit{x, std::move(alpha)};
        std::size_t i = x.size();
        bool done = true;
        while (i-- > 0) {
            x[i] += 1;
            if (x[i] < ctx.p()) { done = false; break; }
            x[i] = 0;
        }
        if (done) break;
    }
    // unreachable: the normal basis theorem guarantees a hit for spanning H
    throw std::logic_error("exhausted a spanning subgroup without a normal generator");
}

} // namespace unital
