#include "unital/field.hpp"

#include <algorithm>
#include <sstream>

namespace unital {

namespace {

bool is_prime_trial_division(const mpz_class& p) {
    if (p < 2) return false;
    if (p == 2 || p == 3) return true;
    if (p % 2 == 0) return false;
    mpz_class d = 3;
    while (d * d <= p) {
        if (p % d == 0) return false;
        d += 2;
    }
    return true;
}

mpz_class mod_p(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()); // always nonnegative
    return r;
}

mpz_class inv_mod_p(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()) == 0)
        throw InvalidInput("division by zero in F_p");
    return r;
}

using Poly = std::vector<mpz_class>; // dense, low-to-high, over F_p

void poly_trim(Poly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mul_mod_p(const Poly& a, const Poly& b, const mpz_class& p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            c[i + j] = mod_p(c[i + j] + a[i] * b[j], p);
        }
    }
    poly_trim(c);
    return c;
}

// Remainder of a modulo monic f.
Poly poly_rem_monic(Poly a, const Poly& f, const mpz_class& p) {
    const std::size_t df = f.size() - 1;
    poly_trim(a);
    while (a.size() > df) {
        const mpz_class lead = a.back();
        const std::size_t shift = a.size() - 1 - df;
        if (lead != 0) {
            for (std::size_t i = 0; i < f.size(); ++i)
                a[shift + i] = mod_p(a[shift + i] - lead * f[i], p);
        }
        a.pop_back();
        poly_trim(a);
    }
    return a;
}

// General division: returns remainder of a mod b (b nonzero, not necessarily monic).
Poly poly_rem(Poly a, Poly b, const mpz_class& p) {
    poly_trim(a);
    poly_trim(b);
    const mpz_class lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
        const mpz_class q = mod_p(a.back() * lead_inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = mod_p(a[shift + i] - q * b[i], p);
        poly_trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, const mpz_class& p) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) { // make monic
        const mpz_class s = inv_mod_p(a.back(), p);
        for (auto& c : a) c = mod_p(c * s, p);
    }
    return a;
}

// x^e mod f over F_p, f monic.
Poly poly_powmod(Poly base, mpz_class e, const Poly& f, const mpz_class& p) {
    Poly result{mpz_class(1)};
    base = poly_rem_monic(std::move(base), f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t()))
            result = poly_rem_monic(poly_mul_mod_p(result, base, p), f, p);
        base = poly_rem_monic(poly_mul_mod_p(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

Poly poly_eval_free_trim(const std::vector<mpz_class>& coeffs) {
    Poly f = coeffs;
    poly_trim(f);
    return f;
}

// Irreducibility over F_p: root scan for degree <= 3, otherwise
// gcd(f, t^{p^i} - t) = 1 for 1 <= i <= deg f / 2.
bool is_irreducible(const Poly& f, const mpz_class& p) {
    const std::size_t e = f.size() - 1;
    if (e == 1) return true;
    if (e <= 3) {
        for (mpz_class a = 0; a < p; ++a) {
            mpz_class v = 0;
            for (std::size_t i = f.size(); i-- > 0;) v = mod_p(v * a + f[i], p);
            if (v == 0) return false;
        }
        return true;
    }
    for (std::size_t i = 1; 2 * i <= e; ++i) {
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(i));
        Poly xq = poly_powmod({mpz_class(0), mpz_class(1)}, q, f, p);
        // xq - x
        if (xq.size() < 2) xq.resize(2, mpz_class(0));
        xq[1] = mod_p(xq[1] - 1, p);
        poly_trim(xq);
        Poly g = poly_gcd(f, xq, p);
        if (g.size() != 1) return false;
    }
    return true;
}

} // namespace

Field Field::prime(const mpz_class& p) {
    if (!is_prime_trial_division(p))
        throw InvalidInput("field characteristic is not prime: " + p.get_str());
    auto d = std::make_shared<detail::FieldData>();
    d->kind = FieldKind::Prime;
    d->p = p;
    return Field(std::move(d));
}

Field Field::extension(const mpz_class& p, std::vector<mpz_class> modulus) {
    if (!is_prime_trial_division(p))
        throw InvalidInput("field characteristic is not prime: " + p.get_str());
    for (auto& c : modulus) c = mod_p(c, p);
    Poly f = poly_eval_free_trim(modulus);
    if (f.size() < 2) throw InvalidInput("extension modulus must have degree >= 1");
    if (f.back() != 1) throw InvalidInput("extension modulus must be monic");
    if (!is_irreducible(f, p))
        throw InvalidInput("extension modulus is reducible over F_p");
    auto d = std::make_shared<detail::FieldData>();
    d->kind = FieldKind::Extension;
    d->p = p;
    d->modulus = std::move(f);
    d->ext_degree = d->modulus.size() - 1;
    return Field(std::move(d));
}

Field Field::rationals() {
    static const std::shared_ptr<const detail::FieldData> q = [] {
        auto d = std::make_shared<detail::FieldData>();
        d->kind = FieldKind::Rational;
        d->p = 0;
        return d;
    }();
    return Field(q);
}

mpz_class Field::cardinality() const {
    switch (d_->kind) {
    case FieldKind::Prime: return d_->p;
    case FieldKind::Extension: {
        mpz_class q;
        mpz_pow_ui(q.get_mpz_t(), d_->p.get_mpz_t(),
                   static_cast<unsigned long>(d_->ext_degree));
        return q;
    }
    case FieldKind::Rational: break;
    }
    throw InvalidInput("the rational field is infinite");
}

std::size_t Field::degree() const {
    return d_->kind == FieldKind::Extension ? d_->ext_degree : 1;
}

Elem Field::zero() const { return from_integer(0); }
Elem Field::one() const { return from_integer(1); }

Elem Field::from_integer(const mpz_class& n) const {
    switch (d_->kind) {
    case FieldKind::Prime: return Elem(*this, mod_p(n, d_->p));
    case FieldKind::Extension: {
        std::vector<mpz_class> v(d_->ext_degree, mpz_class(0));
        v[0] = mod_p(n, d_->p);
        return Elem(*this, std::move(v));
    }
    case FieldKind::Rational: return Elem(*this, mpq_class(n));
    }
    throw InvalidInput("unreachable field kind");
}

Elem Field::from_rational(const mpq_class& q) const {
    if (d_->kind != FieldKind::Rational)
        throw InvalidInput("fractional literal in positive characteristic");
    mpq_class r = q;
    r.canonicalize();
    return Elem(*this, std::move(r));
}

Elem Field::from_coeffs(const std::vector<mpz_class>& coeffs) const {
    if (d_->kind != FieldKind::Extension)
        throw InvalidInput("coefficient vector element requires an extension field");
    if (coeffs.size() > d_->ext_degree)
        throw InvalidInput("coefficient vector longer than extension degree");
    std::vector<mpz_class> v(d_->ext_degree, mpz_class(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) v[i] = mod_p(coeffs[i], d_->p);
    return Elem(*this, std::move(v));
}

std::vector<Elem> Field::enumerate() const {
    if (!finite()) throw InvalidInput("cannot enumerate an infinite field");
    std::vector<Elem> out;
    if (d_->kind == FieldKind::Prime) {
        out.reserve(mpz_get_ui(d_->p.get_mpz_t()));
        for (mpz_class a = 0; a < d_->p; ++a) out.push_back(Elem(*this, a));
        return out;
    }
    // Odometer over coefficient vectors, constant term fastest.
    std::vector<mpz_class> v(d_->ext_degree, mpz_class(0));
    for (;;) {
        out.push_back(Elem(*this, v));
        std::size_t i = 0;
        for (; i < v.size(); ++i) {
            v[i] += 1;
            if (v[i] < d_->p) break;
            v[i] = 0;
        }
        if (i == v.size()) break;
    }
    return out;
}

bool Field::operator==(const Field& other) const {
    if (d_ == other.d_) return true;
    return d_->kind == other.d_->kind && d_->p == other.d_->p &&
           d_->modulus == other.d_->modulus;
}

std::string Field::describe() const {
    switch (d_->kind) {
    case FieldKind::Prime: return "F_" + d_->p.get_str();
    case FieldKind::Extension:
        return "F_" + cardinality().get_str() + " = F_" + d_->p.get_str() +
               "[t]/(f), deg f = " + std::to_string(d_->ext_degree);
    case FieldKind::Rational: return "Q";
    }
    return "?";
}

void Elem::require_same_owner(const Elem& rhs) const {
    if (owner_.same_instance(rhs.owner_)) return;
    if (owner_ != rhs.owner_)
        throw InvalidInput("field elements have different owners");
}

bool Elem::is_zero() const {
    switch (owner_.kind()) {
    case FieldKind::Prime: return std::get<mpz_class>(repr_) == 0;
    case FieldKind::Extension: {
        for (const auto& c : std::get<std::vector<mpz_class>>(repr_))
            if (c != 0) return false;
        return true;
    }
    case FieldKind::Rational: return std::get<mpq_class>(repr_) == 0;
    }
    return false;
}

bool Elem::is_one() const {
    switch (owner_.kind()) {
    case FieldKind::Prime: return std::get<mpz_class>(repr_) == 1;
    case FieldKind::Extension: {
        const auto& v = std::get<std::vector<mpz_class>>(repr_);
        if (v[0] != 1) return false;
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] != 0) return false;
        return true;
    }
    case FieldKind::Rational: return std::get<mpq_class>(repr_) == 1;
    }
    return false;
}

Elem Elem::operator+(const Elem& rhs) const {
    require_same_owner(rhs);
    const mpz_class& p = owner_.characteristic();
    switch (owner_.kind()) {
    case FieldKind::Prime:
        return Elem(owner_, mod_p(std::get<mpz_class>(repr_) + std::get<mpz_class>(rhs.repr_), p));
    case FieldKind::Extension: {
        auto v = std::get<std::vector<mpz_class>>(repr_);
        const auto& w = std::get<std::vector<mpz_class>>(rhs.repr_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_p(v[i] + w[i], p);
        return Elem(owner_, std::move(v));
    }
    case FieldKind::Rational:
        return Elem(owner_, mpq_class(std::get<mpq_class>(repr_) + std::get<mpq_class>(rhs.repr_)));
    }
    throw InvalidInput("unreachable");
}

Elem Elem::operator-(const Elem& rhs) const {
    require_same_owner(rhs);
    const mpz_class& p = owner_.characteristic();
    switch (owner_.kind()) {
    case FieldKind::Prime:
        return Elem(owner_, mod_p(std::get<mpz_class>(repr_) - std::get<mpz_class>(rhs.repr_), p));
    case FieldKind::Extension: {
        auto v = std::get<std::vector<mpz_class>>(repr_);
        const auto& w = std::get<std::vector<mpz_class>>(rhs.repr_);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = mod_p(v[i] - w[i], p);
        return Elem(owner_, std::move(v));
    }
    case FieldKind::Rational:
        return Elem(owner_, mpq_class(std::get<mpq_class>(repr_) - std::get<mpq_class>(rhs.repr_)));
    }
    throw InvalidInput("unreachable");
}

Elem Elem::operator*(const Elem& rhs) const {
    require_same_owner(rhs);
    const mpz_class& p = owner_.characteristic();
    switch (owner_.kind()) {
    case FieldKind::Prime:
        return Elem(owner_, mod_p(std::get<mpz_class>(repr_) * std::get<mpz_class>(rhs.repr_), p));
    case FieldKind::Extension: {
        const auto& v = std::get<std::vector<mpz_class>>(repr_);
        const auto& w = std::get<std::vector<mpz_class>>(rhs.repr_);
        Poly prod = poly_mul_mod_p(v, w, p);
        prod = poly_rem_monic(std::move(prod), owner_.modulus(), p);
        prod.resize(owner_.degree(), mpz_class(0));
        return Elem(owner_, std::move(prod));
    }
    case FieldKind::Rational:
        return Elem(owner_, mpq_class(std::get<mpq_class>(repr_) * std::get<mpq_class>(rhs.repr_)));
    }
    throw InvalidInput("unreachable");
}

Elem Elem::operator-() const {
    return owner_.zero() - *this;
}

Elem Elem::inv() const {
    if (is_zero()) throw InvalidInput("inverse of zero");
    const mpz_class& p = owner_.characteristic();
    switch (owner_.kind()) {
    case FieldKind::Prime:
        return Elem(owner_, inv_mod_p(std::get<mpz_class>(repr_), p));
    case FieldKind::Extension: {
        // Extended Euclid in F_p[t]: s*a + t*f = gcd = 1.
        Poly r0 = owner_.modulus();
        Poly r1 = std::get<std::vector<mpz_class>>(repr_);
        poly_trim(r1);
        Poly s0{}, s1{mpz_class(1)};
        while (!r1.empty()) {
            // r0 = q*r1 + r2
            Poly q(r0.size() > r1.size() - 1 ? r0.size() - r1.size() + 1 : 1, mpz_class(0));
            Poly r2 = r0;
            const mpz_class lead_inv = inv_mod_p(r1.back(), p);
            while (r2.size() >= r1.size() && !r2.empty()) {
                const mpz_class c = mod_p(r2.back() * lead_inv, p);
                const std::size_t shift = r2.size() - r1.size();
                q[shift] = c;
                for (std::size_t i = 0; i < r1.size(); ++i)
                    r2[shift + i] = mod_p(r2[shift + i] - c * r1[i], p);
                poly_trim(r2);
            }
            poly_trim(q);
            // s2 = s0 - q*s1
            Poly qs = poly_mul_mod_p(q, s1, p);
            Poly s2 = s0;
            if (s2.size() < qs.size()) s2.resize(qs.size(), mpz_class(0));
            for (std::size_t i = 0; i < qs.size(); ++i) s2[i] = mod_p(s2[i] - qs[i], p);
            poly_trim(s2);
            r0 = std::move(r1); r1 = std::move(r2);
            s0 = std::move(s1); s1 = std::move(s2);
        }
        // r0 is the (nonzero constant) gcd; scale s0 by its inverse.
        const mpz_class scale = inv_mod_p(r0[0], p);
        for (auto& c : s0) c = mod_p(c * scale, p);
        s0.resize(owner_.degree(), mpz_class(0));
        return Elem(owner_, std::move(s0));
    }
    case FieldKind::Rational: {
        mpq_class r = 1 / std::get<mpq_class>(repr_);
        return Elem(owner_, std::move(r));
    }
    }
    throw InvalidInput("unreachable");
}

Elem Elem::operator/(const Elem& rhs) const {
    require_same_owner(rhs);
    return *this * rhs.inv();
}

Elem Elem::pow(const mpz_class& k) const {
    if (k < 0) return inv().pow(-k);
    if (owner_.kind() == FieldKind::Prime) {
        if (is_zero() && k == 0) return owner_.one();
        mpz_class r;
        mpz_powm(r.get_mpz_t(), std::get<mpz_class>(repr_).get_mpz_t(),
                 k.get_mpz_t(), owner_.characteristic().get_mpz_t());
        return Elem(owner_, std::move(r));
    }
    Elem result = owner_.one();
    Elem base = *this;
    mpz_class e = k;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

Elem Elem::frobenius(const mpz_class& q) const {
    if (owner_.characteristic() == 0)
        throw InvalidInput("frobenius undefined in characteristic zero");
    mpz_class r = q;
    const mpz_class& p = owner_.characteristic();
    while (r > 1) {
        if (r % p != 0) throw InvalidInput("frobenius exponent is not a power of p");
        r /= p;
    }
    if (r != 1) throw InvalidInput("frobenius exponent is not a power of p");
    return pow(q);
}

bool Elem::operator==(const Elem& rhs) const {
    require_same_owner(rhs);
    return repr_ == rhs.repr_;
}

const mpz_class& Elem::residue() const {
    if (owner_.kind() != FieldKind::Prime)
        throw InvalidInput("residue() requires a prime field element");
    return std::get<mpz_class>(repr_);
}

const std::vector<mpz_class>& Elem::coeffs() const {
    if (owner_.kind() != FieldKind::Extension)
        throw InvalidInput("coeffs() requires an extension field element");
    return std::get<std::vector<mpz_class>>(repr_);
}

const mpq_class& Elem::fraction() const {
    if (owner_.kind() != FieldKind::Rational)
        throw InvalidInput("fraction() requires a rational field element");
    return std::get<mpq_class>(repr_);
}

std::string Elem::str() const {
    std::ostringstream os;
    switch (owner_.kind()) {
    case FieldKind::Prime: os << std::get<mpz_class>(repr_); break;
    case FieldKind::Extension: {
        const auto& v = std::get<std::vector<mpz_class>>(repr_);
        os << "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ",";
            os << v[i];
        }
        os << "]";
        break;
    }
    case FieldKind::Rational: {
        const auto& q = std::get<mpq_class>(repr_);
        os << q.get_num() << "/" << q.get_den();
        break;
    }
    }
    return os.str();
}

bool elem_repr_less(const Elem& a, const Elem& b) {
    switch (a.owner().kind()) {
    case FieldKind::Prime: return a.residue() < b.residue();
    case FieldKind::Extension: {
        const auto& x = a.coeffs();
        const auto& y = b.coeffs();
        for (std::size_t i = x.size(); i-- > 0;) { // high coefficient most significant
            if (x[i] != y[i]) return x[i] < y[i];
        }
        return false;
    }
    case FieldKind::Rational: return a.fraction() < b.fraction();
    }
    return false;
}

} // namespace unital
