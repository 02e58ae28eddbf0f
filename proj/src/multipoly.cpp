#include "unital/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace unital {

bool GrlexLess::operator()(const ExpVec& a, const ExpVec& b) const {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

MultiPoly::MultiPoly(Field field, std::size_t nvars)
    : field_(std::move(field)), nvars_(nvars) {}

MultiPoly MultiPoly::constant(const Field& field, std::size_t nvars, const Elem& c) {
    MultiPoly p(field, nvars);
    if (!c.is_zero()) p.terms_.emplace(ExpVec(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(const Field& field, std::size_t nvars, std::size_t index) {
    if (index >= nvars) throw InvalidInput("variable index out of range");
    MultiPoly p(field, nvars);
    ExpVec e(nvars, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), field.one());
    return p;
}

std::int64_t MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    // grlex order puts the top-degree terms last
    const ExpVec& e = terms_.rbegin()->first;
    return std::accumulate(e.begin(), e.end(), std::int64_t{0});
}

std::int64_t MultiPoly::degree_in(std::size_t var) const {
    if (var >= nvars_) throw InvalidInput("variable index out of range");
    std::int64_t d = -1;
    for (const auto& [e, c] : terms_) d = std::max<std::int64_t>(d, e[var]);
    return d;
}

Elem MultiPoly::coefficient(const ExpVec& exp) const {
    if (exp.size() != nvars_) throw InvalidInput("exponent vector length mismatch");
    auto it = terms_.find(exp);
    return it == terms_.end() ? field_.zero() : it->second;
}

void MultiPoly::set_coefficient(const ExpVec& exp, const Elem& c) {
    if (exp.size() != nvars_) throw InvalidInput("exponent vector length mismatch");
    if (c.is_zero())
        terms_.erase(exp);
    else
        terms_[exp] = c;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    if (nvars_ != rhs.nvars_ || field_ != rhs.field_)
        throw InvalidInput("polynomial owner mismatch");
    MultiPoly out = *this;
    for (const auto& [e, c] : rhs.terms_) {
        auto it = out.terms_.find(e);
        if (it == out.terms_.end()) {
            out.terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const { return *this + (-rhs); }

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(field_, nvars_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
    return out;
}

MultiPoly MultiPoly::scaled(const Elem& s) const {
    MultiPoly out(field_, nvars_);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_) {
        Elem v = c * s;
        if (!v.is_zero()) out.terms_.emplace(e, std::move(v));
    }
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    if (nvars_ != rhs.nvars_ || field_ != rhs.field_)
        throw InvalidInput("polynomial owner mismatch");
    MultiPoly out(field_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            ExpVec e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
            Elem v = ca * cb;
            if (v.is_zero()) continue;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(std::move(e), std::move(v));
            } else {
                it->second += v;
                if (it->second.is_zero()) out.terms_.erase(it);
            }
        }
    }
    return out;
}

MultiPoly MultiPoly::pow(std::uint64_t k) const {
    MultiPoly result = constant(field_, nvars_, field_.one());
    MultiPoly base = *this;
    while (k > 0) {
        if (k & 1) result = result * base;
        if (k >>= 1) base = base * base;
    }
    return result;
}

bool MultiPoly::operator==(const MultiPoly& rhs) const {
    return nvars_ == rhs.nvars_ && field_ == rhs.field_ && terms_ == rhs.terms_;
}

Elem MultiPoly::evaluate(const std::vector<Elem>& point) const {
    if (point.size() != nvars_) throw InvalidInput("evaluation point length mismatch");
    for (const auto& x : point)
        if (x.owner() != field_) throw InvalidInput("evaluation point owner mismatch");
    Elem acc = field_.zero();
    for (const auto& [e, c] : terms_) {
        Elem t = c;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            t *= point[i].pow(e[i]);
        }
        acc += t;
    }
    return acc;
}

MultiPoly MultiPoly::leading_form() const {
    MultiPoly out(field_, nvars_);
    const std::int64_t d = total_degree();
    if (d < 0) return out;
    for (const auto& [e, c] : terms_) {
        if (std::accumulate(e.begin(), e.end(), std::int64_t{0}) == d)
            out.terms_.emplace(e, c);
    }
    return out;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str();
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            os << "*X" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
        }
    }
    return os.str();
}

GridSpec make_grid(const Field& field, std::vector<std::vector<Elem>> sets) {
    for (const auto& s : sets) {
        for (std::size_t i = 0; i < s.size(); ++i) {
            if (s[i].owner() != field) throw InvalidInput("grid element owner mismatch");
            for (std::size_t j = i + 1; j < s.size(); ++j)
                if (s[i] == s[j]) throw InvalidInput("grid set contains a repeated element");
        }
    }
    return GridSpec{std::move(sets)};
}

MultiPoly reduce_mod_grid(const MultiPoly& g, const GridSpec& grid) {
    if (grid.nvars() != g.nvars()) throw InvalidInput("grid arity mismatch");
    const Field& F = g.field();
    MultiPoly r = g;
    for (std::size_t var = 0; var < grid.nvars(); ++var) {
        const auto& s = grid.sets[var];
        if (s.empty()) throw InvalidInput("empty grid set");
        const std::size_t m = s.size();
        // h = prod_{x in S_var} (X_var - x), univariate in X_var
        MultiPoly h = MultiPoly::constant(F, g.nvars(), F.one());
        for (const auto& x : s) {
            MultiPoly lin = MultiPoly::variable(F, g.nvars(), var) -
                            MultiPoly::constant(F, g.nvars(), x);
            h = h * lin;
        }
        for (;;) {
            const std::int64_t d = r.degree_in(var);
            if (d < static_cast<std::int64_t>(m)) break;
            // c = coefficient of X_var^d in r (a polynomial in the other variables)
            MultiPoly c(F, g.nvars());
            for (const auto& [e, coef] : r.terms()) {
                if (e[var] != static_cast<std::uint32_t>(d)) continue;
                ExpVec e2 = e;
                e2[var] = 0;
                c.set_coefficient(e2, coef);
            }
            MultiPoly shift(F, g.nvars());
            ExpVec se(g.nvars(), 0);
            se[var] = static_cast<std::uint32_t>(d - m);
            shift.set_coefficient(se, F.one());
            r = r - c * shift * h;
        }
    }
    return r;
}

CnCertificate cn_certify(const MultiPoly& g, const ExpVec& d, const GridSpec& grid) {
    if (d.size() != g.nvars()) throw InvalidInput("exponent vector length mismatch");
    if (grid.nvars() != g.nvars()) throw InvalidInput("grid arity mismatch");
    CnCertificate cert;
    std::vector<std::string> reasons;
    if (g.coefficient(d).is_zero())
        reasons.push_back("coefficient at the given exponent is zero");
    const std::int64_t dsum = std::accumulate(d.begin(), d.end(), std::int64_t{0});
    if (g.total_degree() != dsum)
        reasons.push_back("total degree " + std::to_string(g.total_degree()) +
                          " differs from exponent sum " + std::to_string(dsum));
    for (std::size_t i = 0; i < d.size(); ++i) {
        if (grid.sets[i].size() <= d[i])
            reasons.push_back("set " + std::to_string(i + 1) + " has " +
                              std::to_string(grid.sets[i].size()) +
                              " elements, needs more than " + std::to_string(d[i]));
    }
    cert.holds = reasons.empty();
    cert.reasons = std::move(reasons);
    return cert;
}

std::optional<std::vector<Elem>> cn_witness(const MultiPoly& g, const GridSpec& grid,
                                            std::uint64_t cap) {
    if (grid.nvars() != g.nvars()) throw InvalidInput("grid arity mismatch");
    mpz_class total = 1;
    for (const auto& s : grid.sets) {
        if (s.empty()) throw InvalidInput("empty grid set");
        total *= static_cast<unsigned long>(s.size());
    }
    if (total > mpz_class(static_cast<unsigned long>(cap)))
        throw CapExceeded("grid has " + total.get_str() + " points, cap is " +
                          std::to_string(cap));
    const std::size_t n = grid.nvars();
    std::vector<std::size_t> idx(n, 0);
    std::vector<Elem> point;
    for (;;) {
        point.clear();
        for (std::size_t i = 0; i < n; ++i) point.push_back(grid.sets[i][idx[i]]);
        if (!g.evaluate(point).is_zero()) return point;
        // advance odometer, last coordinate fastest (lex order over the grid)
        std::size_t i = n;
        while (i-- > 0) {
            if (++idx[i] < grid.sets[i].size()) break;
            idx[i] = 0;
            if (i == 0) return std::nullopt;
        }
        if (n == 0) return std::nullopt; // single empty point already tested
    }
}

MultiPoly linear_substitute(const MultiPoly& g, const Mat& b) {
    const std::size_t n = g.nvars();
    if (b.rows() != n || b.cols() != n) throw InvalidInput("substitution matrix shape mismatch");
    if (b.field() != g.field()) throw InvalidInput("substitution matrix owner mismatch");
    const Field& F = g.field();
    // image of X_j is sum_i X_i * b[i][j]
    std::vector<MultiPoly> image;
    image.reserve(n);
    for (std::size_t j = 0; j < n; ++j) {
        MultiPoly lin(F, n);
        for (std::size_t i = 0; i < n; ++i) {
            ExpVec e(n, 0);
            e[i] = 1;
            lin.set_coefficient(e, b.at(i, j));
        }
        image.push_back(std::move(lin));
    }
    // powers of each image, computed on demand
    std::vector<std::vector<MultiPoly>> powers(n);
    for (std::size_t j = 0; j < n; ++j)
        powers[j].push_back(MultiPoly::constant(F, n, F.one()));
    MultiPoly out(F, n);
    for (const auto& [e, c] : g.terms()) {
        MultiPoly term = MultiPoly::constant(F, n, c);
        for (std::size_t j = 0; j < n; ++j) {
            while (powers[j].size() <= e[j])
                powers[j].push_back(powers[j].back() * image[j]);
            if (e[j] > 0) term = term * powers[j][e[j]];
        }
        out = out + term;
    }
    return out;
}

bool has_cn_term(const MultiPoly& g, const mpz_class& p, std::uint32_t m) {
    if (g.field().characteristic() != p)
        throw InvalidInput("characteristic mismatch");
    if (g.is_zero()) return false;
    mpz_class bound;
    mpz_pow_ui(bound.get_mpz_t(), p.get_mpz_t(), m);
    const std::int64_t deg = g.total_degree();
    for (const auto& [e, c] : g.terms()) {
        if (std::accumulate(e.begin(), e.end(), std::int64_t{0}) != deg) continue;
        bool ok = true;
        for (auto d : e)
            if (mpz_class(d) >= bound) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

} // namespace unital
