#include "unital/json_io.hpp"

namespace unital {

namespace {

[[noreturn]] void bad(const std::string& what) { throw InvalidInput(what); }

const Json& need(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        bad(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

} // namespace

mpz_class integer_from_json(const Json& j) {
    if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return mpz_class(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            bad("not an integer: " + j.dump());
        }
    }
    bad("expected an integer, got " + j.dump());
}

Json integer_to_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

Field field_from_json(const Json& j) {
    const std::string kind = need(j, "kind").get<std::string>();
    if (kind == "prime") return Field::prime(integer_from_json(need(j, "p")));
    if (kind == "ext") {
        std::vector<mpz_class> modulus;
        for (const auto& c : need(j, "modulus")) modulus.push_back(integer_from_json(c));
        return Field::extension(integer_from_json(need(j, "p")), std::move(modulus));
    }
    if (kind == "rational") return Field::rationals();
    bad("unknown field kind \"" + kind + "\"");
}

Json field_to_json(const Field& f) {
    Json j;
    switch (f.kind()) {
    case FieldKind::Prime:
        j["kind"] = "prime";
        j["p"] = integer_to_json(f.characteristic());
        break;
    case FieldKind::Extension: {
        j["kind"] = "ext";
        j["p"] = integer_to_json(f.characteristic());
        Json mod = Json::array();
        for (const auto& c : f.modulus()) mod.push_back(integer_to_json(c));
        j["modulus"] = std::move(mod);
        break;
    }
    case FieldKind::Rational:
        j["kind"] = "rational";
        break;
    }
    return j;
}

Elem elem_from_json(const Field& f, const Json& j) {
    switch (f.kind()) {
    case FieldKind::Prime:
        return f.from_integer(integer_from_json(j));
    case FieldKind::Extension: {
        if (!j.is_array()) {
            // allow plain integers for prime-subfield values
            return f.from_integer(integer_from_json(j));
        }
        std::vector<mpz_class> coeffs;
        for (const auto& c : j) coeffs.push_back(integer_from_json(c));
        return f.from_coeffs(coeffs);
    }
    case FieldKind::Rational: {
        if (j.is_number_integer()) return f.from_integer(integer_from_json(j));
        if (j.is_string()) {
            const std::string s = j.get<std::string>();
            const auto slash = s.find('/');
            try {
                if (slash == std::string::npos) return f.from_integer(mpz_class(s));
                const mpz_class num(s.substr(0, slash));
                const mpz_class den(s.substr(slash + 1));
                if (den == 0) bad("zero denominator");
                return f.from_rational(mpq_class(num, den));
            } catch (const std::invalid_argument&) {
                bad("not a rational literal: " + s);
            }
        }
        bad("expected a rational literal, got " + j.dump());
    }
    }
    bad("unreachable field kind");
}

Json elem_to_json(const Elem& e) {
    switch (e.owner().kind()) {
    case FieldKind::Prime:
        return integer_to_json(e.residue());
    case FieldKind::Extension: {
        Json a = Json::array();
        for (const auto& c : e.coeffs()) a.push_back(integer_to_json(c));
        return a;
    }
    case FieldKind::Rational: {
        const mpq_class& q = e.fraction();
        return Json(q.get_num().get_str() + "/" + q.get_den().get_str());
    }
    }
    throw InvalidInput("unreachable field kind");
}

std::vector<Elem> vector_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) bad("expected an array of elements");
    std::vector<Elem> v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(elem_from_json(f, x));
    return v;
}

Json vector_to_json(const std::vector<Elem>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(elem_to_json(x));
    return a;
}

Mat matrix_from_json(const Field& f, const Json& j) {
    if (!j.is_array() || j.empty()) bad("expected a nonempty array of rows");
    std::vector<std::vector<Elem>> rows;
    for (const auto& r : j) rows.push_back(vector_from_json(f, r));
    return Mat::from_rows(f, rows);
}

Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_to_json(m.row(i)));
    return rows;
}

MultiPoly poly_from_json(const Field& f, const Json& j) {
    const std::size_t nvars = need(j, "nvars").get<std::size_t>();
    MultiPoly p(f, nvars);
    for (const auto& t : need(j, "terms")) {
        ExpVec e;
        for (const auto& x : need(t, "exp")) {
            const auto v = x.get<std::int64_t>();
            if (v < 0) bad("negative exponent");
            e.push_back(static_cast<std::uint32_t>(v));
        }
        if (e.size() != nvars) bad("exponent vector length mismatch");
        const Elem c = elem_from_json(f, need(t, "coef"));
        p.set_coefficient(e, p.coefficient(e) + c);
    }
    return p;
}

Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["coef"] = elem_to_json(c);
        terms.push_back(std::move(t));
    }
    Json j;
    j["nvars"] = p.nvars();
    j["terms"] = std::move(terms);
    return j;
}

Algebra algebra_from_json(const Json& j) {
    const Field f = field_from_json(need(j, "field"));
    if (j.contains("matrix"))
        return Algebra::matrix_algebra(f, need(j.at("matrix"), "m").get<std::size_t>());
    if (j.contains("split"))
        return Algebra::total_split(f, need(j.at("split"), "n").get<std::size_t>());
    if (j.contains("group")) {
        std::vector<std::vector<std::size_t>> table;
        for (const auto& row : need(j.at("group"), "table"))
            table.push_back(row.get<std::vector<std::size_t>>());
        return Algebra::group_ring(f, table);
    }
    const std::size_t n = need(j, "dim").get<std::size_t>();
    std::vector<Elem> tensor(n * n * n, f.zero());
    for (const auto& entry : need(j, "c")) {
        const std::size_t i = need(entry, "i").get<std::size_t>();
        const std::size_t jj = need(entry, "j").get<std::size_t>();
        const std::size_t k = need(entry, "k").get<std::size_t>();
        if (i >= n || jj >= n || k >= n) bad("structure index out of range");
        tensor[(i * n + jj) * n + k] = elem_from_json(f, need(entry, "coef"));
    }
    std::vector<Elem> one = vector_from_json(f, need(j, "one"));
    std::vector<std::string> names;
    if (j.contains("basis_names"))
        names = j.at("basis_names").get<std::vector<std::string>>();
    return Algebra::build(f, std::move(tensor), std::move(one), std::move(names));
}

Json algebra_to_json(const Algebra& a) {
    Json j;
    j["field"] = field_to_json(a.field());
    j["dim"] = a.dim();
    j["one"] = vector_to_json(a.one_coords());
    j["basis_names"] = a.basis_names();
    Json c = Json::array();
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t jj = 0; jj < a.dim(); ++jj)
            for (std::size_t k = 0; k < a.dim(); ++k) {
                const Elem& v = a.structure(i, jj, k);
                if (v.is_zero()) continue;
                Json entry;
                entry["i"] = i;
                entry["j"] = jj;
                entry["k"] = k;
                entry["coef"] = elem_to_json(v);
                c.push_back(std::move(entry));
            }
    j["c"] = std::move(c);
    return j;
}

Subgroup subgroup_from_json(const Field& f, const Json& j) {
    Subgroup h;
    for (const auto& g : need(j, "generators"))
        h.generators.push_back(vector_from_json(f, g));
    if (j.contains("coeffs")) {
        const std::string c = j.at("coeffs").get<std::string>();
        if (c == "prime")
            h.coeffs = CoeffDomain::PrimeSubring;
        else if (c == "subfield")
            h.coeffs = CoeffDomain::Subfield;
        else
            bad("unknown coefficient domain \"" + c + "\"");
    }
    return h;
}

Json subgroup_to_json(const Subgroup& h) {
    Json j;
    Json gens = Json::array();
    for (const auto& g : h.generators) gens.push_back(vector_to_json(g));
    j["generators"] = std::move(gens);
    j["coeffs"] = h.coeffs == CoeffDomain::PrimeSubring ? "prime" : "subfield";
    return j;
}

AModule module_from_json(const Json& j) {
    const Algebra a = algebra_from_json(need(j, "algebra"));
    const std::size_t d = need(j, "dim").get<std::size_t>();
    std::vector<Mat> action;
    for (const auto& m : need(j, "action")) {
        Mat mat = matrix_from_json(a.field(), m);
        if (mat.rows() != d || mat.cols() != d) bad("action matrix shape mismatch");
        action.push_back(std::move(mat));
    }
    return AModule::build(a, std::move(action));
}

Json module_to_json(const AModule& m) {
    Json j;
    j["algebra"] = algebra_to_json(m.algebra());
    j["dim"] = m.dim();
    Json action = Json::array();
    for (std::size_t i = 0; i < m.algebra().dim(); ++i)
        action.push_back(matrix_to_json(m.action(i)));
    j["action"] = std::move(action);
    return j;
}

GridSpec grid_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) bad("expected an array of grid sets");
    std::vector<std::vector<Elem>> sets;
    for (const auto& s : j) sets.push_back(vector_from_json(f, s));
    return make_grid(f, std::move(sets));
}

Json grid_to_json(const GridSpec& g) {
    Json j = Json::array();
    for (const auto& s : g.sets) j.push_back(vector_to_json(s));
    return j;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

} // namespace unital
