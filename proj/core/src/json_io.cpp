#include "umbral/json_io.hpp"

#include "umbral/errors.hpp"

namespace umbral {

namespace {

using nlohmann::json;

std::vector<Rational> scalars_from_json(const json& j, const char* what) {
    if (!j.is_array()) throw DomainError("ParseError", std::string(what) + " must be an array");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) {
        if (!item.is_string())
            throw DomainError("ParseError", std::string(what) + " entries must be strings");
        out.push_back(Rational::parse(item.get<std::string>()));
    }
    return out;
}

json scalars_to_json(const std::vector<Rational>& v) {
    json arr = json::array();
    for (const Rational& r : v) arr.push_back(r.str());
    return arr;
}

const json& expect(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw DomainError("ParseError", std::string("missing field '") + key + "'");
    return j.at(key);
}

std::size_t expect_size(const json& j, const char* key) {
    const json& field = expect(j, key);
    if (!field.is_number_unsigned() && !field.is_number_integer())
        throw DomainError("ParseError", std::string("field '") + key + "' must be an integer");
    const auto v = field.get<long long>();
    if (v < 0) throw DomainError("ParseError", std::string("field '") + key + "' must be >= 0");
    return static_cast<std::size_t>(v);
}

}  // namespace

json to_json(const Poly& p) { return json{{"coeffs", scalars_to_json(p.coeffs())}}; }

Poly poly_from_json(const json& j) { return Poly(scalars_from_json(expect(j, "coeffs"), "coeffs")); }

json to_json(const PowerSeries& f) {
    return json{{"order", f.order()}, {"coeffs", scalars_to_json(f.coeffs())}};
}

PowerSeries series_from_json(const json& j) {
    const std::size_t order = expect_size(j, "order");
    std::vector<Rational> coeffs = scalars_from_json(expect(j, "coeffs"), "coeffs");
    if (coeffs.size() != order + 1)
        throw DomainError("ParseError", "series needs order + 1 coefficients");
    return PowerSeries::from_coeffs(std::move(coeffs));
}

json to_json(const Seq& s) {
    return json{{"level", s.level()}, {"entries", scalars_to_json(s.entries())}};
}

Seq seq_from_json(const json& j) {
    const std::size_t level = expect_size(j, "level");
    std::vector<Rational> entries = scalars_from_json(expect(j, "entries"), "entries");
    if (entries.size() != level + 1)
        throw DomainError("ParseError", "sequence needs level + 1 entries");
    return Seq::from_entries(std::move(entries));
}

json to_json(const LowerTriMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t jx = 0; jx <= i; ++jx) row.push_back(m.at(i, jx).str());
        rows.push_back(std::move(row));
    }
    return json{{"size", m.size()}, {"rows", std::move(rows)}};
}

LowerTriMatrix matrix_from_json(const json& j) {
    const std::size_t size = expect_size(j, "size");
    const json& rows = expect(j, "rows");
    if (!rows.is_array() || rows.size() != size)
        throw DomainError("ParseError", "matrix needs 'size' rows");
    LowerTriMatrix m(size);
    for (std::size_t i = 0; i < size; ++i) {
        std::vector<Rational> row = scalars_from_json(rows.at(i), "rows");
        if (row.size() != i + 1)
            throw DomainError("ParseError", "row " + std::to_string(i) + " needs " +
                                                std::to_string(i + 1) + " entries");
        for (std::size_t jx = 0; jx <= i; ++jx) m.entry(i, jx) = row[jx];
    }
    return m;
}

json to_json(const DeltaOp& d) {
    if (d.is_named()) return json{{"named", d.name()}, {"level", d.level()}};
    return json{{"level", d.level()}, {"coeffs", scalars_to_json(d.coeffs())}};
}

DeltaOp delta_from_json(const json& j) {
    const std::size_t level = expect_size(j, "level");
    if (j.contains("named")) {
        const json& name = j.at("named");
        if (!name.is_string()) throw DomainError("ParseError", "'named' must be a string");
        return DeltaOp::from_name(name.get<std::string>(), level);
    }
    std::vector<Rational> coeffs = scalars_from_json(expect(j, "coeffs"), "coeffs");
    if (coeffs.size() != level)
        throw DomainError("ParseError", "delta operator needs 'level' coefficients");
    return DeltaOp::from_coeffs(std::move(coeffs));
}

json to_json(const Curve& c) {
    json comps = json::array();
    for (const Poly& p : c.components()) comps.push_back(to_json(p));
    return json{{"level", c.level()}, {"components", std::move(comps)}};
}

Curve curve_from_json(const json& j) {
    const std::size_t level = expect_size(j, "level");
    const json& comps = expect(j, "components");
    if (!comps.is_array() || comps.size() != level + 1)
        throw DomainError("ParseError", "curve needs level + 1 components");
    std::vector<Poly> polys;
    polys.reserve(comps.size());
    for (const auto& item : comps) polys.push_back(poly_from_json(item));
    return Curve::from_components(std::move(polys));
}

json to_json(const WronskianForm& w) {
    json cols = json::array();
    for (const Poly& p : w.columns) cols.push_back(to_json(p));
    return json{{"level", w.level}, {"columns", std::move(cols)}};
}

WronskianForm wronskian_from_json(const json& j) {
    WronskianForm w;
    w.level = expect_size(j, "level");
    const json& cols = expect(j, "columns");
    if (!cols.is_array() || cols.size() != w.level + 1)
        throw DomainError("ParseError", "Wronskian needs level + 1 columns");
    for (const auto& item : cols) w.columns.push_back(poly_from_json(item));
    return w;
}

json to_json(const PairingReport& r) {
    return json{{"value", r.value.str()}, {"constant", r.residual.is_zero()}};
}

json to_json(const VerificationReport& r) {
    return json{{"trials", r.trials},
                {"violations", r.violations},
                {"worst_margin", r.worst_margin},
                {"seed", r.seed},
                {"tol", r.tol}};
}

}  // namespace umbral
