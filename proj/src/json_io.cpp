#include "cyclic_shape/json_io.hpp"

#include <fstream>
#include <sstream>

#include "cyclic_shape/errors.hpp"

namespace cyclic_shape {

namespace {

const BigInt kSafeInteger = BigInt(1) << 53;

Json integer_json(const BigInt& x) {
    if (abs(x) < kSafeInteger) return Json(x.get_si());
    return Json(to_string(x));
}

Json integer_json(unsigned long x) { return integer_json(BigInt(x)); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json parse_json(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str());
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    throw ParseError("expected an integer or decimal string, got " + j.dump());
}

FactoredDiscriminant discriminant_from_json(const Json& j) {
    const Json& sign_j = member(j, "sign");
    const BigInt sign = bigint_from_json(sign_j);
    if (sign != 1 && sign != -1) throw ValidationError("sign must be 1 or -1");
    const Json& factors_j = member(j, "factors");
    if (!factors_j.is_array()) throw ParseError("\"factors\" must be an array");
    std::vector<PrimePower> factors;
    for (const auto& pair : factors_j) {
        if (!pair.is_array() || pair.size() != 2) throw ParseError("each factor must be a [prime, exponent] pair");
        const BigInt e = bigint_from_json(pair[1]);
        if (e < 1) throw ValidationError("exponents must be positive");
        if (!e.fits_uint_p()) throw ValidationError("exponent too large");
        factors.push_back({bigint_from_json(pair[0]), static_cast<unsigned>(e.get_ui())});
    }
    return FactoredDiscriminant(static_cast<int>(sign.get_si()), std::move(factors));
}

Json to_json(const FactoredDiscriminant& d) {
    Json factors = Json::array();
    for (const auto& f : d.factors()) factors.push_back(Json::array({integer_json(f.prime), integer_json(f.exponent)}));
    return Json{{"sign", d.sign()}, {"factors", std::move(factors)}};
}

IntMatrix matrix_from_json(const Json& j) {
    const Json& rows_j = member(j, "rows");
    if (!rows_j.is_array()) throw ParseError("\"rows\" must be an array");
    std::vector<std::vector<BigInt>> rows;
    for (const auto& row : rows_j) {
        if (!row.is_array()) throw ParseError("each row must be an array");
        auto& out = rows.emplace_back();
        for (const auto& x : row) out.push_back(bigint_from_json(x));
    }
    if (j.contains("dim")) {
        const BigInt dim = bigint_from_json(j.at("dim"));
        if (dim != static_cast<unsigned long>(rows.size())) throw ParseError("\"dim\" does not match the number of rows");
    }
    return IntMatrix::from_rows(rows);
}

Json to_json(const IntMatrix& M) {
    Json rows = Json::array();
    for (std::size_t i = 1; i <= M.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 1; j <= M.dim(); ++j) row.push_back(to_string(M(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"dim", M.dim()}, {"rows", std::move(rows)}};
}

Json to_json(const RamificationProfile& profile) {
    Json assignment = Json::object();
    for (const auto& [p, e] : profile.assignment()) assignment[to_string(p)] = e;
    Json w = Json::object(), f = Json::object();
    for (const auto& c : profile.classes()) {
        w[std::to_string(c.d)] = to_string(c.w);
        f[std::to_string(c.d)] = to_string(c.f);
    }
    return Json{{"m", profile.degree()},
                {"assignment", std::move(assignment)},
                {"w", std::move(w)},
                {"f", std::move(f)},
                {"odd_character", profile.odd_character()}};
}

Json to_json(const CoefficientTable& table) {
    Json a = Json::object(), prov = Json::object();
    for (const auto& [d, entry] : table.entries()) {
        a[std::to_string(d)] = to_string(entry.value);
        prov[std::to_string(d)] = to_string(entry.provenance);
    }
    Json out{{"a", std::move(a)}, {"provenance", std::move(prov)}};
    if (!table.literal_values().empty()) {
        Json lit = Json::object();
        for (const auto& [d, v] : table.literal_values()) lit[std::to_string(d)] = to_string(v);
        out["literal"] = std::move(lit);
    }
    if (!table.diagnostics().empty()) out["diagnostics"] = table.diagnostics();
    return out;
}

Json to_json(const IsometryReport& report) {
    Json out{{"verdict", to_string(report.verdict)}};
    if (report.witness) out["witness"] = to_json(*report.witness);
    if (report.verdict == Verdict::not_isometric) {
        out["invariant"] = report.invariant;
        out["left"] = report.left_value;
        out["right"] = report.right_value;
    }
    return out;
}

Json error_json(const Error& e) {
    const char* kind = "invariant";
    if (e.kind() == ErrorKind::validation) kind = "validation";
    if (e.kind() == ErrorKind::parse) kind = "parse";
    return Json{{"error", kind}, {"message", e.what()}, {"exit_code", e.exit_code()}};
}

}  // namespace cyclic_shape
