#include "cohann/serialize.hpp"

#include "cohann/errors.hpp"

#include <fstream>
#include <sstream>

namespace cohann {

namespace {

Json matrix_to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m.to_strings()) rows.push_back(row);
    return rows;
}

PolyMatrix matrix_from_json(const Json& j, const Variables& vars, const char* name) {
    if (!j.is_array()) throw ParseError(std::string("\"") + name + "\" must be an array of rows");
    std::vector<std::vector<Polynomial>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError(std::string("\"") + name + "\" rows must be arrays");
        std::vector<Polynomial> r;
        for (const auto& cell : row) {
            if (!cell.is_string()) throw ParseError(std::string("\"") + name + "\" entries must be strings");
            r.push_back(parse_polynomial(cell.get<std::string>(), vars));
        }
        rows.push_back(std::move(r));
    }
    for (const auto& r : rows)
        if (r.size() != rows.size()) throw ParseError(std::string("\"") + name + "\" must be square");
    if (rows.empty()) return PolyMatrix(0, 0, vars);
    return PolyMatrix(vars, rows);
}

Variables vars_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("\"vars\" must be an array of names");
    std::vector<std::string> names;
    for (const auto& v : j) {
        if (!v.is_string()) throw ParseError("\"vars\" must contain strings");
        names.push_back(v.get<std::string>());
    }
    try {
        return Variables(std::move(names));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw ParseError(std::string("field \"") + key + "\" must be a string");
    return v.get<std::string>();
}

}  // namespace

Json mf_to_json(const MatrixFactorization& m) {
    Json j;
    j["vars"] = m.vars().names();
    j["f"] = m.f().to_string();
    j["A"] = matrix_to_json(m.a());
    j["B"] = matrix_to_json(m.b());
    j["label"] = m.label();
    return j;
}

MatrixFactorization mf_from_json(const Json& j) {
    Variables vars = vars_from_json(field(j, "vars"));
    Polynomial f = parse_polynomial(string_field(j, "f"), vars);
    PolyMatrix a = matrix_from_json(field(j, "A"), vars, "A");
    std::string label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "";
    const Json& b = field(j, "B");
    try {
        if (b.is_string()) {
            if (b.get<std::string>() != "adjugate") throw ParseError("\"B\" must be a matrix or \"adjugate\"");
            return adjugate_partner(a, f, label);
        }
        return MatrixFactorization::validate(a, matrix_from_json(b, vars, "B"), f, label);
    } catch (const ValidationError& e) {
        throw ValidationError((label.empty() ? std::string("factorization") : "entry '" + label + "'") + ": " + e.what());
    }
}

Json catalog_to_json(const Catalog& c) {
    Json j;
    j["f"] = c.f.to_string();
    j["vars"] = c.vars().names();
    j["complete"] = c.complete;
    j["entries"] = Json::array();
    for (const auto& m : c.entries) j["entries"].push_back(mf_to_json(m));
    if (!c.trivial_entries.empty()) {
        j["trivial"] = Json::array();
        for (const auto& m : c.trivial_entries) j["trivial"].push_back(mf_to_json(m));
    }
    return j;
}

Catalog catalog_from_json(const Json& j) {
    Catalog c;
    Variables vars = vars_from_json(field(j, "vars"));
    c.f = parse_polynomial(string_field(j, "f"), vars);
    const Json& complete = field(j, "complete");
    if (!complete.is_boolean()) throw ParseError("\"complete\" must be a boolean");
    c.complete = complete.get<bool>();
    const Json& entries = field(j, "entries");
    if (!entries.is_array()) throw ParseError("\"entries\" must be an array");
    if (entries.empty()) throw ValidationError("catalog has no entries");
    auto read_entry = [&](const Json& e) {
        MatrixFactorization m = mf_from_json(e);
        Polynomial f = c.f;
        if (!(m.vars() == vars) || !(m.f() == f))
            throw ValidationError("entry '" + m.label() + "' is not a factorization of the catalog polynomial");
        return m;
    };
    for (const auto& e : entries) c.entries.push_back(read_entry(e));
    if (j.contains("trivial")) {
        if (!j.at("trivial").is_array()) throw ParseError("\"trivial\" must be an array");
        for (const auto& e : j.at("trivial")) c.trivial_entries.push_back(read_entry(e));
    }
    return c;
}

Json ideal_to_json(const TruncatedIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators) gens.push_back(g.to_string());
    Json j;
    j["generators"] = gens;
    j["dim_quotient"] = ideal.dim_quotient();
    j["truncation"] = ideal.truncation();
    j["stabilized"] = ideal.stabilized;
    return j;
}

Json certificate_to_json(const HomotopyCertificate& cert) {
    Json j;
    j["r"] = cert.r.to_string();
    j["g"] = matrix_to_json(cert.g);
    j["h"] = matrix_to_json(cert.h);
    return j;
}

Json report_to_json(const InvariantReport& report) {
    auto source = [](Provenance p) { return p == Provenance::computed ? "computed" : "supplied"; };
    Json j;
    j["polynomial"] = report.polynomial;
    j["mu"] = report.mu;
    j["delta"] = report.delta;
    j["branches"] = report.branches;
    j["mj_holds"] = report.mj_holds;
    j["truncation"] = report.truncation;
    j["suspensions"] = report.suspensions;
    j["sources"] = {{"mu", source(report.mu_source)},
                    {"delta", source(report.delta_source)},
                    {"branches", source(report.branches_source)}};
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace cohann
