#include "char1/io.hpp"

#include <fstream>
#include <sstream>

#include "char1/errors.hpp"
#include "json.hpp"

namespace char1::io {

using nlohmann::json;

namespace {

json parse(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("malformed JSON: ") + e.what());
    }
}

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw ValidationError(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::int64_t as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) throw ValidationError(what + " must be an integer");
    return j.get<std::int64_t>();
}

PointedMonoid monoid_from(const json& j) {
    const int n = static_cast<int>(as_int(field(j, "size"), "size"));
    const auto& t = field(j, "table");
    if (!t.is_array()) throw ValidationError("table must be an array");
    std::vector<int> table;
    for (auto& v : t) table.push_back(static_cast<int>(as_int(v, "table entry")));
    return PointedMonoid(n, std::move(table), static_cast<int>(as_int(field(j, "zero"), "zero")),
                         static_cast<int>(as_int(field(j, "one"), "one")));
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << contents;
    if (!out) throw ValidationError("write failed: " + path);
}

SchemeData parse_scheme_json(const std::string& text) {
    const json j = parse(text);
    const auto& pts = field(j, "points");
    if (!pts.is_array()) throw ValidationError("points must be an array");
    SchemeData x;
    for (auto& p : pts) {
        const auto rank = as_int(field(p, "rank"), "rank");
        if (rank < 0) throw ValidationError("rank must be non-negative");
        std::vector<std::int64_t> orders;
        if (p.contains("torsion")) {
            if (!p["torsion"].is_array()) throw ValidationError("torsion must be an array");
            for (auto& m : p["torsion"]) {
                const auto v = as_int(m, "torsion order");
                if (v < 1) throw ValidationError("torsion orders must be positive");
                orders.push_back(v);
            }
        }
        x.points.push_back(FinAbGroup::from_cyclic_orders(static_cast<int>(rank), orders));
    }
    return x;
}

SchemeData read_scheme_json(const std::string& path) { return parse_scheme_json(read_file(path)); }

std::string scheme_to_json(const SchemeData& x) {
    json pts = json::array();
    for (auto& p : x.points) pts.push_back({{"rank", p.rank}, {"torsion", p.invariant_factors}});
    return json{{"points", pts}}.dump();
}

CurveModel parse_curve_json(const std::string& text) {
    const json j = parse(text);
    const auto& a = field(j, "a");
    if (!a.is_array() || a.size() != 5) throw ValidationError("a must list the five coefficients a1, a2, a3, a4, a6");
    std::vector<mpz_class> c;
    for (auto& v : a) {
        if (v.is_number_integer()) c.emplace_back(std::to_string(v.get<std::int64_t>()));
        else if (v.is_string()) {
            mpz_class z;
            if (z.set_str(v.get<std::string>(), 10) != 0) throw ValidationError("bad integer string in a");
            c.push_back(z);
        } else
            throw ValidationError("coefficients must be integers");
    }
    return CurveModel::from_coefficients(c);
}

CurveModel read_curve_json(const std::string& path) { return parse_curve_json(read_file(path)); }

PointedMonoid parse_monoid_json(const std::string& text) { return monoid_from(parse(text)); }

std::string monoid_to_json(const PointedMonoid& m) {
    return json{{"size", m.size()}, {"zero", m.zero()}, {"one", m.one()}, {"table", m.table()}}.dump();
}

std::vector<std::pair<std::string, PointedMonoid>> read_monoid_corpus(const std::string& path) {
    const json j = parse(read_file(path));
    const auto& list = field(j, "monoids");
    if (!list.is_array()) throw ValidationError("monoids must be an array");
    std::vector<std::pair<std::string, PointedMonoid>> out;
    for (auto& m : list) {
        const auto& name = field(m, "name");
        if (!name.is_string()) throw ValidationError("name must be a string");
        out.emplace_back(name.get<std::string>(), monoid_from(m));
    }
    return out;
}

}  // namespace char1::io
