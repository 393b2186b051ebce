#pragma once

#include <fstream>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "caper/borel.hpp"
#include "caper/builders.hpp"
#include "caper/complex.hpp"
#include "caper/diagram.hpp"
#include "caper/homology_class.hpp"

namespace caper {

using nlohmann::json;

namespace detail {

inline void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& what) {
    if (!obj.is_object()) throw ParseError(what + " must be a JSON object");
    for (const auto& [key, _] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) {
            if (key == a) {
                ok = true;
                break;
            }
        }
        if (!ok) throw ParseError("unknown key '" + key + "' in " + what);
    }
}

inline const json& require(const json& obj, const char* key, const std::string& what) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError("missing key '" + std::string(key) + "' in " + what);
    return *it;
}

inline std::string string_field(const json& v, const std::string& what) {
    if (!v.is_string()) throw ParseError(what + " must be a string");
    return v.get<std::string>();
}

}  // namespace detail

inline json load_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return load_json(ss.str());
}

// ---------------------------------------------------------------- field spec

inline FieldSpec field_spec_from_json(const json& j) {
    detail::check_keys(j, {"kind", "q"}, "field spec");
    std::string kind = detail::string_field(detail::require(j, "kind", "field spec"), "field kind");
    if (kind == "rational") {
        if (j.contains("q")) throw ParseError("rational field spec takes no 'q'");
        return FieldSpec::rational();
    }
    if (kind != "prime") throw ParseError("field kind must be 'prime' or 'rational'");
    const json& q = detail::require(j, "q", "field spec");
    if (!q.is_number_unsigned()) throw ParseError("field order 'q' must be a positive integer");
    return FieldSpec::prime(q.get<std::uint64_t>());
}

inline json field_spec_to_json(const FieldSpec& spec) {
    if (spec.kind == FieldSpec::Kind::Rational) return json{{"kind", "rational"}};
    return json{{"kind", "prime"}, {"q", spec.q}};
}

// ------------------------------------------------------------------- complex

/// The field a complex file declares; flags may override it downstream.
inline FieldSpec complex_field(const json& j) {
    detail::check_keys(j, {"field", "cells"}, "complex");
    return field_spec_from_json(detail::require(j, "field", "complex"));
}

/// Births and coefficients are exact strings; births of +inf are rejected.
template <Field F>
FilteredComplex<F> complex_from_json(const F& field, const json& j, bool births_required = true) {
    detail::check_keys(j, {"field", "cells"}, "complex");
    field_spec_from_json(detail::require(j, "field", "complex"));  // shape check
    const json& cells_json = detail::require(j, "cells", "complex");
    if (!cells_json.is_array()) throw ParseError("'cells' must be an array");
    std::vector<Cell<F>> cells;
    cells.reserve(cells_json.size());
    for (const json& cj : cells_json) {
        detail::check_keys(cj, {"id", "dim", "birth", "boundary"}, "cell");
        Cell<F> cell;
        cell.id = detail::string_field(detail::require(cj, "id", "cell"), "cell id");
        const json& dim = detail::require(cj, "dim", "cell");
        if (!dim.is_number_integer() || dim.get<std::int64_t>() < 0) {
            throw ParseError("cell '" + cell.id + "' needs a nonnegative integer 'dim'");
        }
        cell.dim = dim.get<int>();
        if (cj.contains("birth")) {
            cell.birth = Extended::parse(detail::string_field(cj["birth"], "birth of '" + cell.id + "'"));
            if (cell.birth.is_pos_inf()) throw ParseError("cell '" + cell.id + "' cannot be born at +inf");
        } else if (births_required) {
            throw ParseError("cell '" + cell.id + "' is missing 'birth'");
        }
        if (cj.contains("boundary")) {
            const json& bd = cj["boundary"];
            if (!bd.is_array()) throw ParseError("boundary of '" + cell.id + "' must be an array");
            for (const json& entry : bd) {
                if (!entry.is_array() || entry.size() != 2) {
                    throw ParseError("boundary entries of '" + cell.id + "' must be [face, coefficient] pairs");
                }
                cell.faces.emplace_back(detail::string_field(entry[0], "face id"),
                                        field.parse(detail::string_field(entry[1], "coefficient")));
            }
        }
        cells.push_back(std::move(cell));
    }
    return FilteredComplex<F>(field, std::move(cells));
}

template <Field F>
json complex_to_json(const FilteredComplex<F>& complex) {
    const F& field = complex.field();
    json cells = json::array();
    for (std::size_t i = 0; i < complex.size(); ++i) {
        const auto& c = complex.cell(i);
        json boundary = json::array();
        for (const auto& [fid, coeff] : c.faces) {
            boundary.push_back(json::array({fid, field.to_string(coeff)}));
        }
        cells.push_back(json{{"id", c.id}, {"dim", c.dim}, {"birth", c.birth.str()}, {"boundary", boundary}});
    }
    return json{{"field", field_spec_to_json(field.spec())}, {"cells", cells}};
}

// -------------------------------------------------------------------- action

template <Field F>
GroupAction<F> action_from_json(const F& field, const json& j) {
    detail::check_keys(j, {"k", "generator"}, "action");
    const json& k = detail::require(j, "k", "action");
    if (!k.is_number_unsigned() || k.get<std::uint64_t>() < 1) {
        throw ParseError("action 'k' must be a positive integer");
    }
    GroupAction<F> action;
    action.k = k.get<std::uint64_t>();
    const json& gen = detail::require(j, "generator", "action");
    if (!gen.is_array()) throw ParseError("'generator' must be an array");
    for (const json& entry : gen) {
        if (!entry.is_array() || entry.size() != 3) {
            throw ParseError("generator entries must be [source, target, coefficient] triples");
        }
        std::string src = detail::string_field(entry[0], "generator source");
        if (action.generator.count(src)) throw ParseError("generator lists '" + src + "' twice");
        action.generator.emplace(src, std::make_pair(detail::string_field(entry[1], "generator target"),
                                                     field.parse(detail::string_field(entry[2], "coefficient"))));
    }
    return action;
}

template <Field F>
json action_to_json(const F& field, const GroupAction<F>& action) {
    json gen = json::array();
    for (const auto& [src, img] : action.generator) {
        gen.push_back(json::array({src, img.first, field.to_string(img.second)}));
    }
    return json{{"k", action.k}, {"generator", gen}};
}

// --------------------------------------------------------------------- class

template <Field F>
HomologyClass<F> class_from_json(const F& field, const json& j) {
    detail::check_keys(j, {"level", "degree", "cycle"}, "class");
    HomologyClass<F> cls;
    cls.level = Extended::parse(detail::string_field(detail::require(j, "level", "class"), "class level"));
    const json& deg = detail::require(j, "degree", "class");
    if (!deg.is_number_integer() || deg.get<std::int64_t>() < 0) {
        throw ParseError("class 'degree' must be a nonnegative integer");
    }
    cls.degree = deg.get<int>();
    const json& cyc = detail::require(j, "cycle", "class");
    if (!cyc.is_array()) throw ParseError("'cycle' must be an array");
    for (const json& entry : cyc) {
        if (!entry.is_array() || entry.size() != 2) {
            throw ParseError("cycle entries must be [cell, coefficient] pairs");
        }
        cls.chain.emplace_back(detail::string_field(entry[0], "cycle cell id"),
                               field.parse(detail::string_field(entry[1], "coefficient")));
    }
    return cls;
}

// ---------------------------------------------------- vertex function / grid

template <Field F>
VertexFunction<F> vertex_function_from_json(const F& field, const json& j) {
    detail::check_keys(j, {"complex", "values"}, "vertex function");
    VertexFunction<F> out{complex_from_json(field, detail::require(j, "complex", "vertex function"),
                                            /*births_required=*/false),
                          {}};
    const json& values = detail::require(j, "values", "vertex function");
    if (!values.is_object()) throw ParseError("'values' must be an object");
    for (const auto& [vertex, value] : values.items()) {
        out.values.emplace(vertex, parse_rational(detail::string_field(value, "value of '" + vertex + "'")));
    }
    return out;
}

inline std::vector<std::vector<Rational>> grid_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("grid must be a 2D array of value strings");
    std::vector<std::vector<Rational>> out;
    for (const json& row : j) {
        if (!row.is_array()) throw ParseError("grid rows must be arrays");
        std::vector<Rational> r;
        for (const json& v : row) r.push_back(parse_rational(detail::string_field(v, "grid value")));
        out.push_back(std::move(r));
    }
    return out;
}

// --------------------------------------------------------------- diagram CSV

inline constexpr const char* kDiagramCsvHeader = "degree,birth,death";

/// Deterministic row order (degree, birth, death); death "inf" for +inf.
inline std::string diagram_to_csv(const PersistenceDiagram& dgm) {
    std::string out = std::string(kDiagramCsvHeader) + "\n";
    PersistenceDiagram sorted = dgm;
    sorted.sort();
    for (const auto& pt : sorted.points) {
        out += std::to_string(pt.degree) + "," + pt.birth.str() + "," + pt.death.str() + "\n";
    }
    return out;
}

inline PersistenceDiagram diagram_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kDiagramCsvHeader) {
        throw ParseError("diagram CSV must start with '" + std::string(kDiagramCsvHeader) + "'");
    }
    PersistenceDiagram dgm;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::size_t c1 = line.find(',');
        std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
            throw ParseError("line " + std::to_string(lineno) + ": expected 'degree,birth,death'");
        }
        DiagramPoint pt;
        try {
            pt.degree = std::stoi(line.substr(0, c1));
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": bad degree");
        }
        pt.birth = Extended::parse(line.substr(c1 + 1, c2 - c1 - 1));
        pt.death = Extended::parse(line.substr(c2 + 1));
        if (!(pt.birth < pt.death)) {
            throw ParseError("line " + std::to_string(lineno) + ": birth must precede death");
        }
        dgm.points.push_back(std::move(pt));
    }
    dgm.sort();
    return dgm;
}

}  // namespace caper
