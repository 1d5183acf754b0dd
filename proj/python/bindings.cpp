#include "bagdet/detbool.hpp"
#include "bagdet/h10.hpp"
#include "bagdet/hom.hpp"
#include "bagdet/parser.hpp"
#include "bagdet/pathdet.hpp"
#include "bagdet/serialize.hpp"
#include "bagdet/witness.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace bagdet;

namespace {

py::object json_to_py(const Json& j) {
    switch (j.type()) {
    case Json::value_t::null:
        return py::none();
    case Json::value_t::boolean:
        return py::bool_(j.get<bool>());
    case Json::value_t::number_integer:
        return py::int_(j.get<long long>());
    case Json::value_t::number_unsigned:
        return py::int_(j.get<unsigned long long>());
    case Json::value_t::number_float:
        return py::float_(j.get<double>());
    case Json::value_t::string:
        return py::str(j.get<std::string>());
    case Json::value_t::array: {
        py::list out;
        for (const Json& item : j)
            out.append(json_to_py(item));
        return out;
    }
    case Json::value_t::object: {
        py::dict out;
        for (const auto& [key, value] : j.items())
            out[py::str(key)] = json_to_py(value);
        return out;
    }
    default:
        return py::none();
    }
}

py::int_ big_int(const Int& x) {
    PyObject* obj = PyLong_FromString(x.get_str().c_str(), nullptr, 10);
    if (!obj)
        throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

std::vector<ConjunctiveQuery> parse_cq_views(const SchemaPtr& schema, const std::string& text) {
    std::vector<ConjunctiveQuery> out;
    for (UnionQuery& u : parse_query_text(schema, text)) {
        if (!u.is_single())
            throw std::invalid_argument("view '" + u.name() + "' is a union query");
        out.push_back(u.single());
    }
    return out;
}

ConjunctiveQuery parse_cq(const SchemaPtr& schema, const std::string& text) {
    UnionQuery u = parse_single_query_text(schema, text);
    if (!u.is_single())
        throw std::invalid_argument("query '" + u.name() + "' is a union query");
    return u.single();
}

py::dict decide_py(const std::string& schema_text, const std::string& query_text,
                   const std::string& views_text, bool synthesize) {
    SchemaPtr schema = parse_schema_text(schema_text);
    ConjunctiveQuery q = parse_cq(schema, query_text);
    std::vector<ConjunctiveQuery> views = parse_cq_views(schema, views_text);
    Verdict verdict = decide(views, q, synthesize);
    py::dict out = json_to_py(verdict_to_json(verdict));
    if (verdict.witness) {
        const WitnessPair& wp = *verdict.witness;
        py::dict w = json_to_py(witness_trace_json(wp));
        if (wp.d && wp.d_prime) {
            w["d"] = py::str(write_structure_text(*wp.d));
            w["d_prime"] = py::str(write_structure_text(*wp.d_prime));
        }
        out["witness"] = w;
    }
    return out;
}

py::list eval_py(const std::string& schema_text, const std::string& query_text,
                 const std::string& structure_text) {
    SchemaPtr schema = parse_schema_text(schema_text);
    Structure d = parse_structure_text(schema, structure_text);
    py::list out;
    for (const UnionQuery& q : parse_query_text(schema, query_text)) {
        py::dict entry;
        entry["query"] = py::str(q.name());
        entry["count"] = big_int(eval_ucq(q, d));
        out.append(entry);
    }
    return out;
}

py::dict decide_path_py(const std::string& query_word,
                        const std::vector<std::string>& view_words) {
    std::vector<std::string> all{query_word};
    all.insert(all.end(), view_words.begin(), view_words.end());
    SchemaPtr schema = infer_path_schema(all);
    PathQuery q = parse_path_word(schema, query_word);
    std::vector<PathQuery> views;
    for (const std::string& w : view_words)
        views.push_back(parse_path_word(schema, w));
    py::dict out;
    auto nodes = path::reach_path(q, views);
    out["determined"] = nodes.has_value();
    if (nodes) {
        out["prefix_path"] = json_to_py(Json(*nodes));
        path::Walk walk = path::walk_from_path(q, views, *nodes);
        std::string text;
        for (const path::WalkLetter& l : walk.letters) {
            if (!text.empty())
                text += " ";
            text += schema->relation(l.relation).name + (l.sign < 0 ? "^-1" : "");
        }
        out["walk"] = py::str(text);
    }
    return out;
}

py::dict path_witness_py(const std::string& query_word,
                         const std::vector<std::string>& view_words) {
    std::vector<std::string> all{query_word};
    all.insert(all.end(), view_words.begin(), view_words.end());
    SchemaPtr schema = infer_path_schema(all);
    PathQuery q = parse_path_word(schema, query_word);
    std::vector<PathQuery> views;
    for (const std::string& w : view_words)
        views.push_back(parse_path_word(schema, w));
    path::PathWitness witness = path::build_path_witness(q, views);
    py::dict out = json_to_py(path_witness_json(q, views, witness));
    out["d"] = py::str(write_structure_text(witness.d));
    out["d_prime"] = py::str(write_structure_text(witness.d_prime));
    return out;
}

py::dict h10_encode_py(const std::string& instance_text) {
    h10::H10Instance instance = h10::parse_instance_text(instance_text);
    h10::Encoding enc = h10::encode(instance);
    py::dict out;
    out["schema"] = py::str(write_schema_text(*enc.schema));
    out["query"] = py::str(write_query_text(enc.query));
    std::string views;
    for (const UnionQuery& v : enc.views)
        views += write_query_text(v);
    out["views"] = py::str(views);
    out["var_count"] = py::int_(instance.var_count);
    return out;
}

py::dict h10_witness_py(const std::string& instance_text, const std::vector<std::string>& solution) {
    h10::H10Instance instance = h10::parse_instance_text(instance_text);
    IntVec point;
    for (const std::string& s : solution)
        point.emplace_back(s);
    h10::H10Witness witness = h10::witness_from_solution(instance, point);
    py::dict out = json_to_py(h10_witness_json(instance, point, witness));
    out["d"] = py::str(write_structure_text(witness.d));
    out["d_prime"] = py::str(write_structure_text(witness.d_prime));
    return out;
}

py::object count_py(const std::string& schema_text, const std::string& pattern_text,
                    const std::string& target_text) {
    SchemaPtr schema = parse_schema_text(schema_text);
    Structure pattern = parse_structure_text(schema, pattern_text);
    Structure target = parse_structure_text(schema, target_text);
    return big_int(hom_count(pattern, target));
}

} // namespace

PYBIND11_MODULE(_bagdet, m) {
    m.doc() = "bag-semantics view determinacy toolkit";
    m.def("decide", &decide_py, py::arg("schema"), py::arg("query"), py::arg("views"),
          py::arg("synthesize") = false,
          "Decide whether the views determine the query under bag semantics. "
          "With synthesize=True, attach a verified counterexample pair when "
          "they do not.");
    m.def("eval_queries", &eval_py, py::arg("schema"), py::arg("queries"), py::arg("structure"),
          "Bag answers of every (union) query in the text on the database.");
    m.def("decide_path", &decide_path_py, py::arg("query"), py::arg("views"),
          "Decide determinacy of a path query from view words; on success "
          "include the prefix path and the extracted walk.");
    m.def("path_witness", &path_witness_py, py::arg("query"), py::arg("views"),
          "Twisted-pair counterexample for an undetermined path instance.");
    m.def("h10_encode", &h10_encode_py, py::arg("instance"),
          "Encode a polynomial equation as a determinacy instance (schema, "
          "query and views as parseable text).");
    m.def("h10_witness", &h10_witness_py, py::arg("instance"), py::arg("solution"),
          "Counterexample pair built from a solution of the equation; "
          "solution entries are decimal strings.");
    m.def("hom_count", &count_py, py::arg("schema"), py::arg("pattern"), py::arg("target"),
          "Number of homomorphisms from pattern to target.");
}
