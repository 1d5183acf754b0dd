#include "bagdet/serialize.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace bagdet {

Json int_json(const Int& x) { return x.get_str(); }
Json rat_json(const Rat& x) { return rat_to_string(x); }

Json int_vec_json(const IntVec& v) {
    Json out = Json::array();
    for (const Int& x : v)
        out.push_back(int_json(x));
    return out;
}

Json rat_vec_json(const RatVec& v) {
    Json out = Json::array();
    for (const Rat& x : v)
        out.push_back(rat_json(x));
    return out;
}

Json rat_mat_json(const RatMat& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j)
            row.push_back(rat_json(m.at(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

IntVec int_vec_from_json(const Json& j) {
    IntVec out;
    for (const Json& x : j)
        out.push_back(Int(x.get<std::string>()));
    return out;
}

Json facts_json(const Structure& s) {
    Json out = Json::array();
    for (const NamedFact& f : named_facts(s)) {
        Json fact = Json::array();
        fact.push_back(f.relation);
        for (const std::string& a : f.args)
            fact.push_back(a);
        out.push_back(std::move(fact));
    }
    return out;
}

Json report_to_json(const VerificationReport& report) {
    Json checks = Json::array();
    for (const CountCheck& c : report.checks)
        checks.push_back(Json{{"query", c.query},
                              {"route", c.route},
                              {"left", int_json(c.left)},
                              {"right", int_json(c.right)},
                              {"must_differ", c.must_differ},
                              {"ok", c.ok}});
    return Json{{"passed", report.passed}, {"checks", std::move(checks)}, {"notes", report.notes}};
}

Json verdict_to_json(const Verdict& verdict) {
    Json out{{"determined", verdict.determined},
             {"relevant_views", verdict.relevant_views},
             {"basis_size", verdict.basis_size}};
    if (verdict.coefficients)
        out["coefficients"] = rat_vec_json(*verdict.coefficients);
    if (verdict.witness) {
        out["witness"] = Json{{"materialized", verdict.witness->d.has_value()},
                              {"verified", verdict.witness->report.passed}};
    }
    out["diagnostics"] = verdict.diagnostics.notes;
    return out;
}

Json witness_trace_json(const WitnessPair& wp) {
    Json basis = Json::array();
    for (size_t i = 0; i < wp.components.components.size(); ++i)
        basis.push_back(Json{{"key", wp.components.keys[i]},
                             {"facts", facts_json(wp.components.components[i])}});
    Json views = Json::array();
    for (size_t i = 0; i < wp.view_names.size(); ++i)
        views.push_back(Json{{"name", wp.view_names[i]},
                             {"vector", int_vec_json(wp.view_vectors[i])}});
    const GoodBasis& gb = *wp.good_basis;
    Json distinguishers = Json::array();
    for (const Structure& s : gb.distinguishers)
        distinguishers.push_back(facts_json(s));
    return Json{{"kind", "cq"},
                {"basis", std::move(basis)},
                {"q_vector", int_vec_json(wp.q_vector)},
                {"views", std::move(views)},
                {"distinguishers", std::move(distinguishers)},
                {"radix", int_json(gb.radix)},
                {"h", int_vec_json(gb.h)},
                {"g", int_vec_json(gb.g)},
                {"matrix", rat_mat_json(gb.eval_matrix)},
                {"z", int_vec_json(wp.trace.z)},
                {"p", rat_vec_json(wp.trace.p)},
                {"t", rat_json(wp.trace.t)},
                {"p_prime", rat_vec_json(wp.trace.p_prime)},
                {"c", int_json(wp.trace.c)},
                {"c_prime", int_json(wp.trace.c_prime)},
                {"schedule_steps", wp.trace.schedule_steps},
                {"mult", int_vec_json(wp.mult)},
                {"mult_prime", int_vec_json(wp.mult_prime)},
                {"materialized", wp.d.has_value()},
                {"report", report_to_json(wp.report)}};
}

Json path_witness_json(const PathQuery& q, const std::vector<PathQuery>& views,
                       const path::PathWitness& witness) {
    Json view_words = Json::array();
    for (const PathQuery& v : views)
        view_words.push_back(v.word());
    return Json{{"kind", "path"},
                {"word", q.word()},
                {"views", std::move(view_words)},
                {"side", witness.side},
                {"verified", witness.verified},
                {"notes", witness.notes}};
}

Json h10_witness_json(const h10::H10Instance& instance, const IntVec& solution,
                      const h10::H10Witness& witness) {
    Json counts = Json::array();
    for (const auto& [name, pair] : witness.counts)
        counts.push_back(Json{{"query", name},
                              {"on_d", int_json(pair.first)},
                              {"on_d_prime", int_json(pair.second)}});
    return Json{{"kind", "h10"},
                {"instance", h10::write_instance_text(instance)},
                {"solution", int_vec_json(solution)},
                {"counts", std::move(counts)},
                {"verified", witness.verified},
                {"notes", witness.notes}};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot read " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out)
        throw std::runtime_error("write failed: " + path);
}

} // namespace bagdet
