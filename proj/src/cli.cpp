#include "bagdet/cli.hpp"

#include "bagdet/algebra.hpp"
#include "bagdet/canonical.hpp"
#include "bagdet/detbool.hpp"
#include "bagdet/h10.hpp"
#include "bagdet/hom.hpp"
#include "bagdet/parser.hpp"
#include "bagdet/pathdet.hpp"
#include "bagdet/serialize.hpp"
#include "bagdet/witness.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

namespace bagdet::cli {

namespace fs = std::filesystem;

namespace {

ConjunctiveQuery single_cq(UnionQuery u, const std::string& role) {
    if (!u.is_single())
        throw std::runtime_error(role + " '" + u.name() +
                                 "' is a union query; this command needs plain conjunctive queries");
    return u.single();
}

ConjunctiveQuery load_query(const SchemaPtr& schema, const std::string& path) {
    return single_cq(parse_single_query_text(schema, read_file(path)), "query");
}

std::vector<ConjunctiveQuery> load_views(const SchemaPtr& schema, const std::string& path) {
    std::vector<ConjunctiveQuery> out;
    for (UnionQuery& u : parse_query_text(schema, read_file(path)))
        out.push_back(single_cq(std::move(u), "view"));
    return out;
}

std::vector<std::string> file_words(const std::string& path) {
    std::istringstream in(read_file(path));
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::string w;
        while (ls >> w)
            words.push_back(w);
    }
    return words;
}

struct PathInputs {
    SchemaPtr schema;
    PathQuery q;
    std::vector<PathQuery> views;
};

PathInputs load_path_inputs(const std::string& query_path, const std::string& views_path,
                            const std::string& schema_path) {
    std::vector<std::string> qwords = file_words(query_path);
    if (qwords.size() != 1)
        throw std::runtime_error("path query file must contain exactly one word");
    std::vector<std::string> vwords = file_words(views_path);
    SchemaPtr schema;
    if (!schema_path.empty()) {
        schema = parse_schema_text(read_file(schema_path));
    } else {
        std::vector<std::string> all = qwords;
        all.insert(all.end(), vwords.begin(), vwords.end());
        schema = infer_path_schema(all);
    }
    PathQuery q = parse_path_word(schema, qwords.front());
    std::vector<PathQuery> views;
    for (const std::string& w : vwords)
        views.push_back(parse_path_word(schema, w));
    return PathInputs{schema, std::move(q), std::move(views)};
}

std::string walk_to_string(const path::Walk& walk, const SchemaPtr& schema) {
    std::string out;
    for (const path::WalkLetter& l : walk.letters) {
        if (!out.empty())
            out += " ";
        out += schema->relation(l.relation).name;
        if (l.sign < 0)
            out += "^-1";
    }
    return out;
}

void emit(const Config& cfg, const Json& j, const std::function<std::string()>& text) {
    if (cfg.format == "text")
        std::cout << text();
    else
        std::cout << j.dump(2) << "\n";
}

// ---- subcommands

int cmd_decide(const Config& cfg, const std::string& schema_path, const std::string& query_path,
               const std::string& views_path) {
    SchemaPtr schema = parse_schema_text(read_file(schema_path));
    ConjunctiveQuery q = load_query(schema, query_path);
    std::vector<ConjunctiveQuery> views = load_views(schema, views_path);
    Verdict verdict = decide(views, q, /*synthesize=*/false, cfg.limits);
    emit(cfg, verdict_to_json(verdict), [&] {
        std::string s = verdict.determined ? "determined\n" : "not determined\n";
        if (verdict.coefficients) {
            s += "coefficients:";
            for (const Rat& c : *verdict.coefficients)
                s += " " + rat_to_string(c);
            s += "\n";
        }
        for (const std::string& note : verdict.diagnostics.notes)
            s += "note: " + note + "\n";
        return s;
    });
    return verdict.determined ? 0 : 1;
}

int cmd_witness(const Config& cfg, const std::string& schema_path, const std::string& query_path,
                const std::string& views_path, const std::string& out_dir) {
    SchemaPtr schema = parse_schema_text(read_file(schema_path));
    ConjunctiveQuery q = load_query(schema, query_path);
    std::vector<ConjunctiveQuery> views = load_views(schema, views_path);
    Verdict verdict = decide(views, q, /*synthesize=*/true, cfg.limits);

    fs::create_directories(out_dir);
    Json vj = verdict_to_json(verdict);
    if (verdict.determined) {
        write_file(out_dir + "/verdict.json", vj.dump(2) + "\n");
        emit(cfg, vj, [&] { return std::string("determined; no counterexample exists\n"); });
        return 0;
    }
    if (!verdict.witness) {
        write_file(out_dir + "/verdict.json", vj.dump(2) + "\n");
        emit(cfg, vj, [&] {
            std::string s = "not determined, but no witness could be built\n";
            for (const std::string& note : verdict.diagnostics.notes)
                s += "note: " + note + "\n";
            return s;
        });
        return 2;
    }
    const WitnessPair& wp = *verdict.witness;
    Json files = Json::array();
    files.push_back("trace.json");
    write_file(out_dir + "/trace.json", witness_trace_json(wp).dump(2) + "\n");
    if (wp.d && wp.d_prime) {
        write_file(out_dir + "/d.facts", write_structure_text(*wp.d));
        write_file(out_dir + "/d_prime.facts", write_structure_text(*wp.d_prime));
        files.push_back("d.facts");
        files.push_back("d_prime.facts");
    }
    vj["witness_files"] = files;
    write_file(out_dir + "/verdict.json", vj.dump(2) + "\n");
    emit(cfg, vj, [&] {
        std::string s = "not determined; witness written to " + out_dir + "\n";
        s += wp.report.passed ? "verification: passed\n" : "verification: FAILED\n";
        return s;
    });
    return wp.report.passed ? 0 : 2;
}

int cmd_path_decide(const Config& cfg, const std::string& query_path, const std::string& views_path,
                    const std::string& schema_path) {
    PathInputs in = load_path_inputs(query_path, views_path, schema_path);
    auto nodes = path::reach_path(in.q, in.views);
    Json j{{"determined", nodes.has_value()}, {"word", in.q.word()}};
    std::string text = nodes ? "determined\n" : "not determined\n";
    if (nodes) {
        j["prefix_path"] = *nodes;
        path::Walk walk = path::walk_from_path(in.q, in.views, *nodes);
        j["walk"] = walk_to_string(walk, in.schema);
        path::Walk fb = path::reduce_walk(in.q, walk, path::ReductionSystem::forward_backward);
        path::Walk bf = path::reduce_walk(in.q, walk, path::ReductionSystem::backward_forward);
        j["reduced_forward_backward"] = walk_to_string(fb, in.schema);
        j["reduced_backward_forward"] = walk_to_string(bf, in.schema);
        text += "walk: " + walk_to_string(walk, in.schema) + "\n";
    }
    emit(cfg, j, [&] { return text; });
    return nodes ? 0 : 1;
}

int cmd_path_witness(const Config& cfg, const std::string& query_path,
                     const std::string& views_path, const std::string& schema_path,
                     const std::string& out_dir) {
    PathInputs in = load_path_inputs(query_path, views_path, schema_path);
    path::PathWitness witness = path::build_path_witness(in.q, in.views, cfg.limits);
    fs::create_directories(out_dir);
    write_file(out_dir + "/d.facts", write_structure_text(witness.d));
    write_file(out_dir + "/d_prime.facts", write_structure_text(witness.d_prime));
    Json j = path_witness_json(in.q, in.views, witness);
    write_file(out_dir + "/trace.json", j.dump(2) + "\n");
    emit(cfg, j, [&] {
        return std::string(witness.verified ? "witness written and verified\n"
                                            : "witness FAILED verification\n");
    });
    return witness.verified ? 0 : 2;
}

int cmd_eval(const Config& cfg, const std::string& schema_path, const std::string& query_path,
             const std::string& structure_path) {
    SchemaPtr schema = parse_schema_text(read_file(schema_path));
    std::vector<UnionQuery> queries = parse_query_text(schema, read_file(query_path));
    Structure d = parse_structure_text(schema, read_file(structure_path));
    Json j = Json::array();
    std::string text;
    for (const UnionQuery& q : queries) {
        Int count = eval_ucq(q, d, cfg.limits);
        j.push_back(Json{{"query", q.name()}, {"count", int_json(count)}});
        text += q.name() + " " + count.get_str() + "\n";
    }
    emit(cfg, j, [&] { return text; });
    return 0;
}

int cmd_h10_encode(const Config& cfg, const std::string& instance_path,
                   const std::string& out_dir) {
    h10::H10Instance instance = h10::parse_instance_text(read_file(instance_path));
    h10::Encoding enc = h10::encode(instance);
    fs::create_directories(out_dir);
    write_file(out_dir + "/schema.txt", write_schema_text(*enc.schema));
    write_file(out_dir + "/query.txt", write_query_text(enc.query));
    std::string views_text;
    Json names = Json::array();
    for (const UnionQuery& v : enc.views) {
        views_text += write_query_text(v);
        names.push_back(v.name());
    }
    write_file(out_dir + "/views.txt", views_text);
    Json j{{"var_count", instance.var_count},
           {"views", std::move(names)},
           {"files", {"schema.txt", "query.txt", "views.txt"}}};
    emit(cfg, j, [&] { return "encoded into " + out_dir + "\n"; });
    return 0;
}

IntVec parse_solution(const std::string& text) {
    IntVec out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::istringstream ts(token);
        std::string w;
        while (ts >> w)
            out.push_back(Int(w));
    }
    return out;
}

int cmd_h10_witness(const Config& cfg, const std::string& instance_path,
                    const std::string& solution_text, const std::string& out_dir) {
    h10::H10Instance instance = h10::parse_instance_text(read_file(instance_path));
    IntVec solution = parse_solution(solution_text);
    h10::H10Witness witness = h10::witness_from_solution(instance, solution, cfg.limits);
    fs::create_directories(out_dir);
    write_file(out_dir + "/d.facts", write_structure_text(witness.d));
    write_file(out_dir + "/d_prime.facts", write_structure_text(witness.d_prime));
    Json j = h10_witness_json(instance, solution, witness);
    write_file(out_dir + "/trace.json", j.dump(2) + "\n");
    emit(cfg, j, [&] {
        return std::string(witness.verified ? "witness written and verified\n"
                                            : "witness FAILED verification\n");
    });
    return witness.verified ? 0 : 2;
}

int cmd_verify(const Config& cfg, const std::string& dir, const std::string& schema_path,
               const std::string& query_path, const std::string& views_path) {
    Json trace = Json::parse(read_file(dir + "/trace.json"));
    std::string kind = trace.value("kind", "");
    Json j{{"kind", kind}};
    Json checks = Json::array();
    bool passed = true;
    auto add_check = [&](const std::string& name, const Int& left, const Int& right,
                         bool must_differ) {
        bool ok = must_differ ? left != right : left == right;
        passed = passed && ok;
        checks.push_back(Json{{"query", name},
                              {"left", int_json(left)},
                              {"right", int_json(right)},
                              {"must_differ", must_differ},
                              {"ok", ok}});
    };

    if (kind == "cq") {
        if (!trace.value("materialized", false))
            throw std::runtime_error(
                "witness was not materialized; only materialized pairs can be re-verified "
                "from files alone");
        SchemaPtr schema = parse_schema_text(read_file(schema_path));
        ConjunctiveQuery q = load_query(schema, query_path);
        std::vector<ConjunctiveQuery> views = load_views(schema, views_path);
        Structure d = parse_structure_text(schema, read_file(dir + "/d.facts"));
        Structure dp = parse_structure_text(schema, read_file(dir + "/d_prime.facts"));
        add_check(q.name(), eval_boolean_cq(q, d, cfg.limits), eval_boolean_cq(q, dp, cfg.limits),
                  true);
        for (const ConjunctiveQuery& v : views)
            add_check(v.name(), eval_boolean_cq(v, d, cfg.limits),
                      eval_boolean_cq(v, dp, cfg.limits), false);
    } else if (kind == "path") {
        PathInputs in = load_path_inputs(query_path, views_path, schema_path);
        Structure d = parse_structure_text(in.schema, read_file(dir + "/d.facts"));
        Structure dp = parse_structure_text(in.schema, read_file(dir + "/d_prime.facts"));
        {
            path::PairBag left = path::eval_path_query(in.q, d, cfg.limits);
            path::PairBag right = path::eval_path_query(in.q, dp, cfg.limits);
            bool ok = !path::equal_bags(left, right);
            passed = passed && ok;
            checks.push_back(Json{{"query", in.q.word()}, {"must_differ", true}, {"ok", ok}});
        }
        for (const PathQuery& v : in.views) {
            bool ok = path::equal_bags(path::eval_path_query(v, d, cfg.limits),
                                       path::eval_path_query(v, dp, cfg.limits));
            passed = passed && ok;
            checks.push_back(Json{{"query", v.word()}, {"must_differ", false}, {"ok", ok}});
        }
    } else if (kind == "h10") {
        h10::H10Instance instance = h10::parse_instance_text(trace.at("instance"));
        h10::Encoding enc = h10::encode(instance);
        Structure d = parse_structure_text(enc.schema, read_file(dir + "/d.facts"));
        Structure dp = parse_structure_text(enc.schema, read_file(dir + "/d_prime.facts"));
        add_check(enc.query.name(), eval_ucq(enc.query, d, cfg.limits),
                  eval_ucq(enc.query, dp, cfg.limits), true);
        for (const UnionQuery& v : enc.views)
            add_check(v.name(), eval_ucq(v, d, cfg.limits), eval_ucq(v, dp, cfg.limits), false);
    } else {
        throw std::runtime_error("trace.json has unknown kind: " + kind);
    }

    j["checks"] = std::move(checks);
    j["passed"] = passed;
    emit(cfg, j, [&] { return std::string(passed ? "verification passed\n" : "verification FAILED\n"); });
    return passed ? 0 : 1;
}

int cmd_selftest(const Config& cfg) {
    int failures = 0;
    auto step = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "ok: " : "FAIL: ") << name << "\n";
        if (!ok)
            ++failures;
    };

    // parse, evaluate, count
    SchemaPtr schema = parse_schema_text("R/2\n");
    Structure triangle = parse_structure_text(schema, "R(a, b)\nR(b, c)\nR(c, a)\n");
    ConjunctiveQuery loops =
        single_cq(parse_single_query_text(schema, "Q() :- R(x, y), R(y, z), R(z, x) ."), "query");
    step("triangle query counts 3 cyclic maps", eval_boolean_cq(loops, triangle) == 3);

    // a query isomorphic to its view is determined
    {
        ConjunctiveQuery v =
            single_cq(parse_single_query_text(schema, "V() :- R(a, b), R(b, c), R(c, a) ."), "view");
        Verdict verdict = decide({v}, loops, false, cfg.limits);
        step("isomorphic view determines the query", verdict.determined);
    }

    // counterexample pipeline on a non-determined instance
    {
        ConjunctiveQuery q2 = single_cq(parse_single_query_text(schema, "Q() :- R(x, y) ."), "query");
        Verdict verdict = decide({loops}, q2, true, cfg.limits);
        bool ok = !verdict.determined && verdict.witness && verdict.witness->report.passed &&
                  verdict.witness->d.has_value();
        step("single-edge query gets a verified counterexample", ok);
    }

    // path fixtures
    {
        SchemaPtr ps = infer_path_schema({"ABCD"});
        PathQuery q = parse_path_word(ps, "ABCD");
        std::vector<PathQuery> views{parse_path_word(ps, "ABC"), parse_path_word(ps, "BC"),
                                     parse_path_word(ps, "BCD")};
        step("word reachable through its view prefixes", path::decide_path(q, views));
        PathQuery q2 = parse_path_word(ps, "AB");
        std::vector<PathQuery> views2{parse_path_word(ps, "A")};
        bool not_det = !path::decide_path(q2, views2);
        bool ok = not_det && path::build_path_witness(q2, views2, cfg.limits).verified;
        step("undetermined word yields a verified twisted pair", ok);
    }

    // equation encoding round trip
    {
        h10::H10Instance eq = h10::parse_instance_text("1 x1\n-1\n");
        h10::H10Witness w = h10::witness_from_solution(eq, {Int(1)}, cfg.limits);
        step("equation x=1 yields a verified pair from its solution", w.verified);
    }

    return failures == 0 ? 0 : 2;
}

} // namespace

Config config_from_env() {
    Config cfg;
    if (const char* env = std::getenv("BAGDET_CONFIG")) {
        Json j = Json::parse(env);
        if (j.contains("max_search_nodes"))
            cfg.limits.max_search_nodes = j["max_search_nodes"].get<long>();
        if (j.contains("max_domain_size"))
            cfg.limits.max_domain_size = j["max_domain_size"].get<long>();
        if (j.contains("max_materialized_size"))
            cfg.limits.max_materialized_size = j["max_materialized_size"].get<long>();
        if (j.contains("max_candidates"))
            cfg.limits.max_candidates = j["max_candidates"].get<long>();
        if (j.contains("t_schedule_cap"))
            cfg.limits.t_schedule_cap = j["t_schedule_cap"].get<int>();
        if (j.contains("format"))
            cfg.format = j["format"].get<std::string>();
        if (j.contains("seed"))
            cfg.seed = j["seed"].get<unsigned long>();
    }
    return cfg;
}

int run(const std::vector<std::string>& args) {
    Config cfg;
    try {
        cfg = config_from_env();
    } catch (const std::exception& e) {
        std::cerr << "error: bad BAGDET_CONFIG: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"bag-semantics view determinacy toolkit"};
    app.fallthrough(true);
    app.add_option("--max-nodes", cfg.limits.max_search_nodes, "hom search node budget");
    app.add_option("--max-domain", cfg.limits.max_domain_size, "materialized domain size limit");
    app.add_option("--format", cfg.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
    app.add_option("--seed", cfg.seed, "seed for randomized helpers");
    app.require_subcommand(1);

    std::string schema_path, query_path, views_path, structure_path, out_dir, dir, instance_path,
        solution_text;

    CLI::App* decide_cmd = app.add_subcommand("decide", "decide view determinacy of a query");
    decide_cmd->add_option("--schema", schema_path)->required();
    decide_cmd->add_option("--query", query_path)->required();
    decide_cmd->add_option("--views", views_path)->required();

    CLI::App* witness_cmd =
        app.add_subcommand("witness", "decide and build a counterexample pair when undetermined");
    witness_cmd->add_option("--schema", schema_path)->required();
    witness_cmd->add_option("--query", query_path)->required();
    witness_cmd->add_option("--views", views_path)->required();
    witness_cmd->add_option("--out-dir", out_dir)->required();

    CLI::App* pdecide_cmd = app.add_subcommand("path-decide", "decide determinacy of a path query");
    pdecide_cmd->add_option("--query", query_path)->required();
    pdecide_cmd->add_option("--views", views_path)->required();
    pdecide_cmd->add_option("--schema", schema_path);

    CLI::App* pwitness_cmd =
        app.add_subcommand("path-witness", "build the twisted-pair counterexample for a word");
    pwitness_cmd->add_option("--query", query_path)->required();
    pwitness_cmd->add_option("--views", views_path)->required();
    pwitness_cmd->add_option("--schema", schema_path);
    pwitness_cmd->add_option("--out-dir", out_dir)->required();

    CLI::App* eval_cmd = app.add_subcommand("eval", "evaluate boolean queries on a database");
    eval_cmd->add_option("--schema", schema_path)->required();
    eval_cmd->add_option("--query", query_path)->required();
    eval_cmd->add_option("--structure", structure_path)->required();

    CLI::App* henc_cmd =
        app.add_subcommand("h10-encode", "encode a polynomial equation as a determinacy instance");
    henc_cmd->add_option("--instance", instance_path)->required();
    henc_cmd->add_option("--out-dir", out_dir)->required();

    CLI::App* hwit_cmd = app.add_subcommand(
        "h10-witness", "build the counterexample pair from a solution of the equation");
    hwit_cmd->add_option("--instance", instance_path)->required();
    hwit_cmd->add_option("--solution", solution_text, "comma separated natural numbers")
        ->required();
    hwit_cmd->add_option("--out-dir", out_dir)->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "re-verify a written witness directory from files alone");
    verify_cmd->add_option("--dir", dir)->required();
    verify_cmd->add_option("--schema", schema_path);
    verify_cmd->add_option("--query", query_path);
    verify_cmd->add_option("--views", views_path);

    CLI::App* selftest_cmd = app.add_subcommand("selftest", "run built-in smoke fixtures");

    std::vector<const char*> argv;
    argv.push_back("bagdet");
    for (const std::string& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (decide_cmd->parsed())
            return cmd_decide(cfg, schema_path, query_path, views_path);
        if (witness_cmd->parsed())
            return cmd_witness(cfg, schema_path, query_path, views_path, out_dir);
        if (pdecide_cmd->parsed())
            return cmd_path_decide(cfg, query_path, views_path, schema_path);
        if (pwitness_cmd->parsed())
            return cmd_path_witness(cfg, query_path, views_path, schema_path, out_dir);
        if (eval_cmd->parsed())
            return cmd_eval(cfg, schema_path, query_path, structure_path);
        if (henc_cmd->parsed())
            return cmd_h10_encode(cfg, instance_path, out_dir);
        if (hwit_cmd->parsed())
            return cmd_h10_witness(cfg, instance_path, solution_text, out_dir);
        if (verify_cmd->parsed())
            return cmd_verify(cfg, dir, schema_path, query_path, views_path);
        if (selftest_cmd->parsed())
            return cmd_selftest(cfg);
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const limit_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i)
        args.emplace_back(argv[i]);
    return run(args);
}

} // namespace bagdet::cli
