#include "bagdet/h10.hpp"

#include "bagdet/hom.hpp"
#include "bagdet/parser.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bagdet::h10 {

namespace {

constexpr long coefficient_cap = 10'000; // each unit duplicates a view disjunct
constexpr long degree_cap = 1'000;       // each degree unit adds an atom

void validate(const H10Instance& instance) {
    if (instance.monomials.empty())
        throw std::invalid_argument("equation with no monomials");
    for (const Monomial& m : instance.monomials) {
        if (m.coefficient == 0)
            throw std::invalid_argument("monomial with zero coefficient");
        if (abs(m.coefficient) > coefficient_cap)
            throw std::invalid_argument("coefficient magnitude above " +
                                        std::to_string(coefficient_cap));
        long degree_sum = 0;
        int prev = 0;
        for (auto [var, deg] : m.powers) {
            if (var <= prev)
                throw std::invalid_argument("monomial variables must be strictly increasing");
            if (var > instance.var_count)
                throw std::invalid_argument("variable index beyond var_count");
            if (deg < 1 || deg > degree_cap)
                throw std::invalid_argument("bad degree");
            degree_sum += deg;
            prev = var;
        }
        if (degree_sum > degree_cap)
            throw std::invalid_argument("total degree above " + std::to_string(degree_cap));
    }
}

} // namespace

H10Instance parse_instance_text(const std::string& text) {
    H10Instance instance;
    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        std::istringstream line(raw);
        std::string token;
        if (!(line >> token))
            continue;
        Monomial m;
        try {
            m.coefficient = Int(token);
        } catch (const std::invalid_argument&) {
            throw parse_error(line_no, 1, "expected integer coefficient, got: " + token);
        }
        while (line >> token) {
            if (token.size() < 2 || token[0] != 'x')
                throw parse_error(line_no, 1, "expected factor like x2 or x2^3, got: " + token);
            auto caret = token.find('^');
            std::string var_text = token.substr(1, caret == std::string::npos
                                                       ? std::string::npos
                                                       : caret - 1);
            std::string deg_text =
                caret == std::string::npos ? "1" : token.substr(caret + 1);
            int var = 0, deg = 0;
            try {
                var = std::stoi(var_text);
                deg = std::stoi(deg_text);
            } catch (const std::exception&) {
                throw parse_error(line_no, 1, "bad factor: " + token);
            }
            if (var < 1 || deg < 1)
                throw parse_error(line_no, 1, "bad factor: " + token);
            m.powers.emplace_back(var, deg);
            instance.var_count = std::max(instance.var_count, var);
        }
        std::sort(m.powers.begin(), m.powers.end());
        for (size_t i = 1; i < m.powers.size(); ++i)
            if (m.powers[i].first == m.powers[i - 1].first)
                throw parse_error(line_no, 1, "repeated variable in monomial");
        instance.monomials.push_back(std::move(m));
    }
    validate(instance);
    return instance;
}

std::string write_instance_text(const H10Instance& instance) {
    std::string out;
    for (const Monomial& m : instance.monomials) {
        out += m.coefficient.get_str();
        for (auto [var, deg] : m.powers) {
            out += " x" + std::to_string(var);
            if (deg != 1)
                out += "^" + std::to_string(deg);
        }
        out += "\n";
    }
    return out;
}

Int monomial_value(const Monomial& m, const IntVec& point) {
    Int value = m.coefficient;
    for (auto [var, deg] : m.powers) {
        if (var > static_cast<int>(point.size()))
            throw std::invalid_argument("point has too few coordinates");
        value *= pow_int(point[static_cast<size_t>(var - 1)], static_cast<unsigned long>(deg));
    }
    return value;
}

Int side_value(const H10Instance& instance, bool positive, const IntVec& point) {
    Int total = 0;
    for (const Monomial& m : instance.monomials) {
        if ((m.coefficient > 0) != positive)
            continue;
        total += abs(monomial_value(m, point));
    }
    return total;
}

bool is_solution(const H10Instance& instance, const IntVec& point) {
    for (const Int& x : point)
        if (x < 0)
            return false;
    Int total = 0;
    for (const Monomial& m : instance.monomials)
        total += monomial_value(m, point);
    return total == 0;
}

namespace {

// Counting body of a monomial: deg_i fresh variables carrying X_i each.
std::vector<QueryAtom> counting_atoms(const Monomial& m, const Schema& schema) {
    std::vector<QueryAtom> atoms;
    for (auto [var, deg] : m.powers) {
        int rel = schema.require("X" + std::to_string(var));
        for (int t = 0; t < deg; ++t)
            atoms.push_back(QueryAtom{rel, {"y" + std::to_string(var) + "_" + std::to_string(t)}});
    }
    return atoms;
}

} // namespace

Encoding encode(const H10Instance& instance) {
    validate(instance);
    std::vector<Relation> relations{{"H", 0}, {"C", 0}};
    for (int i = 1; i <= instance.var_count; ++i)
        relations.push_back(Relation{"X" + std::to_string(i), 1});
    SchemaPtr schema = make_schema(std::move(relations));
    const int h = schema->require("H");
    const int c = schema->require("C");

    Encoding out{schema, UnionQuery({ConjunctiveQuery(schema, "Q", {}, {QueryAtom{h, {}}})}), {}};

    out.views.push_back(UnionQuery({
        ConjunctiveQuery(schema, "VMARK", {}, {QueryAtom{h, {}}}),
        ConjunctiveQuery(schema, "VMARK", {}, {QueryAtom{c, {}}}),
    }));
    for (int i = 1; i <= instance.var_count; ++i) {
        int rel = schema->require("X" + std::to_string(i));
        out.views.push_back(UnionQuery({ConjunctiveQuery(
            schema, "VX" + std::to_string(i), {}, {QueryAtom{rel, {"y"}}})}));
    }

    std::vector<ConjunctiveQuery> equation_disjuncts;
    for (const Monomial& m : instance.monomials) {
        std::vector<QueryAtom> atoms = counting_atoms(m, *schema);
        atoms.push_back(QueryAtom{m.coefficient > 0 ? h : c, {}});
        long copies = Int(abs(m.coefficient)).get_si();
        for (long copy = 0; copy < copies; ++copy)
            equation_disjuncts.emplace_back(schema, "VEQ", std::vector<std::string>{}, atoms);
    }
    out.views.push_back(UnionQuery(std::move(equation_disjuncts)));
    return out;
}

PhiCheck phi_count_identity_check(const Monomial& m, const Encoding& encoding, const Structure& d,
                                  const Limits& limits) {
    ConjunctiveQuery phi(encoding.schema, "PHI", {}, counting_atoms(m, *encoding.schema));
    PhiCheck check;
    check.direct = eval_boolean_cq(phi, d, limits);
    check.expected = 1;
    for (auto [var, deg] : m.powers) {
        auto [lo, hi] = d.relation_range(encoding.schema->require("X" + std::to_string(var)));
        check.expected *= pow_int(Int(hi - lo), static_cast<unsigned long>(deg));
    }
    check.ok = check.direct == check.expected;
    return check;
}

H10Witness witness_from_solution(const H10Instance& instance, const IntVec& solution,
                                 const Limits& limits) {
    if (static_cast<int>(solution.size()) != instance.var_count)
        throw std::invalid_argument("solution arity mismatch");
    if (!is_solution(instance, solution))
        throw std::invalid_argument("point does not satisfy the equation");
    Encoding encoding = encode(instance);

    std::vector<NamedFact> x_facts;
    Int total = 0;
    for (int i = 1; i <= instance.var_count; ++i) {
        const Int& xi = solution[static_cast<size_t>(i - 1)];
        total += xi;
        if (total > limits.max_domain_size)
            throw limit_error("solution too large to materialize");
        for (Int t = 0; t < xi; ++t)
            x_facts.push_back(NamedFact{"X" + std::to_string(i),
                                        {"e" + std::to_string(i) + "_" + t.get_str()}});
    }
    std::vector<NamedFact> d_facts{NamedFact{"H", {}}};
    std::vector<NamedFact> dp_facts{NamedFact{"C", {}}};
    d_facts.insert(d_facts.end(), x_facts.begin(), x_facts.end());
    dp_facts.insert(dp_facts.end(), x_facts.begin(), x_facts.end());

    H10Witness witness{make_structure(encoding.schema, d_facts),
                       make_structure(encoding.schema, dp_facts), true, {}, {}};
    for (const UnionQuery& view : encoding.views) {
        Int left = eval_ucq(view, witness.d, limits);
        Int right = eval_ucq(view, witness.d_prime, limits);
        if (left != right) {
            witness.verified = false;
            witness.notes.push_back("view " + view.name() + " differs on the pair");
        }
        witness.counts.emplace_back(view.name(), std::make_pair(std::move(left), std::move(right)));
    }
    Int qd = eval_ucq(encoding.query, witness.d, limits);
    Int qdp = eval_ucq(encoding.query, witness.d_prime, limits);
    if (qd != 1 || qdp != 0) {
        witness.verified = false;
        witness.notes.push_back("query answers are not 1 versus 0");
    }
    witness.counts.emplace_back(encoding.query.name(), std::make_pair(std::move(qd), std::move(qdp)));
    return witness;
}

} // namespace bagdet::h10
