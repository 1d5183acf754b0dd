#include "bagdet/parser.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

namespace bagdet {

parse_error::parse_error(int line, int col, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) + ": " +
                         message),
      line_(line), col_(col) {}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

// Token-level cursor for query files: skips whitespace and # comments.
class Cursor {
public:
    explicit Cursor(const std::string& text) : text_(text) { skip(); }

    bool at_end() const { return pos_ >= text_.size(); }
    int line() const { return line_; }
    int col() const { return col_; }

    [[noreturn]] void fail(const std::string& message) const {
        throw parse_error(line_, col_, message);
    }

    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void expect(char c) {
        if (peek() != c)
            fail(std::string("expected '") + c + "'");
        advance();
        skip();
    }

    bool accept(char c) {
        if (peek() != c)
            return false;
        advance();
        skip();
        return true;
    }

    void expect_turnstile() {
        if (peek() != ':')
            fail("expected ':-'");
        advance();
        if (peek() != '-')
            fail("expected ':-'");
        advance();
        skip();
    }

    std::string ident(const std::string& what) {
        if (!ident_start(peek()))
            fail("expected " + what);
        std::string out;
        while (!at_end() && ident_char(text_[pos_])) {
            out += text_[pos_];
            advance();
        }
        skip();
        return out;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip() {
        while (!at_end()) {
            char c = text_[pos_];
            if (c == '#') {
                while (!at_end() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

// Splits into (line_number, content) pairs with comments stripped and blank
// lines dropped; used by the line-oriented formats.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string raw;
    int number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw.erase(hash);
        size_t first = raw.find_first_not_of(" \t\r");
        if (first == std::string::npos)
            continue;
        size_t last = raw.find_last_not_of(" \t\r");
        out.emplace_back(number, raw.substr(first, last - first + 1));
    }
    return out;
}

} // namespace

SchemaPtr parse_schema_text(const std::string& text) {
    std::vector<Relation> relations;
    for (const auto& [number, line] : content_lines(text)) {
        auto slash = line.find('/');
        if (slash == std::string::npos)
            throw parse_error(number, 1, "expected NAME/arity");
        std::string name = line.substr(0, slash);
        std::string arity_text = line.substr(slash + 1);
        if (name.empty() || !ident_start(name[0]) ||
            !std::all_of(name.begin(), name.end(), ident_char))
            throw parse_error(number, 1, "bad relation name: " + name);
        int arity = 0;
        try {
            size_t used = 0;
            arity = std::stoi(arity_text, &used);
            if (used != arity_text.size() || arity < 0)
                throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw parse_error(number, static_cast<int>(slash) + 2, "bad arity: " + arity_text);
        }
        relations.push_back(Relation{std::move(name), arity});
    }
    try {
        return make_schema(std::move(relations));
    } catch (const std::invalid_argument& e) {
        throw parse_error(1, 1, e.what());
    }
}

Structure parse_structure_text(const SchemaPtr& schema, const std::string& text) {
    auto constant_char = [](char c) {
        return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' &&
               c != '#';
    };
    std::vector<NamedFact> facts;
    for (const auto& [number, line] : content_lines(text)) {
        size_t i = 0;
        auto fail = [&](const std::string& msg) -> parse_error {
            return parse_error(number, static_cast<int>(i) + 1, msg);
        };
        auto skip_ws = [&] {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
                ++i;
        };
        NamedFact fact;
        if (i >= line.size() || !ident_start(line[i]))
            throw fail("expected relation name");
        while (i < line.size() && ident_char(line[i]))
            fact.relation += line[i++];
        skip_ws();
        if (i >= line.size() || line[i] != '(')
            throw fail("expected '('");
        ++i;
        skip_ws();
        if (i < line.size() && line[i] == ')') {
            ++i;
        } else {
            while (true) {
                std::string constant;
                while (i < line.size() && constant_char(line[i]))
                    constant += line[i++];
                if (constant.empty())
                    throw fail("expected constant");
                fact.args.push_back(std::move(constant));
                skip_ws();
                if (i < line.size() && line[i] == ',') {
                    ++i;
                    skip_ws();
                    continue;
                }
                if (i < line.size() && line[i] == ')') {
                    ++i;
                    break;
                }
                throw fail("expected ',' or ')'");
            }
        }
        skip_ws();
        if (i != line.size())
            throw fail("trailing text after fact");
        if (schema->index_of(fact.relation) < 0)
            throw parse_error(number, 1, "unknown relation: " + fact.relation);
        facts.push_back(std::move(fact));
    }
    try {
        return make_structure(schema, facts);
    } catch (const std::invalid_argument& e) {
        throw parse_error(1, 1, e.what());
    }
}

std::vector<UnionQuery> parse_query_text(const SchemaPtr& schema, const std::string& text) {
    Cursor cur(text);
    std::vector<std::string> order;
    std::map<std::string, std::vector<ConjunctiveQuery>> by_name;
    while (!cur.at_end()) {
        int stmt_line = cur.line(), stmt_col = cur.col();
        std::string head = cur.ident("query name");
        cur.expect('(');
        std::vector<std::string> free_vars;
        if (!cur.accept(')')) {
            do {
                free_vars.push_back(cur.ident("free variable"));
            } while (cur.accept(','));
            cur.expect(')');
        }
        cur.expect_turnstile();
        std::vector<QueryAtom> atoms;
        if (!cur.accept('.')) {
            do {
                int atom_line = cur.line(), atom_col = cur.col();
                std::string rel = cur.ident("relation name");
                int rel_idx = schema->index_of(rel);
                if (rel_idx < 0)
                    throw parse_error(atom_line, atom_col, "unknown relation: " + rel);
                cur.expect('(');
                QueryAtom atom{rel_idx, {}};
                if (!cur.accept(')')) {
                    do {
                        atom.vars.push_back(cur.ident("variable"));
                    } while (cur.accept(','));
                    cur.expect(')');
                }
                atoms.push_back(std::move(atom));
            } while (cur.accept(','));
            cur.expect('.');
        }
        try {
            ConjunctiveQuery cq(schema, head, std::move(free_vars), std::move(atoms));
            auto [it, fresh] = by_name.try_emplace(head);
            if (fresh)
                order.push_back(head);
            it->second.push_back(std::move(cq));
        } catch (const std::invalid_argument& e) {
            throw parse_error(stmt_line, stmt_col, e.what());
        }
    }
    std::vector<UnionQuery> out;
    out.reserve(order.size());
    for (const std::string& name : order) {
        try {
            out.emplace_back(std::move(by_name.at(name)));
        } catch (const std::invalid_argument& e) {
            throw parse_error(1, 1, e.what());
        }
    }
    return out;
}

UnionQuery parse_single_query_text(const SchemaPtr& schema, const std::string& text) {
    auto queries = parse_query_text(schema, text);
    if (queries.size() != 1)
        throw parse_error(1, 1, "expected exactly one query, found " +
                                    std::to_string(queries.size()));
    return std::move(queries.front());
}

PathQuery parse_path_word(const SchemaPtr& schema, const std::string& text) {
    auto words = parse_path_words(schema, text);
    if (words.size() != 1)
        throw parse_error(1, 1,
                          "expected exactly one word, found " + std::to_string(words.size()));
    return std::move(words.front());
}

std::vector<PathQuery> parse_path_words(const SchemaPtr& schema, const std::string& text) {
    std::vector<PathQuery> out;
    for (const auto& [number, line] : content_lines(text)) {
        std::istringstream in(line);
        std::string word;
        while (in >> word) {
            std::vector<int> letters;
            int col = 1;
            for (char c : word) {
                int idx = schema->index_of(std::string(1, c));
                if (idx < 0)
                    throw parse_error(number, col, std::string("unknown letter: ") + c);
                letters.push_back(idx);
                ++col;
            }
            if (letters.empty())
                throw parse_error(number, 1, "empty word");
            out.emplace_back(schema, std::move(letters));
        }
    }
    return out;
}

SchemaPtr infer_path_schema(const std::vector<std::string>& words) {
    std::set<char> letters;
    for (const std::string& w : words)
        for (char c : w)
            letters.insert(c);
    std::vector<Relation> relations;
    for (char c : letters)
        relations.push_back(Relation{std::string(1, c), 2});
    return make_schema(std::move(relations));
}

std::string write_schema_text(const Schema& schema) {
    std::string out;
    for (const Relation& r : schema.relations())
        out += r.name + "/" + std::to_string(r.arity) + "\n";
    return out;
}

std::string write_structure_text(const Structure& s) {
    std::string out;
    for (const NamedFact& f : named_facts(s)) {
        out += f.relation + "(";
        for (size_t i = 0; i < f.args.size(); ++i) {
            if (i)
                out += ", ";
            out += f.args[i];
        }
        out += ")\n";
    }
    return out;
}

std::string write_query_text(const ConjunctiveQuery& q) {
    std::string out = q.name() + "(";
    for (size_t i = 0; i < q.free_vars().size(); ++i) {
        if (i)
            out += ", ";
        out += q.free_vars()[i];
    }
    out += ") :- ";
    for (size_t i = 0; i < q.atoms().size(); ++i) {
        if (i)
            out += ", ";
        const QueryAtom& atom = q.atoms()[i];
        out += q.schema()->relation(atom.relation).name + "(";
        for (size_t j = 0; j < atom.vars.size(); ++j) {
            if (j)
                out += ", ";
            out += atom.vars[j];
        }
        out += ")";
    }
    out += (q.atoms().empty() ? "." : " .");
    out += "\n";
    return out;
}

std::string write_query_text(const UnionQuery& q) {
    std::string out;
    for (const ConjunctiveQuery& d : q.disjuncts())
        out += write_query_text(d);
    return out;
}

} // namespace bagdet
