#ifndef BAGDET_PARSER_HPP
#define BAGDET_PARSER_HPP

#include "bagdet/query.hpp"
#include "bagdet/structure.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bagdet {

class parse_error : public std::runtime_error {
public:
    parse_error(int line, int col, const std::string& message);

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

/// Schema text: one `NAME/arity` per line; `#` starts a comment.
SchemaPtr parse_schema_text(const std::string& text);

/// Structure text: one `REL(c1, c2, ...)` fact per line (`REL()` for nullary).
/// Constants are free-form tokens without whitespace, parentheses or commas.
Structure parse_structure_text(const SchemaPtr& schema, const std::string& text);

/// Query text: statements `NAME(free, ...) :- ATOM, ATOM, ... .` where an
/// empty body is written `NAME() :- .`. Statements sharing a head NAME form
/// one union query; results are ordered by first appearance of the head.
std::vector<UnionQuery> parse_query_text(const SchemaPtr& schema, const std::string& text);

/// A query file expected to define exactly one (union) query.
UnionQuery parse_single_query_text(const SchemaPtr& schema, const std::string& text);

/// Path word: a single token whose characters are binary relation names.
PathQuery parse_path_word(const SchemaPtr& schema, const std::string& text);

/// One path word per line.
std::vector<PathQuery> parse_path_words(const SchemaPtr& schema, const std::string& text);

/// Schema with one binary relation per distinct character across the words.
SchemaPtr infer_path_schema(const std::vector<std::string>& words);

std::string write_schema_text(const Schema& schema);
std::string write_structure_text(const Structure& s);
std::string write_query_text(const UnionQuery& q);
std::string write_query_text(const ConjunctiveQuery& q);

} // namespace bagdet

#endif
