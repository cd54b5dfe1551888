#pragma once

#include "arcfree/freefield.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace arcfree {

class ParseError : public std::invalid_argument {
public:
	ParseError(int line, int column, std::string const &msg);
	int line() const { return line_; }
	int column() const { return column_; }

private:
	int line_, column_;
};

/// Syntax tree of a field expression.
///
///   expr    := term ('+' term)*
///   term    := rational? factor | rational
///   factor  := ('d^' k)? (atom | ':' factor+ ':' | '(' expr ')')
///   atom    := ('beta' | 'gamma' | 'b' | 'c') '_' index
///
/// A colon group with several entries nests to the right, :e1 e2 e3: = :e1 :e2 e3::,
/// which is also how canonical monomials print.
struct FieldExpr {
	enum class Kind { generator, derivative, normal_order, scaled, sum, identity };

	Kind kind = Kind::identity;
	Generator gen;            // generator
	int order = 0;            // derivative
	Rational scalar{1};       // scaled, identity
	std::vector<FieldExpr> children;

	std::string to_text() const;
};

FieldExpr parse_field_expr(std::string_view src, FreeFieldContext ctx);
FieldPoly evaluate(FieldExpr const &e, OpeEngine &engine);
FieldPoly parse_field(std::string_view src, FreeFieldContext ctx);
FieldPoly parse_field(std::string_view src, OpeEngine &engine);

/// Smallest context containing every generator named in the source (at least one slot).
FreeFieldContext infer_context(std::string_view src);

} // namespace arcfree
