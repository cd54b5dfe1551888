#include "oracles.hpp"

#include "arcfree/fieldexpr.hpp"

#include <doctest.h>

using namespace arcfree;

TEST_CASE("basic parses")
{
	FreeFieldContext ctx{1, 0};
	auto bg = parse_field(":beta_1 gamma_1:", ctx);
	CHECK(weight(bg) == 1);
	CHECK(bg == normal_order(FieldPoly::generator(ctx, {GenKind::beta, 1}), FieldPoly::generator(ctx, {GenKind::gamma, 1})));

	auto L = parse_field("1/2 :beta_1 d^1 gamma_1: + -1/2 :d^1 beta_1 gamma_1:", ctx);
	CHECK(L == virasoro_S(ctx));
	CHECK(parse_field("1/2:beta_1 d^1gamma_1:-1/2:d^1beta_1 gamma_1:", ctx) == L);

	FreeFieldContext f{0, 2};
	CHECK(parse_field("3 b_2", f) == make_rational(3) * FieldPoly::generator(f, {GenKind::b, 2}));
	CHECK(parse_field("2", f) == FieldPoly::identity(f, 2));
	CHECK(parse_field("d^2 c_1", f) == FieldPoly::generator(f, {GenKind::c, 1}, 2));
	CHECK(parse_field(":b_1 b_1:", f).is_zero());
	CHECK(parse_field("(b_1 + c_1) - c_1", f) == FieldPoly::generator(f, {GenKind::b, 1}));
}

TEST_CASE("colon groups nest to the right")
{
	FreeFieldContext ctx{1, 0};
	OpeEngine e(ctx);
	auto b = FieldPoly::generator(ctx, {GenKind::beta, 1}), g = FieldPoly::generator(ctx, {GenKind::gamma, 1});
	CHECK(parse_field(":beta_1 gamma_1 beta_1:", e) == e.normal_order(b, e.normal_order(g, b)));
	CHECK(parse_field("::beta_1 gamma_1: beta_1:", e) == e.normal_order(e.normal_order(b, g), b));
	CHECK(parse_field(":beta_1 :gamma_1 beta_1::", e) == e.normal_order(b, e.normal_order(g, b)));
}

TEST_CASE("errors carry positions")
{
	FreeFieldContext ctx{2, 0};
	auto fails_at = [&](std::string const &src, int col, std::string const &what) {
		try
		{
			parse_field(src, ctx);
		}
		catch (ParseError const &e)
		{
			std::string msg = e.what();
			CAPTURE(msg);
			CHECK(e.line() == 1);
			CHECK(e.column() == col);
			CHECK(std::string(e.what()).find(what) != std::string::npos);
			return;
		}
		FAIL("no error for " << src);
	};
	fails_at(":beta_1 gamma_2", 1, "unbalanced");
	fails_at("beta_3", 6, "out of range");
	fails_at("  foo_1", 3, "unknown symbol");
	fails_at("beta_1 +", 9, "");
	fails_at("1/0 beta_1", 1, "");

	try
	{
		parse_field("beta_1 +\n  zeta_1", ctx);
		FAIL("expected an error");
	}
	catch (ParseError const &e)
	{
		CHECK(e.line() == 2);
		CHECK(e.column() == 3);
	}
	CHECK_THROWS_AS(parse_field("::", ctx), std::invalid_argument);
}

TEST_CASE("context inference")
{
	CHECK(infer_context("beta_2 + :c_3 b_1:") == FreeFieldContext{2, 3});
	CHECK(infer_context("1") == FreeFieldContext{1, 0});
	CHECK(infer_context("gamma_1") == FreeFieldContext{1, 0});
	CHECK(infer_context("b_1") == FreeFieldContext{0, 1});
}

TEST_CASE("canonical text round-trips")
{
	std::mt19937 rng(23);
	for (auto ctx : {FreeFieldContext{1, 1}, FreeFieldContext{2, 2}, FreeFieldContext{2, 0}})
	{
		OpeEngine e(ctx);
		for (int i = 0; i < 40; ++i)
		{
			auto f = oracle::random_field(rng, ctx, 1 + i % 6, 1 + i % 4);
			auto text = f.to_text();
			CAPTURE(text);
			CHECK(parse_field(text, e) == f);
			CHECK(parse_field(text, e).to_text() == text);
		}
	}
}

TEST_CASE("syntax tree prints back")
{
	FreeFieldContext ctx{1, 1};
	auto src = "1/2 :beta_1 d^1 gamma_1: + -1/2 :d^1 beta_1 gamma_1:";
	auto ast = parse_field_expr(src, ctx);
	CHECK(ast.kind == FieldExpr::Kind::sum);
	auto again = parse_field_expr(ast.to_text(), ctx);
	CHECK(again.to_text() == ast.to_text());
	OpeEngine e(ctx);
	CHECK(evaluate(ast, e) == evaluate(again, e));
}
