#include "arcfree/fieldexpr.hpp"

#include <cctype>
#include <regex>

namespace arcfree {

ParseError::ParseError(int line, int column, std::string const &msg)
    : std::invalid_argument(std::to_string(line) + ":" + std::to_string(column) + ": " + msg), line_(line),
      column_(column)
{
}

namespace {

class Parser {
public:
	Parser(std::string_view src, FreeFieldContext ctx) : s_(src), ctx_(ctx) {}

	FieldExpr parse()
	{
		skip();
		if (at_end())
			fail("empty expression");
		FieldExpr e = expr();
		skip();
		if (!at_end())
			fail(std::string("unexpected '") + s_[pos_] + "'");
		return e;
	}

private:
	[[noreturn]] void fail(std::string const &msg, std::size_t at) const
	{
		int line = 1, col = 1;
		for (std::size_t i = 0; i < at && i < s_.size(); ++i)
		{
			if (s_[i] == '\n')
			{
				++line;
				col = 1;
			}
			else
				++col;
		}
		throw ParseError(line, col, msg);
	}
	[[noreturn]] void fail(std::string const &msg) const { fail(msg, pos_); }

	bool at_end() const { return pos_ >= s_.size(); }
	char peek() const { return at_end() ? '\0' : s_[pos_]; }
	void skip()
	{
		while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	bool starts_number() const
	{
		char c = peek();
		if (std::isdigit(static_cast<unsigned char>(c)))
			return true;
		if (c == '-' && pos_ + 1 < s_.size())
			return std::isdigit(static_cast<unsigned char>(s_[pos_ + 1])) != 0;
		return false;
	}

	long integer()
	{
		std::size_t start = pos_;
		while (std::isdigit(static_cast<unsigned char>(peek())))
			++pos_;
		if (start == pos_)
			fail("expected an integer");
		if (pos_ - start > 12)
			fail("integer too large", start);
		return std::stol(std::string(s_.substr(start, pos_ - start)));
	}

	Rational rational()
	{
		std::size_t start = pos_;
		bool neg = false;
		if (peek() == '-')
		{
			neg = true;
			++pos_;
		}
		long num = integer();
		long den = 1;
		if (peek() == '/')
		{
			++pos_;
			den = integer();
			if (den == 0)
				fail("zero denominator", start);
		}
		return make_rational(neg ? -num : num, den);
	}

	FieldExpr expr()
	{
		FieldExpr sum;
		sum.kind = FieldExpr::Kind::sum;
		sum.children.push_back(term());
		skip();
		while (peek() == '+' || peek() == '-')
		{
			if (peek() == '+')
				++pos_;
			skip();
			sum.children.push_back(term());
			skip();
		}
		if (sum.children.size() == 1)
			return std::move(sum.children.front());
		return sum;
	}

	bool starts_factor() const
	{
		char c = peek();
		return c == ':' || c == '(' || std::isalpha(static_cast<unsigned char>(c));
	}

	FieldExpr term()
	{
		skip();
		Rational sign(1);
		if (peek() == '-' && !starts_number())
		{
			++pos_;
			skip();
			if (!starts_number())
			{
				FieldExpr sc;
				sc.kind = FieldExpr::Kind::scaled;
				sc.scalar = Rational(-1);
				sc.children.push_back(factor());
				return sc;
			}
			sign = Rational(-1);
		}
		if (starts_number())
		{
			Rational q = sign * rational();
			skip();
			if (!starts_factor())
			{
				FieldExpr id;
				id.kind = FieldExpr::Kind::identity;
				id.scalar = q;
				return id;
			}
			FieldExpr sc;
			sc.kind = FieldExpr::Kind::scaled;
			sc.scalar = q;
			sc.children.push_back(factor());
			return sc;
		}
		return factor();
	}

	FieldExpr factor()
	{
		skip();
		if (at_end())
			fail("unexpected end of input");
		if (s_.substr(pos_, 2) == "d^")
		{
			pos_ += 2;
			long k = integer();
			FieldExpr d;
			d.kind = FieldExpr::Kind::derivative;
			d.order = static_cast<int>(k);
			d.children.push_back(factor());
			return d;
		}
		char c = peek();
		if (c == ':')
		{
			std::size_t open = pos_++;
			FieldExpr no;
			no.kind = FieldExpr::Kind::normal_order;
			for (;;)
			{
				skip();
				if (at_end())
					fail("unbalanced ':' opened here", open);
				if (peek() == ':' && !opens_group())
				{
					if (no.children.empty())
						fail("empty ':' group", open);
					break;
				}
				if (!starts_factor())
					fail(std::string("unexpected '") + peek() + "' inside ':'");
				no.children.push_back(factor());
			}
			++pos_;
			if (no.children.size() == 1)
				return std::move(no.children.front());
			return no;
		}
		if (c == '(')
		{
			std::size_t open = pos_++;
			FieldExpr e = expr();
			skip();
			if (peek() != ')')
				fail("unbalanced '(' opened here", open);
			++pos_;
			return e;
		}
		if (std::isalpha(static_cast<unsigned char>(c)))
			return atom();
		fail(std::string("unexpected '") + c + "'");
	}

	// inside a group, a run of colons opens nested groups when an operand follows it
	// directly, and closes groups otherwise
	bool opens_group() const
	{
		std::size_t p = pos_;
		while (p < s_.size() && s_[p] == ':')
			++p;
		if (p >= s_.size())
			return false;
		char c = s_[p];
		return c == '(' || std::isalpha(static_cast<unsigned char>(c));
	}

	FieldExpr atom()
	{
		std::size_t start = pos_;
		while (std::isalpha(static_cast<unsigned char>(peek())))
			++pos_;
		std::string name(s_.substr(start, pos_ - start));
		GenKind kind;
		if (name == "beta")
			kind = GenKind::beta;
		else if (name == "gamma")
			kind = GenKind::gamma;
		else if (name == "b")
			kind = GenKind::b;
		else if (name == "c")
			kind = GenKind::c;
		else
			fail("unknown symbol '" + name + "'", start);
		if (peek() != '_')
			fail("expected '_' and an index after '" + name + "'");
		++pos_;
		std::size_t idx_at = pos_;
		long idx = integer();
		Generator g{kind, static_cast<int>(idx)};
		if (idx < 1 || !ctx_.contains(g))
			fail("index " + std::to_string(idx) + " out of range for " + name, idx_at);
		FieldExpr e;
		e.kind = FieldExpr::Kind::generator;
		e.gen = g;
		return e;
	}

	std::string_view s_;
	FreeFieldContext ctx_;
	std::size_t pos_ = 0;
};

} // namespace

std::string FieldExpr::to_text() const
{
	switch (kind)
	{
	case Kind::generator:
		return std::string(arcfree::to_string(gen.kind)) + "_" + std::to_string(gen.index);
	case Kind::derivative:
		return "d^" + std::to_string(order) + " " + children[0].to_text();
	case Kind::normal_order: {
		std::string s = ":";
		for (std::size_t i = 0; i < children.size(); ++i)
		{
			if (i)
				s += ' ';
			bool wrap = children[i].kind == Kind::sum || children[i].kind == Kind::scaled ||
			            children[i].kind == Kind::identity;
			s += wrap ? "(" + children[i].to_text() + ")" : children[i].to_text();
		}
		return s + ":";
	}
	case Kind::scaled: {
		bool wrap = children[0].kind == Kind::sum || children[0].kind == Kind::scaled ||
		            children[0].kind == Kind::identity;
		return arcfree::to_string(scalar) + " " + (wrap ? "(" + children[0].to_text() + ")" : children[0].to_text());
	}
	case Kind::sum: {
		std::string s;
		for (std::size_t i = 0; i < children.size(); ++i)
			s += (i ? " + " : "") + children[i].to_text();
		return s;
	}
	case Kind::identity:
		return arcfree::to_string(scalar);
	}
	return {};
}

FieldExpr parse_field_expr(std::string_view src, FreeFieldContext ctx)
{
	ctx.validate();
	return Parser(src, ctx).parse();
}

FieldPoly evaluate(FieldExpr const &e, OpeEngine &engine)
{
	auto ctx = engine.ctx();
	switch (e.kind)
	{
	case FieldExpr::Kind::generator:
		return FieldPoly::generator(ctx, e.gen);
	case FieldExpr::Kind::derivative:
		return derivative(evaluate(e.children[0], engine), e.order);
	case FieldExpr::Kind::normal_order: {
		FieldPoly acc = evaluate(e.children.back(), engine);
		for (std::size_t i = e.children.size() - 1; i-- > 0;)
			acc = engine.normal_order(evaluate(e.children[i], engine), acc);
		return acc;
	}
	case FieldExpr::Kind::scaled:
		return e.scalar * evaluate(e.children[0], engine);
	case FieldExpr::Kind::sum: {
		FieldPoly acc(ctx);
		for (auto const &c : e.children)
			acc += evaluate(c, engine);
		return acc;
	}
	case FieldExpr::Kind::identity:
		return FieldPoly::identity(ctx, e.scalar);
	}
	return FieldPoly(ctx);
}

FieldPoly parse_field(std::string_view src, OpeEngine &engine)
{
	return evaluate(parse_field_expr(src, engine.ctx()), engine);
}

FieldPoly parse_field(std::string_view src, FreeFieldContext ctx)
{
	OpeEngine engine(ctx);
	return parse_field(src, engine);
}

FreeFieldContext infer_context(std::string_view src)
{
	static std::regex const re(R"((beta|gamma|b|c)_(\d+))");
	FreeFieldContext ctx{0, 0};
	std::string s(src);
	for (std::sregex_iterator it(s.begin(), s.end(), re), end; it != end; ++it)
	{
		int idx = std::stoi((*it)[2].str());
		auto name = (*it)[1].str();
		// only whole words count
		auto p = static_cast<std::size_t>(it->position());
		if (p > 0 && std::isalpha(static_cast<unsigned char>(s[p - 1])))
			continue;
		int &slot = (name == "beta" || name == "gamma") ? ctx.n_bg : ctx.n_bc;
		slot = std::max(slot, idx);
	}
	if (ctx.n_bg == 0 && ctx.n_bc == 0)
		ctx.n_bg = 1;
	return ctx;
}

} // namespace arcfree
