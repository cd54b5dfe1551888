#include "arcfree/freefield.hpp"

#include <algorithm>
#include <sstream>

namespace arcfree {

std::string_view to_string(GenKind k)
{
	switch (k)
	{
	case GenKind::beta: return "beta";
	case GenKind::gamma: return "gamma";
	case GenKind::b: return "b";
	case GenKind::c: return "c";
	}
	return "?";
}

void FreeFieldContext::validate() const
{
	if (n_bg < 0 || n_bc < 0)
		throw std::invalid_argument("free-field ranks must be non-negative");
	if (n_bg == 0 && n_bc == 0)
		throw std::invalid_argument("free-field context needs a positive rank");
}

bool FreeFieldContext::contains(Generator g) const
{
	int rank = (g.kind == GenKind::beta || g.kind == GenKind::gamma) ? n_bg : n_bc;
	return g.index >= 1 && g.index <= rank;
}

int contraction(Generator g, Generator h)
{
	if (g.index != h.index)
		return 0;
	switch (g.kind)
	{
	case GenKind::beta: return h.kind == GenKind::gamma ? 1 : 0;
	case GenKind::gamma: return h.kind == GenKind::beta ? -1 : 0;
	case GenKind::b: return h.kind == GenKind::c ? 1 : 0;
	case GenKind::c: return h.kind == GenKind::b ? 1 : 0;
	}
	return 0;
}

std::size_t MonomialHash::operator()(Monomial const &m) const noexcept
{
	std::size_t h = 1469598103934665603ull;
	for (auto const &f : m)
	{
		std::size_t v = (static_cast<std::size_t>(f.gen.kind) << 48) ^ (static_cast<std::size_t>(f.gen.index) << 16) ^
		                static_cast<std::size_t>(f.deriv);
		h = (h ^ v) * 1099511628211ull;
	}
	return h;
}

int twice_weight(Monomial const &m)
{
	int w = 0;
	for (auto const &f : m)
		w += f.twice_weight();
	return w;
}

Parity parity(Monomial const &m)
{
	Parity p = Parity::even;
	for (auto const &f : m)
		p = p + f.parity();
	return p;
}

namespace {

using Poly = FieldPoly::Terms;

void add_into(Poly &dst, Monomial const &m, Rational const &c)
{
	if (is_zero(c))
		return;
	auto [it, inserted] = dst.try_emplace(m, c);
	if (!inserted)
	{
		it->second += c;
		if (is_zero(it->second))
			dst.erase(it);
	}
}

void add_into(Poly &dst, Poly const &src, Rational const &s)
{
	if (is_zero(s))
		return;
	for (auto const &[m, c] : src)
		add_into(dst, m, s * c);
}

// Sorts factors, returning the Koszul sign, or 0 when an odd factor repeats.
int canonicalize(std::vector<Factor> &f)
{
	int sign = 1;
	for (std::size_t i = 1; i < f.size(); ++i)
		for (std::size_t j = i; j > 0 && f[j] < f[j - 1]; --j)
		{
			if (is_odd(f[j].parity()) && is_odd(f[j - 1].parity()))
				sign = -sign;
			std::swap(f[j], f[j - 1]);
		}
	for (std::size_t i = 1; i < f.size(); ++i)
		if (f[i] == f[i - 1] && is_odd(f[i].parity()))
			return 0;
	return sign;
}

void add_unsorted(Poly &dst, std::vector<Factor> f, Rational const &c)
{
	int s = canonicalize(f);
	if (s != 0)
		add_into(dst, f, s * c);
}

Poly derivative_once(Poly const &p)
{
	Poly out;
	for (auto const &[m, c] : p)
		for (std::size_t i = 0; i < m.size(); ++i)
		{
			std::vector<Factor> f = m;
			++f[i].deriv;
			add_unsorted(out, std::move(f), c);
		}
	return out;
}

} // namespace

FieldPoly FieldPoly::identity(FreeFieldContext ctx, Rational coeff)
{
	FieldPoly p(ctx);
	p.add_monomial({}, coeff);
	return p;
}

FieldPoly FieldPoly::generator(FreeFieldContext ctx, Generator g, int deriv)
{
	if (!ctx.contains(g))
		throw std::out_of_range(std::string(to_string(g.kind)) + "_" + std::to_string(g.index) +
		                        " is outside the context");
	FieldPoly p(ctx);
	p.add_monomial({Factor{g, deriv}}, Rational(1));
	return p;
}

void FieldPoly::add_factors(std::vector<Factor> factors, Rational const &coeff)
{
	for (auto const &f : factors)
		if (!ctx_.contains(f.gen) || f.deriv < 0)
			throw std::out_of_range("factor outside the free-field context");
	add_unsorted(terms_, std::move(factors), coeff);
}

void FieldPoly::add_monomial(Monomial const &m, Rational const &coeff)
{
	add_into(terms_, m, coeff);
}

Rational FieldPoly::coefficient(Monomial const &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? Rational(0) : it->second;
}

FieldPoly &FieldPoly::operator+=(FieldPoly const &o)
{
	if (!(ctx_ == o.ctx_))
		throw ContextMismatch("adding fields from different free-field contexts");
	add_into(terms_, o.terms_, Rational(1));
	return *this;
}

FieldPoly &FieldPoly::operator-=(FieldPoly const &o)
{
	if (!(ctx_ == o.ctx_))
		throw ContextMismatch("subtracting fields from different free-field contexts");
	add_into(terms_, o.terms_, Rational(-1));
	return *this;
}

FieldPoly &FieldPoly::operator*=(Rational const &s)
{
	if (arcfree::is_zero(s))
		terms_.clear();
	for (auto &[m, c] : terms_)
		c *= s;
	return *this;
}

namespace {

std::string factor_text(Factor const &f)
{
	std::string s;
	if (f.deriv > 0)
		s = "d^" + std::to_string(f.deriv) + " ";
	return s + std::string(to_string(f.gen.kind)) + "_" + std::to_string(f.gen.index);
}

} // namespace

std::string to_text(Monomial const &m)
{
	if (m.empty())
		return "1";
	if (m.size() == 1)
		return factor_text(m[0]);
	std::string s = ":";
	for (std::size_t i = 0; i < m.size(); ++i)
	{
		if (i)
			s += ' ';
		s += factor_text(m[i]);
	}
	return s + ":";
}

std::string FieldPoly::to_text() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (auto const &[m, c] : terms_)
	{
		if (!out.empty())
			out += " + ";
		if (m.empty())
			out += to_string(c);
		else if (c == 1)
			out += arcfree::to_text(m);
		else
			out += to_string(c) + " " + arcfree::to_text(m);
	}
	return out;
}

nlohmann::json FieldPoly::to_json() const
{
	nlohmann::json terms = nlohmann::json::array();
	for (auto const &[m, c] : terms_)
	{
		nlohmann::json factors = nlohmann::json::array();
		for (auto const &f : m)
			factors.push_back({std::string(to_string(f.gen.kind)), f.gen.index, f.deriv});
		terms.push_back({{"factors", factors}, {"coeff", to_string(c)}});
	}
	return {{"ctx", {{"n_bg", ctx_.n_bg}, {"n_bc", ctx_.n_bc}}}, {"terms", terms}};
}

FieldPoly FieldPoly::from_json(nlohmann::json const &j)
{
	FreeFieldContext ctx{j.at("ctx").at("n_bg").get<int>(), j.at("ctx").at("n_bc").get<int>()};
	FieldPoly p(ctx);
	for (auto const &t : j.at("terms"))
	{
		std::vector<Factor> f;
		for (auto const &x : t.at("factors"))
		{
			auto name = x.at(0).get<std::string>();
			GenKind k = name == "beta" ? GenKind::beta
			            : name == "gamma" ? GenKind::gamma
			            : name == "b" ? GenKind::b
			            : name == "c" ? GenKind::c
			                          : throw std::invalid_argument("unknown generator kind '" + name + "'");
			f.push_back({Generator{k, x.at(1).get<int>()}, x.at(2).get<int>()});
		}
		p.add_factors(std::move(f), parse_rational(t.at("coeff").get<std::string>()));
	}
	return p;
}

FieldPoly OPEResult::pole(int p, FreeFieldContext ctx) const
{
	auto it = poles.find(p);
	return it == poles.end() ? FieldPoly(ctx) : it->second;
}

nlohmann::json OPEResult::to_json() const
{
	nlohmann::json j = nlohmann::json::object();
	for (auto const &[p, f] : poles)
		j[std::to_string(p)] = f.to_text();
	return j;
}

FieldPoly derivative(FieldPoly const &a, int k)
{
	FieldPoly out = a;
	for (int i = 0; i < k; ++i)
	{
		FieldPoly next(a.ctx());
		for (auto const &[m, c] : derivative_once(out.terms()))
			next.add_monomial(m, c);
		out = std::move(next);
	}
	return out;
}

FieldPoly divided_derivative(FieldPoly const &a, int k)
{
	return (1 / factorial(k)) * derivative(a, k);
}

std::optional<Rational> weight(FieldPoly const &a)
{
	std::optional<int> w;
	for (auto const &[m, c] : a.terms())
	{
		int t = twice_weight(m);
		if (w && *w != t)
			return std::nullopt;
		w = t;
	}
	if (!w)
		return std::nullopt;
	return make_rational(*w, 2);
}

std::optional<Parity> parity(FieldPoly const &a)
{
	std::optional<Parity> p;
	for (auto const &[m, c] : a.terms())
	{
		Parity q = parity(m);
		if (p && *p != q)
			return std::nullopt;
		p = q;
	}
	return p;
}

// ---------------------------------------------------------------------------
// lambda-bracket engine

std::size_t OpeEngine::PairHash::operator()(std::pair<Monomial, Monomial> const &p) const noexcept
{
	MonomialHash h;
	return h(p.first) * 31 + h(p.second);
}

OpeEngine::OpeEngine(FreeFieldContext ctx) : ctx_(ctx)
{
	ctx_.validate();
}

void OpeEngine::check(FieldPoly const &a) const
{
	if (!(a.ctx() == ctx_))
		throw ContextMismatch("field belongs to a different free-field context");
}

OpeEngine::Poly OpeEngine::prepend(Factor const &x, Poly const &p, Rational const &scale)
{
	Poly out;
	if (is_zero(scale))
		return out;
	for (auto const &[m, c] : p)
	{
		auto pos = std::lower_bound(m.begin(), m.end(), x);
		if (pos != m.end() && *pos == x && is_odd(x.parity()))
			continue;
		int sign = 1;
		if (is_odd(x.parity()))
			for (auto it = m.begin(); it != pos; ++it)
				if (is_odd(it->parity()))
					sign = -sign;
		Monomial nm;
		nm.reserve(m.size() + 1);
		nm.insert(nm.end(), m.begin(), pos);
		nm.push_back(x);
		nm.insert(nm.end(), pos, m.end());
		add_into(out, nm, sign * scale * c);
	}
	return out;
}

OpeEngine::Poly OpeEngine::gen_mode(Factor const &x, int n, Monomial const &b)
{
	// (d^d g)_(n) = (-1)^d n (n-1) ... (n-d+1) g_(n-d); g_(k) is a derivation with
	// g_(k) d^q h = k! kappa(g,h) delta_{kq}
	Poly out;
	Rational pre = falling_factorial(n, x.deriv);
	if (is_zero(pre))
		return out;
	if (x.deriv % 2)
		pre = -pre;
	int k = n - x.deriv;
	int sign = 1;
	for (std::size_t i = 0; i < b.size(); ++i)
	{
		int kappa = contraction(x.gen, b[i].gen);
		if (kappa != 0 && b[i].deriv == k)
		{
			Monomial rest;
			rest.reserve(b.size() - 1);
			rest.insert(rest.end(), b.begin(), b.begin() + static_cast<std::ptrdiff_t>(i));
			rest.insert(rest.end(), b.begin() + static_cast<std::ptrdiff_t>(i) + 1, b.end());
			add_into(out, rest, sign * kappa * pre * factorial(k));
		}
		if (is_odd(x.parity()) && is_odd(b[i].parity()))
			sign = -sign;
	}
	return out;
}

OpeEngine::Poly OpeEngine::divided_derivative(Monomial const &m, int k)
{
	Poly p{{m, Rational(1)}};
	for (int i = 0; i < k; ++i)
		p = derivative_once(p);
	Poly out;
	add_into(out, p, 1 / factorial(k));
	return out;
}

std::vector<OpeEngine::Poly> const &OpeEngine::products(Monomial const &a, Monomial const &b)
{
	auto key = std::make_pair(a, b);
	if (auto it = prod_cache_.find(key); it != prod_cache_.end())
		return it->second;

	std::vector<Poly> res;
	int jmax = (twice_weight(a) + twice_weight(b) - 2) / 2;
	if (a.empty() || b.empty() || twice_weight(a) + twice_weight(b) < 2)
	{
		// identity has no non-negative modes; a_(n)|0> = 0 for n >= 0
	}
	else if (a.size() == 1)
	{
		for (int n = 0; n <= jmax; ++n)
			res.push_back(gen_mode(a[0], n, b));
	}
	else if (b.size() == 1)
	{
		// skew-symmetry: a_(n) y = -(-1)^{|a||y|} sum_i (-1)^{n+i} d^(i) (y_(n+i) a)
		Factor const &y = b[0];
		std::vector<Poly> ya;
		for (int k = 0; k <= jmax; ++k)
			ya.push_back(gen_mode(y, k, a));
		int s = -koszul(parity(a), y.parity());
		for (int n = 0; n <= jmax; ++n)
		{
			Poly r;
			for (int i = 0; n + i <= jmax; ++i)
			{
				int sg = ((n + i) % 2 ? -1 : 1) * s;
				for (auto const &[m, c] : ya[static_cast<std::size_t>(n + i)])
					add_into(r, divided_derivative(m, i), sg * c);
			}
			res.push_back(std::move(r));
		}
	}
	else
	{
		// non-commutative Wick: a_(n) :y b': = (-1)^{|a||y|} :y (a_(n) b'): + :(a_(n) y) b':
		//   + sum_{j<n} C(n,j) (a_(j) y)_(n-1-j) b'
		Factor const &y = b[0];
		Monomial rest(b.begin() + 1, b.end());
		Monomial ym{y};
		std::vector<Poly> ab = products(a, rest);
		std::vector<Poly> ay = products(a, ym);
		int s = koszul(parity(a), y.parity());
		Poly rest_poly{{rest, Rational(1)}};
		for (int n = 0; n <= jmax; ++n)
		{
			Poly r;
			if (static_cast<std::size_t>(n) < ab.size())
				r = prepend(y, ab[static_cast<std::size_t>(n)], Rational(s));
			for (int j = 0; j < n && static_cast<std::size_t>(j) < ay.size(); ++j)
				add_into(r, product(ay[static_cast<std::size_t>(j)], rest, n - 1 - j), binomial(n, j));
			if (static_cast<std::size_t>(n) < ay.size())
				add_into(r, normal_order(ay[static_cast<std::size_t>(n)], rest_poly), Rational(1));
			res.push_back(std::move(r));
		}
	}
	while (!res.empty() && res.back().empty())
		res.pop_back();
	return prod_cache_.emplace(std::move(key), std::move(res)).first->second;
}

OpeEngine::Poly OpeEngine::product(Poly const &a, Monomial const &b, int n)
{
	Poly out;
	for (auto const &[m, c] : a)
	{
		auto const &p = products(m, b);
		if (static_cast<std::size_t>(n) < p.size())
			add_into(out, p[static_cast<std::size_t>(n)], c);
	}
	return out;
}

OpeEngine::Poly const &OpeEngine::normal_order(Monomial const &a, Monomial const &b)
{
	auto key = std::make_pair(a, b);
	if (auto it = nop_cache_.find(key); it != nop_cache_.end())
		return it->second;

	Poly res;
	Poly bp{{b, Rational(1)}};
	if (a.empty())
		res = bp;
	else if (a.size() == 1)
		res = prepend(a[0], bp, Rational(1));
	else
	{
		// (:x a':)_(-1) b = sum_{j>=0} x_(-1-j) (a'_(j-1) b) + (-1)^{|x||a'|} sum_{j>=0} a'_(-2-j) (x_(j) b)
		Factor const &x = a[0];
		Monomial rest(a.begin() + 1, a.end());
		res = prepend(x, normal_order(rest, b), Rational(1));
		auto const &rb = products(rest, b);
		for (std::size_t j = 1; j <= rb.size(); ++j)
		{
			Factor dx{x.gen, x.deriv + static_cast<int>(j)};
			add_into(res, prepend(dx, rb[j - 1], 1 / factorial(static_cast<int>(j))), Rational(1));
		}
		int s = koszul(x.parity(), parity(rest));
		int jmax = (x.twice_weight() + twice_weight(b) - 2) / 2;
		for (int j = 0; j <= jmax; ++j)
		{
			Poly xb = gen_mode(x, j, b);
			if (xb.empty())
				continue;
			add_into(res, normal_order(divided_derivative(rest, j + 1), xb), Rational(s));
		}
	}
	return nop_cache_.emplace(std::move(key), std::move(res)).first->second;
}

OpeEngine::Poly OpeEngine::normal_order(Poly const &a, Poly const &b)
{
	Poly out;
	for (auto const &[ma, ca] : a)
		for (auto const &[mb, cb] : b)
			add_into(out, normal_order(ma, mb), ca * cb);
	return out;
}

FieldPoly OpeEngine::normal_order(FieldPoly const &a, FieldPoly const &b)
{
	check(a);
	check(b);
	FieldPoly out(ctx_);
	for (auto const &[m, c] : normal_order(a.terms(), b.terms()))
		out.add_monomial(m, c);
	return out;
}

FieldPoly OpeEngine::product(FieldPoly const &a, FieldPoly const &b, int n)
{
	check(a);
	check(b);
	if (n < 0)
		return normal_order(arcfree::divided_derivative(a, -n - 1), b);
	FieldPoly out(ctx_);
	for (auto const &[mb, cb] : b.terms())
		for (auto const &[m, c] : product(a.terms(), mb, n))
			out.add_monomial(m, c * cb);
	return out;
}

OPEResult OpeEngine::ope(FieldPoly const &a, FieldPoly const &b)
{
	check(a);
	check(b);
	OPEResult r;
	for (auto const &[ma, ca] : a.terms())
		for (auto const &[mb, cb] : b.terms())
		{
			auto const &p = products(ma, mb);
			for (std::size_t j = 0; j < p.size(); ++j)
			{
				if (p[j].empty())
					continue;
				auto [it, ins] = r.poles.try_emplace(static_cast<int>(j) + 1, ctx_);
				for (auto const &[m, c] : p[j])
					it->second.add_monomial(m, ca * cb * c);
			}
		}
	std::erase_if(r.poles, [](auto const &kv) { return kv.second.is_zero(); });
	return r;
}

FieldPoly normal_order(FieldPoly const &a, FieldPoly const &b)
{
	if (!(a.ctx() == b.ctx()))
		throw ContextMismatch("normal_order of fields from different contexts");
	OpeEngine e(a.ctx());
	return e.normal_order(a, b);
}

OPEResult ope(FieldPoly const &a, FieldPoly const &b)
{
	if (!(a.ctx() == b.ctx()))
		throw ContextMismatch("ope of fields from different contexts");
	OpeEngine e(a.ctx());
	return e.ope(a, b);
}

FieldPoly virasoro_S(FreeFieldContext ctx)
{
	if (ctx.n_bg <= 0)
		throw std::invalid_argument("L^S needs a positive beta-gamma rank");
	FieldPoly L(ctx);
	Rational half = make_rational(1, 2);
	for (int i = 1; i <= ctx.n_bg; ++i)
	{
		L.add_factors({{{GenKind::beta, i}, 0}, {{GenKind::gamma, i}, 1}}, half);
		L.add_factors({{{GenKind::beta, i}, 1}, {{GenKind::gamma, i}, 0}}, -half);
	}
	return L;
}

FieldPoly virasoro_E(FreeFieldContext ctx)
{
	if (ctx.n_bc <= 0)
		throw std::invalid_argument("L^E needs a positive bc rank");
	FieldPoly L(ctx);
	Rational half = make_rational(1, 2);
	for (int i = 1; i <= ctx.n_bc; ++i)
	{
		L.add_factors({{{GenKind::b, i}, 0}, {{GenKind::c, i}, 1}}, -half);
		L.add_factors({{{GenKind::b, i}, 1}, {{GenKind::c, i}, 0}}, half);
	}
	return L;
}

Rational central_charge(OpeEngine &engine, FieldPoly const &L)
{
	auto r = engine.ope(L, L);
	FreeFieldContext ctx = L.ctx();
	for (auto const &[p, f] : r.poles)
		if (p > 4)
			throw VirasoroShapeError(p, "pole of order " + std::to_string(p) + " in L(z)L(w)");
	if (!r.pole(3, ctx).is_zero())
		throw VirasoroShapeError(3, "third-order pole is " + r.pole(3, ctx).to_text());
	FieldPoly p4 = r.pole(4, ctx);
	Rational half_c = p4.constant_term();
	if (!(p4 == FieldPoly::identity(ctx, half_c)))
		throw VirasoroShapeError(4, "fourth-order pole is not a constant: " + p4.to_text());
	if (!(r.pole(2, ctx) == Rational(2) * L))
		throw VirasoroShapeError(2, "second-order pole is " + r.pole(2, ctx).to_text() + ", expected 2L");
	if (!(r.pole(1, ctx) == derivative(L)))
		throw VirasoroShapeError(1, "first-order pole is " + r.pole(1, ctx).to_text() + ", expected dL");
	return 2 * half_c;
}

Rational central_charge(FieldPoly const &L)
{
	OpeEngine e(L.ctx());
	return central_charge(e, L);
}

} // namespace arcfree
