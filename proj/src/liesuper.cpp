#include "arcfree/liesuper.hpp"

#include "arcfree/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcfree {

std::string_view to_string(Parity p)
{
	return is_odd(p) ? "odd" : "even";
}

std::optional<Parity> SuperMatrix::parity() const
{
	std::optional<Parity> p;
	for (int i = 0; i < size(); ++i)
		for (int j = 0; j < size(); ++j)
		{
			if (is_zero(at(i, j)))
				continue;
			Parity q = coord_parity(i) + coord_parity(j);
			if (p && *p != q)
				return std::nullopt;
			p = q;
		}
	return p;
}

Rational SuperMatrix::supertrace() const
{
	Rational s;
	for (int i = 0; i < size(); ++i)
		s += is_odd(coord_parity(i)) ? Rational(-at(i, i)) : at(i, i);
	return s;
}

SuperMatrix operator*(SuperMatrix const &a, SuperMatrix const &b)
{
	SuperMatrix c(a.even_dim, a.odd_dim);
	int n = a.size();
	for (int i = 0; i < n; ++i)
		for (int k = 0; k < n; ++k)
		{
			if (is_zero(a.at(i, k)))
				continue;
			for (int j = 0; j < n; ++j)
				if (!is_zero(b.at(k, j)))
					c.at(i, j) += a.at(i, k) * b.at(k, j);
		}
	return c;
}

SuperMatrix operator+(SuperMatrix const &a, SuperMatrix const &b)
{
	SuperMatrix c = a;
	for (std::size_t i = 0; i < c.entries.size(); ++i)
		c.entries[i] += b.entries[i];
	return c;
}

SuperMatrix operator*(Rational const &s, SuperMatrix const &a)
{
	SuperMatrix c = a;
	for (auto &e : c.entries)
		e *= s;
	return c;
}

SuperMatrix supercommutator(SuperMatrix const &x, SuperMatrix const &y)
{
	auto px = x.parity().value_or(Parity::even);
	auto py = y.parity().value_or(Parity::even);
	return x * y + Rational(-koszul(px, py)) * (y * x);
}

std::string_view to_string(Family f)
{
	switch (f)
	{
	case Family::gl: return "gl";
	case Family::sl: return "sl";
	case Family::so: return "so";
	case Family::sp: return "sp";
	case Family::sl_super: return "sl_super";
	case Family::osp: return "osp";
	}
	return "?";
}

Family parse_family(std::string_view name)
{
	for (auto f : {Family::gl, Family::sl, Family::so, Family::sp, Family::sl_super, Family::osp})
		if (to_string(f) == name)
			return f;
	throw std::invalid_argument("unknown Lie superalgebra family '" + std::string(name) + "'");
}

namespace {

std::string label2(char const *head, int i, int j)
{
	return std::string(head) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

SuperMatrix unit(int p, int q, int i, int j)
{
	SuperMatrix m(p, q);
	m.at(i, j) = 1;
	return m;
}

struct Pending {
	std::string label;
	SuperMatrix m;
};

// sp_2n on coordinates offset..offset+2n-1 with J = [[0, I], [-I, 0]]
void append_sp_block(std::vector<Pending> &out, int p, int q, int offset, int n)
{
	for (int i = 0; i < n; ++i)
		for (int j = 0; j < n; ++j)
		{
			SuperMatrix m = unit(p, q, offset + i, offset + j);
			m.at(offset + n + j, offset + n + i) -= 1;
			out.push_back({label2("A", i + 1, j + 1), m});
		}
	for (int i = 0; i < n; ++i)
		for (int j = i; j < n; ++j)
		{
			SuperMatrix m = unit(p, q, offset + i, offset + n + j);
			if (i != j)
				m.at(offset + j, offset + n + i) += 1;
			out.push_back({label2("B", i + 1, j + 1), m});
		}
	for (int i = 0; i < n; ++i)
		for (int j = i; j < n; ++j)
		{
			SuperMatrix m = unit(p, q, offset + n + i, offset + j);
			if (i != j)
				m.at(offset + n + j, offset + i) += 1;
			out.push_back({label2("C", i + 1, j + 1), m});
		}
}

} // namespace

std::optional<int> LieSuperAlgebra::find(std::string_view label) const
{
	for (auto const &b : basis_)
		if (b.label == label)
			return b.index;
	return std::nullopt;
}

int LieSuperAlgebra::index_of(std::string_view label) const
{
	if (auto i = find(label))
		return *i;
	throw std::out_of_range("no basis element '" + std::string(label) + "' in " + name_);
}

Rational LieSuperAlgebra::structure(int i, int j, int k) const
{
	for (auto const &t : bracket_terms(i, j))
		if (t.index == k)
			return t.coeff;
	return Rational(0);
}

std::vector<Rational> LieSuperAlgebra::coordinates(SuperMatrix const &m) const
{
	std::vector<Rational> c(static_cast<std::size_t>(dim()));
	std::size_t d = c.size();
	for (std::size_t a = 0; a < d; ++a)
		for (std::size_t b = 0; b < d; ++b)
			c[a] += coord_inverse_[a * d + b] * m.entries[coord_rows_[b]];
	// verify: the read-off coordinates must reproduce m exactly
	SuperMatrix back(rep_even_, rep_odd_);
	for (std::size_t a = 0; a < d; ++a)
		if (!is_zero(c[a]))
			back = back + c[a] * matrices_[a];
	if (!(back == m))
		throw std::domain_error("matrix is not in the span of " + name_);
	return c;
}

void LieSuperAlgebra::finalize(Rational const &form_scale)
{
	int d = dim();
	auto ud = static_cast<std::size_t>(d);
	dim_even_ = static_cast<int>(std::count_if(basis_.begin(), basis_.end(),
	                                           [](BasisElement const &b) { return !is_odd(b.parity); }));

	// choose d matrix entries on which the basis is invertible
	std::size_t n2 = static_cast<std::size_t>((rep_even_ + rep_odd_) * (rep_even_ + rep_odd_));
	EchelonBasis rows;
	for (std::size_t e = 0; e < n2 && coord_rows_.size() < ud; ++e)
	{
		std::vector<SparseVec::Entry> r;
		for (std::size_t a = 0; a < ud; ++a)
			if (!is_zero(matrices_[a].entries[e]))
				r.emplace_back(static_cast<std::int32_t>(a), matrices_[a].entries[e]);
		if (rows.insert(SparseVec(r)))
			coord_rows_.push_back(e);
	}
	if (coord_rows_.size() != ud)
		throw std::logic_error("basis matrices of " + name_ + " are linearly dependent");
	DenseMatQ sq(ud, ud);
	for (std::size_t b = 0; b < ud; ++b)
		for (std::size_t a = 0; a < ud; ++a)
			sq(b, a) = matrices_[a].entries[coord_rows_[b]];
	coord_inverse_.assign(ud * ud, Rational(0));
	for (std::size_t col = 0; col < ud; ++col)
	{
		std::vector<Rational> rhs(ud);
		rhs[col] = 1;
		auto x = sq.solve(rhs);
		for (std::size_t a = 0; a < ud; ++a)
			coord_inverse_[a * ud + col] = (*x)[a];
	}

	structure_.assign(ud * ud, {});
	form_.assign(ud * ud, Rational(0));
	for (int i = 0; i < d; ++i)
		for (int j = 0; j < d; ++j)
		{
			auto c = coordinates(supercommutator(matrices_[static_cast<std::size_t>(i)],
			                                     matrices_[static_cast<std::size_t>(j)]));
			auto &terms = structure_[static_cast<std::size_t>(i * d + j)];
			for (int k = 0; k < d; ++k)
				if (!is_zero(c[static_cast<std::size_t>(k)]))
					terms.push_back({k, c[static_cast<std::size_t>(k)]});
			form_[static_cast<std::size_t>(i * d + j)] =
			    form_scale * (matrices_[static_cast<std::size_t>(i)] * matrices_[static_cast<std::size_t>(j)]).supertrace();
		}
}

LieSuperAlgebra build_algebra(Family family, std::vector<int> const &params)
{
	auto need = [&](std::size_t count) {
		if (params.size() != count)
			throw std::invalid_argument(std::string(to_string(family)) + " expects " + std::to_string(count) +
			                            " parameter(s)");
		for (int v : params)
			if (v < 0)
				throw std::invalid_argument("negative parameter for " + std::string(to_string(family)));
	};

	LieSuperAlgebra g;
	g.family_ = family;
	g.params_ = params;
	std::vector<Pending> even, odd;
	Rational scale(1);

	switch (family)
	{
	case Family::gl:
	case Family::sl: {
		need(1);
		int n = params[0];
		if (n < 1)
			throw std::invalid_argument("gl/sl need n >= 1");
		g.rep_even_ = n;
		g.name_ = std::string(to_string(family)) + "_" + std::to_string(n);
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
			{
				if (family == Family::sl && i == j)
					continue;
				even.push_back({label2("E", i + 1, j + 1), unit(n, 0, i, j)});
			}
		if (family == Family::sl)
			for (int i = 0; i + 1 < n; ++i)
			{
				SuperMatrix h = unit(n, 0, i, i);
				h.at(i + 1, i + 1) = -1;
				even.push_back({"H(" + std::to_string(i + 1) + ")", h});
			}
		g.h_dual_ = n;
		break;
	}
	case Family::so: {
		need(1);
		int m = params[0];
		g.rep_even_ = m;
		g.name_ = "so_" + std::to_string(m);
		for (int a = 0; a < m; ++a)
			for (int b = a + 1; b < m; ++b)
			{
				SuperMatrix x = unit(m, 0, a, b);
				x.at(b, a) = -1;
				even.push_back({label2("M", a + 1, b + 1), x});
			}
		scale = make_rational(1, 2);
		g.h_dual_ = m >= 2 ? m - 2 : 0;
		break;
	}
	case Family::sp: {
		need(1);
		int n = params[0];
		if (n < 1)
			throw std::invalid_argument("sp needs n >= 1");
		g.rep_even_ = 2 * n;
		g.name_ = "sp_" + std::to_string(2 * n);
		append_sp_block(even, 2 * n, 0, 0, n);
		g.h_dual_ = n + 1;
		break;
	}
	case Family::sl_super: {
		need(2);
		int p = params[0], q = params[1];
		if (p + q < 1)
			throw std::invalid_argument("sl(p|q) needs p + q >= 1");
		g.rep_even_ = p;
		g.rep_odd_ = q;
		g.name_ = "sl(" + std::to_string(p) + "|" + std::to_string(q) + ")";
		int n = p + q;
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
			{
				if (i == j)
					continue;
				bool odd_el = (i < p) != (j < p);
				(odd_el ? odd : even).push_back({label2("E", i + 1, j + 1), unit(p, q, i, j)});
			}
		for (int i = 0; i + 1 < n; ++i)
		{
			SuperMatrix h = unit(p, q, i, i);
			// supertrace zero: E_ii - E_{i+1,i+1} inside a block, E_pp + E_{p+1,p+1} across
			h.at(i + 1, i + 1) = (i + 1 == p) ? 1 : -1;
			even.push_back({"H(" + std::to_string(i + 1) + ")", h});
		}
		g.h_dual_ = p - q;
		break;
	}
	case Family::osp: {
		need(2);
		int m = params[0], n = params[1];
		if (m + n < 1)
			throw std::invalid_argument("osp(m|2n) needs m + n >= 1");
		g.rep_even_ = m;
		g.rep_odd_ = 2 * n;
		g.name_ = "osp(" + std::to_string(m) + "|" + std::to_string(2 * n) + ")";
		for (int a = 0; a < m; ++a)
			for (int b = a + 1; b < m; ++b)
			{
				SuperMatrix x = unit(m, 2 * n, a, b);
				x.at(b, a) = -1;
				even.push_back({label2("M", a + 1, b + 1), x});
			}
		append_sp_block(even, m, 2 * n, m, n);
		// odd: x -> e_a G(e_j, x) - e_j G(e_a, x), G = diag(I_m, J_2n)
		for (int a = 0; a < m; ++a)
			for (int j = 0; j < 2 * n; ++j)
			{
				SuperMatrix x(m, 2 * n);
				int partner = j < n ? j + n : j - n;
				x.at(a, m + partner) = j < n ? 1 : -1;
				x.at(m + j, a) = -1;
				odd.push_back({label2("Q", a + 1, j + 1), x});
			}
		scale = -1;
		g.h_dual_ = make_rational(2 * n + 2 - m, 2);
		break;
	}
	}

	int idx = 0;
	for (auto *group : {&even, &odd})
		for (auto &p : *group)
		{
			auto par = p.m.parity();
			g.basis_.push_back({idx++, par.value_or(Parity::even), p.label});
			g.matrices_.push_back(std::move(p.m));
		}
	g.finalize(scale);

	if (family == Family::gl)
	{
		SuperMatrix id(g.rep_even_, 0);
		for (int i = 0; i < g.rep_even_; ++i)
			id.at(i, i) = 1;
		g.center_ = g.coordinates(id);
	}
	return g;
}

LieSuperAlgebra build_algebra(std::string_view family, std::vector<int> const &params)
{
	return build_algebra(parse_family(family), params);
}

nlohmann::json LieSuperAlgebra::to_json() const
{
	nlohmann::json j;
	j["schema"] = "arcfree.liesuper/1";
	j["name"] = name_;
	j["family"] = std::string(to_string(family_));
	j["params"] = params_;
	j["dim_even"] = dim_even();
	j["dim_odd"] = dim_odd();
	j["h_dual"] = to_string(h_dual_);
	auto basis = nlohmann::json::array();
	for (auto const &b : basis_)
		basis.push_back({{"index", b.index}, {"parity", std::string(to_string(b.parity))}, {"label", b.label}});
	j["basis"] = basis;
	auto f = nlohmann::json::array();
	for (int i = 0; i < dim(); ++i)
		for (int k = 0; k < dim(); ++k)
			for (auto const &t : bracket_terms(i, k))
				f.push_back({i, k, t.index, to_string(t.coeff)});
	j["structure"] = f;
	auto b = nlohmann::json::array();
	for (int i = 0; i < dim(); ++i)
		for (int k = 0; k < dim(); ++k)
			if (!is_zero(form(i, k)))
				b.push_back({i, k, to_string(form(i, k))});
	j["form"] = b;
	return j;
}

std::optional<Parity> AlgebraVector::parity(LieSuperAlgebra const &g) const
{
	std::optional<Parity> p;
	for (int i = 0; i < static_cast<int>(coeffs.size()); ++i)
	{
		if (arcfree::is_zero(coeffs[static_cast<std::size_t>(i)]))
			continue;
		if (p && *p != g.parity(i))
			return std::nullopt;
		p = g.parity(i);
	}
	return p;
}

bool AlgebraVector::is_zero() const
{
	return std::all_of(coeffs.begin(), coeffs.end(), [](Rational const &c) { return arcfree::is_zero(c); });
}

namespace {

void require_same(LieSuperAlgebra const &g, AlgebraVector const &a)
{
	if (a.algebra != g.name() || static_cast<int>(a.coeffs.size()) != g.dim())
		throw std::invalid_argument("vector of '" + a.algebra + "' used with algebra '" + g.name() + "'");
}

} // namespace

AlgebraVector basis_vector(LieSuperAlgebra const &g, int i)
{
	AlgebraVector v{g.name(), std::vector<Rational>(static_cast<std::size_t>(g.dim()))};
	v.coeffs.at(static_cast<std::size_t>(i)) = 1;
	return v;
}

AlgebraVector bracket(LieSuperAlgebra const &g, AlgebraVector const &a, AlgebraVector const &b)
{
	require_same(g, a);
	require_same(g, b);
	AlgebraVector out{g.name(), std::vector<Rational>(static_cast<std::size_t>(g.dim()))};
	for (int i = 0; i < g.dim(); ++i)
	{
		if (is_zero(a.coeffs[static_cast<std::size_t>(i)]))
			continue;
		for (int j = 0; j < g.dim(); ++j)
		{
			if (is_zero(b.coeffs[static_cast<std::size_t>(j)]))
				continue;
			Rational ab = a.coeffs[static_cast<std::size_t>(i)] * b.coeffs[static_cast<std::size_t>(j)];
			for (auto const &t : g.bracket_terms(i, j))
				out.coeffs[static_cast<std::size_t>(t.index)] += ab * t.coeff;
		}
	}
	return out;
}

Rational form(LieSuperAlgebra const &g, AlgebraVector const &a, AlgebraVector const &b)
{
	require_same(g, a);
	require_same(g, b);
	Rational s;
	for (int i = 0; i < g.dim(); ++i)
		for (int j = 0; j < g.dim(); ++j)
			s += a.coeffs[static_cast<std::size_t>(i)] * g.form(i, j) * b.coeffs[static_cast<std::size_t>(j)];
	return s;
}

std::vector<AlgebraVector> dual_basis(LieSuperAlgebra const &g)
{
	auto d = static_cast<std::size_t>(g.dim());
	DenseMatQ b(d, d);
	for (std::size_t i = 0; i < d; ++i)
		for (std::size_t j = 0; j < d; ++j)
			b(i, j) = g.form(static_cast<int>(i), static_cast<int>(j));
	std::vector<AlgebraVector> out;
	for (std::size_t j = 0; j < d; ++j)
	{
		std::vector<Rational> rhs(d);
		rhs[j] = 1;
		auto x = b.solve(rhs);
		if (!x || b.rank() != d)
			throw std::domain_error("invariant form of " + g.name() + " is degenerate");
		out.push_back({g.name(), std::move(*x)});
	}
	return out;
}

namespace {

std::string triple(int i, int j, int k)
{
	return "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")";
}

void note(AlgebraCheck &c, std::string s)
{
	if (c.failures.size() < 16)
		c.failures.push_back(std::move(s));
}

} // namespace

AlgebraCheck check_skew_symmetry(LieSuperAlgebra const &g)
{
	AlgebraCheck c{"super skew-symmetry", 0, {}};
	for (int i = 0; i < g.dim(); ++i)
		for (int j = 0; j < g.dim(); ++j)
			for (int k = 0; k < g.dim(); ++k)
			{
				++c.checked;
				if (g.structure(i, j, k) != -koszul(g.parity(i), g.parity(j)) * g.structure(j, i, k))
					note(c, triple(i, j, k));
			}
	return c;
}

AlgebraCheck check_jacobi(LieSuperAlgebra const &g)
{
	// [x,[y,z]] = [[x,y],z] + (-1)^{xy} [y,[x,z]]
	AlgebraCheck c{"super Jacobi", 0, {}};
	for (int i = 0; i < g.dim(); ++i)
		for (int j = 0; j < g.dim(); ++j)
			for (int k = 0; k < g.dim(); ++k)
			{
				++c.checked;
				auto x = basis_vector(g, i), y = basis_vector(g, j), z = basis_vector(g, k);
				auto lhs = bracket(g, x, bracket(g, y, z));
				auto r1 = bracket(g, bracket(g, x, y), z);
				auto r2 = bracket(g, y, bracket(g, x, z));
				int s = koszul(g.parity(i), g.parity(j));
				for (std::size_t t = 0; t < lhs.coeffs.size(); ++t)
					if (lhs.coeffs[t] != r1.coeffs[t] + s * r2.coeffs[t])
					{
						note(c, triple(i, j, k));
						break;
					}
			}
	return c;
}

AlgebraCheck check_invariance(LieSuperAlgebra const &g)
{
	AlgebraCheck c{"form invariance", 0, {}};
	for (int i = 0; i < g.dim(); ++i)
		for (int j = 0; j < g.dim(); ++j)
			for (int k = 0; k < g.dim(); ++k)
			{
				++c.checked;
				auto x = basis_vector(g, i), y = basis_vector(g, j), z = basis_vector(g, k);
				if (form(g, bracket(g, x, y), z) != form(g, x, bracket(g, y, z)))
					note(c, triple(i, j, k));
			}
	return c;
}

AlgebraCheck check_form_even(LieSuperAlgebra const &g)
{
	AlgebraCheck c{"form is even", 0, {}};
	for (int i = 0; i < g.dim(); ++i)
		for (int j = 0; j < g.dim(); ++j)
		{
			++c.checked;
			if (g.parity(i) != g.parity(j) && !is_zero(g.form(i, j)))
				note(c, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
		}
	return c;
}

AlgebraCheck check_form_supersymmetric(LieSuperAlgebra const &g)
{
	AlgebraCheck c{"form is supersymmetric", 0, {}};
	for (int i = 0; i < g.dim(); ++i)
		for (int j = 0; j < g.dim(); ++j)
		{
			++c.checked;
			if (g.form(i, j) != koszul(g.parity(i), g.parity(j)) * g.form(j, i))
				note(c, "(" + std::to_string(i) + "," + std::to_string(j) + ")");
		}
	return c;
}

AlgebraCheck check_preserves_defining_form(LieSuperAlgebra const &g)
{
	AlgebraCheck c{"defining form preserved", 0, {}};
	int p = g.rep_even_dim(), q = g.rep_odd_dim();
	// G = diag(I_p, J_q) for so/osp, J for sp; the check is B(Xu,v) + (-1)^{|X||u|} B(u,Xv) = 0
	SuperMatrix G(p, q);
	switch (g.family())
	{
	case Family::so:
		for (int i = 0; i < p; ++i)
			G.at(i, i) = 1;
		break;
	case Family::sp:
	case Family::osp: {
		int off = g.family() == Family::sp ? 0 : p;
		int half = g.family() == Family::sp ? p / 2 : q / 2;
		for (int i = 0; i < off; ++i)
			G.at(i, i) = 1;
		for (int i = 0; i < half; ++i)
		{
			G.at(off + i, off + half + i) = 1;
			G.at(off + half + i, off + i) = -1;
		}
		break;
	}
	default:
		return c;
	}
	int n = p + q;
	for (int x = 0; x < g.dim(); ++x)
	{
		auto const &X = g.matrix(x);
		for (int u = 0; u < n; ++u)
			for (int v = 0; v < n; ++v)
			{
				++c.checked;
				// B(Xe_u, e_v) = sum_w X[w][u] G[w][v]
				Rational lhs, rhs;
				for (int w = 0; w < n; ++w)
				{
					lhs += X.at(w, u) * G.at(w, v);
					rhs += G.at(u, w) * X.at(w, v);
				}
				int s = koszul(g.parity(x), G.coord_parity(u));
				if (lhs + s * rhs != 0)
					note(c, triple(x, u, v));
			}
	}
	return c;
}

std::optional<Rational> adjoint_casimir_eigenvalue(LieSuperAlgebra const &g)
{
	// C(x) = sum_i (-1)^{|i|} [xi_i, [xi'_i, x]]
	auto dual = dual_basis(g);
	std::optional<Rational> eig;
	for (int x = 0; x < g.dim(); ++x)
	{
		AlgebraVector acc{g.name(), std::vector<Rational>(static_cast<std::size_t>(g.dim()))};
		auto vx = basis_vector(g, x);
		for (int i = 0; i < g.dim(); ++i)
		{
			auto t = bracket(g, basis_vector(g, i), bracket(g, dual[static_cast<std::size_t>(i)], vx));
			int s = is_odd(g.parity(i)) ? -1 : 1;
			for (std::size_t k = 0; k < t.coeffs.size(); ++k)
				acc.coeffs[k] += s * t.coeffs[k];
		}
		for (int k = 0; k < g.dim(); ++k)
		{
			auto const &v = acc.coeffs[static_cast<std::size_t>(k)];
			if (k != x && !is_zero(v))
				return std::nullopt;
		}
		auto const &d = acc.coeffs[static_cast<std::size_t>(x)];
		if (eig && *eig != d)
			return std::nullopt;
		eig = d;
	}
	return eig;
}

} // namespace arcfree
