#include "arcfree/affine.hpp"

#include "arcfree/parallel.hpp"
#include "arcfree/sparse.hpp"

#include <functional>
#include <map>

namespace arcfree {

std::string_view to_string(RealizationFamily f)
{
	return f == RealizationFamily::s1 ? "s1" : "s2";
}

RealizationFamily parse_realization_family(std::string_view s)
{
	if (s == "s1")
		return RealizationFamily::s1;
	if (s == "s2")
		return RealizationFamily::s2;
	throw std::invalid_argument("unknown realization family '" + std::string(s) + "' (expected s1 or s2)");
}

FreeFieldContext realization_context(RealizationFamily family, int n, int m, int r)
{
	if (family == RealizationFamily::s2)
		return {n * m, 2 * n * r};
	return {n * m, n * r};
}

namespace {

void check_params(int n, int m, int r)
{
	if (n < 1)
		throw std::invalid_argument("n must be >= 1 (got " + std::to_string(n) + ")");
	if (m < 0)
		throw std::invalid_argument("m must be >= 0 (got " + std::to_string(m) + ")");
	if (r < 1)
		throw std::invalid_argument("r must be >= 1 (got " + std::to_string(r) + ")");
}

FieldPoly gen(FreeFieldContext ctx, GenKind k, int index, int sign = 1)
{
	return Rational(sign) * FieldPoly::generator(ctx, {k, index});
}

// Free fields of the s2 frame: Phi(A, i) with copy A in m|2r and symplectic slot i.
// Pairing Phi(A,i) Phi(B,j) ~ G_AB J_ij / (z-w), G = diag(I_m, J_2r).
std::vector<FieldPoly> s2_fields(FreeFieldContext ctx, int n, int m, int r)
{
	std::vector<FieldPoly> f;
	for (int a = 0; a < m; ++a)
		for (int i = 0; i < 2 * n; ++i)
			f.push_back(i < n ? gen(ctx, GenKind::beta, a * n + i + 1) : gen(ctx, GenKind::gamma, a * n + i - n + 1));
	for (int c = 0; c < 2 * r; ++c)
		for (int i = 0; i < 2 * n; ++i)
		{
			if (c < r)
				f.push_back(gen(ctx, GenKind::b, c * 2 * n + i + 1));
			else if (i >= n)
				f.push_back(gen(ctx, GenKind::c, (c - r) * 2 * n + i - n + 1));
			else
				f.push_back(gen(ctx, GenKind::c, (c - r) * 2 * n + i + n + 1, -1));
		}
	return f;
}

int symplectic(int i, int j, int n)
{
	if (j == i + n)
		return 1;
	if (i == j + n)
		return -1;
	return 0;
}

struct Solver {
	OpeEngine &engine;
	std::vector<FieldPoly> const &terms;
	std::vector<FieldPoly> const &fields;
	std::vector<std::vector<FieldPoly>> zero_modes; // [term][field]

	Solver(OpeEngine &e, std::vector<FieldPoly> const &t, std::vector<FieldPoly> const &f)
	    : engine(e), terms(t), fields(f)
	{
		for (auto const &term : terms)
		{
			std::vector<FieldPoly> row;
			for (auto const &field : fields)
				row.push_back(engine.product(term, field, 0));
			zero_modes.push_back(std::move(row));
		}
	}

	// Combination of terms of the given parity whose zero modes send fields[f] to target(f).
	FieldPoly solve(Parity p, std::function<FieldPoly(std::size_t)> const &target, std::string const &what)
	{
		std::vector<std::size_t> cols;
		for (std::size_t t = 0; t < terms.size(); ++t)
			if (parity(terms[t]) == p)
				cols.push_back(t);
		std::map<std::pair<std::size_t, Monomial>, std::size_t> rows;
		std::vector<FieldPoly> targets;
		for (std::size_t f = 0; f < fields.size(); ++f)
		{
			targets.push_back(target(f));
			for (auto const &[mono, c] : targets.back().terms())
				rows.try_emplace({f, mono}, rows.size());
			for (auto t : cols)
				for (auto const &[mono, c] : zero_modes[t][f].terms())
					rows.try_emplace({f, mono}, rows.size());
		}
		DenseMatQ a(rows.size(), cols.size());
		std::vector<Rational> rhs(rows.size());
		for (std::size_t f = 0; f < fields.size(); ++f)
		{
			for (auto const &[mono, c] : targets[f].terms())
				rhs[rows.at({f, mono})] = c;
			for (std::size_t k = 0; k < cols.size(); ++k)
				for (auto const &[mono, c] : zero_modes[cols[k]][f].terms())
					a(rows.at({f, mono}), k) = c;
		}
		auto x = a.solve(rhs);
		if (!x)
			throw std::runtime_error("no invariant quadratic realizes " + what);
		FieldPoly out(engine.ctx());
		for (std::size_t k = 0; k < cols.size(); ++k)
			if (!arcfree::is_zero((*x)[k]))
				out += (*x)[k] * terms[cols[k]];
		return out;
	}
};

// Target of X^xi_(0) on fields[copy * width + slot] when xi acts on the slot index.
FieldPoly slot_action(SuperMatrix const &mat, std::vector<FieldPoly> const &fields, std::size_t f, int width)
{
	int copy = static_cast<int>(f) / width, k = static_cast<int>(f) % width;
	FieldPoly out(fields[f].ctx());
	for (int l = 0; l < width; ++l)
		if (!arcfree::is_zero(mat.at(l, k)))
			out += mat.at(l, k) * fields[static_cast<std::size_t>(copy * width + l)];
	return out;
}

// Target when xi acts on the copy index.
FieldPoly copy_action(SuperMatrix const &mat, std::vector<FieldPoly> const &fields, std::size_t f, int width)
{
	int copy = static_cast<int>(f) / width, k = static_cast<int>(f) % width;
	FieldPoly out(fields[f].ctx());
	for (int d = 0; d < mat.size(); ++d)
		if (!arcfree::is_zero(mat.at(d, copy)))
			out += mat.at(d, copy) * fields[static_cast<std::size_t>(d * width + k)];
	return out;
}

AffineRealization solve_realization(OpeEngine &engine, LieSuperAlgebra g, Rational level,
                                    std::vector<FieldPoly> const &terms, std::vector<FieldPoly> const &fields,
                                    int width, bool on_copies)
{
	Solver solver(engine, terms, fields);
	AffineRealization a{std::move(g), std::move(level), {}, engine.ctx()};
	for (int xi = 0; xi < a.g.dim(); ++xi)
	{
		SuperMatrix const &mat = a.g.matrix(xi);
		auto target = [&](std::size_t f) {
			return on_copies ? copy_action(mat, fields, f, width) : slot_action(mat, fields, f, width);
		};
		a.currents.push_back(solver.solve(a.g.parity(xi), target,
		                                  a.g.name() + " basis element " + a.g.basis()[static_cast<std::size_t>(xi)].label));
	}
	return a;
}

RealizationPair build_s2(OpeEngine &engine, int n, int m, int r)
{
	FreeFieldContext ctx = engine.ctx();
	auto phi = s2_fields(ctx, n, m, r);
	int w = 2 * n, copies = m + 2 * r;
	auto at = [&](int copy, int i) -> FieldPoly const & { return phi[static_cast<std::size_t>(copy * w + i)]; };

	std::vector<FieldPoly> inner_terms;
	for (int a = 0; a < m; ++a)
		for (int i = 0; i < w; ++i)
			for (int j = i; j < w; ++j)
				inner_terms.push_back(engine.normal_order(at(a, i), at(a, j)));
	for (int c = 0; c < r; ++c)
		for (int i = 0; i < w; ++i)
			for (int j = 0; j < w; ++j)
				inner_terms.push_back(engine.normal_order(at(m + c, i), at(m + r + c, j)));

	std::vector<FieldPoly> coset_terms;
	for (int a = 0; a < copies; ++a)
		for (int b = a; b < copies; ++b)
		{
			if (a == b && a < m)
				continue;
			FieldPoly p(ctx);
			for (int i = 0; i < w; ++i)
				for (int j = 0; j < w; ++j)
					if (int s = symplectic(i, j, n))
						p += Rational(s) * engine.normal_order(at(a, i), at(b, j));
			if (!p.is_zero())
				coset_terms.push_back(std::move(p));
		}

	auto inner = solve_realization(engine, build_algebra(Family::sp, {n}), Rational(r) - make_rational(m, 2),
	                               inner_terms, phi, w, false);
	auto coset = solve_realization(engine, build_algebra(Family::osp, {m, r}), Rational(n), coset_terms, phi, w, true);
	return {RealizationFamily::s2, n, m, r, std::move(inner), std::move(coset), 2 * (r + n + 1) > m};
}

RealizationPair build_s1(OpeEngine &engine, int n, int m, int r)
{
	FreeFieldContext ctx = engine.ctx();
	// copies 0..r-1 are bc, r..r+m-1 are beta-gamma; x = beta/b, y = gamma/c
	std::vector<FieldPoly> x, y;
	for (int a = 0; a < r + m; ++a)
		for (int i = 0; i < n; ++i)
		{
			bool odd = a < r;
			int idx = (odd ? a : a - r) * n + i + 1;
			x.push_back(gen(ctx, odd ? GenKind::b : GenKind::beta, idx));
			y.push_back(gen(ctx, odd ? GenKind::c : GenKind::gamma, idx));
		}
	auto at = [&](std::vector<FieldPoly> const &v, int a, int i) -> FieldPoly const & {
		return v[static_cast<std::size_t>(a * n + i)];
	};

	std::vector<FieldPoly> inner_terms;
	for (int a = 0; a < r + m; ++a)
		for (int i = 0; i < n; ++i)
			for (int j = 0; j < n; ++j)
				inner_terms.push_back(engine.normal_order(at(x, a, i), at(y, a, j)));
	std::vector<FieldPoly> coset_terms;
	for (int a = 0; a < r + m; ++a)
		for (int b = 0; b < r + m; ++b)
		{
			FieldPoly t(ctx);
			for (int i = 0; i < n; ++i)
				t += engine.normal_order(at(x, a, i), at(y, b, i));
			coset_terms.push_back(std::move(t));
		}

	auto inner = solve_realization(engine, build_algebra(Family::gl, {n}), Rational(r - m), inner_terms, x, n, false);
	auto coset = solve_realization(engine, build_algebra(Family::sl_super, {r, m}), Rational(n), coset_terms, x, n, true);
	return {RealizationFamily::s1, n, m, r, std::move(inner), std::move(coset), n >= 2 && m != r && r - m + n > 0};
}

nlohmann::json realization_json(AffineRealization const &a)
{
	nlohmann::json cur = nlohmann::json::array();
	for (std::size_t i = 0; i < a.currents.size(); ++i)
		cur.push_back({{"label", a.g.basis()[i].label},
		               {"parity", std::string(to_string(a.g.basis()[i].parity))},
		               {"field", a.currents[i].to_text()}});
	return {{"algebra", a.g.name()},
	        {"level", to_string(a.level)},
	        {"h_dual", to_string(a.g.h_dual())},
	        {"dim_even", a.g.dim_even()},
	        {"dim_odd", a.g.dim_odd()},
	        {"currents", cur}};
}

} // namespace

nlohmann::json AffineRealization::to_json() const
{
	auto j = realization_json(*this);
	j["schema"] = "arcfree.realization/1";
	j["ctx"] = {{"n_bg", ctx.n_bg}, {"n_bc", ctx.n_bc}};
	return j;
}

nlohmann::json RealizationPair::to_json() const
{
	FreeFieldContext c = ctx();
	return {{"schema", "arcfree.realization_pair/1"},
	        {"family", std::string(to_string(family))},
	        {"params", {{"n", n}, {"m", m}, {"r", r}}},
	        {"ctx", {{"n_bg", c.n_bg}, {"n_bc", c.n_bc}}},
	        {"simplicity_asserted", simplicity_asserted},
	        {"inner", realization_json(inner)},
	        {"coset", realization_json(coset)}};
}

RealizationPair build_realization(RealizationFamily family, int n, int m, int r, int threads)
{
	check_params(n, m, r);
	OpeEngine engine(realization_context(family, n, m, r));
	RealizationPair p = family == RealizationFamily::s2 ? build_s2(engine, n, m, r) : build_s1(engine, n, m, r);
	for (auto const *a : {&p.inner, &p.coset})
	{
		auto rep = verify_affine_ope(*a, threads);
		if (!rep.ok())
		{
			auto const &f = rep.failures.front();
			throw std::runtime_error("realization of " + a->g.name() + " fails the affine OPE at pair (" +
			                         std::to_string(f.i) + "," + std::to_string(f.j) + "), pole " +
			                         std::to_string(f.pole) + ": got " + f.actual + ", expected " + f.expected);
		}
	}
	return p;
}

nlohmann::json VerifyReport::to_json() const
{
	nlohmann::json f = nlohmann::json::array();
	for (auto const &x : failures)
		f.push_back({{"i", x.i},
		             {"j", x.j},
		             {"pole", x.pole},
		             {"expected", x.expected},
		             {"actual", x.actual},
		             {"difference", x.difference}});
	return {{"check", check},
	        {"pairs_checked", pairs_checked},
	        {"pairs_failed", failures.size()},
	        {"ok", ok()},
	        {"failures", f}};
}

namespace {

void compare_pole(std::vector<PairFailure> &out, int i, int j, int pole, FieldPoly const &actual,
                  FieldPoly const &expected)
{
	if (actual == expected)
		return;
	out.push_back({i, j, pole, expected.to_text(), actual.to_text(), (actual - expected).to_text()});
}

template <class Check>
VerifyReport run_pairs(std::string name, FreeFieldContext ctx, int rows, int cols, int threads, Check check)
{
	std::size_t count = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
	std::vector<std::vector<PairFailure>> slots(count);
	std::vector<std::unique_ptr<OpeEngine>> engines;
	for (int w = 0; w < resolve_threads(threads); ++w)
		engines.push_back(std::make_unique<OpeEngine>(ctx));
	parallel_for(count, threads, [&](std::size_t k, int worker) {
		int i = static_cast<int>(k) / cols, j = static_cast<int>(k) % cols;
		check(*engines[static_cast<std::size_t>(worker)], i, j, slots[k]);
	});
	VerifyReport rep{std::move(name), count, {}};
	for (auto &s : slots)
		for (auto &f : s)
			rep.failures.push_back(std::move(f));
	return rep;
}

} // namespace

VerifyReport verify_affine_ope(AffineRealization const &a, int threads)
{
	int d = a.g.dim();
	if (static_cast<int>(a.currents.size()) != d)
		throw std::invalid_argument("realization has " + std::to_string(a.currents.size()) + " currents for a " +
		                            std::to_string(d) + "-dimensional algebra");
	return run_pairs("affine OPE of " + a.g.name() + " at level " + to_string(a.level), a.ctx, d, d, threads,
	                 [&](OpeEngine &e, int i, int j, std::vector<PairFailure> &out) {
		                 auto res = e.ope(a.currents[static_cast<std::size_t>(i)], a.currents[static_cast<std::size_t>(j)]);
		                 FieldPoly p1(a.ctx);
		                 for (auto const &t : a.g.bracket_terms(i, j))
			                 p1 += t.coeff * a.currents[static_cast<std::size_t>(t.index)];
		                 compare_pole(out, i, j, 1, res.pole(1, a.ctx), p1);
		                 compare_pole(out, i, j, 2, res.pole(2, a.ctx), FieldPoly::identity(a.ctx, a.level * a.g.form(i, j)));
		                 for (auto const &[p, f] : res.poles)
			                 if (p > 2)
				                 compare_pole(out, i, j, p, f, FieldPoly(a.ctx));
	                 });
}

VerifyReport verify_coset(RealizationPair const &p, int threads)
{
	if (!(p.inner.ctx == p.coset.ctx))
		throw ContextMismatch("inner and coset realizations live in different contexts");
	return run_pairs("coset regularity " + p.inner.g.name() + " x " + p.coset.g.name(), p.ctx(), p.inner.g.dim(),
	                 p.coset.g.dim(), threads, [&](OpeEngine &e, int i, int j, std::vector<PairFailure> &out) {
		                 auto res = e.ope(p.inner.currents[static_cast<std::size_t>(i)],
		                                  p.coset.currents[static_cast<std::size_t>(j)]);
		                 for (auto const &[pole, f] : res.poles)
			                 compare_pole(out, i, j, pole, f, FieldPoly(p.ctx()));
	                 });
}

namespace {

// sum_i (-1)^{|i|} :X^{xi_i} X^{xi'_i}:
FieldPoly casimir_field(OpeEngine &e, AffineRealization const &a)
{
	auto dual = dual_basis(a.g);
	FieldPoly out(a.ctx);
	for (int i = 0; i < a.g.dim(); ++i)
	{
		FieldPoly xd(a.ctx);
		for (int j = 0; j < a.g.dim(); ++j)
			if (!arcfree::is_zero(dual[static_cast<std::size_t>(i)].coeffs[static_cast<std::size_t>(j)]))
				xd += dual[static_cast<std::size_t>(i)].coeffs[static_cast<std::size_t>(j)] *
				      a.currents[static_cast<std::size_t>(j)];
		FieldPoly t = e.normal_order(a.currents[static_cast<std::size_t>(i)], xd);
		out += Rational(is_odd(a.g.parity(i)) ? -1 : 1) * t;
	}
	return out;
}

} // namespace

FieldPoly sugawara(AffineRealization const &a)
{
	OpeEngine e(a.ctx);
	Rational const &k = a.level;
	if (a.g.dim() == 0)
		return FieldPoly(a.ctx);
	if (a.g.family() == Family::gl)
	{
		auto const &zc = *a.g.center();
		FieldPoly z(a.ctx);
		for (int j = 0; j < a.g.dim(); ++j)
			if (!arcfree::is_zero(zc[static_cast<std::size_t>(j)]))
				z += zc[static_cast<std::size_t>(j)] * a.currents[static_cast<std::size_t>(j)];
		Rational zz(0);
		for (int i = 0; i < a.g.dim(); ++i)
			for (int j = 0; j < a.g.dim(); ++j)
				zz += zc[static_cast<std::size_t>(i)] * zc[static_cast<std::size_t>(j)] * a.g.form(i, j);
		if (arcfree::is_zero(k))
			throw CriticalLevel("gl centre at level 0 has no Sugawara vector");
		FieldPoly zz_field = e.normal_order(z, z);
		FieldPoly out = (1 / (2 * k * zz)) * zz_field;
		if (a.g.dim() > 1)
		{
			if (arcfree::is_zero(k + a.g.h_dual()))
				throw CriticalLevel("critical level k = -" + to_string(a.g.h_dual()) + " for " + a.g.name());
			FieldPoly semisimple = casimir_field(e, a) - (1 / zz) * zz_field;
			out += (1 / (2 * (k + a.g.h_dual()))) * semisimple;
		}
		return out;
	}
	if (arcfree::is_zero(k + a.g.h_dual()))
		throw CriticalLevel("critical level k = -" + to_string(a.g.h_dual()) + " for " + a.g.name());
	return (1 / (2 * (k + a.g.h_dual()))) * casimir_field(e, a);
}

Rational sugawara_central_charge(AffineRealization const &a)
{
	Rational const &k = a.level;
	if (a.g.dim() == 0)
		return Rational(0);
	if (a.g.family() == Family::gl)
	{
		int n = a.g.params()[0];
		if (arcfree::is_zero(k))
			throw CriticalLevel("gl centre at level 0 has no Sugawara vector");
		if (n == 1)
			return Rational(1);
		if (arcfree::is_zero(k + a.g.h_dual()))
			throw CriticalLevel("critical level for " + a.g.name());
		return k * (n * n - 1) / (k + a.g.h_dual()) + 1;
	}
	if (arcfree::is_zero(k + a.g.h_dual()))
		throw CriticalLevel("critical level for " + a.g.name());
	return k * a.g.sdim() / (k + a.g.h_dual());
}

FieldPoly ambient_virasoro(FreeFieldContext ctx)
{
	FieldPoly L(ctx);
	if (ctx.n_bg > 0)
		L += virasoro_S(ctx);
	if (ctx.n_bc > 0)
		L += virasoro_E(ctx);
	return L;
}

nlohmann::json EmbeddingReport::to_json() const
{
	return {{"check", "conformal embedding"},
	        {"ok", ok()},
	        {"vector_identity", vector_identity},
	        {"difference", difference},
	        {"c_inner", to_string(c_inner)},
	        {"c_coset", to_string(c_coset)},
	        {"c_ambient", to_string(c_ambient)},
	        {"c_expected", to_string(c_expected)},
	        {"charges_match", charges_match}};
}

EmbeddingReport verify_conformal_embedding(RealizationPair const &p)
{
	if (!(p.inner.ctx == p.coset.ctx))
		throw ContextMismatch("inner and coset realizations live in different contexts");
	EmbeddingReport rep;
	FieldPoly L = ambient_virasoro(p.ctx());
	FieldPoly diff = sugawara(p.inner) + sugawara(p.coset) - L;
	rep.vector_identity = diff.is_zero();
	rep.difference = diff.to_text();
	rep.c_inner = sugawara_central_charge(p.inner);
	rep.c_coset = sugawara_central_charge(p.coset);
	rep.c_ambient = central_charge(L);
	int nm = p.n * p.m;
	rep.c_expected = p.family == RealizationFamily::s2 ? Rational(-nm + 2 * p.n * p.r) : Rational(-nm + p.n * p.r);
	rep.charges_match = rep.c_inner + rep.c_coset == rep.c_expected && rep.c_ambient == rep.c_expected;
	return rep;
}

} // namespace arcfree
