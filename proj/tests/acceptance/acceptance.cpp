// One PASS/FAIL line per acceptance criterion. All comparisons are exact (tolerance 0);
// the runtime budget of each criterion is part of its pass condition.

#include "oracles.hpp"

#include "arcfree/affine.hpp"
#include "arcfree/arcjet.hpp"
#include "arcfree/fieldexpr.hpp"
#include "arcfree/fockspan.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace arcfree;

namespace {

struct Outcome {
	bool ok = true;
	std::ostringstream note;
	void require(bool cond, std::string const &what)
	{
		if (!cond)
		{
			if (ok)
				note << "first failure: " << what << "; ";
			ok = false;
		}
	}
};

bool run_criterion(int id, std::string const &title, double budget_s, std::function<void(Outcome &)> body)
{
	Outcome o;
	auto t0 = std::chrono::steady_clock::now();
	try
	{
		body(o);
	}
	catch (std::exception const &e)
	{
		o.ok = false;
		o.note << "exception: " << e.what() << "; ";
	}
	double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	if (s > budget_s)
	{
		o.ok = false;
		o.note << "over budget; ";
	}
	std::printf("criterion %d %s  %-46s %8.2fs (budget %gs, tolerance exact)  %s\n", id, o.ok ? "PASS" : "FAIL",
	            title.c_str(), s, budget_s, o.note.str().c_str());
	std::fflush(stdout);
	return o.ok;
}

struct Case {
	RealizationFamily family;
	int n, m, r;
};

std::vector<Case> closure_cases()
{
	return {{RealizationFamily::s2, 1, 1, 1},
	        {RealizationFamily::s2, 1, 2, 1},
	        {RealizationFamily::s2, 1, 1, 2},
	        {RealizationFamily::s2, 2, 1, 1},
	        {RealizationFamily::s1, 2, 1, 2}};
}

std::string name(Case const &c)
{
	return std::string(to_string(c.family)) + "(" + std::to_string(c.n) + "," + std::to_string(c.m) + "," +
	       std::to_string(c.r) + ")";
}

FieldPoly gen(FreeFieldContext ctx, GenKind k, int i) { return FieldPoly::generator(ctx, {k, i}); }

// b_(n) a from a_(j) b, j >= n, via skew-symmetry
FieldPoly skew_side(OpeEngine &e, FieldPoly const &a, FieldPoly const &b, int n)
{
	FieldPoly out(a.ctx());
	int sign = (is_odd(*parity(a)) && is_odd(*parity(b))) ? 1 : -1;
	for (int j = 0; j < 12; ++j)
	{
		FieldPoly t = e.product(a, b, n + j);
		if (t.is_zero())
			continue;
		Rational s = ((n + j) % 2 == 0) ? sign : -sign;
		out += s * divided_derivative(t, j);
	}
	return out;
}

void criterion1(Outcome &o)
{
	FreeFieldContext ctx{3, 3};
	OpeEngine e(ctx);
	for (int i = 1; i <= 3; ++i)
		for (int j = 1; j <= 3; ++j)
		{
			Rational d = i == j ? 1 : 0;
			auto r = [&](GenKind x, GenKind y) { return e.ope(gen(ctx, x, i), gen(ctx, y, j)); };
			auto check_pole = [&](GenKind x, GenKind y, Rational want) {
				auto res = r(x, y);
				o.require(res.pole(1, ctx) == FieldPoly::identity(ctx, want), "delta pole");
				o.require(res.poles.size() <= 1, "higher poles");
			};
			check_pole(GenKind::beta, GenKind::gamma, d);
			check_pole(GenKind::gamma, GenKind::beta, -d);
			check_pole(GenKind::b, GenKind::c, d);
			check_pole(GenKind::c, GenKind::b, d);
			for (auto [x, y] : std::vector<std::pair<GenKind, GenKind>>{{GenKind::beta, GenKind::beta},
			                                                              {GenKind::gamma, GenKind::gamma},
			                                                              {GenKind::b, GenKind::b},
			                                                              {GenKind::c, GenKind::c},
			                                                              {GenKind::beta, GenKind::b},
			                                                              {GenKind::beta, GenKind::c},
			                                                              {GenKind::gamma, GenKind::b},
			                                                              {GenKind::gamma, GenKind::c}})
				o.require(r(x, y).regular(), "regular generator pair");
		}
	for (int n = 1; n <= 3; ++n)
	{
		FreeFieldContext s{n, 0}, f{0, n};
		o.require(central_charge(virasoro_S(s)) == -n, "c(L^S) = -n");
		o.require(central_charge(virasoro_E(f)) == n, "c(L^E) = n");
	}
	FieldPoly L = ambient_virasoro(ctx);
	for (auto k : {GenKind::beta, GenKind::gamma, GenKind::b, GenKind::c})
		for (int i = 1; i <= 3; ++i)
		{
			auto x = gen(ctx, k, i);
			auto res = e.ope(L, x);
			o.require(res.pole(2, ctx) == make_rational(1, 2) * x && res.pole(1, ctx) == derivative(x) &&
			              res.poles.size() == 2,
			          "generator primary of weight 1/2");
		}
}

void criterion2(Outcome &o)
{
	for (auto const &c : closure_cases())
	{
		auto p = build_realization(c.family, c.n, c.m, c.r, 0);
		Rational inner_level = c.family == RealizationFamily::s2 ? make_rational(-c.m, 2) + c.r : Rational(c.r - c.m);
		o.require(p.inner.level == inner_level, name(c) + " inner level");
		o.require(p.coset.level == c.n, name(c) + " coset level");
		auto ri = verify_affine_ope(p.inner, 0), rc = verify_affine_ope(p.coset, 0);
		o.require(ri.ok(), name(c) + " inner OPE");
		o.require(rc.ok(), name(c) + " coset OPE");
		auto di = static_cast<std::size_t>(p.inner.g.dim()), dc = static_cast<std::size_t>(p.coset.g.dim());
		o.require(ri.pairs_checked == di * di && rc.pairs_checked == dc * dc, name(c) + " all pairs");
		o.note << name(c) << " " << ri.pairs_checked + rc.pairs_checked << " pairs; ";
	}
}

void criterion3(Outcome &o)
{
	for (auto const &c : closure_cases())
	{
		auto p = build_realization(c.family, c.n, c.m, c.r, 0);
		o.require(verify_coset(p, 0).ok(), name(c) + " mixed OPEs regular");
		auto emb = verify_conformal_embedding(p);
		o.require(emb.vector_identity, name(c) + " L_inner + L_coset = L^S + L^E");
		o.require(emb.c_inner + emb.c_coset == emb.c_ambient, name(c) + " central charge sum");
		if (c.family == RealizationFamily::s2)
			o.require(emb.c_ambient == -c.n * c.m + 2 * c.n * c.r, name(c) + " c = -nm + 2nr");
	}
}

void criterion4(Outcome &o)
{
	for (auto const &c : closure_cases())
	{
		auto p = build_realization(c.family, c.n, c.m, c.r, 0);
		for (auto const *a : {&p.inner, &p.coset})
		{
			FieldPoly L = sugawara(*a);
			Rational cc = central_charge(L); // throws unless L has the Virasoro shape
			if (a->g.name().rfind("gl_", 0) == 0)
				continue; // reductive: the centre contributes separately, checked via criterion 3
			auto eig = oracle::casimir_on_adjoint(a->g);
			if (!eig)
				continue;
			Rational h = *eig / 2, k = a->level;
			o.require(cc == k * a->g.sdim() / (k + h), name(c) + " " + a->g.name() + " c = k sdim/(k+h)");
		}
	}
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	// osp(1|2): sdim 1, h from the adjoint Casimir
	auto eig = oracle::casimir_on_adjoint(p.coset.g);
	o.require(eig.has_value(), "osp(1|2) Casimir");
	Rational want = Rational(1) * p.coset.g.sdim() / (1 + *eig / 2);
	o.require(want == make_rational(2, 5), "oracle value 2/5");
	o.require(central_charge(sugawara(p.coset)) == want, "osp(1|2) level 1 gives 2/5");
}

void criterion5(Outcome &o)
{
	std::mt19937 rng(20240501);
	FreeFieldContext ctx{2, 2};
	OpeEngine e(ctx);
	FockSpace fock(ctx);
	std::uniform_int_distribution<int> tw(1, 5);
	int pairs = 0;
	while (pairs < 240)
	{
		auto a = oracle::random_field(rng, ctx, tw(rng), 3);
		auto b = oracle::random_field(rng, ctx, tw(rng), 3);
		if (a.is_zero() || b.is_zero())
			continue;
		auto rep = ope_fock_crosscheck(a, b, e, fock);
		o.require(rep.ok(), "pair " + a.to_text() + " x " + b.to_text());
		++pairs;
	}
	o.note << pairs << " pairs; ";
}

bool certify_equal(Outcome &o, int n, int m, int r, int N, bool jet)
{
	CertifyOptions opt;
	opt.n = n;
	opt.m = m;
	opt.r = r;
	opt.max_weight = N;
	opt.with_jet = jet;
	opt.threads = 0;
	auto c = certify_classical_freeness(opt);
	bool ok = c.equal && c.dims_v == c.dims_arc && (!jet || c.dims_jet == c.dims_v) && c.derivation_stable;
	o.note << "(" << n << "," << m << "," << r << ") N=" << N << " " << c.verdict() << " dims";
	for (auto d : c.dims_v)
		o.note << " " << d;
	o.note << "; ";
	return ok;
}

void criterion6(Outcome &o)
{
	o.require(certify_equal(o, 1, 1, 1, 3, true), "triangle through N = 3");
	// stretch
	o.require(certify_equal(o, 1, 1, 1, 4, true), "triangle through N = 4");
}

void criterion7(Outcome &o)
{
	o.require(certify_equal(o, 2, 1, 1, 2, false), "(2,1,1) through 2");
	o.require(certify_equal(o, 1, 1, 2, 2, false), "(1,1,2) through 2");
	// stretch
	o.require(certify_equal(o, 2, 1, 1, 3, false), "(2,1,1) through 3");
	o.require(certify_equal(o, 1, 1, 2, 3, false), "(1,1,2) through 3");
}

void criterion8(Outcome &o)
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	auto bad = p.coset;
	bad.currents[0] *= Rational(2);
	auto rep = verify_affine_ope(bad);
	o.require(!rep.ok(), "corrupted current detected");
	o.require(!rep.failures.empty() && !rep.failures.front().difference.empty(), "discrepancy reported");
	o.note << rep.failures.size() << " failing pairs; ";

	CertifyOptions opt;
	opt.max_weight = 2;
	opt.drop_relation = 0;
	auto c = certify_classical_freeness(opt);
	o.require(!c.equal && c.mismatch_weight.has_value(), "dropped relation detected");
	if (c.mismatch_weight)
	{
		auto w = static_cast<std::size_t>(*c.mismatch_weight);
		o.require(c.dims_arc[w] > c.dims_v[w], "dims_arc > dims_V");
	}
	o.note << c.verdict() << "; ";
}

void criterion9(Outcome &o)
{
	std::vector<std::pair<std::string, std::vector<int>>> algebras = {
	    {"gl", {1}},        {"gl", {2}},        {"gl", {3}},       {"sl", {2}},       {"sl", {3}},
	    {"so", {2}},        {"so", {3}},        {"so", {4}},       {"so", {5}},       {"sp", {1}},
	    {"sp", {2}},        {"sl_super", {1, 1}}, {"sl_super", {2, 1}}, {"sl_super", {1, 2}},
	    {"osp", {1, 1}},    {"osp", {2, 1}},    {"osp", {1, 2}},   {"osp", {2, 2}},   {"osp", {3, 1}}};
	for (auto const &[f, prm] : algebras)
	{
		auto g = build_algebra(f, prm);
		o.require(check_jacobi(g).ok(), g.name() + " Jacobi");
		o.require(check_invariance(g).ok(), g.name() + " invariance");
		o.require(check_skew_symmetry(g).ok(), g.name() + " skew-symmetry");
	}

	std::mt19937 rng(9);
	FreeFieldContext ctx{2, 2};
	OpeEngine e(ctx);
	int skew = 0;
	while (skew < 60)
	{
		auto a = oracle::random_field(rng, ctx, 1 + static_cast<int>(rng() % 5), 2, true);
		auto b = oracle::random_field(rng, ctx, 1 + static_cast<int>(rng() % 5), 2, true);
		if (a.is_zero() || b.is_zero() || !parity(a) || !parity(b))
			continue;
		for (int n = 0; n < 6; ++n)
			o.require(e.product(b, a, n) == skew_side(e, a, b, n), "lambda-bracket skew-symmetry");
		++skew;
	}

	// arc quotients: derivation stability and monotonicity in the relations
	std::vector<PolyGen> gens{{"x", Parity::even, 2}, {"y", Parity::even, 2}, {"u", Parity::odd, 2}};
	PolyRing ring(gens);
	for (int trial = 0; trial < 8; ++trial)
	{
		DiffPresentation pr{gens, {}};
		auto prev = free_diff_dims(gens, 8).dims;
		for (int k = 0; k < 3; ++k)
		{
			SuperPoly rel;
			for (auto const &mo : ring.monomials(4, 1))
				if (rng() % 3 == 0 && ring.parity(mo) == Parity::even)
					add_term(rel, mo, Rational(static_cast<int>(rng() % 5) - 2));
			if (rel.empty())
				continue;
			pr.relations.push_back(rel);
			auto det = quotient_details(pr, 8, 2);
			o.require(det.derivation_stable, "d-stability");
			for (std::size_t t = 0; t < prev.size(); ++t)
				o.require(det.table.dims[t] <= prev[t], "monotonicity");
			prev = det.table.dims;
		}
	}

	for (int i = 0; i < 60; ++i)
	{
		auto f = oracle::random_field(rng, ctx, 1 + i % 6, 1 + i % 4);
		o.require(parse_field(f.to_text(), e) == f, "parser round trip");
	}

	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	o.require(subalgebra_graded_dims(p.coset.currents, 6, 1) == subalgebra_graded_dims(p.coset.currents, 6, 4),
	          "threads: subalgebra dims");
	o.require(jet_invariant_dims(1, 1, 1, 6, 1).dims == jet_invariant_dims(1, 1, 1, 6, 4).dims, "threads: jet dims");
	CertifyOptions c1, c4;
	c1.max_weight = c4.max_weight = 2;
	c1.threads = 1;
	c4.threads = 4;
	o.require(certify_classical_freeness(c1).to_json()["dims"] == certify_classical_freeness(c4).to_json()["dims"],
	          "threads: certificate tables");
}

} // namespace

int main()
{
	bool all = true;
	all &= run_criterion(1, "free-field axioms", 1, criterion1);
	all &= run_criterion(2, "affine realization closure", 600, criterion2);
	all &= run_criterion(3, "coset and conformal embedding", 120, criterion3);
	all &= run_criterion(4, "Sugawara central charges", 60, criterion4);
	all &= run_criterion(5, "two-path oracle equivalence", 120, criterion5);
	all &= run_criterion(6, "triangle identity at (1,1,1)", 1800, criterion6);
	all &= run_criterion(7, "second certificates", 3600, criterion7);
	all &= run_criterion(8, "negative controls", 600, criterion8);
	all &= run_criterion(9, "structural suites", 600, criterion9);
	std::printf("acceptance %s\n", all ? "PASS" : "FAIL");
	return all ? 0 : 1;
}
