#include "arcfree/affine.hpp"

#include <doctest.h>

using namespace arcfree;

namespace {

int count_parity(AffineRealization const &a, Parity p)
{
	int c = 0;
	for (auto const &b : a.g.basis())
		c += b.parity == p;
	return c;
}

bool all_currents_have_weight_one(AffineRealization const &a)
{
	for (std::size_t i = 0; i < a.currents.size(); ++i)
	{
		if (weight(a.currents[i]) != Rational(1))
			return false;
		if (parity(a.currents[i]) != a.g.parity(static_cast<int>(i)))
			return false;
	}
	return true;
}

} // namespace

TEST_CASE("s2 (1,1,1) shape")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	CHECK(p.inner.g.name() == "sp_2");
	CHECK(p.inner.currents.size() == 3);
	CHECK(p.inner.level == make_rational(1, 2));
	CHECK(p.coset.g.name() == "osp(1|2)");
	CHECK(count_parity(p.coset, Parity::even) == 3);
	CHECK(count_parity(p.coset, Parity::odd) == 2);
	CHECK(p.coset.level == 1);
	CHECK(p.ctx() == FreeFieldContext{1, 2});
	CHECK(all_currents_have_weight_one(p.inner));
	CHECK(all_currents_have_weight_one(p.coset));
	CHECK(p.simplicity_asserted);
}

TEST_CASE("s2 coset current counts follow the invariant pairings")
{
	for (auto [n, m, r] : std::vector<std::array<int, 3>>{{1, 0, 1}, {1, 2, 1}, {1, 1, 2}, {2, 1, 1}, {1, 3, 1}})
	{
		auto p = build_realization(RealizationFamily::s2, n, m, r);
		CAPTURE(p.coset.g.name());
		CHECK(count_parity(p.coset, Parity::even) == m * (m - 1) / 2 + r * (2 * r + 1));
		CHECK(count_parity(p.coset, Parity::odd) == 2 * m * r);
		CHECK(p.inner.level == make_rational(-m, 2) + r);
		CHECK(p.coset.level == n);
		CHECK(all_currents_have_weight_one(p.coset));
	}
}

TEST_CASE("pure bc case")
{
	auto p = build_realization(RealizationFamily::s2, 1, 0, 1);
	CHECK(p.ctx() == FreeFieldContext{0, 2});
	CHECK(p.coset.g.dim() == 3);
	CHECK(p.coset.g.dim_odd() == 0);
	CHECK(p.coset.level == 1);
	CHECK(verify_affine_ope(p.coset).ok());
}

TEST_CASE("affine OPEs hold for every current pair")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	auto ri = verify_affine_ope(p.inner), rc = verify_affine_ope(p.coset);
	CHECK(ri.pairs_checked == 9);
	CHECK(rc.pairs_checked == 25);
	CHECK(ri.ok());
	CHECK(rc.ok());

	auto q = build_realization(RealizationFamily::s1, 2, 1, 2);
	CHECK(q.inner.g.name() == "gl_2");
	CHECK(q.inner.level == 1);
	CHECK(q.coset.level == 2);
	CHECK(verify_affine_ope(q.inner).ok());
	CHECK(verify_affine_ope(q.coset).ok());
}

TEST_CASE("a doubled current is caught")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	auto bad = p.coset;
	bad.currents[0] *= Rational(2);
	auto rep = verify_affine_ope(bad);
	CHECK_FALSE(rep.ok());
	REQUIRE_FALSE(rep.failures.empty());
	auto const &f = rep.failures.front();
	CHECK_FALSE(f.difference.empty());
	CHECK(f.difference != "0");
	CHECK(rep.to_json()["failures"].size() == rep.failures.size());
}

TEST_CASE("coset regularity")
{
	for (auto [n, m, r] : std::vector<std::array<int, 3>>{{1, 1, 1}, {1, 2, 1}})
	{
		auto p = build_realization(RealizationFamily::s2, n, m, r);
		auto rep = verify_coset(p);
		CHECK(rep.ok());
		CHECK(rep.pairs_checked == static_cast<std::size_t>(p.inner.g.dim() * p.coset.g.dim()));
	}
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	CHECK(verify_coset(p).pairs_checked == 15);
	p.coset.currents[1] += p.inner.currents[0];
	CHECK_FALSE(verify_coset(p).ok());
}

TEST_CASE("Sugawara central charges")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	CHECK(central_charge(sugawara(p.coset)) == make_rational(2, 5));
	CHECK(sugawara_central_charge(p.coset) == make_rational(2, 5));
	CHECK(central_charge(sugawara(p.inner)) == make_rational(3, 5));

	for (auto const *a : {&p.inner, &p.coset})
	{
		Rational k = a->level, h = a->g.h_dual();
		CHECK(central_charge(sugawara(*a)) == k * a->g.sdim() / (k + h));
	}

	auto q = build_realization(RealizationFamily::s1, 2, 1, 2);
	// gl_2 at level 1: sl_2 part 1*3/(1+2) plus the Heisenberg centre
	CHECK(central_charge(sugawara(q.inner)) == 2);
	CHECK(central_charge(sugawara(q.coset)) == sugawara_central_charge(q.coset));
}

TEST_CASE("critical level is rejected")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	auto crit = p.coset;
	crit.level = -crit.g.h_dual();
	CHECK_THROWS_AS(sugawara(crit), CriticalLevel);
}

TEST_CASE("Sugawara vectors make the currents primary of weight one")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	for (auto const *a : {&p.inner, &p.coset})
	{
		OpeEngine e(a->ctx);
		FieldPoly L = sugawara(*a);
		for (auto const &x : a->currents)
		{
			auto r = e.ope(L, x);
			CHECK(r.pole(2, a->ctx) == x);
			CHECK(r.pole(1, a->ctx) == derivative(x));
			CHECK(r.poles.size() == 2);
		}
	}
}

TEST_CASE("conformal embedding")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	auto rep = verify_conformal_embedding(p);
	CHECK(rep.vector_identity);
	CHECK(rep.c_inner == make_rational(3, 5));
	CHECK(rep.c_coset == make_rational(2, 5));
	CHECK(rep.c_ambient == 1);
	CHECK(rep.c_expected == 1);
	CHECK(rep.ok());
	CHECK(sugawara(p.inner) + sugawara(p.coset) == ambient_virasoro(p.ctx()));

	auto q = build_realization(RealizationFamily::s2, 1, 2, 1);
	auto mixed = p;
	mixed.coset = q.coset;
	CHECK_THROWS_AS(verify_conformal_embedding(mixed), ContextMismatch);
}

TEST_CASE("level additivity when restricting to the first copies")
{
	// in the (n, m1 + m2, r) realization, the sp_2n currents restricted to the first m1
	// beta-gamma copies and all bc fields realise level -m1/2 + r
	int n = 1, m1 = 1, m2 = 1, r = 1;
	auto p = build_realization(RealizationFamily::s2, n, m1 + m2, r);
	AffineRealization cut = p.inner;
	for (auto &x : cut.currents)
	{
		FieldPoly kept(x.ctx());
		for (auto const &[mono, c] : x.terms())
		{
			bool inside = true;
			for (auto const &f : mono)
				if ((f.gen.kind == GenKind::beta || f.gen.kind == GenKind::gamma) && f.gen.index > n * m1)
					inside = false;
			if (inside)
				kept.add_monomial(mono, c);
		}
		x = kept;
	}
	cut.level = make_rational(-m1, 2) + r;
	CHECK(verify_affine_ope(cut).ok());
	cut.level = make_rational(-(m1 + m2), 2) + r;
	CHECK_FALSE(verify_affine_ope(cut).ok());
}

TEST_CASE("parameter validation")
{
	CHECK_THROWS_AS(build_realization(RealizationFamily::s2, 0, 1, 1), std::invalid_argument);
	CHECK_THROWS_AS(build_realization(RealizationFamily::s2, 1, -1, 1), std::invalid_argument);
	CHECK_THROWS_AS(build_realization(RealizationFamily::s2, 1, 1, 0), std::invalid_argument);
	CHECK(parse_realization_family("s1") == RealizationFamily::s1);
	CHECK_THROWS_AS(parse_realization_family("s3"), std::invalid_argument);
}

TEST_CASE("s1 simplicity label follows the hypotheses")
{
	CHECK(build_realization(RealizationFamily::s1, 2, 1, 2).simplicity_asserted);
	CHECK_FALSE(build_realization(RealizationFamily::s1, 1, 1, 2).simplicity_asserted);
	CHECK_FALSE(build_realization(RealizationFamily::s1, 2, 1, 1).simplicity_asserted);
}

TEST_CASE("degenerate sl(1|1) has no Sugawara vector")
{
	auto p = build_realization(RealizationFamily::s1, 1, 1, 1);
	CHECK(verify_affine_ope(p.coset).ok());
	CHECK_THROWS_AS(verify_conformal_embedding(p), std::domain_error);
}

TEST_CASE("realizations export as JSON")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	auto j = p.to_json();
	CHECK(j["schema"] == "arcfree.realization_pair/1");
	CHECK(j["coset"]["currents"].size() == 5);
}
