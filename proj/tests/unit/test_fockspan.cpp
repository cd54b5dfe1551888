#include "oracles.hpp"

#include "arcfree/affine.hpp"
#include "arcfree/fockspan.hpp"

#include <doctest.h>

using namespace arcfree;

TEST_CASE("Fock basis dimensions")
{
	auto s1 = enumerate_basis({1, 0}, 4);
	CHECK(s1.dim(1) == 2);
	CHECK(s1.dim(2) == 3);
	auto e1 = enumerate_basis({0, 1}, 4);
	CHECK(e1.dim(2) == 1);
	CHECK(e1.dim(1) == 2);
}

TEST_CASE("Fock character matches the product formula")
{
	for (auto ctx : {FreeFieldContext{1, 0}, FreeFieldContext{0, 2}, FreeFieldContext{2, 2}, FreeFieldContext{1, 3}})
	{
		int top = 8;
		auto basis = enumerate_basis(ctx, top);
		auto want = oracle::free_field_character(ctx.n_bg, ctx.n_bc, top);
		auto closed = fock_character(ctx, top);
		for (int w = 0; w <= top; ++w)
		{
			CHECK(basis.dim(w) == static_cast<std::size_t>(want[static_cast<std::size_t>(w)]));
			CHECK(closed[static_cast<std::size_t>(w)] == static_cast<std::size_t>(want[static_cast<std::size_t>(w)]));
		}
	}
}

TEST_CASE("monomial cap is a hard error")
{
	ResourceCaps caps;
	caps.max_monomials = 10;
	CHECK_THROWS_AS(enumerate_basis({2, 2}, 6, caps), ResourceLimit);
}

TEST_CASE("mode action basics")
{
	FreeFieldContext ctx{1, 1};
	auto vac = FockVector::vacuum(ctx);
	auto beta = FieldPoly::generator(ctx, {GenKind::beta, 1});
	auto gamma = FieldPoly::generator(ctx, {GenKind::gamma, 1});
	CHECK(mode_action(beta, 0, state_of(gamma)) == vac);
	CHECK(mode_action(gamma, 0, state_of(beta)) == [&] {
		FockVector v(ctx);
		v.add(vac, Rational(-1));
		return v;
	}());
	for (auto k : {GenKind::beta, GenKind::gamma, GenKind::b, GenKind::c})
		for (int n = 0; n < 3; ++n)
			CHECK(mode_action(FieldPoly::generator(ctx, {k, 1}), n, vac).is_zero());
	CHECK(mode_action(beta, -1, vac) == state_of(beta));
}

TEST_CASE("L_0 is the grading operator")
{
	FreeFieldContext ctx{1, 1};
	FieldPoly L = ambient_virasoro(ctx);
	FockSpace fock(ctx);
	auto basis = enumerate_basis(ctx, 6);
	for (int w = 0; w <= 6; ++w)
		for (auto const &m : basis.at(w))
		{
			FockVector v(ctx);
			v.add(m, Rational(1));
			FockVector want(ctx);
			want.add(m, make_rational(w, 2));
			CHECK(fock.apply(L, 1, v) == want);
		}
}

TEST_CASE("state-field correspondence round trip")
{
	std::mt19937 rng(2);
	FreeFieldContext ctx{2, 2};
	for (int i = 0; i < 20; ++i)
	{
		auto f = oracle::random_field(rng, ctx, 1 + i % 5, 3);
		CHECK(field_of(state_of(f)) == f);
	}
}

TEST_CASE("coset subalgebra of s2 (1,1,1)")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	auto v = generate_subalgebra(p.coset.currents, 6);
	CHECK(v.dims[0] == 1);
	CHECK(v.dims[1] == 0);
	CHECK(v.dims[2] == 5);
	CHECK(v.dims[4] == 9);
	CHECK(v.dims[6] == 21);

	// closure: every generator mode maps the span into itself
	auto basis = enumerate_basis(p.ctx(), 6);
	FockSpace fock(p.ctx(), 6);
	std::vector<EchelonBasis> span(7);
	for (int w = 0; w <= 6; ++w)
		for (auto const &x : v.basis[static_cast<std::size_t>(w)])
			span[static_cast<std::size_t>(w)].insert(basis.coordinates(x));
	for (int w = 0; w <= 6; ++w)
		for (auto const &x : v.basis[static_cast<std::size_t>(w)])
			for (auto const &g : p.coset.currents)
				for (int n = -3; n <= 3; ++n)
				{
					int tw = w + 2 * (-n);
					if (tw < 0 || tw > 6)
						continue;
					auto y = fock.apply(g, n, x);
					if (!y.is_zero())
						CHECK(span[static_cast<std::size_t>(tw)].contains(basis.coordinates(y)));
				}
}

TEST_CASE("inner and coset currents are independent at weight one")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	auto basis = enumerate_basis(p.ctx(), 2);
	std::vector<SparseVec> rows;
	for (auto const *a : {&p.inner, &p.coset})
		for (auto const &x : a->currents)
			rows.push_back(basis.coordinates(state_of(x)));
	CHECK(rank_of(rows) == 8);
}

TEST_CASE("free S(1) has no C2 relations")
{
	FreeFieldContext ctx{1, 0};
	std::vector<FieldPoly> gens{FieldPoly::generator(ctx, {GenKind::beta, 1}),
	                            FieldPoly::generator(ctx, {GenKind::gamma, 1})};
	auto pres = c2_presentation(gens, {"beta", "gamma"}, 4, 4);
	CHECK(pres.relation_count() == 0);
	// R_V is then the polynomial ring in two variables of weight 1/2
	for (int t = 0; t <= 4; ++t)
		CHECK(pres.rv_dims[static_cast<std::size_t>(t)] == static_cast<std::size_t>(t + 1));
	CHECK_THROWS_AS(c2_presentation(gens, {"beta", "gamma"}, 5, 4), std::invalid_argument);
}

TEST_CASE("osp(1|2) at level one has quadratic relations")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	std::vector<std::string> labels;
	for (auto const &b : p.coset.g.basis())
		labels.push_back(b.label);
	auto pres = c2_presentation(p.coset.currents, labels, 2, 4);
	CHECK(pres.rv_dims[2] == 5); // weight 1: no linear relations
	REQUIRE(pres.relations.count(2));
	CHECK_FALSE(pres.relations.at(2).empty());
	CHECK(pres.relations.count(1) == 0);
	// odd generator squares are structural relations
	CHECK(pres.odd_squares.size() == 2);
	CHECK(pres.v_dims[4] == 9);
	CHECK(pres.to_json()["schema"] == "arcfree.c2_presentation/1");
	CHECK_THROWS_AS(c2_presentation(p.coset.currents, labels, 3, 4), std::invalid_argument);
}

TEST_CASE("generator pairs of the realization pass the two-path check")
{
	auto p = build_realization(RealizationFamily::s2, 1, 1, 1);
	OpeEngine e(p.ctx());
	FockSpace fock(p.ctx());
	for (auto const *a : {&p.inner, &p.coset})
		for (auto const &x : a->currents)
			for (auto const &y : a->currents)
				CHECK(ope_fock_crosscheck(x, y, e, fock).ok());
	FreeFieldContext s{1, 0};
	auto L = virasoro_S(s);
	CHECK(ope_fock_crosscheck(L, L).ok());
	CHECK(ope_fock_crosscheck(FieldPoly::generator(s, {GenKind::beta, 1}), FieldPoly::generator(s, {GenKind::gamma, 1}))
	          .ok());
}

TEST_CASE("subalgebra dims do not depend on the thread count")
{
	auto p = build_realization(RealizationFamily::s2, 1, 2, 1);
	auto one = subalgebra_graded_dims(p.coset.currents, 4, 1);
	auto four = subalgebra_graded_dims(p.coset.currents, 4, 4);
	CHECK(one == four);
}
