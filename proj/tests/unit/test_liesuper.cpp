#include "oracles.hpp"

#include "arcfree/liesuper.hpp"

#include <doctest.h>

using namespace arcfree;

namespace {

struct Case {
	std::string family;
	std::vector<int> params;
	Rational h;
};

std::vector<Case> simple_cases()
{
	return {
	    {"sl", {2}, 2},           {"sl", {3}, 3},           {"sp", {1}, 2},
	    {"sp", {2}, 3},           {"so", {3}, 1},           {"so", {4}, 2},
	    {"so", {5}, 3},           {"osp", {1, 1}, make_rational(3, 2)},
	    {"osp", {2, 1}, 1},       {"osp", {3, 1}, make_rational(1, 2)},
	    {"osp", {1, 2}, make_rational(5, 2)},
	    {"sl_super", {2, 1}, 1},  {"sl_super", {3, 1}, 2},
	};
}

} // namespace

TEST_CASE("small algebras have the expected shape")
{
	auto sp2 = build_algebra("sp", {1});
	CHECK(sp2.dim_even() == 3);
	CHECK(sp2.dim_odd() == 0);
	CHECK(sp2.h_dual() == 2);

	auto osp12 = build_algebra("osp", {1, 1});
	CHECK(osp12.h_dual() == make_rational(3, 2));
	CHECK(osp12.dim_even() == 3);
	CHECK(osp12.dim_odd() == 2);
	CHECK(osp12.sdim() == 1);

	CHECK(build_algebra("so", {1}).dim() == 0);
	CHECK(build_algebra("so", {0}).dim() == 0);
	CHECK(build_algebra("gl", {3}).dim() == 9);
}

TEST_CASE("bad families and parameters are rejected")
{
	CHECK_THROWS_AS(build_algebra("e8", {1}), std::invalid_argument);
	CHECK_THROWS_AS(build_algebra("sp", {-1}), std::invalid_argument);
	CHECK_THROWS_AS(build_algebra("osp", {1}), std::invalid_argument);
}

TEST_CASE("osp dual Coxeter number is (2n+2-m)/2")
{
	for (int m = 0; m <= 4; ++m)
		for (int n = 1; n <= 2; ++n)
		{
			auto g = build_algebra("osp", {m, n});
			CHECK(g.h_dual() == make_rational(2 * n + 2 - m, 2));
		}
}

TEST_CASE("structure constants agree with matrix supercommutators")
{
	for (auto const &c : simple_cases())
	{
		auto g = build_algebra(c.family, c.params);
		CAPTURE(g.name());
		for (int i = 0; i < g.dim(); ++i)
			for (int j = 0; j < g.dim(); ++j)
			{
				auto want = oracle::matrix_bracket(g, i, j);
				for (int k = 0; k < g.dim(); ++k)
					REQUIRE(g.structure(i, j, k) == want[static_cast<std::size_t>(k)]);
			}
	}
}

TEST_CASE("sp_2 brackets")
{
	auto g = build_algebra("sp", {1});
	int h = g.index_of("A(1,1)"), e = g.index_of("B(1,1)"), f = g.index_of("C(1,1)");
	CHECK(bracket(g, basis_vector(g, e), basis_vector(g, f)) == basis_vector(g, h));
	for (int i = 0; i < g.dim(); ++i)
		CHECK(bracket(g, basis_vector(g, i), basis_vector(g, i)).is_zero());
	CHECK(form(g, basis_vector(g, h), basis_vector(g, h)) == 2);
}

TEST_CASE("odd self-brackets in osp(1|2) do not vanish")
{
	auto g = build_algebra("osp", {1, 1});
	for (int i = 0; i < g.dim(); ++i)
		if (is_odd(g.parity(i)))
		{
			auto v = basis_vector(g, i);
			auto b = bracket(g, v, v);
			CHECK_FALSE(b.is_zero());
			CHECK(b.parity(g) == Parity::even);
		}
}

TEST_CASE("exhaustive axiom checks")
{
	std::vector<std::pair<std::string, std::vector<int>>> all = {
	    {"gl", {1}}, {"gl", {2}}, {"gl", {3}}, {"sl", {2}}, {"sl", {3}}, {"so", {2}}, {"so", {3}}, {"so", {4}},
	    {"sp", {1}}, {"sp", {2}}, {"sl_super", {1, 1}}, {"sl_super", {2, 1}}, {"sl_super", {1, 2}},
	    {"sl_super", {2, 2}}, {"osp", {1, 1}}, {"osp", {2, 1}}, {"osp", {1, 2}}, {"osp", {2, 2}}, {"osp", {3, 1}},
	    {"osp", {0, 1}}};
	for (auto const &[f, p] : all)
	{
		auto g = build_algebra(f, p);
		CAPTURE(g.name());
		for (auto const &chk : {check_skew_symmetry(g), check_jacobi(g), check_invariance(g), check_form_even(g),
		                        check_form_supersymmetric(g)})
		{
			CAPTURE(chk.name);
			CHECK(chk.ok());
		}
		if (f == "so" || f == "sp" || f == "osp")
			CHECK(check_preserves_defining_form(g).ok());
	}
}

TEST_CASE("Casimir acts on the adjoint by 2h")
{
	for (auto const &c : simple_cases())
	{
		auto g = build_algebra(c.family, c.params);
		CAPTURE(g.name());
		auto eig = oracle::casimir_on_adjoint(g);
		REQUIRE(eig.has_value());
		CHECK(*eig == 2 * c.h);
		CHECK(g.h_dual() == c.h);
		CHECK(adjoint_casimir_eigenvalue(g) == eig);
	}
}

TEST_CASE("dual basis pairs to the identity")
{
	for (auto const &c : simple_cases())
	{
		auto g = build_algebra(c.family, c.params);
		auto dual = dual_basis(g);
		for (int i = 0; i < g.dim(); ++i)
			for (int j = 0; j < g.dim(); ++j)
				CHECK(form(g, basis_vector(g, i), dual[static_cast<std::size_t>(j)]) == (i == j ? 1 : 0));
	}
	auto gl = build_algebra("gl", {2});
	CHECK(dual_basis(gl).size() == 4);
	CHECK_THROWS_AS(dual_basis(build_algebra("sl_super", {1, 1})), std::domain_error);
}

TEST_CASE("osp form restricts to the sp and -2 x so forms")
{
	for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}, {3, 1}, {2, 2}})
	{
		auto g = build_algebra("osp", {m, n});
		auto sp = build_algebra("sp", {n});
		auto so = build_algebra("so", {m});
		// embed each block element via its matrix and compare forms
		auto embed = [&](SuperMatrix const &x, int offset) {
			SuperMatrix big(m, 2 * n);
			for (int i = 0; i < x.size(); ++i)
				for (int j = 0; j < x.size(); ++j)
					big.at(offset + i, offset + j) = x.at(i, j);
			return g.coordinates(big);
		};
		auto pair = [&](std::vector<Rational> const &a, std::vector<Rational> const &b) {
			return form(g, AlgebraVector{g.name(), a}, AlgebraVector{g.name(), b});
		};
		for (int i = 0; i < sp.dim(); ++i)
			for (int j = 0; j < sp.dim(); ++j)
				CHECK(pair(embed(sp.matrix(i), m), embed(sp.matrix(j), m)) == sp.form(i, j));
		for (int i = 0; i < so.dim(); ++i)
			for (int j = 0; j < so.dim(); ++j)
				CHECK(pair(embed(so.matrix(i), 0), embed(so.matrix(j), 0)) == -2 * so.form(i, j));
	}
}

TEST_CASE("sl_2 coroot has square length 2")
{
	auto sl2 = build_algebra("sl", {2});
	SuperMatrix h(2, 0);
	h.at(0, 0) = 1;
	h.at(1, 1) = -1;
	auto c = sl2.coordinates(h);
	CHECK(form(sl2, AlgebraVector{sl2.name(), c}, AlgebraVector{sl2.name(), c}) == 2);
}

TEST_CASE("structure constants export as JSON")
{
	auto g = build_algebra("osp", {1, 1});
	auto j = g.to_json();
	CHECK(j["basis"].size() == 5);
	CHECK(j.contains("structure"));
	CHECK(j["h_dual"] == "3/2");
}
