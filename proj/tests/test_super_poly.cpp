#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpva/parser.h"
#include <random>

using namespace dpva;

namespace {

const VarTable vt = VarTable::standard(2);

SuperPoly W(const std::string &s) { return parse_super(s, vt); }

std::mt19937 rng(4321);

SuperPoly rand_super()
{
	std::uniform_int_distribution<int> nterms(1, 4), comp(1, 2), shift(-1, 1),
	    expo(1, 2), coef(-4, 4), nvars(0, 2), nodd(0, 3);
	SuperPoly w;
	for (int t = nterms(rng); t-- > 0;)
	{
		DiffPoly c(Q(coef(rng)));
		for (int v = nvars(rng); v-- > 0;)
			c *= DiffPoly::var(comp(rng), shift(rng), expo(rng));
		SuperPoly term(c);
		for (int v = nodd(rng); v-- > 0;)
			term = graded_mul(term, SuperPoly::odd(comp(rng), shift(rng)));
		w += term;
	}
	return w;
}

} // namespace

TEST_CASE("graded product")
{
	SuperPoly th = SuperPoly::odd(1, 0), ze = SuperPoly::odd(2, 0);
	CHECK(graded_mul(th, ze) == -graded_mul(ze, th));
	CHECK(graded_mul(graded_mul(th, ze), th).is_zero());
	CHECK(graded_mul(W("u*$u"), W("v*$v[1]")) == W("u*v*$u*$v[1]"));
}

TEST_CASE("odd partial derivatives")
{
	CHECK(partial_odd(1, 0, W("$u*$v")) == W("$v"));
	CHECK(partial_odd(2, 0, W("$u*$v")) == -W("$u"));
	CHECK(partial_odd(1, 1, W("u*$u*$u[1]")) == -W("u*$u"));
}

TEST_CASE("odd variational derivatives")
{
	CHECK(variational_odd(1, W("u*$u*$v[1]")) == W("u*$v[1]"));
	CHECK(variational_odd(2, W("u*$u*$v[1]")) == -W("u[-1]*$u[-1]"));
	SuperPoly g = W("v*$u");
	CHECK(variational_odd(1, shift_apply(1, g) - g).is_zero());
}

TEST_CASE("bivector density columns")
{
	SuperPoly p1 = W("u*$u*$v[1] - u*$u*$v");
	CHECK(variational_odd(1, p1) == W("u*$v[1] - u*$v"));
	CHECK(variational_odd(2, p1) == W("u*$u - u[-1]*$u[-1]"));
}

TEST_CASE("graded commutativity and associativity")
{
	for (int rep = 0; rep < 100; ++rep)
	{
		SuperPoly a = rand_super(), b = rand_super(), c = rand_super();
		CHECK(graded_mul(graded_mul(a, b), c) ==
		      graded_mul(a, graded_mul(b, c)));
	}
	for (int rep = 0; rep < 100; ++rep)
	{
		std::uniform_int_distribution<int> comp(1, 2), shift(-1, 1);
		SuperPoly a = SuperPoly::odd(comp(rng), shift(rng));
		SuperPoly b = SuperPoly::odd(comp(rng), shift(rng));
		CHECK(graded_mul(a, b) == -graded_mul(b, a));
	}
}

TEST_CASE("odd partials square to zero and commute with shift")
{
	for (int rep = 0; rep < 100; ++rep)
	{
		SuperPoly w = rand_super();
		for (int i = 1; i <= 2; ++i)
			for (int n = -1; n <= 1; ++n)
			{
				CHECK(partial_odd(i, n, partial_odd(i, n, w)).is_zero());
				CHECK(shift_apply(1, partial_odd(i, n, w)) ==
				      partial_odd(i, n + 1, shift_apply(1, w)));
			}
	}
}

TEST_CASE("degree bookkeeping")
{
	CHECK(W("$u*$v").degree() == 2);
	CHECK(W("u + v[2]").degree() == 0);
	CHECK(SuperPoly().degree() == -1);
	CHECK_THROWS_AS(W("$u + $u*$v").degree(), DegreeError);
	CHECK(W("u*$u + v*$v").homogeneous(1));
}
