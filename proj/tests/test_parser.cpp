#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpva/parser.h"
#include <random>

using namespace dpva;

namespace {

const VarTable vt = VarTable::standard(2);

std::mt19937 rng(2024);

DiffPoly rand_poly()
{
	std::uniform_int_distribution<int> nterms(1, 5), comp(1, 2), shift(-3, 3),
	    expo(-3, 3), coef(-9, 9), nvars(0, 3), sym(0, 3);
	DiffPoly f;
	for (int t = nterms(rng); t-- > 0;)
	{
		Monomial m;
		for (int v = nvars(rng); v-- > 0;)
		{
			int e = expo(rng);
			if (e != 0)
				m.vars[{comp(rng), shift(rng)}] = e;
		}
		if (int s = sym(rng); s == 0)
			m.syms["k"] = 1;
		int c = coef(rng);
		if (c != 0)
			f.add_term(m, Q(c) / (1 + t));
	}
	return f;
}

} // namespace

TEST_CASE("grammar basics")
{
	CHECK(parse_poly("u", vt) == DiffPoly::var(1, 0));
	CHECK(parse_poly("u[3]", vt) == DiffPoly::var(1, 3));
	CHECK(parse_poly("v[-2]^2", vt) == DiffPoly::var(2, -2, 2));
	CHECK(parse_poly("u[1]*v[-2]^2 - 3/2*u", vt) ==
	      DiffPoly::var(1, 1) * DiffPoly::var(2, -2, 2) -
	          DiffPoly::var(1, 0) * Q(3, 2));
	CHECK(parse_poly("kappa*u", vt) ==
	      DiffPoly::sym("kappa") * DiffPoly::var(1, 0));
}

TEST_CASE("precedence and parentheses")
{
	CHECK(parse_poly("u + v*u", vt) ==
	      parse_poly("u", vt) + parse_poly("v", vt) * parse_poly("u", vt));
	CHECK(parse_poly("(u + v)^2", vt) ==
	      parse_poly("u^2 + 2*u*v + v^2", vt));
	CHECK(parse_poly("-u^2", vt) == -parse_poly("u^2", vt));
	CHECK(parse_poly("u^-1", vt) == DiffPoly::var(1, 0, -1));
}

TEST_CASE("odd generators")
{
	CHECK(parse_super("$u", vt) == SuperPoly::odd(1, 0));
	CHECK(parse_super("$v[-1]", vt) == SuperPoly::odd(2, -1));
	CHECK(parse_super("$u*$v", vt) ==
	      graded_mul(SuperPoly::odd(1, 0), SuperPoly::odd(2, 0)));
	CHECK(parse_super("$v*$u", vt) == -parse_super("$u*$v", vt));
	CHECK(parse_super("$u*$u", vt).is_zero());
}

TEST_CASE("parse errors")
{
	CHECK_THROWS_AS(parse_poly("", vt), ParseError);
	CHECK_THROWS_AS(parse_poly("u +", vt), ParseError);
	CHECK_THROWS_AS(parse_poly("u[", vt), ParseError);
	CHECK_THROWS_AS(parse_poly("(u", vt), ParseError);
	CHECK_THROWS_AS(parse_poly("u ^ v", vt), ParseError);
	CHECK_THROWS_AS(parse_poly("$u", vt), ParseError);
}

TEST_CASE("printing round trip")
{
	for (int rep = 0; rep < 200; ++rep)
	{
		DiffPoly f = rand_poly();
		CHECK(parse_poly(to_string(f, vt), vt) == f);
	}
	for (int rep = 0; rep < 100; ++rep)
	{
		SuperPoly w(rand_poly());
		std::uniform_int_distribution<int> comp(1, 2), shift(-2, 2);
		w = graded_mul(w, SuperPoly::odd(comp(rng), shift(rng)));
		w += SuperPoly(rand_poly());
		CHECK(parse_super(to_string(w, vt), vt) == w);
	}
	CHECK(to_string(DiffPoly(), vt) == "0");
}
