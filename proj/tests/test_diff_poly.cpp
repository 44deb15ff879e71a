#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpva/parser.h"
#include <random>

using namespace dpva;

namespace {

const VarTable vt = VarTable::standard(2);

DiffPoly P(const std::string &s) { return parse_poly(s, vt); }

std::mt19937 rng(1234);

DiffPoly rand_poly(bool laurent = false)
{
	std::uniform_int_distribution<int> nterms(1, 4), comp(1, 2), shift(-2, 2),
	    expo(laurent ? -2 : 1, 2), coef(-5, 5), nvars(0, 3);
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
		int c = coef(rng);
		if (c != 0)
			f.add_term(m, c);
	}
	return f;
}

} // namespace

TEST_CASE("ring operations")
{
	CHECK((P("u") + P("v")) * (P("u") - P("v")) == P("u^2 - v^2"));
	CHECK(P("u") * P("u^-1") == DiffPoly(1));
	CHECK(P("1/2*u") + P("1/3*u") == P("5/6*u"));
	CHECK(P("u") - P("u") == DiffPoly());
}

TEST_CASE("shift automorphism")
{
	CHECK(shift_apply(1, P("u*v[1]")) == P("u[1]*v[2]"));
	CHECK(shift_apply(-1, P("u[1] - u")) == P("u - u[-1]"));
	CHECK(shift_apply(1, P("c*u")) == P("c*u[1]"));
	DiffPoly f = rand_poly(true);
	for (int k = -3; k <= 3; ++k)
		CHECK(shift_apply(-k, shift_apply(k, f)) == f);
}

TEST_CASE("partial derivatives")
{
	CHECK(partial_u(1, 1, P("u*u[1]^2")) == P("2*u*u[1]"));
	CHECK(partial_u(1, 0, P("u^-1")) == P("-u^-2"));
	CHECK(partial_u(2, 0, P("u*u[1]")) == DiffPoly());
}

TEST_CASE("variational derivative")
{
	CHECK(variational_u(1, P("u*u[1]")) == P("u[1] + u[-1]"));
	DiffPoly g = P("u^2*v[-1]");
	CHECK(variational_u(1, shift_apply(1, g) - g) == DiffPoly());
	CHECK(variational_u(2, P("u*u[1]")) == DiffPoly());
}

TEST_CASE("integration")
{
	CHECK(integrate_u(1, 0, P("u^2")) == P("1/3*u^3"));
	CHECK(integrate_u(1, 0, P("v")) == P("u*v"));
	CHECK_THROWS_AS(integrate_u(1, 0, P("u^-1")), NonIntegrableExponent);
}

TEST_CASE("substitution")
{
	std::map<int, DiffPoly> phi = {{1, P("u*v^-1")}, {2, P("(u-1)*v^-1")}};
	CHECK(substitute(P("u*v"), phi) == P("u*(u-1)*v^-2"));
	std::map<int, DiffPoly> shear = {{1, P("u+v")}};
	CHECK(substitute(P("u[1]^2"), shear) == P("(u[1]+v[1])^2"));
	DiffPoly f = rand_poly();
	CHECK(substitute(f, {}) == f);
	CHECK_THROWS_AS(substitute(P("u^-1"), shear), NonInvertibleSubstitution);
}

TEST_CASE("symbol substitution")
{
	CHECK(substitute_syms(P("a*u + b*v"), {{"a", Q(2)}, {"b", Q(0)}}) ==
	      P("2*u"));
	CHECK(substitute_syms(P("a*u"), {{"b", Q(7)}}) == P("a*u"));
}

TEST_CASE("shift commutes with partials")
{
	for (int rep = 0; rep < 100; ++rep)
	{
		DiffPoly f = rand_poly(true);
		for (auto &v : f.support())
			CHECK(shift_apply(1, partial_u(v.comp, v.shift, f)) ==
			      partial_u(v.comp, v.shift + 1, shift_apply(1, f)));
	}
}

TEST_CASE("variational derivative kills total shifts")
{
	for (int rep = 0; rep < 100; ++rep)
	{
		DiffPoly f = rand_poly(true), g = rand_poly(true);
		for (int i = 1; i <= 2; ++i)
			CHECK(variational_u(i, f + shift_apply(1, g) - g) ==
			      variational_u(i, f));
	}
}

TEST_CASE("integration inverts differentiation")
{
	for (int rep = 0; rep < 100; ++rep)
	{
		DiffPoly f = rand_poly();
		CHECK(partial_u(1, 0, integrate_u(1, 0, f)) == f);
	}
}

TEST_CASE("substitution is a shift-equivariant homomorphism")
{
	std::map<int, DiffPoly> phi = {{1, P("u+v")}, {2, P("u*v")}};
	for (int rep = 0; rep < 100; ++rep)
	{
		DiffPoly f = rand_poly(), g = rand_poly();
		CHECK(substitute(f * g, phi) == substitute(f, phi) * substitute(g, phi));
		CHECK(substitute(shift_apply(1, f), phi) ==
		      shift_apply(1, substitute(f, phi)));
	}
}
