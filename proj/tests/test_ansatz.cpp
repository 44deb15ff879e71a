#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpva/ansatz.h"
#include "dpva/catalog.h"

using namespace dpva;

namespace {

const VarTable vt = VarTable::standard(2);

DiffPoly P(const std::string &s) { return parse_poly(s, vt); }
SuperPoly W(const std::string &s) { return parse_super(s, vt); }

LocalPolyVector biv(const std::string &name)
{
	return op_to_bivector(catalog_get(name).op);
}

} // namespace

TEST_CASE("basis enumeration")
{
	AnsatzBasis b = build_ansatz_basis(2, 0, 0, 2);
	CHECK(b.monomials.size() == 6); // 1, u, v, u^2, uv, v^2
	CHECK(build_ansatz_basis(2, 0, 0, 0).monomials.size() == 1);
	CHECK(build_ansatz_basis(2, -1, 1, 2).monomials.size() == 28);
	AnsatzBasis l = build_ansatz_basis(1, 0, 0, 1, true);
	CHECK(l.monomials.size() == 3); // 1, u, u^-1
	std::set<Monomial> seen(b.monomials.begin(), b.monomials.end());
	CHECK(seen.size() == b.monomials.size());
}

TEST_CASE("linear solver")
{
	LinearSystem s1;
	s1.cols = 2;
	s1.add_row({{0, Q(1)}, {1, Q(1)}}, Q(2));
	s1.add_row({{0, Q(1)}, {1, Q(-1)}}, Q(0));
	auto r1 = solve_linear(s1);
	REQUIRE(r1.has_value());
	CHECK(r1->x == std::vector<Q>{Q(1), Q(1)});
	CHECK(r1->nullity == 0);

	LinearSystem s2;
	s2.cols = 1;
	s2.add_row({{0, Q(1)}}, Q(1));
	s2.add_row({{0, Q(1)}}, Q(2));
	CHECK_FALSE(solve_linear(s2).has_value());

	LinearSystem s3;
	s3.cols = 3;
	s3.add_row({{0, Q(1)}, {2, Q(1)}}, Q(5));
	auto r3 = solve_linear(s3);
	REQUIRE(r3.has_value());
	CHECK(r3->nullity == 2);
	CHECK(r3->x[0] + r3->x[2] == 5);
}

TEST_CASE("toda trivialization")
{
	LocalPolyVector ul = canonicalize(W("1/2*u*$u*$v"));
	auto sol = solve_trivialization(biv("toda.h1"), biv("toda.h2"), ul,
	                                build_ansatz_basis(2, 0, 0, 2));
	REQUIRE(sol.has_value());
	CHECK(sol->alpha == 0);
	CHECK(schouten_bracket(biv("toda.h1"), sol->X) == biv("toda.h2"));
}

TEST_CASE("bruschi ragnisco trivialization")
{
	LocalPolyVector ul = canonicalize(W("1/2*u*$u*$v"));
	auto sol = solve_trivialization(biv("toda.h1"), biv("br.h2"), ul,
	                                build_ansatz_basis(2, -1, 1, 2));
	REQUIRE(sol.has_value());
	CHECK(sol->alpha == 0);
	CHECK(schouten_bracket(biv("toda.h1"), sol->X) == biv("br.h2"));
}

TEST_CASE("two component volterra trivialization")
{
	LocalPolyVector ul = canonicalize(W("1/2*u*v*$u*$v"));
	auto sol = solve_trivialization(biv("v2.h1"), biv("v2.h2"), ul,
	                                build_ansatz_basis(2, 0, 0, 2));
	REQUIRE(sol.has_value());
	CHECK(sol->alpha == 0);
	CHECK(schouten_bracket(biv("v2.h1"), sol->X) == biv("v2.h2"));
}

TEST_CASE("no solution in a too small space")
{
	CHECK_FALSE(solve_trivialization(biv("toda.h1"), biv("br.h2"),
	                                 std::nullopt,
	                                 build_ansatz_basis(2, 0, 0, 2))
	                .has_value());
}

TEST_CASE("derived pairs")
{
	LocalPolyVector p0 = canonicalize(W("$u*$v[1] - $u*$v"));
	LocalPolyVector ulc = canonicalize(W("$u*$v"));
	DerivedPair d = derive_pair(p0, one_vector({P("v"), DiffPoly()}), 1, ulc);
	CHECK(d.poisson);
	CHECK(d.witness);
	MatDiffOp expect(2);
	expect.add(1, 1, 1, DiffPoly(-1));
	expect.add(1, 1, -1, DiffPoly(1));
	expect.add(1, 2, 0, DiffPoly(1));
	expect.add(2, 1, 0, DiffPoly(-1));
	CHECK(d.P == op_to_bivector(expect));
	CHECK(are_compatible(d.P, p0));

	// linear characteristics give constant coefficients, always Poisson
	DerivedPair lin =
	    derive_pair(p0, one_vector({P("u[1] - v"), P("2*v[-1]")}), 0, ulc);
	CHECK(lin.poisson);
	CHECK(are_compatible(lin.P, p0));
}
