#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dpva/catalog.h"

using namespace dpva;

TEST_CASE("required entries are present")
{
	for (auto name :
	     {"toda.h0", "toda.h1", "toda.h2", "toda.h2tilde", "br.h2", "v2.h1",
	      "v2.h2", "rv.h2", "rt.h1", "rt.h2", "rt.htilde", "ul.constant",
	      "aff.family", "normal.constant", "normal.type1", "normal.type2"})
	{
		const CatalogEntry &e = catalog_get(name);
		CHECK(e.name == name);
		CHECK_FALSE(e.provenance.empty());
		CHECK(check_skewadjoint(e.op).skew);
	}
}

TEST_CASE("aliases and lookup failures")
{
	CHECK(catalog_get("volterra2.h1").op == catalog_get("v2.h1").op);
	CHECK(catalog_get("volterra2.h2").op == catalog_get("v2.h2").op);
	CHECK_THROWS_AS(catalog_get("nosuch"), NotFound);
	try
	{
		catalog_get("nosuch");
	}
	catch (const NotFound &e)
	{
		CHECK(std::string(e.what()).find("toda.h1") != std::string::npos);
	}
}

TEST_CASE("shapes and orders")
{
	CHECK(catalog_get("ul.constant").op.order() == std::pair{0, 0});
	CHECK(catalog_get("toda.h1").op.order() == std::pair{-1, 1});
	CHECK(catalog_get("rv.h2").op.order() == std::pair{-2, 2});
	CHECK(catalog_get("toda.h2tilde").op.arity() == 3);
	CHECK(catalog_get("rt.h1").op.arity() == 2);
}

TEST_CASE("hamiltonian entries pass the jacobi check")
{
	for (auto &e : catalog_entries())
		if (e.hamiltonian)
			CHECK(check_jacobi(e.op).kind == JacobiVerdict::Pass);
}

TEST_CASE("symbols of the parametric entries")
{
	auto syms_of = [](const MatDiffOp &k) {
		std::set<std::string> s;
		for (int i = 1; i <= k.arity(); ++i)
			for (int j = 1; j <= k.arity(); ++j)
				for (auto &[l, c] : k.entry(i, j))
					for (auto &n : c.symbols())
						s.insert(n);
		return s;
	};
	std::set<std::string> aff = {"a", "b", "c", "d", "alpha", "beta", "gamma"};
	CHECK(syms_of(catalog_get("aff.family").op) == aff);
	CHECK(syms_of(catalog_get("normal.constant").op) ==
	      std::set<std::string>{"k"});
	CHECK(syms_of(catalog_get("normal.type1").op) ==
	      std::set<std::string>{"sigma"});
}

TEST_CASE("json round trip for every entry")
{
	for (auto &e : catalog_entries())
	{
		VarTable vt;
		MatDiffOp back = op_from_json(op_to_json(e.op, e.vt), vt);
		CHECK(back == e.op);
		CHECK(vt.comps == e.vt.comps);
	}
}

TEST_CASE("names are listed in catalog order")
{
	std::vector<std::string> names = catalog_names();
	CHECK(names.size() == catalog_entries().size());
	for (size_t i = 0; i < names.size(); ++i)
		CHECK(names[i] == catalog_entries()[i].name);
}
