#include "dpva/catalog.h"

namespace dpva {

namespace {

struct Cell
{
	int i, j, shift;
	const char *coeff;
};

CatalogEntry make(const std::string &name, const VarTable &vt, int arity,
                  std::initializer_list<Cell> cells, const char *prov,
                  bool ham)
{
	MatDiffOp k(arity);
	for (auto &c : cells)
		k.add(c.i, c.j, c.shift, parse_poly(c.coeff, vt));
	return {name, vt, std::move(k), prov, ham};
}

std::vector<CatalogEntry> build()
{
	VarTable uv = VarTable::standard(2);
	VarTable uvw = VarTable::standard(3);
	std::vector<CatalogEntry> c;

	c.push_back(make("toda.h0", uv, 2,
	                 {{1, 2, 1, "1"}, {1, 2, 0, "-1"},
	                  {2, 1, 0, "1"}, {2, 1, -1, "-1"}},
	                 "Toda lattice, first structure in logarithmic coordinates",
	                 true));
	c.push_back(make("toda.h1", uv, 2,
	                 {{1, 2, 1, "u"}, {1, 2, 0, "-u"},
	                  {2, 1, 0, "u"}, {2, 1, -1, "-u[-1]"}},
	                 "Toda lattice, first Hamiltonian structure", true));
	c.push_back(make("toda.h2", uv, 2,
	                 {{1, 1, 1, "u*u[1]"}, {1, 1, -1, "-u*u[-1]"},
	                  {1, 2, 1, "u*v[1]"}, {1, 2, 0, "-u*v"},
	                  {2, 1, 0, "u*v"}, {2, 1, -1, "-u[-1]*v"},
	                  {2, 2, 1, "u"}, {2, 2, -1, "-u[-1]"}},
	                 "Toda lattice, second Hamiltonian structure", true));
	// here w stands for the exponential of u, carried as an extra component
	c.push_back(make("toda.h2tilde", uvw, 3,
	                 {{1, 1, 1, "1"}, {1, 1, -1, "-1"},
	                  {1, 2, 1, "v[1]"}, {1, 2, 0, "-v"},
	                  {2, 1, 0, "v"}, {2, 1, -1, "-v"},
	                  {2, 2, 1, "w"}, {2, 2, -1, "-w[-1]"}},
	                 "Toda lattice, second structure in logarithmic coordinates",
	                 false));
	c.push_back(make("br.h2", uv, 2,
	                 {{1, 2, 0, "u^2"}, {1, 2, -1, "-u*u[-1]"},
	                  {2, 1, 1, "u*u[1]"}, {2, 1, 0, "-u^2"},
	                  {2, 2, 1, "u*v[1]"}, {2, 2, -1, "-u[-1]*v"}},
	                 "Bruschi-Ragnisco lattice, second Hamiltonian structure",
	                 true));
	c.push_back(make("v2.h1", uv, 2,
	                 {{1, 2, 1, "u*v[1]"}, {1, 2, 0, "-u*v"},
	                  {2, 1, 0, "u*v"}, {2, 1, -1, "-u[-1]*v"}},
	                 "two-component Volterra lattice, first structure", true));
	c.push_back(make("v2.h2", uv, 2,
	                 {{1, 1, 1, "u*u[1]*v[1]"}, {1, 1, -1, "-u[-1]*u*v"},
	                  {1, 2, 1, "u*(u+v[1])*v[1]"}, {1, 2, 0, "-u*v*(u+v)"},
	                  {2, 1, 0, "u*v*(u+v)"}, {2, 1, -1, "-u[-1]*v*(u[-1]+v)"},
	                  {2, 2, 1, "u*v*v[1]"}, {2, 2, -1, "-u[-1]*v[-1]*v"}},
	                 "two-component Volterra lattice, second structure", true));
	c.push_back(make(
	    "rv.h2", uv, 2,
	    {{1, 1, 1, "u*u[1]*v[1]*(1+u[1])"}, {1, 1, -1, "-u[-1]*u*v*(1+u)"},
	     {1, 2, 2, "u*u[1]*v[1]*v[2]"}, {1, 2, 1, "u*v[1]*(u+v[1])"},
	     {1, 2, 0, "-u*v*(u+v+u*v)"},
	     {2, 1, 0, "u*v*(u+v+u*v)"}, {2, 1, -1, "-u[-1]*v*(u[-1]+v)"},
	     {2, 1, -2, "-u[-2]*u[-1]*v[-1]*v"},
	     {2, 2, 1, "u*v*(1+v)*v[1]"}, {2, 2, -1, "-u[-1]*v[-1]*(1+v[-1])*v"}},
	    "relativistic Volterra lattice, order (-2,2) structure", true));
	c.push_back(make("rt.h1", uv, 2,
	                 {{1, 2, 1, "u"}, {1, 2, 0, "-u"},
	                  {2, 1, 0, "u"}, {2, 1, -1, "-u[-1]"},
	                  {2, 2, -1, "u[-1]"}, {2, 2, 1, "-u"}},
	                 "relativistic Toda lattice, first structure", true));
	c.push_back(make("rt.h2", uv, 2,
	                 {{1, 1, 1, "u*u[1]"}, {1, 1, -1, "-u*u[-1]"},
	                  {1, 2, 1, "u*v[1]"}, {1, 2, 0, "-u*v"},
	                  {2, 1, 0, "u*v"}, {2, 1, -1, "-u[-1]*v"}},
	                 "relativistic Toda lattice, second structure", true));
	c.push_back(make("rt.htilde", uv, 2,
	                 {{2, 2, 1, "u"}, {2, 2, -1, "-u[-1]"}},
	                 "third member of the relativistic Toda compatible triple",
	                 true));
	c.push_back(make("ul.constant", uv, 2, {{1, 2, 0, "1"}, {2, 1, 0, "-1"}},
	                 "constant ultralocal structure", true));
	{
		// A = diag(u,u) r (u1 v1; 0 1), B skew from (alpha, beta, gamma)
		std::vector<std::vector<DiffPoly>> A{
		    {parse_poly("a*u*u[1]", uv), parse_poly("u*(a*v[1]+b)", uv)},
		    {parse_poly("c*u*u[1]", uv), parse_poly("u*(c*v[1]+d)", uv)}};
		std::vector<std::vector<DiffPoly>> B{
		    {DiffPoly(),
		     parse_poly("-alpha*(u^2-u)-beta*u*v-gamma*u", uv)},
		    {parse_poly("alpha*(u^2-u)+beta*u*v+gamma*u", uv), DiffPoly()}};
		c.push_back({"aff.family", uv, assemble_order11(A, B),
		             "affine Poisson-Lie family with parameters "
		             "a,b,c,d,alpha,beta,gamma",
		             false});
	}
	c.push_back(make("normal.constant", uv, 2,
	                 {{2, 1, 1, "1"}, {1, 2, -1, "-1"},
	                  {1, 2, 0, "k"}, {2, 1, 0, "-k"}},
	                 "constant normal form with parameter k", true));
	c.push_back(make("normal.type1", uv, 2,
	                 {{1, 1, 1, "v*v[1]"}, {1, 1, -1, "-v[-1]*v"},
	                  {1, 2, 0, "sigma"}, {2, 1, 0, "-sigma"}},
	                 "type I normal form, g(v,v1) = v*v1", true));
	c.push_back(make("normal.type2", uv, 2,
	                 {{2, 1, 1, "u[1]*v"}, {1, 2, -1, "-u*v[-1]"}},
	                 "type II normal form, f(u1,v) = u1*v", true));
	return c;
}

} // namespace

const std::vector<CatalogEntry> &catalog_entries()
{
	static const std::vector<CatalogEntry> entries = build();
	return entries;
}

const CatalogEntry &catalog_get(const std::string &name)
{
	std::string key = name;
	// historical aliases
	if (key == "volterra2.h1")
		key = "v2.h1";
	if (key == "volterra2.h2")
		key = "v2.h2";
	for (auto &e : catalog_entries())
		if (e.name == key)
			return e;
	std::string msg = "unknown operator \"" + name + "\"; available:";
	for (auto &e : catalog_entries())
		msg += " " + e.name;
	throw NotFound(msg);
}

std::vector<std::string> catalog_names()
{
	std::vector<std::string> names;
	for (auto &e : catalog_entries())
		names.push_back(e.name);
	return names;
}

} // namespace dpva
