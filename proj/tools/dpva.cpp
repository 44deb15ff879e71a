// Command-line surface: catalog access, operator checks, brackets,
// cohomology reduction and trivialization solvers.

#include "dpva/acceptance.h"
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace dpva;

namespace {

std::string slurp(const std::string &path)
{
	std::ifstream in(path);
	if (!in)
		throw std::runtime_error("cannot open " + path);
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

/** an operator argument: a catalog name, or a JSON file path */
MatDiffOp load_op(const std::string &arg, VarTable &vt)
{
	for (auto &n : catalog_names())
		if (n == arg)
		{
			const CatalogEntry &e = catalog_get(arg);
			vt = e.vt;
			return e.op;
		}
	return op_from_json(slurp(arg), vt);
}

/** a poly-vector argument: a file holding an expression, or the expression */
LocalPolyVector load_pv(const std::string &arg, const VarTable &vt)
{
	std::string text = arg;
	if (std::ifstream probe(arg); probe)
		text = slurp(arg);
	return canonicalize(parse_super(text, vt));
}

VarTable table_for(const SuperPoly &w)
{
	int arity = 2;
	for (auto &[word, f] : w.parts())
	{
		for (auto &v : word)
			arity = std::max(arity, v.comp);
		for (auto &v : f.support())
			arity = std::max(arity, v.comp);
	}
	return VarTable::standard(arity);
}

void parse_window(const std::string &s, int &lo, int &hi)
{
	auto dots = s.find("..");
	if (dots == std::string::npos)
		throw std::runtime_error("window must be a..b");
	lo = std::stoi(s.substr(0, dots));
	hi = std::stoi(s.substr(dots + 2));
	if (lo > hi)
		throw std::runtime_error("window must have a <= b");
}

void print_lambda(const LambdaSeries &s, const VarTable &vt)
{
	if (s.is_zero())
	{
		std::cout << "0\n";
		return;
	}
	for (auto &[k, c] : s.coeffs())
		std::cout << to_string(c, vt) << " @ l^" << k << "\n";
}

int cmd_check_skew(const std::string &oparg)
{
	VarTable vt;
	MatDiffOp k = load_op(oparg, vt);
	SkewReport r = check_skewadjoint(k);
	if (r.skew)
		std::cout << "skewadjoint\n";
	else
		std::cout << "not skewadjoint: entry (" << r.i << "," << r.j
		          << ") at shift " << r.l << "\n";
	return r.skew ? 0 : 1;
}

int cmd_check_ham(const std::string &oparg, bool fast11)
{
	VarTable vt;
	MatDiffOp k = load_op(oparg, vt);
	if (!check_skewadjoint(k).skew)
	{
		std::cout << "not skewadjoint\n";
		return 1;
	}
	if (fast11)
	{
		std::vector<std::vector<DiffPoly>> a, b;
		split_order11(k, a, b);
		Order11Verdict v = check_order11_conditions(a, b);
		if (v.pass)
			std::cout << "hamiltonian (order (-1,1) conditions)\n";
		else
			std::cout << "not hamiltonian: condition " << v.cond
			          << " fails at (" << v.i << "," << v.j << "," << v.k
			          << ")\n";
		return v.pass ? 0 : 1;
	}
	JacobiVerdict v = check_jacobi(k);
	switch (v.kind)
	{
	case JacobiVerdict::Pass:
		std::cout << "hamiltonian\n";
		return 0;
	case JacobiVerdict::Fail:
		std::cout << "not hamiltonian: jacobi fails at (" << v.i << "," << v.j
		          << "," << v.k << ")\n";
		return 1;
	default:
		std::cout << "parametric: " << v.residuals.size()
		          << " residual coefficients; witness (" << v.i << "," << v.j
		          << "," << v.k << ")\n";
		for (auto &r : v.residuals)
			std::cout << "  " << to_string(r, vt) << "\n";
		return 1;
	}
}

int cmd_bracket(const std::string &oparg, const std::string &fs,
                const std::string &gs)
{
	VarTable vt;
	MatDiffOp k = load_op(oparg, vt);
	print_lambda(bracket_master(k, parse_poly(fs, vt), parse_poly(gs, vt)), vt);
	return 0;
}

int cmd_schouten(const std::string &aarg, const std::string &barg)
{
	VarTable vt = VarTable::standard(2);
	LocalPolyVector a = load_pv(aarg, vt);
	LocalPolyVector b = load_pv(barg, vt);
	LocalPolyVector r = schouten_bracket(a, b);
	std::cout << to_string(r.density(), table_for(r.density())) << "\n";
	return 0;
}

int cmd_compat(const std::string &arg1, const std::string &arg2)
{
	VarTable vt1, vt2;
	LocalPolyVector p = op_to_bivector(load_op(arg1, vt1));
	LocalPolyVector q = op_to_bivector(load_op(arg2, vt2));
	bool ok = are_compatible(p, q);
	std::cout << (ok ? "compatible\n" : "not compatible\n");
	return ok ? 0 : 1;
}

int cmd_poisson(const std::string &oparg)
{
	VarTable vt;
	bool ok = is_poisson(op_to_bivector(load_op(oparg, vt)));
	std::cout << (ok ? "poisson\n" : "not poisson\n");
	return ok ? 0 : 1;
}

int cmd_reduce(const std::string &expr)
{
	VarTable vt = VarTable::standard(2);
	SuperPoly w = parse_super(expr, vt);
	Reduction r = reduce_closed(w);
	std::cout << "preimage: " << to_string(r.preimage, vt) << "\n";
	std::cout << "rep: " << to_string(r.rep, vt) << "\n";
	return 0;
}

int cmd_trivialize(const std::string &base, const std::string &target,
                   const std::string &ularg, const std::string &window,
                   int maxdeg, bool no_ul)
{
	VarTable vt1, vt2;
	LocalPolyVector p1 = op_to_bivector(load_op(base, vt1));
	LocalPolyVector t = op_to_bivector(load_op(target, vt2));
	LocalPolyVector ul =
	    ularg.empty()
	        ? canonicalize(graded_mul(SuperPoly::odd(1, 0), SuperPoly::odd(2, 0)))
	        : load_pv(ularg, vt1);
	int lo, hi;
	parse_window(window, lo, hi);
	auto sol = trivialize_bivector(p1, t, ul, lo, hi, maxdeg, !no_ul);
	if (!sol)
	{
		std::cout << "no solution\n";
		return 1;
	}
	std::cout << "alpha: " << sol->alpha << "\n";
	std::cout << "X: " << to_string(sol->X.density(), vt1) << "\n";
	std::cout << "nullity: " << sol->nullity << "\n";
	return 0;
}

int cmd_solve(const std::string &base, const std::string &target,
              const std::string &ularg, const std::string &window, int maxdeg,
              bool laurent)
{
	VarTable vt1, vt2;
	MatDiffOp kb = load_op(base, vt1);
	LocalPolyVector p1 = op_to_bivector(kb);
	LocalPolyVector t = op_to_bivector(load_op(target, vt2));
	std::optional<LocalPolyVector> ul;
	if (!ularg.empty())
		ul = load_pv(ularg, vt1);
	int lo, hi;
	parse_window(window, lo, hi);
	AnsatzBasis basis = build_ansatz_basis(kb.arity(), lo, hi, maxdeg, laurent);
	auto sol = solve_trivialization(p1, t, ul, basis);
	if (!sol)
	{
		std::cout << "no solution\n";
		return 1;
	}
	std::cout << "alpha: " << sol->alpha << "\n";
	std::vector<DiffPoly> q = characteristics(sol->X, kb.arity());
	for (int i = 0; i < kb.arity(); ++i)
		std::cout << "X^" << i + 1 << ": " << to_string(q[i], vt1) << "\n";
	std::cout << "nullity: " << sol->nullity << "\n";
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact computer algebra for multi-component difference "
	             "Hamiltonian operators"};
	app.require_subcommand(1);

	auto *cat = app.add_subcommand("catalog", "built-in operators");
	cat->require_subcommand(1);
	auto *cat_list = cat->add_subcommand("list", "list entry names");
	std::string cat_name;
	auto *cat_show = cat->add_subcommand("show", "print one entry as JSON");
	cat_show->add_option("name", cat_name)->required();

	auto *chk = app.add_subcommand("check", "operator checks");
	chk->require_subcommand(1);
	std::string chk_op;
	auto *chk_skew = chk->add_subcommand("skew", "skewadjointness");
	chk_skew->add_option("op", chk_op)->required();
	std::string ham_op;
	bool fast11 = false;
	auto *chk_ham = chk->add_subcommand("ham", "full Jacobi check");
	chk_ham->add_option("op", ham_op)->required();
	chk_ham->add_flag("--fast11", fast11, "order-(-1,1) condition fast path");

	std::string br_op, br_f, br_g;
	auto *br = app.add_subcommand("bracket", "lambda-bracket of two elements");
	br->add_option("op", br_op)->required();
	br->add_option("f", br_f)->required();
	br->add_option("g", br_g)->required();

	std::string sc_a, sc_b;
	auto *sc = app.add_subcommand("schouten", "bracket of two poly-vectors");
	sc->add_option("a", sc_a)->required();
	sc->add_option("b", sc_b)->required();

	std::string co_a, co_b;
	auto *co = app.add_subcommand("compat", "compatibility of two operators");
	co->add_option("op1", co_a)->required();
	co->add_option("op2", co_b)->required();

	std::string po_op;
	auto *po = app.add_subcommand("poisson", "Poisson test of one operator");
	po->add_option("op", po_op)->required();

	std::string re_expr;
	auto *re = app.add_subcommand("reduce", "reduce a closed element");
	re->add_option("expr", re_expr)->required();

	std::string tr_base, tr_target, tr_ul, tr_window;
	int tr_maxdeg = 2;
	bool tr_noul = false;
	auto *tr = app.add_subcommand("trivialize", "solve T = alpha ul + [P,X]");
	tr->add_option("--base", tr_base)->required();
	tr->add_option("--target", tr_target)->required();
	tr->add_option("--ul", tr_ul);
	tr->add_option("--window", tr_window)->required();
	tr->add_option("--maxdeg", tr_maxdeg)->required();
	tr->add_flag("--no-ul", tr_noul, "omit the ultralocal column");

	std::string so_base, so_target, so_ul, so_window;
	int so_maxdeg = 2;
	bool so_laurent = false;
	auto *so = app.add_subcommand("solve", "ansatz trivialization solver");
	so->add_option("--base", so_base)->required();
	so->add_option("--target", so_target)->required();
	so->add_option("--ul", so_ul);
	so->add_option("--window", so_window)->required();
	so->add_option("--maxdeg", so_maxdeg)->required();
	so->add_flag("--laurent", so_laurent, "allow negative exponents");

	std::string ac_filter;
	auto *ac = app.add_subcommand("accept", "run the acceptance suite");
	ac->add_option("--filter", ac_filter, "run only criteria with this tag");

	CLI11_PARSE(app, argc, argv);

	try
	{
		if (*cat_list)
		{
			for (auto &n : catalog_names())
				std::cout << n << "\n";
			return 0;
		}
		if (*cat_show)
		{
			const CatalogEntry &e = catalog_get(cat_name);
			std::cout << op_to_json(e.op, e.vt) << "\n";
			return 0;
		}
		if (*chk_skew)
			return cmd_check_skew(chk_op);
		if (*chk_ham)
			return cmd_check_ham(ham_op, fast11);
		if (*br)
			return cmd_bracket(br_op, br_f, br_g);
		if (*sc)
			return cmd_schouten(sc_a, sc_b);
		if (*co)
			return cmd_compat(co_a, co_b);
		if (*po)
			return cmd_poisson(po_op);
		if (*re)
			return cmd_reduce(re_expr);
		if (*tr)
			return cmd_trivialize(tr_base, tr_target, tr_ul, tr_window,
			                      tr_maxdeg, tr_noul);
		if (*so)
			return cmd_solve(so_base, so_target, so_ul, so_window, so_maxdeg,
			                 so_laurent);
		if (*ac)
			return run_acceptance_cli(ac_filter);
	}
	catch (const std::exception &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return 0;
}
