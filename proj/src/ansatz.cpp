#include "dpva/ansatz.h"
#include <algorithm>

namespace dpva {

namespace {

int total_degree(const Monomial &m)
{
	int d = 0;
	for (auto &[v, e] : m.vars)
		d += std::abs(e);
	return d;
}

} // namespace

AnsatzBasis build_ansatz_basis(int components, int lo, int hi, int maxdeg,
                               bool laurent)
{
	std::vector<VarRef> vars;
	for (int i = 1; i <= components; ++i)
		for (int n = lo; n <= hi; ++n)
			vars.push_back({i, n});
	std::vector<Monomial> out;
	Monomial cur;
	// depth-first over exponent choices per variable
	auto rec = [&](auto &&self, size_t k, int left) -> void {
		if (k == vars.size())
		{
			out.push_back(cur);
			return;
		}
		self(self, k + 1, left);
		for (int e = 1; e <= left; ++e)
		{
			cur.vars[vars[k]] = e;
			self(self, k + 1, left - e);
			if (laurent)
			{
				cur.vars[vars[k]] = -e;
				self(self, k + 1, left - e);
			}
			cur.vars.erase(vars[k]);
		}
	};
	rec(rec, 0, maxdeg);
	std::sort(out.begin(), out.end(), [](const Monomial &a, const Monomial &b) {
		int da = total_degree(a), db = total_degree(b);
		if (da != db)
			return da < db;
		return a < b;
	});
	out.erase(std::unique(out.begin(), out.end()), out.end());
	return {components, out};
}

void LinearSystem::add_row(std::map<size_t, Q> row, const Q &rhs)
{
	for (auto it = row.begin(); it != row.end();)
	{
		if (it->first >= cols)
			throw ArityError("linear system column out of range");
		it = it->second == 0 ? row.erase(it) : std::next(it);
	}
	a.push_back(std::move(row));
	b.push_back(rhs);
}

std::optional<LinearSolution> solve_linear(const LinearSystem &sys)
{
	// incremental sparse echelon form: one stored pivot row per column
	std::map<size_t, std::pair<std::map<size_t, Q>, Q>> pivots;
	for (size_t i = 0; i < sys.a.size(); ++i)
	{
		auto row = sys.a[i];
		Q rhs = sys.b[i];
		bool absorbed = false;
		while (!row.empty())
		{
			size_t c = row.begin()->first;
			auto p = pivots.find(c);
			if (p == pivots.end())
			{
				Q inv = 1 / row.begin()->second;
				for (auto &[k, v] : row)
					v *= inv;
				rhs *= inv;
				pivots.emplace(c, std::make_pair(std::move(row), rhs));
				absorbed = true;
				break;
			}
			Q f = row.begin()->second;
			for (auto &[k, v] : p->second.first)
			{
				auto it = row.find(k);
				if (it == row.end())
					row.emplace(k, -f * v);
				else
				{
					it->second -= f * v;
					if (it->second == 0)
						row.erase(it);
				}
			}
			rhs -= f * p->second.second;
		}
		if (!absorbed && rhs != 0)
			return std::nullopt;
	}
	LinearSolution s;
	s.x.assign(sys.cols, 0);
	// back substitution with free variables fixed to zero
	for (auto it = pivots.rbegin(); it != pivots.rend(); ++it)
	{
		Q v = it->second.second;
		for (auto &[k, coef] : it->second.first)
			if (k != it->first)
				v -= coef * s.x[k];
		s.x[it->first] = v;
	}
	s.nullity = int(sys.cols - pivots.size());
	return s;
}

std::optional<TrivSolution>
solve_trivialization(const LocalPolyVector &p1, const LocalPolyVector &t,
                     const std::optional<LocalPolyVector> &ul,
                     const AnsatzBasis &basis)
{
	int l = basis.components;
	size_t nb = basis.monomials.size();
	std::vector<LocalPolyVector> col(l * nb + (ul ? 1 : 0));
	for (int i = 0; i < l; ++i)
		for (size_t k = 0; k < nb; ++k)
		{
			DiffPoly bk;
			bk.add_term(basis.monomials[k], 1);
			col[i * nb + k] = schouten_bracket(
			    p1, canonicalize(graded_mul(SuperPoly(bk),
			                                SuperPoly::odd(i + 1, 0))));
		}
	if (ul)
		col.back() = *ul;
	// one equation per canonical super-term appearing anywhere
	using Term = std::pair<OddWord, Monomial>;
	std::map<Term, size_t> rows;
	auto index = [&](const SuperPoly &w) {
		for (auto &[word, f] : w.parts())
			for (auto &[m, c] : f.terms())
				rows.emplace(Term{word, m}, rows.size());
	};
	for (auto &cv : col)
		index(cv.density());
	index(t.density());
	LinearSystem sys;
	sys.cols = col.size();
	std::vector<std::map<size_t, Q>> a(rows.size());
	std::vector<Q> rhs(rows.size(), 0);
	for (size_t c = 0; c < col.size(); ++c)
		for (auto &[word, f] : col[c].density().parts())
			for (auto &[m, v] : f.terms())
				a[rows.at({word, m})][c] = v;
	for (auto &[word, f] : t.density().parts())
		for (auto &[m, v] : f.terms())
			rhs[rows.at({word, m})] = v;
	for (size_t i = 0; i < a.size(); ++i)
		sys.add_row(std::move(a[i]), rhs[i]);
	auto sol = solve_linear(sys);
	if (!sol)
		return std::nullopt;
	TrivSolution out;
	out.coefficients.assign(sol->x.begin(),
	                        sol->x.begin() + long(l * nb));
	out.alpha = ul ? sol->x.back() : Q(0);
	out.nullity = sol->nullity;
	SuperPoly x;
	for (int i = 0; i < l; ++i)
		for (size_t k = 0; k < nb; ++k)
		{
			Q c = out.coefficients[i * nb + k];
			if (c == 0)
				continue;
			DiffPoly bk;
			bk.add_term(basis.monomials[k], c);
			x += graded_mul(SuperPoly(bk), SuperPoly::odd(i + 1, 0));
		}
	out.X = canonicalize(x);
	LocalPolyVector check =
	    t - schouten_bracket(p1, out.X) -
	    (ul ? *ul * out.alpha : LocalPolyVector());
	if (!check.is_zero())
		throw std::logic_error("trivialization solution failed verification");
	return out;
}

DerivedPair derive_pair(const LocalPolyVector &p0, const LocalPolyVector &x,
                        const Q &alpha, const LocalPolyVector &ul)
{
	if (!x.is_zero() && !x.homogeneous(1))
		throw DegreeError("derive_pair needs a 1-vector");
	DerivedPair out;
	out.P = ul * alpha + schouten_bracket(p0, x);
	out.poisson = is_poisson(out.P);
	if (!out.poisson)
		return out;
	LocalPolyVector w =
	    schouten_bracket(x, schouten_bracket(x, p0) - ul * (alpha * 2));
	int comps = 2, lo = 0, hi = 0, deg = 1;
	for (auto &[word, f] : w.density().parts())
	{
		for (auto &v : word)
			comps = std::max(comps, v.comp);
		for (auto &[m, c] : f.terms())
		{
			int d = 0;
			for (auto &[v, e] : m.vars)
			{
				comps = std::max(comps, v.comp);
				lo = std::min(lo, v.shift);
				hi = std::max(hi, v.shift);
				d += std::abs(e);
			}
			deg = std::max(deg, d);
		}
	}
	auto res = solve_trivialization(
	    p0, w, ul, build_ansatz_basis(comps, lo, hi, deg));
	if (res)
	{
		out.witness = true;
		out.beta = res->alpha;
		out.Y = res->X;
	}
	return out;
}

} // namespace dpva
