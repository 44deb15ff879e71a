#include "dpva/cohomology.h"

namespace dpva {

int epsilon_order(int n)
{
	return n >= 0 ? 2 * n : -2 * n - 1;
}

namespace {

void require_two_components(const SuperPoly &w)
{
	for (auto &[word, f] : w.parts())
	{
		for (auto &v : word)
			if (v.comp > 2)
				throw ArityError("two-component complex only");
		for (auto &v : f.support())
			if (v.comp > 2)
				throw ArityError("two-component complex only");
	}
}

std::set<VarRef> even_support(const SuperPoly &w)
{
	std::set<VarRef> s;
	for (auto &[word, f] : w.parts())
		for (auto &v : f.support())
			s.insert(v);
	return s;
}

bool filtered_above(const VarRef &v, int n, int i)
{
	auto key = std::make_pair(epsilon_order(v.shift), v.comp);
	return key > std::make_pair(epsilon_order(n), i);
}

} // namespace

SuperPoly d_p0_apply(const SuperPoly &w)
{
	require_two_components(w);
	SuperPoly r;
	for (auto &v : even_support(w))
	{
		SuperPoly img = v.comp == 1
		    ? SuperPoly::odd(2, v.shift + 1) - SuperPoly::odd(2, v.shift)
		    : SuperPoly::odd(1, v.shift) - SuperPoly::odd(1, v.shift - 1);
		r += graded_mul(img, partial_u(v.comp, v.shift, w));
	}
	return r;
}

LocalPolyVector d_p0_functional(const LocalPolyVector &q)
{
	return -canonicalize(d_p0_apply(q.density()));
}

SuperPoly homotopy_apply(int n, int i, const SuperPoly &w)
{
	require_two_components(w);
	if (i != 1 && i != 2)
		throw ArityError("homotopy component must be 1 or 2");
	for (auto &v : even_support(w))
		if (filtered_above(v, n, i))
			throw FiltrationError("element not in the stated filtration level");
	int partner = i == 1 ? 2 : 1;
	std::set<int> shifts;
	for (auto &[word, f] : w.parts())
		for (auto &v : word)
			if (v.comp == partner)
				shifts.insert(v.shift);
	SuperPoly x;
	for (int m : shifts)
	{
		bool plus = i == 1 ? m > n : m >= n;
		x += partial_odd(partner, m, w) * Q(plus ? 1 : -1, 2);
	}
	return integrate_u(i, n, x);
}

Reduction reduce_closed(const SuperPoly &w)
{
	require_two_components(w);
	for (auto &[word, f] : w.parts())
		if (!f.is_polynomial())
			throw NonIntegrableExponent("reduction needs a polynomial density");
	if (!d_p0_apply(w).is_zero())
		throw NotClosed("element is not closed");
	Reduction out;
	SuperPoly cur = w;
	// phase 1: strip all even-variable dependence by filtration descent
	for (int guard = 0;; ++guard)
	{
		if (guard > 100000)
			throw std::logic_error("reduction failed to terminate");
		auto supp = even_support(cur);
		if (supp.empty())
			break;
		VarRef top = *supp.begin();
		for (auto &v : supp)
			if (std::make_pair(epsilon_order(v.shift), v.comp) >
			    std::make_pair(epsilon_order(top.shift), top.comp))
				top = v;
		SuperPoly h = homotopy_apply(top.shift, top.comp, cur);
		out.preimage += h;
		cur -= d_p0_apply(h);
	}
	// phase 2: pull every odd generator to shift 0
	for (bool again = true; again;)
	{
		again = false;
		SuperPoly next;
		for (auto &[word, f] : cur.parts())
		{
			size_t k = 0;
			while (k < word.size() && word[k].shift == 0)
				++k;
			if (k == word.size())
			{
				next.add_part(word, f);
				continue;
			}
			again = true;
			VarRef r = word[k];
			OddWord rest_w = word;
			rest_w.erase(rest_w.begin() + long(k));
			SuperPoly rest;
			rest.add_part(rest_w, k % 2 == 0 ? f : -f);
			int n = r.shift;
			int even = r.comp == 1 ? 2 : 1; // theta pairs with v, zeta with u
			if (n > 0)
			{
				int at = r.comp == 1 ? n : n - 1;
				out.preimage += graded_mul(SuperPoly(DiffPoly::var(even, at)),
				                           rest);
				next += graded_mul(SuperPoly::odd(r.comp, n - 1), rest);
			}
			else
			{
				int at = r.comp == 1 ? n + 1 : n;
				out.preimage -= graded_mul(SuperPoly(DiffPoly::var(even, at)),
				                           rest);
				next += graded_mul(SuperPoly::odd(r.comp, n + 1), rest);
			}
		}
		cur = next;
	}
	out.rep = cur;
	if (!(d_p0_apply(out.preimage) + out.rep == w))
		throw std::logic_error("reduction identity failed");
	return out;
}

std::optional<TrivSolution> trivialize_bivector(const LocalPolyVector &p_base,
                                                const LocalPolyVector &t,
                                                const LocalPolyVector &ul,
                                                int win_lo, int win_hi,
                                                int maxdeg, bool allow_ul)
{
	if (!t.is_zero() && !t.homogeneous(2))
		throw DegreeError("trivialization target must be a bivector");
	if (!are_compatible(p_base, t))
		throw NotClosed("target is not a cocycle of the base structure");
	int comps = 2;
	for (auto pv : {&p_base, &t})
		for (auto &[word, f] : pv->density().parts())
		{
			for (auto &v : word)
				comps = std::max(comps, v.comp);
			for (auto &v : f.support())
				comps = std::max(comps, v.comp);
		}
	AnsatzBasis basis = build_ansatz_basis(comps, win_lo, win_hi, maxdeg);
	return solve_trivialization(
	    p_base, t, allow_ul ? std::optional<LocalPolyVector>(ul) : std::nullopt,
	    basis);
}

} // namespace dpva
