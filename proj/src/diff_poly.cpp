#include "dpva/diff_poly.h"

namespace dpva {

Monomial Monomial::mul(const Monomial &o) const
{
	Monomial r = *this;
	for (auto &[v, e] : o.vars)
	{
		int ne = (r.vars.count(v) ? r.vars[v] : 0) + e;
		if (ne == 0)
			r.vars.erase(v);
		else
			r.vars[v] = ne;
	}
	for (auto &[s, e] : o.syms)
	{
		int ne = (r.syms.count(s) ? r.syms[s] : 0) + e;
		if (ne == 0)
			r.syms.erase(s);
		else
			r.syms[s] = ne;
	}
	return r;
}

Monomial Monomial::shifted(int k) const
{
	Monomial r;
	for (auto &[v, e] : vars)
		r.vars[{v.comp, v.shift + k}] = e;
	r.syms = syms;
	return r;
}

void DiffPoly::add_term(const Monomial &m, const Q &c)
{
	if (c == 0)
		return;
	auto it = terms_.find(m);
	if (it == terms_.end())
		terms_.emplace(m, c);
	else
	{
		it->second += c;
		if (it->second == 0)
			terms_.erase(it);
	}
}

DiffPoly DiffPoly::operator-() const
{
	DiffPoly r;
	for (auto &[m, c] : terms_)
		r.terms_.emplace(m, -c);
	return r;
}

DiffPoly DiffPoly::operator+(const DiffPoly &o) const
{
	DiffPoly r = *this;
	for (auto &[m, c] : o.terms_)
		r.add_term(m, c);
	return r;
}

DiffPoly DiffPoly::operator-(const DiffPoly &o) const
{
	DiffPoly r = *this;
	for (auto &[m, c] : o.terms_)
		r.add_term(m, -c);
	return r;
}

DiffPoly DiffPoly::operator*(const DiffPoly &o) const
{
	DiffPoly r;
	for (auto &[m1, c1] : terms_)
		for (auto &[m2, c2] : o.terms_)
			r.add_term(m1.mul(m2), c1 * c2);
	return r;
}

DiffPoly DiffPoly::operator*(const Q &c) const
{
	DiffPoly r;
	if (c == 0)
		return r;
	for (auto &[m, c0] : terms_)
		r.terms_.emplace(m, c0 * c);
	return r;
}

std::set<VarRef> DiffPoly::support() const
{
	std::set<VarRef> s;
	for (auto &[m, c] : terms_)
		for (auto &[v, e] : m.vars)
			s.insert(v);
	return s;
}

std::set<std::string> DiffPoly::symbols() const
{
	std::set<std::string> s;
	for (auto &[m, c] : terms_)
		for (auto &[name, e] : m.syms)
			s.insert(name);
	return s;
}

bool DiffPoly::depends_on(const VarRef &v) const
{
	for (auto &[m, c] : terms_)
		if (m.vars.count(v))
			return true;
	return false;
}

bool DiffPoly::is_polynomial() const
{
	for (auto &[m, c] : terms_)
		for (auto &[v, e] : m.vars)
			if (e < 0)
				return false;
	return true;
}

DiffPoly shift_apply(int k, const DiffPoly &f)
{
	DiffPoly r;
	for (auto &[m, c] : f.terms())
		r.add_term(m.shifted(k), c);
	return r;
}

DiffPoly partial_u(int comp, int shift, const DiffPoly &f)
{
	DiffPoly r;
	VarRef v{comp, shift};
	for (auto &[m, c] : f.terms())
	{
		auto it = m.vars.find(v);
		if (it == m.vars.end())
			continue;
		int e = it->second;
		Monomial d = m;
		if (e == 1)
			d.vars.erase(v);
		else
			d.vars[v] = e - 1;
		r.add_term(d, c * e);
	}
	return r;
}

DiffPoly variational_u(int comp, const DiffPoly &f)
{
	DiffPoly r;
	std::set<int> shifts;
	for (auto &v : f.support())
		if (v.comp == comp)
			shifts.insert(v.shift);
	for (int n : shifts)
		r += shift_apply(-n, partial_u(comp, n, f));
	return r;
}

DiffPoly integrate_u(int comp, int shift, const DiffPoly &f)
{
	DiffPoly r;
	VarRef v{comp, shift};
	for (auto &[m, c] : f.terms())
	{
		auto it = m.vars.find(v);
		int e = it == m.vars.end() ? 0 : it->second;
		if (e == -1)
			throw NonIntegrableExponent("exponent -1 in antiderivative");
		Monomial g = m;
		g.vars[v] = e + 1;
		r.add_term(g, c / (e + 1));
	}
	return r;
}

DiffPoly substitute(const DiffPoly &f, const std::map<int, DiffPoly> &image)
{
	// power cache would be overkill at the sizes we handle
	auto comp_image = [&](int comp, int shift) -> DiffPoly {
		auto it = image.find(comp);
		if (it == image.end())
			return DiffPoly::var(comp, shift);
		return shift_apply(shift, it->second);
	};
	DiffPoly r;
	for (auto &[m, c] : f.terms())
	{
		DiffPoly t{c};
		Monomial symspart;
		symspart.syms = m.syms;
		t *= [&] {
			DiffPoly p;
			p.add_term(symspart, 1);
			return p;
		}();
		for (auto &[v, e] : m.vars)
		{
			DiffPoly base = comp_image(v.comp, v.shift);
			int n = e;
			if (n < 0)
			{
				if (base.terms().size() != 1)
					throw NonInvertibleSubstitution(
					    "negative exponent on a non-monomial image");
				auto &[bm, bc] = *base.terms().begin();
				Monomial inv;
				for (auto &[bv, be] : bm.vars)
					inv.vars[bv] = -be;
				for (auto &[bs, be] : bm.syms)
					inv.syms[bs] = -be;
				DiffPoly binv;
				binv.add_term(inv, Q(1) / bc);
				base = binv;
				n = -n;
			}
			for (int i = 0; i < n; ++i)
				t *= base;
		}
		r += t;
	}
	return r;
}

DiffPoly substitute_syms(const DiffPoly &f, const std::map<std::string, Q> &vals)
{
	DiffPoly r;
	for (auto &[m, c] : f.terms())
	{
		Q coeff = c;
		Monomial g;
		g.vars = m.vars;
		bool dead = false;
		for (auto &[s, e] : m.syms)
		{
			auto it = vals.find(s);
			if (it == vals.end())
			{
				g.syms[s] = e;
				continue;
			}
			if (it->second == 0)
			{
				if (e > 0)
				{
					dead = true;
					break;
				}
				throw NonInvertibleSubstitution(
				    "negative symbol power at value 0");
			}
			Q v = 1;
			for (int i = 0; i < (e > 0 ? e : -e); ++i)
				v *= it->second;
			coeff *= e > 0 ? v : Q(1) / v;
		}
		if (!dead)
			r.add_term(g, coeff);
	}
	return r;
}

std::string to_string(const Q &c) { return c.get_str(); }

} // namespace dpva
