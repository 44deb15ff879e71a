#include "dpva/functional.h"

namespace dpva {

namespace {

// canonical representative of a single term modulo shifts
void canonical_term(const OddWord &word, const Monomial &m, const Q &c,
                    SuperPoly &out)
{
	bool any = false;
	int lo = 0;
	for (auto &v : word)
		if (!any || v.shift < lo)
		{
			lo = v.shift;
			any = true;
		}
	for (auto &[v, e] : m.vars)
		if (!any || v.shift < lo)
		{
			lo = v.shift;
			any = true;
		}
	SuperPoly t;
	DiffPoly f;
	f.add_term(m, c);
	t.add_part(word, f);
	out += any ? shift_apply(-lo, t) : t;
}

} // namespace

LocalPolyVector::LocalPolyVector(const SuperPoly &w)
{
	SuperPoly out;
	for (auto &[word, f] : w.parts())
		for (auto &[m, c] : f.terms())
			canonical_term(word, m, c, out);
	density_ = std::move(out);
}

LocalPolyVector LocalPolyVector::operator-() const
{
	LocalPolyVector r;
	r.density_ = -density_;
	return r;
}

LocalPolyVector LocalPolyVector::operator+(const LocalPolyVector &o) const
{
	LocalPolyVector r;
	r.density_ = density_ + o.density_;
	return r;
}

LocalPolyVector LocalPolyVector::operator-(const LocalPolyVector &o) const
{
	LocalPolyVector r;
	r.density_ = density_ - o.density_;
	return r;
}

LocalPolyVector LocalPolyVector::operator*(const Q &c) const
{
	if (c == 0)
		return {};
	LocalPolyVector r;
	r.density_ = density_ * c;
	return r;
}

LocalPolyVector canonicalize(const SuperPoly &w) { return LocalPolyVector(w); }

bool is_zero_functional(const SuperPoly &w)
{
	return canonicalize(w).is_zero();
}

SuperPoly normalize_N(const LocalPolyVector &B, int p)
{
	if (p < 1)
		throw DegreeError("normalization needs theta-degree >= 1");
	if (!B.homogeneous(p))
		throw DegreeError("normalization needs a homogeneous input");
	// the components touched by the density
	std::set<int> comps;
	for (auto &[word, f] : B.density().parts())
		for (auto &v : word)
			comps.insert(v.comp);
	SuperPoly r;
	for (int a : comps)
		r += graded_mul(SuperPoly::odd(a, 0),
		                variational_odd(a, B.density())) *
		     (Q(1) / p);
	return r;
}

} // namespace dpva
