#include "dpva/schouten.h"

namespace dpva {

LocalPolyVector schouten_bracket(const LocalPolyVector &A,
                                 const LocalPolyVector &B)
{
	int b = B.is_zero() ? 0 : B.degree();
	if (!A.is_zero())
		A.degree(); // homogeneity check
	std::set<int> comps;
	for (auto &[word, f] : A.density().parts())
	{
		for (auto &v : word)
			comps.insert(v.comp);
		for (auto &v : f.support())
			comps.insert(v.comp);
	}
	for (auto &[word, f] : B.density().parts())
	{
		for (auto &v : word)
			comps.insert(v.comp);
		for (auto &v : f.support())
			comps.insert(v.comp);
	}
	SuperPoly r;
	Q sign = b % 2 == 0 ? 1 : -1;
	for (int l : comps)
	{
		r += graded_mul(variational_u(l, B.density()),
		                variational_odd(l, A.density()));
		r += graded_mul(variational_odd(l, B.density()),
		                variational_u(l, A.density())) *
		     sign;
	}
	return canonicalize(-r);
}

bool is_poisson(const LocalPolyVector &P)
{
	if (!P.is_zero() && !P.homogeneous(2))
		throw DegreeError("poisson test needs a bivector");
	return schouten_bracket(P, P).is_zero();
}

bool are_compatible(const LocalPolyVector &P, const LocalPolyVector &Q)
{
	if ((!P.is_zero() && !P.homogeneous(2)) ||
	    (!Q.is_zero() && !Q.homogeneous(2)))
		throw DegreeError("compatibility test needs bivectors");
	return schouten_bracket(P, Q).is_zero();
}

LocalPolyVector one_vector(const std::vector<DiffPoly> &Q)
{
	SuperPoly x;
	for (size_t i = 0; i < Q.size(); ++i)
		x += graded_mul(SuperPoly(Q[i]), SuperPoly::odd(int(i) + 1, 0));
	return canonicalize(x);
}

std::vector<DiffPoly> characteristics(const LocalPolyVector &X, int arity)
{
	if (!X.is_zero() && !X.homogeneous(1))
		throw DegreeError("characteristics of a non-1-vector");
	std::vector<DiffPoly> q(arity);
	for (int i = 1; i <= arity; ++i)
	{
		SuperPoly d = variational_odd(i, X.density());
		for (auto &[word, f] : d.parts())
		{
			if (!word.empty())
				throw DegreeError("characteristics: unexpected odd factor");
			q[i - 1] = f;
		}
	}
	return q;
}

LocalPolyVector evol_action(const std::vector<DiffPoly> &Q,
                            const LocalPolyVector &F)
{
	DiffPoly r;
	for (size_t i = 0; i < Q.size(); ++i)
		r += Q[i] * variational_u(int(i) + 1, F.density().even_part());
	return canonicalize(SuperPoly(r));
}

std::vector<DiffPoly> evol_commutator(const std::vector<DiffPoly> &P,
                                      const std::vector<DiffPoly> &Q)
{
	if (P.size() != Q.size())
		throw ArityError("characteristics length mismatch");
	int n = int(P.size());
	std::vector<DiffPoly> r(n);
	for (int i = 0; i < n; ++i)
	{
		for (int j = 0; j < n; ++j)
		{
			std::set<int> shifts;
			for (auto &v : Q[i].support())
				if (v.comp == j + 1)
					shifts.insert(v.shift);
			for (int m : shifts)
				r[i] += shift_apply(m, P[j]) * partial_u(j + 1, m, Q[i]);
			shifts.clear();
			for (auto &v : P[i].support())
				if (v.comp == j + 1)
					shifts.insert(v.shift);
			for (int m : shifts)
				r[i] -= shift_apply(m, Q[j]) * partial_u(j + 1, m, P[i]);
		}
	}
	return r;
}

} // namespace dpva
