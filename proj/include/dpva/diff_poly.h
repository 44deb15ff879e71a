#pragma once

// Exact sparse Laurent difference-polynomial algebra: finitely many shifted
// copies u^i_n of the field variables, rational coefficients, plus named
// constant symbols (shift-fixed parameters).

#include "dpva/errors.h"
#include <compare>
#include <gmpxx.h>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace dpva {

using Q = mpq_class;

/** shifted variable u^i_n; components are 1-based */
struct VarRef
{
	int comp = 1;
	int shift = 0;
	auto operator<=>(const VarRef &) const = default;
};

/** Laurent monomial: variable part and constant-symbol part, no zero exponents */
struct Monomial
{
	std::map<VarRef, int> vars;
	std::map<std::string, int> syms;

	bool operator==(const Monomial &o) const = default;
	bool operator<(const Monomial &o) const
	{
		if (vars != o.vars)
			return vars < o.vars;
		return syms < o.syms;
	}

	Monomial mul(const Monomial &o) const;
	Monomial shifted(int k) const;
	bool is_one() const { return vars.empty() && syms.empty(); }
};

class DiffPoly
{
	std::map<Monomial, Q> terms_; // no zero coefficients stored

  public:
	DiffPoly() = default;
	explicit DiffPoly(const Q &c)
	{
		if (c != 0)
			terms_[Monomial{}] = c;
	}
	explicit DiffPoly(long c) : DiffPoly(Q(c)) {}

	static DiffPoly var(int comp, int shift = 0, int exp = 1)
	{
		DiffPoly p;
		Monomial m;
		if (exp != 0)
			m.vars[{comp, shift}] = exp;
		p.terms_[m] = 1;
		return p;
	}
	static DiffPoly sym(const std::string &name, int exp = 1)
	{
		DiffPoly p;
		Monomial m;
		if (exp != 0)
			m.syms[name] = exp;
		p.terms_[m] = 1;
		return p;
	}

	const std::map<Monomial, Q> &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool operator==(const DiffPoly &o) const = default;

	void add_term(const Monomial &m, const Q &c);

	DiffPoly operator-() const;
	DiffPoly operator+(const DiffPoly &o) const;
	DiffPoly operator-(const DiffPoly &o) const;
	DiffPoly operator*(const DiffPoly &o) const;
	DiffPoly operator*(const Q &c) const;
	DiffPoly &operator+=(const DiffPoly &o) { return *this = *this + o; }
	DiffPoly &operator-=(const DiffPoly &o) { return *this = *this - o; }
	DiffPoly &operator*=(const DiffPoly &o) { return *this = *this * o; }

	/** set of (comp, shift) actually occurring */
	std::set<VarRef> support() const;
	std::set<std::string> symbols() const;
	bool depends_on(const VarRef &v) const;

	/** true if every variable exponent is >= 0 */
	bool is_polynomial() const;
};

/** shift automorphism S^k */
DiffPoly shift_apply(int k, const DiffPoly &f);

/** partial derivative w.r.t. u^i_n (Laurent rule) */
DiffPoly partial_u(int comp, int shift, const DiffPoly &f);

/** variational derivative sum_n S^{-n} d/du^i_n */
DiffPoly variational_u(int comp, const DiffPoly &f);

/** antiderivative w.r.t. u^i_n with integration constant 0;
    throws NonIntegrableExponent on exponent -1 */
DiffPoly integrate_u(int comp, int shift, const DiffPoly &f);

/** algebra homomorphism u^i_n -> S^n(image[i]); components absent from the
    map are kept; negative exponents need a single-term invertible image */
DiffPoly substitute(const DiffPoly &f, const std::map<int, DiffPoly> &image);

/** replace constant symbols by rational values (missing names are kept) */
DiffPoly substitute_syms(const DiffPoly &f, const std::map<std::string, Q> &vals);

std::string to_string(const Q &c);

} // namespace dpva
