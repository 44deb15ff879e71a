#pragma once

// Grassmann extension of the difference-polynomial algebra: odd generators
// theta_{i,n}, one per shifted variable, with graded-commutative product.
// A SuperPoly is stored as a map from sorted odd words to even coefficients;
// signs are normalized at construction time, so equality is map equality.

#include "dpva/diff_poly.h"

namespace dpva {

/** strictly increasing sequence of odd refs (comp, shift) */
using OddWord = std::vector<VarRef>;

class SuperPoly
{
	std::map<OddWord, DiffPoly> parts_; // no zero coefficients stored

  public:
	SuperPoly() = default;
	explicit SuperPoly(const DiffPoly &f)
	{
		if (!f.is_zero())
			parts_[{}] = f;
	}
	explicit SuperPoly(const Q &c) : SuperPoly(DiffPoly(c)) {}

	static SuperPoly odd(int comp, int shift = 0)
	{
		SuperPoly p;
		p.parts_[{VarRef{comp, shift}}] = DiffPoly(1);
		return p;
	}

	const std::map<OddWord, DiffPoly> &parts() const { return parts_; }
	bool is_zero() const { return parts_.empty(); }
	bool operator==(const SuperPoly &o) const = default;

	void add_part(const OddWord &w, const DiffPoly &f);

	SuperPoly operator-() const;
	SuperPoly operator+(const SuperPoly &o) const;
	SuperPoly operator-(const SuperPoly &o) const;
	SuperPoly operator*(const Q &c) const;
	SuperPoly &operator+=(const SuperPoly &o) { return *this = *this + o; }
	SuperPoly &operator-=(const SuperPoly &o) { return *this = *this - o; }

	/** true iff every part has the given theta-degree */
	bool homogeneous(int deg) const;
	/** theta-degree if homogeneous, -1 for 0, throws DegreeError otherwise */
	int degree() const;

	/** even part (degree-0 component) */
	DiffPoly even_part() const;
};

SuperPoly graded_mul(const SuperPoly &a, const SuperPoly &b);

SuperPoly shift_apply(int k, const SuperPoly &w);
SuperPoly partial_u(int comp, int shift, const SuperPoly &w);
SuperPoly variational_u(int comp, const SuperPoly &w);

/** left odd derivative d/dtheta_{comp,shift} */
SuperPoly partial_odd(int comp, int shift, const SuperPoly &w);
SuperPoly variational_odd(int comp, const SuperPoly &w);

/** antiderivative in u^i_n, acting trivially on odd generators */
SuperPoly integrate_u(int comp, int shift, const SuperPoly &w);

SuperPoly substitute_syms(const SuperPoly &w, const std::map<std::string, Q> &vals);

} // namespace dpva
