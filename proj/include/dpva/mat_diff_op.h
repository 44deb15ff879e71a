#pragma once

// Matrix difference operators: entries are Laurent polynomials in the shift
// with even coefficients stored to the left of the shift powers, so equality
// is entry-map equality.

#include "dpva/functional.h"
#include "dpva/parser.h"
#include <optional>

namespace dpva {

class MatDiffOp
{
	int arity_ = 0;
	// entry(i,j) : shift power -> coefficient, 1-based (i,j)
	std::vector<std::vector<std::map<int, DiffPoly>>> e_;

  public:
	MatDiffOp() = default;
	explicit MatDiffOp(int arity)
	    : arity_(arity),
	      e_(arity, std::vector<std::map<int, DiffPoly>>(arity))
	{}

	static MatDiffOp identity(int arity);

	int arity() const { return arity_; }
	bool operator==(const MatDiffOp &o) const = default;

	const std::map<int, DiffPoly> &entry(int i, int j) const
	{
		return e_.at(i - 1).at(j - 1);
	}
	DiffPoly coeff(int i, int j, int l) const
	{
		auto &m = entry(i, j);
		auto it = m.find(l);
		return it == m.end() ? DiffPoly{} : it->second;
	}
	void add(int i, int j, int l, const DiffPoly &c);

	/** (min, max) shift power over all entries; (0,0) for the zero operator */
	std::pair<int, int> order() const;

	MatDiffOp operator-() const;
	MatDiffOp operator+(const MatDiffOp &o) const;
	MatDiffOp operator-(const MatDiffOp &o) const;
	MatDiffOp operator*(const Q &c) const;

	/** apply to a tuple of densities: (K Q)^i = sum_j K^{ij}(S)(Q^j) */
	std::vector<DiffPoly> apply(const std::vector<DiffPoly> &q) const;
};

MatDiffOp op_compose(const MatDiffOp &K, const MatDiffOp &L);
MatDiffOp op_adjoint(const MatDiffOp &K);

struct SkewReport
{
	bool skew = false;
	// first violated (i, j, l) when not skew
	int i = 0, j = 0, l = 0;
};
SkewReport check_skewadjoint(const MatDiffOp &K);

/** bivector (1/2) sum int theta_i K^{ij}_l theta_{j,l}; requires skewadjoint */
LocalPolyVector op_to_bivector(const MatDiffOp &K);

/** inverse of op_to_bivector via delta P / delta theta_i */
MatDiffOp bivector_to_op(const LocalPolyVector &P, int arity);

MatDiffOp frechet(const std::vector<DiffPoly> &phi, int arity);
MatDiffOp frechet_adjoint(const std::vector<DiffPoly> &phi, int arity);

/** conjugation by the Frechet derivative of a point transformation
    (each phi^i restricted to unshifted variables) */
MatDiffOp point_transform(const MatDiffOp &K, const std::vector<DiffPoly> &phi);

MatDiffOp substitute_syms(const MatDiffOp &K, const std::map<std::string, Q> &vals);

/** operator file format (JSON text): components, symbols, sparse entries */
MatDiffOp op_from_json(const std::string &text, VarTable &vt_out);
std::string op_to_json(const MatDiffOp &K, const VarTable &vt);

} // namespace dpva
