#pragma once

// Multiplicative lambda-brackets: the Master Formula, skewsymmetry and the
// generator Jacobi identity, the order-(-1,1) condition fast path, the
// ultralocal test and the dependency-profile scan.

#include "dpva/mat_diff_op.h"

namespace dpva {

/** Laurent polynomial in the formal parameter with even coefficients */
class LambdaSeries
{
	std::map<int, DiffPoly> c_;

  public:
	LambdaSeries() = default;
	explicit LambdaSeries(const DiffPoly &f)
	{
		if (!f.is_zero())
			c_[0] = f;
	}

	const std::map<int, DiffPoly> &coeffs() const { return c_; }
	bool is_zero() const { return c_.empty(); }
	bool operator==(const LambdaSeries &o) const = default;

	void add(int p, const DiffPoly &f);
	LambdaSeries operator+(const LambdaSeries &o) const;
	LambdaSeries operator-(const LambdaSeries &o) const;
	LambdaSeries &operator+=(const LambdaSeries &o) { return *this = *this + o; }
	/** coefficient-wise product with an even element (no shift action) */
	LambdaSeries mul_left(const DiffPoly &f) const;
	/** apply (lambda S)^k: power bump plus coefficient shift */
	LambdaSeries lambda_shift(int k) const;
};

/** Laurent polynomial in two formal parameters; Jacobi residual carrier */
class BiSeries
{
	std::map<std::pair<int, int>, DiffPoly> c_;

  public:
	const std::map<std::pair<int, int>, DiffPoly> &coeffs() const { return c_; }
	bool is_zero() const { return c_.empty(); }

	void add(int p, int q, const DiffPoly &f);
};

/** bracket of generators: (j,i) entry with the shift replaced by lambda */
LambdaSeries bracket_generators(const MatDiffOp &K, int i, int j);

/** full Master Formula bracket of two even elements */
LambdaSeries bracket_master(const MatDiffOp &K, const DiffPoly &f,
                            const DiffPoly &g);

bool check_skewsymmetry(const MatDiffOp &K);

struct JacobiVerdict
{
	enum Kind
	{
		Pass,
		Fail,
		Residuals
	} kind = Pass;
	int i = 0, j = 0, k = 0;      // witness triple when not Pass
	BiSeries residual;            // residual of the witness triple
	std::vector<DiffPoly> residuals; // all nonzero residual coefficients
};

JacobiVerdict check_jacobi(const MatDiffOp &K);

/** residual of the generator Jacobi identity for one triple */
BiSeries jacobi_residual(const MatDiffOp &K, int i, int j, int k);

struct Order11Verdict
{
	bool pass = true;
	int cond = 0; // 1..4 when failed
	int i = 0, j = 0, k = 0;
};

/** conditions for K = A S + B - S^{-1} A^T with A = A(u,u1), B = B(u) */
Order11Verdict check_order11_conditions(
    const std::vector<std::vector<DiffPoly>> &A,
    const std::vector<std::vector<DiffPoly>> &B);

/** assemble A S + B - S^{-1} o A^T */
MatDiffOp assemble_order11(const std::vector<std::vector<DiffPoly>> &A,
                           const std::vector<std::vector<DiffPoly>> &B);

/** split an order-(-1,1) operator into its S^1 and S^0 coefficient matrices */
void split_order11(const MatDiffOp &K, std::vector<std::vector<DiffPoly>> &A,
                   std::vector<std::vector<DiffPoly>> &B);

bool check_ultralocal(const std::vector<std::vector<DiffPoly>> &B);

struct DependencyViolation
{
	int i = 0, j = 0;
	VarRef var;
};

/** scan of the S^1 coefficient (unshifted and once-shifted variables only)
    and the S^0 coefficient (unshifted only) */
std::vector<DependencyViolation> check_dependency_profile(const MatDiffOp &K);

} // namespace dpva
