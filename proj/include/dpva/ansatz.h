#pragma once

// Undetermined coefficients over Q: monomial ansatz spaces, exact Gaussian
// elimination, trivialization equations [P1, X] = T - alpha ul, and derived
// bi-Hamiltonian pairs.

#include "dpva/schouten.h"
#include <optional>

namespace dpva {

struct AnsatzBasis
{
	int components = 2;
	std::vector<Monomial> monomials; // graded-lex, deduplicated
};

/** all monomials in u^i_n, n in [lo..hi], of total degree <= maxdeg;
    with laurent, nonzero exponents of either sign and absolute degree <= maxdeg */
AnsatzBasis build_ansatz_basis(int components, int lo, int hi, int maxdeg,
                               bool laurent = false);

struct LinearSystem
{
	size_t cols = 0;
	std::vector<std::map<size_t, Q>> a; // sparse rows, no zero entries
	std::vector<Q> b;

	void add_row(std::map<size_t, Q> row, const Q &rhs);
};

struct LinearSolution
{
	std::vector<Q> x; // one particular solution
	int nullity = 0;
};

std::optional<LinearSolution> solve_linear(const LinearSystem &sys);

struct TrivSolution
{
	LocalPolyVector X;
	Q alpha = 0;
	std::vector<Q> coefficients;
	int nullity = 0;
};

/** solve [P1, X] + alpha ul = T for X in the span of the basis (per
    characteristic); alpha is a free unknown only when ul is given */
std::optional<TrivSolution>
solve_trivialization(const LocalPolyVector &p1, const LocalPolyVector &t,
                     const std::optional<LocalPolyVector> &ul,
                     const AnsatzBasis &basis);

struct DerivedPair
{
	LocalPolyVector P; // alpha ul + [P0, X]
	bool poisson = false;
	bool witness = false; // (beta, Y) with [X,[X,P0]-2 alpha ul] = beta ul + [P0,Y]
	Q beta = 0;
	LocalPolyVector Y;
};

DerivedPair derive_pair(const LocalPolyVector &p0, const LocalPolyVector &x,
                        const Q &alpha, const LocalPolyVector &ul);

} // namespace dpva
