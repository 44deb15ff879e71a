#pragma once

// Differential of the constant Toda-type bivector int theta (zeta_1 - zeta) on
// the two-component super algebra, local homotopy operators, constructive
// reduction of closed elements, and bivector trivialization by linear ansatz.

#include "dpva/ansatz.h"

namespace dpva {

/** bijection Z -> N ordering the shifts: 0,1 for n=0,..; lex on (eps, comp) */
int epsilon_order(int n);

/** D = sum_m (zeta_{m+1}-zeta_m) d/du_m + (theta_m-theta_{m-1}) d/dv_m */
SuperPoly d_p0_apply(const SuperPoly &w);
LocalPolyVector d_p0_functional(const LocalPolyVector &q);

/** local homotopy operator h_{n,i}; requires w filtered below (eps(n),i) */
SuperPoly homotopy_apply(int n, int i, const SuperPoly &w);

struct Reduction
{
	SuperPoly preimage; // w = D(preimage) + rep
	SuperPoly rep;      // span of {1, theta, zeta, theta zeta}
};

Reduction reduce_closed(const SuperPoly &w);

/** solve T = alpha ul + [P_base, X] over the window/degree ansatz space */
std::optional<TrivSolution> trivialize_bivector(const LocalPolyVector &p_base,
                                                const LocalPolyVector &t,
                                                const LocalPolyVector &ul,
                                                int win_lo, int win_hi,
                                                int maxdeg, bool allow_ul);

} // namespace dpva
