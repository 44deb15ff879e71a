#pragma once

// Schouten bracket on local poly-vectors (Gerstenhaber grading), Poisson and
// compatibility tests, and evolutionary vector-field actions.

#include "dpva/functional.h"
#include "dpva/mat_diff_op.h"

namespace dpva {

/** [A,B] = - sum_l int( dB/du^l dA/dtheta_l + (-1)^b dB/dtheta_l dA/du^l ) */
LocalPolyVector schouten_bracket(const LocalPolyVector &A,
                                 const LocalPolyVector &B);

bool is_poisson(const LocalPolyVector &P);
bool are_compatible(const LocalPolyVector &P, const LocalPolyVector &Q);

/** 1-vector with the given characteristics: int sum Q^i theta_i */
LocalPolyVector one_vector(const std::vector<DiffPoly> &Q);

/** characteristics of a canonical 1-vector */
std::vector<DiffPoly> characteristics(const LocalPolyVector &X, int arity);

/** action int Q . delta F / delta u of an evolutionary field on a functional */
LocalPolyVector evol_action(const std::vector<DiffPoly> &Q,
                            const LocalPolyVector &F);

/** commutator of characteristics */
std::vector<DiffPoly> evol_commutator(const std::vector<DiffPoly> &P,
                                      const std::vector<DiffPoly> &Q);

} // namespace dpva
