#pragma once

// The quotient by total shifts: local functionals and poly-vectors, with an
// orbit-canonical representative (every term shifted so its minimal shift
// index is 0; terms free of variables and odd generators stay verbatim).

#include "dpva/super_poly.h"
#include <optional>

namespace dpva {

class LocalPolyVector
{
	SuperPoly density_; // always canonical

	struct canonical_tag
	{};
	LocalPolyVector(SuperPoly d, canonical_tag) : density_(std::move(d)) {}

  public:
	LocalPolyVector() = default;
	explicit LocalPolyVector(const SuperPoly &w);
	explicit LocalPolyVector(const DiffPoly &f) : LocalPolyVector(SuperPoly(f)) {}

	const SuperPoly &density() const { return density_; }
	bool is_zero() const { return density_.is_zero(); }
	bool operator==(const LocalPolyVector &o) const = default;

	LocalPolyVector operator-() const;
	LocalPolyVector operator+(const LocalPolyVector &o) const;
	LocalPolyVector operator-(const LocalPolyVector &o) const;
	LocalPolyVector operator*(const Q &c) const;

	int degree() const { return density_.degree(); }
	bool homogeneous(int deg) const { return density_.homogeneous(deg); }
};

/** orbit-canonical representative of w modulo (S-1) */
LocalPolyVector canonicalize(const SuperPoly &w);

/** membership test for (S-1) (plus 0) */
bool is_zero_functional(const SuperPoly &w);

/** normalization operator: sum_a (1/p) theta_a delta B / delta theta_a */
SuperPoly normalize_N(const LocalPolyVector &B, int p);

} // namespace dpva
