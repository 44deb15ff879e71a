#pragma once

// Built-in named operators: the classical lattice structures, the parametric
// affine family, and the order-(-1,1) normal forms.

#include "dpva/parser.h"
#include "dpva/pva.h"

namespace dpva {

struct CatalogEntry
{
	std::string name;
	VarTable vt;
	MatDiffOp op;
	std::string provenance;
	bool hamiltonian = false; // asserted to pass the full Jacobi check
};

const std::vector<CatalogEntry> &catalog_entries();
const CatalogEntry &catalog_get(const std::string &name);
std::vector<std::string> catalog_names();

} // namespace dpva
