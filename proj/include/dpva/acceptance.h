#pragma once

// The acceptance suite: one verdict per criterion, filterable by tag.

#include "dpva/catalog.h"
#include "dpva/cohomology.h"

namespace dpva {

struct CriterionResult
{
	int number = 0;
	std::string name;
	std::vector<std::string> tags;
	bool pass = false;
	std::string detail; // first failure, or empty
};

std::vector<CriterionResult> run_acceptance(const std::string &filter = "");

/** prints one line per criterion; returns 0 iff everything passed */
int run_acceptance_cli(const std::string &filter = "");

} // namespace dpva
