#pragma once

// Text grammar for difference (super)polynomials:
//   expr := term (('+'|'-') term)* ; term := signed factor ('*' factor)* ;
//   factor := atom ('^' int)? ;
//   atom := rational | ident ('[' int ']')? | '(' expr ')' ;
// A declared even variable `u` parses as u[0], `u[n]` as the n-shifted copy,
// `$u[n]` as its odd partner; undeclared identifiers are constant symbols.

#include "dpva/super_poly.h"
#include <string>
#include <vector>

namespace dpva {

struct VarTable
{
	std::vector<std::string> comps; // 1-based component names

	static VarTable standard(int arity = 2);

	int find(const std::string &name) const; // 0 if not a component
	const std::string &name(int comp) const;
};

SuperPoly parse_super(const std::string &text, const VarTable &vt);
DiffPoly parse_poly(const std::string &text, const VarTable &vt);

std::string to_string(const DiffPoly &f, const VarTable &vt);
std::string to_string(const SuperPoly &w, const VarTable &vt);

} // namespace dpva
