#pragma once

#include <stdexcept>
#include <string>

namespace dpva {

struct ArityError : std::runtime_error
{
	explicit ArityError(const std::string &msg) : std::runtime_error(msg) {}
};

struct NonIntegrableExponent : std::runtime_error
{
	explicit NonIntegrableExponent(const std::string &msg)
	    : std::runtime_error(msg)
	{}
};

struct NonInvertibleSubstitution : std::runtime_error
{
	explicit NonInvertibleSubstitution(const std::string &msg)
	    : std::runtime_error(msg)
	{}
};

struct DegreeError : std::runtime_error
{
	explicit DegreeError(const std::string &msg) : std::runtime_error(msg) {}
};

struct NotSkewError : std::runtime_error
{
	explicit NotSkewError(const std::string &msg) : std::runtime_error(msg) {}
};

struct NotPointTransform : std::runtime_error
{
	explicit NotPointTransform(const std::string &msg)
	    : std::runtime_error(msg)
	{}
};

struct DependencyError : std::runtime_error
{
	explicit DependencyError(const std::string &msg) : std::runtime_error(msg)
	{}
};

struct FiltrationError : std::runtime_error
{
	explicit FiltrationError(const std::string &msg) : std::runtime_error(msg)
	{}
};

struct NotClosed : std::runtime_error
{
	explicit NotClosed(const std::string &msg) : std::runtime_error(msg) {}
};

struct NotFound : std::runtime_error
{
	explicit NotFound(const std::string &msg) : std::runtime_error(msg) {}
};

struct ParseError : std::runtime_error
{
	explicit ParseError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace dpva
