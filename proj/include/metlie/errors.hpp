#pragma once

#include <stdexcept>
#include <string>

namespace metlie {

class Error : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

/// Operands disagree on generator count, matrix shape or similar.
class DimensionError : public Error
{
  public:
	using Error::Error;
};

/// Input violates a documented precondition (index range, basis constraints, ...).
class DomainError : public Error
{
  public:
	using Error::Error;
};

/// A configured resource bound (enumeration budget, ring size, Gröbner caps) was hit.
class BudgetExceeded : public Error
{
  public:
	using Error::Error;
};

class ParseError : public Error
{
  public:
	ParseError(std::string const &message, int line, int column);

	int line() const { return line_; }
	int column() const { return column_; }

  private:
	int line_;
	int column_;
};

} // namespace metlie
