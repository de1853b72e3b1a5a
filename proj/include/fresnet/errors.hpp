#pragma once

#include <stdexcept>
#include <string>

namespace fresnet {

/// Argument outside the domain of an operation (negative p, x outside [-1, 1], ...).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Requested derivative order exceeds what a jet or target supports.
struct UnsupportedOrderError : std::invalid_argument {
  UnsupportedOrderError(const std::string& what, int max_order)
      : std::invalid_argument(what), max_order(max_order) {}
  int max_order;
};

struct LookupError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IndexError : std::out_of_range {
  using std::out_of_range::out_of_range;
};

/// Malformed network document. `line` and `column` are 1-based; 0 when unknown.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what), line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

/// Well-formed document whose contents violate a network invariant.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SolverError : std::runtime_error {
  SolverError(const std::string& what, double condition)
      : std::runtime_error(what), condition(condition) {}
  double condition;
};

}  // namespace fresnet
