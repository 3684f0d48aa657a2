#pragma once

#include <stdexcept>
#include <string>

namespace latpoly {

// Base for everything this library throws on purpose. Batch drivers catch
// this and keep going; anything else escaping is a genuine bug.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Mismatched vector/matrix/polytope dimensions.
struct dimension_error : error {
  using error::error;
};

// Input that is syntactically fine but geometrically unusable
// (not full-dimensional, zero vector where a direction is needed, ...).
struct degenerate_input : error {
  using error::error;
};

// Operation defined only for a restricted shape class (e.g. f-vectors of
// simplicial polytopes) applied outside it.
struct unsupported_shape : error {
  using error::error;
};

// Caller violated a documented precondition.
struct precondition_error : error {
  using error::error;
};

// Argument outside the mathematical domain of the function.
struct domain_error : error {
  using error::error;
};

// Bad data in a polytope file. line is 1-based; column 0 means "whole line".
struct parse_error : error {
  int line;
  int column;
  parse_error(const std::string& what, int line_, int column_ = 0)
      : error(what), line(line_), column(column_) {}
};

// Well-formed input that violates a dataset-level rule (duplicate ids, ...).
struct validation_error : error {
  using error::error;
};

// Two computations that a theorem forces to agree disagreed. This is an
// implementation bug, never a property of the input.
struct theorem_violation : error {
  using error::error;
};

// Internal consistency check failed.
struct internal_error : error {
  using error::error;
};

}  // namespace latpoly
