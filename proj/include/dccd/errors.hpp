#pragma once

#include <stdexcept>
#include <string>

namespace dccd {

/* Bad argument values (ranges, orderings, unsupported parameter sets). */
class parameter_error : public std::invalid_argument {
public:
  explicit parameter_error(const std::string& what) : std::invalid_argument(what) {}
};

/* Input object violates a structural precondition of the operation. */
class structural_error : public std::runtime_error {
public:
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

/* Search gave up because it hit its node budget, NOT because the target
   does not exist. Callers must treat this differently from "none". */
class budget_error : public std::runtime_error {
public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/* Unknown key in a registry lookup. */
class lookup_error : public std::invalid_argument {
public:
  explicit lookup_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace dccd
