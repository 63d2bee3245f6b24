#pragma once

#include <stdexcept>
#include <string>

namespace eulersum {

// Base class for every error this library throws on purpose.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of the requested quantity.
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(what) {}
};

// The requested tolerance cannot be met within the configured term budget.
class tolerance_error : public error {
 public:
  explicit tolerance_error(const std::string& what) : error(what) {}
};

// A series that provably diverges for the given arguments.
class divergent_series_error : public error {
 public:
  explicit divergent_series_error(const std::string& what) : error(what) {}
};

// Adaptive quadrature exhausted its subdivision budget before converging.
class convergence_error : public error {
 public:
  explicit convergence_error(const std::string& what) : error(what) {}
};

// Parameter combination collapses an integral family to a degenerate case.
class degenerate_error : public error {
 public:
  explicit degenerate_error(const std::string& what) : error(what) {}
};

}  // namespace eulersum
