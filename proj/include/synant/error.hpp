#ifndef SYNANT_ERROR_HPP
#define SYNANT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace synant {

// Bad or missing input data (corpus lines, database files, directive files).
// The CLI maps this to exit code 1.
class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid run configuration (missing paths, bad option values).
// The CLI maps this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// Power iteration failed to reach the convergence threshold.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& msg, double residual)
      : std::runtime_error(msg), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace synant

#endif  // SYNANT_ERROR_HPP
