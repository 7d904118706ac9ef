#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace titeica::cli {

struct Tolerances {
  double identity = 1e-12;     // identities over arbitrary jets
  double solution = 1e-10;     // residuals on closed-form solutions
  double ode = 1e-8;           // quadrature- and ODE-backed quantities
  double asymptotic = 1e-6;    // second-form diagonal on integrated surfaces
  double integration = 1e-4;   // spread of I on integrated surfaces
};

struct VerifyConfig {
  std::uint64_t seed = 1;
  int points = 100;   // random points for closed-form residual batteries
  int samples = 50;   // random points per field for symmetry batteries
  int jets = 1000;    // random jets for identity batteries
  std::vector<double> eps{0.1, 0.5, 1.0};
  Tolerances tol;
};

struct Check {
  std::string name;
  std::string ref;
  long n_samples = 0;
  double max_defect = 0.0;  // NaN when the check threw
  double tolerance = 0.0;
  bool pass = false;
  std::string error;
};

/// max |defect| accumulator; a non-finite defect poisons the result.
struct Accumulator {
  long n = 0;
  double worst = 0.0;
  void add(double d);
};

Check run_check(std::string name, std::string ref, double tol,
                const std::function<void(Accumulator&)>& body);

/// Deterministic per-check seed derived from the run seed and a label.
std::uint64_t sub_seed(std::uint64_t seed, const std::string& label);

/// liouville, titeica, symmetry, adjoint, variational, conservation,
/// integrability, surface, ode
const std::vector<std::string>& suite_names();

/// Runs one suite, or every suite for "all". InvalidArgument for an unknown
/// name.
std::vector<Check> run_suite(const std::string& suite, const VerifyConfig& cfg);

}  // namespace titeica::cli
