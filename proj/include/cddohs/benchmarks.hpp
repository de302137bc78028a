#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>

#include "cddohs/problem.hpp"

namespace cddohs {

enum class Family { unimodal, multimodal, fixed_dimension };

std::string_view to_string(Family family);

/// The classical test-function suite, F1 through F19.
enum class FunctionId {
  F1 = 1, F2, F3, F4, F5, F6, F7, F8, F9, F10,
  F11, F12, F13, F14, F15, F16, F17, F18, F19
};

inline constexpr std::size_t kFunctionCount = 19;

struct BenchmarkSpec {
  FunctionId id;
  std::string_view name;
  Family family;
  std::size_t dim;
  double lower;
  double upper;
  /// f_min as tabulated (2-3 significant digits for the fixed-dimension rows).
  double f_min;
  bool stochastic;
};

const std::array<BenchmarkSpec, kFunctionCount>& benchmark_specs();
const BenchmarkSpec& spec_of(FunctionId id);

std::string to_string(FunctionId id);
/// Parses "F1".."F19" (case-insensitive 'f'). Throws std::invalid_argument.
FunctionId parse_function_id(std::string_view text);

/// Builds the Problem for one benchmark row.
Problem make_function(FunctionId id);
Problem make_function(std::string_view id);

/// Formula value at x without a length check. Dimension-generic formulas
/// accept any length; fixed-dimension ones read only the leading
/// coordinates they need. rng is required for F7 only.
double evaluate_formula(FunctionId id, std::span<const double> x, Rng* rng = nullptr);

/// Formula value at x; throws std::invalid_argument when x.size() differs
/// from the tabulated dimension, or when F7 is evaluated without an rng.
double evaluate_at(FunctionId id, std::span<const double> x, Rng* rng = nullptr);

namespace functions {

double sphere(std::span<const double> x);
double schwefel_2_22(std::span<const double> x);
double schwefel_1_2(std::span<const double> x);
double schwefel_2_21(std::span<const double> x);
double rosenbrock(std::span<const double> x);
double step(std::span<const double> x);
/// Deterministic part of the quartic-with-noise function.
double quartic(std::span<const double> x);
double schwefel_2_26(std::span<const double> x);
double rastrigin(std::span<const double> x);
double ackley(std::span<const double> x);
double griewank(std::span<const double> x);
double penalized_1(std::span<const double> x);
double penalized_2(std::span<const double> x);
double shekel_foxholes(std::span<const double> x);
double kowalik(std::span<const double> x);
double six_hump_camel(std::span<const double> x);
double branin(std::span<const double> x);
double goldstein_price(std::span<const double> x);
double hartmann_3(std::span<const double> x);

/// Boundary penalty u(x, a, k, m) used by the penalized functions.
double penalty(double x, double a, double k, double m);

}  // namespace functions

}  // namespace cddohs
