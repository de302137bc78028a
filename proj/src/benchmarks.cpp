#include "cddohs/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cddohs {

namespace {

constexpr double kPi = std::numbers::pi;

// F8 is run at dim 30 in its standard form; the minimum is
// -418.9828872724339 per coordinate.
constexpr double kSchwefelMinPerDim = -418.9828872724339;

constexpr std::array<BenchmarkSpec, kFunctionCount> kSpecs{{
    {FunctionId::F1, "sphere", Family::unimodal, 10, -100.0, 100.0, 0.0, false},
    {FunctionId::F2, "schwefel_2_22", Family::unimodal, 10, -10.0, 10.0, 0.0, false},
    {FunctionId::F3, "schwefel_1_2", Family::unimodal, 10, -30.0, 30.0, 0.0, false},
    {FunctionId::F4, "schwefel_2_21", Family::unimodal, 10, -100.0, 100.0, 0.0, false},
    {FunctionId::F5, "rosenbrock", Family::unimodal, 10, -30.0, 30.0, 0.0, false},
    {FunctionId::F6, "step", Family::unimodal, 10, -100.0, 100.0, 0.0, false},
    {FunctionId::F7, "quartic_noise", Family::unimodal, 10, -1.28, 1.28, 0.0, true},
    {FunctionId::F8, "schwefel_2_26", Family::multimodal, 30, -500.0, 500.0,
     30 * kSchwefelMinPerDim, false},
    {FunctionId::F9, "rastrigin", Family::multimodal, 10, -10.0, 10.0, 0.0, false},
    {FunctionId::F10, "ackley", Family::multimodal, 10, -32.0, 32.0, 0.0, false},
    {FunctionId::F11, "griewank", Family::multimodal, 10, -600.0, 600.0, 0.0, false},
    {FunctionId::F12, "penalized_1", Family::multimodal, 10, -50.0, 50.0, 0.0, false},
    {FunctionId::F13, "penalized_2", Family::multimodal, 30, -50.0, 50.0, 0.0, false},
    {FunctionId::F14, "shekel_foxholes", Family::fixed_dimension, 2, -65.0, 65.0, 1.0, false},
    {FunctionId::F15, "kowalik", Family::fixed_dimension, 4, -5.0, 5.0, 0.0003, false},
    {FunctionId::F16, "six_hump_camel", Family::fixed_dimension, 2, -5.0, 5.0, -1.0316, false},
    {FunctionId::F17, "branin", Family::fixed_dimension, 2, -5.0, 5.0, 0.398, false},
    {FunctionId::F18, "goldstein_price", Family::fixed_dimension, 2, -2.0, 2.0, 3.0, false},
    {FunctionId::F19, "hartmann_3", Family::fixed_dimension, 3, 0.0, 1.0, -3.86, false},
}};

constexpr std::array<std::array<double, 25>, 2> kFoxholes = [] {
  std::array<std::array<double, 25>, 2> a{};
  constexpr double grid[5] = {-32.0, -16.0, 0.0, 16.0, 32.0};
  for (int j = 0; j < 25; ++j) {
    a[0][j] = grid[j % 5];
    a[1][j] = grid[j / 5];
  }
  return a;
}();

constexpr double kKowalikA[11] = {0.1957, 0.1947, 0.1735, 0.1600, 0.0844, 0.0627,
                                  0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
constexpr double kKowalikB[11] = {4.0,       2.0,       1.0,        0.5,        0.25,      1.0 / 6.0,
                                  1.0 / 8.0, 1.0 / 10., 1.0 / 12.0, 1.0 / 14.0, 1.0 / 16.0};

constexpr double kHartmannA[4][3] = {{3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}, {3.0, 10.0, 30.0}, {0.1, 10.0, 35.0}};
constexpr double kHartmannC[4] = {1.0, 1.2, 3.0, 3.2};
constexpr double kHartmannP[4][3] = {{0.3689, 0.1170, 0.2673},
                                     {0.4699, 0.4387, 0.7470},
                                     {0.1091, 0.8732, 0.5547},
                                     {0.03815, 0.5743, 0.8828}};

void require_size(std::span<const double> x, std::size_t n, const char* name) {
  if (x.size() < n) {
    throw std::invalid_argument(std::string(name) + " needs at least " + std::to_string(n) +
                                " coordinates, got " + std::to_string(x.size()));
  }
}

}  // namespace

namespace functions {

double sphere(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

double schwefel_2_22(std::span<const double> x) {
  double sum = 0.0;
  double prod = 1.0;
  for (double v : x) {
    sum += std::abs(v);
    prod *= std::abs(v);
  }
  return sum + prod;
}

double schwefel_1_2(std::span<const double> x) {
  double s = 0.0;
  double prefix = 0.0;
  for (double v : x) {
    prefix += v;
    s += prefix * prefix;
  }
  return s;
}

double schwefel_2_21(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double rosenbrock(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i) {
    const double a = x[i + 1] - x[i] * x[i];
    const double b = x[i] - 1.0;
    s += 100.0 * a * a + b * b;
  }
  return s;
}

double step(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) {
    const double r = std::floor(v + 0.5);
    s += r * r;
  }
  return s;
}

double quartic(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double sq = x[i] * x[i];
    s += static_cast<double>(i + 1) * sq * sq;
  }
  return s;
}

double schwefel_2_26(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s -= v * std::sin(std::sqrt(std::abs(v)));
  return s;
}

double rastrigin(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v - 10.0 * std::cos(2.0 * kPi * v) + 10.0;
  return s;
}

double ackley(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : x) {
    sq += v * v;
    cs += std::cos(2.0 * kPi * v);
  }
  return -20.0 * std::exp(-0.2 * std::sqrt(sq / n)) - std::exp(cs / n) + 20.0 + std::numbers::e;
}

double griewank(std::span<const double> x) {
  double sq = 0.0;
  double prod = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sq += x[i] * x[i];
    prod *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
  }
  return sq / 4000.0 - prod + 1.0;
}

double penalty(double x, double a, double k, double m) {
  if (x > a) return k * std::pow(x - a, m);
  if (x < -a) return k * std::pow(-x - a, m);
  return 0.0;
}

double penalized_1(std::span<const double> x) {
  const std::size_t n = x.size();
  auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
  const double s1 = std::sin(kPi * y(0));
  double body = 10.0 * s1 * s1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = y(i) - 1.0;
    const double s = std::sin(kPi * y(i + 1));
    body += d * d * (1.0 + 10.0 * s * s);
  }
  const double dn = y(n - 1) - 1.0;
  body += dn * dn;
  double pen = 0.0;
  for (double v : x) pen += penalty(v, 10.0, 100.0, 4.0);
  return kPi / static_cast<double>(n) * body + pen;
}

double penalized_2(std::span<const double> x) {
  const std::size_t n = x.size();
  const double s1 = std::sin(3.0 * kPi * x[0]);
  double body = s1 * s1;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double d = x[i] - 1.0;
    const double s = std::sin(3.0 * kPi * x[i + 1]);
    body += d * d * (1.0 + s * s);
  }
  const double dn = x[n - 1] - 1.0;
  const double sn = std::sin(2.0 * kPi * x[n - 1]);
  body += dn * dn * (1.0 + sn * sn);
  double pen = 0.0;
  for (double v : x) pen += penalty(v, 5.0, 100.0, 4.0);
  return 0.1 * body + pen;
}

double shekel_foxholes(std::span<const double> x) {
  require_size(x, 2, "F14");
  double s = 1.0 / 500.0;
  for (int j = 0; j < 25; ++j) {
    double inner = static_cast<double>(j + 1);
    for (int i = 0; i < 2; ++i) inner += std::pow(x[i] - kFoxholes[i][j], 6);
    s += 1.0 / inner;
  }
  return 1.0 / s;
}

double kowalik(std::span<const double> x) {
  require_size(x, 4, "F15");
  double s = 0.0;
  for (int i = 0; i < 11; ++i) {
    const double b = kKowalikB[i];
    const double r = kKowalikA[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
    s += r * r;
  }
  return s;
}

double six_hump_camel(std::span<const double> x) {
  require_size(x, 2, "F16");
  const double a = x[0];
  const double b = x[1];
  const double a2 = a * a;
  const double b2 = b * b;
  return 4.0 * a2 - 2.1 * a2 * a2 + a2 * a2 * a2 / 3.0 + a * b - 4.0 * b2 + 4.0 * b2 * b2;
}

double branin(std::span<const double> x) {
  require_size(x, 2, "F17");
  const double b = 5.1 / (4.0 * kPi * kPi);
  const double c = 5.0 / kPi;
  const double t = 1.0 / (8.0 * kPi);
  const double q = x[1] - b * x[0] * x[0] + c * x[0] - 6.0;
  return q * q + 10.0 * (1.0 - t) * std::cos(x[0]) + 10.0;
}

double goldstein_price(std::span<const double> x) {
  require_size(x, 2, "F18");
  const double a = x[0];
  const double b = x[1];
  const double p = a + b + 1.0;
  const double q = 2.0 * a - 3.0 * b;
  const double left = 1.0 + p * p * (19.0 - 14.0 * a + 3.0 * a * a - 14.0 * b + 6.0 * a * b + 3.0 * b * b);
  const double right =
      30.0 + q * q * (18.0 - 32.0 * a + 12.0 * a * a + 48.0 * b - 36.0 * a * b + 27.0 * b * b);
  return left * right;
}

double hartmann_3(std::span<const double> x) {
  require_size(x, 3, "F19");
  double s = 0.0;
  for (int i = 0; i < 4; ++i) {
    double inner = 0.0;
    for (int j = 0; j < 3; ++j) {
      const double d = x[j] - kHartmannP[i][j];
      inner += kHartmannA[i][j] * d * d;
    }
    s -= kHartmannC[i] * std::exp(-inner);
  }
  return s;
}

}  // namespace functions

std::string_view to_string(Family family) {
  switch (family) {
    case Family::unimodal: return "unimodal";
    case Family::multimodal: return "multimodal";
    case Family::fixed_dimension: return "fixed-dimension";
  }
  return "?";
}

const std::array<BenchmarkSpec, kFunctionCount>& benchmark_specs() { return kSpecs; }

const BenchmarkSpec& spec_of(FunctionId id) {
  const auto index = static_cast<std::size_t>(id) - 1;
  if (index >= kFunctionCount) throw std::invalid_argument("unknown benchmark function id");
  return kSpecs[index];
}

std::string to_string(FunctionId id) { return "F" + std::to_string(static_cast<int>(id)); }

FunctionId parse_function_id(std::string_view text) {
  auto fail = [&] {
    return std::invalid_argument("unknown function id '" + std::string(text) + "' (expected F1..F19)");
  };
  if (text.size() < 2 || (text[0] != 'F' && text[0] != 'f')) throw fail();
  int value = 0;
  for (char ch : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) throw fail();
    value = value * 10 + (ch - '0');
    if (value > 99) throw fail();
  }
  if (text[1] == '0' || value < 1 || value > static_cast<int>(kFunctionCount)) throw fail();
  return static_cast<FunctionId>(value);
}

double evaluate_formula(FunctionId id, std::span<const double> x, Rng* rng) {
  using namespace functions;
  switch (id) {
    case FunctionId::F1: return sphere(x);
    case FunctionId::F2: return schwefel_2_22(x);
    case FunctionId::F3: return schwefel_1_2(x);
    case FunctionId::F4: return schwefel_2_21(x);
    case FunctionId::F5: return rosenbrock(x);
    case FunctionId::F6: return step(x);
    case FunctionId::F7:
      if (rng == nullptr) throw std::invalid_argument("F7 is stochastic and needs an Rng");
      return quartic(x) + rng->unit();
    case FunctionId::F8: return schwefel_2_26(x);
    case FunctionId::F9: return rastrigin(x);
    case FunctionId::F10: return ackley(x);
    case FunctionId::F11: return griewank(x);
    case FunctionId::F12: return penalized_1(x);
    case FunctionId::F13: return penalized_2(x);
    case FunctionId::F14: return shekel_foxholes(x);
    case FunctionId::F15: return kowalik(x);
    case FunctionId::F16: return six_hump_camel(x);
    case FunctionId::F17: return branin(x);
    case FunctionId::F18: return goldstein_price(x);
    case FunctionId::F19: return hartmann_3(x);
  }
  throw std::invalid_argument("unknown benchmark function id");
}

double evaluate_at(FunctionId id, std::span<const double> x, Rng* rng) {
  const auto& spec = spec_of(id);
  if (x.size() != spec.dim) {
    throw std::invalid_argument(to_string(id) + " expects " + std::to_string(spec.dim) +
                                " coordinates, got " + std::to_string(x.size()));
  }
  return evaluate_formula(id, x, rng);
}

Problem make_function(FunctionId id) {
  const auto& spec = spec_of(id);
  Problem p;
  p.id = to_string(id);
  p.dim = spec.dim;
  p.lower = spec.lower;
  p.upper = spec.upper;
  p.known_min = spec.f_min;
  p.stochastic = spec.stochastic;
  if (spec.stochastic) {
    p.objective = [id](std::span<const double> x, Rng& rng) { return evaluate_formula(id, x, &rng); };
  } else {
    p.objective = [id](std::span<const double> x, Rng&) { return evaluate_formula(id, x, nullptr); };
  }
  return p;
}

Problem make_function(std::string_view id) { return make_function(parse_function_id(id)); }

}  // namespace cddohs
