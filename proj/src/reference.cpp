#include "cddohs/reference.hpp"

#include <string>

namespace cddohs::reference {

namespace {

// clang-format off
constexpr std::array<ClassicalRow, 19> kClassical{{
    {"F1",  {5.087E-33, 1.057E-32}, {1.328E-57, 8.635E-73},  {2.850E+02, 9.021E+01}},
    {"F2",  {4.921E-17, 4.033E-17}, {2.453E-32, 4.385E-32},  {3.005E+00, 5.355E-01}},
    {"F3",  {1.249E-29, 2.238E-29}, {2.736E-39, 5.168E-40},  {1.754E+04, 5.815E+03}},
    {"F4",  {1.986E-16, 1.920E-16}, {7.815E-33, 2.784E-48},  {2.214E+01, 1.787E+00}},
    {"F5",  {2.298E+00, 6.935E+00}, {2.419E+01, 1.023E+01},  {2.040E+04, 8.759E+03}},
    {"F6",  {5.589E-04, 1.439E-04}, {7.074E-01, 6.787E-01},  {2.834E+02, 1.023E+02}},
    {"F7",  {2.901E-03, 1.497E-03}, {1.361E-03, 1.123E-03},  {2.042E-01, 5.145E-02}},
    {"F8",  {-1.178E+04, 3.098E+03}, {-1.244E+04, 5.537E+02}, {-1.240E+04, 7.638E+01}},
    {"F9",  {2.222E+00, 6.070E+00}, {1.060E+01, 1.724E+01},  {1.968E+01, 3.683E+00}},
    {"F10", {6.809E-15, 1.703E-15}, {7.875E-15, 4.118E-15},  {5.095E+00, 5.702E-01}},
    {"F11", {0.000E+00, 0.000E+00}, {5.688E-01, 1.532E+00},  {3.513E+00, 8.925E-01}},
    {"F12", {1.161E-06, 3.112E-07}, {3.167E-01, 9.0046E-01}, {7.060E+00, 2.147E+00}},
    {"F13", {1.555E-05, 5.271E-06}, {4.128E-01, 3.745E-01},  {1.622E+02, 1.596E+02}},
    {"F14", {5.372E+00, 4.241E+00}, {9.981E-01, 3.686E-04},  {9.980E-01, 3.448E-11}},
    {"F15", {6.249E-04, 2.502E-04}, {1.181E-03, 1.022E-03},  {6.699E-03, 9.110E-03}},
    {"F16", {-1.032E+00, 3.777E-10}, {-1.029E+00, 3.247E-03}, {-1.032E+00, 1.889E-07}},
    {"F17", {3.979E-01, 2.675E-09}, {4.231E-01, 4.814E-02},  {3.979E-01, 6.467E-06}},
    {"F18", {5.700E+00, 8.238E+00}, {3.117E+00, 1.579E-01},  {3.900E+00, 4.930E+00}},
    {"F19", {-3.863E+00, 1.554E-10}, {-3.728E+00, 1.075E-01}, {-3.863E+00, 4.714E-08}},
}};

constexpr std::array<CecRow, 10> kCec{{
    {"F1",  {5.317E+04, 4.240E+09, 5.890E+04, 2.580E+04, 4.760E+04, 7.600E+07, 3.863E+04}},
    {"F2",  {1.835E+01, 1.841E+01, 1.890E+01, 1.834E+01, 1.834E+01, 1.750E+01, 1.834E+01}},
    {"F3",  {1.370E+01, 1.370E+01, 1.370E+01, 1.370E+01, 1.370E+01, 1.270E+01, 1.370E+01}},
    {"F4",  {5.746E+01, 5.933E+03, 2.090E+04, 1.060E+03, 2.537E+02, 2.120E+03, 7.266E+01}},
    {"F5",  {2.170E+00, 4.209E+00, 6.180E+00, 5.315E+00, 2.426E+00, 2.440E+00, 2.493E+00}},
    {"F6",  {1.130E+01, 1.215E+01, 1.180E+01, 5.033E+00, 1.137E+01, 1.110E+01, 8.864E+00}},
    {"F7",  {5.440E+01, 1.007E+03, 1.040E+03, 3.068E+02, 5.876E+02, 6.060E+02, 3.291E+02}},
    {"F8",  {3.150E+00, 6.785E+00, 6.340E+00, 5.462E+00, 5.587E+00, 5.720E+00, 5.160E+00}},
    {"F9",  {3.484E+00, 4.493E+02, 2.270E+03, 3.796E+00, 5.671E+00, 2.280E+01, 6.104E+00}},
    {"F10", {1.554E+01, 2.150E+01, 2.150E+01, 2.098E+01, 2.156E+01, 2.120E+01, 2.113E+01}},
}};
// clang-format on

}  // namespace

const std::array<ClassicalRow, 19>& classical_table() { return kClassical; }
const std::array<CecRow, 10>& cec_table() { return kCec; }

double classical_checksum() {
  double sum = 0.0;
  for (const auto& row : kClassical) {
    for (const AvgStd& cell : {row.cddo_hs, row.cddo, row.hs}) sum += cell.avg + cell.std;
  }
  return sum;
}

double cec_checksum() {
  double sum = 0.0;
  for (const auto& row : kCec) {
    for (double v : row.avg) sum += v;
  }
  return sum;
}

ResultsGrid cec_results_grid() {
  ResultsGrid grid;
  for (const auto& row : kCec) {
    auto& cells = grid[std::string(row.func)];
    for (std::size_t a = 0; a < kCecAlgorithms.size(); ++a) cells[std::string(kCecAlgorithms[a])] = row.avg[a];
  }
  return grid;
}

}  // namespace cddohs::reference
