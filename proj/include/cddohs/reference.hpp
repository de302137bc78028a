#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "cddohs/stats.hpp"

namespace cddohs::reference {

/// Published 30-run mean and standard deviation.
struct AvgStd {
  double avg;
  double std;
};

/// Classical-suite results for CDDO-HS, CDDO and HS on F1..F19.
struct ClassicalRow {
  std::string_view func;
  AvgStd cddo_hs;
  AvgStd cddo;
  AvgStd hs;
};

const std::array<ClassicalRow, 19>& classical_table();

/// Published means on the ten CEC-C06 2019 functions for seven algorithms.
inline constexpr std::array<std::string_view, 7> kCecAlgorithms{"CDDO-HS", "ChOA",    "BOA", "FOX",
                                                                "GWO-WOA", "WOA-BAT", "DCSO"};

struct CecRow {
  std::string_view func;
  std::array<double, 7> avg;  // ordered as kCecAlgorithms
};

const std::array<CecRow, 10>& cec_table();

/// Published mean placement scores, ordered as kCecAlgorithms.
inline constexpr std::array<double, 7> kPublishedRankScores{2.5, 5.8, 6.0, 3.1, 3.6, 3.8, 2.8};

/// Sum of every number in each table; guards the transcription.
double classical_checksum();
double cec_checksum();

/// The CEC table as a ResultsGrid for rank_algorithms().
ResultsGrid cec_results_grid();

}  // namespace cddohs::reference
