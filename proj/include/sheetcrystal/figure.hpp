#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace sheetcrystal {

/// 17 significant digits, '.' decimal point.
std::string format_number(double value);

/// psi of the crystal sampled for plotting, in atomic units with alpha = 1
/// and a = alpha_a, on z in [-(N+4)a, (N+4)a].
struct FigureSeries {
  int N = 1;
  double alpha_a = 1.0;
  std::vector<double> z;
  std::vector<double> psi;
};

/// Samples psi_exact; the grid is exactly symmetric about z = 0.
/// Throws std::invalid_argument for N < 1, alpha_a <= 0 or points < 2.
FigureSeries figure_series(int N, double alpha_a, int points = 2001);

/// "z,psi" header followed by one row per sample, '\n' line endings.
std::string figure_csv(const FigureSeries& series);

/// Parses a numeric CSV with a single header line. Throws
/// std::invalid_argument on malformed rows.
std::vector<std::vector<double>> parse_numeric_csv(std::string_view text,
                                                   std::vector<std::string>* header = nullptr);

} // namespace sheetcrystal
