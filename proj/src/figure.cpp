#include "sheetcrystal/figure.hpp"

#include <charconv>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "sheetcrystal/closed_form.hpp"

namespace sheetcrystal {

std::string format_number(double value) { return fmt::format("{:.17g}", value); }

FigureSeries figure_series(int N, double alpha_a, int points) {
  if (N < 1) throw std::invalid_argument("figure N must be >= 1");
  if (!(alpha_a > 0.0)) throw std::invalid_argument("alpha*a must be > 0");
  if (points < 2) throw std::invalid_argument("points must be >= 2");

  const CrystalParams p{N, 1.0, alpha_a, UnitSystem::atomic()};
  const double half = (N + 4) * p.a;
  FigureSeries out;
  out.N = N;
  out.alpha_a = alpha_a;
  out.z.reserve(static_cast<std::size_t>(points));
  out.psi.reserve(static_cast<std::size_t>(points));
  const int last = points - 1;
  for (int i = 0; i < points; ++i) {
    // (2i - last) flips sign exactly under i -> last - i.
    const double z = half * static_cast<double>(2 * i - last) / last;
    out.z.push_back(z);
    out.psi.push_back(psi_exact(p, z));
  }
  return out;
}

std::string figure_csv(const FigureSeries& series) {
  std::string text = "z,psi\n";
  for (std::size_t i = 0; i < series.z.size(); ++i) {
    text += format_number(series.z[i]);
    text += ',';
    text += format_number(series.psi[i]);
    text += '\n';
  }
  return text;
}

std::vector<std::vector<double>> parse_numeric_csv(std::string_view text,
                                                   std::vector<std::string>* header) {
  std::vector<std::vector<double>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool first = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (first) {
      first = false;
      if (header) *header = fields;
      continue;
    }
    std::vector<double> row;
    for (const std::string& f : fields) {
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size()) {
        throw std::invalid_argument("malformed CSV field '" + f + "'");
      }
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace sheetcrystal
