#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace splitnlc::experiments {

enum class FigureMode { Analytic, Both };

struct FigureOptions {
  std::string out_dir = ".";
  FigureMode mode = FigureMode::Analytic;
  std::uint64_t seed = 42;
  unsigned threads = 0;
  /// Span counts simulated when mode == Both (desk-scale subset).
  std::vector<int> simulated_spans = {2, 5, 10, 20, 30, 40};
};

/// Reproduces one of the study figures ("fig2", "fig3", "fig4a", "fig4b",
/// "fig5") from the reference link parameters: per-curve CSV files plus a
/// plain-text gnuplot script. Returns the paths written. Outputs are
/// byte-identical across runs for a fixed seed and version.
std::vector<std::string> figure(const std::string& name, const FigureOptions& options);

/// Names accepted by figure().
const std::vector<std::string>& figure_names();

}  // namespace splitnlc::experiments
