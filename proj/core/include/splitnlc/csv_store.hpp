#pragma once

#include <string>
#include <vector>

#include "splitnlc/sweep.hpp"

namespace splitnlc::experiments {

/// File-per-scenario tabular store. Files are canonical CSV: a commented
/// header block (schema version, scenario id and hash, seed, engine version),
/// one fixed column order and fixed decimal formatting, so identical runs
/// produce identical bytes.
///
/// Returns the path written: `<dir>/<scenario_id>.csv`.
std::string save_result(const SweepResult& result, const std::string& dir);

/// Loads one result file; throws std::runtime_error on a missing file or a
/// schema-version mismatch.
SweepResult load_result(const std::string& path);

/// Loads and concatenates every `*.csv` under `dir` in filename order.
std::vector<SweepResult> load_results_dir(const std::string& dir);

/// Canonical row formatting shared by the store and the figure writers.
std::string format_row(const SweepRow& row);

}  // namespace splitnlc::experiments
