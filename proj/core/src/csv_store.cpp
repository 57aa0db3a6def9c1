#include "splitnlc/csv_store.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "splitnlc/version.hpp"

namespace splitnlc::experiments {
namespace {

constexpr const char* kColumns =
    "scenario_id,engine,scheme,N,X,P_dBm,SNR_dB,MI_bits,std_err,runtime_s";

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::nan("");
  return std::stod(s);
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

std::string format_row(const SweepRow& row) {
  std::ostringstream os;
  os << row.scenario_id << ',' << row.engine << ',' << row.scheme << ','
     << row.n << ',' << row.x << ',' << format_double(row.p_dbm) << ','
     << format_double(row.snr_db) << ',' << format_double(row.mi_bits) << ','
     << format_double(row.std_err) << ',' << format_double(row.runtime_s);
  return os.str();
}

std::string save_result(const SweepResult& result, const std::string& dir) {
  std::filesystem::create_directories(dir);
  const auto path = std::filesystem::path(dir) / (result.scenario_id + ".csv");
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# splitnlc results\n";
  out << "# schema_version: " << result.schema_version << "\n";
  out << "# scenario_id: " << result.scenario_id << "\n";
  out << "# scenario_hash: " << result.scenario_hash << "\n";
  out << "# seed: " << result.seed << "\n";
  out << "# engine_version: " << result.engine_version << "\n";
  out << kColumns << "\n";
  for (const auto& row : result.rows) out << format_row(row) << "\n";
  return path.string();
}

SweepResult load_result(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("result file not found: " + path);
  SweepResult result;
  result.schema_version = -1;
  std::string line;
  bool saw_columns = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      const auto parse_field = [&line](const char* tag) -> std::string {
        const auto pos = line.find(tag);
        if (pos == std::string::npos) return {};
        return line.substr(pos + std::string(tag).size());
      };
      if (line.find("schema_version:") != std::string::npos)
        result.schema_version = std::stoi(parse_field("schema_version: "));
      else if (line.find("scenario_id:") != std::string::npos)
        result.scenario_id = parse_field("scenario_id: ");
      else if (line.find("scenario_hash:") != std::string::npos)
        result.scenario_hash = parse_field("scenario_hash: ");
      else if (line.find("seed:") != std::string::npos)
        result.seed = std::stoull(parse_field("seed: "));
      else if (line.find("engine_version:") != std::string::npos)
        result.engine_version = parse_field("engine_version: ");
      continue;
    }
    if (!saw_columns) {
      if (line != kColumns)
        throw std::runtime_error("unexpected column header in " + path);
      if (result.schema_version != kResultSchemaVersion)
        throw std::runtime_error(
            "schema version mismatch in " + path + ": file has " +
            std::to_string(result.schema_version) + ", expected " +
            std::to_string(kResultSchemaVersion));
      saw_columns = true;
      continue;
    }
    const auto f = split_csv_line(line);
    if (f.size() != 10) throw std::runtime_error("malformed row in " + path);
    SweepRow row;
    row.scenario_id = f[0];
    row.engine = f[1];
    row.scheme = f[2];
    row.n = std::stoi(f[3]);
    row.x = std::stoi(f[4]);
    row.p_dbm = parse_double(f[5]);
    row.snr_db = parse_double(f[6]);
    row.mi_bits = parse_double(f[7]);
    row.std_err = parse_double(f[8]);
    row.runtime_s = parse_double(f[9]);
    result.rows.push_back(std::move(row));
  }
  if (!saw_columns) throw std::runtime_error("no data in " + path);
  return result;
}

std::vector<SweepResult> load_results_dir(const std::string& dir) {
  std::vector<std::string> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".csv") files.push_back(entry.path().string());
  }
  std::sort(files.begin(), files.end());
  std::vector<SweepResult> out;
  out.reserve(files.size());
  for (const auto& f : files) out.push_back(load_result(f));
  return out;
}

}  // namespace splitnlc::experiments
