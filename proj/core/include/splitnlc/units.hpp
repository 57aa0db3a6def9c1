#pragma once

#include <cmath>

// Unit conventions used throughout the library:
//   * every quantity crossing a module boundary is SI linear (W, Hz, km where noted),
//   * dB values are 10*log10 of a linear power ratio,
//   * dBm refers to power relative to 1 mW.
// Conversions to and from dB/dBm happen at the CLI and file-format edge only.

namespace splitnlc {

inline double db_from_linear(double ratio) { return 10.0 * std::log10(ratio); }
inline double linear_from_db(double db) { return std::pow(10.0, db / 10.0); }

inline double dbm_from_watt(double watt) { return 10.0 * std::log10(watt * 1e3); }
inline double watt_from_dbm(double dbm) { return std::pow(10.0, dbm / 10.0) * 1e-3; }

namespace constants {

inline constexpr double kPlanck_Js = 6.62607015e-34;
inline constexpr double kLightSpeed_m_s = 299792458.0;

/// Reference carrier wavelength for dispersion conversion and photon energy.
inline constexpr double kReferenceWavelength_m = 1550e-9;

inline double reference_frequency_hz() {
  return kLightSpeed_m_s / kReferenceWavelength_m;
}

/// Photon energy h*nu at the reference wavelength, in joules.
inline double photon_energy_j() { return kPlanck_Js * reference_frequency_hz(); }

}  // namespace constants
}  // namespace splitnlc
