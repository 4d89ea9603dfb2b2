#pragma once

#include <cmath>

namespace rsslb {

// c = 3e8 m/s so that lambda = 0.01 m at exactly 30 GHz; the reflector-count
// formulas are calibrated against this value.
inline constexpr double kSpeedOfLightMps = 3.0e8;
inline constexpr double kBoltzmannJperK = 1.38e-23;
inline constexpr double kEarthRadiusM = 6.371e6;
inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

inline double wavelength_m(double f_ghz) { return kSpeedOfLightMps / (f_ghz * 1e9); }

inline double watt_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }
inline double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

}  // namespace rsslb
