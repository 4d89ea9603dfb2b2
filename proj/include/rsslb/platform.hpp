#pragma once

#include <string>

namespace rsslb {

enum class PlatformClass { Terrestrial, UAV, HAPS, LEO };

const char* to_string(PlatformClass c);
PlatformClass platform_class_from_string(const std::string& s);

/// Platform characteristics: mounting altitude H_RSS, designed coverage
/// radius d (Tx and Rx sit at the footprint edges, 2d apart), and the surface
/// area A_t reserved for reflector units.
struct PlatformSpec {
  PlatformClass platform_class = PlatformClass::Terrestrial;
  double altitude_m = 0.0;
  double coverage_radius_m = 0.0;
  double rss_area_m2 = 0.0;

  // Typical parameters per platform type:
  //   terrestrial 5 m / 0.5 km / 50 m^2, UAV 200 m / 2 km / 0.0625 m^2,
  //   HAPS 20 km / 50 km / 800 m^2, LEO 500 km / 500 km / 50 m^2.
  static PlatformSpec preset(PlatformClass c);

  void validate() const;  // throws std::invalid_argument
};

enum class UnitRegime { LRSS, SRSS };

/// Reflector-unit footprint expressed in wavelengths: length c1*lambda,
/// width c2*lambda. Large units (c1 = c2 = 10) enable the specular paradigm;
/// small units (0.1..0.2) operate in the scattering paradigm.
struct ReflectorUnitSpec {
  double c1 = 0.2;
  double c2 = 0.2;
  UnitRegime regime_hint = UnitRegime::SRSS;

  static ReflectorUnitSpec lrss() { return {10.0, 10.0, UnitRegime::LRSS}; }
  static ReflectorUnitSpec srss(double c = 0.2) { return {c, c, UnitRegime::SRSS}; }

  // A_r = c1*lambda * c2*lambda
  double unit_area_m2(double wavelength_m) const {
    return c1 * c2 * wavelength_m * wavelength_m;
  }

  void validate() const;  // enforces the LRSS / SRSS size rules
};

}  // namespace rsslb
