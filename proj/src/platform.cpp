#include "rsslb/platform.hpp"

#include <stdexcept>

namespace rsslb {

const char* to_string(PlatformClass c) {
  switch (c) {
    case PlatformClass::Terrestrial: return "terrestrial";
    case PlatformClass::UAV: return "uav";
    case PlatformClass::HAPS: return "haps";
    case PlatformClass::LEO: return "leo";
  }
  return "?";
}

PlatformClass platform_class_from_string(const std::string& s) {
  if (s == "terrestrial") return PlatformClass::Terrestrial;
  if (s == "uav") return PlatformClass::UAV;
  if (s == "haps") return PlatformClass::HAPS;
  if (s == "leo") return PlatformClass::LEO;
  throw std::invalid_argument("unknown platform class '" + s +
                              "' (expected terrestrial|uav|haps|leo)");
}

PlatformSpec PlatformSpec::preset(PlatformClass c) {
  switch (c) {
    case PlatformClass::Terrestrial: return {c, 5.0, 500.0, 50.0};
    case PlatformClass::UAV: return {c, 200.0, 2000.0, 0.0625};
    case PlatformClass::HAPS: return {c, 20000.0, 50000.0, 800.0};
    case PlatformClass::LEO: return {c, 500000.0, 500000.0, 50.0};
  }
  throw std::invalid_argument("unknown platform class");
}

void PlatformSpec::validate() const {
  if (!(altitude_m > 0.0)) throw std::invalid_argument("platform: altitude_m must be > 0");
  if (!(coverage_radius_m > 0.0)) throw std::invalid_argument("platform: coverage_radius_m must be > 0");
  if (!(rss_area_m2 > 0.0)) throw std::invalid_argument("platform: rss_area_m2 must be > 0");
}

void ReflectorUnitSpec::validate() const {
  if (regime_hint == UnitRegime::LRSS) {
    if (c1 != 10.0 || c2 != 10.0) {
      throw std::invalid_argument(
          "reflector unit: LRSS units must be 10 wavelengths per side (c1 = c2 = 10)");
    }
  } else {
    if (c1 < 0.1 || c1 > 0.2 || c2 < 0.1 || c2 > 0.2) {
      throw std::invalid_argument(
          "reflector unit: SRSS units must be between 0.1 and 0.2 wavelengths per side");
    }
  }
}

}  // namespace rsslb
