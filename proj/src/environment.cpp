#include "rsslb/environment.hpp"

#include <cmath>
#include <stdexcept>

namespace rsslb {

const char* to_string(EnvironmentKind k) {
  switch (k) {
    case EnvironmentKind::DenseUrban: return "dense_urban";
    case EnvironmentKind::Urban: return "urban";
    case EnvironmentKind::Rural: return "rural";
  }
  return "?";
}

EnvironmentKind environment_kind_from_string(const std::string& s) {
  if (s == "dense_urban") return EnvironmentKind::DenseUrban;
  if (s == "urban") return EnvironmentKind::Urban;
  if (s == "rural") return EnvironmentKind::Rural;
  throw std::invalid_argument("unknown environment kind '" + s +
                              "' (expected dense_urban|urban|rural)");
}

void EnvironmentClass::validate() const {
  if (std::abs(latitude_deg) > 90.0) {
    throw std::invalid_argument("environment: latitude_deg must lie in [-90, 90]");
  }
}

LosFitCoefficients ntn_los_fit(EnvironmentKind kind) {
  switch (kind) {
    case EnvironmentKind::DenseUrban: return {0.04235, 1.644, 27.32};
    case EnvironmentKind::Urban: return {9.668, 0.547, -10.58};
    case EnvironmentKind::Rural: return {-99.95, -0.5895, 104.1};
  }
  throw std::invalid_argument("unknown environment kind");
}

ClutterShadowEntry ntn_clutter_shadow(EnvironmentKind kind) {
  switch (kind) {
    case EnvironmentKind::DenseUrban: return {38.6, 1.75, 14.7};
    case EnvironmentKind::Urban: return {38.6, 4.0, 6.0};
    case EnvironmentKind::Rural: return {23.15, 1.15, 10.75};
  }
  throw std::invalid_argument("unknown environment kind");
}

}  // namespace rsslb
