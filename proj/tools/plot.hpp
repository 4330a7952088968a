#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/limits.hpp"
#include "puiseux/monoid.hpp"
#include "puiseux/rational.hpp"

namespace puiseux::cli {

enum class Marker { integer_element, shifted_element, other };
const char* to_string(Marker m);

struct PlotRecord {
  PosRational element;
  PosRational elasticity;
  Marker marker = Marker::other;
};

struct PlotData {
  std::vector<PlotRecord> records;
  /// Set when a resource limit stopped the enumeration; records are then a
  /// prefix of the full stream.
  std::optional<std::string> truncated_by;
};

/// Non-integer x is a shifted element when x = m + e for an integer m >= 1 in
/// tm and a uniquely factorable e in tm; the smallest such e is used.
Marker classify_marker(const TruncatedMonoid& tm, const PosRational& x);

/// One record per nonzero element <= bound with elasticity > 1 (every nonzero
/// element when include_all), ascending by element.
PlotData plot_data(const TruncatedMonoid& tm, const PosRational& bound, bool include_all,
                   const EnumerationLimits& limits = {});

/// CSV with header "element,elasticity,marker" (plus two approximate decimal
/// columns when decimal), LF line endings. A trailing "# ..." row reports truncation.
std::string plot_csv(const PlotData& data, bool decimal);

}  // namespace puiseux::cli
