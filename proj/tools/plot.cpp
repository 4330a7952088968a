#include "plot.hpp"

#include <cstdio>

#include "puiseux/errors.hpp"
#include "puiseux/factorization.hpp"

namespace puiseux::cli {

const char* to_string(Marker m) {
  switch (m) {
    case Marker::integer_element: return "integer-element";
    case Marker::shifted_element: return "shifted-element";
    case Marker::other: return "other";
  }
  return "other";
}

Marker classify_marker(const TruncatedMonoid& tm, const PosRational& x) {
  if (x.is_integer()) return Marker::integer_element;
  const mpz_class top = x.floor();
  for (mpz_class m = top; m >= 1; --m) {
    const PosRational whole = PosRational::from_mpq(mpq_class(m));
    if (!contains(tm, whole)) continue;
    const PosRational rest = x.minus(whole);
    if (count_factorizations(tm, rest, 2) == 1) return Marker::shifted_element;
  }
  return Marker::other;
}

namespace {

void emit(PlotData& out, const TruncatedMonoid& tm, const PosRational& x, const PosRational& rho,
          bool include_all) {
  if (!include_all && rho == PosRational(1)) return;
  out.records.push_back(PlotRecord{x, rho, classify_marker(tm, x)});
}

}  // namespace

PlotData plot_data(const TruncatedMonoid& tm, const PosRational& bound, bool include_all,
                   const EnumerationLimits& limits) {
  PlotData out;
  if (tm.trivial()) return out;

  std::optional<LengthExtremesTable> table;
  try {
    table = length_extremes_up_to(tm, bound, limits);
  } catch (const ResourceError&) {
    table.reset();
  }

  try {
    if (table) {
      for (std::size_t cell = 1; cell < table->cells(); ++cell) {
        if (!table->member(cell)) continue;
        const PosRational rho = canonical(table->max_length(cell), table->min_length(cell));
        emit(out, tm, table->element(cell), rho, include_all);
      }
    } else {
      for (const auto& x : elements_up_to(tm, bound, limits)) {
        if (x.is_zero()) continue;
        emit(out, tm, x, element_elasticity(tm, x, limits), include_all);
      }
    }
  } catch (const ResourceError& e) {
    out.truncated_by = e.what();
  }
  return out;
}

std::string plot_csv(const PlotData& data, bool decimal) {
  std::string csv = "element,elasticity,marker";
  csv += decimal ? ",element_approx,elasticity_approx\n" : "\n";
  for (const auto& r : data.records) {
    csv += r.element.str();
    csv += ',';
    csv += r.elasticity.str();
    csv += ',';
    csv += to_string(r.marker);
    if (decimal) {
      char buf[64];
      std::snprintf(buf, sizeof buf, ",%.10g,%.10g", r.element.to_double(),
                    r.elasticity.to_double());
      csv += buf;
    }
    csv += '\n';
  }
  if (data.truncated_by) csv += "# resource limit reached: " + *data.truncated_by + "\n";
  return csv;
}

}  // namespace puiseux::cli
