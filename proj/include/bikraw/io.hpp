#pragma once

#include <optional>
#include <ostream>
#include <string>

#include "bikraw/grid.hpp"
#include "bikraw/linop.hpp"
#include "bikraw/params.hpp"
#include "bikraw/report.hpp"
#include "bikraw/version.hpp"

namespace bikraw {

/// Reproducibility header embedded in every output file. Reruns with the same
/// config are byte-identical (no timestamps).
struct RunMeta {
  std::string params;  // "p1,p2,p3,p4" as rational strings
  std::string mode;    // "exact" | "float"
  unsigned long seed = 0;
  std::string extra;   // free-form, e.g. subcommand flags
};

namespace detail {
template <class Fd>
std::string scalar_part(const typename Fd::Real& v) {
  if constexpr (Fd::exact)
    return rat_str(v);
  else
    return format_double(v);
}
}  // namespace detail

void write_meta_comment(std::ostream& os, const RunMeta& meta);

/// CSV rows x,y,re,im in canonical lattice order; rationals as "num/den".
template <class Fd>
void write_grid_csv(std::ostream& os, const GridFunction<Fd>& g, const RunMeta& meta) {
  write_meta_comment(os, meta);
  os << "x,y,re,im\n";
  for (std::size_t i = 0; i < g.values.size(); ++i) {
    auto [x, y] = g.lattice.point(i);
    os << x << "," << y << "," << detail::scalar_part<Fd>(g.values[i].re) << ","
       << detail::scalar_part<Fd>(g.values[i].im) << "\n";
  }
}

/// Coordinate-list export: row,col,re,im (row-major, columns ascending).
template <class Fd>
void write_operator_coo_csv(std::ostream& os, const LatticeOperator<Fd>& op, const RunMeta& meta) {
  write_meta_comment(os, meta);
  os << "row,col,re,im\n";
  for (std::size_t r = 0; r < op.codomain().size(); ++r)
    for (const auto& [c, v] : op.row(r))
      os << r << "," << c << "," << detail::scalar_part<Fd>(v.re) << "," << detail::scalar_part<Fd>(v.im) << "\n";
}

std::string report_to_json(const VerificationReport& report, const RunMeta& meta);

/// Grid as JSON ({"meta": ..., "rows": [{x, y, re, im}, ...]}).
std::string grid_to_json(const GridFunction<ExactField>& g, const RunMeta& meta);
std::string grid_to_json(const GridFunction<FloatField>& g, const RunMeta& meta);

struct ParamFile {
  RahmanParams params;
  std::optional<FrequencyPair> frequencies;
};

/// JSON parameter file: {"p1": "2", "p2": "1", "p3": "1", "p4": "1",
/// "omega1": "1", "omega2": "3/2"} — rationals as "num/den" strings.
ParamFile load_param_file(const std::string& path);

/// "p1,p2,p3,p4" with rational components.
RahmanParams parse_params_flag(const std::string& csv);

}  // namespace bikraw
