#pragma once

// Text formats shared by the command-line tool and the bindings: chain file
// records, sweep CSV and the SVG plot.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kappachain/chain_model.hpp"
#include "kappachain/verify_harness.hpp"

namespace kappachain {

enum class AngleUnit { radians, degrees };

/// Flat key-value chain record:
///
///   # comment
///   unit = degrees
///   lengths = 1.5707963, 1.5707963
///   angles = 90
///   curvature = 1
///
/// `unit` is mandatory; `angles` may be empty for a single edge; `curvature`
/// is optional.
struct ChainFile {
  std::vector<double> lengths;
  std::vector<double> angles;
  AngleUnit unit = AngleUnit::radians;
  std::optional<double> curvature;

  /// Converts to radians and validates; throws DomainError.
  ConvexChain to_chain() const;
};

/// Throws DomainError with the offending line on malformed input.
ChainFile parse_chain_file(std::string_view text);
ChainFile load_chain_file(const std::string& path);

/// Comma-separated reals; throws DomainError.
std::vector<double> parse_real_list(std::string_view text);

/// Fixed `%.*g` rendering used by every table the tool prints.
std::string format_real(double x, int digits = 12);

/// CSV with columns kappa,radius,endpoint_distance. The radius is empty at
/// kappa = 0 and the distance is empty for infeasible points.
void write_sweep_csv(std::ostream& os, const std::vector<SweepPoint>& series);

/// Line plot of endpoint distance against kappa: one polyline, two axes and
/// their labels. Infeasible points are skipped.
void write_sweep_svg(std::ostream& os, const std::vector<SweepPoint>& series,
                     std::string_view title);

}  // namespace kappachain
