#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "projclust/point_set.hpp"

namespace projclust {

// One point per line, comma-separated decimals, equal arity across rows.
// Lines starting with '#' and blank lines are skipped. Values are written
// with 17 significant digits so every double survives a round trip.

/// Throws ParseError naming the 1-based line on ragged rows, non-numeric or
/// non-finite fields, or an input with no data rows.
PointSet read_csv(std::istream& in);
PointSet load_csv(const std::filesystem::path& path);

void write_csv(const PointSet& ps, std::ostream& out);
void save_csv(const PointSet& ps, const std::filesystem::path& path);

std::string format_double(double v);

}  // namespace projclust
