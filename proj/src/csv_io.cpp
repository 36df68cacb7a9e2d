#include "projclust/csv_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <system_error>
#include <vector>

#include "projclust/errors.hpp"

namespace projclust {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

PointSet read_csv(std::istream& in) {
  std::vector<double> coords;
  std::size_t arity = 0;
  std::size_t rows = 0;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;

    std::size_t fields = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = body.find(',', start);
      const auto field = trim(body.substr(
          start, comma == std::string_view::npos ? std::string_view::npos
                                                 : comma - start));
      double value = 0.0;
      const auto* end = field.data() + field.size();
      const auto res = std::from_chars(field.data(), end, value);
      if (field.empty() || res.ec != std::errc{} || res.ptr != end) {
        throw ParseError(line_no, "field " + std::to_string(fields + 1) +
                                      " is not a number: '" +
                                      std::string(field) + "'");
      }
      if (!std::isfinite(value)) {
        throw ParseError(line_no, "field " + std::to_string(fields + 1) +
                                      " is not finite");
      }
      coords.push_back(value);
      ++fields;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (rows == 0) {
      arity = fields;
    } else if (fields != arity) {
      throw ParseError(line_no, "expected " + std::to_string(arity) +
                                    " fields, got " + std::to_string(fields));
    }
    ++rows;
  }
  if (rows == 0) throw ParseError(line_no, "no data rows");
  return PointSet(rows, arity, std::move(coords));
}

PointSet load_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path.string() + "'");
  return read_csv(in);
}

void write_csv(const PointSet& ps, std::ostream& out) {
  for (Index i = 0; i < ps.size(); ++i) {
    const auto p = ps.point(i);
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (k) out << ',';
      out << format_double(p[k]);
    }
    out << '\n';
  }
}

void save_csv(const PointSet& ps, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path.string() + "'");
  write_csv(ps, out);
  if (!out) throw InvalidInput("write to '" + path.string() + "' failed");
}

}  // namespace projclust
