#include "filters.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace convsolve {

std::string_view bc_name(BoundaryCondition bc) {
  switch (bc) {
    case BoundaryCondition::Zero: return "zero";
    case BoundaryCondition::Periodic: return "periodic";
    case BoundaryCondition::Reflexive: return "reflexive";
  }
  return "?";
}

namespace {
std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}
}  // namespace

std::optional<BoundaryCondition> parse_bc(std::string_view name) {
  const std::string s = lowercase(name);
  if (s == "zero") return BoundaryCondition::Zero;
  if (s == "periodic") return BoundaryCondition::Periodic;
  if (s == "reflexive") return BoundaryCondition::Reflexive;
  return std::nullopt;
}

Filter3x3 Filter3x3::from_rows(
    std::initializer_list<std::initializer_list<double>> rows) {
  if (rows.size() != 3) throw std::invalid_argument("kernel must have 3 rows");
  Filter3x3 f;
  Index i = 0;
  for (const auto& row : rows) {
    if (row.size() != 3) throw std::invalid_argument("kernel must have 3 columns");
    Index j = 0;
    for (double v : row) f(i, j++) = v;
    ++i;
  }
  return f;
}

Filter3x3 Filter3x3::identity_kernel() {
  Filter3x3 f;
  f(1, 1) = 1.0;
  return f;
}

std::string_view filter_name(FilterId id) {
  switch (id) {
    case FilterId::Box: return "box";
    case FilterId::Gus: return "gus";
    case FilterId::Eda: return "eda";
    case FilterId::Edb: return "edb";
    case FilterId::Edc: return "edc";
    case FilterId::Shp: return "shp";
    case FilterId::Emb: return "emb";
  }
  return "?";
}

std::optional<FilterId> parse_filter_id(std::string_view name) {
  const std::string s = lowercase(name);
  for (FilterId id : kFilterCatalog) {
    if (s == filter_name(id)) return id;
  }
  return std::nullopt;
}

Filter3x3 filter_kernel(FilterId id) {
  switch (id) {
    case FilterId::Box:
      return Filter3x3({1.0 / 9, 1.0 / 9, 1.0 / 9,
                        1.0 / 9, 1.0 / 9, 1.0 / 9,
                        1.0 / 9, 1.0 / 9, 1.0 / 9});
    case FilterId::Gus:
      return Filter3x3({1.0 / 16, 2.0 / 16, 1.0 / 16,
                        2.0 / 16, 4.0 / 16, 2.0 / 16,
                        1.0 / 16, 2.0 / 16, 1.0 / 16});
    case FilterId::Eda:
      return Filter3x3({1, 0, -1,
                        0, 0, 0,
                        -1, 0, 1});
    case FilterId::Edb:
      return Filter3x3({0, -1, 0,
                        -1, 4, -1,
                        0, -1, 0});
    case FilterId::Edc:
      return Filter3x3({-1, -1, -1,
                        -1, 8, -1,
                        -1, -1, -1});
    case FilterId::Shp:
      return Filter3x3({0, -1, 0,
                        -1, 5, -1,
                        0, -1, 0});
    case FilterId::Emb:
      return Filter3x3({-2, -1, 0,
                        -1, 1, 1,
                        0, 1, 2});
  }
  throw std::invalid_argument("unknown filter id");
}

}  // namespace convsolve
