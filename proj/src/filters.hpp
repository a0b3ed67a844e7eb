#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "dense_matrix.hpp"

namespace convsolve {

/// Boundary rule for values just outside the grid: pad with zeros, wrap
/// around, or replicate the edge.
enum class BoundaryCondition { Zero, Periodic, Reflexive };

std::string_view bc_name(BoundaryCondition bc);
std::optional<BoundaryCondition> parse_bc(std::string_view name);

/// 3x3 real convolution kernel; entry (i,j) is row i, column j (0-based
/// accessors, 1-based in the documented formulas).
class Filter3x3 {
 public:
  Filter3x3() = default;
  explicit Filter3x3(const std::array<double, 9>& entries) : f_(entries) {}

  static Filter3x3 from_rows(std::initializer_list<std::initializer_list<double>> rows);
  /// The kernel with a single 1 in the center; convolution is the identity.
  static Filter3x3 identity_kernel();

  double operator()(Index i, Index j) const { return f_[i * 3 + j]; }
  double& operator()(Index i, Index j) { return f_[i * 3 + j]; }
  const std::array<double, 9>& entries() const { return f_; }

 private:
  std::array<double, 9> f_{};
};

/// The seven catalog filters with reduced matrix-equation forms.
enum class FilterId { Box, Gus, Eda, Edb, Edc, Shp, Emb };

inline constexpr std::array<FilterId, 7> kFilterCatalog = {
    FilterId::Box, FilterId::Gus, FilterId::Eda, FilterId::Edb,
    FilterId::Edc, FilterId::Shp, FilterId::Emb};

std::string_view filter_name(FilterId id);
std::optional<FilterId> parse_filter_id(std::string_view name);
Filter3x3 filter_kernel(FilterId id);

}  // namespace convsolve
