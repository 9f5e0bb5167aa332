#pragma once

#include <filesystem>
#include <vector>

#include "snlb/grid.hpp"

namespace snlb {

/// Raw field format: 32-byte little-endian header
///   bytes 0..3   magic "SNLB"
///   bytes 4..7   u32 version (1)
///   bytes 8..11  u32 dim
///   bytes 12..23 u32 N1, N2, N3
///   bytes 24..31 f64 box length L
/// followed by N1*N2*N3 f64 samples (real fields only), axis 1 fastest.
void write_raw(const std::filesystem::path& path, const GridFunction& f);
GridFunction read_raw(const std::filesystem::path& path);

/// CSV with an index column per axis and a trailing value column.
void write_csv(const std::filesystem::path& path, const GridFunction& f);
GridFunction read_grid_csv(const std::filesystem::path& path, const GridSpec& spec);

/// One-column-per-name numeric CSV (vectors, weight tables).
void write_columns_csv(const std::filesystem::path& path,
                       const std::vector<std::string>& names,
                       const std::vector<std::vector<double>>& columns);
std::pair<std::vector<std::string>, std::vector<std::vector<double>>>
read_columns_csv(const std::filesystem::path& path);

}  // namespace snlb
