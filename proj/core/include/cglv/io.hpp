#pragma once

#include <filesystem>
#include <string>

#include "cglv/grid.hpp"

namespace cglv {

/// Binary snapshot: magic "CGLF", version u32, N u32, L f64, then
/// row-major N*N (re, im) f64 pairs (y-index is the row, x varies fastest).
void write_snapshot(const std::filesystem::path& path, const ComplexField& field);
ComplexField read_snapshot(const std::filesystem::path& path);

/// Debug export, one line per node: x,y,re,im.
void write_field_csv(const std::filesystem::path& path, const ComplexField& field);

std::string format_double(double v);

}  // namespace cglv
