#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "circsep/algebra.hpp"

namespace circsep {

/// Flat/tensor index correspondence: r = d*j1 + j2. All modules use this
/// row-major convention; there is no alternative ordering anywhere.
int tensor_to_flat(int d, int j1, int j2);
std::pair<int, int> flat_to_tensor(int d, int r);

/// A line of d points in the module V_2(d) = Z_d x Z_d.
struct Line {
  int d = 0;
  std::vector<std::pair<int, int>> points;
};

/// {(x, x+offset mod d)}; the d lines for offset 0..d-1 partition V_2(d).
Line slope_one_line(int d, int offset);
Line vertical_line(int d, int x0);
Line horizontal_line(int d, int y0);

/// One of the d disjoint index classes I_p(x): d^2 flat positions, exactly
/// one inside each block B(j,k).
struct IndexClass {
  int x = 0;
  std::vector<std::pair<int, int>> positions;  // (row, col), flat indices
};

/// Zero/one support pattern M_p of a circulant density: block (j,k) carries
/// the line {(t+p(j), t+p(k))}. Also covers the Galois-field variant where
/// Z_d addition is replaced by a GF(q) addition table.
class SupportPattern {
 public:
  static SupportPattern circulant(int d, const PermutationZd& p);
  static SupportPattern galois(const GfAddTable& table);

  int d() const { return d_; }
  int n() const { return d_ * d_; }  // matrix side length d^2
  bool is_galois() const { return galois_; }
  const PermutationZd& permutation() const { return p_; }

  bool contains(int row, int col) const { return mask_[static_cast<std::size_t>(row * n() + col)] != 0; }
  std::size_t support_size() const;
  const std::vector<IndexClass>& classes() const { return classes_; }

  /// Flat (row, col) of the unique class-x point inside block (j,k).
  std::pair<int, int> class_position(int x, int j, int k) const;

 private:
  SupportPattern() : p_(PermutationZd::identity(2)) {}
  int d_ = 0;
  bool galois_ = false;
  PermutationZd p_;
  std::vector<std::uint8_t> mask_;  // n x n occupancy
  std::vector<IndexClass> classes_;
};

/// Circulant pattern M_p with index classes computed alongside.
SupportPattern support_pattern(int d, const PermutationZd& p);
/// Same construction with identity labeling over a GF(q) addition table.
SupportPattern gf_support_pattern(const GfAddTable& table);

/// Dot/x_k text art of a pattern, one matrix row per line ("." for zero,
/// "x<k>" for a class-k point), matching the displayed matrix convention.
std::string render_pattern(const SupportPattern& pattern);
/// Minimal SVG rendering: one colored cell per support point.
std::string render_pattern_svg(const SupportPattern& pattern);

}  // namespace circsep
