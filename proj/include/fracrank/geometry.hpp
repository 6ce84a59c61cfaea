#pragma once

#include "fracrank/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace fracrank {

// Axis-aligned half-open box [lo_j, hi_j) with exact rational endpoints.
struct Box {
  QVec lo, hi;

  Box() = default;
  Box(QVec l, QVec h);

  size_t dim() const { return lo.size(); }
  Rat side(size_t j) const { return hi[j] - lo[j]; }
  Rat min_side() const;
  Rat max_side() const;
  Rat volume() const;
  QVec center() const;

  bool contains_point(const QVec& x) const;       // half-open membership
  bool contains_box(const Box& o) const;          // closure containment
  bool intersects(const Box& o) const;            // open interiors overlap
  bool operator==(const Box& o) const = default;

  // Concentric dilation by factor c > 0.
  Box dilate(const Rat& c) const;
  // Cartesian product of per-axis factors.
  static Box product(const std::vector<Box>& factors);
  Box slice(size_t from, size_t len) const;  // coordinates [from, from+len)

  std::string str() const;
};

// Squared euclidean distance between boxes (0 if they touch or overlap).
Rat box_dist2(const Box& a, const Box& b);
// l-infinity distance between boxes.
Rat box_dist_inf(const Box& a, const Box& b);
// Squared euclidean diameter: sum of squared sides.
Rat box_diam2(const Box& a);
// l-infinity diameter: max side.
Rat box_diam_inf(const Box& a);

// Cube aligned to the lattice (side * Z)^dim: [c_j*side, (c_j+1)*side).
struct DyadicCube {
  Rat side;
  std::vector<Int> corner;

  DyadicCube() = default;
  DyadicCube(Rat s, std::vector<Int> c) : side(std::move(s)), corner(std::move(c)) {}

  size_t dim() const { return corner.size(); }
  Box box() const;
  QVec center() const;
  Rat volume() const;
  bool contains(const DyadicCube& o) const;  // as point sets
  bool operator==(const DyadicCube& o) const = default;

  std::string str() const;
};

// The lattice cell of side `side` containing x.
DyadicCube cell_of(const QVec& x, const Rat& side);

// Deterministic lexicographic orders, for tie-breaking.
int compare_qvec(const QVec& a, const QVec& b);
int compare_cube(const DyadicCube& a, const DyadicCube& b);  // side desc, then corner lex
int compare_box(const Box& a, const Box& b);

}  // namespace fracrank
