#pragma once

// Brute-force reference implementations for tests and fuzzing. They share
// only the basic Point arithmetic with the production code.

#include <cstdint>
#include <optional>
#include <vector>

#include "jordan/curve.hpp"
#include "jordan/geom.hpp"
#include "jordan/simplifier.hpp"

namespace jordan::oracle {

/// Sum of signed turning angles of the polygon around p, rounded. Throws
/// InvalidArgument when p lies within tau of the boundary.
int winding_number(const ParamPolygon& poly, Point p, Tolerance tau = Tolerance{});

struct GridSpec {
  double h = 0.0;
  Point min;
  Point max;
};

/// Grid of cell size h over the polygon's bounding box grown by 2h.
GridSpec make_grid(const ParamPolygon& poly, double h);

/// 4-neighbour BFS over cells whose centers are inside the polygon and farther
/// than eps from it. The path is A, the visited cell centers, then B; none when
/// A's or B's cell is blocked or the cells are not connected.
/// Throws InvalidArgument unless 0 < h <= eps / 4 and the box has a 2h margin.
std::optional<PathPolyline> grid_path(const SimplePolygon& poly, double eps, Point a, Point b, const GridSpec& grid);

/// Free-cell mask of grid_path, row-major from grid.min. Cells near a side
/// are found by testing every cell in the side's eps-box; the exhaustive
/// variant checks every cell against every side.
std::vector<std::uint8_t> free_cells(const SimplePolygon& poly, double eps, const GridSpec& grid,
                                     bool exhaustive = false);
std::size_t grid_columns(const GridSpec& grid);
std::size_t grid_rows(const GridSpec& grid);

/// Every illegal intersection, found by testing all pairs of sides, sorted.
std::vector<IllegalIntersection> naive_self_intersections(const ParamPolygon& poly, Tolerance tau = Tolerance{});

}  // namespace jordan::oracle
