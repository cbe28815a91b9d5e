#pragma once

#include "ta/design.hpp"

namespace ta {

/// A block design generated from a projective or affine geometry, tagged
/// with its origin.
struct GeometryDesign {
    enum class Kind { PG, AG };
    Kind kind;
    int n, i, q;
    BlockDesign design;
};

/// Points and i-dimensional subspaces of PG(n, q). Requires 1 <= i < n, n >= 2.
GeometryDesign pg_design(int n, int i, int q);

/// Points and i-dimensional affine subspaces of AG(n, q). Requires 1 <= i < n.
GeometryDesign ag_design(int n, int i, int q);

/// The resolution of AG_{n-1}(n, q) into parallel hyperplane pencils.
/// Requires d to be tagged AG with i = n-1.
Resolution hyperplane_resolution(const GeometryDesign& d);

} // namespace ta
