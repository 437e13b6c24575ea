#pragma once

#include "henig/space.hpp"

#include <functional>

namespace henig {

// Support oracle: returns argmin over the set of <d, y>.
using SupportFn = std::function<Point(const Point& d)>;

SupportFn polytope_support(const Points& V);

// Euclidean distance between two compact convex sets given by support
// oracles (Wolfe min-norm point on the difference set).
HullDistance convex_distance_l2(int dim, const SupportFn& P, const SupportFn& Q,
                                const Point& p0, const Point& q0);

// Polyhedral-norm distance between conv(P) and conv(Q) by linear programming.
HullDistance polytope_distance_lp(Norm n, const Points& P, const Points& Q);

}  // namespace henig
