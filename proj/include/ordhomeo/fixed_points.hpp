#ifndef ORDHOMEO_FIXED_POINTS_HPP
#define ORDHOMEO_FIXED_POINTS_HPP

#include <span>

#include "ordhomeo/homeo.hpp"
#include "ordhomeo/ordinal_set.hpp"

namespace ordhomeo
{

/// Exact fixed-point set of g. Always closed and always contains a final ray.
OrdinalSet fixed_points(PwHomeo const &g);

/// Intersection of the fixed-point sets. Throws DomainError on an empty family.
OrdinalSet common_fixed_points(std::span<PwHomeo const> gs);

/**
 * Limit of the iteration
 *
 *   b_0 = alpha,
 *   b_{n+1} = max over g of ( b_n, g(b_n), sup g^-1([0, b_n]) ) + 1,
 *
 * which is a common fixed point of the family strictly above alpha. Runs of
 * the iteration that stay inside one region of the piece structure are
 * summed in closed form, so the limit is exact even when it lies below the
 * support bounds. Throws DomainError on an empty family.
 */
Ordinal find_fixed_point_above(std::span<PwHomeo const> gs, Ordinal const &alpha);

/// max g([0, alpha])
Ordinal sup_image(PwHomeo const &g, Ordinal const &alpha);

/// Least a >= alpha with g([0, a]) contained in [0, a].
Ordinal invariant_prefix(PwHomeo const &g, Ordinal const &alpha);

/// Least a >= alpha with g([0, a]) = [0, a].
Ordinal invariant_point(PwHomeo const &g, Ordinal const &alpha);

} // namespace ordhomeo

#endif // ORDHOMEO_FIXED_POINTS_HPP
