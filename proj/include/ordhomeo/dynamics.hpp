#ifndef ORDHOMEO_DYNAMICS_HPP
#define ORDHOMEO_DYNAMICS_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ordhomeo/homeo.hpp"
#include "ordhomeo/ordinal.hpp"

namespace ordhomeo
{

/// Send each x_i to y_i while fixing every frozen point.
struct TransitivityProblem
{
  std::vector<std::pair<Ordinal, Ordinal>> pairs;
  std::vector<Ordinal> frozen;
};

/**
 * Builds g with g(x_i) = y_i and g(f) = f for f frozen.
 *
 * Pairs are handled in input order. Isolated points are moved by a
 * transposition; a point of rank a > 0 is moved by exchanging two intervals
 * ]x', x] and ]y', y] of type w^a + 1, whose left ends are raised past every
 * point that must stay put. Throws PreconditionError unless the pairs form a
 * nonempty rank-matched partial injection that leaves the frozen set alone.
 */
PwHomeo make_transitive(TransitivityProblem const &problem);

/// Deterministic point of rank r strictly above `floor`; distinct `seq`
/// values give distinct points.
Ordinal fresh_point(Ordinal const &r, std::size_t seq, Ordinal const &floor);

/// g = u * h * u_prime with u, u_prime fixing every point and h(x_i) =
/// x_sigma(i) on the domain of sigma.
struct RoelckeCertificate
{
  PwHomeo u;
  PwHomeo h;
  PwHomeo u_prime;
  std::vector<std::optional<std::size_t>> sigma; // sigma[i] = j, 0-based
};

/// The h component depends only on `points` and sigma, so over all g it
/// ranges over a family indexed by the partial injections of the points.
RoelckeCertificate roelcke_decompose(PwHomeo const &g, std::span<Ordinal const> points);

struct DenseApproximation
{
  PwHomeo h;     // agrees with g on [0, alpha], identity above
  PwHomeo k;     // pushes every family point above alpha
  Ordinal alpha; // least a > max(targets) with g([0, a]) = [0, a]
};

DenseApproximation dense_approx(PwHomeo const &g, std::span<Ordinal const> targets,
                                std::span<Ordinal const> family);

/// g fixes some integer k with n <= k < w.
bool in_baire_T(PwHomeo const &g, Natural const &n);

/// g composed with the transposition (k, g^-1(k)) for the least integer
/// k >= n avoiding the constraints and their images. Fixes k and agrees
/// with g on the constraints.
PwHomeo baire_density_witness(PwHomeo const &g, Natural const &n,
                              std::span<Ordinal const> constraints);

/// The transposition (n, w + n).
PwHomeo discontinuity_sequence(Natural const &n);

} // namespace ordhomeo

#endif // ORDHOMEO_DYNAMICS_HPP
