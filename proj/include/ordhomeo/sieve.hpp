#ifndef ORDHOMEO_SIEVE_HPP
#define ORDHOMEO_SIEVE_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ordhomeo/ordinal.hpp"

namespace ordhomeo
{

// g(point) must land in `allowed`.
struct Constraint
{
  Ordinal point;
  std::vector<Ordinal> allowed;

  bool operator==(Constraint const &) const = default;
};

struct ConstraintSystem
{
  std::vector<Constraint> constraints;

  bool operator==(ConstraintSystem const &) const = default;
};

struct Normalized
{
  ConstraintSystem system; // sorted by point, allowed sets sorted
  bool unsatisfiable = false;
};

using PartialInjection = std::vector<std::pair<Ordinal, Ordinal>>;

struct FinitePermutation
{
  std::vector<std::vector<Ordinal>> cycles;

  Ordinal apply(Ordinal const &x) const;
  std::vector<Ordinal> support() const;
};

struct Containment
{
  bool holds = false;
  bool vacuous = false; // left side had no solutions
};

struct ChainLimit
{
  ConstraintSystem limit;
  PartialInjection witness;
};

inline constexpr std::size_t kHallBruteLimit = 20;

Normalized normalize(ConstraintSystem const &cs);

std::optional<PartialInjection> satisfiable(ConstraintSystem const &cs);

bool hall_brute(ConstraintSystem const &cs);

bool satisfies(PartialInjection const &h, ConstraintSystem const &cs);

Containment contains(ConstraintSystem const &a, ConstraintSystem const &b);

bool below(ConstraintSystem const &a, ConstraintSystem const &b);

ChainLimit chain_limit(std::span<ConstraintSystem const> chain);

FinitePermutation extend_to_permutation(PartialInjection const &h);

} // namespace ordhomeo

#endif // ORDHOMEO_SIEVE_HPP
