#ifndef ORDHOMEO_ORDINAL_SET_HPP
#define ORDHOMEO_ORDINAL_SET_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ordhomeo/ordinal.hpp"

namespace ordhomeo
{

/// Closed interval [lo, hi]; an empty `hi` means the closed ray [lo, oo).
struct Segment
{
  Ordinal lo;
  std::optional<Ordinal> hi;

  bool contains(Ordinal const &x) const { return lo <= x && (!hi || x <= *hi); }

  friend bool operator==(Segment const &, Segment const &) = default;
};

/**
 * A finite union of closed intervals, optionally ending in an unbounded
 * closed ray. Segments are kept sorted with a gap between neighbours, so the
 * representation is unique.
 */
class OrdinalSet
{
public:
  OrdinalSet() = default;

  static OrdinalSet from_segments(std::vector<Segment> segments);
  static OrdinalSet everything();

  std::span<Segment const> segments() const { return _segments; }

  bool empty() const { return _segments.empty(); }
  bool contains(Ordinal const &x) const;

  bool has_tail() const { return !_segments.empty() && !_segments.back().hi; }

  /// Least element of the unbounded ray, if any.
  std::optional<Ordinal> tail_start() const;

  /// Least member that is >= a.
  std::optional<Ordinal> least_at_least(Ordinal const &a) const;

  OrdinalSet intersect(OrdinalSet const &other) const;

  /// Whether some integer k with n <= k < w is a member.
  bool meets_integers_from(Natural const &n) const;

  /// Whether the members below w are unbounded in w.
  bool has_cofinal_integers() const;

  friend bool operator==(OrdinalSet const &, OrdinalSet const &) = default;

private:
  std::vector<Segment> _segments;
};

/// E.g. "{0} ∪ [w, w*2] ∪ (w^2, ∞)".
std::string format(OrdinalSet const &s, FormatOptions const &opts = {});

} // namespace ordhomeo

#endif // ORDHOMEO_ORDINAL_SET_HPP
