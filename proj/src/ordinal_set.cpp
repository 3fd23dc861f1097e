#include "ordhomeo/ordinal_set.hpp"

#include <algorithm>

namespace ordhomeo
{

OrdinalSet OrdinalSet::from_segments(std::vector<Segment> segments)
{
  std::erase_if(segments, [](Segment const &s) { return s.hi && *s.hi < s.lo; });
  std::sort(segments.begin(), segments.end(),
            [](Segment const &a, Segment const &b) { return a.lo < b.lo; });

  OrdinalSet out;
  for (auto &s : segments) {
    if (!out._segments.empty()) {
      Segment &last = out._segments.back();
      // merge overlapping or adjacent (next starts at last.hi + 1)
      if (!last.hi || s.lo <= successor(*last.hi)) {
        if (last.hi && (!s.hi || *s.hi > *last.hi))
          last.hi = s.hi;
        continue;
      }
    }
    out._segments.push_back(std::move(s));
  }
  return out;
}

OrdinalSet OrdinalSet::everything()
{ return from_segments({Segment{Ordinal(), std::nullopt}}); }

bool OrdinalSet::contains(Ordinal const &x) const
{
  auto it = std::upper_bound(_segments.begin(), _segments.end(), x,
                             [](Ordinal const &v, Segment const &s) { return v < s.lo; });
  return it != _segments.begin() && std::prev(it)->contains(x);
}

std::optional<Ordinal> OrdinalSet::tail_start() const
{
  if (!has_tail())
    return std::nullopt;
  return _segments.back().lo;
}

std::optional<Ordinal> OrdinalSet::least_at_least(Ordinal const &a) const
{
  for (auto const &s : _segments) {
    if (s.contains(a))
      return a;
    if (s.lo > a)
      return s.lo;
  }
  return std::nullopt;
}

OrdinalSet OrdinalSet::intersect(OrdinalSet const &other) const
{
  std::vector<Segment> out;
  for (auto const &a : _segments) {
    for (auto const &b : other._segments) {
      Ordinal lo = std::max(a.lo, b.lo);
      std::optional<Ordinal> hi;
      if (a.hi && b.hi)
        hi = std::min(*a.hi, *b.hi);
      else
        hi = a.hi ? a.hi : b.hi;
      if (!hi || lo <= *hi)
        out.push_back(Segment{std::move(lo), std::move(hi)});
    }
  }
  return from_segments(std::move(out));
}

bool OrdinalSet::meets_integers_from(Natural const &n) const
{
  Ordinal start = Ordinal::finite(n);
  for (auto const &s : _segments) {
    Ordinal m = std::max(s.lo, start);
    if (m.is_finite() && s.contains(m))
      return true;
  }
  return false;
}

bool OrdinalSet::has_cofinal_integers() const
{
  // Only a segment starting below w and reaching w can hold unboundedly
  // many integers.
  Ordinal const w = Ordinal::omega();
  for (auto const &s : _segments)
    if (s.lo.is_finite() && (!s.hi || *s.hi >= w))
      return true;
  return false;
}

std::string format(OrdinalSet const &s, FormatOptions const &opts)
{
  if (s.empty())
    return "∅";
  std::string out;
  for (auto const &seg : s.segments()) {
    if (!out.empty())
      out += " ∪ ";
    if (!seg.hi) {
      if (seg.lo.is_successor())
        out += "(" + format(predecessor(seg.lo), opts) + ", ∞)";
      else
        out += "[" + format(seg.lo, opts) + ", ∞)";
    } else if (*seg.hi == seg.lo) {
      out += "{" + format(seg.lo, opts) + "}";
    } else {
      out += "[" + format(seg.lo, opts) + ", " + format(*seg.hi, opts) + "]";
    }
  }
  return out;
}

} // namespace ordhomeo
