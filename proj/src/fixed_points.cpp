#include "ordhomeo/fixed_points.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "ordhomeo/error.hpp"

namespace ordhomeo
{

namespace
{

// The iterations below all have the shape
//
//   b -> max( C, max_k (u_k + (b - v_k)) ) + inc
//
// where, for b inside a fixed region [lo, hi] of the piece structure, the
// constant C and the pairs (u_k, v_k) do not change. Writing b = lo + eta,
// each u_k + (b - v_k) equals c_k + eta with c_k = u_k + (lo - v_k), so the
// step is eta -> d + eta + inc with d = max c_k - lo. Its k-fold iterate is
// d*k + eta + inc*k, which gives both the limit and the exit step in closed
// form.

enum class Probe { Point, SupImage };

struct Component
{
  PwHomeo const *map;
  Probe probe;
};

struct LocalForm
{
  Ordinal region_lo;
  std::optional<Ordinal> region_hi;
  Ordinal u;
  Ordinal v;
  std::optional<Ordinal> constant;
};

LocalForm local_form(Component const &c, Ordinal const &b)
{
  PwHomeo const &g = *c.map;
  Piece const *p = g.piece_at(b);
  if (!p) {
    LocalForm f{g.is_identity() ? Ordinal() : successor(g.support_bound()),
                std::nullopt, Ordinal(), Ordinal(), std::nullopt};
    if (c.probe == Probe::SupImage && !g.is_identity())
      f.constant = g.support_bound();
    return f;
  }

  LocalForm f{p->source.first(), p->source.hi(), p->target.first(), p->source.first(),
              std::nullopt};
  if (c.probe == Probe::SupImage) {
    for (auto const &q : g.pieces()) {
      if (&q == p)
        break;
      if (!f.constant || q.target.hi() > *f.constant)
        f.constant = q.target.hi();
    }
  }
  return f;
}

Ordinal omega_times(Ordinal const &d)
{ return multiply(d, Ordinal::omega()); }

Ordinal iterate_to_limit(std::vector<Component> const &components, Ordinal b, bool increment)
{
  Ordinal const one = Ordinal::finite(1);

  for (;;) {
    std::vector<LocalForm> forms;
    forms.reserve(components.size());
    for (auto const &c : components)
      forms.push_back(local_form(c, b));

    Ordinal lo;
    std::optional<Ordinal> hi;
    std::optional<Ordinal> constant;
    for (auto const &f : forms) {
      lo = std::max(lo, f.region_lo);
      if (f.region_hi && (!hi || *f.region_hi < *hi))
        hi = f.region_hi;
      if (f.constant && (!constant || *f.constant > *constant))
        constant = f.constant;
    }

    // The identity term b itself contributes c = lo.
    Ordinal top = lo;
    for (auto const &f : forms)
      top = std::max(top, add(f.u, left_subtract(f.v, lo)));

    Ordinal next = add(top, left_subtract(lo, b));
    if (constant && *constant > next)
      next = *constant;
    if (increment)
      next = add(next, one);

    if (!increment && next == b)
      return b;
    if (hi && next > *hi) {
      b = std::move(next);
      continue;
    }

    Ordinal const x = left_subtract(lo, next);
    Ordinal const d = left_subtract(lo, top);
    auto eta = [&](Natural const &k) {
      Ordinal kk = Ordinal::finite(k);
      Ordinal r = add(multiply(d, kk), x);
      return increment ? add(r, kk) : r;
    };

    Ordinal limit_eta;
    if (!increment) {
      if (add(d, x) == x)
        return next;
      limit_eta = omega_times(d);
    } else if (d.is_zero() || x.leading_exponent() > d.leading_exponent()) {
      limit_eta = add(x, Ordinal::omega());
    } else {
      limit_eta = omega_times(d);
    }

    Ordinal limit = add(lo, limit_eta);
    if (!hi || limit <= *hi)
      return limit;

    // The run leaves the region after finitely many steps: find the first
    // k with lo + eta(k) > hi.
    Natural high = 1;
    while (add(lo, eta(high)) <= *hi)
      high *= 2;
    Natural low = high / 2; // lo + eta(low) <= hi, or low == 0
    while (high - low > 1) {
      Natural mid = (low + high) / 2;
      if (add(lo, eta(mid)) <= *hi)
        low = mid;
      else
        high = mid;
    }
    b = add(lo, eta(high));
  }
}

} // namespace

OrdinalSet fixed_points(PwHomeo const &g)
{
  if (g.is_identity())
    return OrdinalSet::everything();

  std::vector<Segment> segs;
  for (auto const &p : g.pieces())
    if (auto start = first_fixed_point(p))
      segs.push_back(Segment{*start, p.source.hi()});
  segs.push_back(Segment{successor(g.support_bound()), std::nullopt});
  return OrdinalSet::from_segments(std::move(segs));
}

OrdinalSet common_fixed_points(std::span<PwHomeo const> gs)
{
  if (gs.empty())
    throw DomainError("common_fixed_points: empty family");
  OrdinalSet acc = fixed_points(gs[0]);
  for (auto const &g : gs.subspan(1))
    acc = acc.intersect(fixed_points(g));
  return acc;
}

Ordinal find_fixed_point_above(std::span<PwHomeo const> gs, Ordinal const &alpha)
{
  if (gs.empty())
    throw DomainError("find_fixed_point_above: empty family");

  std::vector<PwHomeo> inverses;
  inverses.reserve(gs.size());
  for (auto const &g : gs)
    inverses.push_back(inverse(g));

  std::vector<Component> comps;
  for (std::size_t i = 0; i < gs.size(); ++i) {
    comps.push_back({&gs[i], Probe::Point});
    comps.push_back({&inverses[i], Probe::SupImage});
  }
  return iterate_to_limit(comps, alpha, true);
}

Ordinal sup_image(PwHomeo const &g, Ordinal const &alpha)
{
  Ordinal best = alpha > g.support_bound() || g.is_identity() ? alpha : Ordinal();
  for (auto const &p : g.pieces()) {
    if (p.source.first() > alpha)
      break;
    best = std::max(best, p.apply(std::min(alpha, p.source.hi())));
  }
  return best;
}

Ordinal invariant_prefix(PwHomeo const &g, Ordinal const &alpha)
{
  std::vector<Component> comps{{&g, Probe::SupImage}};
  return iterate_to_limit(comps, alpha, false);
}

Ordinal invariant_point(PwHomeo const &g, Ordinal const &alpha)
{
  PwHomeo inv = inverse(g);
  std::vector<Component> comps{{&g, Probe::SupImage}, {&inv, Probe::SupImage}};
  return iterate_to_limit(comps, alpha, false);
}

} // namespace ordhomeo
