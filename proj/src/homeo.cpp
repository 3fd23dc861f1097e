#include "ordhomeo/homeo.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "ordhomeo/error.hpp"

namespace ordhomeo
{

namespace
{

bool by_source(Piece const &a, Piece const &b)
{ return a.source.first() < b.source.first(); }

bool by_target(Piece const &a, Piece const &b)
{ return a.target.first() < b.target.first(); }

std::string describe(Piece const &p)
{ return format(p.source) + " -> " + format(p.target); }

template<typename Proj>
void check_tiling(std::vector<Piece> const &sorted, Proj proj, char const *what)
{
  Ordinal expect;
  for (auto const &p : sorted) {
    ClopenInterval const &iv = proj(p);
    if (iv.first() != expect) {
      char const *why = iv.first() < expect ? "overlaps the previous one" : "leaves a gap before it";
      throw ValidationError("piece " + describe(p) + ": " + what + " " + why);
    }
    expect = successor(iv.hi());
  }
}

} // namespace

std::optional<Ordinal> first_fixed_point(Piece const &p)
{
  Ordinal const &s = p.source.first();
  Ordinal const &t = p.target.first();
  if (s == t)
    return s;
  // s + xi = t + xi  <=>  xi >= w^(delta + 1)
  Ordinal theta = omega_pow(successor(*diff_exponent(s, t)), SIZE_MAX);
  Ordinal candidate = add(s, theta);
  if (candidate <= p.source.hi())
    return candidate;
  return std::nullopt;
}

std::vector<Piece> canonical_pieces(std::vector<Piece> pieces)
{
  std::sort(pieces.begin(), pieces.end(), by_source);

  std::vector<Piece> merged;
  for (auto &p : pieces) {
    if (!merged.empty()) {
      Piece &last = merged.back();
      if (p.target.first() == successor(last.target.hi())) {
        last = Piece{ClopenInterval::closed(last.source.first(), p.source.hi()),
                     ClopenInterval::closed(last.target.first(), p.target.hi())};
        continue;
      }
    }
    merged.push_back(std::move(p));
  }

  while (!merged.empty() && merged.back().is_identity())
    merged.pop_back();

  // A last piece ending on the diagonal fixes a final segment [p, beta] of
  // its source; the map is the identity above p, so cut there.
  if (!merged.empty() && merged.back().target.hi() == merged.back().source.hi()) {
    Piece &last = merged.back();
    if (auto p = first_fixed_point(last); p && *p < last.source.hi()) {
      last = Piece{ClopenInterval::closed(last.source.first(), *p),
                   ClopenInterval::closed(last.target.first(), *p)};
    }
  }
  return merged;
}

PwHomeo from_tiling(std::vector<Piece> pieces)
{
  PwHomeo g;
  g._pieces = canonical_pieces(std::move(pieces));
  g._bound = g._pieces.empty() ? Ordinal() : g._pieces.back().source.hi();
  return g;
}

PwHomeo PwHomeo::build(std::vector<Piece> pieces)
{
  for (auto const &p : pieces) {
    Ordinal a = p.source.order_type();
    Ordinal b = p.target.order_type();
    if (a != b)
      throw ValidationError("piece " + describe(p) + ": order types differ (" +
                            format(a) + " vs " + format(b) + ")");
  }

  std::sort(pieces.begin(), pieces.end(), by_source);
  check_tiling(pieces, [](Piece const &p) -> ClopenInterval const & { return p.source; },
               "source");

  std::vector<Piece> by_tgt = pieces;
  std::sort(by_tgt.begin(), by_tgt.end(), by_target);
  check_tiling(by_tgt, [](Piece const &p) -> ClopenInterval const & { return p.target; },
               "target");

  if (!pieces.empty() && pieces.back().source.hi() != by_tgt.back().target.hi())
    throw ValidationError("piece " + describe(by_tgt.back()) +
                          ": targets do not tile the same segment as sources");

  return from_tiling(std::move(pieces));
}

Piece const *PwHomeo::piece_at(Ordinal const &x) const
{
  auto it = std::lower_bound(_pieces.begin(), _pieces.end(), x,
                             [](Piece const &p, Ordinal const &v) { return p.source.hi() < v; });
  return it == _pieces.end() ? nullptr : &*it;
}

Ordinal PwHomeo::apply(Ordinal const &x) const
{
  Piece const *p = piece_at(x);
  return p ? p->apply(x) : x;
}

PwHomeo compose(PwHomeo const &g, PwHomeo const &h)
{
  if (g.is_identity())
    return h;
  if (h.is_identity())
    return g;

  Ordinal bound = std::max(g.support_bound(), h.support_bound());

  auto extended = [&bound](PwHomeo const &m) {
    std::vector<Piece> out(m.pieces().begin(), m.pieces().end());
    if (m.support_bound() < bound) {
      auto filler = ClopenInterval::left_open(m.support_bound(), bound);
      out.push_back(Piece{filler, filler});
    }
    return out;
  };
  std::vector<Piece> const gp = extended(g);
  std::vector<Piece> const hp = extended(h);

  std::vector<Piece> out;
  for (auto const &p : hp) {
    Ordinal const &lo = p.target.first();
    Ordinal const &hi = p.target.hi();
    auto it = std::lower_bound(gp.begin(), gp.end(), lo,
                               [](Piece const &q, Ordinal const &v) { return q.source.hi() < v; });
    for (; it != gp.end() && it->source.first() <= hi; ++it) {
      Ordinal a = std::max(lo, it->source.first());
      Ordinal b = std::min(hi, it->source.hi());
      out.push_back(Piece{ClopenInterval::closed(p.unapply(a), p.unapply(b)),
                          ClopenInterval::closed(it->apply(a), it->apply(b))});
    }
  }
  return from_tiling(std::move(out));
}

PwHomeo inverse(PwHomeo const &g)
{
  std::vector<Piece> out;
  out.reserve(g.pieces().size());
  for (auto const &p : g.pieces())
    out.push_back(Piece{p.target, p.source});
  return from_tiling(std::move(out));
}

bool equal(PwHomeo const &g, PwHomeo const &h)
{ return g == h; }

std::optional<std::size_t> order_of(PwHomeo const &g, std::size_t cap)
{
  PwHomeo power = g;
  std::size_t n = 1;
  while (!power.is_identity()) {
    if (n >= cap)
      return std::nullopt;
    power = compose(g, power);
    ++n;
  }
  return n;
}

PwHomeo interval_swap(ClopenInterval const &i, ClopenInterval const &j)
{
  if (i.first() <= j.hi() && j.first() <= i.hi())
    throw DomainError("interval_swap: " + format(i) + " and " + format(j) + " overlap");
  if (i.order_type() != j.order_type())
    throw DomainError("interval_swap: order types differ (" + format(i.order_type()) +
                      " vs " + format(j.order_type()) + ")");

  ClopenInterval const &a = i.first() < j.first() ? i : j;
  ClopenInterval const &b = i.first() < j.first() ? j : i;

  std::vector<Piece> pieces{Piece{a, b}, Piece{b, a}};
  if (!a.is_initial()) {
    auto below = ClopenInterval::initial(a.lo());
    pieces.push_back(Piece{below, below});
  }
  if (a.hi() < b.lo()) {
    auto between = ClopenInterval::left_open(a.hi(), b.lo());
    pieces.push_back(Piece{between, between});
  }
  return from_tiling(std::move(pieces));
}

PwHomeo swap_points(Ordinal const &x, Ordinal const &y)
{
  if (x == y)
    throw DomainError("swap_points: points coincide");
  if (x.is_limit() || y.is_limit())
    throw DomainError("swap_points: " + format(x) + " and " + format(y) +
                      " must both be isolated");
  return interval_swap(ClopenInterval::closed(x, x), ClopenInterval::closed(y, y));
}

PwHomeo restrict_to_prefix(PwHomeo const &g, Ordinal const &alpha)
{
  if (alpha >= g.support_bound())
    return g;

  std::vector<Piece> out;
  for (auto const &p : g.pieces()) {
    if (p.source.first() > alpha)
      break;
    if (p.source.hi() <= alpha) {
      out.push_back(p);
    } else {
      out.push_back(Piece{ClopenInterval::closed(p.source.first(), alpha),
                          ClopenInterval::closed(p.target.first(), p.apply(alpha))});
    }
  }
  try {
    return PwHomeo::build(std::move(out));
  } catch (ValidationError const &) {
    throw DomainError("restrict_to_prefix: [0, " + format(alpha) + "] is not invariant");
  }
}

} // namespace ordhomeo
