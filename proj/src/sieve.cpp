#include "ordhomeo/sieve.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>

#include "ordhomeo/error.hpp"

namespace ordhomeo
{

namespace
{

std::vector<Ordinal> sorted_unique(std::vector<Ordinal> v)
{
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::vector<Ordinal> meet(std::vector<Ordinal> const &a, std::vector<Ordinal> const &b)
{
  std::vector<Ordinal> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Matcher
{
public:
  explicit Matcher(ConstraintSystem const &cs) : _cs(cs)
  {
    std::map<Ordinal, std::size_t> index;
    for (auto const &c : cs.constraints) {
      std::vector<std::size_t> row;
      for (auto const &v : c.allowed) {
        auto [it, fresh] = index.emplace(v, _values.size());
        if (fresh)
          _values.push_back(v);
        row.push_back(it->second);
      }
      _adj.push_back(std::move(row));
    }
    _owner.assign(_values.size(), SIZE_MAX);
  }

  std::optional<PartialInjection> run()
  {
    for (std::size_t i = 0; i < _adj.size(); ++i) {
      _seen.assign(_values.size(), false);
      if (!augment(i))
        return std::nullopt;
    }
    std::vector<std::size_t> assigned(_adj.size());
    for (std::size_t v = 0; v < _owner.size(); ++v)
      if (_owner[v] != SIZE_MAX)
        assigned[_owner[v]] = v;
    PartialInjection h;
    for (std::size_t i = 0; i < _adj.size(); ++i)
      h.emplace_back(_cs.constraints[i].point, _values[assigned[i]]);
    return h;
  }

private:
  bool augment(std::size_t i)
  {
    for (std::size_t v : _adj[i]) {
      if (_seen[v])
        continue;
      _seen[v] = true;
      if (_owner[v] == SIZE_MAX || augment(_owner[v])) {
        _owner[v] = i;
        return true;
      }
    }
    return false;
  }

  ConstraintSystem const &_cs;
  std::vector<Ordinal> _values;
  std::vector<std::vector<std::size_t>> _adj;
  std::vector<std::size_t> _owner;
  std::vector<bool> _seen;
};

void require_injection(PartialInjection const &h)
{
  std::set<Ordinal> from;
  std::set<Ordinal> to;
  for (auto const &[x, y] : h) {
    if (!from.insert(x).second)
      throw PreconditionError("partial injection: " + format(x) + " mapped twice");
    if (!to.insert(y).second)
      throw PreconditionError("partial injection: " + format(y) + " hit twice");
  }
}

} // namespace

Ordinal FinitePermutation::apply(Ordinal const &x) const
{
  for (auto const &c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] == x)
        return c[(i + 1) % c.size()];
  return x;
}

std::vector<Ordinal> FinitePermutation::support() const
{
  std::vector<Ordinal> out;
  for (auto const &c : cycles)
    out.insert(out.end(), c.begin(), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

Normalized normalize(ConstraintSystem const &cs)
{
  std::map<Ordinal, std::vector<Ordinal>> merged;
  for (auto const &c : cs.constraints) {
    auto allowed = sorted_unique(c.allowed);
    auto [it, fresh] = merged.emplace(c.point, allowed);
    if (!fresh)
      it->second = meet(it->second, allowed);
  }

  Normalized out;
  for (auto &[point, allowed] : merged) {
    if (allowed.empty())
      out.unsatisfiable = true;
    out.system.constraints.push_back(Constraint{point, std::move(allowed)});
  }
  return out;
}

std::optional<PartialInjection> satisfiable(ConstraintSystem const &cs)
{
  Normalized n = normalize(cs);
  if (n.unsatisfiable)
    return std::nullopt;
  return Matcher(n.system).run();
}

bool hall_brute(ConstraintSystem const &cs)
{
  Normalized n = normalize(cs);
  auto const &rows = n.system.constraints;
  if (rows.size() > kHallBruteLimit)
    throw ResourceError("hall_brute: " + std::to_string(rows.size()) + " points exceed the limit of " +
                        std::to_string(kHallBruteLimit));

  std::uint32_t const subsets = std::uint32_t{1} << rows.size();
  for (std::uint32_t mask = 1; mask < subsets; ++mask) {
    std::set<Ordinal> image;
    std::size_t count = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (mask & (std::uint32_t{1} << i)) {
        ++count;
        image.insert(rows[i].allowed.begin(), rows[i].allowed.end());
      }
    }
    if (image.size() < count)
      return false;
  }
  return true;
}

bool satisfies(PartialInjection const &h, ConstraintSystem const &cs)
{
  std::map<Ordinal, Ordinal> m(h.begin(), h.end());
  for (auto const &c : cs.constraints) {
    auto it = m.find(c.point);
    if (it == m.end())
      return false;
    if (std::find(c.allowed.begin(), c.allowed.end(), it->second) == c.allowed.end())
      return false;
  }
  return true;
}

Containment contains(ConstraintSystem const &a, ConstraintSystem const &b)
{
  if (!satisfiable(a))
    return Containment{true, true};

  Normalized na = normalize(a);
  std::map<Ordinal, std::vector<Ordinal> const *> lookup;
  for (auto const &c : na.system.constraints)
    lookup.emplace(c.point, &c.allowed);

  for (auto const &c : b.constraints) {
    auto it = lookup.find(c.point);
    if (it == lookup.end())
      return Containment{false, false};
    auto want = sorted_unique(c.allowed);
    if (!std::includes(want.begin(), want.end(), it->second->begin(), it->second->end()))
      return Containment{false, false};
  }
  return Containment{true, false};
}

bool below(ConstraintSystem const &a, ConstraintSystem const &b)
{
  if (!satisfiable(a) || !satisfiable(b))
    throw PreconditionError("below: both systems must be satisfiable");
  return contains(a, b).holds;
}

ChainLimit chain_limit(std::span<ConstraintSystem const> chain)
{
  if (chain.empty())
    throw PreconditionError("chain_limit: empty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!satisfiable(chain[i]))
      throw PreconditionError("chain_limit: member " + std::to_string(i + 1) + " is unsatisfiable");
    if (i > 0 && !contains(chain[i], chain[i - 1]).holds)
      throw PreconditionError("chain_limit: member " + std::to_string(i + 1) +
                              " is not below member " + std::to_string(i));
  }

  ConstraintSystem all;
  for (auto const &cs : chain)
    all.constraints.insert(all.constraints.end(), cs.constraints.begin(), cs.constraints.end());
  Normalized n = normalize(all);

  auto witness = satisfiable(n.system);
  if (!witness)
    throw ContractError("chain_limit: limit system has no solution");
  for (std::size_t i = 0; i < chain.size(); ++i)
    if (!satisfies(*witness, chain[i]))
      throw ContractError("chain_limit: witness fails member " + std::to_string(i + 1));
  return ChainLimit{std::move(n.system), std::move(*witness)};
}

FinitePermutation extend_to_permutation(PartialInjection const &h)
{
  require_injection(h);

  std::map<Ordinal, Ordinal> next;
  std::set<Ordinal> hit;
  for (auto const &[x, y] : h) {
    if (x == y)
      continue;
    next.emplace(x, y);
    hit.insert(y);
  }

  FinitePermutation out;
  std::set<Ordinal> done;
  auto trace = [&](Ordinal const &start) {
    std::vector<Ordinal> cycle{start};
    done.insert(start);
    for (auto it = next.find(start); it != next.end() && it->second != start;
         it = next.find(it->second)) {
      cycle.push_back(it->second);
      done.insert(it->second);
    }
    out.cycles.push_back(std::move(cycle));
  };

  // Open chains first start where nothing maps in, then the closed cycles.
  for (auto const &[x, y] : next)
    if (!hit.count(x))
      trace(x);
  for (auto const &[x, y] : next)
    if (!done.count(x))
      trace(x);

  std::sort(out.cycles.begin(), out.cycles.end(),
            [](auto const &a, auto const &b) { return a.front() < b.front(); });
  return out;
}

} // namespace ordhomeo
