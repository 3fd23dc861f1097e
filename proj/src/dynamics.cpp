#include "ordhomeo/dynamics.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include "ordhomeo/error.hpp"
#include "ordhomeo/fixed_points.hpp"

namespace ordhomeo
{

namespace
{

std::string pair_text(std::size_t i, Ordinal const &x, Ordinal const &y)
{ return "pair " + std::to_string(i + 1) + " (" + format(x) + " -> " + format(y) + ")"; }

void validate(TransitivityProblem const &p)
{
  if (p.pairs.empty())
    throw PreconditionError("make_transitive: no pairs given");
  std::set<Ordinal> xs;
  std::set<Ordinal> ys;
  std::set<Ordinal> frozen(p.frozen.begin(), p.frozen.end());
  for (std::size_t i = 0; i < p.pairs.size(); ++i) {
    auto const &[x, y] = p.pairs[i];
    if (!xs.insert(x).second)
      throw PreconditionError(pair_text(i, x, y) + ": source repeated");
    if (!ys.insert(y).second)
      throw PreconditionError(pair_text(i, x, y) + ": target repeated");
    if (rank(x) != rank(y))
      throw PreconditionError(pair_text(i, x, y) + ": ranks differ (" + format(rank(x)) +
                              " vs " + format(rank(y)) + ")");
    if (x != y && (frozen.count(x) || frozen.count(y)))
      throw PreconditionError(pair_text(i, x, y) + ": collides with a frozen point");
  }
}

Ordinal max_below(std::set<Ordinal> const &obstacles, Ordinal const &bound, Ordinal floor)
{
  auto it = obstacles.lower_bound(bound);
  if (it != obstacles.begin())
    floor = std::max(floor, *std::prev(it));
  return floor;
}

// Exchange the points p != y of rank r > 0 via two disjoint intervals of
// type w^r + 1 ending at them, avoiding all obstacles.
PwHomeo block_swap(Ordinal const &p, Ordinal const &y, std::set<Ordinal> const &obstacles)
{
  Ordinal const &a = std::min(p, y);
  Ordinal const &b = std::max(p, y);
  Ordinal a_left = max_below(obstacles, a, isolating_left_endpoint(a));
  Ordinal b_left = max_below(obstacles, b, std::max(isolating_left_endpoint(b), a));
  return interval_swap(ClopenInterval::left_open(a_left, a),
                       ClopenInterval::left_open(b_left, b));
}

} // namespace

PwHomeo make_transitive(TransitivityProblem const &problem)
{
  validate(problem);

  std::size_t const n = problem.pairs.size();
  std::vector<Ordinal> pos(n);
  for (std::size_t i = 0; i < n; ++i)
    pos[i] = problem.pairs[i].first;
  std::set<Ordinal> placed(problem.frozen.begin(), problem.frozen.end());

  PwHomeo g;
  for (std::size_t i = 0; i < n; ++i) {
    Ordinal const &y = problem.pairs[i].second;
    if (pos[i] != y) {
      PwHomeo move;
      if (rank(y).is_zero()) {
        move = swap_points(pos[i], y);
      } else {
        std::set<Ordinal> obstacles = placed;
        for (std::size_t j = i + 1; j < n; ++j)
          obstacles.insert(pos[j]);
        obstacles.erase(pos[i]);
        obstacles.erase(y);
        move = block_swap(pos[i], y, obstacles);
      }
      g = compose(move, g);
      for (std::size_t j = i + 1; j < n; ++j)
        pos[j] = move.apply(pos[j]);
    }
    placed.insert(y);
  }

  for (std::size_t i = 0; i < n; ++i)
    if (g.apply(problem.pairs[i].first) != problem.pairs[i].second)
      throw ContractError("make_transitive: " + pair_text(i, problem.pairs[i].first,
                                                          problem.pairs[i].second) +
                          " not satisfied");
  for (auto const &f : problem.frozen)
    if (g.apply(f) != f)
      throw ContractError("make_transitive: frozen point " + format(f) + " moved");
  return g;
}

Ordinal fresh_point(Ordinal const &r, std::size_t seq, Ordinal const &floor)
{
  Ordinal step = successor(r);
  Ordinal base = add(truncate_below(floor, step), omega_pow(step, SIZE_MAX));
  return add(base, multiply(omega_pow(r, SIZE_MAX), Ordinal::finite(seq + 1)));
}

RoelckeCertificate roelcke_decompose(PwHomeo const &g, std::span<Ordinal const> points)
{
  std::set<Ordinal> distinct(points.begin(), points.end());
  if (distinct.size() != points.size())
    throw PreconditionError("roelcke_decompose: points must be distinct");

  std::size_t const n = points.size();
  Ordinal const floor = distinct.empty() ? Ordinal() : *distinct.rbegin();

  RoelckeCertificate cert;
  cert.sigma.assign(n, std::nullopt);
  std::vector<Ordinal> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    image[i] = g.apply(points[i]);
    auto it = std::find(points.begin(), points.end(), image[i]);
    if (it != points.end())
      cert.sigma[i] = static_cast<std::size_t>(it - points.begin());
  }

  TransitivityProblem hp;
  for (std::size_t i = 0; i < n; ++i) {
    Ordinal to = cert.sigma[i] ? points[*cert.sigma[i]] : fresh_point(rank(points[i]), i, floor);
    hp.pairs.emplace_back(points[i], std::move(to));
  }
  if (!hp.pairs.empty())
    cert.h = make_transitive(hp);

  TransitivityProblem up;
  up.frozen.assign(points.begin(), points.end());
  for (std::size_t i = 0; i < n; ++i)
    if (!cert.sigma[i])
      up.pairs.emplace_back(hp.pairs[i].second, image[i]);
  if (!up.pairs.empty())
    cert.u = make_transitive(up);

  PwHomeo w = compose(inverse(g), compose(cert.u, cert.h));
  for (auto const &x : points)
    if (w.apply(x) != x)
      throw ContractError("roelcke_decompose: correction term moves " + format(x));
  cert.u_prime = inverse(w);
  return cert;
}

DenseApproximation dense_approx(PwHomeo const &g, std::span<Ordinal const> targets,
                                std::span<Ordinal const> family)
{
  Ordinal start = Ordinal::finite(1);
  if (!targets.empty())
    start = successor(*std::max_element(targets.begin(), targets.end()));

  DenseApproximation out;
  out.alpha = invariant_point(g, start);
  out.h = restrict_to_prefix(g, out.alpha);

  std::set<Ordinal> members(family.begin(), family.end());
  Ordinal floor = out.alpha;
  if (!members.empty())
    floor = std::max(floor, *members.rbegin());

  TransitivityProblem kp;
  std::size_t seq = 0;
  for (auto const &f : members)
    kp.pairs.emplace_back(f, fresh_point(rank(f), seq++, floor));
  if (!kp.pairs.empty())
    out.k = make_transitive(kp);
  return out;
}

bool in_baire_T(PwHomeo const &g, Natural const &n)
{
  if (n < 1)
    throw DomainError("in_baire_T: n must be positive");
  return fixed_points(g).meets_integers_from(n);
}

PwHomeo baire_density_witness(PwHomeo const &g, Natural const &n,
                              std::span<Ordinal const> constraints)
{
  if (n < 1)
    throw DomainError("baire_density_witness: n must be positive");

  std::set<Ordinal> avoid(constraints.begin(), constraints.end());
  for (auto const &c : constraints)
    avoid.insert(g.apply(c));

  Ordinal k = Ordinal::finite(n);
  while (avoid.count(k))
    k = successor(k);

  Ordinal pre = inverse(g).apply(k);
  if (pre.is_limit())
    throw ContractError("baire_density_witness: preimage of " + format(k) + " is not isolated");
  if (pre == k)
    return g;
  return compose(g, swap_points(k, pre));
}

PwHomeo discontinuity_sequence(Natural const &n)
{
  if (n < 1)
    throw DomainError("discontinuity_sequence: n must be positive");
  Ordinal x = Ordinal::finite(n);
  return swap_points(x, add(Ordinal::omega(), x));
}

} // namespace ordhomeo
