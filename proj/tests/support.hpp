#ifndef ORDHOMEO_TESTS_SUPPORT_HPP
#define ORDHOMEO_TESTS_SUPPORT_HPP

// Shared generators and independent oracles for the test binaries.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "ordhomeo/dynamics.hpp"
#include "ordhomeo/fixed_points.hpp"
#include "ordhomeo/homeo.hpp"
#include "ordhomeo/ordinal.hpp"
#include "ordhomeo/sieve.hpp"

namespace support
{

using namespace ordhomeo;

inline Ordinal O(std::string const &text) { return parse_ordinal(text); }
inline Ordinal N(long n) { return Ordinal::finite(n); }
inline Ordinal W() { return Ordinal::omega(); }

/// w^2*a + w*b + c
inline Ordinal cnf3(long a, long b, long c)
{
  return add(add(multiply(omega_pow(N(2)), N(a)), multiply(W(), N(b))), N(c));
}

/// Every w^2*a + w*b + c with a, b, c <= m.
inline std::vector<Ordinal> grid(long m = 6)
{
  std::vector<Ordinal> out;
  for (long a = 0; a <= m; ++a)
    for (long b = 0; b <= m; ++b)
      for (long c = 0; c <= m; ++c)
        out.push_back(cnf3(a, b, c));
  return out;
}

// Ordinals below w^2 as pairs (p, q) = w*p + q, with closed-form arithmetic
// written independently of the CNF kernel.
struct Pair
{
  long p;
  long q;

  Ordinal ordinal() const { return add(multiply(W(), N(p)), N(q)); }

  friend bool operator==(Pair const &, Pair const &) = default;
  friend bool operator<(Pair const &a, Pair const &b)
  { return a.p != b.p ? a.p < b.p : a.q < b.q; }
};

inline Pair pair_add(Pair a, Pair b)
{ return b.p > 0 ? Pair{a.p + b.p, b.q} : Pair{a.p, a.q + b.q}; }

/// a - b on the left, i.e. x with a + x = b; requires a <= b.
inline Pair pair_left_subtract(Pair a, Pair b)
{ return a.p == b.p ? Pair{0, b.q - a.q} : Pair{b.p - a.p, b.q}; }

/// Product when it stays below w^2.
inline std::optional<Pair> pair_multiply(Pair a, Pair b)
{
  bool const a_zero = a.p == 0 && a.q == 0;
  if (a_zero || (b.p == 0 && b.q == 0))
    return Pair{0, 0};
  if (b.p == 0) // a * n
    return a.p > 0 ? Pair{a.p * b.q, a.q} : Pair{0, a.q * b.q};
  if (a.p > 0)
    return std::nullopt; // at least w^2
  // finite a > 0 times w*p + q
  return Pair{b.p, a.q * b.q};
}

/// Any product of two pairs, allowing results up to w^3.
inline Ordinal pair_multiply_any(Pair a, Pair b)
{
  if (auto m = pair_multiply(a, b))
    return m->ordinal();
  // (w*p + q) * (w*p' + q') = w^2*p' + w*p*q' + q  when q' > 0
  return b.q > 0 ? cnf3(b.p, a.p * b.q, a.q) : cnf3(b.p, 0, 0);
}

class Gen
{
public:
  explicit Gen(std::uint64_t seed) : _rng(seed) {}

  long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(_rng); }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64 &rng() { return _rng; }

  /// General ordinal with exponents nested up to `depth` levels.
  Ordinal ordinal(int depth = 2, long max_coef = 5)
  {
    if (depth == 0)
      return N(uniform(0, max_coef));
    std::set<Ordinal> exps;
    long terms = uniform(0, 3);
    for (long i = 0; i < terms; ++i)
      exps.insert(ordinal(depth - 1, 2));
    std::vector<Term> ts;
    for (auto it = exps.rbegin(); it != exps.rend(); ++it)
      ts.push_back(Term{*it, Natural(uniform(1, max_coef))});
    return Ordinal::from_terms(std::move(ts));
  }

  Ordinal below_w3(long max_coef = 3) { return cnf3(uniform(0, max_coef), uniform(0, max_coef), uniform(0, max_coef)); }

  Ordinal isolated_below_w3(long max_coef = 3)
  {
    Ordinal x = below_w3(max_coef);
    return x.is_limit() ? successor(x) : x;
  }

  /// A point of rank r: w^(r+2)*a + w^(r+1)*b + w^r*c with c >= 1.
  Ordinal of_rank(long r, long max_coef = 3)
  {
    Ordinal x;
    for (long e = r + 2; e > r; --e)
      x = add(x, multiply(omega_pow(N(e)), N(uniform(0, max_coef))));
    return add(x, multiply(omega_pow(N(r)), N(uniform(1, max_coef))));
  }

  /// Exchange of two disjoint intervals of the same order type below w^3.
  PwHomeo random_interval_swap(long max_coef = 2)
  {
    for (;;) {
      Ordinal a = below_w3(max_coef);
      Ordinal b = below_w3(max_coef);
      if (a >= b)
        continue;
      auto i = ClopenInterval::left_open(a, b);
      Ordinal t = i.order_type();
      Ordinal f = successor(add(b, below_w3(max_coef)));
      auto j = ClopenInterval::closed(f, predecessor(add(f, t)));
      return coin() ? interval_swap(i, j) : interval_swap(j, i);
    }
  }

  PwHomeo random_transposition(long max_coef = 3)
  {
    for (;;) {
      Ordinal x = isolated_below_w3(max_coef);
      Ordinal y = isolated_below_w3(max_coef);
      if (x != y)
        return swap_points(x, y);
    }
  }

  /// Product of a few swaps, supported below w^3.
  PwHomeo map(int max_moves = 3)
  {
    PwHomeo g;
    long moves = uniform(0, max_moves);
    for (long i = 0; i < moves; ++i)
      g = compose(coin() ? random_interval_swap() : random_transposition(), g);
    return g;
  }

  ConstraintSystem constraints(long points, long values, long max_allowed)
  {
    ConstraintSystem cs;
    for (long i = 0; i < points; ++i) {
      Constraint c{N(i), {}};
      long k = uniform(1, max_allowed);
      for (long j = 0; j < k; ++j)
        c.allowed.push_back(N(uniform(0, values - 1)));
      std::sort(c.allowed.begin(), c.allowed.end());
      c.allowed.erase(std::unique(c.allowed.begin(), c.allowed.end()), c.allowed.end());
      cs.constraints.push_back(std::move(c));
    }
    return cs;
  }

private:
  std::mt19937_64 _rng;
};

/// Rank-matched problem with up to five pairs of rank <= max_rank and up to
/// five frozen points, none of them moved.
inline TransitivityProblem random_problem(Gen &gen, long max_rank = 2)
{
  TransitivityProblem p;
  std::set<Ordinal> used;
  auto fresh = [&](long r) {
    for (;;) {
      Ordinal x = gen.of_rank(r);
      if (used.insert(x).second)
        return x;
    }
  };
  long pairs = gen.uniform(1, 5);
  std::set<Ordinal> xs, ys;
  for (long i = 0; i < pairs; ++i) {
    long r = gen.uniform(0, max_rank);
    // Sources and targets may overlap each other, as in a permutation.
    Ordinal x = gen.coin() && !ys.empty() && rank(*ys.begin()) == N(r) && !xs.count(*ys.begin())
                  ? *ys.begin()
                  : fresh(r);
    Ordinal y = gen.uniform(0, 4) == 0 ? x : fresh(r);
    if (xs.count(x) || ys.count(y))
      continue;
    xs.insert(x);
    ys.insert(y);
    used.insert(x);
    p.pairs.emplace_back(x, y);
  }
  for (long i = gen.uniform(0, 5); i > 0; --i) {
    Ordinal f = fresh(gen.uniform(0, max_rank));
    p.frozen.push_back(f);
  }
  return p;
}

/// Largest x with g(x) <= b, read off the pieces of g through their
/// inverse isomorphisms.
inline Ordinal sup_preimage(PwHomeo const &g, Ordinal const &b)
{
  Ordinal best = b > g.support_bound() || g.is_identity() ? b : Ordinal();
  for (auto const &p : g.pieces())
    if (p.target.first() <= b)
      best = std::max(best, p.unapply(std::min(b, p.target.hi())));
  return best;
}

/// The literal iteration b -> max(b, g(b), sup g^-1[0, b]) + 1 over a family,
/// for a bounded number of steps, without any acceleration.
inline std::vector<Ordinal> plain_iteration(std::vector<PwHomeo> const &gs, Ordinal alpha, int steps)
{
  std::vector<Ordinal> seq{alpha};
  Ordinal b = alpha;
  for (int i = 0; i < steps; ++i) {
    Ordinal next = b;
    for (auto const &g : gs) {
      next = std::max(next, g.apply(b));
      next = std::max(next, sup_preimage(g, b));
    }
    b = successor(next);
    seq.push_back(b);
  }
  return seq;
}

inline Ordinal max_support(std::vector<PwHomeo> const &gs)
{
  Ordinal m;
  for (auto const &g : gs)
    m = std::max(m, g.support_bound());
  return m;
}

} // namespace support

#endif // ORDHOMEO_TESTS_SUPPORT_HPP
