#ifndef ORDHOMEO_ORDINAL_HPP
#define ORDHOMEO_ORDINAL_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ordhomeo
{

using Natural = boost::multiprecision::cpp_int;

/// Default cap on exponent nesting depth for omega_pow and the parser.
inline constexpr std::size_t kDefaultDepthCap = 32;

struct Term;

/**
 * An ordinal below epsilon_0 in Cantor normal form
 *
 *   w^e1 * c1 + ... + w^ek * ck,   e1 > ... > ek,  ci >= 1.
 *
 * The empty term list is 0. Every value has exactly one representation, so
 * structural equality is ordinal equality. Instances are immutable.
 */
class Ordinal
{
public:
  Ordinal() = default;

  static Ordinal finite(Natural n);
  static Ordinal omega();

  /// Validates strictly decreasing exponents and positive coefficients.
  static Ordinal from_terms(std::vector<Term> terms);

  std::span<Term const> terms() const;

  bool is_zero() const;
  bool is_finite() const;
  bool is_successor() const;
  bool is_limit() const;

  /// The natural number value, if finite.
  std::optional<Natural> to_finite() const;

  /// Exponent of the first term; 0 for the ordinal 0.
  Ordinal leading_exponent() const;

  /// Exponent of the last term; 0 for the ordinal 0.
  Ordinal last_exponent() const;

  /// Coefficient attached to `exponent`, or 0 when absent.
  Natural coefficient_at(Ordinal const &exponent) const;

  /// Nesting depth: depth(0) = 0, depth(w^e * c + ...) = 1 + max depth(e).
  std::size_t depth() const;

  friend std::strong_ordering operator<=>(Ordinal const &a, Ordinal const &b);
  friend bool operator==(Ordinal const &a, Ordinal const &b);

private:
  explicit Ordinal(std::vector<Term> terms);

  std::vector<Term> _terms;
};

struct Term
{
  Ordinal exponent;
  Natural coefficient;

  friend bool operator==(Term const &, Term const &) = default;
};

inline std::span<Term const> Ordinal::terms() const { return _terms; }
inline bool Ordinal::is_zero() const { return _terms.empty(); }

enum class Order { LT, EQ, GT };

Order compare(Ordinal const &a, Ordinal const &b);

Ordinal add(Ordinal const &a, Ordinal const &b);

/// The unique x with a + x = b. Throws DomainError if a > b.
Ordinal left_subtract(Ordinal const &a, Ordinal const &b);

Ordinal multiply(Ordinal const &a, Ordinal const &b);

/// w^a. Throws ResourceError when the result would nest deeper than `depth_cap`.
Ordinal omega_pow(Ordinal const &a, std::size_t depth_cap = kDefaultDepthCap);

Ordinal successor(Ordinal const &a);

/// Throws DomainError unless `a` is a successor.
Ordinal predecessor(Ordinal const &a);

inline Ordinal operator+(Ordinal const &a, Ordinal const &b) { return add(a, b); }
inline Ordinal operator*(Ordinal const &a, Ordinal const &b) { return multiply(a, b); }

/// Cantor-Bendixson rank of a point of the ordinal space: the exponent of the
/// last CNF term. rank(0) = 0 by convention (0 is isolated).
Ordinal rank(Ordinal const &x);

struct PointClass
{
  enum class Kind { Zero, Successor, Limit };

  Kind kind;
  Ordinal predecessor; // meaningful only for Successor

  friend bool operator==(PointClass const &, PointClass const &) = default;
};

PointClass classify(Ordinal const &x);

/// Least s > 0 with a + s = s, i.e. w^(lead(a)+1) for a > 0; 1 for a = 0.
Ordinal absorb_threshold(Ordinal const &a);

/// Largest exponent at which the CNFs of a and b differ; empty iff a == b.
/// For a != b: a + s == b + s  <=>  s >= w^(diff_exponent(a, b) + 1).
std::optional<Ordinal> diff_exponent(Ordinal const &a, Ordinal const &b);

/// x belongs to the alpha-th derived set of the ordinal space.
bool in_derived(Ordinal const &x, Ordinal const &alpha);

/// Least member of the level set Y^(alpha) strictly above t.
Ordinal next_in_level(Ordinal const &alpha, Ordinal const &t);

/// First `max_count` points of rank alpha in ]lo, hi], increasing.
std::vector<Ordinal> enumerate_level(Ordinal const &alpha, Ordinal const &lo,
                                     Ordinal const &hi, std::size_t max_count);

/// x' with x' + w^rank(y) = y. No point of ]x', y[ has rank >= rank(y).
Ordinal isolating_left_endpoint(Ordinal const &y);

/// Cantor-Bendixson rank of the space [0, beta]: lead(beta) + 1.
Ordinal cb_rank_segment(Ordinal const &beta);

/// Truncation of x to its terms with exponent >= e (the largest multiple of
/// w^e that is <= x).
Ordinal truncate_below(Ordinal const &x, Ordinal const &e);

// Text codec ---------------------------------------------------------------

struct FormatOptions
{
  bool unicode = false;
};

/// Canonical CNF text, e.g. "w^(w)*2 + w^2 + 3".
std::string format(Ordinal const &x, FormatOptions const &opts = {});

/**
 * Parses and evaluates an ordinal expression:
 *
 *   expr   := term ( '+' term )*
 *   term   := factor ( '*' nat )?
 *   factor := 'w' ( '^' factor )? | nat | '(' expr ')'
 *
 * Throws ParseError with the offending position. A zero multiplier is a
 * DomainError; nesting deeper than `depth_cap` is a ResourceError.
 */
Ordinal parse_ordinal(std::string_view text,
                      std::size_t depth_cap = kDefaultDepthCap);

/// Parses an expression prefix starting at `pos`, advancing `pos` past it.
/// Used by the line formats that embed ordinal expressions.
Ordinal parse_ordinal_prefix(std::string_view text, std::size_t &pos,
                             std::size_t depth_cap = kDefaultDepthCap);

std::string to_string(Order o);
std::string format(PointClass const &c, FormatOptions const &opts = {});

} // namespace ordhomeo

#endif // ORDHOMEO_ORDINAL_HPP
