#ifndef ORDHOMEO_HOMEO_HPP
#define ORDHOMEO_HOMEO_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ordhomeo/interval.hpp"
#include "ordhomeo/ordinal.hpp"

namespace ordhomeo
{

/// Order isomorphism from `source` onto `target` (equal order types).
struct Piece
{
  ClopenInterval source;
  ClopenInterval target;

  bool is_identity() const { return source == target; }

  /// Image of a point of `source`.
  Ordinal apply(Ordinal const &x) const
  { return add(target.first(), left_subtract(source.first(), x)); }

  /// Preimage of a point of `target`.
  Ordinal unapply(Ordinal const &y) const
  { return add(source.first(), left_subtract(target.first(), y)); }

  friend bool operator==(Piece const &, Piece const &) = default;
};

/// Least fixed point of a piece inside its source, if any. The fixed points
/// of a piece always form a final segment of its source.
std::optional<Ordinal> first_fixed_point(Piece const &p);

/**
 * A homeomorphism of the ordinals that is a finite patchwork of order
 * isomorphisms between clopen intervals tiling [0, beta], and the identity
 * above beta.
 *
 * Values are always canonical: consecutive pieces that glue into a single
 * order isomorphism are merged, and beta is the least bound above which the
 * map is the identity. Canonical forms are unique, so == is extensional
 * equality. The identity has no pieces and beta = 0.
 */
class PwHomeo
{
public:
  PwHomeo() = default;

  /// Validates the tiling and order types, then canonicalizes.
  /// Pieces may be given in any order. Throws ValidationError.
  static PwHomeo build(std::vector<Piece> pieces);

  std::span<Piece const> pieces() const { return _pieces; }
  Ordinal const &support_bound() const { return _bound; }
  bool is_identity() const { return _pieces.empty(); }

  Ordinal apply(Ordinal const &x) const;

  /// Piece whose source contains x, or nullptr above the support bound.
  Piece const *piece_at(Ordinal const &x) const;

  friend bool operator==(PwHomeo const &, PwHomeo const &) = default;

private:
  friend PwHomeo from_tiling(std::vector<Piece> pieces);

  std::vector<Piece> _pieces;
  Ordinal _bound;
};

/// Canonical form of an already valid tiling (sorted or not): merges glueable
/// neighbours and trims the identity suffix.
std::vector<Piece> canonical_pieces(std::vector<Piece> pieces);

/// Builds from a tiling known to be valid (internal constructions).
PwHomeo from_tiling(std::vector<Piece> pieces);

/// x -> g(h(x)).
PwHomeo compose(PwHomeo const &g, PwHomeo const &h);
PwHomeo inverse(PwHomeo const &g);
bool equal(PwHomeo const &g, PwHomeo const &h);

inline constexpr std::size_t kDefaultOrderCap = 10000;

/// Least n >= 1 with g^n = id, or empty if that exceeds `cap`.
std::optional<std::size_t> order_of(PwHomeo const &g, std::size_t cap = kDefaultOrderCap);

/// Exchanges the disjoint intervals I and J of equal order type.
PwHomeo interval_swap(ClopenInterval const &i, ClopenInterval const &j);

/// Transposition of two distinct isolated points.
PwHomeo swap_points(Ordinal const &x, Ordinal const &y);

/// Restriction of g to [0, alpha], identity above. Requires g([0, alpha]) =
/// [0, alpha]; throws DomainError otherwise.
PwHomeo restrict_to_prefix(PwHomeo const &g, Ordinal const &alpha);

} // namespace ordhomeo

#endif // ORDHOMEO_HOMEO_HPP
