#ifndef ORDHOMEO_INTERVAL_HPP
#define ORDHOMEO_INTERVAL_HPP

#include "ordhomeo/ordinal.hpp"

namespace ordhomeo
{

/**
 * A clopen interval of ordinals: either [0, hi] or ]lo, hi] with lo < hi.
 *
 * Stored by its least element `first` (0 or a successor) and its greatest
 * element `hi`. The i-th element is first + i, so both intervals with the
 * same order type are related by the unique order isomorphism
 * first_A + i  <->  first_B + i.
 */
class ClopenInterval
{
public:
  /// [0, hi]
  static ClopenInterval initial(Ordinal hi);

  /// ]lo, hi]; throws DomainError unless lo < hi.
  static ClopenInterval left_open(Ordinal lo, Ordinal hi);

  /// [first, hi]; `first` must be 0 or a successor and first <= hi.
  static ClopenInterval closed(Ordinal first, Ordinal hi);

  bool is_initial() const { return _first.is_zero(); }
  Ordinal const &first() const { return _first; }
  Ordinal const &hi() const { return _hi; }

  /// Left bound of ]lo, hi]. Throws DomainError for an initial interval.
  Ordinal lo() const;

  Ordinal order_type() const;

  bool contains(Ordinal const &t) const { return _first <= t && t <= _hi; }

  /// The i-th element (0-based). Throws DomainError if i >= order_type().
  Ordinal enum_index(Ordinal const &i) const;

  /// Inverse of enum_index. Throws DomainError if t is not in the interval.
  Ordinal index_of(Ordinal const &t) const;

  friend bool operator==(ClopenInterval const &, ClopenInterval const &) = default;

private:
  ClopenInterval(Ordinal first, Ordinal hi)
  : _first(std::move(first)), _hi(std::move(hi))
  {}

  Ordinal _first;
  Ordinal _hi;
};

std::string format(ClopenInterval const &iv, FormatOptions const &opts = {});

} // namespace ordhomeo

#endif // ORDHOMEO_INTERVAL_HPP
