#include "ordhomeo/interval.hpp"

#include "ordhomeo/error.hpp"

namespace ordhomeo
{

ClopenInterval ClopenInterval::initial(Ordinal hi)
{ return ClopenInterval(Ordinal(), std::move(hi)); }

ClopenInterval ClopenInterval::left_open(Ordinal lo, Ordinal hi)
{
  if (!(lo < hi))
    throw DomainError("interval (" + format(lo) + ", " + format(hi) + "] is empty");
  return ClopenInterval(successor(lo), std::move(hi));
}

ClopenInterval ClopenInterval::closed(Ordinal first, Ordinal hi)
{
  if (!first.is_zero() && !first.is_successor())
    throw DomainError("[" + format(first) + ", ...] is not open: left end is a limit");
  if (first > hi)
    throw DomainError("interval [" + format(first) + ", " + format(hi) + "] is empty");
  return ClopenInterval(std::move(first), std::move(hi));
}

Ordinal ClopenInterval::lo() const
{
  if (is_initial())
    throw DomainError("initial interval has no left bound");
  return predecessor(_first);
}

Ordinal ClopenInterval::order_type() const
{ return left_subtract(_first, successor(_hi)); }

Ordinal ClopenInterval::enum_index(Ordinal const &i) const
{
  if (i >= order_type())
    throw DomainError("index " + format(i) + " out of range for " + format(*this));
  return add(_first, i);
}

Ordinal ClopenInterval::index_of(Ordinal const &t) const
{
  if (!contains(t))
    throw DomainError(format(t) + " is not in " + format(*this));
  return left_subtract(_first, t);
}

std::string format(ClopenInterval const &iv, FormatOptions const &opts)
{
  if (iv.is_initial())
    return "[0, " + format(iv.hi(), opts) + "]";
  return "(" + format(iv.lo(), opts) + ", " + format(iv.hi(), opts) + "]";
}

} // namespace ordhomeo
