#include "ordhomeo/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <utility>

#include "ordhomeo/error.hpp"

namespace ordhomeo
{

namespace
{

int cmp(Ordinal const &a, Ordinal const &b)
{
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t n = std::min(ta.size(), tb.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (int c = cmp(ta[i].exponent, tb[i].exponent); c != 0)
      return c;
    if (ta[i].coefficient != tb[i].coefficient)
      return ta[i].coefficient < tb[i].coefficient ? -1 : 1;
  }
  if (ta.size() == tb.size())
    return 0;
  return ta.size() < tb.size() ? -1 : 1;
}

std::vector<Term> copy_terms(std::span<Term const> t)
{ return std::vector<Term>(t.begin(), t.end()); }

} // namespace

Ordinal::Ordinal(std::vector<Term> terms)
: _terms(std::move(terms))
{}

Ordinal Ordinal::finite(Natural n)
{
  if (n < 0)
    throw DomainError("negative natural number");
  if (n == 0)
    return Ordinal();
  return Ordinal({Term{Ordinal(), std::move(n)}});
}

Ordinal Ordinal::omega()
{ return Ordinal({Term{finite(1), 1}}); }

Ordinal Ordinal::from_terms(std::vector<Term> terms)
{
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1)
      throw DomainError("CNF coefficient must be positive");
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent))
      throw DomainError("CNF exponents must be strictly decreasing");
  }
  return Ordinal(std::move(terms));
}

bool Ordinal::is_finite() const
{ return _terms.empty() || (_terms.size() == 1 && _terms[0].exponent.is_zero()); }

bool Ordinal::is_successor() const
{ return !_terms.empty() && _terms.back().exponent.is_zero(); }

bool Ordinal::is_limit() const
{ return !_terms.empty() && !_terms.back().exponent.is_zero(); }

std::optional<Natural> Ordinal::to_finite() const
{
  if (_terms.empty())
    return Natural(0);
  if (is_finite())
    return _terms[0].coefficient;
  return std::nullopt;
}

Ordinal Ordinal::leading_exponent() const
{ return _terms.empty() ? Ordinal() : _terms.front().exponent; }

Ordinal Ordinal::last_exponent() const
{ return _terms.empty() ? Ordinal() : _terms.back().exponent; }

Natural Ordinal::coefficient_at(Ordinal const &exponent) const
{
  for (auto const &t : _terms) {
    if (t.exponent == exponent)
      return t.coefficient;
    if (t.exponent < exponent)
      break;
  }
  return 0;
}

std::size_t Ordinal::depth() const
{
  std::size_t d = 0;
  for (auto const &t : _terms)
    d = std::max(d, t.exponent.depth());
  return _terms.empty() ? 0 : d + 1;
}

std::strong_ordering operator<=>(Ordinal const &a, Ordinal const &b)
{ return cmp(a, b) <=> 0; }

bool operator==(Ordinal const &a, Ordinal const &b)
{ return a._terms == b._terms; }

Order compare(Ordinal const &a, Ordinal const &b)
{
  int c = cmp(a, b);
  return c < 0 ? Order::LT : (c == 0 ? Order::EQ : Order::GT);
}

Ordinal add(Ordinal const &a, Ordinal const &b)
{
  if (b.is_zero())
    return a;

  auto tb = b.terms();
  Ordinal const &head = tb[0].exponent;

  std::vector<Term> out;
  Natural carry = 0;
  for (auto const &t : a.terms()) {
    if (t.exponent > head) {
      out.push_back(t);
    } else {
      if (t.exponent == head)
        carry = t.coefficient;
      break;
    }
  }
  out.push_back(Term{head, carry + tb[0].coefficient});
  out.insert(out.end(), tb.begin() + 1, tb.end());
  return Ordinal::from_terms(std::move(out));
}

Ordinal left_subtract(Ordinal const &a, Ordinal const &b)
{
  if (a > b)
    throw DomainError("left_subtract: " + format(a) + " > " + format(b));

  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t i = 0;
  while (i < ta.size() && ta[i] == tb[i])
    ++i;

  if (i == ta.size())
    return Ordinal::from_terms(copy_terms(tb.subspan(i)));

  // a < b and they first differ at i: either b has a larger exponent there
  // or the same exponent with a larger coefficient.
  std::vector<Term> out;
  if (ta[i].exponent == tb[i].exponent) {
    out.push_back(Term{tb[i].exponent, tb[i].coefficient - ta[i].coefficient});
    out.insert(out.end(), tb.begin() + i + 1, tb.end());
  } else {
    out = copy_terms(tb.subspan(i));
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal multiply(Ordinal const &a, Ordinal const &b)
{
  if (a.is_zero() || b.is_zero())
    return Ordinal();

  auto ta = a.terms();
  Ordinal result;
  for (auto const &t : b.terms()) {
    std::vector<Term> part;
    if (t.exponent.is_zero()) {
      // a * n = w^e1 * (c1 * n) + (rest of a)
      part.push_back(Term{ta[0].exponent, ta[0].coefficient * t.coefficient});
      part.insert(part.end(), ta.begin() + 1, ta.end());
    } else {
      // a * w^f = w^(e1 + f)
      part.push_back(Term{add(ta[0].exponent, t.exponent), t.coefficient});
    }
    result = add(result, Ordinal::from_terms(std::move(part)));
  }
  return result;
}

Ordinal omega_pow(Ordinal const &a, std::size_t depth_cap)
{
  if (a.depth() + 1 > depth_cap)
    throw ResourceError("exponent nesting depth exceeds cap of " +
                        std::to_string(depth_cap));
  return Ordinal::from_terms({Term{a, 1}});
}

Ordinal successor(Ordinal const &a)
{ return add(a, Ordinal::finite(1)); }

Ordinal predecessor(Ordinal const &a)
{
  if (!a.is_successor())
    throw DomainError(format(a) + " has no predecessor");
  auto terms = copy_terms(a.terms());
  if (--terms.back().coefficient == 0)
    terms.pop_back();
  return Ordinal::from_terms(std::move(terms));
}

Ordinal rank(Ordinal const &x)
{ return x.last_exponent(); }

PointClass classify(Ordinal const &x)
{
  if (x.is_zero())
    return {PointClass::Kind::Zero, Ordinal()};
  if (x.is_successor())
    return {PointClass::Kind::Successor, predecessor(x)};
  return {PointClass::Kind::Limit, Ordinal()};
}

Ordinal absorb_threshold(Ordinal const &a)
{
  if (a.is_zero())
    return Ordinal::finite(1);
  return Ordinal::from_terms({Term{successor(a.leading_exponent()), 1}});
}

std::optional<Ordinal> diff_exponent(Ordinal const &a, Ordinal const &b)
{
  // Walk both term lists in decreasing exponent order; the first exponent
  // where the coefficient functions disagree is the largest one.
  auto ta = a.terms();
  auto tb = b.terms();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size())
      return ta[i].exponent;
    if (i == ta.size())
      return tb[j].exponent;
    int c = cmp(ta[i].exponent, tb[j].exponent);
    if (c > 0)
      return ta[i].exponent;
    if (c < 0)
      return tb[j].exponent;
    if (ta[i].coefficient != tb[j].coefficient)
      return ta[i].exponent;
    ++i;
    ++j;
  }
  return std::nullopt;
}

bool in_derived(Ordinal const &x, Ordinal const &alpha)
{
  // X^(0) is the whole space, including the isolated point 0.
  if (alpha.is_zero())
    return true;
  return !x.is_zero() && rank(x) >= alpha;
}

Ordinal truncate_below(Ordinal const &x, Ordinal const &e)
{
  std::vector<Term> out;
  for (auto const &t : x.terms()) {
    if (t.exponent < e)
      break;
    out.push_back(t);
  }
  return Ordinal::from_terms(std::move(out));
}

Ordinal next_in_level(Ordinal const &alpha, Ordinal const &t)
{ return add(truncate_below(t, alpha), omega_pow(alpha, SIZE_MAX)); }

std::vector<Ordinal> enumerate_level(Ordinal const &alpha, Ordinal const &lo,
                                     Ordinal const &hi, std::size_t max_count)
{
  if (lo > hi)
    throw DomainError("enumerate_level: empty range");
  std::vector<Ordinal> out;
  Ordinal t = lo;
  while (out.size() < max_count) {
    t = next_in_level(alpha, t);
    if (t > hi)
      break;
    out.push_back(t);
  }
  return out;
}

Ordinal isolating_left_endpoint(Ordinal const &y)
{
  if (y.is_zero())
    throw DomainError("0 is isolated and has no left neighbourhood");
  auto terms = copy_terms(y.terms());
  if (--terms.back().coefficient == 0)
    terms.pop_back();
  return Ordinal::from_terms(std::move(terms));
}

Ordinal cb_rank_segment(Ordinal const &beta)
{ return successor(beta.leading_exponent()); }

// Text codec ---------------------------------------------------------------

namespace
{

std::string format_into(Ordinal const &x, FormatOptions const &opts)
{
  if (x.is_zero())
    return "0";

  std::string const w = opts.unicode ? "ω" : "w";
  std::string out;
  bool first = true;
  for (auto const &t : x.terms()) {
    if (!first)
      out += " + ";
    first = false;

    if (t.exponent.is_zero()) {
      out += t.coefficient.str();
      continue;
    }
    out += w;
    if (t.exponent != Ordinal::finite(1)) {
      if (t.exponent.is_finite())
        out += "^" + t.exponent.to_finite()->str();
      else
        out += "^(" + format_into(t.exponent, opts) + ")";
    }
    if (t.coefficient != 1)
      out += "*" + t.coefficient.str();
  }
  return out;
}

constexpr std::size_t kMaxNesting = 1000;

class ExprParser
{
public:
  ExprParser(std::string_view text, std::size_t pos, std::size_t depth_cap)
  : _text(text), _pos(pos), _depth_cap(depth_cap)
  {}

  Ordinal expr()
  {
    Ordinal acc = term();
    while (peek() == '+') {
      ++_pos;
      acc = add(acc, term());
    }
    return acc;
  }

  std::size_t pos() const { return _pos; }

  char peek()
  {
    while (_pos < _text.size() && std::isspace(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
    return _pos < _text.size() ? _text[_pos] : '\0';
  }

private:
  Ordinal term()
  {
    Ordinal f = factor();
    if (peek() == '*') {
      ++_pos;
      Natural n = nat();
      if (n == 0)
        throw DomainError("coefficient 0 at position " + std::to_string(_pos));
      f = multiply(f, Ordinal::finite(n));
    }
    return f;
  }

  Ordinal factor()
  {
    char c = peek();
    if (c == 'w') {
      ++_pos;
      if (peek() != '^')
        return Ordinal::omega();
      ++_pos;
      enter();
      Ordinal e = factor();
      --_nesting;
      return omega_pow(e, _depth_cap);
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Ordinal::finite(nat());
    if (c == '(') {
      enter();
      ++_pos;
      Ordinal inner = expr();
      if (peek() != ')')
        throw ParseError("expected ')'", _pos);
      ++_pos;
      --_nesting;
      return inner;
    }
    if (c == '\0')
      throw ParseError("unexpected end of input", _pos);
    throw ParseError(std::string("expected 'w', a number or '(' but found '") + c + "'",
                     _pos);
  }

  void enter()
  {
    if (++_nesting > kMaxNesting)
      throw ResourceError("expression nesting too deep");
  }

  Natural nat()
  {
    peek();
    std::size_t start = _pos;
    while (_pos < _text.size() && std::isdigit(static_cast<unsigned char>(_text[_pos])))
      ++_pos;
    if (start == _pos)
      throw ParseError("expected a number", start);
    return Natural(std::string(_text.substr(start, _pos - start)).c_str());
  }

  std::string_view _text;
  std::size_t _pos;
  std::size_t _depth_cap;
  std::size_t _nesting = 0;
};

} // namespace

std::string format(Ordinal const &x, FormatOptions const &opts)
{ return format_into(x, opts); }

Ordinal parse_ordinal_prefix(std::string_view text, std::size_t &pos,
                             std::size_t depth_cap)
{
  ExprParser p(text, pos, depth_cap);
  Ordinal r = p.expr();
  pos = p.pos();
  return r;
}

Ordinal parse_ordinal(std::string_view text, std::size_t depth_cap)
{
  ExprParser p(text, 0, depth_cap);
  Ordinal r = p.expr();
  if (char c = p.peek(); c != '\0')
    throw ParseError(std::string("unexpected '") + c + "'", p.pos());
  return r;
}

std::string to_string(Order o)
{
  switch (o) {
  case Order::LT: return "LT";
  case Order::EQ: return "EQ";
  case Order::GT: return "GT";
  }
  return "?";
}

std::string format(PointClass const &c, FormatOptions const &opts)
{
  switch (c.kind) {
  case PointClass::Kind::Zero: return "zero";
  case PointClass::Kind::Successor: return "successor of " + format(c.predecessor, opts);
  case PointClass::Kind::Limit: return "limit";
  }
  return "?";
}

} // namespace ordhomeo
