#include "ordhomeo/text_format.hpp"

#include "ordhomeo/error.hpp"

namespace ordhomeo
{

namespace
{

class LineReader
{
public:
  LineReader(std::string_view line, std::size_t number) : _line(line), _number(number) {}

  void skip_space()
  {
    while (_pos < _line.size() && (_line[_pos] == ' ' || _line[_pos] == '\t' || _line[_pos] == '\r'))
      ++_pos;
  }

  bool at_end()
  {
    skip_space();
    return _pos >= _line.size();
  }

  char peek()
  {
    skip_space();
    return _pos < _line.size() ? _line[_pos] : '\0';
  }

  void expect(std::string_view token)
  {
    skip_space();
    if (_line.substr(_pos, token.size()) != token)
      fail("expected '" + std::string(token) + "'");
    _pos += token.size();
  }

  Ordinal ordinal()
  {
    skip_space();
    try {
      return parse_ordinal_prefix(_line, _pos);
    } catch (ParseError const &e) {
      throw ParseError(e.detail(), _number, e.position());
    }
  }

  [[noreturn]] void fail(std::string const &what) const { throw ParseError(what, _number, _pos); }

  std::size_t number() const { return _number; }

private:
  std::string_view _line;
  std::size_t _number;
  std::size_t _pos = 0;
};

template<typename F>
void for_each_line(std::string_view text, F &&f)
{
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    LineReader r(line, number);
    if (r.at_end() || r.peek() == '#')
      continue;
    f(r);
  }
}

ClopenInterval read_interval(LineReader &r)
{
  if (r.peek() == '[') {
    r.expect("[");
    Ordinal zero = r.ordinal();
    if (!zero.is_zero())
      r.fail("closed intervals must start at 0");
    r.expect(",");
    Ordinal hi = r.ordinal();
    r.expect("]");
    return ClopenInterval::initial(std::move(hi));
  }
  r.expect("(");
  Ordinal lo = r.ordinal();
  r.expect(",");
  Ordinal hi = r.ordinal();
  r.expect("]");
  if (lo >= hi)
    throw DomainError("line " + std::to_string(r.number()) + ": interval (" + format(lo) + ", " +
                      format(hi) + "] is empty");
  return ClopenInterval::left_open(std::move(lo), std::move(hi));
}

} // namespace

PwHomeo parse_homeo(std::string_view text)
{
  std::vector<Piece> pieces;
  for_each_line(text, [&](LineReader &r) {
    ClopenInterval source = read_interval(r);
    r.expect("->");
    ClopenInterval target = read_interval(r);
    if (!r.at_end())
      r.fail("trailing text after piece");
    pieces.push_back(Piece{std::move(source), std::move(target)});
  });
  return PwHomeo::build(std::move(pieces));
}

std::string format_homeo(PwHomeo const &g, FormatOptions const &opts)
{
  if (g.is_identity())
    return "# identity\n";
  std::string out;
  for (auto const &p : g.pieces())
    out += format(p.source, opts) + " -> " + format(p.target, opts) + "\n";
  return out;
}

ConstraintSystem parse_constraints(std::string_view text)
{
  ConstraintSystem cs;
  for_each_line(text, [&](LineReader &r) {
    Constraint c{r.ordinal(), {}};
    r.expect(":");
    r.expect("{");
    if (r.peek() == '}')
      r.fail("allowed set must be nonempty");
    c.allowed.push_back(r.ordinal());
    while (r.peek() == ',') {
      r.expect(",");
      c.allowed.push_back(r.ordinal());
    }
    r.expect("}");
    if (!r.at_end())
      r.fail("trailing text after constraint");
    cs.constraints.push_back(std::move(c));
  });
  return cs;
}

std::string format_constraints(ConstraintSystem const &cs, FormatOptions const &opts)
{
  std::string out;
  for (auto const &c : cs.constraints) {
    out += format(c.point, opts) + " : {";
    for (std::size_t i = 0; i < c.allowed.size(); ++i)
      out += (i ? ", " : "") + format(c.allowed[i], opts);
    out += "}\n";
  }
  return out;
}

std::string format_injection(PartialInjection const &h, FormatOptions const &opts)
{
  std::string out;
  for (auto const &[x, y] : h)
    out += format(x, opts) + " -> " + format(y, opts) + "\n";
  return out;
}

std::string format_permutation(FinitePermutation const &p, FormatOptions const &opts)
{
  if (p.cycles.empty())
    return "()";
  std::string out;
  for (auto const &c : p.cycles) {
    out += "(";
    for (std::size_t i = 0; i < c.size(); ++i)
      out += (i ? ", " : "") + format(c[i], opts);
    out += ")";
  }
  return out;
}

} // namespace ordhomeo
