#include "ordhomeo/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include "ordhomeo/dynamics.hpp"
#include "ordhomeo/error.hpp"
#include "ordhomeo/fixed_points.hpp"
#include "ordhomeo/ordinal_set.hpp"
#include "ordhomeo/sieve.hpp"
#include "ordhomeo/text_format.hpp"

namespace ordhomeo::cli
{

namespace
{

class InputError : public Error
{
public:
  using Error::Error;
};

std::string slurp(std::string const &path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

PwHomeo load_homeo(std::string const &path)
{
  try {
    return parse_homeo(slurp(path));
  } catch (ParseError const &e) {
    throw InputError(path + ": " + e.what());
  } catch (ValidationError const &e) {
    throw ValidationError(path + ": " + e.what());
  }
}

ConstraintSystem load_constraints(std::string const &path)
{
  try {
    return parse_constraints(slurp(path));
  } catch (ParseError const &e) {
    throw InputError(path + ": " + e.what());
  }
}

PartialInjection load_injection(std::string const &path)
{
  PartialInjection h;
  std::istringstream in(slurp(path));
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#')
      continue;
    auto arrow = line.find("->");
    if (arrow == std::string::npos)
      throw InputError(path + ": parse error at line " + std::to_string(number) +
                       ": expected 'X -> Y'");
    try {
      h.emplace_back(parse_ordinal(line.substr(0, arrow)), parse_ordinal(line.substr(arrow + 2)));
    } catch (ParseError const &e) {
      throw InputError(path + ": parse error at line " + std::to_string(number) + ": " +
                       e.detail());
    }
  }
  return h;
}

std::pair<Ordinal, Ordinal> parse_pair(std::string const &text)
{
  auto arrow = text.find("->");
  if (arrow == std::string::npos)
    throw ParseError("expected 'X->Y' in '" + text + "'", 0);
  return {parse_ordinal(text.substr(0, arrow)), parse_ordinal(text.substr(arrow + 2))};
}

Natural parse_natural(std::string const &text)
{
  auto v = parse_ordinal(text).to_finite();
  if (!v)
    throw DomainError("expected a natural number, got '" + text + "'");
  return *v;
}

std::vector<Ordinal> parse_ordinals(std::vector<std::string> const &texts)
{
  std::vector<Ordinal> out;
  for (auto const &t : texts)
    out.push_back(parse_ordinal(t));
  return out;
}

std::vector<PwHomeo> load_homeos(std::vector<std::string> const &paths)
{
  std::vector<PwHomeo> out;
  for (auto const &p : paths)
    out.push_back(load_homeo(p));
  return out;
}

struct Args
{
  std::string a, b, file, x, n;
  std::vector<std::string> files, pairs, frozen, points, targets, family;
  std::size_t cap = kDefaultOrderCap;
};

struct Session
{
  std::ostream &out;
  Args args;
  FormatOptions fmt;
  std::function<void()> action;

  void line(std::string const &s) { out << s << '\n'; }
  void ordinal(Ordinal const &x) { line(format(x, fmt)); }
  void homeo(PwHomeo const &g) { out << format_homeo(g, fmt); }
};

void add_ord_commands(CLI::App &app, Session &s)
{
  auto *ord = app.add_subcommand("ord", "Ordinal calculator");
  ord->require_subcommand(1);

  auto &a = s.args.a;
  auto &b = s.args.b;

  auto *eval = ord->add_subcommand("eval", "Evaluate an expression to Cantor normal form");
  eval->add_option("expr", a, "Ordinal expression")->required();
  eval->callback([&] { s.action = [&] { s.ordinal(parse_ordinal(a)); }; });

  auto *cmp = ord->add_subcommand("cmp", "Compare two ordinals (LT, EQ or GT)");
  cmp->add_option("a", a)->required();
  cmp->add_option("b", b)->required();
  cmp->callback([&] { s.action = [&] { s.line(to_string(compare(parse_ordinal(a), parse_ordinal(b)))); }; });

  auto *sub = ord->add_subcommand("sub", "The unique x with a + x = b");
  sub->add_option("a", a)->required();
  sub->add_option("b", b)->required();
  sub->callback([&] { s.action = [&] { s.ordinal(left_subtract(parse_ordinal(a), parse_ordinal(b))); }; });

  auto *rk = ord->add_subcommand("rank", "Cantor-Bendixson rank of a point");
  rk->add_option("x", a)->required();
  rk->callback([&] { s.action = [&] { s.ordinal(rank(parse_ordinal(a))); }; });

  auto *cls = ord->add_subcommand("class", "zero, successor or limit");
  cls->add_option("x", a)->required();
  cls->callback([&] { s.action = [&] { s.line(format(classify(parse_ordinal(a)), s.fmt)); }; });

  auto *cb = ord->add_subcommand("cbrank", "Cantor-Bendixson rank of [0, beta]");
  cb->add_option("beta", a)->required();
  cb->callback([&] { s.action = [&] { s.ordinal(cb_rank_segment(parse_ordinal(a))); }; });
}

void add_homeo_commands(CLI::App &app, Session &s)
{
  auto *homeo = app.add_subcommand("homeo", "Piecewise homeomorphisms");
  homeo->require_subcommand(1);

  auto &file = s.args.file;
  auto &x = s.args.x;
  auto &files = s.args.files;
  auto &cap = s.args.cap;

  auto *check = homeo->add_subcommand("check", "Validate a map and print its canonical form");
  check->add_option("file", file)->required();
  check->callback([&] { s.action = [&] { s.homeo(load_homeo(file)); }; });

  auto *apply = homeo->add_subcommand("apply", "Evaluate a map at a point");
  apply->add_option("file", file)->required();
  apply->add_option("x", x)->required();
  apply->callback([&] { s.action = [&] { s.ordinal(load_homeo(file).apply(parse_ordinal(x))); }; });

  auto *comp = homeo->add_subcommand("compose", "Compose maps, rightmost applied first");
  comp->add_option("files", files)->required();
  comp->callback([&] {
    s.action = [&] {
      auto gs = load_homeos(files);
      PwHomeo acc;
      for (auto it = gs.rbegin(); it != gs.rend(); ++it)
        acc = compose(*it, acc);
      s.homeo(acc);
    };
  });

  auto *inv = homeo->add_subcommand("invert", "Inverse map");
  inv->add_option("file", file)->required();
  inv->callback([&] { s.action = [&] { s.homeo(inverse(load_homeo(file))); }; });

  auto *ord = homeo->add_subcommand("order", "Order of a map in the group");
  ord->add_option("file", file)->required();
  ord->add_option("--cap", cap, "Largest power tried");
  ord->callback([&] {
    s.action = [&] {
      auto n = order_of(load_homeo(file), cap);
      s.line(n ? std::to_string(*n) : "cap exceeded (" + std::to_string(cap) + ")");
    };
  });

  auto *fix = homeo->add_subcommand("fix", "Fixed-point set");
  fix->add_option("file", file)->required();
  fix->callback([&] { s.action = [&] { s.line(format(fixed_points(load_homeo(file)), s.fmt)); }; });

  auto *cfix = homeo->add_subcommand("common-fix", "Common fixed points of several maps");
  cfix->add_option("files", files)->required();
  cfix->callback([&] {
    s.action = [&] { s.line(format(common_fixed_points(load_homeos(files)), s.fmt)); };
  });

  auto *above = homeo->add_subcommand("fixpoint-above", "Common fixed point strictly above alpha");
  above->add_option("alpha", x)->required();
  above->add_option("files", files)->required();
  above->callback([&] {
    s.action = [&] { s.ordinal(find_fixed_point_above(load_homeos(files), parse_ordinal(x))); };
  });

  auto *pre = homeo->add_subcommand("invariant-prefix", "Least a >= alpha with g[0, a] inside [0, a]");
  pre->add_option("file", file)->required();
  pre->add_option("alpha", x)->required();
  pre->callback([&] {
    s.action = [&] { s.ordinal(invariant_prefix(load_homeo(file), parse_ordinal(x))); };
  });

  auto *pt = homeo->add_subcommand("invariant-point", "Least a >= alpha with g[0, a] = [0, a]");
  pt->add_option("file", file)->required();
  pt->add_option("alpha", x)->required();
  pt->callback([&] {
    s.action = [&] { s.ordinal(invariant_point(load_homeo(file), parse_ordinal(x))); };
  });
}

void add_dyn_commands(CLI::App &app, Session &s)
{
  auto *dyn = app.add_subcommand("dyn", "Group-dynamical constructions");
  dyn->require_subcommand(1);

  auto &file = s.args.file;
  auto &n = s.args.n;
  auto &pairs = s.args.pairs;
  auto &frozen = s.args.frozen;
  auto &points = s.args.points;
  auto &targets = s.args.targets;
  auto &family = s.args.family;

  auto *tr = dyn->add_subcommand("transitive", "Map sending each X to Y, fixing frozen points");
  tr->add_option("pairs", pairs, "Pairs written X->Y")->required();
  tr->add_option("--frozen", frozen, "Points that must stay fixed");
  tr->callback([&] {
    s.action = [&] {
      TransitivityProblem p;
      for (auto const &t : pairs)
        p.pairs.push_back(parse_pair(t));
      p.frozen = parse_ordinals(frozen);
      s.homeo(make_transitive(p));
    };
  });

  auto *ro = dyn->add_subcommand("roelcke", "Factor g = u h u' around a finite point set");
  ro->add_option("file", file)->required();
  ro->add_option("points", points);
  ro->callback([&] {
    s.action = [&] {
      auto xs = parse_ordinals(points);
      auto cert = roelcke_decompose(load_homeo(file), xs);
      std::string sigma;
      for (std::size_t i = 0; i < cert.sigma.size(); ++i) {
        if (!cert.sigma[i])
          continue;
        sigma += (sigma.empty() ? "" : ", ") + std::to_string(i + 1) + " -> " +
                 std::to_string(*cert.sigma[i] + 1);
      }
      s.line("# sigma: {" + sigma + "}");
      s.line("# u");
      s.homeo(cert.u);
      s.line("# h");
      s.homeo(cert.h);
      s.line("# u'");
      s.homeo(cert.u_prime);
    };
  });

  auto *de = dyn->add_subcommand("dense", "Approximate g on targets by a map fixing pushed family points");
  de->add_option("file", file)->required();
  de->add_option("--targets", targets);
  de->add_option("--family", family);
  de->callback([&] {
    s.action = [&] {
      auto ts = parse_ordinals(targets);
      auto fs = parse_ordinals(family);
      auto r = dense_approx(load_homeo(file), ts, fs);
      s.line("# alpha: " + format(r.alpha, s.fmt));
      s.line("# h");
      s.homeo(r.h);
      s.line("# k");
      s.homeo(r.k);
    };
  });

  auto *bm = dyn->add_subcommand("baire-member", "Does g fix some integer k >= n");
  bm->add_option("file", file)->required();
  bm->add_option("n", n)->required();
  bm->callback([&] {
    s.action = [&] { s.line(in_baire_T(load_homeo(file), parse_natural(n)) ? "true" : "false"); };
  });

  auto *bw = dyn->add_subcommand("baire-witness", "Map fixing an integer k >= n, agreeing with g on constraints");
  bw->add_option("file", file)->required();
  bw->add_option("n", n)->required();
  bw->add_option("constraints", points);
  bw->callback([&] {
    s.action = [&] {
      auto cs = parse_ordinals(points);
      s.homeo(baire_density_witness(load_homeo(file), parse_natural(n), cs));
    };
  });

  auto *dd = dyn->add_subcommand("demo-discontinuity", "Table of g_n(n) for the transpositions (n, w + n)");
  dd->add_option("n", n)->required();
  dd->callback([&] {
    s.action = [&] {
      Natural const last = parse_natural(n);
      s.line("n\tg_n(n)");
      for (Natural k = 1; k <= last; ++k) {
        Ordinal x = Ordinal::finite(k);
        s.line(k.str() + "\t" + format(discontinuity_sequence(k).apply(x), s.fmt));
      }
    };
  });
}

void add_sieve_commands(CLI::App &app, Session &s)
{
  auto *sv = app.add_subcommand("sieve", "Constraint systems on permutations");
  sv->require_subcommand(1);

  auto &a = s.args.a;
  auto &b = s.args.b;
  auto &files = s.args.files;

  auto *no = sv->add_subcommand("normalize", "Merge repeated points");
  no->add_option("file", a)->required();
  no->callback([&] {
    s.action = [&] {
      Normalized n = normalize(load_constraints(a));
      if (n.unsatisfiable) {
        auto it = std::find_if(n.system.constraints.begin(), n.system.constraints.end(),
                               [](Constraint const &c) { return c.allowed.empty(); });
        s.line("# unsatisfiable: no value left for " + format(it->point, s.fmt));
        return;
      }
      s.out << format_constraints(n.system, s.fmt);
    };
  });

  auto *ha = sv->add_subcommand("hall", "Hall's condition by exhaustive subsets");
  ha->add_option("file", a)->required();
  ha->callback([&] {
    s.action = [&] { s.line(hall_brute(load_constraints(a)) ? "satisfiable" : "unsatisfiable"); };
  });

  auto *ma = sv->add_subcommand("match", "Injection satisfying every constraint");
  ma->add_option("file", a)->required();
  ma->callback([&] {
    s.action = [&] {
      auto h = satisfiable(load_constraints(a));
      if (!h)
        s.line("# unsatisfiable");
      else
        s.out << format_injection(*h, s.fmt);
    };
  });

  auto *co = sv->add_subcommand("contains", "Is the open set of A inside that of B");
  co->add_option("a", a)->required();
  co->add_option("b", b)->required();
  co->callback([&] {
    s.action = [&] {
      Containment c = contains(load_constraints(a), load_constraints(b));
      s.line(!c.holds ? "false" : c.vacuous ? "true (vacuous: left side unsatisfiable)" : "true");
    };
  });

  auto *ch = sv->add_subcommand("chain", "Limit of a decreasing chain and a witness");
  ch->add_option("files", files)->required();
  ch->callback([&] {
    s.action = [&] {
      std::vector<ConstraintSystem> chain;
      for (auto const &f : files)
        chain.push_back(load_constraints(f));
      ChainLimit r = chain_limit(chain);
      s.line("# limit");
      s.out << format_constraints(r.limit, s.fmt);
      s.line("# witness");
      s.out << format_injection(r.witness, s.fmt);
    };
  });

  auto *ex = sv->add_subcommand("extend", "Close a partial injection into a permutation");
  ex->add_option("file", a)->required();
  ex->callback([&] {
    s.action = [&] { s.line(format_permutation(extend_to_permutation(load_injection(a)), s.fmt)); };
  });
}

} // namespace

int run(std::vector<std::string> const &args, std::ostream &out, std::ostream &err)
{
  CLI::App app{"Ordinal arithmetic and piecewise homeomorphisms of countable ordinals", "ordhomeo"};
  app.require_subcommand(1);

  Session s{out, {}, {}, {}};
  app.add_flag("--unicode", s.fmt.unicode, "Print the letter omega instead of w");
  add_ord_commands(app, s);
  add_homeo_commands(app, s);
  add_dyn_commands(app, s);
  add_sieve_commands(app, s);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const &e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  try {
    if (s.action)
      s.action();
    return 0;
  } catch (ParseError const &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (InputError const &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (ResourceError const &e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (Error const &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

} // namespace ordhomeo::cli
