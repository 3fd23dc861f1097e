#ifndef ORDHOMEO_TESTS_GOLDEN_RUNNER_HPP
#define ORDHOMEO_TESTS_GOLDEN_RUNNER_HPP

// A golden case NAME is NAME.args (one argument per line) with the expected
// NAME.stdout, and optionally NAME.stderr and NAME.exit. A missing .stderr
// means empty output, a missing .exit means 0. Paths inside the arguments
// are relative to the golden directory.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ordhomeo/cli.hpp"

namespace support
{

namespace fs = std::filesystem;

inline std::string slurp(fs::path const &p)
{
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline std::vector<std::string> golden_case_names(fs::path const &dir)
{
  std::vector<std::string> names;
  for (auto const &e : fs::directory_iterator(dir))
    if (e.path().extension() == ".args")
      names.push_back(e.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

struct Outcome
{
  int code = 0;
  std::string out, err;

  friend bool operator==(Outcome const &, Outcome const &) = default;
};

inline Outcome run_cli_in(fs::path const &dir, std::vector<std::string> const &args)
{
  fs::path here = fs::current_path();
  fs::current_path(dir);
  std::ostringstream out, err;
  int code = ordhomeo::cli::run(args, out, err);
  fs::current_path(here);
  return {code, out.str(), err.str()};
}

struct GoldenCase
{
  std::vector<std::string> args;
  Outcome expected;
};

inline GoldenCase load_golden_case(fs::path const &dir, std::string const &name)
{
  std::string base = (dir / name).string();
  GoldenCase c;
  std::istringstream lines(slurp(base + ".args"));
  for (std::string line; std::getline(lines, line);)
    c.args.push_back(line);
  c.expected.out = slurp(base + ".stdout");
  if (fs::exists(base + ".stderr"))
    c.expected.err = slurp(base + ".stderr");
  if (fs::exists(base + ".exit"))
    c.expected.code = std::stoi(slurp(base + ".exit"));
  return c;
}

} // namespace support

#endif // ORDHOMEO_TESTS_GOLDEN_RUNNER_HPP
