#pragma once

#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffcheck/report_io.hpp"

namespace ffcheck::cli {

enum ExitCode : int { kOk = 0, kViolation = 1, kInvalidInput = 2, kInternal = 3 };

struct Outcome {
  std::string text;
  bool violated = false;
};

inline BigRational parse_rational(std::string_view text, const char* what) {
  const RationalFunction f = parse_rational_function(text);
  if (!f.is_constant()) throw InvalidInput(std::string(what) + " must be a rational number, got '" + std::string(text) + "'");
  return f.constant_value();
}

/// Zeros and poles of the given functions together with infinity.
inline PlaceSet support_places(const std::vector<RationalFunction>& fs) {
  Polynomial p(BigRational(1));
  for (const auto& f : fs)
    if (!f.is_zero()) p = p * f.num() * f.den();
  return PlaceSet(p, true);
}

inline PlaceSet places_or_support(const std::string& text, const std::vector<RationalFunction>& fs) {
  return text.empty() ? support_places(fs) : PlaceSet::parse(text);
}

inline SUnit unit(const RationalFunction& f, const PlaceSet& s) { return certify_sunit(f, s); }

struct SolutionFile {
  BigRational lambda;
  RationalFunction u1, u2, y;
  PlaceSet places;
};

/// "key = value" lines; '#' starts a comment. Keys: lambda, u1, u2, y, places.
inline SolutionFile parse_solution_text(const std::string& text) {
  std::optional<BigRational> lambda;
  std::optional<RationalFunction> u1, u2, y;
  std::optional<PlaceSet> places;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(pos, end - pos);
    const std::size_t line_start = pos;
    pos = end + 1;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("expected 'key = value'", line_start);
    const auto trim = [](const std::string& s, std::size_t& offset) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      offset = b == std::string::npos ? s.size() : b;
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    std::size_t koff = 0, voff = 0;
    const std::string key = trim(line.substr(0, eq), koff);
    const std::string value = trim(line.substr(eq + 1), voff);
    const std::size_t value_start = line_start + eq + 1 + voff;
    if (key != "lambda" && key != "u1" && key != "u2" && key != "y" && key != "places")
      throw ParseError("unknown key '" + key + "'", line_start + koff);
    try {
      if (key == "lambda") lambda = parse_rational(value, "lambda");
      else if (key == "u1") u1 = parse_rational_function(value);
      else if (key == "u2") u2 = parse_rational_function(value);
      else if (key == "y") y = parse_rational_function(value);
      else places = PlaceSet::parse(value);
    } catch (const ParseError& e) {
      throw ParseError("bad value for '" + key + "'", value_start + e.offset());
    }
  }
  const auto missing = [](const char* k) { return InvalidInput(std::string("solution file lacks '") + k + "'"); };
  if (!lambda) throw missing("lambda");
  if (!u1) throw missing("u1");
  if (!u2) throw missing("u2");
  if (!y) throw missing("y");
  if (!places) throw missing("places");
  return {*lambda, *u1, *u2, *y, *places};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Identity, divisibility, classification, split case and image degree for
/// one solution.
inline std::vector<BoundReport> solution_reports(const SolutionFile& f) {
  const Solution sol = make_solution(f.lambda, f.u1, f.u2, f.y, f.places);
  std::vector<BoundReport> out;
  const ConicPair ab = build_ab(sol);
  BoundReport identity;
  identity.check = "derivative-identity";
  identity.inputs = detail::solution_inputs(sol);
  identity.lhs = "2*y*dprime(y)";
  identity.rhs = "B(u1, u2) = " + to_string(ab.b);
  identity.branch = "exact";
  identity.set(true);
  if (sol.change) identity.notes.push_back("places moved so that 0 and infinity lie in S");
  out.push_back(identity);
  out.push_back(divisibility_check(sol));
  out.push_back(classify_conic_solution(sol).report);
  BoundReport skipped;
  skipped.check = "split-case";
  skipped.inputs = detail::solution_inputs(sol);
  try {
    const auto split = split_case_check(sol);
    if (const auto* rep = std::get_if<BoundReport>(&split)) {
      out.push_back(*rep);
    } else {
      skipped.branch = "not-split";
      skipped.notes.push_back(std::get<NotSplit>(split).reason);
      out.push_back(skipped);
    }
  } catch (const InvalidInput& e) {
    skipped.branch = "not-applicable";
    skipped.notes.push_back(e.what());
    out.push_back(skipped);
  }
  const RationalFunction& u1 = sol.u1.value;
  const PlaneMorphism morphism(u1.den() * sol.y.den(), u1.num() * sol.y.den(), sol.y.num() * u1.den());
  if (!morphism.is_constant()) out.push_back(check_image_degree_bound(morphism, sol.u1.places, sol.config));
  return out;
}

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "gcd-sum",       "gcd-bound",         "gcd-alternatives", "quotient-height", "abc-excess",
      "unit-sum",      "wronskian-witness", "implicitize",      "derivative-height", "image-degree",
      "multiple-zero", "coprime-pair",      "shifted-dependence", "fermat-type",   "solution-file",
      "families",      "power-gcd",         "suite"};
  return names;
}

inline std::string joined(const std::vector<std::string>& v) {
  std::string out;
  for (const auto& s : v) out += (out.empty() ? "" : ", ") + s;
  return out;
}

inline Outcome reports_outcome(const std::vector<BoundReport>& reports, Format format) {
  bool violated = false;
  for (const auto& r : reports) violated = violated || r.violated();
  return {render(reports, format), violated};
}

/// Runs one command line; returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of gcd, unit equation and curve degree bounds over Q(t)", "ffcheck"};
  app.set_help_flag("--help", "print help");
  app.fallthrough();
  app.require_subcommand(1);
  std::string format_name = "json";
  app.add_option("--format", format_name, "json, csv or text")->envname("FFCHECK_FORMAT");

  std::string a, b, places, x, y, z, u1, u2, alpha, beta, poly_a, poly_a2, f, g, path, family, suite_name;
  std::string lambda_text, epsilon_text = "1/2", base_text = "0", cusp_p = "1+t";
  std::string x0, x1, x2;
  std::vector<std::string> thetas;
  unsigned h = 1, k = 1, n = 0, n_max = 0, d = 0, m = 0, nn = 0;
  long r = 0, s = 0;
  std::uint64_t seed = 0;
  std::size_t count = 0;
  bool allow_dependent = false;
  std::vector<std::pair<CLI::App*, std::function<Outcome(Format)>>> actions;

  const auto add = [&](const std::string& name, const std::string& help) {
    auto* c = app.add_subcommand(name, help);
    c->set_help_flag("--help", "print help");
    return c;
  };
  const auto places_opt = [&](CLI::App* c) {
    c->add_option("--places", places, "place set, e.g. \"t, t+1, inf\"; defaults to the support plus infinity");
  };

  {
    auto* c = add("gcd-sum", "sum over places outside S of min(v(1-a), v(1-b))");
    c->add_option("--a", a)->required();
    c->add_option("--b", b)->required();
    places_opt(c);
    actions.push_back({c, [&](Format fmt) {
      const auto fa = parse_rational_function(a), fb = parse_rational_function(b);
      const PlaceSet ps = places_or_support(places, {fa, fb});
      BoundReport rep;
      rep.check = "gcd-sum";
      rep.inputs = {{"a", to_string(fa)}, {"b", to_string(fb)}, {"places", ps.to_string()}};
      rep.lhs = std::to_string(gcd_sum(unit(fa, ps), unit(fb, ps)));
      rep.branch = "value";
      rep.context = {{"chi", std::to_string(ps.euler_characteristic())}};
      rep.set(true);
      return reports_outcome({rep}, fmt);
    }});
  }
  {
    auto* c = add("gcd-bound", "cube-root bound on the gcd sum of two S-units");
    c->add_option("--a", a)->required();
    c->add_option("--b", b)->required();
    places_opt(c);
    c->add_flag("--allow-dependent", allow_dependent, "also check multiplicatively dependent pairs");
    actions.push_back({c, [&](Format fmt) {
      const auto fa = parse_rational_function(a), fb = parse_rational_function(b);
      const PlaceSet ps = places_or_support(places, {fa, fb});
      const SUnit ua = unit(fa, ps), ub = unit(fb, ps);
      if (!allow_dependent && !(fa.is_constant() && fb.is_constant()))
        if (const auto rel = multiplicative_dependence(ua, ub))
          throw InvalidInput("a and b are multiplicatively dependent: a^" + std::to_string(rel->r) + " * b^" +
                             std::to_string(rel->s) + " = " + to_string(rel->mu) +
                             "; pass --allow-dependent to check the dependent bound");
      return reports_outcome({check_gcd_sum_bound(ua, ub)}, fmt);
    }});
  }
  for (const auto& [name, quotient] :
       {std::pair<std::string, bool>{"gcd-alternatives", false}, {"quotient-height", true}}) {
    auto* c = add(name, quotient ? "either a relation P(a, b) = 0 or a height bound for (1-a)/(1-b)"
                                 : "either a relation P(a, b) = 0 or a bound on the gcd sum");
    c->add_option("--a", a)->required();
    c->add_option("--b", b)->required();
    c->add_option("--h", h)->required();
    c->add_option("--k", k)->required();
    places_opt(c);
    actions.push_back({c, [&, quotient](Format fmt) {
      const auto fa = parse_rational_function(a), fb = parse_rational_function(b);
      const PlaceSet ps = places_or_support(places, {fa, fb});
      const SUnit ua = unit(fa, ps), ub = unit(fb, ps);
      return reports_outcome({quotient ? check_quotient_height_alternatives(ua, ub, h, k)
                                       : check_gcd_sum_alternatives(ua, ub, h, k)},
                             fmt);
    }});
  }
  {
    auto* c = add("abc-excess", "multiple zeros of 1 - b against chi");
    c->add_option("--b", b)->required();
    places_opt(c);
    actions.push_back({c, [&](Format fmt) {
      const auto fb = parse_rational_function(b);
      const PlaceSet ps = places_or_support(places, {fb, RationalFunction(1) - fb});
      return reports_outcome({multiple_zero_excess(unit(fb, ps))}, fmt);
    }});
  }
  {
    auto* c = add("unit-sum", "zeros outside S of a sum of S-units");
    c->add_option("--theta", thetas, "repeat for each term")->required();
    places_opt(c);
    actions.push_back({c, [&](Format fmt) {
      std::vector<RationalFunction> fs;
      for (const auto& t : thetas) fs.push_back(parse_rational_function(t));
      const PlaceSet ps = places_or_support(places, fs);
      std::vector<SUnit> us;
      for (const auto& fn : fs) us.push_back(unit(fn, ps));
      return reports_outcome({unit_sum_lower_bound(us)}, fmt);
    }});
  }
  {
    auto* c = add("wronskian-witness", "nonzero Wronskian of the auxiliary family, or a relation P(a, b) = 0");
    c->add_option("--a", a)->required();
    c->add_option("--b", b)->required();
    c->add_option("--h", h)->required();
    c->add_option("--k", k)->required();
    places_opt(c);
    actions.push_back({c, [&](Format fmt) {
      const auto fa = parse_rational_function(a), fb = parse_rational_function(b);
      const PlaceSet ps = places_or_support(places, {fa, fb});
      const auto w = wronskian_witness(unit(fa, ps), unit(fb, ps), h, k);
      BoundReport rep;
      rep.check = "wronskian-witness";
      rep.inputs = {{"a", to_string(fa)}, {"b", to_string(fb)}, {"h", std::to_string(h)}, {"k", std::to_string(k)}};
      if (const auto* cert = std::get_if<WronskianCertificate>(&w)) {
        rep.branch = "wronskian";
        rep.lhs = to_string(cert->wronskian);
        rep.rhs = "nonzero";
      } else {
        const auto& rel = std::get<PolynomialRelation>(w).p;
        rep.branch = "relation";
        rep.lhs = to_string(rel);
        rep.rhs = "0 at (a, b)";
        rep.context = {{"deg_X", std::to_string(rel.degree_x())}, {"deg_Y", std::to_string(rel.degree_y())}};
      }
      rep.set(true);
      return reports_outcome({rep}, fmt);
    }});
  }
  {
    auto* c = add("implicitize", "implicit equation of t -> (x(t), y(t))");
    c->add_option("--x", x)->required();
    c->add_option("--y", y)->required();
    actions.push_back({c, [&](Format fmt) {
      const auto fx = parse_rational_function(x), fy = parse_rational_function(y);
      const Implicitization imp = implicitize(fx, fy);
      BoundReport rep;
      rep.check = "implicitize";
      rep.inputs = {{"x", to_string(fx)}, {"y", to_string(fy)}};
      rep.lhs = to_string(imp.equation);
      rep.rhs = "0";
      rep.branch = imp.index_determined ? "index-determined" : "index-undetermined";
      rep.context = {{"index", std::to_string(imp.index)},
                     {"degree", std::to_string(imp.equation.total_degree())}};
      rep.set(true);
      return reports_outcome({rep}, fmt);
    }});
  }
  {
    auto* c = add("derivative-height", "height of the derivative with respect to the frame");
    c->add_option("--a", a)->required();
    c->add_option("--places", places)->required();
    c->add_option("--base", base_text, "base point of the frame");
    actions.push_back({c, [&](Format fmt) {
      const DerivationFrame frame(PlaceSet::parse(places), parse_rational(base_text, "base"));
      return reports_outcome({check_derivative_height(parse_rational_function(a), frame)}, fmt);
    }});
  }
  {
    auto* c = add("image-degree", "degree of the image curve of t -> (x0 : x1 : x2)");
    c->add_option("--x0", x0)->required();
    c->add_option("--x1", x1)->required();
    c->add_option("--x2", x2)->required();
    c->add_option("--places", places)->required();
    c->add_option("--lambda", lambda_text, "require avoidance of the quartic with this lambda");
    actions.push_back({c, [&](Format fmt) {
      const PlaneMorphism morphism(parse_polynomial(x0), parse_polynomial(x1), parse_polynomial(x2));
      std::optional<ConicConfig> config;
      if (!lambda_text.empty()) config.emplace(parse_rational(lambda_text, "lambda"));
      return reports_outcome({check_image_degree_bound(morphism, PlaceSet::parse(places), config)}, fmt);
    }});
  }
  {
    auto* c = add("multiple-zero", "multiple zeros of A(u1, u2) outside S");
    c->add_option("--A", poly_a)->required();
    c->add_option("--u1", u1)->required();
    c->add_option("--u2", u2)->required();
    c->add_option("--epsilon", epsilon_text);
    places_opt(c);
    actions.push_back({c, [&](Format fmt) {
      const auto f1 = parse_rational_function(u1), f2 = parse_rational_function(u2);
      const PlaceSet ps = places_or_support(places, {f1, f2});
      return reports_outcome({check_multiple_zero_bound(parse_bivariate(poly_a), unit(f1, ps), unit(f2, ps),
                                                        parse_rational(epsilon_text, "epsilon"))},
                             fmt);
    }});
  }
  {
    auto* c = add("coprime-pair", "common zeros of A1(u1, u2) and A2(u1, u2) outside S");
    c->add_option("--A1", poly_a)->required();
    c->add_option("--A2", poly_a2)->required();
    c->add_option("--u1", u1)->required();
    c->add_option("--u2", u2)->required();
    c->add_option("--epsilon", epsilon_text);
    places_opt(c);
    actions.push_back({c, [&](Format fmt) {
      const auto f1 = parse_rational_function(u1), f2 = parse_rational_function(u2);
      const PlaceSet ps = places_or_support(places, {f1, f2});
      return reports_outcome({check_coprime_pair_gcd_bound(parse_bivariate(poly_a), parse_bivariate(poly_a2),
                                                           unit(f1, ps), unit(f2, ps),
                                                           parse_rational(epsilon_text, "epsilon"))},
                             fmt);
    }});
  }
  {
    auto* c = add("shifted-dependence", "u1/alpha, u2/beta constant or dependent like u1, u2");
    c->add_option("--u1", u1)->required();
    c->add_option("--u2", u2)->required();
    c->add_option("--alpha", alpha)->required();
    c->add_option("--beta", beta)->required();
    c->add_option("--r", r)->required();
    c->add_option("--s", s)->required();
    c->add_option("--A", poly_a)->required();
    places_opt(c);
    actions.push_back({c, [&](Format fmt) {
      const auto f1 = parse_rational_function(u1), f2 = parse_rational_function(u2);
      const PlaceSet ps = places_or_support(places, {f1, f2});
      return reports_outcome({check_shifted_dependence(unit(f1, ps), unit(f2, ps), parse_rational_function(alpha),
                                                       parse_rational_function(beta), r, s, parse_bivariate(poly_a))},
                             fmt);
    }});
  }
  {
    auto* c = add("fermat-type", "z^d = P(x^m, y^n) with S-unit powers");
    c->add_option("--d", d)->required();
    c->add_option("--m", m)->required();
    c->add_option("--n", nn)->required();
    c->add_option("--P", poly_a)->required();
    c->add_option("--x", x)->required();
    c->add_option("--y", y)->required();
    c->add_option("--z", z)->required();
    c->add_option("--epsilon", epsilon_text);
    places_opt(c);
    actions.push_back({c, [&](Format fmt) {
      const auto fx = parse_rational_function(x), fy = parse_rational_function(y);
      const PlaceSet ps = places_or_support(places, {fx, fy});
      return reports_outcome({fermat_type_check(d, m, nn, parse_bivariate(poly_a), fx, fy, parse_rational_function(z),
                                                ps, parse_rational(epsilon_text, "epsilon"))},
                             fmt);
    }});
  }
  {
    auto* c = add("solution-file", "all checks on a solution y^2 = u1^2 + lambda*u1 + u2 + 1 read from a file");
    c->add_option("path", path)->required();
    actions.push_back({c, [&](Format fmt) {
      return reports_outcome(solution_reports(parse_solution_text(read_file(path))), fmt);
    }});
  }
  {
    auto* c = add("families", "curve families avoiding a plane divisor");
    c->add_option("family", family, joined(family_names()))->required();
    auto* single = c->add_option("--n", n, "one member");
    auto* table = c->add_option("--n-max", n_max, "unboundedness table up to n_max");
    single->excludes(table);
    c->add_option("--p", cusp_p, "polynomial p for the cusp family");
    actions.push_back({c, [&, single, table](Format fmt) {
      const Polynomial p = parse_polynomial(cusp_p);
      if (table->count() > 0) {
        const UnboundednessTable t = unboundedness_table(family, n_max, p);
        bool violated = false;
        for (const auto& row : t.rows) violated = violated || row.claim_verdict == Verdict::Violated;
        return Outcome{render(t, fmt), violated};
      }
      if (single->count() == 0) throw InvalidInput("families needs --n or --n-max");
      const FamilyCertificate cert = family_member(family, n, p);
      return Outcome{render(std::vector<FamilyCertificate>{cert}, fmt), cert.claim_verdict == Verdict::Violated};
    }});
  }
  {
    auto* c = add("power-gcd", "deg gcd(f^n - 1, g^n - 1) for n <= n_max");
    c->add_option("--f", f)->required();
    c->add_option("--g", g)->required();
    c->add_option("--n-max", n_max)->required();
    actions.push_back({c, [&](Format fmt) {
      const SuiteResult res = power_gcd_scan_suite(parse_polynomial(f), parse_polynomial(g), n_max);
      std::vector<BoundReport> rows;
      for (const auto& row : power_gcd_table(parse_polynomial(f), parse_polynomial(g), n_max)) {
        BoundReport rep;
        rep.check = "power-gcd";
        rep.inputs = {{"n", std::to_string(row.n)}};
        rep.lhs = std::to_string(row.degree);
        rep.rhs = "3*2^(1/3)*(" + row.bound_product.get_str() + ")^(1/3)";
        rep.cubed = CubedComparison{row.lhs_cubed, BigInt(54), row.bound_product};
        rep.branch = "independent";
        rep.set(row.holds);
        rows.push_back(std::move(rep));
      }
      return Outcome{render(rows, fmt), res.violated > 0};
    }});
  }
  {
    auto* c = add("suite", "seeded batch of checks with aggregate counts");
    c->add_option("name", suite_name, joined(suite_names()))->required();
    c->add_option("--seed", seed);
    c->add_option("--count", count);
    c->add_option("--n-max", n_max);
    c->add_option("--f", f);
    c->add_option("--g", g);
    c->add_option("--A1", poly_a);
    c->add_option("--A2", poly_a2);
    c->add_option("--epsilon", epsilon_text);
    actions.push_back({c, [&, c](Format fmt) {
      const auto need_seed = [&] {
        if (c->count("--seed") == 0) throw InvalidInput("suite " + suite_name + " needs --seed");
        return seed;
      };
      const auto count_or = [&](std::size_t fallback) { return c->count("--count") ? count : fallback; };
      SuiteResult res;
      if (suite_name == "gcd-bound-random") {
        res = gcd_bound_random_suite(need_seed(), count_or(1000));
      } else if (suite_name == "abc-excess-random") {
        res = abc_excess_random_suite(need_seed(), count_or(500));
      } else if (suite_name == "unit-sum-random") {
        res = unit_sum_random_suite(need_seed(), count_or(500));
      } else if (suite_name == "conic-fixtures") {
        res = conic_fixtures_suite(need_seed(), count_or(100));
      } else if (suite_name == "families-all") {
        res = families_suite(c->count("--n-max") ? n_max : 10);
      } else if (suite_name == "power-gcd-scan") {
        res = power_gcd_scan_suite(parse_polynomial(f.empty() ? "t" : f), parse_polynomial(g.empty() ? "t+1" : g),
                                   c->count("--n-max") ? n_max : 200);
      } else if (suite_name == "coprime-pair-random") {
        res = coprime_pair_random_suite(parse_bivariate(poly_a.empty() ? "X-1" : poly_a),
                                        parse_bivariate(poly_a2.empty() ? "X*Y-1" : poly_a2),
                                        parse_rational(epsilon_text, "epsilon"), need_seed(), count_or(200));
      } else {
        throw InvalidInput("unknown suite '" + suite_name + "'; known: " + joined(suite_names()));
      }
      return Outcome{render(res, fmt), res.violated > 0};
    }});
  }

  if (argc > 1 && argv[1][0] != '-') {
    const auto& names = command_names();
    if (std::find(names.begin(), names.end(), argv[1]) == names.end()) {
      err << "error: unknown command '" << argv[1] << "'\ncommands: " << joined(names) << "\n";
      return kInvalidInput;
    }
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    if (app.get_subcommands().empty()) err << "commands: " << joined(command_names()) << "\n";
    return kInvalidInput;
  }

  try {
    const Format format = parse_format(format_name);
    for (const auto& [cmd, action] : actions)
      if (cmd->parsed()) {
        const Outcome o = action(format);
        out << o.text;
        return o.violated ? kViolation : kOk;
      }
    throw InternalError("no command selected");
  } catch (const TheoremViolation& e) {
    err << "violation: " << e.what() << "\n";
    return kViolation;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const ResourceLimit& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace ffcheck::cli
