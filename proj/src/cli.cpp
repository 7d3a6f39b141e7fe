#include "forge/cli.hpp"

#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "forge/families.hpp"
#include "forge/identities.hpp"
#include "forge/oracle.hpp"
#include "forge/series.hpp"

namespace forge::cli {

using exact::Integer;
using exact::Rational;
using json = nlohmann::json;

namespace {

enum class Format { text, csv, js };

void add_format_flags(CLI::App* cmd, Format& fmt, bool with_csv = true) {
  auto* j = cmd->add_flag_callback("--json", [&fmt] { fmt = Format::js; }, "emit JSON");
  auto* t = cmd->add_flag_callback("--text", [&fmt] { fmt = Format::text; }, "emit plain text (default)");
  j->excludes(t);
  if (with_csv) {
    auto* c = cmd->add_flag_callback("--csv", [&fmt] { fmt = Format::csv; }, "emit CSV");
    c->excludes(j);
    c->excludes(t);
  }
}

std::vector<Rational> parse_seed_list(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

std::string power_term(const Rational& v, unsigned e) {
  std::string s = v.sign() < 0 ? "(" + v.str() + ")" : v.str();
  return s + "^" + std::to_string(e);
}

void cmd_expand(std::ostream& out, const std::string& literal, std::size_t count, bool laurent,
                Format fmt) {
  series::RationalFunction rf = series::RationalFunction::parse(literal);
  std::vector<Rational> coeffs = laurent ? series::laurent_coeffs_at_infinity(rf, count)
                                         : series::taylor_coeffs(rf, count);
  switch (fmt) {
    case Format::text:
      for (const Rational& c : coeffs) out << c.str() << "\n";
      break;
    case Format::csv:
      out << "n,coefficient\n";
      for (std::size_t n = 0; n < coeffs.size(); ++n) out << n << "," << coeffs[n].str() << "\n";
      break;
    case Format::js: {
      json j;
      j["function"] = rf.str();
      j["direction"] = laurent ? "laurent" : "taylor";
      j["coefficients"] = json::array();
      for (const Rational& c : coeffs) j["coefficients"].push_back(c.str());
      out << j.dump() << "\n";
      break;
    }
  }
}

void cmd_family(std::ostream& out, const std::string& name, std::size_t n_max,
                std::optional<long> clear_base, Format fmt) {
  const families::FamilySpec& spec = families::family_by_name(name);
  std::vector<families::SolutionTuple> rows = spec.direction == families::Direction::taylor
                                                  ? families::generate(spec, n_max)
                                                  : families::generate_laurent(spec, n_max);
  if (clear_base) {
    std::vector<families::SolutionTuple> cleared;
    cleared.reserve(rows.size());
    for (const auto& r : rows) cleared.push_back(families::clear_denominators(r, Integer(*clear_base)));
    rows = std::move(cleared);
  }
  switch (fmt) {
    case Format::text:
      for (const auto& r : rows) out << families::to_equation(r) << "\n";
      break;
    case Format::csv:
      out << families::tuples_to_csv(rows);
      break;
    case Format::js:
      out << families::tuples_to_json(rows) << "\n";
      break;
  }
}

void cmd_certify(std::ostream& out, const std::string& spec, const std::string& seed_text,
                 const std::string& tuple_json, bool emit_tuple, Format fmt, int& exit_code) {
  identities::QuadraticFormTuple tuple;
  const auto& names = identities::builtin_identity_names();
  if (!tuple_json.empty()) {
    tuple = identities::QuadraticFormTuple::from_json(tuple_json);
  } else if (std::find(names.begin(), names.end(), spec) != names.end()) {
    tuple = identities::builtin_identity(spec);
  } else if (spec == "euler") {
    std::vector<Rational> s = parse_seed_list(seed_text);
    if (s.size() != 4) throw Error("euler needs --seed p,q,r,s");
    tuple = identities::euler_forms(identities::CubicSeed(s[0], s[1], s[2], s[3]));
  } else if (spec == "five") {
    std::vector<Rational> s = parse_seed_list(seed_text);
    if (s.size() != 6) throw Error("five needs --seed p,q,r,s,t,u");
    tuple = identities::five_cube_forms(identities::FiveCubeSeed(s[0], s[1], s[2], s[3], s[4], s[5]));
  } else {
    std::ostringstream os;
    os << "unknown identity '" << spec << "'; use euler, five or one of:";
    for (const auto& n : names) os << " " << n;
    throw Error(os.str());
  }
  identities::CertificationReport rep = identities::certify_report(tuple);
  if (fmt == Format::js) {
    json j;
    j["verdict"] = rep.certified ? "CERTIFIED" : "FAILED";
    j["monomials_checked"] = rep.monomials_checked;
    if (emit_tuple) j["tuple"] = json::parse(tuple.to_json());
    out << j.dump() << "\n";
  } else {
    out << (rep.certified ? "CERTIFIED" : "FAILED") << " (" << rep.monomials_checked
        << " monomials checked)\n";
    if (emit_tuple) out << tuple.to_json() << "\n";
  }
  if (!rep.certified) exit_code = kExitFailedCheck;
}

void cmd_taxicab(std::ostream& out, std::ostream& err, unsigned k, long bound, int workers,
                 Format fmt) {
  const long long pair_count = static_cast<long long>(bound) * (bound + 1) / 2;
  if (pair_count >= 100000) err << "scanning " << pair_count << " cube pairs...\n";
  Integer n = oracle::smallest_with_k_representations(k, bound, workers);
  auto reps = oracle::two_cube_representations(n, bound, false, workers);
  if (fmt == Format::js) {
    out << oracle::representations_to_json(n, reps) << "\n";
  } else {
    out << exact::to_string(n) << "\n";
    for (const auto& [a, b] : reps)
      out << a << "^3 + " << b << "^3\n";
  }
}

void cmd_seeds(std::ostream& out, const std::string& kind, long bound, bool certify, int workers,
               Format fmt) {
  if (kind != "three" && kind != "five") throw Error("seed kind must be 'three' or 'five'");
  std::vector<std::vector<Rational>> seeds;
  std::vector<identities::QuadraticFormTuple> tuples;
  if (kind == "three") {
    for (const auto& s : oracle::seed_search_three_cubes(bound, workers)) {
      seeds.push_back({s.p, s.q, s.r, s.s});
      if (certify) tuples.push_back(identities::euler_forms(s));
    }
  } else {
    for (const auto& s : oracle::seed_search_five_cubes(bound, workers)) {
      seeds.push_back({s.p, s.q, s.r, s.s, s.t, s.u});
      if (certify) tuples.push_back(identities::five_cube_forms(s));
    }
  }
  std::vector<bool> verdicts;
  if (certify)
    for (const auto& t : tuples) verdicts.push_back(identities::certify_identity(t));

  switch (fmt) {
    case Format::text:
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        const auto& s = seeds[i];
        for (std::size_t j = 0; j + 1 < s.size(); ++j)
          out << power_term(s[j], 3) << (j + 2 < s.size() ? " + " : " = ");
        out << power_term(s.back(), 3);
        if (certify) out << (verdicts[i] ? "  CERTIFIED" : "  FAILED");
        out << "\n";
      }
      break;
    case Format::csv: {
      static const char* kCols3 = "p,q,r,s";
      static const char* kCols5 = "p,q,r,s,t,u";
      out << (kind == "three" ? kCols3 : kCols5);
      if (certify) out << ",certified";
      out << "\n";
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        for (std::size_t j = 0; j < seeds[i].size(); ++j)
          out << (j ? "," : "") << seeds[i][j].str();
        if (certify) out << "," << (verdicts[i] ? "true" : "false");
        out << "\n";
      }
      break;
    }
    case Format::js: {
      json arr = json::array();
      for (std::size_t i = 0; i < seeds.size(); ++i) {
        json row = json::array();
        for (const Rational& v : seeds[i]) row.push_back(v.str());
        if (!certify) {
          arr.push_back(row);
        } else {
          arr.push_back(json{{"seed", row}, {"certified", static_cast<bool>(verdicts[i])}});
        }
      }
      out << arr.dump() << "\n";
      break;
    }
  }
}

int env_workers(std::ostream& err, int flag_value) {
  const char* env = std::getenv("TAXICAB_FORGE_WORKERS");
  if (env == nullptr || *env == '\0') return flag_value;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1) {
    err << "ignoring invalid TAXICAB_FORGE_WORKERS='" << env << "'\n";
    return flag_value;
  }
  return static_cast<int>(v);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact generation, expansion and certification of cubic and quartic "
               "sum-of-powers solution families"};
  app.require_subcommand(1);
  int exit_code = kExitOk;

  // expand
  auto* expand = app.add_subcommand("expand", "expand a rational function into coefficients");
  std::string literal;
  std::size_t count = 10;
  bool laurent = false;
  Format expand_fmt = Format::text;
  expand->add_option("function", literal, "rational function, e.g. (1+x)/(1-2x)")->required();
  expand->add_option("--count", count, "number of coefficients")->check(CLI::NonNegativeNumber);
  auto* tay = expand->add_flag_callback("--taylor", [&laurent] { laurent = false; },
                                        "expand at 0 (default)");
  auto* lau = expand->add_flag_callback("--laurent", [&laurent] { laurent = true; },
                                        "expand at infinity");
  lau->excludes(tay);
  add_format_flags(expand, expand_fmt);
  expand->callback([&] { cmd_expand(out, literal, count, laurent, expand_fmt); });

  // family
  auto* family = app.add_subcommand("family", "emit verified rows of a built-in family");
  std::string family_name;
  std::size_t n_max = 5;
  long clear_base = 0;
  Format family_fmt = Format::text;
  family->add_option("name", family_name, "family name, e.g. thm2.5 or thm2.5-laurent")->required();
  family->add_option("--n-max", n_max, "last row index");
  auto* cb = family->add_option("--clear-base", clear_base,
                                "clear denominators with the smallest power of this base");
  add_format_flags(family, family_fmt);
  family->callback([&, cb] {
    std::optional<long> base;
    if (cb->count() > 0) base = clear_base;
    cmd_family(out, family_name, n_max, base, family_fmt);
  });

  // certify
  auto* certify = app.add_subcommand("certify", "certify a parametric identity symbolically");
  std::string certify_spec;
  std::string seed_text;
  std::string tuple_json;
  bool emit_tuple = false;
  Format certify_fmt = Format::text;
  auto* id_opt = certify->add_option("identity", certify_spec,
                                     "eq1.4, eq1.5, eq3.9, eq3.12, or euler/five with --seed");
  certify->add_option("--seed", seed_text, "comma-separated seed, e.g. 3,4,5,6");
  auto* tj = certify->add_option("--tuple-json", tuple_json,
                                 "certify a serialized form tuple instead of a named identity");
  tj->excludes(id_opt);
  certify->add_flag("--emit-tuple", emit_tuple, "also print the form tuple as JSON");
  add_format_flags(certify, certify_fmt, /*with_csv=*/false);
  certify->callback([&, id_opt, tj] {
    if (id_opt->count() == 0 && tj->count() == 0)
      throw Error("certify needs an identity name or --tuple-json");
    cmd_certify(out, certify_spec, seed_text, tuple_json, emit_tuple, certify_fmt, exit_code);
  });

  // taxicab
  auto* taxicab = app.add_subcommand("taxicab", "smallest sum of two positive cubes in k ways");
  unsigned k = 2;
  long bound = 20;
  int workers = 0;
  Format taxicab_fmt = Format::text;
  taxicab->add_option("k", k, "required number of representations")
      ->required()
      ->check(CLI::PositiveNumber);
  taxicab->add_option("bound", bound, "largest cube base searched")
      ->required()
      ->check(CLI::PositiveNumber);
  taxicab->add_option("--workers", workers, "parallel workers (0 = all)");
  add_format_flags(taxicab, taxicab_fmt, /*with_csv=*/false);
  taxicab->callback(
      [&] { cmd_taxicab(out, err, k, bound, env_workers(err, workers), taxicab_fmt); });

  // seeds
  auto* seeds = app.add_subcommand("seeds", "search seed solutions by brute force");
  std::string seed_kind;
  long seed_bound = 6;
  bool seed_certify = false;
  int seed_workers = 0;
  Format seeds_fmt = Format::text;
  seeds->add_option("kind", seed_kind, "'three' (p^3+q^3+r^3=s^3) or 'five'")->required();
  seeds->add_option("--bound", seed_bound, "entry bound")->check(CLI::PositiveNumber);
  seeds->add_flag("--certify", seed_certify, "run each seed through the identity pipeline");
  seeds->add_option("--workers", seed_workers, "parallel workers (0 = all)");
  add_format_flags(seeds, seeds_fmt);
  seeds->callback([&] {
    cmd_seeds(out, seed_kind, seed_bound, seed_certify, env_workers(err, seed_workers), seeds_fmt);
  });

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("taxicab-forge");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const InsufficientBoundError& e) {
    err << "error: " << e.what() << "\n";
    return kExitBound;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return exit_code;
}

}  // namespace forge::cli
