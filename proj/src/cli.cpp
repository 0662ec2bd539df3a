#include "mpbern/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "mpbern/family.hpp"
#include "mpbern/identities.hpp"
#include "mpbern/polylog.hpp"

namespace mpbern {

namespace {

/// Validation failure tied to one command-line field.
struct UsageError : std::runtime_error {
  UsageError(const std::string& field, const std::string& message)
      : std::runtime_error(field + ": " + message) {}
};

enum class Family { multi, reduced, imatomi, hurwitz, symmetrized };

const std::map<std::string, Family> kFamilies{{"multi", Family::multi},
                                              {"reduced", Family::reduced},
                                              {"imatomi", Family::imatomi},
                                              {"hurwitz", Family::hurwitz},
                                              {"symmetrized", Family::symmetrized}};

struct RawOptions {
  std::string family;
  std::string k;
  int n_max = -1;
  int n = -1;
  std::string ln_a = "1";
  std::string ln_b = "0";
  std::string ln_c = "1";
  std::string x = "0";
  std::string y = "0";
  std::string a_shift;
  int r = 2;
  int m = 0;
  bool poly_x = false;
  std::string format;
  std::string table_format = "csv";
  std::string eval_format = "text";
  std::string verify_format = "json";
  std::string out;
  // verify only
  std::vector<std::string> ids;
  std::uint64_t seed = 0;
  std::vector<int> s;
  std::vector<std::string> lambda;
};

Rational parse_field(const std::string& field, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(field, e.what());
  }
}

std::vector<int> parse_index(const std::string& text) {
  if (text.empty()) throw UsageError("--k", "required for this family");
  std::vector<int> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    int value = 0;
    const char* first = item.data();
    const char* last = first + item.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (item.empty() || ec != std::errc() || ptr != last) {
      throw UsageError("--k", "invalid entry '" + item + "' in '" + text + "'");
    }
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct Request {
  Family family;
  std::string family_name;
  std::optional<MultiIndex> k;
  ParamSet p;
  Rational x;
  Rational y;
  std::optional<HurwitzShift> a;
  int r = 2;
  int m = 0;
};

Request build_request(const RawOptions& o) {
  Request q{};
  const auto it = kFamilies.find(o.family);
  if (it == kFamilies.end()) throw UsageError("--family", "unknown family '" + o.family + "'");
  q.family = it->second;
  q.family_name = o.family;
  q.p.alpha = parse_field("--ln-a", o.ln_a);
  q.p.beta = parse_field("--ln-b", o.ln_b);
  q.p.gamma = parse_field("--ln-c", o.ln_c);
  q.x = parse_field("--x", o.x);
  q.y = parse_field("--y", o.y);
  if (q.family != Family::symmetrized) q.k = MultiIndex(parse_index(o.k));
  if (q.family == Family::hurwitz) {
    if (o.a_shift.empty()) throw UsageError("--a-shift", "required for family hurwitz");
    q.a = HurwitzShift{parse_field("--a-shift", o.a_shift)};
  }
  if (q.family == Family::symmetrized) {
    if (o.r < 2) throw UsageError("--r", "must be at least 2");
    if (o.m < 0) throw UsageError("--m", "must be nonnegative");
  }
  q.r = o.r;
  q.m = o.m;
  if (q.family == Family::multi && (q.p.alpha + q.p.beta).is_zero()) {
    throw UsageError("--ln-a/--ln-b", DegenerateParameters().what());
  }
  if (q.family == Family::symmetrized && (q.p.alpha + q.p.beta).is_zero()) {
    throw UsageError("--ln-a/--ln-b", DegenerateParameters().what());
  }
  return q;
}

/// Values for n = 0..n_max at the given x.
std::vector<Rational> family_values(const Request& q, const Rational& x, int n_max) {
  switch (q.family) {
    case Family::multi:
      return multi_poly_bernoulli(*q.k, q.p, x, n_max);
    case Family::reduced:
      return reduced_multi_poly_bernoulli(*q.k, x, n_max);
    case Family::imatomi:
      return imatomi_numbers(*q.k, n_max);
    case Family::hurwitz:
      try {
        return hurwitz_polynomials(*q.k, *q.a, x, n_max);
      } catch (const ShiftError& e) {
        throw UsageError("--a-shift", e.what());
      }
    case Family::symmetrized:
      return symmetrized_definition_table(q.m, n_max, q.r, q.p, x, q.y)[q.m];
  }
  return {};
}

std::vector<Polynomial> family_polys(const Request& q, int n_max) {
  if (q.family == Family::imatomi) throw UsageError("--poly-x", "family imatomi has no x variable");
  // Degree in x is at most n (plus m for the symmetrized family).
  const int points = n_max + 1 + (q.family == Family::symmetrized ? q.m : 0);
  std::vector<std::vector<InterpolationPoint>> samples(static_cast<std::size_t>(n_max + 1));
  for (int i = 0; i < points; ++i) {
    const Rational x(i);
    const auto values = family_values(q, x, n_max);
    for (int n = 0; n <= n_max; ++n) samples[n].emplace_back(x, values[n]);
  }
  std::vector<Polynomial> out;
  for (const auto& s : samples) out.push_back(interpolate(s));
  return out;
}

nlohmann::ordered_json params_json(const Request& q, bool poly) {
  nlohmann::ordered_json p;
  if (q.k) p["k"] = q.k->values();
  if (q.family == Family::multi || q.family == Family::symmetrized) {
    p["ln_a"] = q.p.alpha.str();
    p["ln_b"] = q.p.beta.str();
    p["ln_c"] = q.p.gamma.str();
  }
  if (q.family == Family::symmetrized) {
    p["r"] = q.r;
    p["m"] = q.m;
  }
  if (q.a) p["a_shift"] = q.a->value.str();
  if (!poly && q.family != Family::imatomi) p["x"] = q.x.str();
  if (q.family == Family::symmetrized) p["y"] = q.y.str();
  return p;
}

struct Row {
  int n;
  std::optional<Rational> value;
  std::optional<Polynomial> poly;
};

std::string render_rows(const Request& q, const std::vector<Row>& rows, bool poly,
                        const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json values = nlohmann::ordered_json::array();
    for (const auto& row : rows) {
      nlohmann::ordered_json item{{"n", row.n}};
      if (poly) {
        std::vector<std::string> cs;
        for (const auto& c : row.poly->coefficients()) cs.push_back(c.str());
        if (cs.empty()) cs.push_back("0");
        item["poly_x"] = cs;
      } else {
        item["value"] = row.value->str();
      }
      values.push_back(std::move(item));
    }
    nlohmann::ordered_json doc{
        {"family", q.family_name}, {"params", params_json(q, poly)}, {"values", values}};
    return doc.dump(2) + "\n";
  }
  std::ostringstream out;
  if (!poly) {
    out << "n,value\n";
    for (const auto& row : rows) out << row.n << ',' << row.value->str() << '\n';
    return out.str();
  }
  int deg = 0;
  for (const auto& row : rows) deg = std::max(deg, row.poly->degree());
  out << 'n';
  for (int i = 0; i <= deg; ++i) out << ",c" << i;
  out << '\n';
  for (const auto& row : rows) {
    out << row.n;
    for (int i = 0; i <= deg; ++i) out << ',' << row.poly->coefficient(i).str();
    out << '\n';
  }
  return out.str();
}

std::vector<Row> compute_rows(const Request& q, int n_lo, int n_hi, bool poly) {
  std::vector<Row> rows;
  if (poly) {
    const auto polys = family_polys(q, n_hi);
    for (int n = n_lo; n <= n_hi; ++n) rows.push_back({n, std::nullopt, polys[n]});
  } else {
    const auto values = family_values(q, q.x, n_hi);
    for (int n = n_lo; n <= n_hi; ++n) rows.push_back({n, values[n], std::nullopt});
  }
  return rows;
}

std::string cmd_table(const RawOptions& o) {
  if (o.n_max < 0) throw UsageError("--n-max", "required and must be nonnegative");
  const Request q = build_request(o);
  return render_rows(q, compute_rows(q, 0, o.n_max, o.poly_x), o.poly_x, o.format);
}

std::string cmd_eval(const RawOptions& o) {
  if (o.n < 0) throw UsageError("--n", "required and must be nonnegative");
  const Request q = build_request(o);
  const auto rows = compute_rows(q, o.n, o.n, o.poly_x);
  if (o.format != "text") return render_rows(q, rows, o.poly_x, o.format);
  const Row& row = rows.front();
  if (o.poly_x) {
    const std::string text = row.poly->str();
    return (text.empty() ? "0" : text) + "\n";
  }
  return row.value->str() + "\n";
}

std::pair<std::string, int> cmd_verify(const RawOptions& o, bool n_max_given, std::ostream& err) {
  std::vector<std::string> ids;
  for (const auto& id : o.ids) {
    if (id == "all") {
      for (const auto& info : registered_identities()) ids.push_back(info.id);
    } else if (!find_identity(id)) {
      throw UsageError("identity", UnknownIdentity(id).what());
    } else {
      ids.push_back(id);
    }
  }
  std::vector<Rational> lambdas;
  for (const auto& text : o.lambda) {
    Rational l = parse_field("--lambda", text);
    if (l == Rational(1)) throw UsageError("--lambda", "must differ from 1");
    lambdas.push_back(std::move(l));
  }
  for (int s : o.s) {
    if (s < 0) throw UsageError("--s", "orders must be nonnegative");
  }
  std::vector<IdentityReport> reports;
  for (const auto& id : ids) {
    Grid grid = default_grid(id);
    if (n_max_given) grid.n_max = o.n_max;
    if (!o.s.empty()) grid.orders = o.s;
    if (!lambdas.empty()) grid.lambdas = lambdas;
    for (Variant v : find_identity(id)->variants) reports.push_back(run_identity({id, v, grid, o.seed}));
  }
  const bool ok = corrected_variants_pass(reports);
  std::int64_t corrected_failures = 0;
  for (const auto& r : reports) {
    if (r.variant == Variant::corrected && !r.passed()) ++corrected_failures;
  }
  err << "verify: " << reports.size() << " reports, " << corrected_failures
      << " corrected-variant failures\n";
  const std::string body =
      o.format == "csv" ? reports_to_csv(reports) : reports_to_json(reports, o.seed);
  return {body, ok ? kExitOk : kExitIdentityFailure};
}

void add_family_options(CLI::App* cmd, RawOptions& o) {
  cmd->add_option("--family", o.family, "multi, reduced, imatomi, hurwitz or symmetrized")
      ->required();
  cmd->add_option("--k", o.k, "index, comma-separated integers");
  cmd->add_option("--ln-a", o.ln_a, "ln a as a rational")->capture_default_str();
  cmd->add_option("--ln-b", o.ln_b, "ln b as a rational")->capture_default_str();
  cmd->add_option("--ln-c", o.ln_c, "ln c as a rational")->capture_default_str();
  cmd->add_option("--x", o.x, "x as a rational")->capture_default_str();
  cmd->add_option("--y", o.y, "y (symmetrized family)")->capture_default_str();
  cmd->add_option("--a-shift", o.a_shift, "Hurwitz shift a");
  cmd->add_option("--r", o.r, "depth of the symmetrized family")->capture_default_str();
  cmd->add_option("--m", o.m, "u-degree of the symmetrized family")->capture_default_str();
  cmd->add_flag("--poly-x", o.poly_x, "emit polynomials in x, coefficients low to high");
  cmd->add_option("--out", o.out, "write to FILE instead of standard output");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact generalized multi poly-Bernoulli polynomials and identity checks", "mpbern"};
  app.require_subcommand(1);
  RawOptions o;

  auto* table = app.add_subcommand("table", "rows n = 0..n-max of one family");
  add_family_options(table, o);
  table->add_option("--n-max", o.n_max, "largest n")->required();
  table->add_option("--format", o.table_format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* eval = app.add_subcommand("eval", "a single value or polynomial");
  add_family_options(eval, o);
  eval->add_option("--n", o.n, "index n")->required();
  eval->add_option("--format", o.eval_format, "text, csv or json")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "check identities on their default grids");
  verify->add_option("ids", o.ids, "identity ids or 'all'")->required();
  verify->add_option("--seed", o.seed, "seed for sampled evaluation points")->capture_default_str();
  verify->add_option("--format", o.verify_format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  auto* verify_n_max = verify->add_option("--n-max", o.n_max, "override the grid's largest n");
  verify->add_option("--s", o.s, "override the orders used by order-dependent expansions")
      ->delimiter(',');
  verify->add_option("--lambda", o.lambda, "override the Frobenius-Euler parameters")
      ->delimiter(',');
  verify->add_option("--out", o.out, "write to FILE instead of standard output");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  std::string body;
  int code = kExitOk;
  try {
    if (table->parsed()) {
      o.format = o.table_format;
      body = cmd_table(o);
    } else if (eval->parsed()) {
      o.format = o.eval_format;
      body = cmd_eval(o);
    } else {
      o.format = o.verify_format;
      std::tie(body, code) = cmd_verify(o, verify_n_max->count() > 0, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  if (o.out.empty()) {
    out << body;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
      err << "error: --out: cannot open '" << o.out << "'\n";
      return kExitUsage;
    }
    file << body;
  }
  return code;
}

}  // namespace mpbern
