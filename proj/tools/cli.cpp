#include "cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "zono/asympt.hpp"
#include "zono/error.hpp"
#include "zono/exact.hpp"
#include "zono/sampler.hpp"
#include "zono/special.hpp"

namespace zono::cli {

namespace {

using nlohmann::json;

std::int64_t as_count(double x) {
  if (!(x >= 0) || x != std::floor(x) || x > 1e15)
    throw ArgumentError(fmt::format("n = {} must be a nonnegative integer", x));
  return static_cast<std::int64_t>(x);
}

void require_n(const RunConfig& cfg) {
  if (cfg.n.empty()) throw ArgumentError("--n is required");
}

void require_dim(const RunConfig& cfg, int lo) {
  if (cfg.dim < lo) throw ArgumentError(fmt::format("--dim must be >= {}", lo));
}

std::vector<ZetaZero> zeros_for(const RunConfig& cfg) {
  if (cfg.m < 1) throw ArgumentError("--m must be >= 1");
  std::vector<ZetaZero> zeros =
      cfg.zeros_path.empty() ? std::vector<ZetaZero>{first_zero()} : load_zeros(cfg.zeros_path);
  if (static_cast<std::size_t>(cfg.m) > zeros.size())
    throw ArgumentError(fmt::format("--m {} exceeds the {} available zeros", cfg.m, zeros.size()));
  return zeros;
}

std::string rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, double>)
          return round15(v);
        else
          return v;
      },
      c);
}

std::string cell_csv(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>)
          return fmt::format("{:.15g}", v);
        else if constexpr (std::is_same_v<T, std::string>)
          return v;
        else
          return std::to_string(v);
      },
      c);
}

}  // namespace

double round15(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(fmt::format("{:.15g}", x));
}

json to_json(const Table& t) {
  json j = t.meta;
  j["schema"] = t.schema;
  j["version"] = t.version;
  j["columns"] = t.columns;
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = cell_json(r[i]);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string to_csv(const Table& t) {
  std::string out = fmt::format("# schema: {}/{}\n", t.schema, t.version);
  for (std::size_t i = 0; i < t.columns.size(); ++i) out += (i ? "," : "") + t.columns[i];
  out += '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) out += (i ? "," : "") + cell_csv(r[i]);
    out += '\n';
  }
  return out;
}

Table cmd_count(const RunConfig& cfg) {
  require_dim(cfg, 1);
  require_n(cfg);
  Table t{"zonotopes.count", 1, {"dim", "n", "z_exact", "ln_z"}, {}, json::object()};
  if (cfg.cumulative) t.columns.push_back("z_cumulative");
  for (double nv : cfg.n) {
    const auto n = as_count(nv);
    const IntVec box(cfg.dim, n);
    const mpz_class z = zon_coefficient(cfg.dim, box);
    std::vector<Cell> row{std::int64_t{cfg.dim}, n, z.get_str(), log_big(z)};
    if (cfg.cumulative) row.emplace_back(zon_cumulative(cfg.dim, n).get_str());
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table cmd_compare(const RunConfig& cfg) {
  require_dim(cfg, 2);
  require_n(cfg);
  const auto zeros = zeros_for(cfg);
  Table t{"zonotopes.compare",
          1,
          {"n", "ln_z_exact", "ln_alpha", "beta_ln_n", "q", "icrit", "ln_z_hat", "rel_err"},
          {},
          json::object()};
  t.meta["dim"] = cfg.dim;
  for (double nv : cfg.n) {
    const auto n = as_count(nv);
    if (n < 1) throw ArgumentError("compare needs n >= 1");
    const IntVec box(cfg.dim, n);
    const double ln_z = log_big(zon_coefficient(cfg.dim, box));
    const auto e = estimate(cfg.dim, static_cast<double>(n), zeros, cfg.m);
    t.rows.push_back({n, ln_z, e.ln_alpha, e.beta_ln_n, e.q_value, e.icrit, e.ln_z_hat,
                      (ln_z - e.ln_z_hat) / ln_z});
  }
  return t;
}

Table cmd_moments(const RunConfig& cfg) {
  require_dim(cfg, 1);
  require_n(cfg);
  if (cfg.param != "diameter" && cfg.param != "occurrence")
    throw ArgumentError("--param must be diameter or occurrence");
  const bool occ = cfg.param == "occurrence";
  if (occ && cfg.v0.size() != static_cast<std::size_t>(cfg.dim))
    throw ArgumentError("--param occurrence needs --v0 with dim entries");
  Table t{"zonotopes.moments",
          1,
          {"dim", "n", "param", "count", "mean", "variance", "mean_value", "variance_value"},
          {},
          json::object()};
  if (occ) t.meta["v0"] = cfg.v0;
  for (double nv : cfg.n) {
    const auto n = as_count(nv);
    if (n < 1) throw ArgumentError("moments need n >= 1");
    const MomentPair mp = occ ? occurrence_moments(cfg.dim, n, cfg.v0) : diameter_moments(cfg.dim, n);
    const mpq_class mean = mp.mean(), var = mp.variance();
    t.rows.push_back({std::int64_t{cfg.dim}, n, cfg.param, mp.count.get_str(), rational(mean),
                      rational(var), mean.get_d(), var.get_d()});
  }
  return t;
}

Table cmd_asympt(const RunConfig& cfg) {
  require_dim(cfg, 2);
  require_n(cfg);
  const auto zeros = zeros_for(cfg);
  Table t{"zonotopes.asympt",
          1,
          {"dim", "n", "ln_alpha", "beta", "beta_ln_n", "q_value", "icrit", "ln_z_hat",
           "ln_z_saddle_form"},
          {},
          json::object()};
  json terms = json::array();
  for (const auto& q : q_poly(cfg.dim))
    terms.push_back({{"degree", q.degree}, {"coeff", round15(q.coeff)}, {"symbolic", q.symbolic}});
  t.meta["q_terms"] = std::move(terms);
  for (double n : cfg.n) {
    const auto e = estimate(cfg.dim, n, zeros, cfg.m);
    t.rows.push_back({std::int64_t{cfg.dim}, n, e.ln_alpha, rational(e.beta), e.beta_ln_n,
                      e.q_value, e.icrit, e.ln_z_hat,
                      saddle_form_estimate(cfg.dim, n, zeros, cfg.m)});
  }
  return t;
}

Table cmd_icrit(const RunConfig& cfg) {
  require_dim(cfg, 2);
  require_n(cfg);
  const auto zeros = zeros_for(cfg);
  Table t{"zonotopes.icrit", 1, {"dim", "n", "m", "icrit", "envelope_ratio"}, {}, json::object()};
  const auto form = icrit_form(cfg.dim);
  t.meta["first_zero_form"] = {{"a", round15(form.a)},
                               {"b", round15(form.b)},
                               {"frequency", round15(form.frequency)},
                               {"scale", round15(form.scale)}};
  for (double n : cfg.n) {
    if (!(n > 0)) throw ArgumentError("--n must be positive");
    const double v = icrit(cfg.dim, n, zeros, cfg.m);
    t.rows.push_back({std::int64_t{cfg.dim}, n, std::int64_t{cfg.m}, v,
                      v * std::pow(n, -1.0 / (2.0 * (cfg.dim + 1)))});
  }
  return t;
}

Table cmd_sample(const RunConfig& cfg) {
  require_dim(cfg, 1);
  double theta = cfg.theta;
  if (theta <= 0) {
    if (cfg.n.size() != 1) throw ArgumentError("sample needs --theta or a single --n");
    require_dim(cfg, 2);
    theta = saddle_theta_cube(cfg.dim, cfg.n[0]);
  }
  if (cfg.samples < 1) throw ArgumentError("--samples must be >= 1");
  const bool track = !cfg.v0.empty();
  if (track && cfg.v0.size() != static_cast<std::size_t>(cfg.dim))
    throw ArgumentError("--track needs dim entries");
  const BoltzmannSampler sampler(cfg.dim, theta, cfg.cutoff);

  if (cfg.polygon) {
    if (cfg.dim != 2) throw ArgumentError("--polygon needs --dim 2");
    Table t{"zonotopes.polygon", 1, {"x", "y"}, {}, json::object()};
    t.meta["seed"] = cfg.seed;
    t.meta["theta"] = round15(theta);
    for (const auto& [x, y] : to_polygon(sampler.sample(cfg.seed))) t.rows.push_back({x, y});
    return t;
  }

  Table t{"zonotopes.sample", 1, {"seed", "direction_count"}, {}, json::object()};
  for (int i = 0; i < cfg.dim; ++i) t.columns.push_back(fmt::format("endpoint_{}", i));
  if (track) t.columns.push_back("omega");
  const IntVec key = track ? canonical_class(cfg.v0) : IntVec{};
  double sum = 0, sum2 = 0;
  for (std::size_t s = 0; s < cfg.samples; ++s) {
    const std::uint64_t seed = cfg.seed + s;
    const auto z = sampler.sample(seed);
    std::vector<Cell> row{static_cast<std::int64_t>(seed), z.direction_count};
    for (auto e : z.endpoint) row.emplace_back(e);
    if (track) {
      std::int64_t w = 0;
      for (const auto& e : z.entries)
        if (e.cls == key) w = e.omega;
      row.emplace_back(w);
    }
    t.rows.push_back(std::move(row));
    sum += static_cast<double>(z.direction_count);
    sum2 += static_cast<double>(z.direction_count) * static_cast<double>(z.direction_count);
  }
  const double k = static_cast<double>(cfg.samples);
  const double mean = sum / k;
  const double var = cfg.samples > 1 ? (sum2 - k * mean * mean) / (k - 1) : 0.0;
  t.meta["theta"] = round15(theta);
  t.meta["cutoff"] = cfg.cutoff;
  t.meta["class_count"] = sampler.class_count();
  t.meta["summary"] = {
      {"mean_directions", round15(mean)},
      {"std_error", round15(std::sqrt(var / k))},
      {"expected_directions_truncated",
       round15(expected_directions_truncated(cfg.dim, theta, cfg.cutoff))}};
  return t;
}

int self_test(std::ostream& out) {
  int failures = 0, total = 0;
  auto check = [&](bool ok, const std::string& name) {
    ++total;
    if (!ok) ++failures;
    out << (ok ? "ok   " : "FAIL ") << name << '\n';
  };
  auto rel = [](double a, double b) { return std::abs(a - b) / std::abs(b); };
  const double pi = std::numbers::pi;

  check(beta_exact(2) == mpq_class(-11, 9), "beta_2 = -11/9");
  check(beta_exact(3) == mpq_class(-13, 8), "beta_3 = -13/8");
  check(beta_exact(4) == mpq_class(-521, 225), "beta_4 = -521/225");

  const char* pd[] = {"1", "2*X", "2*X^2 + 1", "4/3*X^3 + 8/3*X", "2/3*X^4 + 10/3*X^2 + 1"};
  for (int d = 1; d <= 5; ++d)
    check(pd_poly(d).to_string() == pd[d - 1], fmt::format("P_{} = {}", d, pd[d - 1]));

  const double z3 = zeta_real(3);
  check(rel(q_poly(2)[0].coeff,
            std::cbrt(4.0) * std::pow(3.0, 4.0 / 3) * std::cbrt(z3) / std::pow(pi, 2.0 / 3)) < 1e-12,
        "Q_2 leading coefficient");
  const double ln_alpha2 = std::log(std::pow(2.0, 1.0 / 9) * std::pow(3.0, 13.0 / 18) *
                                    std::pow(z3, 2.0 / 9) / (6 * std::pow(pi, 16.0 / 9))) -
                           4 * zeta_deriv_neg_int(1);
  check(rel(ln_alpha(2), ln_alpha2) < 1e-9, "ln alpha_2 closed form");

  check(zon_coefficient(2, IntVec{1, 1}) == 3, "z_2(1,1) = 3");
  check(zon_coefficient(2, IntVec{2, 2}) == 10, "z_2(2,2) = 10");
  check(zon_coefficient(2, IntVec{4, 4}) == 109, "z_2(4,4) = 109");
  check(zon_coefficient(3, IntVec{1, 1, 1}) == 11, "z_3(1,1,1) = 11");
  check(zon_cumulative(2, 1) == 6, "cumulative z_2 up to (1,1) = 6");
  check(diameter_moment(2, 1) == mpq_class(4, 3), "mean diameter at d=2, n=1 is 4/3");
  check(std::abs(zeta_complex(cplx(0.5, first_zero().imag))) < 1e-8, "|zeta(rho_1)| < 1e-8");

  out << fmt::format("self-test: {}/{} passed\n", total - failures, total);
  return failures;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact counts, asymptotics and random sampling of lattice zonotopes"};
  app.name("zonotopes");
  RunConfig cfg;
  bool self = false;
  app.add_flag("--self-test", self, "Run the embedded golden checks and exit");
  app.require_subcommand(0, 1);

  auto common = [&](CLI::App* sub, bool integral_n) {
    sub->add_option("--dim", cfg.dim, "Dimension d")->check(CLI::PositiveNumber);
    sub->add_option("--n", cfg.n,
                    integral_n ? "Box side(s); several values give several rows"
                               : "Box side(s), real, e.g. 1e6");
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "auto"}));
    sub->add_option("-o,--output", cfg.output, "Write to this file instead of stdout");
  };
  auto zeros = [&](CLI::App* sub) {
    sub->add_option("--zeros", cfg.zeros_path, "Zeros file: one imaginary part per line");
    sub->add_option("--m", cfg.m, "Number of zeros in the residue sum")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "Exact coefficient z_d(n 1)");
  common(count, true);
  count->add_flag("--cumulative", cfg.cumulative, "Also sum the coefficients over all m <= n 1");

  auto* compare = app.add_subcommand("compare", "Exact count against the asymptotic estimate");
  common(compare, true);
  zeros(compare);

  auto* moments = app.add_subcommand("moments", "Exact mean and variance of a parameter");
  common(moments, true);
  moments->add_option("--param", cfg.param, "diameter or occurrence")
      ->check(CLI::IsMember({"diameter", "occurrence"}));
  moments->add_option("--v0", cfg.v0, "Signed primitive class for --param occurrence");

  auto* asympt = app.add_subcommand("asympt", "Decomposed asymptotic estimate of ln z_d(n 1)");
  common(asympt, false);
  zeros(asympt);

  auto* icrit_cmd = app.add_subcommand("icrit", "Oscillating zeta-zero correction");
  common(icrit_cmd, false);
  zeros(icrit_cmd);

  auto* sample = app.add_subcommand("sample", "Boltzmann samples at the saddle parameter");
  common(sample, false);
  sample->add_option("--theta", cfg.theta, "Parameter theta (default: saddle value of --n)");
  sample->add_option("--samples", cfg.samples, "Number of samples")->check(CLI::PositiveNumber);
  sample->add_option("--seed", cfg.seed, "Seed of the first sample; sample i uses seed + i");
  sample->add_option("--cutoff", cfg.cutoff, "Drop classes with q_v below this")
      ->check(CLI::Range(0.0, 1.0));
  sample->add_option("--track", cfg.v0, "Class whose multiplicity gets its own column");
  sample->add_flag("--polygon", cfg.polygon, "Emit the vertices of the first sample (d = 2)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);  // prints help or the message
    return rc == 0 ? 0 : 2;
  }

  try {
    if (self) return self_test(out) == 0 ? 0 : 1;
    if (app.get_subcommands().empty()) {
      err << app.help();
      return 2;
    }
    const auto* sub = app.get_subcommands().front();
    cfg.subcommand = sub->get_name();

    Table t;
    if (cfg.subcommand == "count") t = cmd_count(cfg);
    else if (cfg.subcommand == "compare") t = cmd_compare(cfg);
    else if (cfg.subcommand == "moments") t = cmd_moments(cfg);
    else if (cfg.subcommand == "asympt") t = cmd_asympt(cfg);
    else if (cfg.subcommand == "icrit") t = cmd_icrit(cfg);
    else t = cmd_sample(cfg);

    std::string format = cfg.format;
    if (format == "auto") format = cfg.subcommand == "sample" ? "csv" : "json";
    const std::string text = format == "csv" ? to_csv(t) : to_json(t).dump(2) + "\n";
    if (cfg.output.empty()) {
      out << text;
    } else {
      std::ofstream file(cfg.output);
      if (!file) throw ArgumentError("cannot write '" + cfg.output + "'");
      file << text;
    }
    return 0;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const ZerosFileError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace zono::cli
