// Command-line front end: ball enumeration, orbits, Cesàro scans,
// periodicity and fixed-point verdicts, and the reproduction suite.
//
// Exit codes: 0 success, 1 usage error, 2 node cap exceeded, 3 domain violation,
// 4 when a reproduction item fails.

#include "mdtds/bank.hpp"
#include "mdtds/cesaro.hpp"
#include "mdtds/circle.hpp"
#include "mdtds/json.hpp"
#include "mdtds/reproduce.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace mdt;
using json = nlohmann::json;

struct RunConfig
{
  int           rank = 2;
  bool          rank_given = false;
  std::string   model = "identity";
  std::string   q_text;
  std::string   theta_text;
  std::string   x_text = "1";
  std::string   spec_text = "full";
  long          n = 2;
  long          n_max = 6;
  long          depth = 4;
  long          depth_t = 4;
  long          depth_r = 4;
  std::string   format;
  std::string   out_path;
  unsigned      threads = 1;
  std::uint64_t cap = kDefaultNodeCap;
  std::string   mode = "exact";
  std::string   item = "all";
};

std::vector<std::string> split(std::string const &s, char sep)
{
  std::vector<std::string> out;
  std::stringstream        ss(s);
  std::string              item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) { out.push_back(item); }
  }
  return out;
}

std::vector<Rational> parse_rationals(std::string const &s)
{
  std::vector<Rational> out;
  for (auto const &tok : split(s, ',')) { out.push_back(parse_rational(tok)); }
  if (out.empty()) { throw ParseError("expected a comma-separated list of numbers"); }
  return out;
}

void emit(RunConfig const &cfg, std::string const &text)
{
  if (cfg.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out_path);
  if (!f) { throw InvalidArgument("cannot open output file " + cfg.out_path); }
  f << text;
}

// The circle model runs in floating mode when the angles carry an ":approx"
// suffix; everything else follows --mode.
bool floating(RunConfig const &cfg)
{
  if (cfg.model == "circle") { return cfg.theta_text.ends_with(":approx"); }
  return cfg.mode == "float";
}

std::string theta_list(RunConfig const &cfg)
{
  auto t = cfg.theta_text;
  if (t.ends_with(":approx")) { t.resize(t.size() - 7); }
  return t;
}

template <typename Scalar>
CircleParams<Scalar> circle_params(RunConfig const &cfg)
{
  std::vector<Scalar> th;
  for (auto const &tok : split(theta_list(cfg), ',')) { th.push_back(ScalarTraits<Scalar>::parse(tok)); }
  if (th.empty()) { throw ParseError("--theta is required for the circle model"); }
  return CircleParams<Scalar>(std::move(th));
}

// Resolves the model to a family and fixes |S| from its parameters.
template <typename Scalar>
MapFamily<Scalar> make_family(RunConfig &cfg)
{
  auto set_rank = [&](int r) {
    if (cfg.rank_given && cfg.rank != r) { throw InvalidArgument("--s disagrees with the number of model parameters"); }
    cfg.rank = r;
  };
  if (cfg.model == "identity") { return identity_family<Scalar>(cfg.rank); }
  if (cfg.model == "sign") { return sign_family<Scalar>(cfg.rank); }
  if (cfg.model == "affine-square") {
    set_rank(2);
    return affine_square_family<Scalar>();
  }
  if (cfg.model == "circle") {
    auto p = circle_params<Scalar>(cfg);
    set_rank(p.rank());
    return circle_family(p);
  }
  if (cfg.model == "bank") {
    if constexpr (!is_exact_v<Scalar>) {
      throw InvalidArgument("the bank model is exact-only");
    } else {
      BankParams p(parse_rationals(cfg.q_text));
      set_rank(p.rank());
      return bank_family(p);
    }
  }
  throw InvalidArgument("unknown model '" + cfg.model + "' (identity, sign, affine-square, bank, circle)");
}

template <typename Fn>
void dispatch(RunConfig const &cfg, Fn &&fn)
{
  if (floating(cfg)) {
    fn(double{});
  } else {
    fn(Rational{});
  }
}

void cmd_ball(RunConfig const &cfg)
{
  std::string const fmt = cfg.format.empty() ? "csv" : cfg.format;
  BallCursor c(cfg.rank, cfg.n, cfg.cap);
  if (fmt == "json") {
    json rows = json::array();
    while (c.next()) {
      rows.push_back({{"word", to_string(c.word())},
                      {"length", c.depth()},
                      {"parent", c.depth() ? json(to_string(c.parent())) : json(nullptr)},
                      {"appended", c.depth() ? json(to_string(c.appended())) : json(nullptr)}});
    }
    emit(cfg, rows.dump(2) + "\n");
    return;
  }
  std::string out = "word,length,parent,appended\n";
  while (c.next()) {
    out += to_string(c.word()) + "," + std::to_string(c.depth()) + "," + (c.depth() ? to_string(c.parent()) : "") +
           "," + (c.depth() ? to_string(c.appended()) : "") + "\n";
  }
  emit(cfg, out);
}

void cmd_orbit(RunConfig cfg)
{
  dispatch(cfg, [&]<typename Scalar>(Scalar) {
    auto const f  = make_family<Scalar>(cfg);
    Scalar const x = ScalarTraits<Scalar>::parse(cfg.x_text);
    auto const ob = orbit_ball(f, x, cfg.n, cfg.cap);
    if (cfg.format == "json") {
      json rows = json::array();
      for (auto const &[w, v] : ob.entries) { rows.push_back({{"word", to_string(w)}, {"value", io::scalar_to_json(v)}}); }
      emit(cfg, rows.dump(2) + "\n");
      return;
    }
    std::string out = "word,value\n";
    for (auto const &[w, v] : ob.entries) { out += to_string(w) + "," + ScalarTraits<Scalar>::str(v) + "\n"; }
    emit(cfg, out);
  });
}

void cmd_cesaro(RunConfig cfg)
{
  dispatch(cfg, [&]<typename Scalar>(Scalar) {
    auto const f = make_family<Scalar>(cfg);
    Scalar const x = ScalarTraits<Scalar>::parse(cfg.x_text);
    auto const report = cesaro_scan(f, x, cfg.n_max, cfg.threads, cfg.cap);
    emit(cfg, to_csv(report));
  });
}

void cmd_periodic(RunConfig cfg)
{
  dispatch(cfg, [&]<typename Scalar>(Scalar) {
    auto const f    = make_family<Scalar>(cfg);
    auto const spec = parse_subgroup(cfg.spec_text, cfg.rank);
    Scalar const x  = ScalarTraits<Scalar>::parse(cfg.x_text);
    json out{{"model", cfg.model},
             {"subgroup", to_string(spec)},
             {"x", io::scalar_to_json(x)},
             {"fixed_under_H", io::to_json(is_H_fixed(f, spec, x, cfg.depth_r, cfg.cap))},
             {"periodic", io::to_json(is_H_periodic(f, spec, x, cfg.depth_t, cfg.depth_r, cfg.cap))}};
    if constexpr (is_exact_v<Scalar>) {
      if (cfg.model == "bank") {
        out["set_level"] = io::to_json(bank_classify_periodicity(BankParams(parse_rationals(cfg.q_text)), spec, cfg.depth, cfg.cap));
      }
    }
    if (cfg.model == "circle") {
      out["set_level"] = io::to_json(circle_periodic_set(circle_params<Scalar>(cfg), spec, cfg.depth, cfg.cap));
    }
    emit(cfg, out.dump(2) + "\n");
  });
}

void cmd_fixed(RunConfig cfg)
{
  dispatch(cfg, [&]<typename Scalar>(Scalar) {
    auto const f   = make_family<Scalar>(cfg);
    Scalar const x = ScalarTraits<Scalar>::parse(cfg.x_text);
    json out{{"model", cfg.model},
             {"family", f.describe()},
             {"x", io::scalar_to_json(x)},
             {"residual", io::scalar_to_json(fixed_point_residual(f, x))},
             {"fixed", is_fixed(f, x)}};
    if (cfg.model == "circle") { out["set_level"] = io::to_json(circle_fixed_set(circle_params<Scalar>(cfg))); }
    if constexpr (is_exact_v<Scalar>) {
      if (cfg.model == "bank") {
        out["set_level"] = io::to_json(
          bank_classify_periodicity(BankParams(parse_rationals(cfg.q_text)), SubgroupSpec::full(cfg.rank), 1, cfg.cap));
      }
    }
    emit(cfg, out.dump(2) + "\n");
  });
}

int cmd_reproduce(RunConfig const &cfg)
{
  ReproOptions opt;
  opt.n_max   = cfg.n_max;
  opt.depth   = cfg.depth;
  opt.threads = cfg.threads;
  std::vector<std::string> items = cfg.item == "all" ? repro_items() : split(cfg.item, ',');
  std::string out;
  bool        all_pass = true;
  for (auto const &item : items) {
    ReproOptions o = opt;
    if (!cfg.q_text.empty()) {
      // --q is 2|S| for the sign study and the list of bank rates elsewhere.
      if (item == "sign-sums") {
        o.q = std::stoi(cfg.q_text);
      } else if (item.starts_with("bank-")) {
        o.bank_q = parse_rationals(cfg.q_text);
      }
    }
    auto const r = reproduce(item, o);
    all_pass     = all_pass && r.pass();
    out += format(r);
  }
  emit(cfg, out);
  return all_pass ? 0 : 4;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Dynamical systems with free-group time: enumeration, orbits, periodicity, Cesàro means"};
  app.set_config("--config", "", "Read options from a key=value file");
  app.require_subcommand(1);

  RunConfig cfg;
  auto add_common = [&](CLI::App *sub) {
    sub->add_option("--s", cfg.rank, "Number of generators |S|")->check(CLI::PositiveNumber);
    sub->add_option("--cap", cfg.cap, "Node cap for ball traversals");
    sub->add_option("--out", cfg.out_path, "Write output to a file instead of stdout");
    sub->add_option("--threads", cfg.threads, "Worker threads for scans")->check(CLI::PositiveNumber);
  };
  auto add_model = [&](CLI::App *sub) {
    sub->add_option("--model", cfg.model, "identity | sign | affine-square | bank | circle");
    sub->add_option("--q", cfg.q_text, "Bank rates q_i (p/q or decimals), comma-separated");
    sub->add_option("--theta", cfg.theta_text, "Rotation angles, comma-separated; suffix :approx for floating mode");
    sub->add_option("--x", cfg.x_text, "Start point");
    sub->add_option("--mode", cfg.mode, "exact | float")->check(CLI::IsMember({"exact", "float"}));
  };

  auto *ball = app.add_subcommand("ball", "List V_n with parents");
  add_common(ball);
  ball->add_option("--n", cfg.n, "Radius")->check(CLI::NonNegativeNumber);
  ball->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto *orbit = app.add_subcommand("orbit", "D_t(x) for every t in V_n");
  add_common(orbit);
  add_model(orbit);
  orbit->add_option("--n", cfg.n, "Radius")->check(CLI::NonNegativeNumber);
  orbit->add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  auto *cesaro = app.add_subcommand("cesaro", "Cesàro means over V_0..V_nmax (CSV)");
  add_common(cesaro);
  add_model(cesaro);
  cesaro->add_option("--nmax", cfg.n_max, "Largest radius")->check(CLI::NonNegativeNumber);

  auto *periodic = app.add_subcommand("periodic", "H-periodicity verdicts (JSON)");
  add_common(periodic);
  add_model(periodic);
  periodic->add_option("--spec", cfg.spec_text, "Subgroup: full, cyclic:<word>, bal:<i,..>, even:<i,..>, ker:<i,..>, and(..;..)");
  periodic->add_option("--depth-t", cfg.depth_t, "Radius of the t window")->check(CLI::PositiveNumber);
  periodic->add_option("--depth-r", cfg.depth_r, "Radius of the H window")->check(CLI::PositiveNumber);
  periodic->add_option("--depth", cfg.depth, "Search depth for set-level verdicts")->check(CLI::PositiveNumber);

  auto *fixed = app.add_subcommand("fixed", "Fixed-point residual and set-level fixed set (JSON)");
  add_common(fixed);
  add_model(fixed);

  auto *repro = app.add_subcommand("reproduce", "Run reproduction items and print pass/fail per item");
  add_common(repro);
  repro->add_option("--item", cfg.item, "Item name(s), comma-separated, or 'all'");
  repro->add_option("--q", cfg.q_text, "2|S| for sign-sums, bank rates for the bank items");
  repro->add_option("--nmax", cfg.n_max, "Largest radius for scans")->check(CLI::NonNegativeNumber);
  repro->add_option("--depth", cfg.depth, "Verification depth")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const &e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (auto *sub : app.get_subcommands()) { cfg.rank_given = sub->count("--s") > 0; }

  try {
    if (*ball) { cmd_ball(cfg); }
    if (*orbit) { cmd_orbit(cfg); }
    if (*cesaro) { cmd_cesaro(cfg); }
    if (*periodic) { cmd_periodic(cfg); }
    if (*fixed) { cmd_fixed(cfg); }
    if (*repro) {
      if (repro->count("--nmax") == 0) { cfg.n_max = 12; }
      return cmd_reproduce(cfg);
    }
  } catch (ResourceLimit const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (DomainViolation const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (std::invalid_argument const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
