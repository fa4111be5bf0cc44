#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli/cli.hpp"
#include "cli/report.hpp"
#include "gyro/check_axioms.hpp"
#include "gyro/einstein.hpp"
#include "gyro/error.hpp"
#include "gyro/finite/constructions.hpp"
#include "gyro/finite/gyrogroup.hpp"
#include "gyro/finite/search.hpp"
#include "gyro/finite/subgyrogroups.hpp"
#include "gyro/finite/table_io.hpp"
#include "gyro/mobius.hpp"
#include "gyro/topo.hpp"

namespace gyro::cli {

namespace {

using finite::CayleyTable;
using finite::Gyrogroup;
using finite::SubsetMask;

struct Outcome {
  Json report;
  int exit_code = kExitOk;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::parse_error, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

template <class T>
std::vector<T> parse_list(const std::string& text, std::string_view flag) {
  std::vector<T> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string item = text.substr(pos, end - pos);
    T value{};
    const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc{} || ptr != item.data() + item.size())
      throw UsageError(std::string(flag) + ": cannot parse '" + item + "' in '" + text + "'");
    out.push_back(value);
    pos = end + 1;
  }
  return out;
}

SubsetMask parse_subset(const std::string& text, int order) {
  const std::vector<int> elements = parse_list<int>(text, "--subset");
  return SubsetMask::of(order, std::span<const int>(elements));
}

Outcome finish(Json report, std::string_view status) {
  report["status"] = status;
  return {std::move(report), status == "pass" ? kExitOk : kExitFailure};
}

// ---- finite tables -------------------------------------------------------

Outcome cmd_verify(const std::string& path) {
  const std::string bytes = read_bytes(path);
  const CayleyTable t = finite::parse_gyro(bytes);
  const AxiomReport axioms = finite::verify_gyrogroup(t);
  Json j = report_header("verify", sha256_digest(bytes));
  j["order"] = t.order();
  const auto e = finite::find_identity(t);
  j["identity"] = e ? Json(*e) : Json(nullptr);
  if (axioms.passed()) {
    const Gyrogroup g = Gyrogroup::from_table(t);
    j["associative"] = finite::is_associative(t);
    j["gyrations_trivial"] = g.gyrations_trivial();
  }
  j["axioms"] = to_json(axioms);
  return finish(std::move(j), axioms.passed() ? "pass" : "fail");
}

Outcome cmd_subs(const std::string& path, int max_order) {
  const std::string bytes = read_bytes(path);
  const Gyrogroup g = Gyrogroup::from_table(finite::parse_gyro(bytes));
  const auto subs = finite::enumerate_subgyrogroups(g, max_order);
  Json j = report_header("subs", sha256_digest(bytes));
  j["order"] = g.order();
  j["count"] = subs.size();
  Json list = Json::array();
  for (const auto& s : subs)
    list.push_back({{"elements", to_json(s.subset)},
                    {"size", s.subset.size()},
                    {"l_subgyrogroup", s.is_l}});
  j["subgyrogroups"] = std::move(list);
  return finish(std::move(j), "pass");
}

Outcome cmd_cosets(const std::string& path, const std::string& subset, bool allow_non_l) {
  const std::string bytes = read_bytes(path);
  const Gyrogroup g = Gyrogroup::from_table(finite::parse_gyro(bytes));
  const SubsetMask h = parse_subset(subset, g.order());
  const auto p = finite::coset_partition(g, h, allow_non_l);
  Json j = report_header("cosets", sha256_digest(bytes + "\n--subset=" + h.to_string() +
                                                 (allow_non_l ? " --allow-non-l" : "")));
  j["order"] = g.order();
  j["partition"] = to_json(p);
  return finish(std::move(j), p.validation.ok() ? "pass" : "fail");
}

Outcome cmd_product(const std::string& left, const std::string& right,
                    const std::string& table_out) {
  const std::string b1 = read_bytes(left);
  const std::string b2 = read_bytes(right);
  const Gyrogroup g1 = Gyrogroup::from_table(finite::parse_gyro(b1));
  const Gyrogroup g2 = Gyrogroup::from_table(finite::parse_gyro(b2));
  const CayleyTable t = finite::product_gyrogroup(g1, g2);
  const AxiomReport axioms = finite::verify_gyrogroup(t);
  if (!table_out.empty())
    finite::write_gyro_file(table_out, t,
                            "coordinatewise product of " + std::to_string(g1.order()) + " x " +
                                std::to_string(g2.order()));
  Json j = report_header("product", sha256_digest(b1 + '\0' + b2));
  j["factor_orders"] = {g1.order(), g2.order()};
  j["order"] = t.order();
  j["table"] = to_json(t);
  j["axioms"] = to_json(axioms);
  return finish(std::move(j), axioms.passed() ? "pass" : "fail");
}

Outcome cmd_search(int order, unsigned jobs, std::uint64_t max_nodes, long time_limit_ms,
                   bool allow_large) {
  finite::SearchOptions opt;
  opt.jobs = jobs;
  opt.max_nodes = max_nodes;
  opt.time_limit = std::chrono::milliseconds(time_limit_ms);
  opt.allow_large = allow_large;
  const std::string params = "search --order " + std::to_string(order) +
                             " --max-nodes " + std::to_string(max_nodes) +
                             " --time-limit-ms " + std::to_string(time_limit_ms) +
                             (allow_large ? " --allow-large" : "");
  const auto result = finite::search_gyrogroups(order, opt);

  Json j = report_header("search", sha256_digest(params));
  j["order"] = order;
  j["complete"] = result.complete;
  j["nodes"] = result.nodes;
  j["count"] = result.tables.size();
  std::string census;
  Json tables = Json::array();
  for (const auto& t : result.tables) {
    const std::string text = finite::format_gyro(t);
    census += text;
    tables.push_back({{"digest", sha256_digest(text)},
                      {"associative", finite::is_associative(t)},
                      {"rows", to_json(t)}});
  }
  j["census_digest"] = sha256_digest(census);
  j["tables"] = std::move(tables);
  return finish(std::move(j), result.complete ? "pass" : "incomplete");
}

Outcome cmd_star(const std::string& path, const std::string& subset, int point) {
  const std::string bytes = read_bytes(path);
  const Gyrogroup g = Gyrogroup::from_table(finite::parse_gyro(bytes));
  const SubsetMask u = parse_subset(subset, g.order());
  g.require_element(point);
  const auto cover = finite::translate_cover(g, u);
  const SubsetMask star = finite::star_of_point(cover, point);
  const SubsetMask bound =
      finite::left_translate(g, point, finite::set_oplus(g, u, u));
  const bool symmetric = finite::is_symmetric(g, u);
  const bool contained = star.is_subset_of(bound);

  Json j = report_header("star", sha256_digest(bytes + "\n--subset=" + u.to_string() +
                                               " --point=" + std::to_string(point)));
  j["order"] = g.order();
  j["subset"] = to_json(u);
  j["symmetric"] = symmetric;
  j["point"] = point;
  Json members = Json::array();
  for (const auto& c : cover) members.push_back(to_json(c));
  j["cover"] = std::move(members);
  j["star"] = to_json(star);
  j["chain_bound"] = to_json(bound);
  j["star_within_bound"] = contained;
  if (symmetric) {
    const auto violation = finite::find_star_chain_violation(g, u);
    j["chain_holds_everywhere"] = !violation.has_value();
    if (violation) j["chain_witness"] = {violation->p, violation->q};
  }
  return finish(std::move(j), contained ? "pass" : "fail");
}

// ---- continuous models ---------------------------------------------------

struct ContinuousFlags {
  std::string model = "mobius";
  std::uint64_t samples = 100000;
  std::uint64_t seed = 0;
  double tol = 1e-9;
  double radius = 0.95;
  double c = 1.0;
  unsigned jobs = 1;
  std::string radii;
};

std::string describe(const ContinuousFlags& f) {
  std::ostringstream s;
  s.precision(17);
  s << "--model " << f.model << " --samples " << f.samples << " --seed " << f.seed << " --tol "
    << f.tol << " --radius " << f.radius << " --c " << f.c << " --radii " << f.radii;
  return s.str();
}

template <class Model>
Json axioms_for(const Model& m, const ContinuousFlags& f) {
  const double r = f.radius * m.bound();
  const AxiomReport report = check_axioms(
      m, [&m, r](std::mt19937_64& rng) { return m.sample_in_ball(rng, r); },
      SampledCheckOptions{f.samples, f.tol, f.seed, f.jobs});
  return to_json(report);
}

Outcome cmd_axioms(const ContinuousFlags& f) {
  if (!(f.radius > 0.0 && f.radius < 1.0)) throw UsageError("--radius must lie in (0, 1)");
  Json j = report_header("axioms", sha256_digest("axioms " + describe(f)));
  j["model"] = f.model;
  Json axioms;
  if (f.model == "mobius") {
    // Intermediates of nested sums legitimately approach the circle, so
    // only the open disk itself is enforced here.
    axioms = axioms_for(mobius::MobiusModel{0.0}, f);
  } else {
    j["c"] = f.c;
    axioms = axioms_for(einstein::EinsteinModel(f.c), f);
  }
  j["sample_radius"] = f.radius;
  const bool pass = axioms["passed"].get<bool>();
  j["axioms"] = std::move(axioms);
  return finish(std::move(j), pass ? "pass" : "fail");
}

template <class Model>
void chain_for(const Model& m, const ContinuousFlags& f, const std::vector<double>& radii,
               Json& j) {
  std::vector<double> scaled;
  for (double r : radii) scaled.push_back(r * m.bound());
  const topo::RadiusChain chain(scaled, m.bound());
  const auto report = topo::admissible_chain_check(m, chain, f.samples, f.seed, f.tol);
  const double gyr_tol = std::is_same_v<Model, mobius::MobiusModel> ? 1e-12 : 1e-9;
  const auto base = topo::strongly_topological_base_check(m, std::span<const double>(scaled),
                                                          f.samples, f.seed, gyr_tol);
  j["chain"] = to_json(report);
  j["gyration_invariance"] = to_json(base);
  j["gyration_tolerance"] = gyr_tol;
}

Outcome cmd_chain(const ContinuousFlags& f) {
  const std::vector<double> radii = parse_list<double>(f.radii, "--radii");
  Json j = report_header("chain", sha256_digest("chain " + describe(f)));
  j["model"] = f.model;
  if (f.model == "mobius") {
    chain_for(mobius::MobiusModel{}, f, radii, j);
  } else {
    j["c"] = f.c;
    chain_for(einstein::EinsteinModel(f.c), f, radii, j);
  }
  const std::string verdict = j["chain"]["verdict"].get<std::string>();
  const bool base_ok = j["gyration_invariance"]["ok"].get<bool>();
  return finish(std::move(j), !base_ok ? "fail" : verdict);
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse_error: return kExitParse;
    case ErrorKind::invalid_argument: return kExitUsage;
    default: return kExitFailure;
  }
}

std::string joined(std::span<const std::string> args) {
  std::string s;
  for (const auto& a : args) s += a + '\n';
  return s;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Gyrogroup toolkit: finite Cayley tables, Möbius and Einstein models", "gyro"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kVersion));

  std::string out_path;
  app.add_option("--out", out_path, "Write the JSON report to this file instead of stdout");

  std::function<Outcome()> action;

  std::string file;
  std::string file2;
  std::string subset;
  std::string table_out;
  bool allow_non_l = false;
  bool allow_large = false;
  int order = 0;
  int point = 0;
  int max_order = 16;
  unsigned jobs = 1;
  std::uint64_t max_nodes = 0;
  long time_limit_ms = 0;
  ContinuousFlags cf;

  auto* verify = app.add_subcommand("verify", "Check a .gyro table against the gyrogroup axioms");
  verify->add_option("file", file, ".gyro table")->required();
  verify->callback([&] { action = [&] { return cmd_verify(file); }; });

  auto* subs = app.add_subcommand("subs", "List all subgyrogroups and their L-status");
  subs->add_option("file", file, ".gyro table")->required();
  subs->add_option("--max-order", max_order, "Largest table order accepted")->capture_default_str();
  subs->callback([&] { action = [&] { return cmd_subs(file, max_order); }; });

  auto* cosets = app.add_subcommand("cosets", "Left coset partition G/H and quotient map");
  cosets->add_option("file", file, ".gyro table")->required();
  cosets->add_option("--subset", subset, "H as a comma-separated element list")->required();
  cosets->add_flag("--allow-non-l", allow_non_l,
                   "Compute the family for subgyrogroups that are not L-subgyrogroups");
  cosets->callback([&] { action = [&] { return cmd_cosets(file, subset, allow_non_l); }; });

  auto* product = app.add_subcommand("product", "Coordinatewise product of two gyrogroups");
  product->add_option("left", file, ".gyro table")->required();
  product->add_option("right", file2, ".gyro table")->required();
  product->add_option("--table-out", table_out, "Also write the product as a .gyro file");
  product->callback([&] { action = [&] { return cmd_product(file, file2, table_out); }; });

  auto* search = app.add_subcommand("search", "Enumerate gyrogroups of a given order");
  search->add_option("--order", order, "Order n")->required()->check(CLI::Range(1, 8));
  search->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  search->add_option("--max-nodes", max_nodes, "Node budget (0: unlimited)");
  search->add_option("--time-limit-ms", time_limit_ms, "Time budget (0: unlimited)");
  search->add_flag("--allow-large", allow_large, "Permit orders 7 and 8");
  search->callback([&] {
    action = [&] { return cmd_search(order, jobs, max_nodes, time_limit_ms, allow_large); };
  });

  auto add_continuous = [&cf](CLI::App* sub) {
    sub->add_option("--model", cf.model, "mobius or einstein")
        ->check(CLI::IsMember({"mobius", "einstein"}))
        ->capture_default_str();
    sub->add_option("--samples", cf.samples, "Sample count")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sub->add_option("--seed", cf.seed, "Random seed")->capture_default_str();
    sub->add_option("--tol", cf.tol, "Tolerance")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--c", cf.c, "Speed bound of the Einstein model")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };

  auto* axioms = app.add_subcommand("axioms", "Sampled axiom check of a continuous model");
  add_continuous(axioms);
  axioms->add_option("--radius", cf.radius, "Samples lie in the ball of this fraction of the bound")
      ->capture_default_str();
  axioms->add_option("--jobs", cf.jobs, "Worker threads")->capture_default_str();
  axioms->callback([&] { action = [&] { return cmd_axioms(cf); }; });

  auto* chain = app.add_subcommand("chain", "Admissible chain and ball-invariance checks");
  add_continuous(chain);
  chain->add_option("--radii", cf.radii,
                    "Strictly decreasing radii as fractions of the bound, comma-separated")
      ->required();
  chain->callback([&] { action = [&] { return cmd_chain(cf); }; });

  auto* star = app.add_subcommand("star", "Translate cover {x+U}, star of a point, chain bound");
  star->add_option("file", file, ".gyro table")->required();
  star->add_option("--subset", subset, "U as a comma-separated element list")->required();
  star->add_option("--point", point, "Point whose star is taken")->required();
  star->callback([&] { action = [&] { return cmd_star(file, subset, point); }; });

  std::vector<const char*> argv{"gyro"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  Outcome outcome;
  try {
    outcome = action();
  } catch (const UsageError& e) {
    err << "gyro: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "gyro: " << to_string(e.kind()) << ": " << e.what() << "\n";
    Json j = report_header(app.get_subcommands().front()->get_name(), sha256_digest(joined(args)));
    j["status"] = "error";
    j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    outcome = {std::move(j), exit_code_for(e.kind())};
  }

  const std::string text = serialize(outcome.report);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file_out(out_path, std::ios::binary);
    if (!file_out) {
      err << "gyro: cannot write " << out_path << "\n";
      return kExitUsage;
    }
    file_out << text;
  }
  return outcome.exit_code;
}

}  // namespace gyro::cli
