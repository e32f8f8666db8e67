#include "sdlattice/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "sdlattice/error.hpp"
#include "sdlattice/flows.hpp"
#include "sdlattice/integrability.hpp"
#include "sdlattice/io.hpp"
#include "sdlattice/lattice.hpp"
#include "sdlattice/metrics.hpp"
#include "sdlattice/transforms.hpp"

namespace sdlattice::cli {

using nlohmann::json;

namespace {

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<DiscreteDistribution> read_all(const std::vector<std::string>& paths) {
  std::vector<DiscreteDistribution> out;
  out.reserve(paths.size());
  for (const auto& p : paths) out.push_back(io::read_distribution(p));
  return out;
}

void write_text(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw DomainError("cannot write " + path);
  file << text;
  if (!file) throw DomainError("failed writing " + path);
}

struct Options {
  std::string order = "st";
  double tolerance = tol::kCompare;
  std::string out_path;
  std::vector<std::string> files;
  // psi
  std::string mode = "tight";
  double alpha = 0.5;
  std::size_t levels = 10;
  std::string tail_path;
  std::optional<double> m;
  std::string table_path;
  bool step = false;
  // table
  std::string kind = "survival";
  std::size_t padding = 3;
  // flow-sup
  std::string direction = "sup";
};

json psi_command(const Options& opt) {
  MeasureFamily family = [&] {
    if (!opt.tail_path.empty()) {
      if (!opt.files.empty()) throw ContractError("psi: give either --tail or distribution files, not both");
      return MeasureFamily::from_oracle(io::read_tail_oracle(opt.tail_path));
    }
    if (opt.files.empty()) throw ContractError("psi: need --tail or at least one distribution file");
    return MeasureFamily::from_distributions(read_all(opt.files));
  }();

  std::optional<std::variant<StepFunction, PiecewiseLinearFunction>> table;
  json result;
  if (opt.mode == "tight") {
    const auto psi = build_psi_tight(family, opt.levels, !opt.step);
    result = {{"mode", "tight"}, {"thresholds", psi.thresholds}, {"bound", number_or_null(psi.bound)}};
    std::visit([&](const auto& f) { table = f; }, psi.psi);
  } else if (opt.mode == "strict") {
    if (!opt.m) throw ContractError("psi --mode strict needs --m");
    const auto psi = build_psi_strict(family, *opt.m, opt.levels);
    result = {{"mode", "strict"},
              {"m", *opt.m},
              {"horizon", psi.horizon},
              {"bin_masses", psi.bin_masses},
              {"coefficients", psi.coefficients},
              {"bound", number_or_null(psi.bound)}};
    table = psi.psi;
  } else if (opt.mode == "dlvp") {
    const auto psi = build_psi_dlvp(family, opt.alpha, opt.levels, opt.m);
    result = {{"mode", "dlvp"},
              {"alpha", opt.alpha},
              {"certificate", number_or_null(psi.certificate())},
              {"eta_nodes", psi.eta().nodes()},
              {"eta_values", psi.eta().values()}};
    table = psi.sampled(std::max(1.0, 2.0 * psi.eta().nodes().back()));
  } else {
    throw ContractError("psi: unknown mode " + opt.mode);
  }
  if (!opt.table_path.empty()) {
    std::ostringstream csv;
    io::export_function(*table, csv, opt.padding, 0.0);
    write_text(csv.str(), opt.table_path, std::cout);
  }
  return result;
}

std::string table_command(const Options& opt) {
  if (opt.files.size() != 1) throw ContractError("table: expected exactly one distribution file");
  const auto mu = io::read_distribution(opt.files.front());
  std::variant<StepFunction, PiecewiseLinearFunction> f = survival_function(mu);
  if (opt.kind == "cdf") {
    f = cdf_function(mu);
  } else if (opt.kind == "icx") {
    f = icx_transform(mu);
  } else if (opt.kind == "icv") {
    f = icv_transform(mu);
  } else if (opt.kind != "survival") {
    throw ContractError("table: unknown kind " + opt.kind);
  }
  std::ostringstream csv;
  io::export_function(f, csv, opt.padding);
  return csv.str();
}

void require_count(const Options& opt, std::size_t n, const char* what) {
  if (opt.files.size() != n) {
    throw ContractError(std::string(what) + ": expected " + std::to_string(n) + " input files");
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice operations for first and second order stochastic dominance", "sdlattice"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--order", opt.order, "st, icv, icx or cx")
      ->check(CLI::IsMember({"st", "icv", "icx", "cx"}));
  app.add_option("--tol", opt.tolerance, "comparison tolerance")->check(CLI::NonNegativeNumber);
  app.add_option("--out", opt.out_path, "write the result here instead of stdout");

  const auto with_files = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("files", opt.files, "input JSON files");
    return sub;
  };
  auto* check = with_files("check", "order test: is A <= B?");
  auto* join_cmd = with_files("join", "lattice join of two distributions");
  auto* meet_cmd = with_files("meet", "lattice meet of two distributions");
  auto* sup_cmd = with_files("sup", "supremum of a finite family");
  auto* inf_cmd = with_files("inf", "infimum of a finite family");
  auto* w1_cmd = with_files("w1", "Wasserstein-1 distance");
  auto* levy_cmd = with_files("levy", "Levy distance");
  auto* ks_cmd = with_files("kolmogorov", "Kolmogorov distance");
  auto* flow_check = with_files("flow-check", "a.e. order test between two flows");
  auto* flow_sup = with_files("flow-sup", "essential supremum (infimum) of finitely many flows");
  flow_sup->add_option("--direction", opt.direction, "sup or inf")->check(CLI::IsMember({"sup", "inf"}));

  auto* psi = with_files("psi", "tightness / uniform integrability psi functions");
  psi->add_option("--mode", opt.mode, "tight, strict or dlvp")->check(CLI::IsMember({"tight", "strict", "dlvp"}));
  psi->add_option("--alpha", opt.alpha, "exponent for dlvp, in (0, 1)");
  psi->add_option("--levels", opt.levels, "number of threshold levels")->check(CLI::PositiveNumber);
  psi->add_option("--tail", opt.tail_path, "tail table CSV with columns s,T[,U]");
  psi->add_option("--m", opt.m, "M for the strict construction");
  psi->add_option("--table", opt.table_path, "also write psi as an s,value CSV");
  psi->add_option("--padding", opt.padding, "ray points per side in the table");
  psi->add_flag("--step", opt.step, "tight mode: step function instead of interpolation");

  auto* table = with_files("table", "s,value CSV of a survival function, CDF or transform");
  table->add_option("--kind", opt.kind, "survival, cdf, icx or icv")
      ->check(CLI::IsMember({"survival", "cdf", "icx", "icv"}));
  table->add_option("--padding", opt.padding, "ray points per side");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Order order = parse_order(opt.order);
    if (app.got_subcommand(table)) {
      write_text(table_command(opt), opt.out_path, out);
      return 0;
    }
    json result;
    if (app.got_subcommand(check)) {
      require_count(opt, 2, "check");
      const auto v = read_all(opt.files);
      const auto w = leq(v[0], v[1], order, opt.tolerance);
      result = {{"holds", w.holds}};
      if (w.witness) result["witness"] = *w.witness;
    } else if (app.got_subcommand(join_cmd) || app.got_subcommand(meet_cmd)) {
      require_count(opt, 2, "join/meet");
      const auto v = read_all(opt.files);
      result = io::to_json(app.got_subcommand(join_cmd) ? join(v[0], v[1], order) : meet(v[0], v[1], order));
    } else if (app.got_subcommand(sup_cmd) || app.got_subcommand(inf_cmd)) {
      if (opt.files.empty()) throw ContractError("sup/inf: need at least one input file");
      const auto v = read_all(opt.files);
      result = io::to_json(extremum(v, order, app.got_subcommand(sup_cmd) ? Direction::sup : Direction::inf));
    } else if (app.got_subcommand(w1_cmd)) {
      require_count(opt, 2, "w1");
      const auto v = read_all(opt.files);
      result = {{"w1", wasserstein1(v[0], v[1])}};
    } else if (app.got_subcommand(levy_cmd)) {
      require_count(opt, 2, "levy");
      const auto v = read_all(opt.files);
      result = {{"levy", levy(v[0], v[1])}};
    } else if (app.got_subcommand(ks_cmd)) {
      require_count(opt, 2, "kolmogorov");
      const auto v = read_all(opt.files);
      result = {{"kolmogorov", kolmogorov(v[0], v[1])}};
    } else if (app.got_subcommand(flow_check)) {
      require_count(opt, 2, "flow-check");
      if (order == Order::cx) throw ContractError("flow-check: order must be st, icv or icx");
      const auto w = leq_flow(io::read_flow(opt.files[0]), io::read_flow(opt.files[1]), order, opt.tolerance);
      result = {{"holds", w.holds}};
      if (w.atom) result["atom"] = *w.atom;
    } else if (app.got_subcommand(flow_sup)) {
      if (opt.files.empty()) throw ContractError("flow-sup: need at least one flow file");
      if (order == Order::cx) throw ContractError("flow-sup: order must be st, icv or icx");
      std::vector<Flow> flows;
      for (const auto& p : opt.files) flows.push_back(io::read_flow(p));
      const auto res = ess_sup_countable(enumerate(std::move(flows)), order, parse_direction(opt.direction), 0.0);
      result = io::to_json(res.extremum);
      result["functional"] = res.functional_trace.back();
      result["consumed"] = res.consumed;
    } else if (app.got_subcommand(psi)) {
      result = psi_command(opt);
    }
    write_text(result.dump() + "\n", opt.out_path, out);
    return 0;
  } catch (const ContractError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace sdlattice::cli
