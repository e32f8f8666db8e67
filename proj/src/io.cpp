#include "sdlattice/io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <sstream>

#include <nlohmann/json.hpp>

#include "sdlattice/error.hpp"

namespace sdlattice::io {

using nlohmann::json;

namespace {

double number_field(const json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number()) {
    throw ContractError(std::string("expected a numeric field \"") + key + "\"");
  }
  return obj.at(key).get<double>();
}

json points_json(const DiscreteDistribution& mu) {
  json pts = json::array();
  for (std::size_t i = 0; i < mu.size(); ++i) pts.push_back({{"x", mu.support()[i]}, {"p", mu.weights()[i]}});
  return pts;
}

DiscreteDistribution points_from_json(const json& pts) {
  if (!pts.is_array()) throw ContractError("\"points\" must be an array");
  std::vector<WeightedPoint> pairs;
  pairs.reserve(pts.size());
  for (const auto& pt : pts) pairs.push_back({number_field(pt, "x"), number_field(pt, "p")});
  return make_discrete(pairs);
}

}  // namespace

json to_json(const DiscreteDistribution& mu) { return json{{"points", points_json(mu)}}; }

DiscreteDistribution distribution_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("points")) throw ContractError("distribution needs a \"points\" array");
  return points_from_json(doc.at("points"));
}

json to_json(const Flow& flow) {
  json atoms = json::array();
  for (std::size_t t = 0; t < flow.space.size(); ++t) {
    atoms.push_back({{"label", flow.space.labels()[t]},
                     {"pi", flow.space.weights()[t]},
                     {"points", points_json(flow.at(t))}});
  }
  return json{{"atoms", atoms}};
}

Flow flow_from_json(const json& doc) {
  if (!doc.is_object() || !doc.contains("atoms") || !doc.at("atoms").is_array()) {
    throw ContractError("flow needs an \"atoms\" array");
  }
  std::vector<std::string> labels;
  std::vector<double> weights;
  std::vector<DiscreteDistribution> values;
  for (const auto& atom : doc.at("atoms")) {
    if (!atom.is_object() || !atom.contains("label") || !atom.at("label").is_string()) {
      throw ContractError("flow atom needs a string \"label\"");
    }
    labels.push_back(atom.at("label").get<std::string>());
    weights.push_back(number_field(atom, "pi"));
    if (!atom.contains("points")) throw ContractError("flow atom needs \"points\"");
    values.push_back(points_from_json(atom.at("points")));
  }
  return make_flow(AtomicMeasureSpace(std::move(labels), std::move(weights)), std::move(values));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ContractError(path + ": " + e.what());
  }
}

DiscreteDistribution read_distribution(const std::string& path) {
  return distribution_from_json(read_json_file(path));
}

Flow read_flow(const std::string& path) { return flow_from_json(read_json_file(path)); }

namespace {

double parse_cell(const std::string& cell, std::size_t line) {
  std::string t = cell;
  t.erase(std::remove_if(t.begin(), t.end(), [](unsigned char c) { return std::isspace(c); }), t.end());
  std::transform(t.begin(), t.end(), t.begin(), [](unsigned char c) { return std::tolower(c); });
  if (t == "inf" || t == "+inf" || t == "infinity") return std::numeric_limits<double>::infinity();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != t.size() || std::isnan(v)) {
    throw ContractError("tail table line " + std::to_string(line) + ": not a number: " + cell);
  }
  return v;
}

struct TailTable {
  std::vector<double> s;
  std::vector<double> t;
  std::vector<double> u;

  double lookup(const std::vector<double>& column, double x) const {
    const auto it = std::upper_bound(s.begin(), s.end(), x);
    if (it == s.begin()) return column.front();
    return column[static_cast<std::size_t>(it - s.begin()) - 1];
  }
};

}  // namespace

TailOracle tail_oracle_from_csv(std::istream& in) {
  auto table = std::make_shared<TailTable>();
  std::string line;
  std::size_t lineno = 0;
  std::size_t columns = 0;
  bool first_row = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<std::string> cells;
    std::stringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (first_row) {
      first_row = false;
      std::string head = cells.empty() ? "" : cells[0];
      head.erase(std::remove_if(head.begin(), head.end(), [](unsigned char c) { return std::isspace(c); }),
                 head.end());
      if (head == "s") {
        columns = cells.size();
        continue;
      }
    }
    if (cells.size() != 2 && cells.size() != 3) {
      throw ContractError("tail table line " + std::to_string(lineno) + ": expected s,T[,U]");
    }
    if (columns == 0) columns = cells.size();
    if (cells.size() != columns) {
      throw ContractError("tail table line " + std::to_string(lineno) + ": inconsistent column count");
    }
    const double s = parse_cell(cells[0], lineno);
    const double t = parse_cell(cells[1], lineno);
    if (!std::isfinite(s)) throw ContractError("tail table: s must be finite");
    if (table->s.empty() ? s != 0.0 : !(s > table->s.back())) {
      throw ContractError("tail table: s must start at 0 and increase strictly");
    }
    if (t < 0.0 || (!table->t.empty() && t > table->t.back())) {
      throw ContractError("tail table: T must be nonnegative and nonincreasing");
    }
    table->s.push_back(s);
    table->t.push_back(t);
    if (cells.size() == 3) {
      const double u = parse_cell(cells[2], lineno);
      if (u < 0.0 || (!table->u.empty() && u > table->u.back())) {
        throw ContractError("tail table: U must be nonnegative and nonincreasing");
      }
      table->u.push_back(u);
    }
  }
  if (table->s.empty()) throw ContractError("tail table: no rows");
  TailOracle::Query tail = [table](double s) { return table->lookup(table->t, s); };
  TailOracle::Query moment;
  if (!table->u.empty()) moment = [table](double s) { return table->lookup(table->u, s); };
  return TailOracle(std::move(tail), std::move(moment));
}

TailOracle read_tail_oracle(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ContractError("cannot open " + path);
  return tail_oracle_from_csv(in);
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void row(std::ostream& out, double s, double v, std::optional<double> lower_bound) {
  if (lower_bound && s < *lower_bound) return;
  out << format_number(s) << ',' << format_number(v) << '\n';
}

template <class F>
void padded_rows(std::ostream& out, const std::vector<double>& nodes, std::size_t padding,
                 std::optional<double> lower_bound, F&& emit_nodes, const std::function<double(double)>& eval) {
  const double lo = nodes.empty() ? 0.0 : nodes.front();
  const double hi = nodes.empty() ? 0.0 : nodes.back();
  const double step = std::max(1.0, hi - lo) / static_cast<double>(std::max<std::size_t>(padding, 1));
  for (std::size_t k = padding; k >= 1; --k) {
    const double s = lo - step * static_cast<double>(k);
    row(out, s, eval(s), lower_bound);
  }
  emit_nodes();
  for (std::size_t k = 1; k <= padding; ++k) {
    const double s = hi + step * static_cast<double>(k);
    row(out, s, eval(s), lower_bound);
  }
}

}  // namespace

void export_function(const std::variant<StepFunction, PiecewiseLinearFunction>& f, std::ostream& out,
                     std::size_t padding, std::optional<double> lower_bound) {
  out << "s,value\n";
  if (const auto* step = std::get_if<StepFunction>(&f)) {
    padded_rows(
        out, step->jumps(), padding, lower_bound,
        [&] {
          for (double s : step->jumps()) {
            row(out, s, step->left_limit(s), lower_bound);
            row(out, s, step->right_limit(s), lower_bound);
          }
        },
        [step](double s) { return (*step)(s); });
    return;
  }
  const auto& plf = std::get<PiecewiseLinearFunction>(f);
  padded_rows(
      out, plf.nodes(), padding, lower_bound,
      [&] {
        for (std::size_t i = 0; i < plf.size(); ++i) row(out, plf.nodes()[i], plf.values()[i], lower_bound);
      },
      [&plf](double s) { return plf(s); });
}

}  // namespace sdlattice::io
