// Copyright 2026 The wreathgrowth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "wreath/ball.hpp"
#include "wreath/census.hpp"
#include "wreath/tree_group.hpp"
#include "wreath/tree_orbits.hpp"

namespace wreath::cli {

namespace {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TreeGroupSpec parse_base(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) {
    throw std::invalid_argument("--base expects M,N, got '" + text + "'");
  }
  TreeGroupSpec spec;
  try {
    std::size_t used = 0;
    spec.free_rank = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const std::string rest = text.substr(comma + 1);
    spec.torsion_count = std::stoi(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    throw std::invalid_argument("--base expects M,N, got '" + text + "'");
  }
  spec.validate();
  return spec;
}

std::string sig10(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

double round10(double v) { return std::stod(sig10(v)); }

Json spec_json(const SpecFile& spec) {
  Json j;
  j["lamp"] = spec.lamp;
  j["base"] = {spec.base.free_rank, spec.base.torsion_count};
  j["degree"] = spec.degree;
  return j;
}

Json coeff_array(const TruncatedSeries& f) {
  Json arr = Json::array();
  for (const Rational& c : f.coefficients()) arr.push_back(to_fraction_string(c));
  return arr;
}

struct Options {
  SpecFile spec;
  std::string base_text = "1,0";
  std::string format = "json";
  std::string spec_path;
  bool closed_form = false;
  std::string oracle = "key";
  std::size_t conj_bound = 0;
  std::size_t max_conj_bound = 16;
  std::size_t radius = 0;
  std::size_t window = 20;
  std::size_t sgs_window = 4;
  unsigned m_lo = 10;
  unsigned m_hi = 100;
  std::size_t max_edges = 3;
};

Format parse_format(const std::string& f) {
  return f == "csv" ? Format::kCsv : Format::kJson;
}

int cmd_series(const SpecFile& spec, Format format, bool closed_form,
               std::ostream& out) {
  const Truncation t{spec.degree};
  const WreathSpec ws(resolve_lamp(spec.lamp, t), spec.base, t);
  const bool degenerate = spec.base.tree_degree() < 2;
  const TruncatedSeries a = degenerate ? TruncatedSeries::zero(t) : cgs_A(ws);
  const TruncatedSeries tor = cgs_torsion_cursor(ws);
  const TruncatedSeries triv = cgs_trivial_cursor(ws);
  const TruncatedSeries total = cgs_total(ws);
  std::optional<TruncatedSeries> closed;
  if (closed_form) {
    closed = cgs_closed_form(ws);
    if (!closed) {
      throw std::invalid_argument(
          "--closed-form is available for bases 0,1 / 1,0 / 0,2 only");
    }
  }
  if (format == Format::kCsv) {
    out << "m,cgs_A,cgs_torsion,cgs_trivial,total";
    if (closed) out << ",closed_form";
    out << "\n";
    for (std::size_t m = 0; m <= spec.degree; ++m) {
      out << m << "," << to_fraction_string(a[m]) << ","
          << to_fraction_string(tor[m]) << "," << to_fraction_string(triv[m])
          << "," << to_fraction_string(total[m]);
      if (closed) out << "," << to_fraction_string((*closed)[m]);
      out << "\n";
    }
    return kOk;
  }
  Json j;
  j["spec"] = spec_json(spec);
  j["degree"] = spec.degree;
  Json coeffs;
  coeffs["cgs_A"] = coeff_array(a);
  coeffs["cgs_torsion"] = coeff_array(tor);
  coeffs["cgs_trivial"] = coeff_array(triv);
  coeffs["total"] = coeff_array(total);
  j["coefficients"] = coeffs;
  if (closed) j["closed_form"] = coeff_array(*closed);
  Json rc = nullptr;
  if (!degenerate) {
    try {
      const std::size_t window = std::min<std::size_t>(20, spec.degree);
      const RcReport rep = rc_report(ws, 1e-12, window);
      rc = Json::object();
      rc["t_formula"] = round10(rep.t_formula);
      rc["t_cgs_estimate"] = round10(rep.t_cgs_estimate);
      rc["t_cgs_extrapolated"] = round10(rep.t_cgs_extrapolated);
      rc["window"] = window;
    } catch (const SeriesError&) {
      rc = nullptr;
    }
  }
  j["rc_report"] = rc;
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_census(const SpecFile& spec, const Options& opt, Format format,
               std::ostream& out, std::ostream& err) {
  if (opt.oracle != "key" && opt.oracle != "unionfind" && opt.oracle != "both") {
    throw std::invalid_argument("--oracle must be key, unionfind or both");
  }
  const auto table = resolve_lamp_table(spec.lamp);
  if (!table) throw std::invalid_argument("census needs a finite lamp table");
  const std::size_t radius = spec.oracle_radius.value_or(opt.radius);
  const auto start = std::chrono::steady_clock::now();
  const WreathGroup group(*table, spec.base);
  const Ball ball(group, radius);
  std::optional<Census> key;
  std::optional<UnionFindCensus> uf;
  if (opt.oracle != "unionfind") key = conjugacy_census(group, ball);
  if (opt.oracle != "key") {
    uf = unionfind_census_stable(group, ball, opt.conj_bound,
                                 std::max(opt.max_conj_bound, opt.conj_bound));
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  err << "census: " << ball.size() << " elements, " << sig10(seconds) << " s\n";
  if (format == Format::kCsv) {
    out << "m";
    if (key) out << ",key";
    if (uf) out << ",unionfind";
    out << "\n";
    for (std::size_t m = 0; m <= radius; ++m) {
      out << m;
      if (key) out << "," << key->counts[m];
      if (uf) out << "," << uf->census.counts[m];
      out << "\n";
    }
  } else {
    Json j;
    SpecFile echo = spec;
    echo.degree = radius;
    j["spec"] = spec_json(echo);
    j["radius"] = radius;
    j["ball_size"] = ball.size();
    if (key) j["key"] = key->counts;
    if (uf) {
      j["unionfind"] = uf->census.counts;
      j["unionfind_conj_bound"] = uf->conj_bound;
      j["unionfind_stable"] = uf->stable;
    }
    out << j.dump(2) << "\n";
  }
  if (key && uf && key->counts != uf->census.counts) {
    err << "census: key and union-find oracles disagree\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_rc(const SpecFile& spec, const Options& opt, Format format,
           std::ostream& out) {
  const Truncation t{spec.degree};
  const WreathSpec ws(resolve_lamp(spec.lamp, t), spec.base, t);
  std::optional<TruncatedSeries> sgs;
  if (opt.radius > 0) {
    const auto table = resolve_lamp_table(spec.lamp);
    if (!table) throw std::invalid_argument("--radius needs a finite lamp table");
    const WreathGroup group(*table, spec.base);
    sgs = Ball(group, opt.radius).sgs_prefix();
  }
  const RcReport rep = rc_report(ws, 1e-12, opt.window, sgs, opt.sgs_window);
  if (format == Format::kCsv) {
    out << "quantity,value\n";
    out << "t_formula," << sig10(rep.t_formula) << "\n";
    out << "t_cgs_estimate," << sig10(rep.t_cgs_estimate) << "\n";
    out << "t_cgs_extrapolated," << sig10(rep.t_cgs_extrapolated) << "\n";
    if (rep.t_sgs_estimate) {
      out << "t_sgs_estimate," << sig10(*rep.t_sgs_estimate) << "\n";
      out << "t_sgs_extrapolated," << sig10(*rep.t_sgs_extrapolated) << "\n";
    }
    return kOk;
  }
  Json j;
  j["spec"] = spec_json(spec);
  j["t_formula"] = round10(rep.t_formula);
  j["t_cgs_estimate"] = round10(rep.t_cgs_estimate);
  j["t_cgs_extrapolated"] = round10(rep.t_cgs_extrapolated);
  j["cgs_window"] = rep.cgs_window;
  if (rep.t_sgs_estimate) {
    j["t_sgs_estimate"] = round10(*rep.t_sgs_estimate);
    j["t_sgs_extrapolated"] = round10(*rep.t_sgs_extrapolated);
    j["sgs_radius"] = opt.radius;
    j["sgs_window"] = rep.sgs_window;
  }
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_asymptotics(const Options& opt, std::size_t degree, Format format,
                    std::ostream& out) {
  const auto rows = lamplighter_asymptotic_check(degree, opt.m_lo, opt.m_hi);
  if (format == Format::kCsv) {
    out << "m,coeff,estimate,ratio\n";
    for (const AsymptoticRow& r : rows) {
      out << r.m << "," << r.coeff.get_str() << "," << sig10(r.estimate) << ","
          << sig10(r.ratio) << "\n";
    }
    return kOk;
  }
  Json arr = Json::array();
  for (const AsymptoticRow& r : rows) {
    Json row;
    row["m"] = r.m;
    row["coeff"] = r.coeff.get_str();
    row["estimate"] = round10(r.estimate);
    row["ratio"] = round10(r.ratio);
    arr.push_back(row);
  }
  Json j;
  j["degree"] = degree;
  j["rows"] = arr;
  out << j.dump(2) << "\n";
  return kOk;
}

int cmd_trees(const TreeGroupSpec& base, std::size_t max_edges, Format format,
              std::ostream& out) {
  const auto reps = tree_orbit_representatives(base, max_edges);
  if (format == Format::kCsv) {
    out << "edges,leaves,nonleaves,symmetric,vertices\n";
    for (const TreeOrbitRep& r : reps) {
      out << r.edge_count() << "," << r.leaf_count << "," << r.nonleaf_count
          << "," << (r.is_symmetric() ? 1 : 0) << ",";
      for (std::size_t i = 0; i < r.vertices.size(); ++i) {
        out << (i ? " " : "") << r.vertices[i].to_string();
      }
      out << "\n";
    }
    return kOk;
  }
  out << Json::parse(trees_to_json(reps)).dump(2) << "\n";
  return kOk;
}

}  // namespace

SpecFile SpecFile::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    SpecFile spec;
    if (j.contains("lamp")) spec.lamp = j.at("lamp").get<std::string>();
    if (j.contains("base")) {
      const auto b = j.at("base").get<std::vector<int>>();
      if (b.size() != 2) throw std::invalid_argument("spec: base must be [M, N]");
      spec.base = {b[0], b[1]};
    }
    if (j.contains("degree")) spec.degree = j.at("degree").get<std::size_t>();
    if (j.contains("oracle_radius") && !j.at("oracle_radius").is_null()) {
      spec.oracle_radius = j.at("oracle_radius").get<std::size_t>();
    }
    spec.base.validate();
    return spec;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("spec file: ") + e.what());
  }
}

std::optional<FiniteGroupTable> resolve_lamp_table(const std::string& lamp) {
  for (const std::string& name : preset_group_names()) {
    if (lamp == name) return preset_group(name);
  }
  if (lamp == "Z") return std::nullopt;
  const std::string text = read_file(lamp);
  const auto j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw std::invalid_argument("lamp file is not JSON");
  if (j.contains("table")) return FiniteGroupTable::from_json(text);
  return std::nullopt;
}

GroupSeriesInput resolve_lamp(const std::string& lamp, Truncation t) {
  if (lamp == "Z") return GroupSeriesInput::integers(t);
  if (auto table = resolve_lamp_table(lamp)) {
    return GroupSeriesInput::from_table(*table, t);
  }
  const auto j = nlohmann::json::parse(read_file(lamp), nullptr, false);
  if (j.is_discarded() || !j.contains("sgs") || !j.contains("cgs")) {
    throw std::invalid_argument(
        "lamp file needs either a group table or \"sgs\" and \"cgs\" series");
  }
  const std::string name = j.value("name", std::string("external"));
  return GroupSeriesInput::external(TruncatedSeries::from_json(j.at("sgs").dump()),
                                    TruncatedSeries::from_json(j.at("cgs").dump()),
                                    name)
      .at(t);
}

CompareResult compare_prefix(const TruncatedSeries& formula,
                             const std::vector<std::size_t>& counts) {
  CompareResult res;
  for (std::size_t m = 0; m < counts.size(); ++m) {
    if (formula[m] != Rational(static_cast<unsigned long>(counts[m]))) {
      res.agree = false;
      res.first_mismatch = m;
      return res;
    }
  }
  return res;
}

int cmd_compare(const SpecFile& spec, Format format, std::ostream& out,
                std::ostream& err, const FormulaFn& formula) {
  if (!spec.oracle_radius) {
    throw std::invalid_argument("compare needs --radius or oracle_radius");
  }
  const std::size_t radius = *spec.oracle_radius;
  const auto table = resolve_lamp_table(spec.lamp);
  if (!table) throw std::invalid_argument("compare needs a finite lamp table");
  const Truncation t{radius};
  const WreathSpec ws(GroupSeriesInput::from_table(*table, t), spec.base, t);
  const TruncatedSeries f = formula(ws);
  const WreathGroup group(*table, spec.base);
  const Census census = conjugacy_census(group, Ball(group, radius));
  const CompareResult res = compare_prefix(f, census.counts);
  if (format == Format::kCsv) {
    out << "m,formula,census,agree\n";
    for (std::size_t m = 0; m <= radius; ++m) {
      const bool ok =
          f[m] == Rational(static_cast<unsigned long>(census.counts[m]));
      out << m << "," << to_fraction_string(f[m]) << "," << census.counts[m]
          << "," << (ok ? 1 : 0) << "\n";
    }
  } else {
    Json rows = Json::array();
    for (std::size_t m = 0; m <= radius; ++m) {
      Json row;
      row["m"] = m;
      row["formula"] = to_fraction_string(f[m]);
      row["census"] = census.counts[m];
      row["agree"] =
          f[m] == Rational(static_cast<unsigned long>(census.counts[m]));
      rows.push_back(row);
    }
    Json j;
    SpecFile echo = spec;
    echo.degree = radius;
    j["spec"] = spec_json(echo);
    j["radius"] = radius;
    j["rows"] = rows;
    j["agree"] = res.agree;
    j["first_mismatch"] =
        res.first_mismatch ? Json(*res.first_mismatch) : Json(nullptr);
    out << j.dump(2) << "\n";
  }
  if (!res.agree) {
    const std::size_t m = *res.first_mismatch;
    err << "mismatch at degree " << m << ": formula "
        << to_fraction_string(f[m]) << ", census " << census.counts[m] << "\n";
    return kMismatch;
  }
  return kOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Conjugacy growth series of wreath products over tree groups"};
  app.require_subcommand(1);
  Options opt;

  auto add_spec = [&opt](CLI::App* sub) {
    sub->add_option("--lamp", opt.spec.lamp,
                    "Lamp group: trivial, C2, C3, S3, D4, Z, or a JSON file");
    sub->add_option("--base", opt.base_text, "Base group L as M,N");
    sub->add_option("--spec", opt.spec_path, "Spec JSON file");
    sub->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* series = app.add_subcommand("series", "Compute the conjugacy series");
  add_spec(series);
  series->add_option("--degree", opt.spec.degree, "Truncation degree");
  series->add_flag("--closed-form", opt.closed_form,
                   "Also emit the closed form for the base");

  CLI::App* census = app.add_subcommand("census", "Brute-force conjugacy census");
  add_spec(census);
  census->add_option("--radius", opt.radius, "Ball radius");
  census->add_option("--oracle", opt.oracle, "key, unionfind or both");
  census->add_option("--conj-bound", opt.conj_bound,
                     "Starting detour slack for union-find");
  census->add_option("--max-conj-bound", opt.max_conj_bound,
                     "Largest detour slack for union-find");

  CLI::App* compare = app.add_subcommand("compare", "Formula against census");
  add_spec(compare);
  compare->add_option("--radius", opt.radius, "Oracle radius");

  CLI::App* rc = app.add_subcommand("rc", "Radius-of-convergence report");
  add_spec(rc);
  rc->add_option("--degree", opt.spec.degree, "Truncation degree (default 200)");
  rc->add_option("--window", opt.window, "Root-test window on the cgs prefix");
  rc->add_option("--radius", opt.radius,
                 "Ball radius for the brute-force sgs (0 = skip)");
  rc->add_option("--sgs-window", opt.sgs_window, "Root-test window on the sgs");

  CLI::App* asym = app.add_subcommand("asymptotics",
                                      "Lamplighter coefficients against (2/m) phi^m");
  asym->add_option("m_lo", opt.m_lo, "First m")->required();
  asym->add_option("m_hi", opt.m_hi, "Last m")->required();
  std::size_t asym_degree = 0;
  asym->add_option("--degree", asym_degree, "Truncation degree (default m_hi)");
  asym->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* trees = app.add_subcommand("trees", "Dump subtree orbit representatives");
  trees->add_option("--base", opt.base_text, "Base group L as M,N");
  trees->add_option("--max-edges", opt.max_edges, "Largest edge count");
  trees->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    SpecFile spec = opt.spec;
    if (sub->get_option_no_throw("--spec") && !opt.spec_path.empty()) {
      spec = SpecFile::from_json(read_file(opt.spec_path));
      if (sub->count("--lamp")) spec.lamp = opt.spec.lamp;
      if (sub->get_option_no_throw("--degree") && sub->count("--degree")) {
        spec.degree = opt.spec.degree;
      }
      if (sub->count("--base")) spec.base = parse_base(opt.base_text);
    } else {
      spec.base = parse_base(opt.base_text);
    }
    if (sub->get_option_no_throw("--radius") && sub->count("--radius")) {
      spec.oracle_radius = opt.radius;
    }
    if (sub == rc && !sub->count("--degree") && opt.spec_path.empty()) {
      spec.degree = 200;
    }
    const Format format = parse_format(opt.format);
    if (sub == series) return cmd_series(spec, format, opt.closed_form, out);
    if (sub == census) {
      if (!spec.oracle_radius) {
        throw std::invalid_argument("census needs --radius or oracle_radius");
      }
      return cmd_census(spec, opt, format, out, err);
    }
    if (sub == compare) return cmd_compare(spec, format, out, err);
    if (sub == rc) {
      if (spec.oracle_radius) opt.radius = *spec.oracle_radius;
      return cmd_rc(spec, opt, format, out);
    }
    if (sub == asym) {
      return cmd_asymptotics(opt, asym_degree ? asym_degree : opt.m_hi, format,
                             out);
    }
    return cmd_trees(spec.base, opt.max_edges, format, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (set WREATH_BUDGET to raise it)\n";
    return kBudget;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace wreath::cli
