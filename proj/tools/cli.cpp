#include "cli.hpp"

#include <algorithm>
#include <future>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "dyer/coxeter.hpp"
#include "dyer/euler.hpp"
#include "dyer/growth.hpp"
#include "dyer/io.hpp"
#include "dyer/oracle.hpp"

namespace dyer::cli {

namespace {

constexpr std::size_t kSanityTerms = 20;

std::string render(const RationalFunction& f, const std::string& format, const std::string& method) {
  if (format == "latex") return format_latex(f);
  if (format == "json") return rational_function_to_json(f, method);
  return format_plain(f);
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i == 0 ? "" : sep) + parts[i];
  return out;
}

template <typename T>
std::string join_numbers(const std::vector<T>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) os << (i == 0 ? "" : " ") << values[i];
  return os.str();
}

std::vector<std::string> split_names(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool nonnegative_with_unit_constant(const RationalFunction& f) {
  const auto c = f.taylor_coefficients(kSanityTerms - 1);
  return c[0] == 1 && std::all_of(c.begin(), c.end(), [](const Integer& x) { return x >= 0; });
}

int cmd_growth(const DyerGraph& g, const std::string& method, const std::string& format, std::ostream& out) {
  Strategy s = Strategy::kAuto;
  if (method == "subset") s = Strategy::kSubset;
  if (method == "amalgam") s = Strategy::kAmalgam;
  if (method == "cross-check") s = Strategy::kCrossCheck;
  const GrowthResult r = growth(g, s);
  out << render(r.series, format, to_string(r.method)) << '\n';
  return kOk;
}

int cmd_spheres(const DyerGraph& g, std::size_t n, bool verify, std::ostream& out, std::ostream& err) {
  const auto counts = sphere_sizes(g, n);
  out << join_numbers(counts) << '\n';
  if (!verify) return kOk;
  auto model = build_oracle(g);
  if (auto* u = std::get_if<Unsupported>(&model)) {
    err << "oracle unsupported: " << u->reason << '\n';
    return kUnsupported;
  }
  const CensusReport census = bfs_census(*std::get<OraclePtr>(model), n);
  bool match = census.counts.size() == counts.size();
  for (std::size_t k = 0; match && k < counts.size(); ++k) match = counts[k] == census.counts[k];
  if (!match) {
    out << "oracle: MISMATCH (" << join_numbers(census.counts) << ")\n";
    return kMismatch;
  }
  out << "oracle: MATCH\n";
  return kOk;
}

int cmd_euler(const DyerGraph& g, const std::string& method, std::ostream& out) {
  if (method == "growth") {
    out << format_rational(euler_via_growth(g).value) << '\n';
    return kOk;
  }
  if (method == "recursive") {
    out << format_rational(euler_recursive(g).value) << '\n';
    return kOk;
  }
  const Rational a = euler_via_growth(g).value;
  const Rational b = euler_recursive(g).value;
  if (a != b) {
    out << "MISMATCH: growth gives " << format_rational(a) << ", recursion gives " << format_rational(b) << '\n';
    return kMismatch;
  }
  out << format_rational(a) << " (both methods agree)\n";
  return kOk;
}

int cmd_classify(const DyerGraph& g, std::ostream& out) {
  const StructureReport r = classify(g);
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  out << "vertices: " << g.size() << " (V_2: " << r.order_two_count << ", V_p: " << r.periodic_count
      << ", V_inf: " << r.infinite_count << ")\n";
  out << "complete: " << yes(r.is_complete) << '\n';
  out << "spherical: " << yes(r.is_spherical) << '\n';
  out << "finite: " << yes(r.is_finite_group) << '\n';
  out << "coxeter components:";
  if (r.coxeter_components.empty()) out << " none";
  out << '\n';
  for (std::size_t i = 0; i < r.coxeter_components.size(); ++i) {
    std::vector<std::string> names;
    for (std::size_t v : r.coxeter_components[i]) names.push_back(g.name(v));
    out << "  {" << join(names, ", ") << "}: ";
    out << (r.coxeter_types ? (*r.coxeter_types)[i].name() : std::string("-")) << '\n';
  }
  if (!r.coxeter_types) out << "D_2 is infinite\n";
  return kOk;
}

int cmd_pd(const DyerGraph& g, const std::string& format, std::ostream& out, std::ostream& err) {
  const StructureReport r = classify(g);
  if (!r.is_spherical) {
    err << "pd: graph is not of spherical type; B_empty is empty\n";
    return kUnsupported;
  }
  out << render(pd_series(g), format, "pd") << '\n';
  return kOk;
}

int cmd_bxseries(const DyerGraph& g, const std::string& subset, const std::string& format, std::ostream& out) {
  const VertexSubset x = g.subset(split_names(subset));
  out << render(bx_series(g, x), format, "bx") << '\n';
  return kOk;
}

std::string format_report(const std::string& label, const CheckReport& report) {
  std::ostringstream os;
  os << "== " << label << '\n';
  for (const auto& l : report.lines) {
    os << "  " << l.name << ": " << l.status;
    if (!l.detail.empty()) os << " (" << l.detail << ")";
    os << '\n';
  }
  os << "  result: " << (report.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

int cmd_check(const std::vector<std::string>& files, std::size_t radius, std::ostream& out, std::ostream& err) {
  // Validate everything up front so bad input is reported before any work.
  std::vector<DyerGraph> graphs;
  graphs.reserve(files.size());
  for (const auto& f : files) graphs.push_back(load_graph(f));

  std::vector<std::future<CheckReport>> jobs;
  jobs.reserve(graphs.size());
  for (const auto& g : graphs) {
    jobs.push_back(std::async(std::launch::async, [&g, radius] { return run_checks(g, radius); }));
  }
  bool all = true;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    const CheckReport r = jobs[i].get();
    all = all && r.passed();
    out << format_report(files[i], r);
  }
  if (!all) err << "check: consistency failure\n";
  return all ? kOk : kMismatch;
}

}  // namespace

bool CheckReport::passed() const {
  return std::none_of(lines.begin(), lines.end(), [](const CheckLine& l) { return l.status == "FAIL"; });
}

CheckReport run_checks(const DyerGraph& g, std::size_t oracle_radius) {
  CheckReport report;
  auto add = [&](std::string name, bool ok, std::string detail = {}) {
    report.lines.push_back({std::move(name), ok ? "ok" : "FAIL", std::move(detail)});
  };
  auto skip = [&](std::string name, std::string why) {
    report.lines.push_back({std::move(name), "skipped", std::move(why)});
  };

  GrowthEngine engine(g);
  const VertexSubset all = g.all();
  const RationalFunction by_subset = engine.subset_recursion(all);
  const RationalFunction by_amalgam = engine.amalgam(all);
  add("subset vs amalgam recursion", by_subset == by_amalgam, format_plain(by_amalgam));
  add("coefficients nonnegative, a_0 = 1", nonnegative_with_unit_constant(by_amalgam));

  try {
    const RationalFunction gp = graph_product_check(g);
    add("graph-product formula", gp == by_amalgam);
  } catch (const NotGraphProduct&) {
    skip("graph-product formula", "edge label >= 3");
  }

  const bool spherical = engine.is_spherical(all);
  const RationalFunction lhs_sum = engine.proper_subset_sum(all);
  const RationalFunction sign = (g.size() % 2 == 0) ? RationalFunction(-1) : RationalFunction(1);  // (-1)^{|V|+1}
  const RationalFunction b_empty = engine.bx_series(g.none());
  if (spherical) {
    const RationalFunction pd = pd_series(g);
    add("B_empty identity (spherical)", (pd + sign) / by_amalgam == lhs_sum && b_empty == pd);
  } else {
    add("B_empty identity (non-spherical)", sign / by_amalgam == lhs_sum && b_empty.is_zero());
  }

  // sum over Y containing X of B_Y reproduces the series of X-minimal elements, G / G_X.
  bool inversion = true;
  bool bx_nonnegative = true;
  const Mask full = g.vertex_mask();
  std::vector<RationalFunction> bx(std::size_t{1} << g.size());
  for (Mask x = 0;; x = (x - full) & full) {
    bx[x] = engine.bx_series(g.subset(x));
    if (!bx[x].is_zero()) {
      const auto c = bx[x].taylor_coefficients(kSanityTerms - 1);
      bx_nonnegative = bx_nonnegative && std::all_of(c.begin(), c.end(), [](const Integer& v) { return v >= 0; });
    }
    if (x == full) break;
  }
  for (Mask x = 0;; x = (x - full) & full) {
    RationalFunction sum = 0;
    const Mask free = full & ~x;
    for (Mask extra = free;; extra = (extra - 1) & free) {
      sum += bx[x | extra];
      if (extra == 0) break;
    }
    inversion = inversion && sum == by_amalgam / engine.amalgam(g.subset(x));
    if (x == full) break;
  }
  add("B_X Moebius inversion", inversion && bx[full] == 1);
  add("B_X coefficients nonnegative", bx_nonnegative);

  try {
    const Rational a = euler_via_growth(g).value;
    const Rational b = euler_recursive(g).value;
    add("Euler characteristic", a == b, format_rational(a));
  } catch (const PoleError& e) {
    add("Euler characteristic", false, e.what());
  }

  auto model = build_oracle(g);
  if (auto* u = std::get_if<Unsupported>(&model)) {
    skip("oracle census", u->reason);
  } else {
    const CensusReport census = bfs_census(*std::get<OraclePtr>(model), oracle_radius);
    const auto counts = by_amalgam.taylor_coefficients(oracle_radius);
    bool match = true;
    for (std::size_t k = 0; k <= oracle_radius; ++k) match = match && counts[k] == census.counts[k];
    add("oracle census to radius " + std::to_string(oracle_radius), match, join_numbers(census.counts));
  }
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Growth series, sphere sizes and Euler characteristics of Dyer groups", "dyergrowth"};
  app.require_subcommand(1);

  std::string file;
  std::vector<std::string> files;
  std::string method = "auto";
  std::string format = "plain";
  std::string euler_method = "both";
  std::string subset;
  std::size_t n = 0;
  std::size_t radius = 5;
  bool verify = false;

  const auto formats = CLI::IsMember({"plain", "latex", "json"});

  auto* growth_cmd = app.add_subcommand("growth", "Print the growth series");
  growth_cmd->add_option("FILE", file, "Graph file")->required();
  growth_cmd->add_option("--method", method, "auto|subset|amalgam|cross-check")
      ->check(CLI::IsMember({"auto", "subset", "amalgam", "cross-check"}));
  growth_cmd->add_option("--format", format, "plain|latex|json")->check(formats);

  auto* spheres_cmd = app.add_subcommand("spheres", "Print sphere sizes a_0..a_N");
  spheres_cmd->add_option("FILE", file, "Graph file")->required();
  spheres_cmd->add_option("-n", n, "Largest radius")->required();
  spheres_cmd->add_flag("--verify-oracle", verify, "Compare against a Cayley-graph census");

  auto* euler_cmd = app.add_subcommand("euler", "Print the rational Euler characteristic");
  euler_cmd->add_option("FILE", file, "Graph file")->required();
  euler_cmd->add_option("--method", euler_method, "growth|recursive|both")
      ->check(CLI::IsMember({"growth", "recursive", "both"}));

  auto* classify_cmd = app.add_subcommand("classify", "Describe the graph's structure");
  classify_cmd->add_option("FILE", file, "Graph file")->required();

  auto* bx_cmd = app.add_subcommand("bxseries", "Print the series of B_X");
  bx_cmd->add_option("FILE", file, "Graph file")->required();
  bx_cmd->add_option("--subset", subset, "Comma-separated vertex names (empty for the empty set)")->required();
  bx_cmd->add_option("--format", format, "plain|latex|json")->check(formats);

  auto* pd_cmd = app.add_subcommand("pd", "Print P_D for a spherical graph");
  pd_cmd->add_option("FILE", file, "Graph file")->required();
  pd_cmd->add_option("--format", format, "plain|latex|json")->check(formats);

  auto* check_cmd = app.add_subcommand("check", "Run the full consistency battery");
  check_cmd->add_option("FILE", files, "Graph files")->required();
  check_cmd->add_option("--radius", radius, "Oracle census radius");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (check_cmd->parsed()) return cmd_check(files, radius, out, err);
    const DyerGraph g = load_graph(file);
    if (growth_cmd->parsed()) return cmd_growth(g, method, format, out);
    if (spheres_cmd->parsed()) return cmd_spheres(g, n, verify, out, err);
    if (euler_cmd->parsed()) return cmd_euler(g, euler_method, out);
    if (classify_cmd->parsed()) return cmd_classify(g, out);
    if (bx_cmd->parsed()) return cmd_bxseries(g, subset, format, out);
    if (pd_cmd->parsed()) return cmd_pd(g, format, out, err);
  } catch (const ValidationError& e) {
    err << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::out_of_range& e) {
    err << e.what() << '\n';
    return kInvalidInput;
  } catch (const CrossCheckMismatch& e) {
    err << e.what() << '\n';
    return kMismatch;
  } catch (const PoleError& e) {
    err << e.what() << '\n';
    return kMismatch;
  }
  return kInvalidInput;
}

}  // namespace dyer::cli
