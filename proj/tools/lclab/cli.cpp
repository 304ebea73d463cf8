#include "lclab/cli.hpp"

#include "CLI11.hpp"
#include "lclab/concavity.hpp"
#include "lclab/io.hpp"
#include "lclab/parallel.hpp"
#include "lclab/partitions.hpp"
#include "lclab/stirling.hpp"
#include "lclab/triangle.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>

namespace lclab::cli {
namespace {

struct RunConfig {
  std::string command;
  std::string g = "sigma";
  std::string h = "id";
  std::size_t n = 0;
  std::size_t n_max = 0;
  std::size_t n_from = 1;
  std::optional<std::size_t> m;
  std::optional<std::size_t> m_from;
  std::optional<std::size_t> m_to;
  std::size_t m_max = 0;
  std::size_t n_limit = 1500;
  std::string c = "2";
  std::string x = "1";
  std::string xs;
  bool include_m1 = false;
  std::string format = "table";
  std::string cache_dir;
  std::string out_file;
  unsigned jobs = 0;
};

void print_coords(std::ostream& out, const std::vector<Coord>& coords, std::size_t limit = 200) {
  std::size_t shown = 0;
  for (const auto& c : coords) {
    if (shown++ == limit) {
      out << " ... (" << coords.size() << " total)";
      break;
    }
    out << " (" << c.n << "," << c.m << ")";
  }
}

int emit(std::ostream& out, const CheckReport& report, bool json) {
  if (json) {
    out << report_to_json(report) << '\n';
  } else {
    out << report.name << ": " << (report.pass ? "PASS" : "FAIL") << " (" << report.comparisons
        << " comparisons)\n";
    if (!report.pass) {
      out << "first mismatch at n=" << report.first_mismatch->n << " m=" << report.first_mismatch->m
          << ": " << report.detail << '\n';
    }
  }
  return report.pass ? kExitPass : kExitFailures;
}

int emit(std::ostream& out, const ConcavityReport& report, const std::string& title, bool json) {
  if (json) {
    out << report_to_json(report) << '\n';
    return report.pass ? kExitPass : kExitFailures;
  }
  out << title << ": " << (report.pass ? "PASS" : "FAIL") << '\n';
  for (const auto& col : report.columns) {
    out << "  m=" << col.m << " n<=" << col.bound;
    if (col.clipped) out << " (clipped to n<=" << col.last_center << ")";
    out << ": " << (col.pass ? "pass" : "fail") << '\n';
  }
  if (!report.failures.empty()) {
    out << "failures (n,m):";
    print_coords(out, report.failures);
    out << '\n';
  }
  if (!report.ties.empty()) {
    out << "equalities (n,m):";
    print_coords(out, report.ties);
    out << '\n';
  }
  return report.pass ? kExitPass : kExitFailures;
}

std::vector<Rational> parse_points(const std::string& list) {
  if (list.empty()) return default_cross_check_points();
  std::vector<Rational> xs;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ',')) xs.push_back(parse_rational(item));
  if (xs.empty()) throw std::invalid_argument("--xs needs at least one value");
  return xs;
}

std::string family_label(const ArithFn& g, HKind h) {
  return "A^{" + g.label() + "," + to_string(h) + "}";
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const bool json = cfg.format == "json";
  const unsigned jobs = resolve_jobs(cfg.jobs);
  std::unique_ptr<TriangleCache> cache;
  if (const char* env = std::getenv("LCLAB_CACHE"); env && *env) {
    cache = std::make_unique<TriangleCache>(env);
  } else if (!cfg.cache_dir.empty()) {
    cache = std::make_unique<TriangleCache>(cfg.cache_dir);
  }

  const auto& cmd = cfg.command;
  if (cmd == "triangle") {
    const ArithFn g = parse_g_selector(cfg.g);
    const HKind h = parse_h_selector(cfg.h);
    const auto format = parse_triangle_format(cfg.format);
    const Triangle tri = obtain_triangle(g, h, cfg.n, std::nullopt, cache.get(), &err);
    write_triangle(out, tri, format);
    return kExitPass;
  }
  if (cfg.format != "table" && cfg.format != "json") {
    throw std::invalid_argument("check output format must be table or json");
  }
  if (cmd == "horizontal") {
    const ArithFn g = parse_g_selector(cfg.g);
    const HKind h = parse_h_selector(cfg.h);
    const Triangle tri = obtain_triangle(g, h, cfg.n_max, std::nullopt, cache.get(), &err);
    const auto report = horizontal_check(tri, cfg.n_from, cfg.n_max, jobs);
    return emit(out, report,
                "horizontal " + family_label(g, h) + " n=" + std::to_string(cfg.n_from) + ".." +
                    std::to_string(cfg.n_max),
                json);
  }
  if (cmd == "vertical") {
    const ArithFn g = parse_g_selector(cfg.g);
    const HKind h = parse_h_selector(cfg.h);
    std::size_t m_from = 1;
    std::size_t m_to = cfg.n_max;
    if (cfg.m) {
      m_from = m_to = *cfg.m;
    } else {
      if (cfg.m_from) m_from = *cfg.m_from;
      if (cfg.m_to) m_to = *cfg.m_to;
    }
    const Triangle tri = obtain_triangle(g, h, cfg.n_max, m_to, cache.get(), &err);
    const auto report = vertical_check(tri, m_from, m_to, cfg.n_max);
    return emit(out, report,
                "vertical " + family_label(g, h) + " m=" + std::to_string(m_from) + ".." +
                    std::to_string(m_to) + " rows<=" + std::to_string(cfg.n_max),
                json);
  }
  if (cmd == "cscan") {
    const ArithFn g = parse_g_selector(cfg.g);
    const HKind h = parse_h_selector(cfg.h);
    const Rational c = parse_rational(cfg.c);
    if (c <= 1) throw std::invalid_argument("--C must exceed 1");
    const std::size_t rows = c_power_floor(c, cfg.m_max) + 1;
    const Triangle tri = obtain_triangle(g, h, rows, cfg.m_max, cache.get(), &err);
    const auto report = c_vertical_check(tri, c, cfg.include_m1 ? 1 : 2, cfg.m_max);
    const std::string title = "C-vertical " + family_label(g, h) + " C=" + to_string(c) + " m=" +
                              (cfg.include_m1 ? "1" : "2") + ".." + std::to_string(cfg.m_max);
    if (json || cfg.include_m1) return emit(out, report, title, json);
    const int code = emit(out, report, title, json);
    const auto m1 = c_vertical_check(tri, c, 1, 1);
    out << "m=1 column (not part of the verdict; use --include-m1): "
        << (m1.pass ? "pass" : "fail");
    if (!m1.pass) print_coords(out, m1.failures);
    out << '\n';
    return code;
  }
  if (cmd == "conversion") {
    return emit(out, check_conversion(parse_g_selector(cfg.g), cfg.n_max), json);
  }
  if (cmd == "genfun") {
    const auto xs = parse_points(cfg.xs);
    return emit(out,
                genfun_crosscheck(parse_g_selector(cfg.g), parse_h_selector(cfg.h), cfg.n_max, xs),
                json);
  }
  if (cmd == "euler") {
    return emit(out,
                euler_product_crosscheck(parse_g_selector(cfg.g), cfg.n_max, parse_rational(cfg.x)),
                json);
  }
  if (cmd == "no-identity") {
    return emit(out, check_no_identity(static_cast<unsigned>(cfg.n_max), jobs), json);
  }
  if (cmd == "hz") {
    const Rational c = parse_rational(cfg.c);
    const auto report = hong_zhang_scan(c, static_cast<unsigned>(cfg.m_max));
    return emit(out, report,
                "Hong-Zhang C=" + to_string(c) + " m=2.." + std::to_string(cfg.m_max), json);
  }
  if (cmd == "table1") {
    const auto first = stirling_vertical_first_failures(cfg.m_max, cfg.n_limit);
    const bool complete = std::all_of(first.begin(), first.end(), [](const auto& v) { return v.has_value(); });
    if (json) {
      out << "{\"schema\":\"lclab.report\",\"version\":" << kReportSchemaVersion
          << ",\"kind\":\"table1\",\"n_limit\":" << cfg.n_limit << ",\"n0\":[";
      for (std::size_t i = 0; i < first.size(); ++i) {
        out << (i ? "," : "") << (first[i] ? std::to_string(*first[i]) : "null");
      }
      out << "],\"complete\":" << (complete ? "true" : "false") << "}\n";
    } else {
      for (std::size_t i = 0; i < first.size(); ++i) {
        out << (i ? " " : "") << (first[i] ? std::to_string(*first[i]) : "-");
      }
      out << '\n';
    }
    return complete ? kExitPass : kExitFailures;
  }
  if (cmd == "closed-forms") {
    return emit(out, check_closed_forms(cfg.n_max), json);
  }
  throw std::logic_error("unhandled command " + cmd);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"lclab: coefficient triangles of P_n^{g,h}(x) and their log-concavity"};
  app.name("lclab");
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", cfg.out_file, "Write output to FILE instead of stdout");
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = all cores, 1 = sequential)");
  app.add_option("--cache", cfg.cache_dir, "Triangle cache directory (LCLAB_CACHE overrides)");

  const auto g_option = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--g", cfg.g, "one|id|square|sigma|sigma_k=K|custom=PATH");
    if (required) opt->required();
  };
  const auto h_option = [&](CLI::App* sub) {
    sub->add_option("--h", cfg.h, "one|id")->required()->check(CLI::IsMember({"one", "id"}));
  };
  const auto format_option = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(choices));
  };

  auto* triangle = app.add_subcommand("triangle", "Build (or load) and print a triangle");
  g_option(triangle, true);
  h_option(triangle);
  triangle->add_option("--n", cfg.n, "Largest row N")->required()->check(CLI::PositiveNumber);
  format_option(triangle, {"table", "json", "csv"});
  triangle->callback([&] { cfg.command = "triangle"; });

  auto* check = app.add_subcommand("check", "Run a log-concavity scan or an identity check");
  check->require_subcommand(1);
  check->fallthrough();
  format_option(check, {"table", "json"});

  auto add_check = [&](const std::string& name, const std::string& help) {
    auto* sub = check->add_subcommand(name, help);
    sub->fallthrough();
    format_option(sub, {"table", "json"});
    sub->callback([&cfg, name] { cfg.command = name; });
    return sub;
  };

  auto* horizontal = add_check("horizontal", "Row log-concavity");
  g_option(horizontal, true);
  h_option(horizontal);
  horizontal->add_option("--n-max", cfg.n_max, "Last row")->required()->check(CLI::PositiveNumber);
  horizontal->add_option("--n-from", cfg.n_from, "First row (default 1)");

  auto* vertical = add_check("vertical", "Column log-concavity at centers n < N");
  g_option(vertical, true);
  h_option(vertical);
  vertical->add_option("--n-max", cfg.n_max, "Largest row N")->required()->check(CLI::PositiveNumber);
  auto* m_opt = vertical->add_option("--m", cfg.m, "Single column");
  vertical->add_option("--m-from", cfg.m_from, "First column")->excludes(m_opt);
  vertical->add_option("--m-to", cfg.m_to, "Last column")->excludes(m_opt);

  auto* cscan = add_check("cscan", "Vertical C-log-concavity, n <= floor(C^m)");
  g_option(cscan, true);
  h_option(cscan);
  cscan->add_option("--C", cfg.c, "C > 1 as P/Q")->required();
  cscan->add_option("--m-max", cfg.m_max, "Last column")->required()->check(CLI::PositiveNumber);
  cscan->add_flag("--include-m1", cfg.include_m1, "Count column m=1 in the verdict");

  auto* conversion = add_check("conversion", "m! A^{g,id} = A^{g~,1}");
  g_option(conversion, true);
  conversion->add_option("--n-max", cfg.n_max)->required()->check(CLI::PositiveNumber);

  auto* genfun = add_check("genfun", "Triangle rows against exp / geometric generating series");
  g_option(genfun, true);
  h_option(genfun);
  genfun->add_option("--n-max", cfg.n_max)->required()->check(CLI::PositiveNumber);
  genfun->add_option("--xs", cfg.xs, "Comma-separated evaluation points (default 1,2,3,-1,1/2)");

  auto* euler = add_check("euler", "Triangle rows against the Euler product of mu*g");
  g_option(euler, true);
  euler->add_option("--n-max", cfg.n_max)->required()->check(CLI::PositiveNumber);
  euler->add_option("--x", cfg.x, "Evaluation point P/Q")->required();

  cfg.n_max = 20;
  auto* no_identity = add_check("no-identity", "Hook-length Q_n against shifted D'Arcais rows");
  no_identity->add_option("--n-max", cfg.n_max, "Largest n (default 20)");

  auto* hz = add_check("hz", "Hong-Zhang inequality for 2 <= m <= m_max, n <= floor(C^m)");
  hz->add_option("--C", cfg.c, "C > 1 as P/Q")->required();
  hz->add_option("--m-max", cfg.m_max)->required()->check(CLI::Range(2, 64));

  auto* table1 = add_check("table1", "First vertical failures of S(n,m)/n!");
  table1->add_option("--m-max", cfg.m_max)->required()->check(CLI::PositiveNumber);
  table1->add_option("--n-limit", cfg.n_limit, "Largest n scanned (default 1500)");

  auto* closed = add_check("closed-forms", "Recursion against the six closed-form families");
  closed->add_option("--n-max", cfg.n_max)->required()->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    if (!rev.empty()) rev.pop_back();
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'lclab --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (cfg.out_file.empty()) return execute(cfg, out, err);
    std::ostringstream buffer;
    const int code = execute(cfg, buffer, err);
    std::ofstream file(cfg.out_file, std::ios::trunc);
    if (!file) throw std::runtime_error("cannot write " + cfg.out_file);
    file << buffer.str();
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace lclab::cli
