#include "conedd/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "conedd/oracle.hpp"
#include "conedd/triangulation.hpp"

namespace conedd {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
}

bool looks_like_triangulation(const std::string& path) {
  return std::filesystem::path(path).extension() == ".tri";
}

EnumerationProblem load_problem(const std::string& path, bool as_triangulation) {
  const std::string text = read_file(path);
  try {
    if (as_triangulation) return standard_matching_equations(parse_triangulation(text));
    return parse_cone(text);
  } catch (const ParseError& e) {
    throw InputError(path + ": " + e.what());
  } catch (const TriangulationError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find(sep, pos);
    out.emplace_back(s.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

std::string format_ms(double ms) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(3) << ms;
  return os.str();
}

BenchRow make_row(std::string instance, std::string coords, const RunConfig& cfg, const RunResult& r) {
  BenchRow row;
  row.instance = std::move(instance);
  row.coordinates = std::move(coords);
  row.config = cfg;
  row.time_ms = r.stats.elapsed_ms;
  row.peak_mem_bytes = r.stats.peak_memory_bytes;
  row.max_vertices = r.stats.max_vertices;
  row.final_count = r.stats.final_count;
  row.sep = r.stats.sep;
  return row;
}

// Wraps a subcommand body so that exceptions become exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const TriangulationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const OracleLimitError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternalError;
  }
}

}  // namespace

std::string bench_csv_header() {
  return "instance,coords,ordering,adjacency,representation,filtering,prefilter,time_ms,peak_mem_bytes,"
         "max_vertices,final_count,sep,status";
}

std::string to_csv(const BenchRow& row) {
  std::ostringstream os;
  os << row.instance << ',' << row.coordinates << ',' << row.config.ordering.str() << ','
     << to_string(row.config.adjacency) << ',' << to_string(row.config.representation) << ','
     << (row.config.filtering ? "on" : "off") << ',' << to_string(row.config.dim_prefilter) << ','
     << format_ms(row.time_ms) << ',' << row.peak_mem_bytes << ',' << row.max_vertices << ',' << row.final_count
     << ',' << row.sep << ',' << row.status;
  return os.str();
}

std::vector<RunConfig> parse_matrix(std::string_view spec) {
  std::vector<RunConfig> out;
  if (spec.empty()) return out;

  if (spec == "improvements") {
    RunConfig c;
    c.ordering = OrderingStrategy::input();
    c.representation = Representation::Full;
    c.dim_prefilter = DimFilter::Off;
    out.push_back(c);  // plain filtered double description
    c.dim_prefilter = DimFilter::Extended;
    out.push_back(c);  // + bitmask prefiltering
    c.ordering = OrderingStrategy::position();
    out.push_back(c);  // + hyperplane sorting
    c.representation = Representation::Inner;
    out.push_back(c);  // + inner product storage
    return out;
  }

  std::vector<OrderingStrategy> orders{RunConfig{}.ordering};
  std::vector<Adjacency> adjacencies{RunConfig{}.adjacency};
  std::vector<Representation> reps{RunConfig{}.representation};
  std::vector<bool> filters{RunConfig{}.filtering};
  std::vector<DimFilter> prefilters{RunConfig{}.dim_prefilter};

  if (spec == "orderings" || spec == "all") {
    orders = {OrderingStrategy::input(), OrderingStrategy::position(), OrderingStrategy::lex_positive(),
              OrderingStrategy::lex_random(1), OrderingStrategy::dynamic()};
    if (spec == "all") {
      adjacencies = {Adjacency::Combinatorial, Adjacency::Algebraic};
      reps = {Representation::Full, Representation::Inner};
      filters = {true, false};
      prefilters = {DimFilter::Off, DimFilter::Basic, DimFilter::Extended};
    }
  } else {
    for (const auto& axis : split(spec, ';')) {
      if (axis.empty()) continue;
      const auto eq = axis.find('=');
      if (eq == std::string::npos) throw std::invalid_argument("matrix axis '" + axis + "' needs key=values");
      const std::string key = axis.substr(0, eq);
      std::vector<std::string> values = split(std::string_view(axis).substr(eq + 1), ',');
      if (values.size() == 1 && values[0].empty()) values.clear();
      if (key == "order") {
        orders.clear();
        for (const auto& v : values) orders.push_back(OrderingStrategy::parse(v));
      } else if (key == "adjacency") {
        adjacencies.clear();
        for (const auto& v : values) adjacencies.push_back(parse_adjacency(v));
      } else if (key == "rep") {
        reps.clear();
        for (const auto& v : values) reps.push_back(parse_representation(v));
      } else if (key == "filter") {
        filters.clear();
        for (const auto& v : values) {
          if (v != "on" && v != "off") throw std::invalid_argument("filter values are on|off, got '" + v + "'");
          filters.push_back(v == "on");
        }
      } else if (key == "prefilter") {
        prefilters.clear();
        for (const auto& v : values) prefilters.push_back(parse_dim_filter(v));
      } else {
        throw std::invalid_argument("unknown matrix axis '" + key + "'");
      }
    }
  }

  for (const auto& o : orders)
    for (auto a : adjacencies)
      for (auto r : reps)
        for (bool f : filters)
          for (auto pf : prefilters) out.push_back(RunConfig{o, a, r, f, pf});
  return out;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact extreme-ray enumeration for cones with at-most-one-non-zero groups", "conedd"};
  app.require_subcommand(1);

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Enumerate the extreme rays of a cone or triangulation");
  std::string en_input, en_order = "position", en_adj = "comb", en_rep = "inner", en_prefilter = "extended";
  std::string en_stats, en_output;
  bool en_tri = false, en_no_filter = false;
  enumerate->add_option("--input", en_input, "Cone file, or triangulation with --tri")->required();
  enumerate->add_flag("--tri", en_tri, "Read the input as a triangulation (standard coordinates)");
  enumerate->add_option("--order", en_order, "input|position|lexpos|lexrand:<seed>|dynamic");
  enumerate->add_option("--adjacency", en_adj, "comb|alg");
  enumerate->add_option("--rep", en_rep, "full|inner");
  enumerate->add_flag("--no-filter", en_no_filter, "Disable group filtering");
  enumerate->add_option("--prefilter", en_prefilter, "off|basic|extended");
  enumerate->add_option("--stats", en_stats, "Write a one-row benchmark CSV here");
  enumerate->add_option("--output", en_output, "Ray file (default: stdout)");

  // equations
  auto* equations = app.add_subcommand("equations", "Write the standard matching equations of a triangulation");
  std::string eq_input, eq_output;
  bool eq_dedup = false;
  equations->add_option("--input", eq_input, "Triangulation file")->required();
  equations->add_flag("--dedup", eq_dedup, "Drop exact duplicate equations");
  equations->add_option("--output", eq_output, "Cone file (default: stdout)");

  // verify
  auto* verify = app.add_subcommand("verify", "Check that every ray is admissible and extreme");
  std::string ve_problem, ve_rays;
  bool ve_tri = false;
  verify->add_option("--problem", ve_problem, "Cone file, or triangulation with --tri")->required();
  verify->add_option("--rays", ve_rays, "Ray file")->required();
  verify->add_flag("--tri", ve_tri, "Read the problem as a triangulation");

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Brute-force extreme rays for small cones");
  std::string or_input, or_output;
  bool or_tri = false, or_no_filter = false;
  oracle->add_option("--input", or_input, "Cone file, or triangulation with --tri")->required();
  oracle->add_flag("--tri", or_tri, "Read the input as a triangulation");
  oracle->add_flag("--no-filter", or_no_filter, "Keep rays that violate the groups");
  oracle->add_option("--output", or_output, "Ray file (default: stdout)");

  // bench
  auto* bench = app.add_subcommand("bench", "Run a configuration matrix and write CSV");
  std::string be_inputs, be_matrix = "improvements", be_out;
  bench->add_option("--input", be_inputs, "Comma-separated inputs; *.tri files are triangulations")->required();
  bench->add_option("--matrix", be_matrix, "Preset (improvements|orderings|all) or key=v1,v2;... axes")
      ->expected(0, 1);
  bench->add_option("--out", be_out, "CSV file (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  auto emit = [&](const std::string& path, const std::string& text) {
    if (path.empty())
      out << text;
    else
      write_file(path, text);
  };

  if (enumerate->parsed()) {
    return guarded(err, [&] {
      RunConfig cfg;
      cfg.ordering = OrderingStrategy::parse(en_order);
      cfg.adjacency = parse_adjacency(en_adj);
      cfg.representation = parse_representation(en_rep);
      cfg.filtering = !en_no_filter;
      cfg.dim_prefilter = parse_dim_filter(en_prefilter);
      const EnumerationProblem p = load_problem(en_input, en_tri);
      const RunResult r = run(p, cfg);
      emit(en_output, write_rays(r.rays));
      if (!en_stats.empty()) {
        const BenchRow row = make_row(std::filesystem::path(en_input).stem().string(), en_tri ? "standard" : "cone",
                                      cfg, r);
        write_file(en_stats, bench_csv_header() + "\n" + to_csv(row) + "\n");
      }
      return static_cast<int>(kExitOk);
    });
  }

  if (equations->parsed()) {
    return guarded(err, [&] {
      const std::string text = read_file(eq_input);
      Triangulation t;
      try {
        t = parse_triangulation(text);
      } catch (const std::exception& e) {
        throw InputError(eq_input + ": " + e.what());
      }
      emit(eq_output, write_cone(standard_matching_equations(t, eq_dedup)));
      return static_cast<int>(kExitOk);
    });
  }

  if (verify->parsed()) {
    return guarded(err, [&] {
      const EnumerationProblem p = load_problem(ve_problem, ve_tri);
      std::vector<IntVector> rays;
      try {
        rays = parse_rays(read_file(ve_rays), p.dim);
      } catch (const ParseError& e) {
        throw InputError(ve_rays + ": " + e.what());
      }
      for (std::size_t i = 0; i < rays.size(); ++i) {
        const char* problem = nullptr;
        if (!admissible(p, rays[i]))
          problem = "is not admissible";
        else if (!is_extreme(p, rays[i]))
          problem = "is not an extreme ray";
        if (problem) {
          err << "violation: ray " << i << ' ' << to_string(rays[i]) << ' ' << problem << '\n';
          return static_cast<int>(kExitVerificationFailure);
        }
      }
      out << "ok: " << rays.size() << " rays admissible and extreme\n";
      return static_cast<int>(kExitOk);
    });
  }

  if (oracle->parsed()) {
    return guarded(err, [&] {
      const EnumerationProblem p = load_problem(or_input, or_tri);
      emit(or_output, write_rays(or_no_filter ? brute_force_rays(p) : brute_force_filtered(p)));
      return static_cast<int>(kExitOk);
    });
  }

  if (bench->parsed()) {
    return guarded(err, [&] {
      const std::vector<RunConfig> configs = parse_matrix(be_matrix);
      std::ostringstream csv;
      csv << bench_csv_header() << '\n';
      std::size_t runs = 0, failures = 0;
      for (const auto& path : split(be_inputs, ',')) {
        if (path.empty()) continue;
        const bool tri = looks_like_triangulation(path);
        const std::string name = std::filesystem::path(path).stem().string();
        const std::string coords = tri ? "standard" : "cone";
        std::optional<EnumerationProblem> p;
        std::string load_error;
        try {
          p = load_problem(path, tri);
        } catch (const std::exception& e) {
          load_error = e.what();
        }
        for (const auto& cfg : configs) {
          ++runs;
          BenchRow row;
          if (p) {
            try {
              row = make_row(name, coords, cfg, run(*p, cfg));
            } catch (const std::exception& e) {
              row = BenchRow{name, coords, cfg};
              row.status = std::string("error: ") + e.what();
            }
          } else {
            row = BenchRow{name, coords, cfg};
            row.status = "error: " + load_error;
          }
          std::replace(row.status.begin(), row.status.end(), ',', ';');
          std::replace(row.status.begin(), row.status.end(), '\n', ' ');
          if (row.status != "ok") ++failures;
          csv << to_csv(row) << '\n';
        }
      }
      emit(be_out, csv.str());
      return static_cast<int>(runs > 0 && failures == runs ? kExitInternalError : kExitOk);
    });
  }
  return kExitInputError;
}

}  // namespace conedd
