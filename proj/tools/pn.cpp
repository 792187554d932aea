// Command-line front end for the P^n spectral decimation library.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "pn/decimation.hpp"
#include "pn/errors.hpp"
#include "pn/geometry.hpp"
#include "pn/graph.hpp"
#include "pn/json_io.hpp"
#include "pn/spectrum.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

std::size_t env_cap(const char* name, std::size_t fallback) {
  const char* v = std::getenv(name);
  if (!v) return fallback;
  return static_cast<std::size_t>(std::strtoull(v, nullptr, 10));
}

void write_output(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

pn::FunctionOnGraph read_values(const std::string& path, std::size_t expected) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open values file: " + path);
  ordered_json j;
  f >> j;
  pn::FunctionOnGraph u = j.get<std::vector<double>>();
  if (u.size() != expected)
    throw std::runtime_error("values file has " + std::to_string(u.size()) +
                             " entries, expected " + std::to_string(expected));
  return u;
}

// A seed eigenvalue is either a decimal literal or "oracle:k" (1-based index
// into the ascending oracle spectrum at the seed level).
double resolve_seed(const std::string& s, int n, int level, std::size_t interior_cap,
                    pn::FunctionOnGraph* eigenfunction) {
  if (s.rfind("oracle:", 0) == 0) {
    int k = std::stoi(s.substr(7));
    auto spec = pn::full_spectrum(n, level, interior_cap);
    if (k < 1 || k > static_cast<int>(spec.size()))
      throw std::runtime_error("oracle index out of range (spectrum has " +
                               std::to_string(spec.size()) + " eigenvalues)");
    if (eigenfunction) *eigenfunction = spec[k - 1].vector;
    return spec[k - 1].lambda;
  }
  return std::stod(s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph approximations and spectral decimation for the fractals P^n"};
  app.require_subcommand(1);

  const std::size_t vertex_cap = env_cap("PN_VERTEX_CAP", pn::kDefaultVertexCap);
  const std::size_t interior_cap = env_cap("PN_INTERIOR_CAP", pn::kDefaultInteriorCap);

  int n = 3, level = 1, seed_level = 1, target_level = 1, max_level = 64;
  double tol = 1e-8;
  std::string seed_lambda = "0", signs, out, edges_out, values_path, function_out;
  std::string format = "json";
  bool extended = false, renorm = false;

  auto* c_graph = app.add_subcommand("graph", "Build the level-m graph and export it");
  c_graph->add_option("--n", n, "alphabet size")->required()->check(CLI::Range(2, 1000));
  c_graph->add_option("--level", level, "graph level m")->required()->check(CLI::NonNegativeNumber);
  c_graph->add_option("--out", out, "output file (default stdout)");

  auto* c_spec = app.add_subcommand("spectrum", "Oracle Dirichlet spectrum of the level-m graph");
  c_spec->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
  c_spec->add_option("--level", level)->required()->check(CLI::PositiveNumber);
  c_spec->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  c_spec->add_option("--out", out);

  auto* c_cls = app.add_subcommand("classify", "Classify the spectrum against the decimation recursion");
  c_cls->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
  c_cls->add_option("--level", level)->required()->check(CLI::PositiveNumber);
  c_cls->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
  c_cls->add_option("--out", out);

  auto* c_dec = app.add_subcommand("decimate", "Run the eigenvalue recursion from a seed");
  c_dec->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
  c_dec->add_option("--seed-level", seed_level)->required()->check(CLI::PositiveNumber);
  c_dec->add_option("--seed-lambda", seed_lambda, "decimal literal or oracle:k")->required();
  c_dec->add_option("--signs", signs, "sign schedule, e.g. \"+--\"");
  c_dec->add_option("--target-level", target_level)->required();
  c_dec->add_option("--function-out", function_out,
                    "write the extended eigenfunction (requires an oracle seed)");
  c_dec->add_option("--out", out);

  auto* c_lim = app.add_subcommand("limit", "Renormalized fractal eigenvalue limit");
  c_lim->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
  c_lim->add_option("--seed-level", seed_level)->required()->check(CLI::PositiveNumber);
  c_lim->add_option("--seed-lambda", seed_lambda)->required();
  c_lim->add_option("--signs", signs);
  c_lim->add_option("--tol", tol)->check(CLI::PositiveNumber);
  c_lim->add_option("--max-level", max_level)->check(CLI::Range(1, 250));
  c_lim->add_flag("--extended-precision", extended, "iterate in long double");
  c_lim->add_option("--out", out);

  auto* c_en = app.add_subcommand("energy", "Energy of a function on the level-m graph");
  c_en->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
  c_en->add_option("--level", level)->required()->check(CLI::NonNegativeNumber);
  c_en->add_option("--values", values_path, "JSON array of vertex values")->required();
  c_en->add_flag("--renormalized", renorm, "also print ((n+2)/n)^m E");

  auto* c_har = app.add_subcommand("harmonic", "Harmonic extension from level m-1 to m");
  c_har->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
  c_har->add_option("--level", level, "target level m")->required()->check(CLI::PositiveNumber);
  c_har->add_option("--values", values_path, "JSON array of values on V_{m-1}")->required();
  c_har->add_option("--out", out);

  auto* c_emb = app.add_subcommand("embed", "Euclidean point cloud of V_m");
  c_emb->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
  c_emb->add_option("--level", level)->required()->check(CLI::NonNegativeNumber);
  c_emb->add_option("--values", values_path, "optional JSON array of vertex values");
  c_emb->add_option("--format", format)->check(CLI::IsMember({"columns", "csv"}));
  c_emb->add_option("--out", out, "points file")->required();
  c_emb->add_option("--edges-out", edges_out, "edge list file")->required();

  auto* c_dim = app.add_subcommand("dim", "Hausdorff dimension of K_n");
  c_dim->add_option("--n", n)->required()->check(CLI::Range(2, 1000));

  auto* c_ver = app.add_subcommand("verify", "Run the decimation verification suites");
  c_ver->add_option("--n", n)->required()->check(CLI::Range(2, 1000));
  c_ver->add_option("--max-level", max_level)->required()->check(CLI::PositiveNumber);
  c_ver->add_option("--tol", tol)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c_graph->parsed()) {
      auto g = pn::build_graph(n, level, vertex_cap);
      write_output(out, pn::graph_to_json(g).dump(2) + "\n");
    } else if (c_spec->parsed()) {
      auto pairs = pn::full_spectrum(n, level, interior_cap);
      if (format == "csv") {
        std::ostringstream os;
        os << "index,lambda,residual\n";
        char buf[64];
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g\n", i, pairs[i].lambda,
                        pairs[i].residual);
          os << buf;
        }
        write_output(out, os.str());
      } else {
        ordered_json j = ordered_json::array();
        for (const auto& p : pairs)
          j.push_back({{"lambda", p.lambda}, {"residual", p.residual}});
        write_output(out, j.dump(2) + "\n");
      }
    } else if (c_cls->parsed()) {
      auto rep = pn::classify_spectrum(n, level, interior_cap);
      if (format == "csv")
        write_output(out, pn::spectrum_csv(rep));
      else
        write_output(out, pn::spectrum_to_json(rep).dump(2) + "\n");
    } else if (c_dec->parsed()) {
      pn::FunctionOnGraph seed_fn;
      bool have_fn = seed_lambda.rfind("oracle:", 0) == 0;
      double lam = resolve_seed(seed_lambda, n, seed_level, interior_cap,
                                have_fn ? &seed_fn : nullptr);
      if (!have_fn) {
        // verify a literal seed against the oracle when feasible
        try {
          double best = 1e300;
          for (const auto& p : pn::full_spectrum(n, seed_level, interior_cap))
            best = std::min(best, std::abs(p.lambda - lam));
          if (best > 1e-6) {
            std::cerr << "seed " << lam << " is not an eigenvalue at level " << seed_level
                      << " (closest distance " << best << ")\n";
            return kExitVerifyFail;
          }
        } catch (const pn::CapExceeded&) {
          // oracle infeasible at this size; seed is trusted
        }
      }
      pn::TraceSpec spec{n, seed_level, lam, pn::parse_signs(signs), target_level};
      if (have_fn) {
        auto res = pn::decimate_with_function(spec, seed_fn, vertex_cap);
        ordered_json j = pn::trace_to_json(res.trace);
        j["residuals"] = res.residuals;
        write_output(out, j.dump(2) + "\n");
        if (!function_out.empty())
          write_output(function_out, ordered_json(res.extended).dump() + "\n");
      } else {
        if (!function_out.empty())
          throw std::runtime_error("--function-out needs an oracle:k seed");
        write_output(out, pn::trace_to_json(pn::decimate(spec)).dump(2) + "\n");
      }
    } else if (c_lim->parsed()) {
      double lam = resolve_seed(seed_lambda, n, seed_level, interior_cap, nullptr);
      pn::TraceSpec spec{n, seed_level, lam, pn::parse_signs(signs), seed_level};
      pn::LimitOptions opt;
      opt.tol = tol;
      opt.max_level = max_level;
      opt.extended_precision = extended;
      auto res = pn::fractal_eigenvalue(spec, opt);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g\n", res.limit);
      std::cout << buf;
      if (!out.empty()) {
        ordered_json j;
        j["n"] = n;
        j["seed_level"] = seed_level;
        j["seed_lambda"] = lam;
        j["signs"] = signs;
        j["limit"] = res.limit;
        j["achieved_tol"] = res.achieved_tol;
        j["levels"] = res.levels;
        j["renormalized"] = res.renormalized;
        write_output(out, j.dump(2) + "\n");
      }
    } else if (c_en->parsed()) {
      auto g = pn::build_graph(n, level, vertex_cap);
      auto u = read_values(values_path, g.vertices.size());
      double e = pn::energy(g, u);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.17g\n", e);
      std::cout << buf;
      if (renorm) {
        std::snprintf(buf, sizeof buf, "%.17g\n", pn::renormalized_energy(n, level, e));
        std::cout << buf;
      }
    } else if (c_har->parsed()) {
      auto g_prev = pn::build_graph(n, level - 1, vertex_cap);
      auto g = pn::build_graph(n, level, vertex_cap);
      auto u = read_values(values_path, g_prev.vertices.size());
      auto ext = pn::harmonic_extend(g_prev, g, u);
      write_output(out, ordered_json(ext).dump() + "\n");
      char buf[128];
      std::snprintf(buf, sizeof buf, "E_prev=%.17g E=%.17g\n", pn::energy(g_prev, u),
                    pn::energy(g, ext));
      std::cerr << buf;
    } else if (c_emb->parsed()) {
      auto g = pn::build_graph(n, level, vertex_cap);
      auto cfg = pn::regular_simplex(n);
      pn::FunctionOnGraph vals;
      if (!values_path.empty()) vals = read_values(values_path, g.vertices.size());
      std::ostringstream pts, eds;
      pn::export_point_cloud(pts, eds, g, cfg, values_path.empty() ? nullptr : &vals,
                             format == "csv" ? pn::CloudFormat::Csv
                                             : pn::CloudFormat::Columns);
      write_output(out, pts.str());
      write_output(edges_out, eds.str());
    } else if (c_dim->parsed()) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.15g\n", pn::hausdorff_dimension(n));
      std::cout << buf;
    } else if (c_ver->parsed()) {
      auto rep = pn::verify_decimation(n, max_level, tol, interior_cap);
      std::cout << (rep.pass ? "PASS" : "FAIL") << ": " << rep.forward_checks
                << " forward checks (worst residual " << rep.worst_forward << "), "
                << rep.converse_checks << " converse checks (worst residual "
                << rep.worst_converse << ")\n";
      if (rep.lambda_near_n_seen)
        std::cout << "eigenvalues near lambda = n: " << rep.lambda_near_n_seen
                  << " seen, " << rep.lambda_near_n_failed << " failed\n";
      for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
      if (!rep.pass) return kExitVerifyFail;
    }
  } catch (const pn::CapExceeded& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
