// bikraw command-line tool: evaluate polynomial families, export operators,
// run verification suites, print spectra, and quantify continuum limits.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bikraw/continuum.hpp"
#include "bikraw/io.hpp"
#include "bikraw/operators.hpp"
#include "bikraw/polynomials.hpp"
#include "bikraw/verification.hpp"
#include "bikraw/version.hpp"

namespace {

using namespace bikraw;

struct CommonOpts {
  std::string params_flag;
  std::string params_file;
  std::string mode;
  unsigned long seed = 0;
  std::string out;

  ParamFile resolve_params() const {
    if (!params_flag.empty() && !params_file.empty())
      throw CLI::ValidationError("--params and --params-file are mutually exclusive");
    if (!params_flag.empty()) return {parse_params_flag(params_flag), std::nullopt};
    if (!params_file.empty()) return load_param_file(params_file);
    throw CLI::ValidationError("exactly one of --params or --params-file is required");
  }

  std::string resolve_mode() const {
    if (!mode.empty()) return mode;
    if (const char* env = std::getenv("BIKRAW_EXACT_MODE")) return std::string(env) == "0" ? "float" : "exact";
    return "exact";
  }
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--params", c.params_flag, "p1,p2,p3,p4 (rationals as num/den)");
  cmd->add_option("--params-file", c.params_file, "JSON parameter file");
  cmd->add_option("--mode", c.mode, "exact|float (default: exact, or BIKRAW_EXACT_MODE)")
      ->check(CLI::IsMember({"exact", "float"}));
  cmd->add_option("--seed", c.seed, "seed recorded in outputs (randomized workflows)");
  cmd->add_option("--out", c.out, "output file (default: stdout)");
}

void emit(const CommonOpts& c, const std::string& text, const std::string& summary) {
  if (c.out.empty()) {
    std::cout << text;
    std::cerr << summary << "\n";
  } else {
    std::ofstream f(c.out);
    if (!f) throw std::runtime_error("cannot open output file: " + c.out);
    f << text;
    std::cout << summary << " -> " << c.out << "\n";
  }
}

std::pair<Rat, Rat> parse_pair(const std::string& csv, const char* flag) {
  auto comma = csv.find(',');
  if (comma == std::string::npos || csv.find(',', comma + 1) != std::string::npos)
    throw CLI::ValidationError(std::string(flag) + " expects two comma-separated rationals");
  return {parse_rat(csv.substr(0, comma)), parse_rat(csv.substr(comma + 1))};
}

RunMeta make_meta(const CommonOpts& c, const RahmanParams& p, const std::string& mode, const std::string& extra) {
  return RunMeta{p.describe(), mode, c.seed, extra};
}

// ---------------------------------------------------------------- eval ----

int run_eval(const CommonOpts& c, const std::string& family, int N, int m, int n, const std::string& format) {
  auto pf = c.resolve_params();
  std::string mode = c.resolve_mode();
  if (family == "rahman-hat" && mode == "exact")
    throw CLI::ValidationError("--family rahman-hat requires --mode float (the normalization carries square roots)");
  DerivedParams d = derive_params(pf.params);
  RunMeta meta = make_meta(c, pf.params, mode,
                           "eval family=" + family + " N=" + std::to_string(N) + " m=" + std::to_string(m) +
                               " n=" + std::to_string(n));

  auto render = [&](auto grid) -> std::string {
    std::ostringstream os;
    if (format == "csv")
      write_grid_csv(os, grid, meta);
    else
      os << grid_to_json(grid, meta);
    return os.str();
  };

  std::string text;
  if (mode == "exact") {
    GridFunction<ExactField> g((TriLattice(N)));
    if (family == "rahman")
      g = rahman_grid<ExactField>(PolyIndex{m, n, N}, d);
    else if (family == "tratnik")
      g = tratnik_grid<ExactField>(m, n, d, N);
    else if (family == "weight")
      g = weight_grid<ExactField>(N, d);
    else
      throw CLI::ValidationError("unknown family \"" + family + "\"");
    text = render(g);
  } else {
    GridFunction<FloatField> g((TriLattice(N)));
    if (family == "rahman")
      g = rahman_grid<FloatField>(PolyIndex{m, n, N}, d);
    else if (family == "rahman-hat")
      g = rahman_normalized(PolyIndex{m, n, N}, d).first;
    else if (family == "tratnik")
      g = tratnik_grid<FloatField>(m, n, d, N);
    else if (family == "weight")
      g = weight_grid<FloatField>(N, d);
    else
      throw CLI::ValidationError("unknown family \"" + family + "\"");
    text = render(g);
  }
  emit(c, text, "eval " + family + " on T_" + std::to_string(N) + ": " +
                    std::to_string(TriLattice(N).size()) + " rows");
  return 0;
}

// ------------------------------------------------------------ operator ----

int run_operator(const CommonOpts& c, const std::string& kind_name, int N, const std::string& omega_sq_flag) {
  auto pf = c.resolve_params();
  std::string mode = c.resolve_mode();
  DerivedParams d = derive_params(pf.params);
  OperatorKind kind = operator_kind_from_string(kind_name);
  std::optional<std::pair<Rat, Rat>> omega_sq;
  if (!omega_sq_flag.empty())
    omega_sq = parse_pair(omega_sq_flag, "--omega-sq");
  else if (pf.frequencies)
    omega_sq = pf.frequencies->omega_sq();
  RunMeta meta = make_meta(c, pf.params, mode, "operator kind=" + kind_name + " N=" + std::to_string(N));
  std::ostringstream os;
  std::size_t nnz = 0;
  std::string shape;
  if (mode == "exact") {
    auto op = build_operator<ExactField>(kind, N, d, omega_sq);
    write_operator_coo_csv(os, op, meta);
    nnz = op.nnz();
    shape = op.codomain().describe() + " x " + op.domain().describe();
  } else {
    auto op = build_operator<FloatField>(kind, N, d, omega_sq);
    write_operator_coo_csv(os, op, meta);
    nnz = op.nnz();
    shape = op.codomain().describe() + " x " + op.domain().describe();
  }
  emit(c, os.str(), "operator " + kind_name + ": " + shape + ", nnz=" + std::to_string(nnz));
  return 0;
}

// -------------------------------------------------------------- verify ----

int run_verify(const CommonOpts& c, const std::string& suite, int N, double tolerance, const std::string& report_path,
               int random_tuples) {
  auto pf = c.resolve_params();
  std::string mode = c.resolve_mode();
  SuiteOptions opts;
  opts.tolerance = tolerance;
  auto report = run_suite(suite, N, pf.params, mode, opts);
  RunMeta meta = make_meta(c, pf.params, mode, "verify suite=" + suite + " N=" + std::to_string(N));

  bool ok = report.all_pass();
  std::size_t total_cases = report.cases.size();
  int tuples_failed = 0;
  if (random_tuples > 0) {
    for (const auto& rp : random_rahman_tuples(random_tuples, c.seed)) {
      auto r = run_suite(suite, N, rp, mode, opts);
      total_cases += r.cases.size();
      if (!r.all_pass()) {
        ++tuples_failed;
        std::cerr << "random tuple (" << rp.describe() << ") failed suite " << suite << "\n";
      }
    }
    ok = ok && tuples_failed == 0;
  }

  if (!report_path.empty()) {
    std::ofstream f(report_path);
    if (!f) throw std::runtime_error("cannot open report file: " + report_path);
    f << report_to_json(report, meta);
  }
  std::cout << "suite " << suite << " N=" << N << " mode=" << mode << ": " << (ok ? "PASS" : "FAIL") << " ("
            << total_cases << " cases";
  if (random_tuples > 0) std::cout << ", " << random_tuples << " random tuples";
  std::cout << ")\n";
  if (!ok)
    for (const auto& cs : report.cases)
      if (!cs.pass) std::cout << "  FAIL " << cs.id << " residual=" << cs.residual << "\n";
  return ok ? 0 : 1;
}

// ------------------------------------------------------------ spectrum ----

int run_spectrum(const CommonOpts& c, bool iso, const std::string& omega_flag, const std::string& omega_sq_flag,
                 int N) {
  auto pf = c.resolve_params();
  std::string mode = c.resolve_mode();
  DerivedParams d = derive_params(pf.params);
  std::optional<std::pair<Rat, Rat>> omega_sq;
  if (!omega_sq_flag.empty())
    omega_sq = parse_pair(omega_sq_flag, "--omega-sq");
  else if (!omega_flag.empty()) {
    auto [w1, w2] = parse_pair(omega_flag, "--omega");
    FrequencyPair f{w1, w2};
    f.validate();
    omega_sq = f.omega_sq();
  } else if (pf.frequencies)
    omega_sq = pf.frequencies->omega_sq();
  if (!iso && !omega_sq)
    throw CLI::ValidationError("anisotropic spectrum needs --omega or --omega-sq (or omegas in the params file)");
  if (iso && omega_sq) throw CLI::ValidationError("--iso conflicts with --omega/--omega-sq");

  RunMeta meta = make_meta(c, pf.params, mode, std::string("spectrum ") + (iso ? "iso" : "aniso") +
                                                   " N=" + std::to_string(N));

  // level -> (labels, worst residual string)
  std::map<Rat, std::pair<std::vector<std::pair<int, int>>, std::string>> table;
  auto level_of = [&](int m, int n) -> Rat {
    return iso ? Rat(m + n) : omega_sq->first * m + omega_sq->second * n;
  };

  auto fill = [&](auto field_tag) {
    using Fd = decltype(field_tag);
    auto ham = build_hamiltonian<Fd>(iso, N, d, omega_sq);
    RahmanEvaluator<Rat> ev(d, N);
    TriLattice lat(N);
    for (int m = 0; m <= N; ++m)
      for (int n = 0; m + n <= N; ++n) {
        GridFunction<Fd> g(lat);
        if constexpr (Fd::exact) {
          auto vals = ev.grid(m, n);
          for (std::size_t i = 0; i < vals.size(); ++i) g.values[i] = typename Fd::Scalar(std::move(vals[i]));
        } else {
          g = convert_grid<Fd>(rahman_grid_recurrence<ExactField>(PolyIndex{m, n, N}, d));
        }
        Rat lev = level_of(m, n);
        auto residual_grid = ham.apply(g) - g.scaled(Fd::scalar(lev));
        auto r = residual_grid.max_abs();
        auto& slot = table[lev];
        slot.first.emplace_back(m, n);
        std::string rs;
        if constexpr (Fd::exact)
          rs = rat_str(r);
        else
          rs = format_double(r);
        if (slot.second.empty() || r > typename Fd::Real(0)) {
          if (slot.second.empty())
            slot.second = rs;
          else if constexpr (Fd::exact) {
            if (parse_rat(slot.second) < r) slot.second = rs;
          } else {
            if (std::stod(slot.second) < r) slot.second = rs;
          }
        }
      }
  };
  if (mode == "exact") {
    if (N > 12) throw CLI::ValidationError("exact spectrum bounded at N <= 12; use --mode float");
    fill(ExactField{});
  } else {
    fill(FloatField{});
  }

  std::ostringstream os;
  write_meta_comment(os, meta);
  os << "level,multiplicity,labels,max_residual\n";
  for (const auto& [lev, entry] : table) {
    os << rat_str(lev) << "," << entry.first.size() << ",";
    for (std::size_t i = 0; i < entry.first.size(); ++i) {
      if (i) os << ";";
      os << "(" << entry.first[i].first << " " << entry.first[i].second << ")";
    }
    os << "," << entry.second << "\n";
  }
  emit(c, os.str(), "spectrum: " + std::to_string(table.size()) + " levels on T_" + std::to_string(N));
  return 0;
}

// --------------------------------------------------------------- limit ----

int run_limit(const CommonOpts& c, const std::string& check, int m, int n, const std::string& n_list_flag,
              int samples_k, const std::string& which, const std::string& testfn, const std::string& side,
              const std::string& dir) {
  auto pf = c.resolve_params();
  DerivedParams d = derive_params(pf.params);
  std::vector<int> n_list;
  {
    std::stringstream ss(n_list_flag);
    std::string item;
    while (std::getline(ss, item, ',')) n_list.push_back(std::stoi(item));
    if (n_list.size() < 1) throw CLI::ValidationError("--N-list needs at least one N");
  }
  auto samples = admissible_samples(d, n_list, samples_k);
  RunMeta meta = make_meta(c, pf.params, "float",
                           "limit check=" + check + " N-list=" + n_list_flag + " samples=" +
                               std::to_string(samples.size()) + "/" + std::to_string(samples_k * samples_k));

  ConvergenceRecord rec;
  for (int N : n_list) {
    double err = 0.0;
    if (check == "weight")
      err = weight_gaussian_error(N, d, samples);
    else if (check == "hermite")
      err = hermite_limit_error(m, n, N, d, samples);
    else if (check == "operator")
      err = operator_limit_residual(limit_operator_from_string(which), N, d, Poly2::named(testfn), samples);
    else if (check == "ladder")
      err = scaled_ladder_limit_error(side == "l" ? 'L' : 'R', dir == "-" ? -1 : +1, m, n, N, d);
    else
      throw CLI::ValidationError("unknown --check \"" + check + "\" (use weight|hermite|operator|ladder)");
    rec.add(N, err);
  }

  std::ostringstream os;
  write_meta_comment(os, meta);
  os << "N,max_error,est_order\n";
  for (std::size_t i = 0; i < rec.n_values.size(); ++i) {
    os << rec.n_values[i] << "," << format_double(rec.errors[i]) << ",";
    if (i >= 2) {
      ConvergenceRecord head;
      bool fittable = true;
      for (std::size_t k = 0; k <= i; ++k) {
        if (rec.errors[k] <= 0.0) fittable = false;
        head.add(rec.n_values[k], rec.errors[k]);
      }
      if (fittable) os << format_double(estimate_order(head));
    }
    os << "\n";
  }
  emit(c, os.str(), "limit " + check + ": " + std::to_string(rec.n_values.size()) + " N values, " +
                        std::to_string(samples.size()) + " samples");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite 2-D oscillator on triangular lattices: bivariate Krawtchouk polynomials, "
               "difference operators, exact identity verification, continuum limits"};
  app.set_version_flag("--version", bikraw::kVersion);
  app.require_subcommand(1);

  CommonOpts c_eval, c_op, c_verify, c_spec, c_limit;

  auto* eval = app.add_subcommand("eval", "evaluate a polynomial family or the weight on T_N");
  add_common(eval, c_eval);
  std::string family = "rahman", format = "csv";
  int eval_n = 2, eval_m = 0, eval_nn = 0;
  eval->add_option("--family", family, "rahman|rahman-hat|tratnik|weight")
      ->check(CLI::IsMember({"rahman", "rahman-hat", "tratnik", "weight"}));
  eval->add_option("--N", eval_n, "lattice size")->required();
  eval->add_option("--m", eval_m, "first degree");
  eval->add_option("--n", eval_nn, "second degree");
  eval->add_option("--format", format, "csv|json")->check(CLI::IsMember({"csv", "json"}));

  auto* op = app.add_subcommand("operator", "assemble a named operator and export it as row,col,re,im");
  add_common(op, c_op);
  std::string kind = "lambda1", op_omega_sq;
  int op_n = 2;
  op->add_option("--kind", kind,
                 "lambda1|lambda2|hiso|haniso|jx|jy|jz|casimir|l1|l2|frakk|fiveterm|rec1|rec2|"
                 "aminusr|aminusl|aplusr|aplusl")
      ->required();
  op->add_option("--N", op_n, "lattice size")->required();
  op->add_option("--omega-sq", op_omega_sq, "squared frequencies w1^2,w2^2 for haniso (rationals)");
  op->add_option("--export", c_op.out, "output file (alias of --out)");

  auto* verify = app.add_subcommand("verify", "run an identity suite; exit 0 iff all cases pass");
  add_common(verify, c_verify);
  std::string suite = "all", report_path;
  int verify_n = 3, random_tuples = 0;
  double tolerance = 1e-9;
  verify->add_option("--suite", suite, "heisenberg|factorization|su2|casimir|eigen-rahman|eigen-tratnik|"
                                       "ladder-actions|orthogonality|rotation|fiveterm|rec-consistency|all");
  verify->add_option("--N", verify_n, "lattice size")->required();
  verify->add_option("--tolerance", tolerance, "float-mode relative tolerance (default 1e-9)");
  verify->add_option("--report", report_path, "write the JSON report here");
  verify->add_option("--random-tuples", random_tuples, "also run the suite on this many seeded random tuples");

  auto* spectrum = app.add_subcommand("spectrum", "analytic spectrum with degeneracies and residuals");
  add_common(spectrum, c_spec);
  bool iso = false;
  std::string spec_omega, spec_omega_sq;
  int spec_n = 2;
  spectrum->add_flag("--iso", iso, "isotropic Hamiltonian (levels m+n)");
  spectrum->add_option("--omega", spec_omega, "frequencies w1,w2 (rationals; anisotropic)");
  spectrum->add_option("--omega-sq", spec_omega_sq, "squared frequencies w1^2,w2^2 (rationals)");
  spectrum->add_option("--N", spec_n, "lattice size")->required();

  auto* limit = app.add_subcommand("limit", "continuum-limit error scans over an N ladder");
  add_common(limit, c_limit);
  std::string check = "weight", n_list = "64,256,1024", which = "lambda1", testfn = "s2", side = "r", dir = "+";
  int lim_m = 1, lim_n = 0, samples_k = 5;
  limit->add_option("--check", check, "weight|hermite|operator|ladder")->required();
  limit->add_option("--m", lim_m, "degree m (hermite/ladder)");
  limit->add_option("--n", lim_n, "degree n (hermite/ladder)");
  limit->add_option("--N-list", n_list, "comma-separated N ladder (default 64,256,1024)");
  limit->add_option("--samples", samples_k, "k for the k x k sample grid over |s|,|t| <= 1");
  limit->add_option("--which", which, "operator for --check operator: lambda1|lambda2|l2");
  limit->add_option("--testfn", testfn, "test function: 1|s|t|s2|st|t2|s3|s2t|st2|t3");
  limit->add_option("--side", side, "ladder side r|l");
  limit->add_option("--dir", dir, "ladder direction +|-");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(c_eval, family, eval_n, eval_m, eval_nn, format);
    if (app.got_subcommand(op)) return run_operator(c_op, kind, op_n, op_omega_sq);
    if (app.got_subcommand(verify))
      return run_verify(c_verify, suite, verify_n, tolerance, report_path, random_tuples);
    if (app.got_subcommand(spectrum)) return run_spectrum(c_spec, iso, spec_omega, spec_omega_sq, spec_n);
    if (app.got_subcommand(limit))
      return run_limit(c_limit, check, lim_m, lim_n, n_list, samples_k, which, testfn, side, dir);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
