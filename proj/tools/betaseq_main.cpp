// betaseq CLI: generate beta-adic van der Corput / Halton points, classify
// coefficient vectors, compute exact star discrepancy, verify measure
// transport, iterate the interval transformation, run QMC test integrals,
// screen product compatibility, and probe odometer spectra.
//
// Exit codes: 0 success, 1 validation error, 2 internal numeric failure.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "betaseq/betaseq.hpp"

namespace {

std::vector<int> parse_coeff_list(const std::string& text) {
  std::vector<int> a;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      std::size_t used = 0;
      a.push_back(std::stoi(cell, &used));
      if (used != cell.size()) throw std::invalid_argument(cell);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient '" + cell + "' in --coeffs " + text);
    }
  }
  if (a.empty()) throw std::invalid_argument("--coeffs needs at least one integer");
  return a;
}

std::vector<std::vector<int>> parse_coeff_lists(const std::vector<std::string>& texts) {
  std::vector<std::vector<int>> out;
  for (const auto& t : texts) out.push_back(parse_coeff_list(t));
  return out;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::invalid_argument("cannot open output file " + path);
  return file;
}

struct GenOptions {
  std::vector<std::string> coeffs;
  std::string config_path;
  std::int64_t count = -1;
  std::int64_t skip = -1;
  std::string format;
  int precision = -1;
  bool header = false;
  bool include_zero = false;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  betaseq::RunConfig cfg;
  if (!opt.config_path.empty()) {
    std::ifstream in(opt.config_path);
    if (!in) throw std::invalid_argument("cannot open config file " + opt.config_path);
    std::stringstream buf;
    buf << in.rdbuf();
    cfg = betaseq::parse_config(buf.str());
  } else if (!opt.coeffs.empty()) {
    cfg.systems = parse_coeff_lists(opt.coeffs);
  } else {
    throw std::invalid_argument("gen needs --coeffs or --config");
  }
  if (opt.count >= 0) cfg.count = opt.count;
  if (opt.skip >= 0) cfg.skip = opt.skip;
  if (!opt.format.empty()) cfg.format = opt.format;
  if (opt.precision >= 0) cfg.precision = opt.precision;
  if (opt.include_zero) cfg.include_zero = true;
  if (cfg.count < 1) throw std::invalid_argument("count must be >= 1");
  if (cfg.precision < 6 || cfg.precision > 17)
    throw std::invalid_argument("precision must lie in [6, 17]");
  if (cfg.format != "csv" && cfg.format != "jsonl")
    throw std::invalid_argument("format must be csv or jsonl");

  // re-validate classification for the --coeffs path
  for (const auto& a : cfg.systems) {
    if (!betaseq::classify_coefficients(a).unit_interval())
      throw std::invalid_argument("system " + betaseq::coeff_string(a) +
                                  " is NotUnitIntervalOrNotDense and cannot generate points");
  }

  betaseq::HaltonConfig halton = betaseq::instantiate(cfg);
  const std::int64_t first = (cfg.include_zero ? 0 : 1) + cfg.skip;
  betaseq::PointSet ps = halton.dimension() == 1
                             ? betaseq::generate_vdc(halton.systems[0], first, cfg.count)
                             : betaseq::generate_halton(halton, first, cfg.count);

  std::ofstream file;
  std::ostream& os = open_output(file, opt.out);
  if (cfg.format == "csv")
    betaseq::write_points_csv(os, ps, cfg.precision, opt.header);
  else
    betaseq::write_points_jsonl(os, ps, cfg.precision);
  return 0;
}

int run_classify(const std::string& coeffs) {
  auto a = parse_coeff_list(coeffs);
  std::cout << betaseq::to_string(betaseq::classify_coefficients(a)) << "\n";
  return 0;
}

struct DiscrepancyOptions {
  std::string input;
  std::vector<std::string> coeffs;
  std::int64_t count = 1000;
  std::int64_t skip = 0;
  std::string method;
  std::string format = "text";
  std::int64_t work_budget = 200'000'000;
};

int run_discrepancy(const DiscrepancyOptions& opt) {
  betaseq::PointSet ps;
  if (!opt.input.empty()) {
    std::ifstream in(opt.input);
    if (!in) throw std::invalid_argument("cannot open point file " + opt.input);
    ps = betaseq::read_points_csv(in);
  } else if (!opt.coeffs.empty()) {
    betaseq::RunConfig cfg;
    cfg.systems = parse_coeff_lists(opt.coeffs);
    cfg.count = opt.count;
    cfg.skip = opt.skip;
    for (const auto& a : cfg.systems)
      if (!betaseq::classify_coefficients(a).unit_interval())
        throw std::invalid_argument("system " + betaseq::coeff_string(a) +
                                    " is NotUnitIntervalOrNotDense and cannot generate points");
    betaseq::HaltonConfig halton = betaseq::instantiate(cfg);
    ps = halton.dimension() == 1
             ? betaseq::generate_vdc(halton.systems[0], 1 + cfg.skip, cfg.count)
             : betaseq::generate_halton(halton, 1 + cfg.skip, cfg.count);
  } else {
    throw std::invalid_argument("discrepancy needs --input or --coeffs");
  }

  betaseq::DiscrepancyMethod method =
      opt.method.empty()
          ? (ps.dimension == 1 ? betaseq::DiscrepancyMethod::Exact1D
                               : betaseq::DiscrepancyMethod::ExactGrid)
          : betaseq::discrepancy_method_from_string(opt.method);
  betaseq::DiscrepancyReport rep = betaseq::star_discrepancy(ps, method, opt.work_budget);

  if (opt.format == "jsonl") {
    nlohmann::json j{{"n", rep.n},
                     {"s", rep.dimension},
                     {"d_star", rep.d_star},
                     {"method", betaseq::to_string(rep.method)},
                     {"exact", rep.exact}};
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "n=" << rep.n << " s=" << rep.dimension
              << " d_star=" << betaseq::format_double(rep.d_star, 17)
              << " method=" << betaseq::to_string(rep.method)
              << " exact=" << (rep.exact ? "yes" : "no") << "\n";
  }
  return 0;
}

int run_verify_measure(const std::string& coeffs, int depth, double threshold) {
  auto a = parse_coeff_list(coeffs);
  betaseq::NumerationSystem sys =
      betaseq::NumerationSystem::build(a, depth + static_cast<int>(a.size()) + 2);
  betaseq::TransportReport rep = betaseq::verify_transport(sys, depth);
  std::cout << "system=" << sys.name() << " depth=" << depth << " cylinders=" << rep.cylinders
            << "\n";
  std::cout << "max_deviation=" << betaseq::format_double(rep.max_deviation, 17)
            << " worst_cylinder=" << rep.worst_prefix.to_string() << "\n";
  std::cout << "max_sum_deviation=" << betaseq::format_double(rep.max_sum_deviation, 17) << "\n";
  std::cout << "max_deviation " << (rep.max_deviation < threshold ? "<" : ">=") << " "
            << betaseq::format_double(threshold, 6) << "\n";
  return 0;
}

struct OrbitOptions {
  std::string coeffs;
  double start = 0.0;
  std::int64_t start_n = 0;
  std::int64_t count = 10;
  int depth = 64;
  int precision = 15;
  bool expansions = false;
  std::string out;
};

int run_orbit(const OrbitOptions& opt) {
  auto a = parse_coeff_list(opt.coeffs);
  std::ofstream file;
  std::ostream& os = open_output(file, opt.out);
  if (opt.expansions) {
    betaseq::NumerationSystem sys =
        betaseq::NumerationSystem::build_to_cover(a, opt.start_n + opt.count + 1);
    betaseq::DigitString start = betaseq::greedy_expansion(opt.start_n, sys);
    for (const betaseq::DigitString& ds : betaseq::orbit(start, sys, opt.count))
      os << ds.to_string() << "\n";
    return 0;
  }
  if (!(opt.start >= 0.0 && opt.start < 1.0))
    throw std::invalid_argument("--start must lie in [0,1)");
  betaseq::NumerationSystem sys = betaseq::NumerationSystem::build(
      a, opt.depth + static_cast<int>(a.size()) + 2);
  betaseq::PointSet ps = betaseq::generate_orbit(sys, opt.start, opt.count, opt.depth);
  betaseq::write_points_csv(os, ps, opt.precision);
  return 0;
}

struct IntegrateOptions {
  std::vector<std::string> coeffs;
  std::string f_id = "prod";
  double alpha = 1.0;
  std::int64_t count = 1024;
  std::int64_t skip = 0;
  std::string format = "jsonl";
  std::int64_t work_budget = 200'000'000;
};

int run_integrate(const IntegrateOptions& opt) {
  betaseq::RunConfig cfg;
  cfg.systems = parse_coeff_lists(opt.coeffs);
  cfg.count = opt.count;
  cfg.skip = opt.skip;
  for (const auto& a : cfg.systems)
    if (!betaseq::classify_coefficients(a).unit_interval())
      throw std::invalid_argument("system " + betaseq::coeff_string(a) +
                                  " is NotUnitIntervalOrNotDense and cannot generate points");
  betaseq::HaltonConfig halton = betaseq::instantiate(cfg);
  betaseq::PointSet ps = halton.dimension() == 1
                             ? betaseq::generate_vdc(halton.systems[0], 1 + cfg.skip, cfg.count)
                             : betaseq::generate_halton(halton, 1 + cfg.skip, cfg.count);
  betaseq::TestFunction f = betaseq::make_test_function(opt.f_id, opt.alpha);
  betaseq::IntegrationResult r = betaseq::qmc_integrate(f, ps, opt.work_budget);

  if (opt.format == "jsonl") {
    nlohmann::json j{{"f", r.f_id},       {"n", r.n},
                     {"s", r.dimension},  {"estimate", r.estimate},
                     {"true_value", r.true_value}, {"error", r.error}};
    if (r.kh_bound) j["kh_bound"] = *r.kh_bound;
    if (r.d_star) j["d_star"] = *r.d_star;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "f=" << r.f_id << " n=" << r.n << " s=" << r.dimension
              << " estimate=" << betaseq::format_double(r.estimate, 17)
              << " true=" << betaseq::format_double(r.true_value, 17)
              << " error=" << betaseq::format_double(r.error, 17);
    if (r.kh_bound) std::cout << " kh_bound=" << betaseq::format_double(*r.kh_bound, 17);
    std::cout << "\n";
  }
  return 0;
}

int run_check_compat(const std::vector<std::string>& coeffs, int k_max, double tol) {
  auto lists = parse_coeff_lists(coeffs);
  if (lists.size() < 2) throw std::invalid_argument("check-compat needs at least two --coeffs");
  std::vector<betaseq::NumerationSystem> systems;
  for (const auto& a : lists) systems.push_back(betaseq::NumerationSystem::build(
      a, std::max<int>(static_cast<int>(a.size()) + 2, k_max + 2)));
  std::vector<const betaseq::NumerationSystem*> ptrs;
  for (const auto& s : systems) ptrs.push_back(&s);
  betaseq::CompatReport rep = betaseq::compatibility_check(ptrs, k_max, tol);
  for (const betaseq::PairCompat& p : rep.pairs) {
    std::cout << "pair " << systems[p.i].name() << "x" << systems[p.j].name()
              << " status=" << betaseq::to_string(p.status)
              << " coprime=" << (p.coprime ? "yes" : "no")
              << " min_rational_gap=" << betaseq::format_double(p.min_rational_gap, 6)
              << " at k=" << p.hit_k << " l=" << p.hit_l << "\n";
  }
  std::cout << "overall=" << betaseq::to_string(rep.overall) << "\n";
  return rep.overall == betaseq::CompatStatus::Fail ? 1 : 0;
}

struct SpectrumOptions {
  std::string coeffs;
  std::int64_t c = 1;
  int m = 0;
  int l = 1;
  int n_max = 30;
  std::string format = "text";
};

int run_spectrum(const SpectrumOptions& opt) {
  auto a = parse_coeff_list(opt.coeffs);
  betaseq::NumerationSystem sys = betaseq::NumerationSystem::build(
      a, std::max(opt.n_max + 1, static_cast<int>(a.size()) + 1));
  betaseq::SpectrumProbe probe =
      betaseq::eigenvalue_limit_check(sys, opt.c, opt.m, opt.l, opt.n_max);
  for (std::size_t n = 0; n < probe.values.size(); ++n) {
    if (opt.format == "jsonl") {
      nlohmann::json j{{"n", n}, {"c", probe.c}, {"m", probe.m}, {"l", probe.l},
                       {"dist", probe.values[n]}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "n=" << n << " dist=" << betaseq::format_double(probe.values[n], 17) << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"beta-adic van der Corput / Halton sequence toolkit"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* cmd_gen = app.add_subcommand("gen", "generate sequence points");
  cmd_gen->add_option("--coeffs", gen.coeffs, "coefficient vector a0,a1,... (repeat per dimension)");
  cmd_gen->add_option("--config", gen.config_path, "JSON run configuration file");
  cmd_gen->add_option("--count", gen.count, "number of points");
  cmd_gen->add_option("--skip", gen.skip, "indices to skip before the first point");
  cmd_gen->add_option("--format", gen.format, "csv or jsonl");
  cmd_gen->add_option("--precision", gen.precision, "significant digits, 6..17");
  cmd_gen->add_flag("--header", gen.header, "prepend 'dim=s generator=...' header line");
  cmd_gen->add_flag("--include-zero", gen.include_zero, "start the sequence at n=0 instead of 1");
  cmd_gen->add_option("--out", gen.out, "output file (default stdout)");

  std::string classify_coeffs;
  CLI::App* cmd_classify = app.add_subcommand("classify", "classify a coefficient vector");
  cmd_classify->add_option("--coeffs", classify_coeffs, "coefficient vector a0,a1,...")->required();

  DiscrepancyOptions disc;
  CLI::App* cmd_disc = app.add_subcommand("discrepancy", "exact star discrepancy");
  cmd_disc->add_option("--input", disc.input, "CSV point file");
  cmd_disc->add_option("--coeffs", disc.coeffs, "generate points instead of reading a file");
  cmd_disc->add_option("--count", disc.count, "number of points when generating");
  cmd_disc->add_option("--skip", disc.skip, "indices to skip when generating");
  cmd_disc->add_option("--method", disc.method, "exact_1d, exact_grid or brute_force");
  cmd_disc->add_option("--format", disc.format, "text or jsonl");
  cmd_disc->add_option("--work-budget", disc.work_budget, "cost cap for exact_grid/brute_force");

  std::string vm_coeffs;
  int vm_depth = 8;
  double vm_threshold = 1e-10;
  CLI::App* cmd_vm = app.add_subcommand("verify-measure",
                                        "compare mu against Lebesgue image over all cylinders");
  cmd_vm->add_option("--coeffs", vm_coeffs, "coefficient vector")->required();
  cmd_vm->add_option("--depth", vm_depth, "maximum cylinder depth");
  cmd_vm->add_option("--threshold", vm_threshold, "deviation threshold for the verdict line");

  OrbitOptions orb;
  CLI::App* cmd_orbit = app.add_subcommand("orbit", "iterate the interval transformation");
  cmd_orbit->add_option("--coeffs", orb.coeffs, "coefficient vector")->required();
  cmd_orbit->add_option("--start", orb.start, "starting point in [0,1)");
  cmd_orbit->add_option("--start-n", orb.start_n, "starting integer for --expansions");
  cmd_orbit->add_option("--count", orb.count, "orbit length");
  cmd_orbit->add_option("--depth", orb.depth, "expansion truncation depth");
  cmd_orbit->add_option("--precision", orb.precision, "significant digits, 6..17");
  cmd_orbit->add_flag("--expansions", orb.expansions, "print odometer digit strings instead");
  cmd_orbit->add_option("--out", orb.out, "output file (default stdout)");

  IntegrateOptions integ;
  CLI::App* cmd_int = app.add_subcommand("integrate", "QMC test integral with KH bound");
  cmd_int->add_option("--coeffs", integ.coeffs, "coefficient vector (repeat per dimension)")
      ->required();
  cmd_int->add_option("--f", integ.f_id, "test function: prod, mean, tilt, one");
  cmd_int->add_option("--alpha", integ.alpha, "tilt parameter in (0,1]");
  cmd_int->add_option("--count", integ.count, "number of points");
  cmd_int->add_option("--skip", integ.skip, "indices to skip");
  cmd_int->add_option("--format", integ.format, "text or jsonl");
  cmd_int->add_option("--work-budget", integ.work_budget, "cost cap for the exact discrepancy");

  std::vector<std::string> compat_coeffs;
  int compat_kmax = 5;
  double compat_tol = 1e-9;
  CLI::App* cmd_compat = app.add_subcommand("check-compat", "product compatibility screen");
  cmd_compat->add_option("--coeffs", compat_coeffs, "coefficient vector (repeat, >= 2)")
      ->required();
  cmd_compat->add_option("--kmax", compat_kmax, "power range for the ratio scan");
  cmd_compat->add_option("--tol", compat_tol, "rational proximity tolerance");

  SpectrumOptions spec;
  CLI::App* cmd_spec = app.add_subcommand("spectrum", "eigenvalue limit probe");
  cmd_spec->add_option("--coeffs", spec.coeffs, "coefficient vector (constant coefficients)")
      ->required();
  cmd_spec->add_option("--c", spec.c, "numerator c of c/(b^m beta^l)");
  cmd_spec->add_option("--m", spec.m, "power of b");
  cmd_spec->add_option("--l", spec.l, "power of beta");
  cmd_spec->add_option("--nmax", spec.n_max, "largest base-sequence index");
  cmd_spec->add_option("--format", spec.format, "text or jsonl");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (cmd_gen->parsed()) return run_gen(gen);
    if (cmd_classify->parsed()) return run_classify(classify_coeffs);
    if (cmd_disc->parsed()) return run_discrepancy(disc);
    if (cmd_vm->parsed()) return run_verify_measure(vm_coeffs, vm_depth, vm_threshold);
    if (cmd_orbit->parsed()) return run_orbit(orb);
    if (cmd_int->parsed()) return run_integrate(integ);
    if (cmd_compat->parsed()) return run_check_compat(compat_coeffs, compat_kmax, compat_tol);
    if (cmd_spec->parsed()) return run_spectrum(spec);
  } catch (const betaseq::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
