#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "quadcf/cli/input.hpp"
#include "quadcf/cli/report.hpp"
#include "quadcf/cli/scan.hpp"
#include "quadcf/cli/verify.hpp"
#include "quadcf/error.hpp"
#include "quadcf/structmat/cf_embedding.hpp"
#include "quadcf/structmat/cramer.hpp"

namespace {

using namespace quadcf;
using namespace quadcf::cli;
using nlohmann::json;

enum ExitCode { kOk = 0, kUsage = 1, kCompute = 2, kVerify = 3 };

int digits(const Options& opt) { return std::max(6, static_cast<int>(static_cast<double>(opt.prec_bits) * 0.301) - 2); }

json report_json(const CheckReport& rep) {
  json a = json::array();
  for (const auto& r : rep.records) {
    a.push_back({{"name", r.name}, {"range", r.range}, {"cases", r.cases}, {"pass", r.pass},
                 {"first_failure", r.first_failure}});
  }
  return a;
}

int run_expand(const std::string& text, const Options& opt, bool as_json) {
  InputSpec spec = parse_input(text);
  if (as_json) {
    std::cout << to_json(analyse(spec, opt), opt).dump(2) << "\n";
    return kOk;
  }
  ContinuedFraction cf = to_continued_fraction(spec, opt.max_steps);
  std::cout << describe_expansion(cf, canonical_indices(cf));
  return kOk;
}

int run_genfun(const std::string& text, const Options& opt, bool as_json) {
  InputSpec spec = parse_input(text);
  if (as_json) {
    std::cout << to_json(analyse(spec, opt), opt).dump(2) << "\n";
    return kOk;
  }
  ContinuedFraction cf = to_continued_fraction(spec, opt.max_steps);
  std::cout << describe_expansion(cf, canonical_indices(cf)) << describe_genfun(assemble(cf), opt.terms);
  return kOk;
}

int run_levy(const std::string& text, const Options& opt, bool as_json) {
  Analysis a = analyse(parse_input(text), opt);
  if (as_json) {
    std::cout << to_json(a, opt).dump(2) << "\n";
    return kOk;
  }
  std::cout << describe_levy(a, digits(opt));
  return kOk;
}

int run_verify(const std::string& text, const Options& opt, bool as_json) {
  InputSpec spec = parse_input(text);
  CheckReport rep = verify_input(spec, opt);
  if (as_json) {
    json j = to_json(analyse(spec, opt), opt);
    j["checks"] = report_json(rep);
    j["passed"] = rep.all_passed();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.summary() << (rep.all_passed() ? "all checks passed\n" : "verification FAILED\n");
  }
  return rep.all_passed() ? kOk : kVerify;
}

int run_matdemo(const std::optional<std::string>& text, const Options& opt, std::size_t count, bool as_json) {
  CheckReport rep;
  json j;
  if (text) {
    ContinuedFraction cf = to_continued_fraction(parse_input(*text), opt.max_steps);
    MonomialSystem sys = cf_system(cf);
    j["input"] = *text;
    j["l"] = sys.ell;
    j["det_C"] = determinant(sys.C).get_str();
    j["v"] = poly_json(v_closed(sys));
    rep = verify_cf_embedding(cf, std::max<std::size_t>(opt.terms, 60));
    if (!as_json) {
      std::cout << "l = " << sys.ell << ", det C = " << determinant(sys.C) << "\n"
                << "v(x) = " << v_closed(sys).to_string('x') << "\n";
    }
  } else {
    MonomialSystem sys = uniform_system(3, 1, -1, -1);
    IntPoly det = brute_det(assemble_N(sys));
    j["uniform_det"] = poly_json(det);
    j["uniform_v"] = poly_json(v_closed(sys));
    if (!as_json) {
      std::cout << "N = I - zS - z^2 S^2, l = 3\n"
                << "det N(z) = " << det.to_string() << "\n"
                << "v(x) = " << v_closed(sys).to_string('x') << "\n";
      auto e = cramer_solve(sys, 0);
      for (std::size_t s = 0; s < e.size(); ++s) std::cout << "E_" << s << " = " << e[s].to_string() << "\n";
    }
    rep = verify_random_systems(opt.seed, count);
  }
  if (as_json) {
    j["checks"] = report_json(rep);
    j["passed"] = rep.all_passed();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << rep.summary();
  }
  return rep.all_passed() ? kOk : kVerify;
}

int run_scan(const std::string& lo, const std::string& hi, const Options& opt, bool as_json) {
  auto records = scan(parse_bigint(lo), parse_bigint(hi), opt.empirical_n, opt.prec_bits);
  if (as_json) {
    json a = json::array();
    for (const auto& r : records) {
      a.push_back({{"d", r.d.get_str()}, {"l", r.ell}, {"k_min", r.k_min}, {"delta", r.delta.get_str()},
                   {"trace", r.trace.get_str()}, {"levy_closed", r.levy_closed},
                   {"levy_empirical", r.levy_empirical}, {"gap", r.gap}});
    }
    std::cout << a.dump(2) << "\n";
    return kOk;
  }
  std::cout << kScanCsvHeader << "\n";
  for (const auto& r : records) std::cout << to_csv_row(r) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generating functions and Levy constants of quadratic irrationals"};
  app.require_subcommand(1);
  Options opt;
  bool as_json = false, as_csv = false;
  std::string input, lo, hi;
  std::optional<std::string> demo_input;
  std::size_t count = 50;

  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", as_json, "Emit JSON");
    sub->add_option("--prec", opt.prec_bits, "Certified precision in bits")->check(CLI::Range(8, 1 << 16));
    sub->add_option("--max-steps", opt.max_steps, "Expansion step budget");
    sub->add_option("--terms", opt.terms, "Series depth");
  };
  auto* expand = app.add_subcommand("expand", "Continued fraction and canonical indices");
  auto* genfun = app.add_subcommand("genfun", "Generating functions F and G");
  auto* levy = app.add_subcommand("levy", "Levy constant by three routes");
  auto* verify = app.add_subcommand("verify", "Run the identity and oracle suite on one input");
  for (auto* sub : {expand, genfun, levy, verify}) {
    sub->add_option("input", input, "sqrt(D) | (P+sqrt(D))/Q | cf:a0;[...];(...)")->required();
    add_common(sub);
    sub->add_option("--n", opt.empirical_n, "Index for log(q_n)/n");
  }
  auto* matdemo = app.add_subcommand("matdemo", "Structured-matrix demos and random oracles");
  matdemo->add_option("input", demo_input, "Optional input with period length >= 3");
  add_common(matdemo);
  matdemo->add_option("--seed", opt.seed, "Seed for random systems");
  matdemo->add_option("--count", count, "Number of random systems");
  auto* scan_cmd = app.add_subcommand("scan", "Scan sqrt(d) over a range");
  scan_cmd->add_option("dmin", lo)->required();
  scan_cmd->add_option("dmax", hi)->required();
  scan_cmd->add_flag("--json", as_json, "Emit JSON");
  scan_cmd->add_flag("--csv", as_csv, "Emit CSV (default)");
  scan_cmd->add_option("--n", opt.empirical_n, "Index for log(q_n)/n");
  scan_cmd->add_option("--prec", opt.prec_bits, "Certified precision in bits");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*expand) return run_expand(input, opt, as_json);
    if (*genfun) return run_genfun(input, opt, as_json);
    if (*levy) return run_levy(input, opt, as_json);
    if (*verify) return run_verify(input, opt, as_json);
    if (*matdemo) return run_matdemo(demo_input, opt, count, as_json);
    if (*scan_cmd) return run_scan(lo, hi, opt, as_json && !as_csv);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kCompute;
  }
  return kUsage;
}
