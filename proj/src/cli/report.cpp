#include "quadcf/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace quadcf::cli {

using nlohmann::json;

static int digits_for(std::size_t prec_bits) {
  return std::max(6, static_cast<int>(static_cast<double>(prec_bits) * 0.30103) - 2);
}

Analysis analyse(const InputSpec& spec, const Options& opt) {
  ContinuedFraction cf = to_continued_fraction(spec, opt.max_steps);
  CanonicalIndices idx = canonical_indices(cf);
  GenFunPair gf = assemble(cf);
  return Analysis{render(spec),
                  cf,
                  idx,
                  gf,
                  levy_closed(cf, opt.prec_bits),
                  levy_from_denominator(gf, opt.prec_bits),
                  levy_empirical(cf, opt.empirical_n, opt.prec_bits),
                  opt.empirical_n};
}

static json strings(const std::vector<BigInt>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

json poly_json(const IntPoly& p) { return strings(p.coeffs()); }

json rational_function_json(const RationalFunctionZ& f) {
  return {{"num", poly_json(f.num())},
          {"den", poly_json(f.den())},
          {"num_text", f.num().to_string()},
          {"den_text", f.den().to_string()}};
}

static json real_json(const PrecisionReal& r) {
  return {{"value", r.to_string(digits_for(r.prec_bits()))}, {"error_bound", r.error_bound()}};
}

json to_json(const Analysis& a, const Options& opt) {
  json j;
  j["input"] = a.input;
  j["cf"] = {{"a0", a.cf.a0.get_str()}, {"pre", strings(a.cf.pre)}, {"period", strings(a.cf.period)}};
  j["indices"] = {{"l", a.indices.ell_min}, {"k_min", a.indices.k_min}, {"k_work", a.indices.k_work}};
  j["delta"] = a.gf.delta.get_str();
  j["v"] = strings({a.gf.v.coeff(0), a.gf.v.coeff(1), a.gf.v.coeff(2)});
  j["F"] = rational_function_json(a.gf.F);
  j["G"] = rational_function_json(a.gf.G);
  j["levy"] = {{"closed", real_json(a.closed)},
               {"from_v", real_json(a.from_v)},
               {"empirical", real_json(a.empirical)},
               {"empirical_n", a.empirical_n},
               {"prec_bits", opt.prec_bits}};
  return j;
}

std::string describe_expansion(const ContinuedFraction& cf, const CanonicalIndices& idx) {
  std::ostringstream out;
  out << "expansion: " << cf.to_string() << "\n"
      << "l = " << idx.ell_min << ", k_min = " << idx.k_min << ", k_work = " << idx.k_work << "\n";
  return out.str();
}

std::string describe_genfun(const GenFunPair& gf, std::size_t terms) {
  std::ostringstream out;
  out << "k = " << gf.k << ", l = " << gf.ell << ", delta = " << gf.delta << "\n"
      << "v(x) = " << gf.v.to_string('x') << "\n"
      << "F(z) = " << gf.F.to_string() << "\n"
      << "G(z) = " << gf.G.to_string() << "\n";
  auto row = [&](const char* name, const RationalFunctionZ& f) {
    out << name << ":";
    for (const auto& c : integer_series_coeffs(f, terms)) out << " " << c;
    out << "\n";
  };
  row("p", gf.F);
  row("q", gf.G);
  return out.str();
}

std::string describe_levy(const Analysis& a, int digits) {
  std::ostringstream out;
  out << "closed form      " << a.closed.to_string(digits) << "  (+- " << a.closed.error_bound() << ")\n"
      << "from v(x)        " << a.from_v.to_string(digits) << "  (+- " << a.from_v.error_bound() << ")\n"
      << "log(q_n)/n, n=" << a.empirical_n << "  " << a.empirical.to_string(digits) << "\n";
  return out.str();
}

}  // namespace quadcf::cli
