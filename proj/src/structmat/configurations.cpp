#include "quadcf/structmat/configurations.hpp"

#include <stdexcept>

#include "quadcf/error.hpp"
#include "quadcf/structmat/matrix.hpp"

namespace quadcf {

std::string Configuration::word() const {
  std::string w;
  for (int v : values) w += v < 0 ? '*' : static_cast<char>('0' + v);
  return w;
}

bool is_non_decreasing(const std::vector<int>& tau) {
  const std::size_t l = tau.size();
  for (std::size_t k = 0; k < l; ++k) {
    if (tau[k] < 0) continue;
    int a = tau[(k + 1) % l], b = tau[(k + 2) % l];
    if (a >= 0 && a == tau[k] - 1) return false;
    if (b >= 0 && b == tau[k] - 2) return false;
  }
  return true;
}

std::vector<Configuration> enumerate_tplus(std::size_t ell, std::optional<std::size_t> omitted,
                                           std::optional<std::size_t> t) {
  if (ell < 3) throw ComputationError("appendix machinery requires l >= 3");
  if (ell > 12) throw ComputationError("enumeration budget exceeded");
  if (omitted.has_value() != t.has_value()) throw std::invalid_argument("omitted index and target go together");
  if (omitted && (*omitted >= ell || *t >= ell)) throw std::invalid_argument("index outside Z_l");

  const std::size_t l = ell;
  std::vector<std::size_t> free;
  for (std::size_t k = 0; k < l; ++k) {
    if (!omitted || k != *omitted) free.push_back(k);
  }
  std::size_t total = 1;
  for (std::size_t i = 0; i < free.size(); ++i) total *= 3;

  std::vector<Configuration> out;
  std::vector<int> tau(l, -1);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t x = code;
    for (std::size_t k : free) {
      tau[k] = static_cast<int>(x % 3);
      x /= 3;
    }
    if (!is_non_decreasing(tau)) continue;
    if (omitted) {
      std::size_t s = *omitted, tt = *t;
      std::size_t k2 = (tt + l - 2) % l, k1 = (tt + l - 1) % l;
      if (k2 != s && tau[k2] == 2) continue;
      if (k1 != s && tau[k1] == 1) continue;
      if (tt != s && tau[tt] == 0) continue;
    }

    Configuration c;
    c.ell = l;
    c.omitted = omitted;
    c.target = t;
    c.values = tau;
    c.upsilon.resize(l);
    std::vector<bool> hit(l, false);
    for (std::size_t k = 0; k < l; ++k) {
      c.upsilon[k] = tau[k] < 0 ? *t : (k + static_cast<std::size_t>(tau[k])) % l;
      if (hit[c.upsilon[k]]) throw std::logic_error("non-decreasing configuration is not a permutation");
      hit[c.upsilon[k]] = true;
      if (tau[k] > 0) c.exponent += static_cast<std::size_t>(tau[k]);
    }
    c.signature_parity = permutation_parity(c.upsilon);
    if (omitted) {
      std::vector<int> w;
      for (std::size_t i = 1; i < l; ++i) w.push_back(tau[(*omitted + i) % l]);
      while (c.kappa < w.size() && w[c.kappa] == 0) ++c.kappa;
      while (c.mu < w.size() && w[w.size() - 1 - c.mu] == 2) ++c.mu;
    } else {
      if (c.exponent % l != 0) throw std::logic_error("full-domain exponent is not a multiple of l");
      c.eta = static_cast<int>(c.exponent / l);
    }
    out.push_back(std::move(c));
  }
  return out;
}

BigInt signed_weight(const Configuration& c, const std::vector<std::array<BigInt, 3>>& gamma) {
  BigInt w = c.signature_parity ? -1 : 1;
  for (std::size_t k = 0; k < c.ell && w != 0; ++k) {
    if (c.values[k] >= 0) w *= gamma[k][static_cast<std::size_t>(c.values[k])];
  }
  return w;
}

}  // namespace quadcf
