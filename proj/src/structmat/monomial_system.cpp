#include "quadcf/structmat/monomial_system.hpp"

#include "quadcf/error.hpp"

namespace quadcf {

void MonomialSystem::validate() const {
  if (ell < 3) throw ComputationError("appendix machinery requires l >= 3");
  if (C.size() != ell || gamma.size() != ell) throw ComputationError("system dimensions disagree with l");
  for (const auto& row : C) {
    if (row.size() != ell) throw ComputationError("base matrix is not square");
  }
}

std::size_t MonomialSystem::wrap(long i) const {
  long l = static_cast<long>(ell);
  long r = i % l;
  return static_cast<std::size_t>(r < 0 ? r + l : r);
}

PolyMatrix assemble_N(const MonomialSystem& sys) {
  sys.validate();
  const std::size_t l = sys.ell;
  PolyMatrix N(l);
  for (std::size_t s = 0; s < l; ++s) {
    for (std::size_t r = 0; r < l; ++r) {
      std::vector<BigInt> c(3);
      for (std::size_t p = 0; p < 3; ++p) c[p] = sys.gamma[s][p] * sys.C[r][(s + p) % l];
      N.at(r, s) = IntPoly(std::move(c));
    }
  }
  return N;
}

MonomialSystem uniform_system(std::size_t ell, long g0, long g1, long g2) {
  MonomialSystem sys;
  sys.ell = ell;
  sys.C.assign(ell, std::vector<BigInt>(ell, 0));
  for (std::size_t i = 0; i < ell; ++i) sys.C[i][i] = 1;
  sys.gamma.assign(ell, {BigInt(g0), BigInt(g1), BigInt(g2)});
  return sys;
}

}  // namespace quadcf
