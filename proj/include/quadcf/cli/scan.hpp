#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadcf/exact/bigint.hpp"

namespace quadcf::cli {

struct ScanRecord {
  BigInt d;
  std::size_t ell = 0;
  std::size_t k_min = 0;
  BigInt delta;
  BigInt trace;
  std::string levy_closed;
  std::string levy_empirical;
  // Lower end of the enclosure of |empirical - closed|.
  std::string gap;
  double gap_value = 0;
};

// One record per non-square d in [dmin, dmax], ordered by d; computed on a thread pool.
std::vector<ScanRecord> scan(const BigInt& dmin, const BigInt& dmax, std::size_t n_emp,
                             std::size_t prec_bits = 128, std::size_t threads = 0);

inline constexpr const char* kScanCsvHeader = "d,l,k_min,delta,trace,levy_closed,levy_empirical,gap";
std::string to_csv_row(const ScanRecord& r);

}  // namespace quadcf::cli
