#include "quadcf/cli/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "quadcf/genfun/genfun.hpp"
#include "quadcf/levy/levy.hpp"

namespace quadcf::cli {

static ScanRecord scan_one(const BigInt& d, std::size_t n_emp, std::size_t prec_bits) {
  ContinuedFraction cf = expand_surd(normalize_surd(0, 1, d));
  CanonicalIndices idx = canonical_indices(cf);
  ConvergentTable t = convergents(cf, idx.k_work + idx.ell_min);
  ScanRecord r;
  r.d = d;
  r.ell = idx.ell_min;
  r.k_min = idx.k_min;
  r.delta = delta(t, idx.k_work, idx.ell_min);
  r.trace = transfer_matrices(cf, idx.k_min).M1.trace();
  PrecisionReal closed = levy_closed(cf, prec_bits);
  PrecisionReal emp = levy_empirical(cf, n_emp, prec_bits);
  Interval gap = abs_difference(emp, closed);
  r.levy_closed = closed.to_string(18);
  r.levy_empirical = emp.to_string(18);
  r.gap = gap.lo().to_string(18);
  r.gap_value = gap.lo().to_double();
  return r;
}

std::vector<ScanRecord> scan(const BigInt& dmin, const BigInt& dmax, std::size_t n_emp, std::size_t prec_bits,
                             std::size_t threads) {
  std::vector<BigInt> ds;
  for (BigInt d = std::max(dmin, BigInt(1)); d <= dmax; ++d) {
    if (!is_perfect_square(d)) ds.push_back(d);
  }
  std::vector<ScanRecord> out(ds.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(ds.size(), 1));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_lock;
  auto worker = [&] {
    for (std::size_t i = next++; i < ds.size(); i = next++) {
      try {
        out[i] = scan_one(ds[i], n_emp, prec_bits);
      } catch (...) {
        std::lock_guard<std::mutex> g(failure_lock);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
  std::sort(out.begin(), out.end(), [](const ScanRecord& a, const ScanRecord& b) { return a.d < b.d; });
  return out;
}

std::string to_csv_row(const ScanRecord& r) {
  return r.d.get_str() + "," + std::to_string(r.ell) + "," + std::to_string(r.k_min) + "," + r.delta.get_str() +
         "," + r.trace.get_str() + "," + r.levy_closed + "," + r.levy_empirical + "," + r.gap;
}

}  // namespace quadcf::cli
