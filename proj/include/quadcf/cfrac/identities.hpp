#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quadcf/cfrac/ab_table.hpp"
#include "quadcf/cfrac/convergents.hpp"

namespace quadcf {

struct CheckRecord {
  std::string name;
  std::string range;
  std::size_t cases = 0;
  bool pass = true;
  std::string first_failure;
};

struct CheckReport {
  std::vector<CheckRecord> records;

  bool all_passed() const;
  void append(const CheckReport& other);
  std::string summary() const;
};

// Accumulates one named check.
class CheckBuilder {
 public:
  CheckBuilder(std::string name, std::string range) { rec_.name = std::move(name); rec_.range = std::move(range); }
  template <class Describe>
  void expect(bool ok, Describe&& describe) {
    ++rec_.cases;
    if (!ok && rec_.pass) {
      rec_.pass = false;
      rec_.first_failure = describe();
    }
  }
  CheckRecord done() { return std::move(rec_); }

 private:
  CheckRecord rec_;
};

// Convergent, continuant and trace identities over every index the table supports.
CheckReport identity_report(const ConvergentTable& t);
// Adds the periodic-table checks (consistency with the plain continuants and the trace of M1).
CheckReport identity_report(const ConvergentTable& t, const ABTable& ab);

}  // namespace quadcf
