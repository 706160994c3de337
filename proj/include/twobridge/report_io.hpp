#ifndef TWOBRIDGE_REPORT_IO_HPP
#define TWOBRIDGE_REPORT_IO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/slopes.hpp"

namespace twobridge {

// Strict "p/q" with 0 < p < q and gcd(p, q) = 1. Malformed text raises
// ParseError, a well-formed fraction outside the domain raises OutOfRange.
Rational parse_fraction(std::string_view text);

const char* theorem1_str(Theorem1 t);  // "pass" / "fail" / "n/a"

// JSON rendering of a report. Keys come out alphabetically sorted, which
// makes serialize -> parse -> serialize byte-identical.
std::string report_to_json(const SlopeReport& rep);

std::string report_to_text(const SlopeReport& rep);

struct SweepRow {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t n = 0;  // last index of the simple expansion
  std::int64_t crossing = 0;
  std::int64_t diameter = 0;
  std::int64_t num_slopes = 0;
  std::int64_t fib_bound = 0;
  Theorem1 theorem1 = Theorem1::not_applicable;
  bool engines_agree = true;
  bool is_knot = true;
};

SweepRow row_from_report(const SlopeReport& rep);

extern const char* const kCsvHeader;  // fixed column set, see report_io.cpp

std::string csv_row(const SweepRow& row);
void write_csv(std::ostream& os, const std::vector<SweepRow>& rows);

}  // namespace twobridge

#endif  // TWOBRIDGE_REPORT_IO_HPP
