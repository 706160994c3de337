#include "twobridge/report_io.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "twobridge/errors.hpp"

namespace twobridge {

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw ParseError("expected an integer, got '" + std::string(text) + "'");
  return value;
}

nlohmann::json cf_json(const ContinuedFraction& cf) {
  return nlohmann::json(cf.flat());
}

}  // namespace

Rational parse_fraction(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw ParseError("expected p/q, got '" + std::string(text) + "'");
  std::int64_t p = parse_int(text.substr(0, slash));
  std::int64_t q = parse_int(text.substr(slash + 1));
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (p <= 0 || p >= q)
    throw OutOfRange("fraction must satisfy 0 < p < q, got " +
                     std::string(text));
  if (std::gcd(p, q) != 1)
    throw ParseError("fraction must be reduced; " + std::string(text) + " = " +
                     Rational(p, q).str());
  return Rational(p, q);
}

const char* theorem1_str(Theorem1 t) {
  switch (t) {
    case Theorem1::pass: return "pass";
    case Theorem1::fail: return "fail";
    case Theorem1::not_applicable: return "n/a";
  }
  return "n/a";
}

std::string report_to_json(const SlopeReport& rep) {
  nlohmann::json j;
  j["fraction"] = rep.fraction.str();
  j["p"] = rep.fraction.num();
  j["q"] = rep.fraction.den();
  j["canonical"] = rep.canonical.str();
  j["simple_cf"] = cf_json(rep.simple.cf());
  j["n"] = rep.simple.last_index();
  j["crossing"] = rep.crossing;
  j["seifert_cf"] = cf_json(rep.seifert);
  j["seifert_unique"] = rep.seifert_unique;
  j["seifert_counts"] = {{"b_plus", rep.seifert_counts.b_plus},
                         {"b_minus", rep.seifert_counts.b_minus}};
  auto entries = nlohmann::json::array();
  for (const auto& e : rep.boundary) {
    entries.push_back({{"cf", cf_json(e.cf)},
                       {"b_plus", e.counts.b_plus},
                       {"b_minus", e.counts.b_minus},
                       {"slope", e.slope}});
  }
  j["boundary_cfs"] = entries;
  j["slopes"] = rep.slopes;
  j["num_slopes"] = rep.slopes.size();
  j["diameter"] = rep.diameter;
  j["extremes_closed_form"] = {{"min", rep.extremes.min},
                               {"max", rep.extremes.max}};
  j["fib_bound"] = rep.fib_bound;
  j["is_knot"] = rep.is_knot;
  j["theorem1"] = theorem1_str(rep.theorem1);
  j["engines_agree"] = rep.engines_agree;
  return j.dump(2) + "\n";
}

std::string report_to_text(const SlopeReport& rep) {
  std::ostringstream os;
  os << "fraction:          " << rep.fraction.str() << "\n";
  if (rep.canonical != rep.fraction)
    os << "canonical form:    " << rep.canonical.str() << "\n";
  os << "simple cf:         " << rep.simple.str() << "\n";
  os << "crossing number:   " << rep.crossing << "\n";
  os << (rep.is_knot ? "type:              knot\n"
                     : "type:              2-component link\n");
  os << "boundary expansions (reference: " << rep.seifert.str();
  if (!rep.seifert_unique) os << ", not unique";
  os << "):\n";
  for (const auto& e : rep.boundary) {
    os << "  " << e.cf.str() << "  b+=" << e.counts.b_plus
       << " b-=" << e.counts.b_minus << "  slope " << e.slope;
    if (e.cf == rep.seifert) os << "  (seifert)";
    os << "\n";
  }
  os << "slopes:            {";
  for (std::size_t i = 0; i < rep.slopes.size(); ++i) {
    if (i) os << ", ";
    os << rep.slopes[i];
  }
  os << "}\n";
  os << "diameter:          " << rep.diameter << "\n";
  os << "extremes (closed): min " << rep.extremes.min << ", max "
     << rep.extremes.max << "\n";
  os << "slope count bound: " << rep.slopes.size() << " <= " << rep.fib_bound
     << "\n";
  os << "diameter = 2c:     " << theorem1_str(rep.theorem1) << "\n";
  return os.str();
}

SweepRow row_from_report(const SlopeReport& rep) {
  SweepRow row;
  row.p = rep.fraction.num();
  row.q = rep.fraction.den();
  row.n = static_cast<std::int64_t>(rep.simple.last_index());
  row.crossing = rep.crossing;
  row.diameter = rep.diameter;
  row.num_slopes = static_cast<std::int64_t>(rep.slopes.size());
  row.fib_bound = rep.fib_bound;
  row.theorem1 = rep.theorem1;
  row.engines_agree = rep.engines_agree;
  row.is_knot = rep.is_knot;
  return row;
}

const char* const kCsvHeader =
    "p,q,n,crossing,diameter,num_slopes,fib_bound,theorem1,engines_agree,"
    "is_knot";

std::string csv_row(const SweepRow& r) {
  std::ostringstream os;
  os << r.p << ',' << r.q << ',' << r.n << ',' << r.crossing << ','
     << r.diameter << ',' << r.num_slopes << ',' << r.fib_bound << ','
     << theorem1_str(r.theorem1) << ',' << (r.engines_agree ? "true" : "false")
     << ',' << (r.is_knot ? "true" : "false");
  return os.str();
}

void write_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << kCsvHeader << '\n';
  for (const auto& r : rows) os << csv_row(r) << '\n';
}

}  // namespace twobridge
