#include <set>
#include <sstream>
#include <string>
#include <utility>

#include "doctest.h"
#include "twobridge/contfrac.hpp"
#include "twobridge/errors.hpp"
#include "twobridge/rational.hpp"
#include "twobridge/report_io.hpp"
#include "twobridge/sweep.hpp"

using namespace twobridge;

namespace {
std::string csv_of(const SweepResult& result) {
  std::ostringstream os;
  write_csv(os, result.rows);
  return os.str();
}
}  // namespace

TEST_CASE("sweep over all knots up to q = 7") {
  SweepOptions opt;
  opt.max_q = 7;
  opt.knots_only = true;
  SweepResult result = run_sweep(opt);
  REQUIRE(result.ok());

  // q in {3, 5, 7}: phi(3)+phi(5)+phi(7) fractions in (0, 1) = 2+4+6.
  CHECK(result.rows.size() == 12);
  CHECK(result.summary.fractions == 12);
  CHECK(result.summary.knots == 12);
  CHECK(result.summary.links == 0);
  CHECK(result.summary.pass == 12);
  CHECK(result.summary.fail == 0);
  CHECK(result.summary.not_applicable == 0);
  CHECK(result.summary.all_engines_agree);

  // Rows sorted by (q, p), q odd only, every row passing.
  std::pair<std::int64_t, std::int64_t> prev{0, 0};
  for (const SweepRow& row : result.rows) {
    std::pair<std::int64_t, std::int64_t> cur{row.q, row.p};
    CHECK(prev < cur);
    prev = cur;
    CHECK(row.q % 2 == 1);
    CHECK(row.theorem1 == Theorem1::pass);
    CHECK(row.diameter == 2 * row.crossing);
    CHECK(row.is_knot);
  }
}

TEST_CASE("sweep with q = 2 only sees the hopf link") {
  SweepOptions opt;
  opt.max_q = 2;
  SweepResult result = run_sweep(opt);
  REQUIRE(result.ok());
  REQUIRE(result.rows.size() == 1);
  const SweepRow& row = result.rows.front();
  CHECK(row.p == 1);
  CHECK(row.q == 2);
  CHECK_FALSE(row.is_knot);
  CHECK(row.theorem1 == Theorem1::not_applicable);
  CHECK(result.summary.links == 1);
  CHECK(result.summary.not_applicable == 1);
}

TEST_CASE("sweep output is independent of the number of jobs") {
  SweepOptions serial;
  serial.max_q = 25;
  SweepOptions parallel = serial;
  parallel.jobs = 4;
  SweepResult a = run_sweep(serial), b = run_sweep(parallel);
  REQUIRE(a.ok());
  REQUIRE(b.ok());
  CHECK(csv_of(a) == csv_of(b));
  CHECK(a.summary.str() == b.summary.str());
}

TEST_CASE("canonical classes filter keeps one representative per class") {
  SweepOptions all;
  all.max_q = 13;
  SweepOptions classes = all;
  classes.canonical_classes = true;
  SweepResult full = run_sweep(all), reduced = run_sweep(classes);
  REQUIRE(full.ok());
  REQUIRE(reduced.ok());
  CHECK(reduced.rows.size() < full.rows.size());

  // Exactly the fractions that are their own canonical form survive.
  std::set<std::pair<std::int64_t, std::int64_t>> kept;
  for (const SweepRow& row : reduced.rows) {
    Rational r(row.p, row.q);
    CHECK(canonicalize(r) == r);
    kept.insert({row.q, row.p});
  }
  for (const SweepRow& row : full.rows) {
    Rational c = canonicalize(Rational(row.p, row.q));
    CHECK(kept.count({c.den(), c.num()}) == 1);
  }
}

TEST_CASE("sweep option validation") {
  SweepOptions bad_q;
  bad_q.max_q = 1;
  CHECK_THROWS_AS(run_sweep(bad_q), ParseError);

  SweepOptions bad_jobs;
  bad_jobs.max_q = 5;
  bad_jobs.jobs = 0;
  CHECK_THROWS_AS(run_sweep(bad_jobs), ParseError);
}

TEST_CASE("summary line mentions the headline numbers") {
  SweepOptions opt;
  opt.max_q = 7;
  opt.knots_only = true;
  std::string s = run_sweep(opt).summary.str();
  CHECK(s.find("12") != std::string::npos);          // fractions
  CHECK(s.find("pass") != std::string::npos);
}
