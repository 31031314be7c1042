// Acceptance suite: one test case per criterion, each printing a PASS/FAIL
// line. Criterion 4 depends on the companion presentation data files and
// runs only when PICARD_PAPER_DATA points at them; it reports itself as
// conditional otherwise.

#include <doctest.h>

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "corpus.hpp"
#include "naive_oracle.hpp"
#include "picard/abelian.hpp"
#include "picard/coset_table.hpp"
#include "picard/jobs.hpp"
#include "picard/reflections.hpp"

using namespace picard;
using namespace picard::reflections;
using hermitian::isometry_inverse;
using hermitian::paper_generators;
using hermitian::paper_generators_quaternion;
using hermitian::parse_matrix;
using hermitian::QuadMatrix;
using hermitian::QuadVector;
using hermitian::QuatMatrix;
using rings::QuadElt;
using rings::QuatElt;
using rings::RingSpec;
using namespace picard::fpgroups;

namespace {

struct Criterion {
  int number;
  const char* title;
  bool pass = true;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Criterion(int n, const char* t) : number(n), title(t) {}

  long elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
  void finish(long budget_ms) {
    const long ms = elapsed_ms();
    if (ms > budget_ms) pass = false;
    CHECK(ms <= budget_ms);
    std::printf("ACCEPTANCE %d (%s): %s [%ld ms]\n", number, title, pass ? "PASS" : "FAIL", ms);
    std::fflush(stdout);
  }
};

#define ACC(cond)                 \
  do {                            \
    const bool acc_ok_ = (cond);  \
    if (!acc_ok_) crit.pass = false; \
    CHECK(acc_ok_);               \
  } while (0)

QuadMatrix random_isometry(std::mt19937& rng, RingSpec spec, int len = 5) {
  const auto gens = paper_generators(spec);
  QuadMatrix m = QuadMatrix::identity_like(QuadElt::one(spec));
  std::uniform_int_distribution<int> pick(0, 3);
  for (int i = 0; i < len; ++i) {
    const int kind = pick(rng);
    const QuadMatrix& g = gens[static_cast<size_t>(kind / 2)].matrix;
    m = m * (kind % 2 ? isometry_inverse(g) : g);
  }
  return m;
}

QuatMatrix random_quat_isometry(std::mt19937& rng, int len = 5) {
  const auto gens = paper_generators_quaternion();
  QuatMatrix m = QuatMatrix::identity_like(QuatElt::one());
  std::uniform_int_distribution<int> pick(0, 5);
  for (int i = 0; i < len; ++i) {
    const int kind = pick(rng);
    const QuatMatrix& g = gens[static_cast<size_t>(kind / 2)].matrix;
    m = m * (kind % 2 ? isometry_inverse(g) : g);
  }
  return m;
}

}  // namespace

TEST_CASE("criterion 1: reflection certificates") {
  Criterion crit(1, "reflection certificates");

  // Complex: I0 and R for each u in {i, (-1+r)/2, -1}, plus the shipped
  // d = 3 generator.
  {
    const auto cert = is_complex_reflection(paper_generators(RingSpec(7))[0].matrix);
    ACC(cert.is_reflection);
    ACC(cert.mirror->negative_type);
    ACC(cert.mirror->multiplicity == 2);
  }
  const std::pair<long, const char*> u_list[] = {
      {1, "[1,0,0; 0,r,0; 0,0,1]"},
      {3, "[1,0,0; 0,-1/2+1/2*r,0; 0,0,1]"},
      {3, "[1,0,0; 0,1/2+1/2*r,0; 0,0,1]"},
      {7, "[1,0,0; 0,-1,0; 0,0,1]"},
  };
  for (const auto& [d, literal] : u_list) {
    const auto cert = is_complex_reflection(parse_matrix(literal, RingSpec(d)));
    ACC(cert.is_reflection);
    ACC(cert.mirror->negative_type);
    ACC(cert.mirror->multiplicity == 2);
    ACC(cert.mirror->value == QuadElt::one(RingSpec(d)));
  }
  // Quaternionic: I0, Ri, Rsigma.
  for (const auto& [name, m] : paper_generators_quaternion()) {
    (void)name;
    const auto cert = is_quaternionic_reflection(m);
    ACC(cert.is_reflection);
    ACC(cert.mirror->negative_type);
    ACC(cert.mirror->multiplicity == 2);
  }
  crit.finish(1000);
}

TEST_CASE("criterion 2: order of R modulo unit scalars") {
  Criterion crit(2, "order of R modulo unit scalars");
  for (long d : {2L, 5L, 6L, 7L, 11L, 13L, 15L, 19L}) {
    const auto gens = paper_generators(RingSpec(d));
    ACC(hermitian::projective_order(gens[1].matrix) == 2);
    ACC(hermitian::projective_order(gens[0].matrix) == 2);  // I0
  }
  ACC(hermitian::projective_order(paper_generators(RingSpec(3))[1].matrix) == 6);
  ACC(hermitian::projective_order(paper_generators(RingSpec(1))[1].matrix) == 4);
  crit.finish(1000);
}

TEST_CASE("criterion 3: enumeration oracle suite") {
  Criterion crit(3, "enumeration matches the brute-force oracle");
  const auto& entries = corpus::presentations();
  ACC(entries.size() >= 20);
  for (const auto& entry : entries) {
    CAPTURE(entry.name);
    const Presentation p = parse_presentation_text(entry.text);
    const auto expected = naive::group_order(p);
    ACC(expected.has_value());
    if (!expected) continue;
    ACC(*expected <= 200);
    for (const Strategy s : {Strategy::Hlt, Strategy::Felsch}) {
      EnumerationLimits limits;
      limits.strategy = s;
      const auto res = todd_coxeter(p, limits);
      ACC(res.finite);
      ACC(res.order == *expected);
    }
  }
  crit.finish(30000);
}

TEST_CASE("criterion 4: published index reproduction (conditional on data)") {
  Criterion crit(4, "published index reproduction");
  const char* data_dir = std::getenv("PICARD_PAPER_DATA");
  if (data_dir == nullptr || std::string(data_dir).empty()) {
    std::printf(
        "ACCEPTANCE 4 (published index reproduction): CONDITIONAL-SKIP "
        "[companion presentation data files not available; set PICARD_PAPER_DATA "
        "to the directory containing Picard{1,2,3,7,11}.txt and "
        "QuaternionsTruncated1000.txt]\n");
    std::fflush(stdout);
    return;
  }
  cli::JobSpec job;
  job.command = cli::Command::VerifyPaper;
  job.data_dir = data_dir;
  job.parallel_jobs = 4;
  job.skip_slow = std::getenv("PICARD_SKIP_SLOW") != nullptr;
  const cli::Report report = cli::cmd_verify_paper(job);
  const auto j = nlohmann::json::parse(report.json);
  for (const auto& entry : j["index_computations"]) {
    CAPTURE(entry.dump());
    const std::string status = entry["status"];
    ACC(status == "match" || status == "skipped");
  }
  ACC(j["summary"]["certificates_all_true"] == true);
  ACC(j["summary"]["mismatches"] == 0);
  crit.finish(3600000);
}

TEST_CASE("criterion 5: property acceptance") {
  Criterion crit(5, "strategy invariance, abelianization, table verification, invariance of verdicts");

  // Strategy invariance, abelianization divisibility and closed-table
  // verification over the whole corpus.
  for (const auto& entry : corpus::presentations()) {
    CAPTURE(entry.name);
    const Presentation p = parse_presentation_text(entry.text);
    EnumerationLimits hlt, felsch;
    hlt.strategy = Strategy::Hlt;
    felsch.strategy = Strategy::Felsch;
    CosetEnumeration eh(p, hlt);
    const auto rh = eh.run();
    CosetEnumeration ef(p, felsch);
    const auto rf = ef.run();
    ACC(rh.finite);
    ACC(rf.finite);
    ACC(rh.order == rf.order);
    ACC(eh.verify_closed_table());
    ACC(ef.verify_closed_table());
    const auto inv = abelianization(p);
    ACC(!inv.has_free_part());
    ACC(Int(rh.order) % inv.torsion_order() == 0);
  }

  // Conjugation and unit-scalar invariance on 100+ randomized conjugates of
  // the paper generators.
  std::mt19937 rng(2024);
  int conjugates = 0;
  for (long d : {1L, 2L, 3L, 7L, 11L}) {
    const RingSpec spec(d);
    std::vector<QuadElt> units = {QuadElt::one(spec), -QuadElt::one(spec)};
    if (d == 1) units.push_back(QuadElt::root(spec));
    if (d == 3) units.push_back(QuadElt(Rational(1, 2), Rational(1, 2), spec));
    for (const auto& [name, a] : paper_generators(spec)) {
      (void)name;
      const auto base = is_complex_reflection(a);
      for (int t = 0; t < 9; ++t) {
        const QuadMatrix b = random_isometry(rng, spec);
        const QuadMatrix conj = b * a * isometry_inverse(b);
        const auto cert = is_complex_reflection(conj);
        ++conjugates;
        ACC(cert.is_reflection == base.is_reflection);
        ACC(cert.mirror->value == base.mirror->value);
        const QuadElt& mu = units[static_cast<size_t>(t) % units.size()];
        const auto scaled = is_complex_reflection(conj * mu);
        ACC(scaled.is_reflection);
        ACC(scaled.mirror->value == base.mirror->value * mu);
      }
    }
  }
  for (const auto& [name, a] : paper_generators_quaternion()) {
    (void)name;
    const auto base = is_quaternionic_reflection(a);
    for (int t = 0; t < 8; ++t) {
      const QuatMatrix b = random_quat_isometry(rng);
      const QuatMatrix conj = b * a * isometry_inverse(b);
      const auto cert = is_quaternionic_reflection(conj);
      ++conjugates;
      ACC(cert.is_reflection == base.is_reflection);
      ACC(cert.mirror->value == base.mirror->value);
      ACC(cert.mirror->multiplicity == base.mirror->multiplicity);
    }
  }
  ACC(conjugates >= 100);
  crit.finish(60000);
}

TEST_CASE("criterion 6: distance formula") {
  Criterion crit(6, "distance formula projective invariance");
  const RingSpec spec(1);
  const QuadElt one = QuadElt::one(spec);
  const QuadVector x{{one, QuadElt::zero(spec), -one}};
  const QuadVector y{{one, QuadElt::zero(spec),
                      QuadElt(Rational(-2), Rational(0), spec)}};
  ACC(hermitian::cosh2_half_dist(x, y) == Rational(9, 8));

  std::mt19937 rng(99);
  std::uniform_int_distribution<long> small(-4, 4);
  int trials = 0;
  while (trials < 100) {
    const QuadVector u{{QuadElt(Rational(1), Rational(small(rng)), spec),
                        QuadElt(Rational(small(rng)), Rational(small(rng)), spec),
                        QuadElt(Rational(small(rng)), Rational(1), spec)}};
    const QuadVector v{{QuadElt(Rational(small(rng)), Rational(1), spec),
                        QuadElt(Rational(small(rng)), Rational(small(rng)), spec),
                        QuadElt(Rational(1), Rational(small(rng)), spec)}};
    if (hermitian::point_type(u) != hermitian::PointType::Negative) continue;
    if (hermitian::point_type(v) != hermitian::PointType::Negative) continue;
    const QuadElt lambda(Rational(small(rng)), Rational(small(rng)), spec);
    if (lambda.is_zero()) continue;
    ++trials;
    const Rational base = hermitian::cosh2_half_dist(u, v);
    ACC(base >= 1);
    ACC(hermitian::cosh2_half_dist(u * lambda, v) == base);
    ACC(hermitian::cosh2_half_dist(u, v * lambda) == base);
  }
  crit.finish(1000);
}
