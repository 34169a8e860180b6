#include <gtest/gtest.h>

#include <random>

#include "nsg/nsg.hpp"
#include "oracle.hpp"

using namespace nsg;

namespace {

const NumericalSemigroup& s23() {
  static const auto s = NumericalSemigroup::from_generators({2, 3});
  return s;
}

const NumericalSemigroup& mcnugget() {
  static const auto s = NumericalSemigroup::from_generators({6, 9, 20});
  return s;
}

std::vector<Int> gens_of(const NumericalSemigroup& s) { return {s.generators().begin(), s.generators().end()}; }

}  // namespace

TEST(Gluing, Validation) {
  EXPECT_TRUE(is_valid_gluing(s23(), mcnugget(), 4, 27));
  EXPECT_FALSE(is_valid_gluing(s23(), mcnugget(), 3, 27));  // atom
  EXPECT_FALSE(is_valid_gluing(s23(), mcnugget(), 4, 43));  // gap of S2
  EXPECT_FALSE(is_valid_gluing(s23(), mcnugget(), 6, 27));  // common factor
  EXPECT_FALSE(is_valid_gluing(s23(), mcnugget(), 1, 27));
  try {
    glue({s23(), mcnugget(), 6, 27});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_gluing);
  }
}

TEST(Gluing, BlandExample) {
  const GluingSpec spec{s23(), mcnugget(), 4, 27};
  const auto s = glue(spec);
  EXPECT_EQ(s.str(), "<24,36,54,80,81>");
  EXPECT_EQ(betti_of_gluing(spec), betti_values(s));
  EXPECT_EQ(lambda_mu_length_set(spec).lengths, length_set(s, 108).lengths);
  EXPECT_EQ(length_set(s, 240).lengths, (std::vector<Int>{3, 4, 5, 6, 7, 8, 9, 10}));
  const auto quick = classify_gluing(spec);
  EXPECT_EQ(quick.verdict, Verdict::bland);
  EXPECT_EQ(quick.max_delta, 1);
  const auto exact = classify_gluing_exact(spec);
  EXPECT_EQ(*exact.ld, Rational(1));
  EXPECT_EQ(exact.max_delta, 1);
  EXPECT_EQ(exact.verdict, Verdict::bland);
}

TEST(Gluing, BettiFormulaMatchesDirect) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 25; ++trial) {
    const auto a = NumericalSemigroup::from_generators(oracle::random_semigroup(rng, 2, 2, 7));
    const auto b = NumericalSemigroup::from_generators(oracle::random_semigroup(rng, 2 + trial % 2, 2, 9));
    std::uniform_int_distribution<Int> pick(2, 30);
    const Int lambda = pick(rng), mu = pick(rng);
    if (!is_valid_gluing(a, b, lambda, mu)) continue;
    const GluingSpec spec{a, b, lambda, mu};
    const auto s = glue(spec);
    if (s.largest_generator() > 200) continue;
    ++checked;
    EXPECT_EQ(betti_of_gluing(spec), betti_values(s)) << s.str();
    const auto ctx = GluingContext::for_range(a, b, lambda, mu);
    for (Int n : betti_values(s)) EXPECT_EQ(ctx.length_set(lambda, mu, n).lengths, length_set(s, n).lengths) << s.str();
    EXPECT_EQ(classify_gluing(spec).verdict, classify_by_betti(s).verdict) << s.str();
  }
  EXPECT_GE(checked, 10);
}

TEST(Gluing, DecompositionLengthSetsAgainstOracle) {
  const auto a = NumericalSemigroup::from_generators({2, 5});
  const auto b = NumericalSemigroup::from_generators({3, 4});
  const Int lambda = 9, mu = 7;
  const GluingContext ctx(a, b, 200, 200);
  const auto glued = glue({a, b, lambda, mu});
  for (Int n = 0; n <= 300; ++n) {
    const auto lens = oracle::lengths(gens_of(glued), n);
    if (lens.empty()) continue;
    ASSERT_EQ(ctx.length_set(lambda, mu, n).lengths, lens) << n;
  }
}

TEST(Gluing, ScanSmallBox) {
  const auto scan = scan_gluings(s23(), mcnugget(), 30, 30, 2);
  for (std::size_t i = 1; i < scan.rows.size(); ++i) {
    const auto& p = scan.rows[i - 1];
    const auto& q = scan.rows[i];
    EXPECT_TRUE(std::pair(p.lambda, p.mu) < std::pair(q.lambda, q.mu));
  }
  Int bland = 0;
  for (const auto& r : scan.rows) {
    EXPECT_TRUE(is_valid_gluing(s23(), mcnugget(), r.lambda, r.mu));
    if (r.verdict == Verdict::bland) {
      ++bland;
      EXPECT_EQ(r.lambda, 4);
      EXPECT_EQ(r.mu, 27);
    }
  }
  EXPECT_EQ(bland, 1);
  EXPECT_EQ(static_cast<Int>(scan.rows.size()) + scan.skipped, 30 * 30);
  const auto serial = scan_gluings(s23(), mcnugget(), 30, 30, 1);
  ASSERT_EQ(serial.rows.size(), scan.rows.size());
  for (std::size_t i = 0; i < scan.rows.size(); ++i) EXPECT_EQ(serial.rows[i].verdict, scan.rows[i].verdict);
}

TEST(Gluing, ScanAgreesWithExactOnSample) {
  const auto scan = scan_gluings(s23(), mcnugget(), 12, 40, 2);
  CertifyOptions o;
  o.floor = WindowFloor::frobenius;
  int checked = 0;
  for (const auto& r : scan.rows) {
    if (checked++ % 7) continue;
    const auto exact = classify_gluing_exact({s23(), mcnugget(), r.lambda, r.mu}, o);
    EXPECT_EQ(exact.verdict, r.verdict) << r.lambda << "," << r.mu;
    EXPECT_EQ(exact.max_delta, r.max_delta) << r.lambda << "," << r.mu;
  }
}

TEST(Gluing, TastyWitnesses) {
  const auto ws = tasty_gluing_witnesses(s23(), mcnugget(), 3);
  ASSERT_EQ(ws.size(), 3u);
  for (const auto& w : ws) {
    EXPECT_TRUE(is_valid_gluing(w.s1, w.s2, w.lambda, w.mu));
    EXPECT_EQ(classify_gluing(w).verdict, Verdict::tasty) << w.lambda << "," << w.mu;
  }
}

TEST(SelfGluing, Regions) {
  const auto s = NumericalSemigroup::from_generators({2, 5});
  const auto reg = self_glue_region_bounds(s);
  EXPECT_EQ(reg.floor, 13);
  EXPECT_EQ(reg.slope, Rational(5, 2));
  EXPECT_EQ(reg.offset, 15);
  EXPECT_EQ(reg.classify(100, 20), Region::tasty);
  EXPECT_EQ(reg.classify(21, 20), Region::bland);
  EXPECT_EQ(reg.classify(50, 20), Region::undetermined);
  EXPECT_EQ(reg.classify(21, 5), Region::below_floor);
  const auto scan = scan_gluings(s, s, 120, 120, 2);
  for (const auto& r : scan.rows) {
    const auto region = reg.classify(r.lambda, r.mu);
    if (region == Region::tasty) { EXPECT_EQ(r.verdict, Verdict::tasty) << r.lambda << "," << r.mu; }
    if (region == Region::bland) { EXPECT_EQ(r.verdict, Verdict::bland) << r.lambda << "," << r.mu; }
  }
}

TEST(SelfGluing, ProportionCountsOrderedPairs) {
  const auto s = NumericalSemigroup::from_generators({3, 4});
  const auto p = tasty_proportion(s, 60, 2);
  EXPECT_GT(p.total, 0);
  for (const auto& r : p.scan.rows) EXPECT_GT(r.lambda, r.mu);
  EXPECT_EQ(p.ratio, Rational(p.tasty, p.total));
  try {
    tasty_proportion(NumericalSemigroup::from_generators({3, 4, 5}), 60);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::wrong_embedding_dimension);
  }
}
