#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "drcss/drcss.hpp"
#include "oracles.hpp"

namespace drcss {
namespace {

TEST(BuildCfr, ElevenRowsMatchExample) {
  const auto r = build_cfr(11);
  ASSERT_EQ(r.rows.size(), 10u);
  EXPECT_EQ(r.rows[0], (HopRow{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
  EXPECT_EQ(r.rows[1], (HopRow{0, 2, 4, 6, 8, 10, 1, 3, 5, 7, 9}));
  EXPECT_TRUE(check_cfr(r).ok);
}

TEST(BuildCfr, CompositeLengthUsesSmallestPrimeFactor) {
  const auto r = build_cfr(9);
  EXPECT_EQ(r.rows.size(), 2u);
  EXPECT_TRUE(check_cfr(r).ok);
  EXPECT_THROW(build_cfr(1), InvalidArgument);
}

TEST(BuildCfr, RowsAreOneCoincidenceHopping) {
  for (std::int64_t n : {4, 9, 11, 15, 25}) {
    const auto f = cfr_as_fhss(build_cfr(n));
    EXPECT_TRUE(f.one_coincidence()) << n;
    EXPECT_EQ(f.certificate->h_auto, 0u) << n;
  }
}

TEST(CheckCfr, IdenticalRowsFail) {
  const HopRow row{0, 1, 2, 3, 4};
  const auto c = check_cfr(std::vector<HopRow>{row, row});
  ASSERT_FALSE(c.ok);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->kind, CfrWitness::Kind::Coincidence);
}

TEST(CheckCfr, NonPermutationRowFails) {
  const auto c = check_cfr(std::vector<HopRow>{{0, 1, 1, 3}});
  ASSERT_FALSE(c.ok);
  EXPECT_EQ(c.witness->kind, CfrWitness::Kind::NotPermutation);
  EXPECT_EQ(c.witness->pos_a, 1u);
  EXPECT_EQ(c.witness->pos_b, 2u);
}

TEST(CheckCfr, SwappedEntryFailsWithWitness) {
  auto r = build_cfr(7);
  std::swap(r.rows[2][1], r.rows[2][4]);
  const auto c = check_cfr(r);
  ASSERT_FALSE(c.ok);
  ASSERT_TRUE(c.witness);
  const auto& w = *c.witness;
  ASSERT_EQ(w.kind, CfrWitness::Kind::Coincidence);
  const std::size_t n = r.rows[0].size();
  // Both rows carry b exactly `step` places to the right of a.
  for (auto row : {w.row, w.row2}) {
    bool found = false;
    for (std::size_t j = 0; j < n; ++j)
      found |= r.rows[row][j] == w.a && r.rows[row][(j + w.step) % n] == w.b;
    EXPECT_TRUE(found);
  }
  EXPECT_NE(w.row, w.row2);
}

TEST(Titlebaum, Examples) {
  const auto f5 = fhss_titlebaum(5);
  EXPECT_EQ(f5.set_size(), 4u);
  EXPECT_EQ(f5.length(), 5u);
  EXPECT_TRUE(f5.one_coincidence());
  const auto f3 = fhss_titlebaum(3);
  EXPECT_EQ(f3.rows, (std::vector<HopRow>{{0, 1, 2}, {0, 2, 1}}));
  const auto f2 = fhss_titlebaum(2);
  EXPECT_EQ(f2.rows, (std::vector<HopRow>{{0, 1}}));
  EXPECT_THROW(fhss_titlebaum(6), InvalidArgument);
}

TEST(Reed, Gf25IsOneCoincidence) {
  const auto f = fhss_reed(FiniteField(5, 2));
  EXPECT_EQ(f.set_size(), 25u);
  EXPECT_EQ(f.length(), 24u);
  EXPECT_EQ(f.alphabet, 25);
  EXPECT_TRUE(f.one_coincidence());
  EXPECT_THROW(fhss_reed(FiniteField(2, 1)), InvalidArgument);
}

TEST(Reed, MatchesBruteHamming) {
  const auto f = fhss_reed(FiniteField(2, 3));
  std::int64_t ha = 0, hc = 0;
  for (std::size_t a = 0; a < f.rows.size(); ++a)
    for (std::size_t b = 0; b < f.rows.size(); ++b)
      for (std::int64_t tau = 0; tau < static_cast<std::int64_t>(f.length()); ++tau) {
        if (a == b && tau == 0) continue;
        auto& slot = a == b ? ha : hc;
        slot = std::max(slot, oracle::brute_hamming(f.rows[a], f.rows[b], tau));
      }
  EXPECT_EQ(static_cast<std::size_t>(ha), f.certificate->h_auto);
  EXPECT_EQ(static_cast<std::size_t>(hc), f.certificate->h_cross);
}

TEST(FhssShape, Errors) {
  EXPECT_THROW(validate_fhss_shape(FHSS{5, {}, {}, ""}), InvalidArgument);
  EXPECT_THROW(validate_fhss_shape(FHSS{5, {{0, 5}}, {}, ""}), InvalidArgument);
  EXPECT_THROW(validate_fhss_shape(FHSS{5, {{0, 1}, {0}}, {}, ""}), InvalidArgument);
}

TEST(AdsCheck, Examples) {
  const auto a = ads_check(13, {1, 3, 4, 9, 10, 12});
  EXPECT_TRUE(a.ok);
  EXPECT_EQ(a.lambda, 2);
  EXPECT_EQ(a.ads_t, 6);
  const auto ds = ads_check(7, {1, 2, 4});
  EXPECT_TRUE(ds.ok);
  EXPECT_TRUE(ds.difference_set);
  EXPECT_EQ(ds.lambda, 1);
  EXPECT_EQ(ds.ads_t, 6);
  const auto bad = ads_check(8, {0, 1, 2, 3});
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.witness);
  const auto counts = oracle::difference_multiset(8, {0, 1, 2, 3});
  EXPECT_GT(std::abs(counts.at(bad.witness->first) - counts.at(bad.witness->second)), 1);
}

TEST(AdsCheck, Errors) {
  EXPECT_THROW(ads_check(13, {}), InvalidArgument);
  EXPECT_THROW(ads_check(13, {1, 1}), InvalidArgument);
  EXPECT_THROW(ads_check(13, {13}), InvalidArgument);
  EXPECT_THROW(ads_check(1, {0}), InvalidArgument);
}

TEST(AdsVerify, RejectsWrongClaim) {
  ADS a{13, {1, 3, 4, 9, 10, 12}, 2, 6, ""};
  EXPECT_TRUE(ads_verify(a).ok);
  a.lambda = 3;
  EXPECT_FALSE(ads_verify(a).ok);
}

TEST(QuadraticResidueAds, Examples) {
  const auto a13 = ads_quadratic_residue(FiniteField(13, 1));
  EXPECT_EQ(a13.elements, (std::vector<std::int64_t>{1, 3, 4, 9, 10, 12}));
  EXPECT_EQ(a13.lambda, 2);
  EXPECT_EQ(a13.ads_t, 6);
  const auto a29 = ads_quadratic_residue(FiniteField(29, 1));
  EXPECT_EQ(a29.elements.size(), 14u);
  EXPECT_EQ(a29.lambda, 6);
  EXPECT_EQ(a29.ads_t, 14);
  const auto a5 = ads_quadratic_residue(FiniteField(5, 1));
  EXPECT_EQ(a5.elements.size(), 2u);
  EXPECT_EQ(a5.lambda, 0);
  EXPECT_EQ(a5.ads_t, 2);
}

TEST(QuadraticResidueAds, CongruenceErrors) {
  EXPECT_THROW(ads_quadratic_residue(FiniteField(11, 1)), InvalidArgument);
  EXPECT_THROW(ads_quadratic_residue(FiniteField(3, 2)), InvalidArgument);
}

TEST(LceAds, TargetsCertify) {
  for (std::int64_t q : {7, 9, 11, 13, 17, 19, 23, 25, 27}) {
    const auto f = make_field_of_order(q);
    const auto a = ads_lce(f);
    const auto t = lce_target(q);
    EXPECT_EQ(a.modulus, q - 1);
    EXPECT_EQ(static_cast<std::int64_t>(a.elements.size()), t.size) << q;
    const auto brute = oracle::brute_ads(a.modulus, a.elements);
    EXPECT_TRUE(brute.ok) << q;
    EXPECT_EQ(brute.lambda, t.lambda) << q;
    EXPECT_EQ(brute.t, t.ads_t) << q;
    EXPECT_FALSE(a.convention.empty());
  }
  EXPECT_EQ(lce_target(11).lambda, 2);
  EXPECT_EQ(lce_target(11).ads_t, 7);
  EXPECT_EQ(lce_target(13).ads_t, 3);
  // q = 9: (8, 4, 1, 2). The counting identity 4*3 = t*1 + (7-t)*2 pins t = 2.
  EXPECT_EQ(lce_target(9).lambda, 1);
  EXPECT_EQ(lce_target(9).ads_t, 2);
  EXPECT_THROW(ads_lce(FiniteField(5, 1)), InvalidArgument);
}

TEST(ExpSumProfile, QuadraticResidueMaxima) {
  const auto a = ads_quadratic_residue(FiniteField(13, 1));
  const auto p = exp_sum_profile(13, a.elements);
  EXPECT_NEAR(p.magnitude[0], 6.0, 1e-12);
  EXPECT_NEAR(p.max_nonzero_shift, (std::sqrt(13.0) + 1) / 2, 1e-6);
  const auto b = ads_quadratic_residue(FiniteField(29, 1));
  EXPECT_LE(exp_sum_profile(29, b.elements).max_nonzero_shift, (std::sqrt(29.0) + 1) / 2 + 1e-9);
}

TEST(ExpSumProfile, GenericBoundHoldsForCertifiedSets) {
  for (std::int64_t q : {5, 13, 17, 29, 37}) {
    const auto a = ads_quadratic_residue(FiniteField(q, 1));
    EXPECT_LT(exp_sum_profile(a.modulus, a.elements).max_nonzero_shift,
              ads_sum_bound(a) + 1e-9);
  }
  for (std::int64_t q : {7, 9, 11, 13, 19}) {
    const auto a = ads_lce(make_field_of_order(q));
    EXPECT_LT(exp_sum_profile(a.modulus, a.elements).max_nonzero_shift,
              ads_sum_bound(a) + 1e-9);
  }
}

// Property: the counting identity M(M-1) = t lambda + (N-1-t)(lambda+1)
// holds for every random subset that certifies, and ads_check agrees with
// brute enumeration on random subsets.
TEST(AdsProperty, AgreesWithEnumeration) {
  std::mt19937_64 rng(21);
  int certified = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::int64_t n = 3 + static_cast<std::int64_t>(rng() % 20);
    std::vector<std::int64_t> d;
    for (std::int64_t x = 0; x < n; ++x)
      if (rng() % 2) d.push_back(x);
    if (d.empty()) continue;
    const auto c = ads_check(n, d);
    const auto b = oracle::brute_ads(n, d);
    ASSERT_EQ(c.ok, b.ok);
    if (!c.ok) continue;
    ++certified;
    ASSERT_EQ(c.lambda, b.lambda);
    ASSERT_EQ(c.ads_t, b.t);
    const auto m = static_cast<std::int64_t>(d.size());
    if (!c.difference_set) {
      ASSERT_EQ(m * (m - 1), c.ads_t * c.lambda + (n - 1 - c.ads_t) * (c.lambda + 1));
    } else {
      ASSERT_EQ(m * (m - 1), (n - 1) * c.lambda);
    }
  }
  EXPECT_GT(certified, 0);
}

}  // namespace
}  // namespace drcss
