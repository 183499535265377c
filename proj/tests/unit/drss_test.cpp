#include <gtest/gtest.h>

#include <cmath>

#include "drcss/drcss.hpp"

namespace drcss {
namespace {

// Every in-window magnitude lies in {0, sqrt(N), N}; N only at auto (0,0).
void expect_gauss_structure(const DRSS& d) {
  const auto set = d.as_set();
  const auto ev = evaluate(set);
  const std::size_t n = d.length();
  const double r = std::sqrt(static_cast<double>(n));
  for (std::size_t u = 0; u < set.set_size(); ++u)
    for (std::size_t v = 0; v < set.set_size(); ++v) {
      const auto g = flock_pcaf_grid(ev[u], ev[v]);
      for (std::size_t t = 0; t < n; ++t)
        for (std::size_t f = 0; f < n; ++f) {
          if (!d.window.contains(t, f, n)) continue;
          const double m = std::abs(g.cell(t, f));
          const bool origin = u == v && t == 0 && f == 0;
          if (origin) {
            ASSERT_NEAR(m, double(n), 1e-6);
          } else {
            ASSERT_TRUE(m <= 1e-6 || std::abs(m - r) <= 1e-6) << u << v << t << f << m;
          }
        }
    }
}

TEST(CubicDrss, Length29) {
  const auto d2 = cubic_drss(29, 2);
  EXPECT_NEAR(d2.alpha_max, std::sqrt(29.0), 1e-6);
  EXPECT_EQ(d2.window.zx, 29u);
  EXPECT_EQ(d2.window.zy, 14u);
  const auto d3 = cubic_drss(29, 3);
  EXPECT_EQ(d3.window.zy, 9u);
  EXPECT_NEAR(d3.alpha_max, std::sqrt(29.0), 1e-6);
}

TEST(CubicDrss, GaussSumStructure) {
  expect_gauss_structure(cubic_drss(5, 2));
  expect_gauss_structure(cubic_drss(13, 2));
  expect_gauss_structure(cubic_drss(29, 2));
}

TEST(CubicDrss, ZeroDelayCrossVanishes) {
  const auto d = cubic_drss(13, 3);
  const auto ev = evaluate(d.as_set());
  const auto zy = static_cast<std::int64_t>(d.window.zy);
  for (std::size_t u = 0; u < 3; ++u)
    for (std::size_t v = 0; v < 3; ++v) {
      if (u == v) continue;
      for (std::int64_t f = -(zy - 1); f < zy; ++f)
        EXPECT_LE(std::abs(pcaf(ev[u].values, ev[v].values, 0, f)), 1e-9);
    }
}

TEST(CubicDrss, SingleSequenceRequestIsRedirected) {
  const auto d = cubic_drss(7, 1);
  EXPECT_EQ(d.set_size(), 2u);
  ASSERT_FALSE(d.notes.empty());
  EXPECT_NE(d.notes.front().find("K = 2"), std::string::npos);
}

TEST(CubicDrss, Errors) {
  EXPECT_THROW(cubic_drss(9, 2), InvalidArgument);
  EXPECT_THROW(cubic_drss(2, 2), InvalidArgument);
  EXPECT_THROW(cubic_drss(7, 8), InvalidArgument);
  EXPECT_THROW(cubic_drss(7, 0), InvalidArgument);
}

TEST(BaseDrs, MeasuredSidelobeIsReported) {
  for (std::int64_t q : {11, 13}) {
    const auto d = base_drs_expmap(FiniteField(q, 1));
    EXPECT_EQ(d.length(), static_cast<std::size_t>(q - 1));
    EXPECT_EQ(d.set_size(), 1u);
    const auto g = pcaf_grid(d.sequences[0], d.sequences[0]);
    EXPECT_NEAR(std::abs(g.at(0, 0)), double(q - 1), 1e-9);
    // The sidelobe is measured, never assumed; it can exceed sqrt(q - 1).
    EXPECT_GE(d.alpha_max, std::sqrt(double(q - 1)) - 1e-9);
    EXPECT_EQ(d.notes.empty(), d.alpha_max <= std::sqrt(double(q - 1)) + 1e-6);
  }
  EXPECT_THROW(base_drs_expmap(FiniteField(3, 1)), InvalidArgument);
}

TEST(BaseDrs, ExtensionFieldUsesTrace) {
  const auto d = base_drs_expmap(FiniteField(3, 2));
  EXPECT_EQ(d.length(), 8u);
  for (const auto& p : d.sequences[0]) EXPECT_EQ(3 % p.den(), 0);
}

TEST(LoadDrss, RoundTripKeepsCertificate) {
  const auto d = cubic_drss(29, 2);
  const auto again = load_drss(set_from_json(to_json(d.as_set())), d.window);
  EXPECT_EQ(again.alpha_max, d.alpha_max);
  EXPECT_EQ(again.report.auto_witness.tau, d.report.auto_witness.tau);
  EXPECT_EQ(again.report.auto_witness.f, d.report.auto_witness.f);
}

TEST(LoadDrss, AllOnesIsFlagged) {
  const DRCSSet set({DRCS({root_sequence({0, 0, 0, 0, 0}, 1)})}, {});
  const auto d = load_drss(set);
  EXPECT_NEAR(d.alpha_max, 5.0, 1e-12);
  EXPECT_EQ(d.report.auto_witness.f, 0);
  EXPECT_FALSE(d.notes.empty());
}

TEST(LoadDrss, Errors) {
  const DRCSSet two_rows({DRCS({root_sequence({0, 1}, 2), root_sequence({1, 0}, 2)})}, {});
  EXPECT_THROW(load_drss(two_rows), InvalidArgument);
  EXPECT_THROW(certify_drss({root_sequence({0, 1}, 2), root_sequence({0, 1, 1}, 2)},
                            LazWindow{2, 2}),
               InvalidArgument);
}

}  // namespace
}  // namespace drcss
