#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "ringspread/circle_state.hpp"
#include "ringspread/measures.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

namespace ringspread {
namespace {

using testing::kPiSq;

bool contains_angle(const std::vector<double>& xs, double target, double tol) {
  return std::any_of(xs.begin(), xs.end(), [&](double x) {
    const double d = std::abs(reduce_angle(x - target));
    return std::min(d, kTwoPi - d) < tol;
  });
}

TEST(Tilde, BasicValues) {
  EXPECT_NEAR(measure_tilde(make_eigenstate(0)), 1.0, 1e-15);
  EXPECT_NEAR(measure_tilde(make_trig(1, TrigPhase::Sin)), 1.0, 1e-15);
  EXPECT_NEAR(measure_tilde(make_trig(2, TrigPhase::Sin)), 1.0, 1e-15);
  const double cs = measure_tilde(make_coherent(0.0, 0.0));
  EXPECT_GT(cs, 0.0);
  EXPECT_LT(cs, 1.0);
}

TEST(Kr, PsiS) {
  const KrMeasures kr = measure_kr(make_trig(1, TrigPhase::Sin));
  EXPECT_NEAR(kr.phi, std::log(2.0) / 2, 1e-12);
}

TEST(Kr, InfiniteWhenSecondMomentVanishes) {
  EXPECT_EQ(measure_kr(make_trig(2, TrigPhase::Sin)).phi, std::numeric_limits<double>::infinity());
  EXPECT_EQ(measure_kr(make_eigenstate(3)).phi, std::numeric_limits<double>::infinity());
}

TEST(Kr, CoherentStatesSaturateSum) {
  for (auto [l, theta] : {std::pair{0.0, 0.0}, {0.5, 0.0}, {0.0, 1.0}, {-1.2, 2.0}}) {
    const KrMeasures kr = measure_kr(make_coherent(l, theta));
    EXPECT_NEAR(kr.phi + kr.lz, 1.0, 1e-10) << l << "," << theta;
  }
  const KrMeasures kr = measure_kr(make_coherent(0.0, 0.0));
  EXPECT_NEAR(kr.phi, 0.5, 1e-10);
}

TEST(Kr, PsiS4) { EXPECT_NEAR(measure_kr(make_density_poly(0.2)).phi, 0.1428153407, 1e-9); }

TEST(MeasureA, Values) {
  EXPECT_NEAR(measure_a(make_eigenstate(0)), kPiSq / 3, 1e-12);
  EXPECT_NEAR(measure_a(make_trig(1, TrigPhase::Sin)), kPiSq / 3 - 0.125, 1e-12);
}

TEST(MeasureA, MatchesBruteAverage) {
  for (const auto& s : testing::random_corpus(3, 8)) {
    double sum = 0.0;
    const int n = 4096;
    for (int i = 0; i < n; ++i) sum += testing::oracle_window(s, -kPi + kTwoPi * i / n, 400).variance;
    EXPECT_NEAR(measure_a(s), sum / n, 1e-6);
  }
}

TEST(MeasureB, Uniform) {
  const BMeasure b = measure_b(make_eigenstate(0));
  EXPECT_TRUE(b.degenerate);
  EXPECT_TRUE(b.argmins.empty());
  EXPECT_NEAR(b.value, kPiSq / 3, 1e-12);
}

TEST(MeasureB, PsiS) {
  const BMeasure b = measure_b(make_trig(1, TrigPhase::Sin));
  EXPECT_NEAR(b.value, kPiSq / 3 - 0.5, 1e-12);
  ASSERT_EQ(b.argmins.size(), 2u);
  EXPECT_TRUE(contains_angle(b.argmins, 0.0, 1e-8));
  EXPECT_TRUE(contains_angle(b.argmins, kPi, 1e-8));
}

TEST(MeasureB, PsiS2AndPsiS4AndCoherent) {
  EXPECT_NEAR(measure_b(make_trig(2, TrigPhase::Sin)).value, kPiSq / 3 - 0.125, 1e-12);
  EXPECT_NEAR(measure_b(make_density_poly(0.2)).value, 2.61, 0.01);
  EXPECT_NEAR(measure_b(make_coherent(0.0, 0.0)).value, 0.50, 0.01);
}

TEST(PacketCenters, UniformIsAllPoints) {
  const PacketCenters c = packet_centers(make_eigenstate(0));
  EXPECT_TRUE(c.all_points);
  EXPECT_FALSE(c.centroid_angle.has_value());
}

TEST(PacketCenters, PsiS) {
  const PacketCenters c = packet_centers(make_trig(1, TrigPhase::Sin));
  EXPECT_FALSE(c.all_points);
  ASSERT_EQ(c.centers.size(), 4u);
  for (double want : {-kPi, -kPi / 2, 0.0, kPi / 2}) EXPECT_TRUE(contains_angle(c.centers, want, 1e-9));
}

TEST(PacketCenters, CoherentHasCenterAndAntipode) {
  const PacketCenters c = packet_centers(make_coherent(0.0, 0.0));
  ASSERT_EQ(c.centers.size(), 2u);
  EXPECT_TRUE(contains_angle(c.centers, 0.0, 1e-9));
  EXPECT_TRUE(contains_angle(c.centers, kPi, 1e-9));
  const CMeasure m = measure_c(make_coherent(0.0, 0.0));
  ASSERT_EQ(m.selected_centers.size(), 1u);
  EXPECT_NEAR(m.selected_centers[0], 0.0, 1e-9);
}

TEST(PacketCenters, CentroidIsAFixedPointForSymmetricDensities) {
  for (const auto& s : {make_coherent(0.3, 1.1), make_coherent(-2.0, -2.5),
                        CircleState::normalized(-1, {complex{0.3, 0.0}, complex{1.0, 0.0}, complex{0.5, 0.0}}),
                        rotate(make_coherent(0.0, 0.0), 2.0)}) {
    const PacketCenters c = packet_centers(s);
    ASSERT_TRUE(c.centroid_angle.has_value()) << s.label();
    EXPECT_TRUE(c.centroid_consistent) << s.label();
    EXPECT_TRUE(contains_angle(c.centers, *c.centroid_angle, 1e-6)) << s.label();
  }
}

TEST(PacketCenters, AsymmetricDensityCentroidIsNotAFixedPoint) {
  // Only the first density harmonic vanishes from M(phi_c) - phi_c; here the
  // second one leaves M(phi_c) - phi_c = 0.0808 (independent quadrature).
  const CircleState s =
      CircleState::normalized(0, {complex{1.0, 0.0}, complex{0.8, 0.0}, complex{0.15, 0.2}}, "asym");
  const PacketCenters c = packet_centers(s);
  ASSERT_TRUE(c.centroid_angle.has_value());
  EXPECT_NEAR(*c.centroid_angle, -0.17219081452293908, 1e-9);
  EXPECT_NEAR(mean_phi(s, *c.centroid_angle) - *c.centroid_angle, 0.08083094208462999, 1e-9);
  EXPECT_FALSE(c.centroid_consistent);
}

TEST(MeasureC, SelectsLowestVarianceCenters) {
  const CMeasure c = measure_c(make_trig(1, TrigPhase::Sin));
  EXPECT_NEAR(c.value, kPiSq / 3 - 0.5, 1e-12);
  ASSERT_EQ(c.selected_centers.size(), 2u);
  EXPECT_TRUE(contains_angle(c.selected_centers, 0.0, 1e-9));
  EXPECT_TRUE(contains_angle(c.selected_centers, kPi, 1e-9));
  EXPECT_EQ(c.all_centers.size(), 4u);
}

TEST(MeasureC, UniformAllPoints) {
  const CMeasure c = measure_c(make_eigenstate(0));
  EXPECT_TRUE(c.all_points);
  EXPECT_NEAR(c.value, kPiSq / 3, 1e-12);
}

TEST(MeasureC, AgreesWithBOnCatalog) {
  for (const auto& s : testing::catalog_states()) {
    EXPECT_NEAR(measure_c(s).value, measure_b(s).value, 1e-8) << s.label();
  }
}

TEST(Properties, AIsAtLeastB) {
  for (const auto& s : testing::random_corpus(15, 21)) EXPECT_GE(measure_a(s), measure_b(s).value - 1e-12);
}

TEST(Properties, RotationInvariance) {
  for (const auto& s : testing::random_corpus(6, 22)) {
    const CircleState r = rotate(s, 1.234);
    EXPECT_NEAR(measure_tilde(r), measure_tilde(s), 1e-12);
    EXPECT_NEAR(measure_kr(r).phi, measure_kr(s).phi, 1e-9);
    EXPECT_NEAR(measure_a(r), measure_a(s), 1e-9);
    EXPECT_NEAR(measure_b(r).value, measure_b(s).value, 1e-9);
    EXPECT_NEAR(measure_c(r).value, measure_c(s).value, 1e-9);
  }
}

TEST(Properties, PiPeriodicStatesHaveUnitTilde) {
  for (const auto& s : {make_cat(0.0, 0.0), make_cat(0.7, 1.0), make_trig(3, TrigPhase::Cos)}) {
    EXPECT_NEAR(measure_tilde(s), 1.0, 1e-10) << s.label();
  }
}

TEST(Relations, HoldOnCorpus) {
  const auto corpus = testing::random_corpus(30);
  const auto angles = testing::random_angles(12);
  for (const auto& s : corpus) {
    for (const auto& r : relation_report(s, ScanGrid{}, angles)) {
      EXPECT_GE(r.slack, -kRelationTolerance) << s.label() << " " << to_string(r.id);
      EXPECT_TRUE(r.satisfied) << s.label() << " " << to_string(r.id);
    }
  }
}

TEST(Relations, EveryIdentifierReported) {
  const auto rows = relation_report(make_coherent(0.0, 0.0), ScanGrid{}, {0.0, 1.0});
  for (RelationId id : {RelationId::NietoSin, RelationId::NietoCos, RelationId::TildeProduct,
                        RelationId::SchrodingerWindow, RelationId::SchrodingerA, RelationId::SchrodingerB,
                        RelationId::KrSum, RelationId::SumA, RelationId::SumB, RelationId::SumC}) {
    EXPECT_TRUE(std::any_of(rows.begin(), rows.end(), [&](const RelationReport& r) { return r.id == id; }))
        << to_string(id);
  }
  const auto windows = std::count_if(rows.begin(), rows.end(),
                                     [](const RelationReport& r) { return r.id == RelationId::SchrodingerWindow; });
  EXPECT_EQ(windows, 2);
}

TEST(Relations, EigenstateSaturatesTildeProduct) {
  for (const auto& r : relation_report(make_eigenstate(2), ScanGrid{}, {})) {
    if (r.id == RelationId::TildeProduct) EXPECT_NEAR(r.slack, 0.0, 1e-12);
  }
}

TEST(Report, CoherentSumIsCloseToOne) {
  const MeasureReport r = measure_report(make_coherent(0.0, 0.0));
  EXPECT_NEAR(r.lz_variance + r.c.value, 1.0, 1e-3);
  EXPECT_NEAR(r.kr_phi + r.kr_lz, 1.0, 1e-10);
}

}  // namespace
}  // namespace ringspread
