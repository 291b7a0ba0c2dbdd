#include "brauer_terminal/discrepancy.hpp"
#include "support/corpus.hpp"

#include <gtest/gtest.h>

#include <stdexcept>
#include <vector>

namespace bterm {
namespace {

using corpus::make_model;

BrauerModel remark_model() {
  SymbolMatrix m(3, 3);
  m.add_symbol(0, 1, 1);
  return BrauerModel::affine(3, {"x1", "x2", "x3"}, m, {{"x3", 3}});
}

const Chart& root_chart(const BrauerModel& model) { return model.charts().front().chart; }

TEST(Discrepancy, BoundaryOfUnramifiedClassIsEmpty) {
  EXPECT_TRUE(boundary_divisor(make_model(2, 3, {})).coefficients.empty());
}

TEST(Discrepancy, BoundaryOfSingleSymbol) {
  const auto model = make_model(2, 3, {{0, 1, 1}});
  const auto delta = boundary_divisor(model);
  const auto& c = root_chart(model);
  EXPECT_EQ(delta.coefficients.size(), 2u);
  EXPECT_EQ(delta.coefficient(c.divisor_at(0)), Rational(1, 2));
  EXPECT_EQ(delta.coefficient(c.divisor_at(1)), Rational(1, 2));
  EXPECT_EQ(delta.coefficient(c.divisor_at(2)), Rational(0));
}

TEST(Discrepancy, BoundaryOfThreeTorsionExample) {
  const auto model = remark_model();
  const auto delta = boundary_divisor(model);
  for (const auto& id : root_chart(model).coords()) EXPECT_EQ(delta.coefficient(id), Rational(2, 3));
}

TEST(Discrepancy, ClassicalDiscrepancy) {
  const auto trivial = make_model(2, 3, {});
  EXPECT_EQ(classical_discrepancy(trivial, root_chart(trivial).stratum({0, 1})), Rational(1));
  const auto bad = make_model(2, 3, {{0, 2, 1}, {1, 2, 1}});
  EXPECT_EQ(classical_discrepancy(bad, root_chart(bad).stratum({0, 1, 2})), Rational(1, 2));
  EXPECT_EQ(classical_discrepancy(bad, root_chart(bad).stratum({0, 1})), Rational(0));
  EXPECT_THROW(classical_discrepancy(bad, root_chart(bad).stratum({0})), std::invalid_argument);
}

TEST(Discrepancy, BrauerDiscrepancyAwayFromBoundary) {
  const auto model = make_model(2, 3, {});
  const auto r = brauer_discrepancy(model, root_chart(model).stratum({1, 2}));
  EXPECT_EQ(r.e, DegreeSet::exactly(1));
  EXPECT_EQ(r.b_value(), Rational(1));
  EXPECT_EQ(r.weighted_value(), Rational(1));
  EXPECT_EQ(r.level(), 1u);
}

TEST(Discrepancy, BrauerDiscrepancyOnRamifiedIntersection) {
  const auto model = make_model(2, 3, {{0, 1, 1}});
  const auto r = brauer_discrepancy(model, root_chart(model).stratum({0, 1}));
  EXPECT_EQ(r.e, DegreeSet::exactly(2));
  EXPECT_EQ(r.a, Rational(0));
  EXPECT_EQ(r.b_value(), Rational(1, 2));
  EXPECT_EQ(r.weighted_value(), Rational(1));
}

TEST(Discrepancy, BrauerDiscrepancyBadCase) {
  const auto model = make_model(2, 3, {{0, 2, 1}, {1, 2, 1}});
  const auto r = brauer_discrepancy(model, root_chart(model).stratum({0, 1}));
  EXPECT_EQ(r.e, DegreeSet::exactly(1));
  EXPECT_EQ(r.b_value(), Rational(0));
  EXPECT_EQ(r.divisor.ray(), (Ray{1, 1, 0}));
}

TEST(Discrepancy, BrauerDiscrepancyThreeTorsion) {
  const auto model = remark_model();
  const auto r = brauer_discrepancy(model, root_chart(model).stratum({0, 2}));
  EXPECT_EQ(r.e, DegreeSet::exactly(3));
  EXPECT_EQ(r.a, Rational(-1, 3));
  EXPECT_EQ(r.b_value(), Rational(1, 3));
  EXPECT_EQ(r.weighted_value(), Rational(1));
}

TEST(Discrepancy, BrauerDiscrepancyRejectsCodimOne) {
  const auto model = make_model(2, 3, {});
  EXPECT_THROW(brauer_discrepancy(model, root_chart(model).stratum({0})), std::invalid_argument);
}

TEST(Discrepancy, BFromA) {
  EXPECT_EQ(b_from_a(Rational(0), 1), Rational(0));
  EXPECT_EQ(b_from_a(Rational(-1, 2), 2), Rational(0));
  EXPECT_EQ(b_from_a(Rational(1, 3), 3), Rational(1));
  EXPECT_THROW(b_from_a(Rational(0), 0), std::invalid_argument);
  EXPECT_THROW(b_from_a(Rational(0), -2), std::invalid_argument);
}

TEST(Discrepancy, ReportCandidatesAlignWithDegrees) {
  const auto r = make_report(DivisorId(Ray{1, 1}), {}, DegreeSet({1, 3}), Rational(-1, 3));
  ASSERT_EQ(r.b.size(), 2u);
  EXPECT_EQ(r.b[0], Rational(-1, 3));
  EXPECT_EQ(r.b[1], Rational(1, 3));
  EXPECT_EQ(r.weighted[1], Rational(1));
  EXPECT_EQ(r.b_min(), Rational(-1, 3));
  EXPECT_EQ(r.weighted_min(), Rational(-1, 3));
  EXPECT_THROW(r.b_value(), std::logic_error);
}

TEST(Discrepancy, LevelOneReportsForTrivialClass) {
  const auto reports = level_one_reports(make_model(2, 3, {}));
  ASSERT_EQ(reports.size(), 4u);
  for (const auto& r : reports) EXPECT_GE(r.b_value(), Rational(1));
  EXPECT_EQ(weighted_infimum(reports).value, Rational(1));
}

TEST(Discrepancy, WeightedInfimumFindsBadStratum) {
  const auto model = make_model(2, 3, {{0, 2, 1}, {1, 2, 1}});
  const auto reports = level_one_reports(model);
  const auto m = weighted_infimum(reports);
  EXPECT_EQ(m.value, Rational(0));
  ASSERT_EQ(reports[m.index].witness.size(), 1u);
  EXPECT_EQ(model.describe(reports[m.index].witness[0]), "V(x1,x2)");
}

TEST(Discrepancy, WeightedInfimumRejectsEmpty) {
  EXPECT_THROW(weighted_infimum(std::vector<DiscrepancyReport>{}), std::invalid_argument);
}

TEST(Discrepancy, BoundaryRejectsUndeterminedDegrees) {
  const auto model = remark_model();
  const auto once = model.blown_up(model.center_of(root_chart(model).stratum({0, 2})));
  // E meets V(x1) in a chart of the blow-up; blowing that up gives a divisor whose degree is open.
  const LocalPair* target = nullptr;
  for (const auto& lp : once.charts())
    if (lp.chart.slot_of(root_chart(model).divisor_at(0))) target = &lp;
  ASSERT_NE(target, nullptr);
  const DivisorId e(Ray{1, 0, 1});
  const Center center{root_chart(model).divisor_at(0), e};
  const auto twice = once.blown_up(center);
  EXPECT_FALSE(twice.undetermined_divisors().empty());
  EXPECT_THROW(boundary_divisor(twice), std::domain_error);
}

}  // namespace
}  // namespace bterm
