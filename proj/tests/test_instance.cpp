#include "rao/core/generators.hpp"
#include "rao/core/instance.hpp"
#include "rao/core/instance_json.hpp"
#include "rao/core/validation.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

using namespace rao;

namespace {

Instance two_articles() {
  Instance inst;
  inst.budget = 10;
  inst.articles.emplace_back(5, std::vector<std::int64_t>{5, 5, 4, 4});
  inst.articles.emplace_back(3, std::vector<std::int64_t>{3, 3, 3, 2, 2, 1});
  return inst;
}

}  // namespace

TEST(Validation, RateAboveHintIsFlagged) {
  Instance inst;
  inst.budget = 5;
  inst.articles.emplace_back(6, std::vector<std::int64_t>{7, 1});
  auto report = validate_instance(inst, false);
  ASSERT_FALSE(report.ok());
  EXPECT_TRUE(report.has(ViolationKind::RateExceedsHint));
  EXPECT_NE(report.violations.front().message.find("rate exceeds hint"), std::string::npos);
}

TEST(Validation, LengthAboveBudgetOnlyWhenRestricted) {
  auto inst = gen_lemma4(4);
  EXPECT_TRUE(validate_instance(inst, true).has(ViolationKind::LengthExceedsBudget));
  EXPECT_FALSE(validate_instance(inst, false).has(ViolationKind::LengthExceedsBudget));
}

TEST(Validation, ValidPairHasEmptyReport) { EXPECT_TRUE(validate_instance(two_articles(), true).ok()); }

TEST(Validation, DuplicatesNeedTiePriority) {
  Instance inst;
  inst.budget = 4;
  inst.articles.emplace_back(3, std::vector<std::int64_t>{1, 2});
  inst.articles.emplace_back(3, std::vector<std::int64_t>{3, 3});
  auto report = validate_instance(inst, true);
  EXPECT_TRUE(report.has(ViolationKind::DuplicateHint));
  EXPECT_TRUE(report.has(ViolationKind::DuplicateHintValue));
  inst.tie_priority = std::vector<std::uint32_t>{1, 0};
  EXPECT_TRUE(validate_instance(inst, true).ok());
  inst.tie_priority = std::vector<std::uint32_t>{1, 1};
  EXPECT_TRUE(validate_instance(inst, true).has(ViolationKind::InvalidTiePriority));
}

TEST(Accuracy, SingleArticle) {
  Instance inst;
  inst.budget = 4;
  inst.articles.emplace_back(6, std::vector<std::int64_t>{4, 2, 1, 1});
  auto acc = accuracy(inst);
  EXPECT_EQ(acc.c_value, Rational(3));
  EXPECT_EQ(acc.argmax_article, 0u);
}

TEST(Accuracy, ConstantProfilesGiveOne) {
  Instance inst;
  inst.budget = 10;
  inst.articles.emplace_back(4, InformationProfile::constant(3, 4));
  inst.articles.emplace_back(7, InformationProfile::constant(5, 7));
  EXPECT_EQ(accuracy(inst).c_value, Rational(1));
}

TEST(Accuracy, EmptyInstanceThrows) {
  Instance inst;
  inst.budget = 1;
  EXPECT_THROW(accuracy(inst), std::invalid_argument);
}

TEST(Accuracy, AtLeastOneAndOneOnlyForTightConstantProfiles) {
  Rng rng(5);
  for (int k = 0; k < 300; ++k) {
    auto inst = fixtures::small_instance(rng);
    auto c = accuracy(inst).c_value;
    ASSERT_GE(c, 1);
    bool all_tight = true;
    for (const auto& a : inst.articles) all_tight = all_tight && a.profile().min_rate() == a.hint();
    ASSERT_EQ(c == 1, all_tight);
  }
}

TEST(CutInstance, FullFractionIsIdentity) {
  auto inst = two_articles();
  EXPECT_EQ(cut_instance(inst, 1), inst);
}

TEST(CutInstance, TruncatesToFractionOfBudget) {
  Instance inst;
  inst.budget = 10;
  inst.articles.emplace_back(5, std::vector<std::int64_t>{5, 4, 3, 2, 1});
  auto cut = cut_instance(inst, parse_rational("0.3"));
  EXPECT_EQ(cut.budget, Rational(10));
  ASSERT_EQ(cut.articles.size(), 1u);
  EXPECT_EQ(cut.articles[0].length(), Rational(3));
  EXPECT_EQ(cut.articles[0].profile().total(), Rational(12));
  EXPECT_EQ(cut.articles[0].hint(), 5);
}

TEST(CutInstance, RejectsFractionOutsideUnitInterval) {
  auto inst = two_articles();
  EXPECT_THROW(cut_instance(inst, 0), std::invalid_argument);
  EXPECT_THROW(cut_instance(inst, parse_rational("1.01")), std::invalid_argument);
}

TEST(CutInstance, IdempotentForFixedFraction) {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    auto inst = fixtures::small_instance(rng);
    Rational g(rng.between(1, 100), 100);
    auto once = cut_instance(inst, g);
    ASSERT_EQ(cut_instance(once, g), once);
    for (std::size_t i = 0; i < inst.size(); ++i)
      ASSERT_EQ(once.articles[i].length(), std::min(inst.articles[i].length(), g * inst.budget));
  }
}

TEST(InstanceJson, RoundTripIsLossless) {
  Rng rng(9);
  for (int k = 0; k < 50; ++k) {
    auto inst = fixtures::small_instance(rng);
    inst.id = "rt-" + std::to_string(k);
    auto cut = cut_instance(inst, Rational(rng.between(1, 7), 7));
    ASSERT_EQ(instance_from_json(to_json(inst)), inst);
    ASSERT_EQ(instance_from_json(nlohmann::json::parse(to_json(cut).dump())), cut);
  }
}

TEST(InstanceJson, SchemaShapeAndUnknownKeys) {
  auto j = to_json(two_articles());
  EXPECT_EQ(j["budget"], 10);
  EXPECT_EQ(j["articles"][0]["hint"], 5);
  EXPECT_EQ(j["articles"][0]["length"], 4);
  EXPECT_EQ(j["articles"][0]["segments"], nlohmann::json::parse("[[2,5],[2,4]]"));
  EXPECT_EQ(j["adversarial"], false);
  j["surprise"] = 1;
  EXPECT_THROW(instance_from_json(j), std::invalid_argument);
  auto bad = to_json(two_articles());
  bad["articles"][0]["length"] = 5;
  EXPECT_THROW(instance_from_json(bad), std::invalid_argument);
}
