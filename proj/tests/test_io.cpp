#include "io.hpp"

#include "bsg/error.hpp"
#include "bsg/random.hpp"

#include <gtest/gtest.h>

namespace bsg {
namespace {

TEST(GroupoidJson, RoundTrip) {
  Rng rng(71);
  for (int i = 0; i < 20; ++i) {
    Groupoid g = random_groupoid(rng, {10, 150, false});
    io::Json j = io::groupoid_to_json(g);
    Groupoid back = io::groupoid_from_json(io::Json::parse(j.dump()));
    ASSERT_EQ(back.num_arrows(), g.num_arrows());
    EXPECT_EQ(back.masses(), g.masses());
    for (int a = 0; a < g.num_arrows(); ++a) {
      EXPECT_EQ(back.source(a), g.source(a));
      EXPECT_EQ(back.range(a), g.range(a));
      EXPECT_EQ(back.inverse(a), g.inverse(a));
      for (int b : g.into(g.source(a))) EXPECT_EQ(back.product(a, b), g.product(a, b));
    }
    EXPECT_NO_THROW(validate_axioms(back));
    EXPECT_EQ(io::groupoid_to_json(back), j);
  }
}

TEST(GroupoidJson, StructuralErrors) {
  EXPECT_THROW(io::groupoid_from_json(io::Json::parse("[]")), Error);
  EXPECT_THROW(io::groupoid_from_json(io::Json::parse(R"({"units": []})")), Error);
  EXPECT_THROW(io::groupoid_from_json(io::Json::parse(R"({"schema": 9, "units": [], "arrows": []})")), Error);
  EXPECT_THROW(io::groupoid_from_json(io::Json::parse(R"({"units": [{"id": 1}], "arrows": []})")), Error);
}

TEST(CocycleJson, RoundTripAndTargets) {
  Groupoid g = from_group_action({{1, 2, 0}}, {Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  Cocycle rn = radon_nikodym(g);
  Cocycle back = io::cocycle_from_json(io::cocycle_to_json(rn), g.num_arrows());
  EXPECT_EQ(back.values, rn.values);
  EXPECT_EQ(back.target, rn.target);
  EXPECT_EQ(io::parse_target("Z/5"), Target::cyclic(5));
  EXPECT_EQ(io::parse_target("Z"), Target::integers());
  EXPECT_THROW(io::parse_target("R"), Error);
  io::Json bad{{"target", "Z/3"}, {"values", {"0", "1", "7"}}};
  EXPECT_THROW(io::cocycle_from_json(bad, 3), Error);
  io::Json missing{{"target", "Z"}, {"values", {"0", "1"}}};
  EXPECT_THROW(io::cocycle_from_json(missing, 3), Error);
}

TEST(TypeJson, Lambda) {
  TypeLabel t{TypeKind::IIILambda, Rational(2, 3)};
  EXPECT_EQ(io::type_to_json(t).dump(), R"({"type":"III_lambda","lambda":"2/3"})");
}

TEST(IdList, Parse) {
  EXPECT_EQ(io::parse_id_list(" 0, 3 ,5"), (std::vector<int>{0, 3, 5}));
  EXPECT_TRUE(io::parse_id_list("").empty());
  EXPECT_THROW(io::parse_id_list("x"), Error);
}

}  // namespace
}  // namespace bsg
