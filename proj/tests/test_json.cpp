#include <catch2/catch_amalgamated.hpp>

#include <bressoud/json_io.hpp>

using namespace bressoud;
using nlohmann::json;

TEST_CASE("partitions serialize as plain arrays", "[json]") {
  CHECK(to_json(Partition({5, 4, 1})) == json::parse("[5,4,1]"));
  CHECK(to_json(Partition(std::vector<Part>{})) == json::parse("[]"));
  CHECK(partition_from_json(json::parse("[5,4,1]")) == Partition({5, 4, 1}));
  CHECK(partition_from_json(json::parse("[]")) == Partition(std::vector<Part>{}));
  CHECK_THROWS_AS(partition_from_json(json::parse("[1,2]")), std::invalid_argument);
}

TEST_CASE("forward trace serializes every stage", "[json]") {
  const StepTrace t =
      trace(Partition({6, 3}), ResiduePermutation::bressoud_dual(), Direction::forward);
  const json j = to_json(t);
  CHECK(j.at("direction") == "forward");
  CHECK(j.at("d") == 2);
  CHECK(j.at("input") == json::parse("[6,3]"));
  CHECK(j.at("after_step1").at("values") == json::parse("[3,2]"));
  CHECK(j.at("after_step1").at("staircase") == json::parse("[3,1]"));
  CHECK(j.at("groups") ==
        json::parse(R"([{"residue":0,"values":[2]},{"residue":1,"values":[3]}])"));
  CHECK(j.at("after_step3") == json::parse("[5,4]"));
  CHECK(j.at("output") == json::parse("[5,4]"));
}

TEST_CASE("traces round-trip through JSON", "[json]") {
  for (Direction dir : {Direction::forward, Direction::inverse}) {
    const Partition start = dir == Direction::forward ? Partition({8, 1}) : Partition({6, 3});
    const StepTrace t = trace(start, ResiduePermutation::bressoud_dual(), dir);
    const StepTrace back = trace_from_json(to_json(t));
    CHECK(back.direction == t.direction);
    CHECK(back.input == t.input);
    CHECK(back.after_step1 == t.after_step1);
    CHECK(back.staircase == t.staircase);
    CHECK(back.after_step2 == t.after_step2);
    CHECK(back.after_step3 == t.after_step3);
    CHECK(back.output == t.output);
  }
}

TEST_CASE("verification reports serialize with a pass flag", "[json]") {
  const json j = to_json(verify_identity(9, ResiduePermutation::bressoud_dual()));
  CHECK(j.at("n") == 9);
  CHECK(j.at("d") == 2);
  CHECK(j.at("pi") == json::parse("[0,1]"));
  CHECK(j.at("count_left") == 5);
  CHECK(j.at("count_right") == 5);
  CHECK(j.at("forward_total") == true);
  CHECK(j.at("injective") == true);
  CHECK(j.at("roundtrip_fwd_inv") == true);
  CHECK(j.at("roundtrip_inv_fwd") == true);
  CHECK(j.at("witnesses") == json::array());
  CHECK(j.at("pass") == true);
}

TEST_CASE("range summaries serialize counts and the aggregate verdict", "[json]") {
  const json j = summary_to_json(verify_range(6, 2));
  CHECK(j.at("n_max") == 6);
  CHECK(j.at("d_max") == 2);
  CHECK(j.at("reports") == 21);  // 7 weights x 3 permutations
  CHECK(j.at("failures") == 0);
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("wall_seconds").get<double>() >= 0.0);
}
