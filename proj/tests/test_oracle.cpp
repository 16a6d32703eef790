#include "oracle.hpp"

#include "bipermutation.hpp"
#include "doctest.h"
#include "error.hpp"
#include "geometry.hpp"

using namespace patchcount;

TEST_CASE("complete patch generator") {
  CHECK(gen_complete(3).labels() == std::vector<int>{1, 2, 3, 1, 2, 3});
  CHECK(crossing_pairs(gen_complete(3)).size() == 3);
  Bipermutation one = gen_complete(1);
  CHECK(one.labels() == std::vector<int>{1, 1});
  MemoTable memo;
  CHECK(count_reroutings(one, memo) == 1);
  CHECK_THROWS_AS(gen_complete(0), Error);
}

TEST_CASE("grid patches validate for all small sides") {
  for (long l = 1; l <= 10; ++l) {
    PatchSpec patch = gen_grid3(l);  // construction runs full validation
    CHECK(patch.lines.size() == static_cast<size_t>(4 * l - 1));
    CHECK(segments_of_patch(patch).size() == static_cast<size_t>(4 * l - 1));
  }
}

TEST_CASE("grid patches contain exactly l*l triple crossings") {
  for (long l = 1; l <= 5; ++l) {
    auto census = multicrossing_census(gen_grid3(l));
    CHECK(census[3] == l * l);
    census.erase(3);
    CHECK(census.empty());  // every interior crossing is a triple point
  }
}

TEST_CASE("grid patch round-trips through the text format") {
  PatchSpec patch = gen_grid3(2);
  PatchSpec reparsed = parse_patch(render_patch(patch));
  CHECK(reparsed.lines.size() == patch.lines.size());
  CHECK(bipermutation_of_patch(reparsed) == bipermutation_of_patch(patch));
}

TEST_CASE("reduced word classes match the known arrangement numbers") {
  CHECK(reduced_word_classes(2).classes == 1);
  CHECK(reduced_word_classes(3).classes == 2);
  CHECK(reduced_word_classes(4).classes == 8);
  CHECK(reduced_word_classes(5).classes == 62);
  CHECK_THROWS_AS(reduced_word_classes(1), Error);
  CHECK_THROWS_AS(reduced_word_classes(7), Error);
}

TEST_CASE("crosscheck binds the independent counters") {
  CrosscheckReport tiny = crosscheck(1, 2);
  CHECK(tiny.mismatches == 0);
  CrosscheckReport small = crosscheck(2, 4);
  CHECK(small.mismatches == 0);
  for (const auto& c : small.cases) CHECK(c.pass);
}

TEST_CASE("class enumeration counts for tiny sizes") {
  // 1 diagram on one chord; nested/crossing on two; five on three
  CHECK(enumerate_bipermutation_classes(1).size() == 1);
  CHECK(enumerate_bipermutation_classes(2).size() == 3);
  CHECK(enumerate_bipermutation_classes(3).size() == 8);
}

TEST_CASE("random patches are valid, bounded and deterministic") {
  auto a = random_patches(10, 10, 5u);
  auto b = random_patches(10, 10, 5u);
  REQUIRE(a.size() == 10);
  for (size_t i = 0; i < a.size(); ++i) {
    int segments = static_cast<int>(segments_of_patch(a[i]).size());
    CHECK(segments >= 2);
    CHECK(segments <= 10);
    CHECK(render_patch(a[i]) == render_patch(b[i]));
  }
}
