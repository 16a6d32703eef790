#include "bipermutation.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "error.hpp"
#include "geometry.hpp"
#include "oracle.hpp"

using namespace patchcount;

namespace {

Bipermutation bip(std::vector<int> labels) { return Bipermutation(std::move(labels)); }

// the shipped seven-segment example patch, frozen
const std::vector<int> kFig5{1, 2, 2, 3, 4, 5, 6, 5, 7, 6, 1, 4, 3, 7};

std::set<std::pair<int, int>> pairs_of(const Bipermutation& b) {
  auto v = crossing_pairs(b);
  return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("bipermutation validation") {
  CHECK_NOTHROW(bip({1, 2, 1, 2}));
  CHECK_NOTHROW(bip({2, 7, 2, 7}));  // labels need not be consecutive
  CHECK_THROWS_AS(bip({1, 2, 1}), Error);
  CHECK_THROWS_AS(bip({1, 2, 2, 2}), Error);
  CHECK(Bipermutation::parse("1 2 3 1 2 3").segment_count() == 3);
  CHECK_THROWS_AS(Bipermutation::parse("1 2 x"), Error);
}

TEST_CASE("crossing pairs from interleaving") {
  CHECK(pairs_of(bip({1, 2, 1, 2})) == std::set<std::pair<int, int>>{{1, 2}});
  CHECK(pairs_of(bip({1, 1, 2, 2})).empty());
  auto fig5 = pairs_of(bip(kFig5));
  std::set<int> with_one;
  for (auto [a, b] : fig5) {
    if (a == 1) with_one.insert(b);
    if (b == 1) with_one.insert(a);
  }
  CHECK(with_one == std::set<int>{3, 4, 7});
}

TEST_CASE("cut selection") {
  CHECK(choose_cut(bip({1, 2, 1, 2})) == 1);
  // one segment crossing all others, the others mutually parallel: cutting
  // there leaves both sides crossing-free
  CHECK(choose_cut(bip({1, 2, 3, 1, 3, 2})) == 1);
  CHECK(choose_cut(bip({1, 2, 3, 4, 1, 4, 3, 2})) == 1);
  CHECK_THROWS_AS(choose_cut(bip({1, 1, 2, 2})), Error);
}

TEST_CASE("crossing poset on the seven-segment example") {
  auto poset = crossing_poset(bip(kFig5), 1);
  CHECK(poset.elements == std::vector<int>{3, 4, 7});
  CHECK(poset.forced == std::vector<std::pair<int, int>>{{3, 4}});
  CHECK(poset.forces(3, 4));
  CHECK(!poset.forces(4, 3));
  CHECK(!poset.forces(3, 7));
}

TEST_CASE("poset of mutually crossing segments is an antichain") {
  auto poset = crossing_poset(gen_complete(3), 1);
  CHECK(poset.elements.size() == 2);
  CHECK(poset.forced.empty());
  CHECK(linear_extensions(poset).size() == 2);
}

TEST_CASE("poset of mutually parallel crossers is a chain") {
  auto poset = crossing_poset(bip({1, 2, 3, 4, 1, 4, 3, 2}), 1);
  CHECK(poset.elements == std::vector<int>{2, 3, 4});
  CHECK(poset.forced.size() == 3);
  auto exts = linear_extensions(poset);
  REQUIRE(exts.size() == 1);
  CHECK(exts[0] == std::vector<int>{2, 3, 4});
}

TEST_CASE("linear extension counts at the extremes") {
  auto antichain = crossing_poset(gen_complete(4), 1);  // 3 free crossings
  CHECK(linear_extensions(antichain).size() == 6);
}

TEST_CASE("seven-segment example admits exactly three orders") {
  auto exts = linear_extensions(crossing_poset(bip(kFig5), 1));
  REQUIRE(exts.size() == 3);
  CHECK(exts[0] == std::vector<int>{3, 4, 7});
  CHECK(exts[1] == std::vector<int>{3, 7, 4});
  CHECK(exts[2] == std::vector<int>{7, 3, 4});
}

TEST_CASE("split of the two-segment crossing") {
  auto [p1, p2] = split(bip({1, 2, 1, 2}), 1, {2});
  CHECK(p1.labels() == std::vector<int>{2, 2});
  CHECK(p2.labels() == std::vector<int>{2, 2});
}

TEST_CASE("split rejects an order that is not an extension") {
  Bipermutation b = bip(kFig5);
  CHECK_THROWS_AS(split(b, 1, {4, 7, 3}), Error);          // violates 3 before 4
  CHECK_THROWS_AS(split(b, 1, {3, 4}), Error);             // wrong element set
  CHECK_NOTHROW(split(b, 1, {3, 7, 4}));
}

TEST_CASE("split conserves crossings on random classes") {
  for (const auto& b : enumerate_bipermutation_classes(4)) {
    auto all = crossing_pairs(b);
    if (all.empty()) continue;
    int z = choose_cut(b);
    std::vector<std::pair<int, int>> want;
    for (auto p : all)
      if (p.first != z && p.second != z) want.push_back(p);
    std::sort(want.begin(), want.end());
    for (const auto& order : linear_extensions(crossing_poset(b, z))) {
      auto [p1, p2] = split(b, z, order);
      auto got = crossing_pairs(p1);
      auto more = crossing_pairs(p2);
      got.insert(got.end(), more.begin(), more.end());
      std::sort(got.begin(), got.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("canonical form") {
  CHECK(canonical_form(bip({2, 7, 2, 7})) == std::vector<int>{1, 2, 1, 2});
  CHECK(canonical_form(bip({1, 1, 2, 2})) == canonical_form(bip({2, 2, 1, 1})));
  std::vector<int> seq{1, 2, 3, 1, 3, 2};
  std::vector<int> reversed(seq.rbegin(), seq.rend());
  CHECK(canonical_form(bip(seq)) == canonical_form(bip(reversed)));
}

TEST_CASE("canonical form is invariant under relabeling, rotation, reversal") {
  std::mt19937 rng(4242);
  auto classes = enumerate_bipermutation_classes(5);
  std::uniform_int_distribution<size_t> pick(0, classes.size() - 1);
  for (int trial = 0; trial < 100; ++trial) {
    const auto& base = classes[pick(rng)];
    std::vector<int> seq = base.labels();
    // random relabeling
    int s = base.segment_count();
    std::vector<int> perm(s);
    for (int i = 0; i < s; ++i) perm[i] = i + 1;
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int& x : seq) x = perm[x - 1];
    // random rotation
    std::uniform_int_distribution<size_t> rot(0, seq.size() - 1);
    std::rotate(seq.begin(), seq.begin() + rot(rng), seq.end());
    // coin-flip reversal
    if (rng() & 1) std::reverse(seq.begin(), seq.end());
    CHECK(canonical_form(bip(seq)) == canonical_form(base));
  }
}

TEST_CASE("rerouting counts: crossing-free and anchors") {
  MemoTable memo;
  CHECK(count_reroutings(bip({1, 1, 2, 2}), memo) == 1);
  CHECK(count_reroutings(gen_complete(3), memo) == 2);
  CHECK(count_reroutings(gen_complete(4), memo) == 8);
  CHECK(count_reroutings(gen_complete(5), memo) == 62);
}

TEST_CASE("grid patch count matches the published example") {
  MemoTable memo;
  auto b = bipermutation_of_patch(gen_grid3(2));
  CHECK(count_reroutings(b, memo) == 20);
}

TEST_CASE("seven-segment example count is cut-invariant") {
  Bipermutation b = bip(kFig5);
  MemoTable memo;
  BigCount reference = count_reroutings(b, memo);
  CHECK(reference == 3);
  std::set<int> cuts;
  for (auto [x, y] : crossing_pairs(b)) {
    cuts.insert(x);
    cuts.insert(y);
  }
  for (int z : cuts) {
    MemoTable fresh;
    CHECK(count_with_cut(b, z, fresh) == reference);
  }
}

TEST_CASE("label-disjoint blocks multiply") {
  std::mt19937 rng(1717);
  auto classes = enumerate_bipermutation_classes(4);
  std::uniform_int_distribution<size_t> pick(0, classes.size() - 1);
  for (int trial = 0; trial < 30; ++trial) {
    const auto& b1 = classes[pick(rng)];
    const auto& b2 = classes[pick(rng)];
    std::vector<int> joined = b1.labels();
    int offset = b1.segment_count();
    for (int x : b2.labels()) joined.push_back(x + offset);
    MemoTable memo;
    BigCount whole = count_reroutings(bip(joined), memo);
    BigCount f1 = count_reroutings(b1, memo);
    BigCount f2 = count_reroutings(b2, memo);
    CHECK(whole == f1 * f2);
  }
}

TEST_CASE("memo table semantics") {
  MemoTable memo;
  memo.insert("k", BigCount(5));
  CHECK_NOTHROW(memo.insert("k", BigCount(5)));   // idempotent
  CHECK_THROWS_AS(memo.insert("k", BigCount(6)), Error);
  CHECK(memo.lookup("k") == BigCount(5));
  CHECK(!memo.lookup("missing"));
  CHECK(memo.stats().entries == 1);
  CHECK(memo.stats().hits == 1);
  memo.clear();
  CHECK(memo.stats().entries == 0);
}

TEST_CASE("memo cap only slows, never changes the count") {
  MemoTable capped(4);
  CHECK(count_reroutings(gen_complete(6), capped) == 908);
  MemoTable unbounded;
  CHECK(count_reroutings(gen_complete(6), unbounded) == 908);
  CHECK(capped.stats().entries <= unbounded.stats().entries);
}

TEST_CASE("memo reuse across runs reports hits") {
  MemoTable memo;
  count_reroutings(gen_complete(5), memo);
  CountStats stats;
  count_reroutings(gen_complete(5), memo, {}, &stats);
  CHECK(stats.memo_hits > 0);
}

TEST_CASE("threaded counting matches sequential") {
  for (int n : {5, 6, 7}) {
    MemoTable seq_memo;
    BigCount sequential = count_reroutings(gen_complete(n), seq_memo);
    MemoTable par_memo;
    CountOptions options;
    options.threads = 4;
    CHECK(count_reroutings(gen_complete(n), par_memo, options) == sequential);
  }
}

TEST_CASE("complete-patch anchor n=7") {
  MemoTable memo;
  CHECK(count_reroutings(gen_complete(7), memo) == 24698);
}
