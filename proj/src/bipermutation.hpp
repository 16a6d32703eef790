#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "numeric.hpp"

namespace patchcount {

// Cyclic sequence of segment labels along a patch boundary; every label
// occurs exactly twice. Equality and hashing act on the raw sequence;
// semantic equivalence goes through canonical_form().
class Bipermutation {
 public:
  Bipermutation() = default;
  explicit Bipermutation(std::vector<int> labels);

  // Whitespace-separated label list, e.g. "1 2 3 1 2 3".
  static Bipermutation parse(const std::string& text);

  const std::vector<int>& labels() const { return labels_; }
  int segment_count() const { return static_cast<int>(labels_.size() / 2); }
  bool empty() const { return labels_.empty(); }
  std::string to_string() const;

  friend bool operator==(const Bipermutation& a, const Bipermutation& b) {
    return a.labels_ == b.labels_;
  }

 private:
  std::vector<int> labels_;
};

// Lexicographic minimum over all rotations, both directions, of the
// first-occurrence relabeling. Constant on each equivalence class under
// rotation, reflection and relabeling.
std::vector<int> canonical_form(const Bipermutation& bip);

// canonical_form packed one byte per entry; the memoization key.
std::string canonical_key(const Bipermutation& bip);

// Unordered pairs {a,b} whose occurrences interleave cyclically (pattern
// azaz); exactly the pairs that cross inside the patch.
std::vector<std::pair<int, int>> crossing_pairs(const Bipermutation& bip);

// Partial order of the crossings along a cut segment. Elements are listed in
// boundary order along the arc between the cut's two occurrences; a pair is
// forced exactly when the two segments do not cross each other.
struct CrossingPoset {
  int cut = 0;
  std::vector<int> elements;
  std::vector<std::pair<int, int>> forced;  // (a,b): crossing a precedes b

  bool forces(int a, int b) const;
};

// Cut selection heuristic: minimize the segment count of the larger part,
// tie-break on fewer crossings along the cut, then on the smaller label.
int choose_cut(const Bipermutation& bip);

CrossingPoset crossing_poset(const Bipermutation& bip, int cut);

// Emits every linear extension exactly once, deterministically: repeatedly
// pick an available minimal element in ascending label order.
void for_each_linear_extension(const CrossingPoset& poset,
                               const std::function<void(const std::vector<int>&)>& visit);
std::vector<std::vector<int>> linear_extensions(const CrossingPoset& poset);

// Splits along `cut` with the crossings placed per `order` (a linear
// extension of the poset, running from the cut's first occurrence toward its
// second). First part: arc between the occurrences plus the crossing labels
// reversed; second part: the other arc plus the crossing labels in order.
std::pair<Bipermutation, Bipermutation> split(const Bipermutation& bip, int cut,
                                              const std::vector<int>& order);

struct MemoStats {
  std::uint64_t entries = 0;
  std::uint64_t hits = 0;
  std::uint64_t discarded = 0;
};

// Concurrent map from canonical key to rerouting count. Insertion is
// first-writer-wins; a re-insert must carry the identical value. An optional
// entry cap discards new entries once full, which can slow the computation
// but never change a result.
class MemoTable {
 public:
  explicit MemoTable(std::uint64_t max_entries = 0);
  ~MemoTable();
  MemoTable(const MemoTable&) = delete;
  MemoTable& operator=(const MemoTable&) = delete;

  std::optional<BigCount> lookup(const std::string& key);
  void insert(const std::string& key, const BigCount& value);
  MemoStats stats() const;
  void clear();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct CountOptions {
  int threads = 1;
  std::uint64_t memo_cap = 0;  // 0 = unbounded
};

struct CountStats {
  std::uint64_t memo_entries = 0;
  std::uint64_t memo_hits = 0;
  double seconds = 0.0;
};

// Number of reroutings of the patch with this boundary sequence. Exact; the
// base case (no crossing pair) counts one.
BigCount count_reroutings(const Bipermutation& bip, MemoTable& memo,
                          const CountOptions& options = {},
                          CountStats* stats = nullptr);

// Same count with the top-level cut forced to `cut`; the result does not
// depend on the choice. Bypasses the top-level memo read so the forced cut
// is actually exercised.
BigCount count_with_cut(const Bipermutation& bip, int cut, MemoTable& memo,
                        const CountOptions& options = {});

}  // namespace patchcount
