#include "bipermutation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "error.hpp"

namespace patchcount {

namespace {

constexpr int kMaxSegments = 200;
constexpr int kMaxCutCrossings = 64;

}  // namespace

Bipermutation::Bipermutation(std::vector<int> labels) : labels_(std::move(labels)) {
  if (labels_.size() % 2 != 0)
    fail_validation("bipermutation has odd length " + std::to_string(labels_.size()));
  std::map<int, int> occurrences;
  for (int x : labels_) ++occurrences[x];
  for (const auto& [label, n] : occurrences)
    if (n != 2)
      fail_validation("label " + std::to_string(label) + " occurs " +
                      std::to_string(n) + " times (expected 2)");
  if (occurrences.size() > kMaxSegments)
    fail_capacity("bipermutation exceeds " + std::to_string(kMaxSegments) +
                  " segments");
}

Bipermutation Bipermutation::parse(const std::string& text) {
  std::istringstream in(text);
  std::vector<int> labels;
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      int v = std::stoi(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
      labels.push_back(v);
    } catch (const std::exception&) {
      fail_validation("bad bipermutation token '" + tok + "'");
    }
  }
  return Bipermutation(std::move(labels));
}

std::string Bipermutation::to_string() const {
  std::string out;
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(labels_[i]);
  }
  return out;
}

std::vector<int> canonical_form(const Bipermutation& bip) {
  const auto& seq = bip.labels();
  const int n = static_cast<int>(seq.size());
  std::vector<int> best;
  std::vector<int> cand(n);
  std::vector<int> relabel;
  for (int dir : {1, -1}) {
    for (int start = 0; start < n; ++start) {
      relabel.assign(2 * bip.segment_count() + 1, 0);
      int next = 0;
      for (int i = 0; i < n; ++i) {
        int idx = ((start + dir * i) % n + n) % n;
        cand[i] = seq[idx];
      }
      // first-occurrence relabeling in place
      std::unordered_map<int, int> seen;
      seen.reserve(n);
      for (int i = 0; i < n; ++i) {
        auto [it, inserted] = seen.emplace(cand[i], next + 1);
        if (inserted) ++next;
        cand[i] = it->second;
      }
      if (best.empty() || cand < best) best = cand;
    }
  }
  return best;
}

std::string canonical_key(const Bipermutation& bip) {
  std::vector<int> canon = canonical_form(bip);
  std::string key;
  key.reserve(canon.size());
  for (int v : canon) key.push_back(static_cast<char>(v));
  return key;
}

namespace {

// label -> (first, second) position map; deterministic label order
std::map<int, std::pair<int, int>> occurrence_map(const std::vector<int>& seq) {
  std::map<int, std::pair<int, int>> pos;
  for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
    auto it = pos.find(seq[i]);
    if (it == pos.end())
      pos.emplace(seq[i], std::make_pair(i, -1));
    else
      it->second.second = i;
  }
  return pos;
}

bool interleaves(const std::pair<int, int>& a, const std::pair<int, int>& b) {
  int inside = 0;
  if (a.first < b.first && b.first < a.second) ++inside;
  if (a.first < b.second && b.second < a.second) ++inside;
  return inside == 1;
}

}  // namespace

std::vector<std::pair<int, int>> crossing_pairs(const Bipermutation& bip) {
  auto pos = occurrence_map(bip.labels());
  std::vector<std::pair<int, int>> out;
  for (auto ia = pos.begin(); ia != pos.end(); ++ia) {
    auto ib = ia;
    for (++ib; ib != pos.end(); ++ib)
      if (interleaves(ia->second, ib->second))
        out.emplace_back(ia->first, ib->first);
  }
  return out;
}

int choose_cut(const Bipermutation& bip) {
  const auto& seq = bip.labels();
  const int n = static_cast<int>(seq.size());
  auto pos = occurrence_map(seq);

  std::map<int, int> degree;
  for (const auto& [a, b] : crossing_pairs(bip)) {
    ++degree[a];
    ++degree[b];
  }
  if (degree.empty()) fail_validation("choose_cut on a crossing-free bipermutation");

  int best = -1;
  long best_larger = 0;
  int best_degree = 0;
  for (const auto& [z, deg] : degree) {
    auto [z1, z2] = pos[z];
    int len_a = z2 - z1 - 1;
    int len_b = n - len_a - 2;
    long larger = std::max(len_a, len_b);
    if (best < 0 || larger < best_larger ||
        (larger == best_larger && deg < best_degree)) {
      best = z;
      best_larger = larger;
      best_degree = deg;
    }
  }
  return best;
}

CrossingPoset crossing_poset(const Bipermutation& bip, int cut) {
  const auto& seq = bip.labels();
  const int n = static_cast<int>(seq.size());
  auto pos = occurrence_map(seq);
  auto it = pos.find(cut);
  if (it == pos.end()) fail_validation("cut label not present");
  auto [z1, z2] = it->second;

  // Crossers carry one endpoint strictly between the cut's occurrences.
  std::vector<std::pair<int, int>> by_arc_pos;  // (position in first arc, label)
  for (const auto& [label, occ] : pos) {
    if (label == cut) continue;
    int inside = (z1 < occ.first && occ.first < z2) +
                 (z1 < occ.second && occ.second < z2);
    if (inside == 1)
      by_arc_pos.emplace_back(occ.first > z1 && occ.first < z2 ? occ.first : occ.second,
                              label);
  }
  if (by_arc_pos.empty()) fail_validation("cut label has no crossing");
  std::sort(by_arc_pos.begin(), by_arc_pos.end());

  CrossingPoset poset;
  poset.cut = cut;
  for (const auto& [p, label] : by_arc_pos) poset.elements.push_back(label);

  // Parallel crossers are forced in arc order; crossing pairs stay free.
  for (size_t i = 0; i < poset.elements.size(); ++i) {
    for (size_t j = i + 1; j < poset.elements.size(); ++j) {
      int a = poset.elements[i];
      int b = poset.elements[j];
      if (!interleaves(pos[a], pos[b])) poset.forced.emplace_back(a, b);
    }
  }
  return poset;
}

bool CrossingPoset::forces(int a, int b) const {
  return std::find(forced.begin(), forced.end(), std::make_pair(a, b)) != forced.end();
}

namespace {

struct ExtensionEnumerator {
  std::vector<int> labels;            // ascending
  std::vector<std::uint64_t> preds;   // predecessor bitmask per label index

  explicit ExtensionEnumerator(const CrossingPoset& poset) {
    labels = poset.elements;
    std::sort(labels.begin(), labels.end());
    if (labels.size() > kMaxCutCrossings)
      fail_capacity("more than " + std::to_string(kMaxCutCrossings) +
                    " crossings on one cut");
    preds.assign(labels.size(), 0);
    for (const auto& [a, b] : poset.forced) {
      size_t ia = index_of(a), ib = index_of(b);
      preds[ib] |= std::uint64_t(1) << ia;
    }
  }

  size_t index_of(int label) const {
    return std::lower_bound(labels.begin(), labels.end(), label) - labels.begin();
  }

  void run(const std::function<void(const std::vector<int>&)>& visit) const {
    std::vector<int> order;
    order.reserve(labels.size());
    recurse(0, order, visit);
  }

 private:
  void recurse(std::uint64_t used, std::vector<int>& order,
               const std::function<void(const std::vector<int>&)>& visit) const {
    if (order.size() == labels.size()) {
      visit(order);
      return;
    }
    for (size_t i = 0; i < labels.size(); ++i) {
      std::uint64_t bit = std::uint64_t(1) << i;
      if (used & bit) continue;
      if ((preds[i] & ~used) != 0) continue;  // an unplaced predecessor remains
      order.push_back(labels[i]);
      recurse(used | bit, order, visit);
      order.pop_back();
    }
  }
};

}  // namespace

void for_each_linear_extension(const CrossingPoset& poset,
                               const std::function<void(const std::vector<int>&)>& visit) {
  ExtensionEnumerator(poset).run(visit);
}

std::vector<std::vector<int>> linear_extensions(const CrossingPoset& poset) {
  std::vector<std::vector<int>> out;
  for_each_linear_extension(poset, [&](const std::vector<int>& order) {
    out.push_back(order);
  });
  return out;
}

namespace {

// Core split on raw sequences; the public wrapper validates the order.
std::pair<std::vector<int>, std::vector<int>> split_raw(const std::vector<int>& seq,
                                                        int z1, int z2,
                                                        const std::vector<int>& order) {
  std::vector<int> part1;
  part1.reserve((z2 - z1 - 1) + order.size());
  for (int i = z1 + 1; i < z2; ++i) part1.push_back(seq[i]);
  for (auto it = order.rbegin(); it != order.rend(); ++it) part1.push_back(*it);

  const int n = static_cast<int>(seq.size());
  std::vector<int> part2;
  part2.reserve(n - (z2 - z1 + 1) + order.size());
  for (int i = z2 + 1; i < n; ++i) part2.push_back(seq[i]);
  for (int i = 0; i < z1; ++i) part2.push_back(seq[i]);
  for (int x : order) part2.push_back(x);
  return {std::move(part1), std::move(part2)};
}

}  // namespace

std::pair<Bipermutation, Bipermutation> split(const Bipermutation& bip, int cut,
                                              const std::vector<int>& order) {
  CrossingPoset poset = crossing_poset(bip, cut);
  std::vector<int> sorted_order = order;
  std::sort(sorted_order.begin(), sorted_order.end());
  std::vector<int> sorted_elems = poset.elements;
  std::sort(sorted_elems.begin(), sorted_elems.end());
  if (sorted_order != sorted_elems)
    fail_validation("order is not a permutation of the crossings on the cut");
  std::map<int, int> rank;
  for (size_t i = 0; i < order.size(); ++i) rank[order[i]] = static_cast<int>(i);
  for (const auto& [a, b] : poset.forced)
    if (rank[a] > rank[b])
      fail_validation("order violates the forced crossing order");

  auto pos = occurrence_map(bip.labels());
  auto [z1, z2] = pos[cut];
  auto [p1, p2] = split_raw(bip.labels(), z1, z2, order);
  return {Bipermutation(std::move(p1)), Bipermutation(std::move(p2))};
}

// ---------------------------------------------------------------------------
// Memo table

struct MemoTable::Impl {
  static constexpr size_t kShards = 64;
  struct Shard {
    std::mutex mu;
    std::unordered_map<std::string, BigCount> map;
  };
  std::vector<Shard> shards{kShards};
  std::uint64_t cap_per_shard = 0;
  std::atomic<std::uint64_t> hits{0};
  std::atomic<std::uint64_t> discarded{0};

  Shard& shard_for(const std::string& key) {
    return shards[std::hash<std::string>{}(key) % kShards];
  }
};

MemoTable::MemoTable(std::uint64_t max_entries) : impl_(std::make_unique<Impl>()) {
  if (max_entries > 0)
    impl_->cap_per_shard = max_entries / Impl::kShards + 1;
}

MemoTable::~MemoTable() = default;

std::optional<BigCount> MemoTable::lookup(const std::string& key) {
  auto& shard = impl_->shard_for(key);
  std::lock_guard lock(shard.mu);
  auto it = shard.map.find(key);
  if (it == shard.map.end()) return std::nullopt;
  impl_->hits.fetch_add(1, std::memory_order_relaxed);
  return it->second;
}

void MemoTable::insert(const std::string& key, const BigCount& value) {
  auto& shard = impl_->shard_for(key);
  std::lock_guard lock(shard.mu);
  auto it = shard.map.find(key);
  if (it != shard.map.end()) {
    if (it->second != value)
      fail_internal("memo re-insert with a different value");
    return;
  }
  if (impl_->cap_per_shard > 0 && shard.map.size() >= impl_->cap_per_shard) {
    impl_->discarded.fetch_add(1, std::memory_order_relaxed);
    return;
  }
  shard.map.emplace(key, value);
}

MemoStats MemoTable::stats() const {
  MemoStats s;
  for (auto& shard : impl_->shards) {
    std::lock_guard lock(shard.mu);
    s.entries += shard.map.size();
  }
  s.hits = impl_->hits.load();
  s.discarded = impl_->discarded.load();
  return s;
}

void MemoTable::clear() {
  for (auto& shard : impl_->shards) {
    std::lock_guard lock(shard.mu);
    shard.map.clear();
  }
  impl_->hits = 0;
  impl_->discarded = 0;
}

// ---------------------------------------------------------------------------
// Counting

namespace {

struct Counter {
  MemoTable& memo;

  BigCount count(const std::vector<int>& seq) {
    Bipermutation bip{seq};
    std::string key = canonical_key(bip);
    if (auto hit = memo.lookup(key)) return *hit;

    BigCount total = count_node(bip);
    memo.insert(key, total);
    return total;
  }

  // One recursion step; no memo read at this level.
  BigCount count_node(const Bipermutation& bip) {
    auto pairs = crossing_pairs(bip);
    if (pairs.size() <= 1) return 1;
    return count_below_cut(bip, choose_cut(bip));
  }

  BigCount count_below_cut(const Bipermutation& bip, int cut) {
    auto pos_all = [&] {
      std::map<int, std::pair<int, int>> m;
      int i = 0;
      for (int x : bip.labels()) {
        auto it = m.find(x);
        if (it == m.end())
          m.emplace(x, std::make_pair(i, -1));
        else
          it->second.second = i;
        ++i;
      }
      return m;
    }();
    auto [z1, z2] = pos_all.at(cut);
    CrossingPoset poset = crossing_poset(bip, cut);

    BigCount total = 0;
    for_each_linear_extension(poset, [&](const std::vector<int>& order) {
      auto [p1, p2] = split_raw(bip.labels(), z1, z2, order);
      total += count(p1) * count(p2);
    });
    return total;
  }
};

// Parallel evaluation: the producer streams the top-level extensions into a
// bounded queue; workers multiply out the two parts with the shared memo.
// Exact integer addition makes the result independent of scheduling.
BigCount count_parallel(const Bipermutation& bip, int cut, MemoTable& memo,
                        int threads) {
  auto pos = occurrence_map(bip.labels());
  auto [z1, z2] = pos.at(cut);
  CrossingPoset poset = crossing_poset(bip, cut);

  struct Queue {
    std::mutex mu;
    std::condition_variable cv_push, cv_pop;
    std::deque<std::pair<std::vector<int>, std::vector<int>>> items;
    bool closed = false;
    static constexpr size_t kCapacity = 4096;
  } queue;

  BigCount total = 0;
  std::mutex total_mu;

  auto worker = [&] {
    Counter counter{memo};
    BigCount local = 0;
    for (;;) {
      std::pair<std::vector<int>, std::vector<int>> task;
      {
        std::unique_lock lock(queue.mu);
        queue.cv_pop.wait(lock, [&] { return queue.closed || !queue.items.empty(); });
        if (queue.items.empty()) break;
        task = std::move(queue.items.front());
        queue.items.pop_front();
      }
      queue.cv_push.notify_one();
      local += counter.count(task.first) * counter.count(task.second);
    }
    std::lock_guard lock(total_mu);
    total += local;
  };

  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);

  for_each_linear_extension(poset, [&](const std::vector<int>& order) {
    auto task = split_raw(bip.labels(), z1, z2, order);
    std::unique_lock lock(queue.mu);
    queue.cv_push.wait(lock, [&] { return queue.items.size() < Queue::kCapacity; });
    queue.items.push_back(std::move(task));
    lock.unlock();
    queue.cv_pop.notify_one();
  });
  {
    std::lock_guard lock(queue.mu);
    queue.closed = true;
  }
  queue.cv_pop.notify_all();
  for (auto& t : pool) t.join();
  return total;
}

BigCount count_top(const Bipermutation& bip, int cut, MemoTable& memo,
                   const CountOptions& options) {
  if (options.threads <= 1) {
    Counter counter{memo};
    return counter.count_below_cut(bip, cut);
  }
  return count_parallel(bip, cut, memo, options.threads);
}

}  // namespace

BigCount count_reroutings(const Bipermutation& bip, MemoTable& memo,
                          const CountOptions& options, CountStats* stats) {
  auto t0 = std::chrono::steady_clock::now();
  BigCount result;
  std::string key = canonical_key(bip);
  if (auto hit = memo.lookup(key)) {
    result = *hit;
  } else if (crossing_pairs(bip).size() <= 1) {
    result = 1;
    memo.insert(key, result);
  } else {
    result = count_top(bip, choose_cut(bip), memo, options);
    memo.insert(key, result);
  }
  if (stats) {
    auto s = memo.stats();
    stats->memo_entries = s.entries;
    stats->memo_hits = s.hits;
    stats->seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  return result;
}

BigCount count_with_cut(const Bipermutation& bip, int cut, MemoTable& memo,
                        const CountOptions& options) {
  if (crossing_pairs(bip).empty())
    fail_validation("forced cut on a crossing-free bipermutation");
  return count_top(bip, cut, memo, options);
}

}  // namespace patchcount
