#include "oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <unordered_map>

#include "bipermutation.hpp"
#include "error.hpp"
#include "lgv.hpp"

namespace patchcount {

Bipermutation gen_complete(int n) {
  if (n < 1) fail_validation("gen_complete needs n >= 1");
  std::vector<int> seq;
  seq.reserve(2 * n);
  for (int round = 0; round < 2; ++round)
    for (int i = 1; i <= n; ++i) seq.push_back(i);
  return Bipermutation(std::move(seq));
}

PatchSpec gen_grid3(long l) {
  if (l < 1) fail_validation("gen_grid3 needs l >= 1");
  std::vector<LineEq> lines;
  for (long i = 1; i <= l; ++i)
    lines.push_back(LineEq::from_rationals(1, 0, Rational(i)));
  for (long j = 1; j <= l; ++j)
    lines.push_back(LineEq::from_rationals(0, 1, Rational(j)));
  for (long c = 2; c <= 2 * l; ++c)
    lines.push_back(LineEq::from_rationals(1, 1, Rational(c)));

  // Asymmetric offsets keep every crossing (all at integer points) and the
  // corner diagonals away from the boundary.
  Rational x0(1, 3), x1 = Rational(l) + Rational(2, 3);
  Rational y0(1, 4), y1 = Rational(l) + Rational(3, 4);
  PolygonBoundary boundary;
  boundary.vertices = {Point{x0, y0}, Point{x1, y0}, Point{x1, y1}, Point{x0, y1}};
  return make_patch(std::move(lines), std::move(boundary));
}

namespace {

// Reduced words of the longest permutation, packed 3 bits per letter.
// n <= 6 keeps every word within one 64-bit value (15 letters максимум).
void enumerate_words(std::vector<int>& perm, int depth, int total,
                     std::uint64_t packed, std::vector<std::uint64_t>& out) {
  if (depth == total) {
    out.push_back(packed);
    return;
  }
  const int n = static_cast<int>(perm.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (perm[i] > perm[i + 1]) {
      std::swap(perm[i], perm[i + 1]);
      enumerate_words(perm, depth + 1, total,
                      packed | (std::uint64_t(i + 1) << (3 * depth)), out);
      std::swap(perm[i], perm[i + 1]);
    }
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[a] = b;
  }
};

}  // namespace

ReducedWordClassCount reduced_word_classes(int n) {
  if (n < 2 || n > 6)
    fail_validation("reduced_word_classes supports 2 <= n <= 6");
  const int total = n * (n - 1) / 2;

  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = n - i;
  std::vector<std::uint64_t> words;
  enumerate_words(perm, 0, total, 0, words);

  std::sort(words.begin(), words.end());
  auto index_of = [&](std::uint64_t w) {
    return static_cast<int>(std::lower_bound(words.begin(), words.end(), w) -
                            words.begin());
  };

  UnionFind uf(words.size());
  for (size_t wi = 0; wi < words.size(); ++wi) {
    std::uint64_t w = words[wi];
    for (int p = 0; p + 1 < total; ++p) {
      int a = static_cast<int>((w >> (3 * p)) & 7);
      int b = static_cast<int>((w >> (3 * (p + 1))) & 7);
      if (std::abs(a - b) < 2) continue;
      std::uint64_t swapped = w & ~((std::uint64_t(63)) << (3 * p));
      swapped |= (std::uint64_t(b) << (3 * p)) | (std::uint64_t(a) << (3 * (p + 1)));
      uf.unite(static_cast<int>(wi), index_of(swapped));
    }
  }

  std::set<int> roots;
  for (size_t wi = 0; wi < words.size(); ++wi)
    roots.insert(uf.find(static_cast<int>(wi)));

  ReducedWordClassCount out;
  out.n = n;
  out.classes = static_cast<unsigned long>(roots.size());
  return out;
}

CrosscheckReport crosscheck(int l_max, int n_max) {
  CrosscheckReport report;
  MemoTable memo;

  for (int l = 1; l <= l_max; ++l) {
    BigCount via_det = lgv_count(l);
    BigCount via_dp = count_reroutings(bipermutation_of_patch(gen_grid3(l)), memo);
    CrosscheckCase c;
    c.name = "grid3 l=" + std::to_string(l);
    c.pass = via_det == via_dp;
    c.detail = "determinant=" + via_det.get_str() + " dp=" + via_dp.get_str();
    if (!c.pass) ++report.mismatches;
    report.cases.push_back(std::move(c));
  }

  for (int n = 2; n <= n_max; ++n) {
    BigCount via_words = reduced_word_classes(n).classes;
    BigCount via_dp = count_reroutings(gen_complete(n), memo);
    CrosscheckCase c;
    c.name = "complete n=" + std::to_string(n);
    c.pass = via_words == via_dp;
    c.detail = "word-classes=" + via_words.get_str() + " dp=" + via_dp.get_str();
    if (!c.pass) ++report.mismatches;
    report.cases.push_back(std::move(c));
  }
  return report;
}

std::vector<Bipermutation> enumerate_bipermutation_classes(int max_segments) {
  std::vector<Bipermutation> classes;
  std::set<std::string> seen;

  // all perfect matchings of the 2s boundary points, labels in
  // first-occurrence order
  std::vector<int> seq;
  auto recurse = [&](auto&& self, int next_label) -> void {
    size_t first_free = 0;
    while (first_free < seq.size() && seq[first_free] != 0) ++first_free;
    if (first_free == seq.size()) {
      Bipermutation bip{seq};
      std::string key = canonical_key(bip);
      if (seen.insert(key).second) classes.push_back(std::move(bip));
      return;
    }
    seq[first_free] = next_label;
    for (size_t other = first_free + 1; other < seq.size(); ++other) {
      if (seq[other] != 0) continue;
      seq[other] = next_label;
      self(self, next_label + 1);
      seq[other] = 0;
    }
    seq[first_free] = 0;
  };

  for (int s = 1; s <= max_segments; ++s) {
    seq.assign(2 * s, 0);
    recurse(recurse, 1);
  }
  return classes;
}

std::vector<PatchSpec> random_patches(int count, int max_segments, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<PatchSpec> out;

  // unit square and a U-shaped hexagon; the latter produces lines with
  // several interior components
  PolygonBoundary square;
  square.vertices = {Point{Rational(0), Rational(0)}, Point{Rational(12), Rational(0)},
                     Point{Rational(12), Rational(12)}, Point{Rational(0), Rational(12)}};
  PolygonBoundary ushape;
  ushape.vertices = {Point{Rational(0), Rational(0)}, Point{Rational(12), Rational(0)},
                     Point{Rational(12), Rational(12)}, Point{Rational(8), Rational(12)},
                     Point{Rational(8), Rational(5)},  Point{Rational(4), Rational(5)},
                     Point{Rational(4), Rational(12)}, Point{Rational(0), Rational(12)}};

  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> offs_num(-40, 40);
  std::uniform_int_distribution<int> offs_den(3, 7);
  std::uniform_int_distribution<int> nlines(2, 6);
  std::uniform_int_distribution<int> shape(0, 3);

  while (static_cast<int>(out.size()) < count) {
    const PolygonBoundary& boundary = shape(rng) == 0 ? ushape : square;
    int n = nlines(rng);
    std::vector<LineEq> lines;
    bool bad = false;
    for (int i = 0; i < n && !bad; ++i) {
      int a = coeff(rng), b = coeff(rng);
      if (a == 0 && b == 0) {
        bad = true;
        break;
      }
      // lines passing near the region center plus a rational offset
      Rational offset(offs_num(rng), offs_den(rng));
      offset.canonicalize();
      Rational c = Rational(6 * (a + b)) + offset;
      lines.push_back(LineEq::from_rationals(Rational(a), Rational(b), c));
    }
    if (bad) continue;
    try {
      PatchSpec patch = make_patch(std::move(lines), boundary);
      int segments = static_cast<int>(segments_of_patch(patch).size());
      if (segments < 2 || segments > max_segments) continue;
      out.push_back(std::move(patch));
    } catch (const Error&) {
      continue;  // rejected sample
    }
  }
  return out;
}

}  // namespace patchcount
