#pragma once

#include <string>
#include <vector>

#include "geometry.hpp"
#include "numeric.hpp"

namespace patchcount {

struct ReducedWordClassCount {
  int n = 0;
  BigCount classes;
};

// Cyclic sequence (1..n, 1..n): every pair of segments crosses.
Bipermutation gen_complete(int n);

// The l x l three-slope square: l vertical and l horizontal grid lines plus
// the 2l-1 diagonals, with the boundary offset by fixed small rationals so
// that no crossing or vertex degeneracy touches it. Contains exactly l*l
// triple crossings.
PatchSpec gen_grid3(long l);

// Number of commutation classes of reduced words of the longest permutation
// on n elements (adjacent-transposition words; two words commute-equivalent
// when they differ by swaps of letters at distance >= 2).
ReducedWordClassCount reduced_word_classes(int n);

struct CrosscheckCase {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CrosscheckReport {
  std::vector<CrosscheckCase> cases;
  int mismatches = 0;
};

// Pits the three independent counters against each other: determinant vs
// dynamic program on the grid patches, and word classes vs dynamic program
// on complete patches.
CrosscheckReport crosscheck(int l_max, int n_max);

// Exhaustive bipermutation classes with at most max_segments segments, one
// representative per canonical form.
std::vector<Bipermutation> enumerate_bipermutation_classes(int max_segments);

// Deterministic stream of random valid patches for property checks.
std::vector<PatchSpec> random_patches(int count, int max_segments, unsigned seed);

}  // namespace patchcount
