#include "lgv.hpp"

#include <random>

#include "bipermutation.hpp"
#include "doctest.h"
#include "error.hpp"
#include "geometry.hpp"
#include "numeric.hpp"
#include "oracle.hpp"

using namespace patchcount;

namespace {

LgvMatrix matrix_from(long dim, const std::vector<long>& rows) {
  LgvMatrix m;
  m.side = 0;
  m.dim = dim;
  m.entries.reserve(rows.size());
  for (long v : rows) m.entries.emplace_back(v);
  return m;
}

// independent oracle: cofactor expansion
BigCount naive_det(const std::vector<BigCount>& m, long dim) {
  if (dim == 1) return m[0];
  BigCount sum = 0;
  for (long col = 0; col < dim; ++col) {
    if (m[col] == 0) continue;
    std::vector<BigCount> minor;
    minor.reserve((dim - 1) * (dim - 1));
    for (long i = 1; i < dim; ++i)
      for (long j = 0; j < dim; ++j)
        if (j != col) minor.push_back(m[i * dim + j]);
    BigCount term = m[col] * naive_det(minor, dim - 1);
    if (col % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(3, 0) == 1);
  CHECK(binomial(2, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(5, -2) == 0);
  CHECK(binomial(60, 30) == BigCount("118264581564861424"));
}

TEST_CASE("path matrix for side 2 matches the published one") {
  LgvMatrix m = lgv_matrix(2);
  REQUIRE(m.dim == 3);
  std::vector<long> expected{2, 1, 0, 1, 6, 1, 0, 1, 2};
  for (long i = 0; i < 3; ++i)
    for (long j = 0; j < 3; ++j) CHECK(m.at(i, j) == expected[i * 3 + j]);
}

TEST_CASE("path matrix for side 1") {
  LgvMatrix m = lgv_matrix(1);
  REQUIRE(m.dim == 1);
  CHECK(m.at(0, 0) == 2);
}

TEST_CASE("path matrices are symmetric and integral up to side 64") {
  for (long l = 1; l <= 64; ++l) {
    LgvMatrix m = lgv_matrix(l);  // internal parity check runs on every entry
    for (long i = 0; i < m.dim; ++i)
      for (long j = i + 1; j < m.dim; ++j) CHECK(m.at(i, j) == m.at(j, i));
  }
}

TEST_CASE("determinant basics") {
  CHECK(determinant(matrix_from(3, {1, 0, 0, 0, 1, 0, 0, 0, 1})) == 1);
  CHECK(determinant(matrix_from(2, {2, 3, 5, 7})) == -1);
  CHECK(determinant(matrix_from(2, {0, 1, 1, 0})) == -1);  // pivot swap
  CHECK(determinant(matrix_from(2, {1, 1, 1, 1})) == 0);   // singular
  CHECK(determinant(matrix_from(3, {0, 0, 1, 0, 1, 0, 1, 0, 0})) == -1);
}

TEST_CASE("fraction-free elimination agrees with cofactor expansion") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> entry(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    long dim = 1 + trial % 5;
    LgvMatrix m;
    m.dim = dim;
    for (long i = 0; i < dim * dim; ++i) m.entries.emplace_back(entry(rng));
    CHECK(determinant(m) == naive_det(m.entries, dim));
  }
}

TEST_CASE("count for side 2 is the published 20") {
  CHECK(lgv_count(2) == 20);
}

TEST_CASE("published log2 values at side 10") {
  CHECK(log2_floor_decimal(lgv_count(10), 3) == "130.523");
}

TEST_CASE("counts grow strictly in the side length") {
  BigCount prev = 0;
  for (long l = 1; l <= 20; ++l) {
    BigCount cur = lgv_count(l);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("determinant equals the dynamic program on small grids") {
  MemoTable memo;
  for (long l = 1; l <= 3; ++l) {
    BigCount dp = count_reroutings(bipermutation_of_patch(gen_grid3(l)), memo);
    CHECK(lgv_count(l) == dp);
  }
}

TEST_CASE("side must be positive") {
  CHECK_THROWS_AS(lgv_count(0), Error);
  CHECK_THROWS_AS(PathCountProblem(-3), Error);
  CHECK(PathCountProblem(5).dimension() == 9);
}
