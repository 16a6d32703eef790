#include "lgv.hpp"

#include <cstdlib>
#include <thread>

#include "error.hpp"

namespace patchcount {

PathCountProblem::PathCountProblem(long l) : side(l) {
  if (l < 1) fail_validation("side must be at least 1");
}

BigCount binomial(long long n, long long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return out;
}

LgvMatrix lgv_matrix(const PathCountProblem& problem) {
  const long l = problem.side;
  const long d = problem.dimension();
  LgvMatrix m;
  m.side = l;
  m.dim = d;
  m.entries.resize(static_cast<size_t>(d) * d);
  for (long i = 1; i <= d; ++i) {
    for (long j = i; j <= d; ++j) {
      long top = 2 * l - std::labs(l - i) - std::labs(l - j);
      long num = top + 3 * std::labs(i - j);
      if (num % 2 != 0) fail_internal("odd binomial index in path matrix");
      BigCount value = binomial(top, num / 2);
      m.at(i - 1, j - 1) = value;
      m.at(j - 1, i - 1) = value;  // symmetric by construction
    }
  }
  return m;
}

LgvMatrix lgv_matrix(long side) { return lgv_matrix(PathCountProblem(side)); }

namespace {

// One fraction-free update sweep for rows [row_begin, row_end) at pivot k.
void eliminate_rows(std::vector<BigCount>& m, long dim, long k,
                    const BigCount& pivot, const BigCount& prev, long row_begin,
                    long row_end) {
  mpz_class tmp;
  for (long i = row_begin; i < row_end; ++i) {
    BigCount* row = &m[static_cast<size_t>(i) * dim];
    const BigCount* pivot_row = &m[static_cast<size_t>(k) * dim];
    const BigCount& factor = row[k];
    for (long j = k + 1; j < dim; ++j) {
      BigCount& cell = row[j];
      if (factor == 0) {
        if (cell == 0) continue;
        mpz_mul(cell.get_mpz_t(), cell.get_mpz_t(), pivot.get_mpz_t());
      } else {
        mpz_mul(tmp.get_mpz_t(), cell.get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), factor.get_mpz_t(), pivot_row[j].get_mpz_t());
        mpz_swap(cell.get_mpz_t(), tmp.get_mpz_t());
      }
      if (prev != 1)
        mpz_divexact(cell.get_mpz_t(), cell.get_mpz_t(), prev.get_mpz_t());
    }
  }
}

}  // namespace

BigCount determinant(const LgvMatrix& matrix) {
  const long d = matrix.dim;
  if (d == 0) return 1;
  std::vector<BigCount> m = matrix.entries;

  unsigned hw = std::thread::hardware_concurrency();
  const long workers = std::max(1L, std::min<long>(hw ? hw : 1, 4));

  int sign = 1;
  BigCount prev = 1;
  for (long k = 0; k + 1 < d; ++k) {
    if (m[static_cast<size_t>(k) * d + k] == 0) {
      long swap_row = -1;
      for (long r = k + 1; r < d; ++r) {
        if (m[static_cast<size_t>(r) * d + k] != 0) {
          swap_row = r;
          break;
        }
      }
      if (swap_row < 0) return 0;  // singular
      for (long j = 0; j < d; ++j)
        mpz_swap(m[static_cast<size_t>(k) * d + j].get_mpz_t(),
                 m[static_cast<size_t>(swap_row) * d + j].get_mpz_t());
      sign = -sign;
    }
    BigCount pivot = m[static_cast<size_t>(k) * d + k];

    const long rows = d - (k + 1);
    if (workers > 1 && rows >= 32) {
      std::vector<std::thread> pool;
      long chunk = (rows + workers - 1) / workers;
      for (long w = 0; w < workers; ++w) {
        long begin = k + 1 + w * chunk;
        long end = std::min(d, begin + chunk);
        if (begin >= end) break;
        pool.emplace_back(eliminate_rows, std::ref(m), d, k, std::cref(pivot),
                          std::cref(prev), begin, end);
      }
      for (auto& t : pool) t.join();
    } else {
      eliminate_rows(m, d, k, pivot, prev, k + 1, d);
    }
    prev = pivot;
  }
  BigCount det = m[static_cast<size_t>(d - 1) * d + (d - 1)];
  if (sign < 0) det = -det;
  return det;
}

BigCount lgv_count(long side) {
  BigCount det = determinant(lgv_matrix(side));
  if (det <= 0) fail_internal("path matrix determinant is not positive");
  return det;
}

}  // namespace patchcount
