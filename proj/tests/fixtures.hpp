#ifndef QG_TESTS_FIXTURES_HPP
#define QG_TESTS_FIXTURES_HPP

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include "qg/perm.hpp"
#include "qg/quasigroup.hpp"

namespace fixtures {

// Order-6 loop with middle nucleus {0,1} (the non-normal-nucleus example).
inline qg::Quasigroup paper6() {
  return qg::Quasigroup::validate(6, {{0, 1, 2, 3, 4, 5},
                                      {1, 0, 3, 2, 5, 4},
                                      {2, 4, 1, 5, 3, 0},
                                      {3, 5, 4, 0, 2, 1},
                                      {4, 2, 5, 1, 0, 3},
                                      {5, 3, 0, 4, 1, 2}});
}

// Order-5 loop with trivial Aut and Avt isomorphic to A4 (paper labels 1..5,
// shifted to 0..4).
inline qg::Quasigroup paper5() {
  return qg::Quasigroup::validate(5, {{0, 1, 2, 3, 4},
                                      {1, 2, 0, 4, 3},
                                      {2, 3, 4, 0, 1},
                                      {3, 4, 1, 2, 0},
                                      {4, 0, 3, 1, 2}});
}

inline qg::Quasigroup z2xz2() {
  return qg::Quasigroup::validate(4, {{0, 1, 2, 3},
                                      {1, 0, 3, 2},
                                      {2, 3, 0, 1},
                                      {3, 2, 1, 0}});
}

// Linear quasigroup x*y = (a x + b y + c) mod n; a, b must be units.
inline qg::Quasigroup linear(unsigned n, unsigned a, unsigned b, unsigned c = 0) {
  std::vector<std::vector<unsigned>> grid(n, std::vector<unsigned>(n));
  for (unsigned x = 0; x < n; ++x)
    for (unsigned y = 0; y < n; ++y)
      grid[x][y] = (a * x + b * y + c) % n;
  return qg::Quasigroup::validate(n, grid);
}

// Cayley table of S3 on {0..5}: element i is a permutation of {0,1,2},
// product is left-record composition.
inline qg::Quasigroup s3_table() {
  std::vector<qg::Perm> elems;
  std::vector<unsigned> img{0, 1, 2};
  do {
    elems.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  unsigned n = static_cast<unsigned>(elems.size());
  std::vector<std::vector<unsigned>> grid(n, std::vector<unsigned>(n));
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j) {
      qg::Perm prod = qg::compose(elems[i], elems[j]);
      for (unsigned k = 0; k < n; ++k)
        if (elems[k] == prod) { grid[i][j] = k; break; }
    }
  return qg::Quasigroup::validate(n, grid);
}

// Totally symmetric order-3 quasigroup x*y = -x-y mod 3.
inline qg::Quasigroup ts3() {
  return linear(3, 2, 2, 0);
}

// Uniform-ish random Latin square by randomized row-by-row backtracking.
class LatinSquareGen {
public:
  explicit LatinSquareGen(unsigned seed) : rng_(seed) {}

  qg::Quasigroup random(unsigned n) {
    std::vector<std::vector<unsigned>> grid;
    while (!fill(n, grid)) grid.clear();
    return qg::Quasigroup::validate(n, grid);
  }

  qg::Perm random_perm(unsigned n) {
    std::vector<unsigned> img(n);
    for (unsigned i = 0; i < n; ++i) img[i] = i;
    std::shuffle(img.begin(), img.end(), rng_);
    return qg::Perm(img);
  }

  unsigned pick(unsigned bound) {  // uniform in [0, bound)
    return std::uniform_int_distribution<unsigned>(0, bound - 1)(rng_);
  }

private:
  bool fill(unsigned n, std::vector<std::vector<unsigned>>& grid) {
    std::vector<std::vector<bool>> col_used(n, std::vector<bool>(n, false));
    for (unsigned x = 0; x < n; ++x) {
      std::vector<unsigned> row;
      if (!fill_row(n, col_used, row, 0))
        return false;  // dead end: restart from scratch
      for (unsigned y = 0; y < n; ++y) col_used[y][row[y]] = true;
      grid.push_back(std::move(row));
    }
    return true;
  }

  bool fill_row(unsigned n, const std::vector<std::vector<bool>>& col_used,
                std::vector<unsigned>& row, unsigned y) {
    if (y == n) return true;
    std::vector<unsigned> candidates;
    for (unsigned v = 0; v < n; ++v) {
      if (col_used[y][v]) continue;
      bool in_row = false;
      for (unsigned u : row)
        if (u == v) { in_row = true; break; }
      if (!in_row) candidates.push_back(v);
    }
    std::shuffle(candidates.begin(), candidates.end(), rng_);
    for (unsigned v : candidates) {
      row.push_back(v);
      if (fill_row(n, col_used, row, y + 1)) return true;
      row.pop_back();
    }
    return false;
  }

  std::mt19937 rng_;
};

// Enumerates every Latin square of order n (576 at n = 4).
inline void for_each_latin_square(unsigned n,
                                  const std::function<void(const qg::Quasigroup&)>& fn) {
  std::vector<std::vector<unsigned>> grid(n, std::vector<unsigned>(n, 0));
  std::vector<std::vector<bool>> row_used(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> col_used(n, std::vector<bool>(n, false));
  std::function<void(unsigned)> rec = [&](unsigned cell) {
    if (cell == n * n) {
      fn(qg::Quasigroup::validate(n, grid));
      return;
    }
    unsigned x = cell / n, y = cell % n;
    for (unsigned v = 0; v < n; ++v) {
      if (row_used[x][v] || col_used[y][v]) continue;
      row_used[x][v] = col_used[y][v] = true;
      grid[x][y] = v;
      rec(cell + 1);
      row_used[x][v] = col_used[y][v] = false;
    }
  };
  rec(0);
}

}  // namespace fixtures

#endif
