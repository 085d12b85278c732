#include "goldilocks/lp.hpp"

#include <cassert>
#include <stdexcept>

namespace goldilocks {

namespace {

using matrix = std::vector<std::vector<mpq_class>>;

// Solves square system S x = rhs by Gaussian elimination; S must be invertible.
std::vector<mpq_class> solve_square(matrix S, std::vector<mpq_class> rhs) {
  const std::size_t k = S.size();
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t piv = col;
    while (piv < k && S[piv][col] == 0) ++piv;
    if (piv >= k) throw std::logic_error("singular basis system");
    std::swap(S[piv], S[col]);
    std::swap(rhs[piv], rhs[col]);
    const mpq_class inv = 1 / S[col][col];
    for (std::size_t j = col; j < k; ++j) S[col][j] *= inv;
    rhs[col] *= inv;
    for (std::size_t r = 0; r < k; ++r) {
      if (r == col || S[r][col] == 0) continue;
      const mpq_class factor = S[r][col];
      for (std::size_t j = col; j < k; ++j) S[r][j] -= factor * S[col][j];
      rhs[r] -= factor * rhs[col];
    }
  }
  return rhs;
}

} // namespace

lp_result solve_inequalities(int dim, const std::vector<lp_row>& rows) {
  const int m = static_cast<int>(rows.size());
  lp_result result;
  if (m == 0) {
    result.feasible = true;
    result.solution.assign(dim, 0);
    return result;
  }

  // M = A^T: coordinate i of row j at M[i][j].
  matrix M(dim, std::vector<mpq_class>(m));
  for (int j = 0; j < m; ++j) {
    assert(static_cast<int>(rows[j].coeffs.size()) == dim);
    for (int i = 0; i < dim; ++i) M[i][j] = rows[j].coeffs[i];
  }

  // Row echelon over a working copy to find rank, the independent coordinate
  // rows and an initial column basis.
  std::vector<int> row_of(dim);
  for (int i = 0; i < dim; ++i) row_of[i] = i;
  std::vector<int> basis;
  {
    matrix W = M;
    int r = 0;
    for (int j = 0; j < m && r < dim; ++j) {
      int pr = -1;
      for (int i = r; i < dim; ++i) {
        if (W[i][j] != 0) {
          pr = i;
          break;
        }
      }
      if (pr < 0) continue;
      std::swap(W[pr], W[r]);
      std::swap(row_of[pr], row_of[r]);
      for (int i = r + 1; i < dim; ++i) {
        if (W[i][j] == 0) continue;
        const mpq_class factor = W[i][j] / W[r][j];
        for (int jj = j; jj < m; ++jj) W[i][jj] -= factor * W[r][jj];
      }
      basis.push_back(j);
      ++r;
    }
  }
  const int rank = static_cast<int>(basis.size());
  const std::vector<int> kept(row_of.begin(), row_of.begin() + rank);

  // Tableau B^{-1} M over the kept coordinates, basis columns reduced to
  // identity; row k owns basis[k].
  matrix T(rank, std::vector<mpq_class>(m));
  for (int k = 0; k < rank; ++k) {
    for (int j = 0; j < m; ++j) T[k][j] = M[kept[k]][j];
  }
  for (int k = 0; k < rank; ++k) {
    const int col = basis[k];
    int pr = k;
    while (pr < rank && T[pr][col] == 0) ++pr;
    if (pr >= rank) throw std::logic_error("dependent initial basis");
    std::swap(T[pr], T[k]);
    const mpq_class inv = 1 / T[k][col];
    for (int j = 0; j < m; ++j) T[k][j] *= inv;
    for (int r = 0; r < rank; ++r) {
      if (r == k || T[r][col] == 0) continue;
      const mpq_class factor = T[r][col];
      for (int j = 0; j < m; ++j) T[r][j] -= factor * T[k][j];
    }
  }

  // Reduced costs against the objective b (the rhs vector).
  std::vector<mpq_class> cbar(m);
  for (int j = 0; j < m; ++j) {
    mpq_class v = rows[j].rhs;
    for (int k = 0; k < rank; ++k) v -= rows[basis[k]].rhs * T[k][j];
    cbar[j] = v;
  }

  long iterations = 0;
  const long iteration_cap = 1L << 24;
  while (true) {
    if (++iterations > iteration_cap) {
      throw std::logic_error("simplex iteration cap exceeded");
    }
    int enter = -1;
    for (int j = 0; j < m; ++j) {
      if (cbar[j] > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) {
      // Optimal: the multipliers of the basic rows solve the inequalities.
      matrix S(rank, std::vector<mpq_class>(rank));
      std::vector<mpq_class> rhs(rank);
      for (int k = 0; k < rank; ++k) {
        for (int i = 0; i < rank; ++i) S[k][i] = rows[basis[k]].coeffs[kept[i]];
        rhs[k] = rows[basis[k]].rhs;
      }
      std::vector<mpq_class> y_kept =
          rank > 0 ? solve_square(std::move(S), std::move(rhs)) : std::vector<mpq_class>{};
      result.feasible = true;
      result.solution.assign(dim, 0);
      for (int i = 0; i < rank; ++i) result.solution[kept[i]] = y_kept[i];
      return result;
    }

    int leave = -1;
    for (int k = 0; k < rank; ++k) {
      if (T[k][enter] > 0 && (leave < 0 || basis[k] < basis[leave])) {
        leave = k;
      }
    }
    if (leave < 0) {
      // Unbounded ray: a Farkas certificate of infeasibility.
      result.feasible = false;
      result.farkas.assign(m, 0);
      result.farkas[enter] = 1;
      for (int k = 0; k < rank; ++k) {
        if (T[k][enter] != 0) result.farkas[basis[k]] = -T[k][enter];
      }
      return result;
    }

    const mpq_class inv = 1 / T[leave][enter];
    for (int j = 0; j < m; ++j) T[leave][j] *= inv;
    for (int k = 0; k < rank; ++k) {
      if (k == leave || T[k][enter] == 0) continue;
      const mpq_class factor = T[k][enter];
      for (int j = 0; j < m; ++j) T[k][j] -= factor * T[leave][j];
    }
    const mpq_class cfactor = cbar[enter];
    if (cfactor != 0) {
      for (int j = 0; j < m; ++j) cbar[j] -= cfactor * T[leave][j];
    }
    basis[leave] = enter;
  }
}

} // namespace goldilocks
