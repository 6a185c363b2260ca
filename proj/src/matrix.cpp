#include "detlab/matrix.hpp"

#include <stdexcept>

namespace detlab {

Elem det(const FiniteField& F, const FqMatrix& M) {
  if (M.rows != M.cols) throw std::invalid_argument("det: non-square");
  const int n = M.rows;
  if (n == 1) return M.e[0];
  if (n == 2)
    return F.sub(F.mul(M.e[0], M.e[3]), F.mul(M.e[1], M.e[2]));
  // Gaussian elimination with partial pivoting
  FqMatrix W = M;
  Elem d = 1;
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r)
      if (W.at(r, c) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != c) {
      for (int j = c; j < n; ++j) std::swap(W.at(pivot, j), W.at(c, j));
      d = F.neg(d);
    }
    const Elem pv = W.at(c, c);
    d = F.mul(d, pv);
    const Elem pinv = F.inv(pv);
    for (int r = c + 1; r < n; ++r) {
      const Elem factor = F.mul(W.at(r, c), pinv);
      if (factor == 0) continue;
      for (int j = c; j < n; ++j)
        W.at(r, j) = F.sub(W.at(r, j), F.mul(factor, W.at(c, j)));
    }
  }
  return d;
}

Elem minor_det(const FiniteField& F, const FqMatrix& M, int i) {
  const int d = M.cols;
  if (M.rows != d - 1) throw std::invalid_argument("minor_det: shape");
  if (i < 1 || i > d) throw std::out_of_range("minor_det: column index");
  FqMatrix W(d - 1, d - 1);
  for (int r = 0; r < d - 1; ++r) {
    int k = 0;
    for (int c = 0; c < d; ++c) {
      if (c == i - 1) continue;
      W.at(r, k++) = M.at(r, c);
    }
  }
  return det(F, W);
}

std::vector<Elem> cofactor_vector(const FiniteField& F, const FqMatrix& M,
                                  Convention conv) {
  const int d = M.cols;
  std::vector<Elem> v(d);
  for (int i = 1; i <= d; ++i) {
    Elem m = minor_det(F, M, i);
    const int sign = conv == Convention::alternating ? i : d + i;
    v[i - 1] = (sign % 2 != 0) ? F.neg(m) : m;
  }
  return v;
}

FqMatrix stack_row(const FqMatrix& M, const std::vector<Elem>& x) {
  if (int(x.size()) != M.cols) throw std::invalid_argument("stack_row: size");
  FqMatrix W(M.rows + 1, M.cols);
  W.e = M.e;
  W.e.insert(W.e.end(), x.begin(), x.end());
  return W;
}

std::vector<Elem> cramer_reconstruct(const FiniteField& F,
                                     const FqMatrix& minor, int i,
                                     const std::vector<Elem>& y) {
  const int dm = minor.rows;  // d-1
  const int d = dm + 1;
  if (minor.cols != dm) throw std::invalid_argument("cramer: minor shape");
  if (i < 1 || i > d) throw std::out_of_range("cramer: index");
  if (int(y.size()) != d - i + 1)
    throw std::invalid_argument("cramer: y must be (y_i,...,y_d)");
  const Elem dt = det(F, minor);
  if (dt == 0) throw std::domain_error("cramer: singular minor");
  const Elem expected = (i % 2 != 0) ? F.neg(dt) : dt;  // (-1)^i det(M_i)
  if (y[0] != expected)
    throw std::invalid_argument("cramer: y_i inconsistent with det(M_i)");
  // solve for the coordinates of m_i in the columns of M_i: moving column
  // j into the slot of column i costs (-1)^{j-i-1}, so
  // w_{j-1} = (-1)^{i+1} y_j / det(M_i) for j > i, zero below
  Elem scale = F.inv(dt);
  if (i % 2 == 0) scale = F.neg(scale);
  std::vector<Elem> w(dm, 0);
  for (int k = i + 1; k <= d; ++k) w[k - 2] = F.mul(scale, y[k - i]);
  // m_i = M_i w
  std::vector<Elem> col(dm, 0);
  for (int r = 0; r < dm; ++r) {
    Elem acc = 0;
    for (int c = 0; c < dm; ++c)
      acc = F.add(acc, F.mul(minor.at(r, c), w[c]));
    col[r] = acc;
  }
  return col;
}

std::uint64_t enumeration_total(std::size_t set_size, int m, int n,
                                std::uint64_t budget) {
  std::uint64_t total = 1;
  for (int i = 0; i < m * n; ++i) {
    if (total > budget / set_size)
      throw BudgetError("enumeration budget exceeded");
    total *= set_size;
  }
  return total;
}

void enumerate_matrices(const EntrySet& A, int m, int n, std::uint64_t begin,
                        std::uint64_t end,
                        const std::function<void(const FqMatrix&)>& visit) {
  const std::size_t k = A.size();
  const int cells = m * n;
  // decode begin into odometer state (last cell fastest)
  std::vector<std::size_t> idx(cells, 0);
  std::uint64_t t = begin;
  for (int c = cells - 1; c >= 0; --c) {
    idx[c] = t % k;
    t /= k;
  }
  FqMatrix M(m, n);
  for (int c = 0; c < cells; ++c) M.e[c] = A.members[idx[c]];
  for (std::uint64_t cur = begin; cur < end; ++cur) {
    visit(M);
    // increment odometer
    for (int c = cells - 1; c >= 0; --c) {
      if (++idx[c] < k) {
        M.e[c] = A.members[idx[c]];
        break;
      }
      idx[c] = 0;
      M.e[c] = A.members[0];
    }
  }
}

}  // namespace detlab
