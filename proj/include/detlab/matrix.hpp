#ifndef DETLAB_MATRIX_HPP
#define DETLAB_MATRIX_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "detlab/entryset.hpp"
#include "detlab/field.hpp"

namespace detlab {

/// Dense row-major matrix over F_q. Plain value type.
struct FqMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Elem> e;

  FqMatrix() = default;
  FqMatrix(int m, int n) : rows(m), cols(n), e(std::size_t(m) * n, 0) {}

  Elem& at(int i, int j) { return e[std::size_t(i) * cols + j]; }
  Elem at(int i, int j) const { return e[std::size_t(i) * cols + j]; }
};

Elem det(const FiniteField& F, const FqMatrix& M);

// det of the (d-1)x(d-1) minor of a (d-1)xd matrix with column i deleted;
// i is 1-based to match the sign conventions below
Elem minor_det(const FiniteField& F, const FqMatrix& M, int i);

// Sign convention for the vector of maximal minors of a (d-1)xd matrix.
// alternating: v_i = (-1)^i     det(M_i)
// laplace:     v_i = (-1)^{d+i} det(M_i)  so that x . v = det(stack(M, x))
// with x appended as the last row. The two differ by the factor (-1)^d.
enum class Convention { alternating, laplace };

std::vector<Elem> cofactor_vector(const FiniteField& F, const FqMatrix& M,
                                  Convention conv);

// append x as the last row
FqMatrix stack_row(const FqMatrix& M, const std::vector<Elem>& x);

// Unique column m_i with signed-minor vector (0,..,0,y_i,..,y_d), given
// the nonsingular minor M_i and y = (y_i,...,y_d) in the alternating
// convention. Throws if det(M_i) = 0 or y_i != (-1)^i det(M_i).
std::vector<Elem> cramer_reconstruct(const FiniteField& F,
                                     const FqMatrix& minor, int i,
                                     const std::vector<Elem>& y);

struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// |A|^{m n} as uint64; throws BudgetError when it exceeds budget
std::uint64_t enumeration_total(std::size_t set_size, int m, int n,
                                std::uint64_t budget);

// Visit matrices with indices [begin, end) of the odometer order over
// A's canonical ordering (last entry fastest). Sub-ranges partition the
// stream for parallel workers.
void enumerate_matrices(const EntrySet& A, int m, int n, std::uint64_t begin,
                        std::uint64_t end,
                        const std::function<void(const FqMatrix&)>& visit);

}  // namespace detlab

#endif
