#ifndef DETLAB_SPECTRAL_HPP
#define DETLAB_SPECTRAL_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "detlab/detcount.hpp"
#include "detlab/matrix.hpp"

namespace detlab {

/// Fourier transform values on F_q^d, normalization
/// ghat(m) = q^{-d} sum_x g(x) chi(-x.m).
struct Spectrum {
  std::uint32_t q = 0;
  int d = 0;
  std::vector<std::complex<double>> values;  // size q^d, point index order

  // sum over all m of |ghat(m)|^2
  double power() const;
};

/// x^t B y with det(B) != 0.
struct BilinearForm {
  FqMatrix B;

  static BilinearForm dot(int d);
  bool nondegenerate(const FiniteField& F) const;
  Elem eval(const FiniteField& F, const std::vector<Elem>& x,
            const std::vector<Elem>& y) const;
};

struct IncidenceTable {
  std::vector<std::uint64_t> values;  // size q, indexed by t

  BigInt total_mass() const;
  BigInt second_moment() const;  // sum over all t of nu(t)^2
};

Spectrum fourier(const FiniteField& F, const DensityFunction& g);

// nu(t) = sum over B(x,y)=t of f(x) g(y), exact
IncidenceTable nu(const FiniteField& F, const DensityFunction& f,
                  const DensityFunction& g, const BilinearForm& B);

struct BoundReport {
  bool pass = true;
  double max_ratio = 0.0;  // max over t of lhs/rhs
  int witness_t = -1;      // failing t, or -1
  std::string lhs, rhs;    // sides at the extremal t, exact where possible
};

// |nu(t) - q^{-1}||f||_1||g||_1| <= q^{(d-1)/2}||f||_2||g||_2 for every
// t != 0. Both sides squared and compared in exact integers.
BoundReport verify_error_bound(const FiniteField& F, const DensityFunction& f,
                               const DensityFunction& g,
                               const BilinearForm& B);

// The two sides of the dot-product second-moment bound, kept separate so
// downstream chains can compare against the same right side.
struct SecondMomentBound {
  BigInt lhs;               // sum_t nu^2(t), exact
  Rational term1;           // q^{-1}||f||_2^2 |E| ||g||_1^2, exact
  double term2 = 0;         // q^{2d-1}||f||_2^2 sum_{k!=0}|ghat(k)|^2 |E cap l_k|
  double rhs() const { return term1.to_double() + term2; }
  bool holds(double guard) const {
    return lhs.convert_to<double>() <= rhs() * (1 + guard) + 1e-9;
  }
};

SecondMomentBound second_moment_bound(const FiniteField& F,
                                      const DensityFunction& f,
                                      const DensityFunction& g);

// Second-moment bound for the dot product, f(0) = 0 required:
// sum_t nu^2(t) <= q^{-1}||f||_2^2 |E| ||g||_1^2
//               + q^{2d-1}||f||_2^2 sum_{k!=0} |ghat(k)|^2 |E cap l_k|.
// The spectral term is floating point; a relative guard band keeps the
// comparison robust to rounding.
BoundReport verify_second_moment(const FiniteField& F,
                                 const DensityFunction& f,
                                 const DensityFunction& g,
                                 double guard = 1e-6);

}  // namespace detlab

#endif
