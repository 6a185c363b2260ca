#ifndef DETLAB_FIELD_HPP
#define DETLAB_FIELD_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace detlab {

// Canonical element index in {0,...,q-1}: base-p digits are the
// coefficients of the residue polynomial, constant term first.
using Elem = std::uint32_t;

/// Arithmetic context for F_q, q = p^r, p an odd prime.
///
/// Immutable after construction; all operations are pure and the object
/// can be shared freely across threads. For q <= 256 a full q*q product
/// table is precomputed; inverse, trace and character tables are always
/// dense.
class FiniteField {
public:
  // r > 1 picks the smallest monic irreducible modulus in index order
  // (candidates ordered by sum c_i p^i over the non-leading coefficients).
  FiniteField(std::uint32_t p, std::uint32_t r);

  std::uint32_t p() const { return p_; }
  std::uint32_t r() const { return r_; }
  std::uint32_t q() const { return q_; }
  // ascending coefficients, size r+1; empty for r == 1
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem add(Elem a, Elem b) const {
    return add_table_.empty() ? add_slow(a, b)
                              : add_table_[std::size_t(a) * q_ + b];
  }
  Elem neg(Elem a) const {
    return neg_table_.empty() ? neg_slow(a) : neg_table_[a];
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    return mul_table_.empty() ? mul_slow(a, b)
                              : mul_table_[std::size_t(a) * q_ + b];
  }
  Elem inv(Elem a) const;  // throws on a == 0
  Elem pow(Elem a, std::uint64_t e) const;

  // Tr(a) = a + a^p + ... + a^{p^{r-1}}, an element of the prime subfield
  // (so the returned index is < p).
  Elem trace(Elem a) const { return trace_table_[a]; }

  // chi(a) = exp(2*pi*i*Tr(a)/p), the canonical nontrivial additive
  // character.
  std::complex<double> chi(Elem a) const { return chi_table_[a]; }

  std::string describe() const;  // "p=3 r=2 modulus=[1,0,1]"

private:
  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;
  bool is_irreducible(const std::vector<std::uint32_t>& poly) const;

  std::uint32_t p_, r_, q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> add_table_;   // empty when q > 256
  std::vector<Elem> neg_table_;
  std::vector<Elem> mul_table_;   // empty when q > 256
  std::vector<Elem> inv_table_;   // inv_table_[0] unused
  std::vector<Elem> trace_table_;
  std::vector<std::complex<double>> chi_table_;
};

}  // namespace detlab

#endif
