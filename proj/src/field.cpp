#include "detlab/field.hpp"

#include <numbers>
#include <stdexcept>

namespace detlab {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// index <-> coefficient vector (constant term first), length r
std::vector<std::uint32_t> digits_of(Elem a, std::uint32_t p, std::uint32_t r) {
  std::vector<std::uint32_t> d(r);
  for (std::uint32_t i = 0; i < r; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

Elem index_of(const std::vector<std::uint32_t>& d, std::uint32_t p,
              std::uint32_t r) {
  Elem a = 0;
  for (std::uint32_t i = r; i-- > 0;) a = a * p + d[i];
  return a;
}

// polynomial arithmetic over F_p, coefficients ascending, no leading-zero
// trimming required by callers
std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                    const std::vector<std::uint32_t>& m,
                                    std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    std::uint32_t lead = a.back();
    if (lead != 0) {
      const std::size_t shift = a.size() - 1 - dm;
      for (std::size_t i = 0; i <= dm; ++i) {
        std::uint64_t v = std::uint64_t(lead) * m[i] % p;
        a[shift + i] = std::uint32_t((a[shift + i] + p - v) % p);
      }
    }
    a.pop_back();
  }
  return a;
}

std::vector<std::uint32_t> poly_mulmod(const std::vector<std::uint32_t>& a,
                                       const std::vector<std::uint32_t>& b,
                                       const std::vector<std::uint32_t>& m,
                                       std::uint32_t p) {
  std::vector<std::uint32_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] = std::uint32_t((c[i + j] + std::uint64_t(a[i]) * b[j]) % p);
  }
  return poly_mod(std::move(c), m, p);
}

}  // namespace

bool FiniteField::is_irreducible(const std::vector<std::uint32_t>& poly) const {
  // trial division by every monic polynomial of degree 1..deg/2
  const std::uint32_t deg = std::uint32_t(poly.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < d; ++i) count *= p_;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> div(d + 1);
      std::uint64_t t = idx;
      for (std::uint32_t i = 0; i < d; ++i) {
        div[i] = std::uint32_t(t % p_);
        t /= p_;
      }
      div[d] = 1;
      // remainder of poly mod div
      std::vector<std::uint32_t> rem = poly;
      while (rem.size() > d) {
        std::uint32_t lead = rem.back();
        if (lead != 0) {
          const std::size_t shift = rem.size() - 1 - d;
          for (std::size_t i = 0; i <= d; ++i) {
            std::uint64_t v = std::uint64_t(lead) * div[i] % p_;
            rem[shift + i] = std::uint32_t((rem[shift + i] + p_ - v) % p_);
          }
        }
        rem.pop_back();
      }
      bool zero = true;
      for (std::uint32_t c : rem)
        if (c != 0) zero = false;
      if (zero) return false;
    }
  }
  return true;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t r) : p_(p), r_(r) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime");
  if (p == 2) throw std::invalid_argument("p must be odd");
  if (r < 1) throw std::invalid_argument("r must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < r; ++i) {
    q *= p;
    if (q > (1ULL << 24)) throw std::invalid_argument("p^r too large");
  }
  q_ = std::uint32_t(q);

  if (r_ > 1) {
    // smallest monic irreducible of degree r in index order
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < r_; ++i) count *= p_;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      std::vector<std::uint32_t> cand(r_ + 1);
      std::uint64_t t = idx;
      for (std::uint32_t i = 0; i < r_; ++i) {
        cand[i] = std::uint32_t(t % p_);
        t /= p_;
      }
      cand[r_] = 1;
      if (is_irreducible(cand)) {
        modulus_ = cand;
        break;
      }
    }
    if (modulus_.empty())
      throw std::logic_error("no irreducible modulus found");
  }

  if (q_ <= 256) {
    mul_table_.resize(std::size_t(q_) * q_);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b)
        mul_table_[std::size_t(a) * q_ + b] = mul_slow(a, b);
    add_table_.resize(std::size_t(q_) * q_);
    for (Elem a = 0; a < q_; ++a)
      for (Elem b = 0; b < q_; ++b)
        add_table_[std::size_t(a) * q_ + b] = add_slow(a, b);
    neg_table_.resize(q_);
    for (Elem a = 0; a < q_; ++a) neg_table_[a] = neg_slow(a);
  }

  inv_table_.assign(q_, 0);
  for (Elem a = 1; a < q_; ++a) inv_table_[a] = pow(a, q_ - 2);

  trace_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    Elem acc = 0, frob = a;
    for (std::uint32_t k = 0; k < r_; ++k) {
      acc = add(acc, frob);
      frob = pow(frob, p_);
    }
    trace_table_[a] = acc;  // lies in the prime subfield, index < p
  }

  chi_table_.resize(q_);
  for (Elem a = 0; a < q_; ++a) {
    const double angle = 2.0 * std::numbers::pi * trace_table_[a] / p_;
    chi_table_[a] = {std::cos(angle), std::sin(angle)};
  }
}

Elem FiniteField::add_slow(Elem a, Elem b) const {
  if (r_ == 1) return (a + b) % p_;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    out += (a % p_ + b % p_) % p_ * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem FiniteField::neg_slow(Elem a) const {
  if (r_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0, scale = 1;
  for (std::uint32_t i = 0; i < r_; ++i) {
    Elem d = a % p_;
    out += (d == 0 ? 0 : p_ - d) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Elem FiniteField::mul_slow(Elem a, Elem b) const {
  if (r_ == 1) return Elem(std::uint64_t(a) * b % p_);
  auto prod = poly_mulmod(digits_of(a, p_, r_), digits_of(b, p_, r_),
                          modulus_, p_);
  prod.resize(r_, 0);
  return index_of(prod, p_, r_);
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem out = 1, base = a;
  while (e) {
    if (e & 1) out = mul(out, base);
    base = mul(base, base);
    e >>= 1;
  }
  return out;
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inv(0)");
  return inv_table_[a];
}

std::string FiniteField::describe() const {
  std::string s = "p=" + std::to_string(p_) + " r=" + std::to_string(r_);
  if (!modulus_.empty()) {
    s += " modulus=[";
    for (std::size_t i = 0; i < modulus_.size(); ++i)
      s += (i ? "," : "") + std::to_string(modulus_[i]);
    s += "]";
  }
  return s;
}

}  // namespace detlab
