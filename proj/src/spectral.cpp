#include "detlab/spectral.hpp"

#include <cmath>
#include <stdexcept>

namespace detlab {

double Spectrum::power() const {
  double s = 0;
  for (const auto& v : values) s += std::norm(v);
  return s;
}

BilinearForm BilinearForm::dot(int d) {
  FqMatrix I(d, d);
  for (int i = 0; i < d; ++i) I.at(i, i) = 1;
  return {I};
}

bool BilinearForm::nondegenerate(const FiniteField& F) const {
  return det(F, B) != 0;
}

Elem BilinearForm::eval(const FiniteField& F, const std::vector<Elem>& x,
                        const std::vector<Elem>& y) const {
  const int d = B.rows;
  Elem acc = 0;
  for (int i = 0; i < d; ++i) {
    if (x[i] == 0) continue;
    Elem row = 0;
    for (int j = 0; j < d; ++j) row = F.add(row, F.mul(B.at(i, j), y[j]));
    acc = F.add(acc, F.mul(x[i], row));
  }
  return acc;
}

BigInt IncidenceTable::total_mass() const {
  BigInt s = 0;
  for (auto v : values) s += v;
  return s;
}

BigInt IncidenceTable::second_moment() const {
  BigInt s = 0;
  for (auto v : values) s += BigInt(v) * v;
  return s;
}

Spectrum fourier(const FiniteField& F, const DensityFunction& g) {
  const std::uint32_t q = F.q();
  const int d = g.dim();
  const std::uint64_t n = g.domain_size();
  if (n > (1ULL << 24)) throw BudgetError("transform domain too large");

  // kernel W[m][x] = chi(-x m)
  std::vector<std::complex<double>> W(std::size_t(q) * q);
  for (std::uint32_t m = 0; m < q; ++m)
    for (std::uint32_t x = 0; x < q; ++x)
      W[std::size_t(m) * q + x] = F.chi(F.neg(F.mul(x, m)));

  Spectrum out{q, d, std::vector<std::complex<double>>(n)};
  for (std::uint64_t i = 0; i < n; ++i)
    out.values[i] = double(g.at(i));

  // one axis at a time; coordinate i has stride q^i
  std::vector<std::complex<double>> line(q), tmp(q);
  std::uint64_t stride = 1;
  for (int axis = 0; axis < d; ++axis) {
    const std::uint64_t block = stride * q;
    for (std::uint64_t base = 0; base < n; base += block) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        for (std::uint32_t x = 0; x < q; ++x)
          line[x] = out.values[base + off + stride * x];
        for (std::uint32_t m = 0; m < q; ++m) {
          std::complex<double> acc = 0;
          const std::complex<double>* row = &W[std::size_t(m) * q];
          for (std::uint32_t x = 0; x < q; ++x) acc += row[x] * line[x];
          tmp[m] = acc;
        }
        for (std::uint32_t m = 0; m < q; ++m)
          out.values[base + off + stride * m] = tmp[m];
      }
    }
    stride = block;
  }

  const double scale = std::pow(double(q), -d);
  for (auto& v : out.values) v *= scale;
  return out;
}

IncidenceTable nu(const FiniteField& F, const DensityFunction& f,
                  const DensityFunction& g, const BilinearForm& B) {
  if (f.dim() != g.dim() || B.B.rows != f.dim())
    throw std::invalid_argument("nu: dimension mismatch");
  if (!B.nondegenerate(F)) throw std::invalid_argument("nu: degenerate form");
  const std::uint32_t q = F.q();
  const int d = f.dim();
  IncidenceTable out{std::vector<std::uint64_t>(q, 0)};
  const auto sf = f.support();
  const auto sg = g.support();
  // decode f's support once
  std::vector<Elem> fx(sf.size() * d);
  for (std::size_t s = 0; s < sf.size(); ++s) {
    const auto x = DensityFunction::point_coords(sf[s].first, q, d);
    std::copy(x.begin(), x.end(), fx.begin() + s * d);
  }
  std::vector<Elem> By(d);
  for (const auto& [yi, gv] : sg) {
    const auto y = DensityFunction::point_coords(yi, q, d);
    for (int i = 0; i < d; ++i) {
      Elem acc = 0;
      for (int j = 0; j < d; ++j) acc = F.add(acc, F.mul(B.B.at(i, j), y[j]));
      By[i] = acc;
    }
    for (std::size_t s = 0; s < sf.size(); ++s) {
      const Elem* x = &fx[s * d];
      Elem t = 0;
      for (int i = 0; i < d; ++i) t = F.add(t, F.mul(x[i], By[i]));
      out.values[t] += sf[s].second * gv;
    }
  }
  return out;
}

BoundReport verify_error_bound(const FiniteField& F, const DensityFunction& f,
                               const DensityFunction& g,
                               const BilinearForm& B) {
  const std::uint32_t q = F.q();
  const int d = f.dim();
  const IncidenceTable table = nu(F, f, g, B);
  const BigInt mass = f.norm1() * g.norm1();
  // (q R(t))^2 <= q^2 q^{d-1} ||f||_2^2 ||g||_2^2, all integers
  BigInt rhs_sq = f.norm2_squared() * g.norm2_squared();
  for (int i = 0; i < d + 1; ++i) rhs_sq *= q;

  BoundReport rep;
  const double rhs_root = sqrt(rhs_sq.convert_to<double>());
  for (std::uint32_t t = 1; t < q; ++t) {
    BigInt num = BigInt(table.values[t]) * q - mass;  // q R(t)
    if (num < 0) num = -num;
    const double ratio =
        rhs_root > 0 ? num.convert_to<double>() / rhs_root
                     : (num == 0 ? 0.0 : std::numeric_limits<double>::infinity());
    if (ratio > rep.max_ratio || rep.lhs.empty()) {
      rep.max_ratio = ratio;
      rep.lhs = num.str() + "^2";
      rep.rhs = rhs_sq.str();
    }
    if (num * num > rhs_sq) {
      rep.pass = false;
      rep.witness_t = int(t);
      rep.lhs = num.str() + "^2";
      rep.rhs = rhs_sq.str();
      return rep;
    }
  }
  return rep;
}

SecondMomentBound second_moment_bound(const FiniteField& F,
                                      const DensityFunction& f,
                                      const DensityFunction& g) {
  if (f.at(0) != 0)
    throw std::invalid_argument("second moment bound requires f(0) = 0");
  const std::uint32_t q = F.q();
  const int d = f.dim();
  const IncidenceTable table = nu(F, f, g, BilinearForm::dot(d));

  SecondMomentBound out;
  out.lhs = table.second_moment();

  const auto sf = f.support();
  const BigInt f2 = f.norm2_squared();
  const BigInt g1 = g.norm1();
  out.term1 = Rational{f2 * BigInt(sf.size()) * g1 * g1, BigInt(q)};

  const Spectrum ghat = fourier(F, g);
  double spectral = 0;
  std::vector<Elem> pt(d);
  for (std::uint64_t k = 1; k < ghat.values.size(); ++k) {
    const double w = std::norm(ghat.values[k]);
    if (w == 0) continue;
    const auto kc = DensityFunction::point_coords(k, q, d);
    int line_hits = 0;  // |E cap l_k|
    for (std::uint32_t t = 1; t < q; ++t) {
      for (int i = 0; i < d; ++i) pt[i] = F.mul(t, kc[i]);
      if (f.at(DensityFunction::point_index(pt, q)) != 0) ++line_hits;
    }
    spectral += w * line_hits;
  }
  double factor = f2.convert_to<double>();
  for (int i = 0; i < 2 * d - 1; ++i) factor *= q;
  out.term2 = factor * spectral;
  return out;
}

BoundReport verify_second_moment(const FiniteField& F,
                                 const DensityFunction& f,
                                 const DensityFunction& g, double guard) {
  const SecondMomentBound b = second_moment_bound(F, f, g);
  BoundReport rep;
  rep.lhs = b.lhs.str();
  rep.rhs = std::to_string(b.rhs());
  const double lhsd = b.lhs.convert_to<double>();
  rep.max_ratio = b.rhs() > 0 ? lhsd / b.rhs() : (lhsd == 0 ? 0.0 : 1e300);
  if (!b.holds(guard)) {
    rep.pass = false;
    rep.witness_t = 0;
  }
  return rep;
}

}  // namespace detlab
