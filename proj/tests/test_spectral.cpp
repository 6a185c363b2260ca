#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "detlab/rng.hpp"
#include "detlab/spectral.hpp"

using namespace detlab;

namespace {

DensityFunction random_density(const FiniteField& F, int d, SplitMix64& rng,
                               bool puncture_origin = false) {
  DensityFunction g(F.q(), d);
  for (std::uint64_t i = 0; i < g.domain_size(); ++i)
    if (rng.below(2) == 0) g.add(i, 1 + rng.below(3));
  if (puncture_origin) g.clear_at(0);
  return g;
}

// O(q^{2d}) reference for nu
IncidenceTable nu_oracle(const FiniteField& F, const DensityFunction& f,
                         const DensityFunction& g, const BilinearForm& B) {
  IncidenceTable out;
  out.values.assign(F.q(), 0);
  for (std::uint64_t xi = 0; xi < f.domain_size(); ++xi) {
    if (f.at(xi) == 0) continue;
    const auto x = DensityFunction::point_coords(xi, F.q(), f.dim());
    for (std::uint64_t yi = 0; yi < g.domain_size(); ++yi) {
      if (g.at(yi) == 0) continue;
      const auto y = DensityFunction::point_coords(yi, F.q(), g.dim());
      out.values[B.eval(F, x, y)] += f.at(xi) * g.at(yi);
    }
  }
  return out;
}

}  // namespace

TEST_CASE("point indexing round-trips") {
  const std::uint32_t q = 5;
  for (std::uint64_t idx = 0; idx < 125; ++idx) {
    const auto x = DensityFunction::point_coords(idx, q, 3);
    CHECK(DensityFunction::point_index(x, q) == idx);
  }
  CHECK(DensityFunction::point_index({2, 1}, 5) == 7);
}

TEST_CASE("fourier basics") {
  const FiniteField F(5, 1);

  // delta at the origin: ghat is flat q^{-d}
  DensityFunction delta(5, 2);
  delta.add(0, 1);
  const Spectrum s = fourier(F, delta);
  REQUIRE(s.values.size() == 25);
  for (const auto& v : s.values)
    CHECK(std::abs(v - std::complex<double>(1.0 / 25, 0)) < 1e-12);

  // ghat(0) = q^{-d} ||g||_1
  SplitMix64 rng(2);
  const DensityFunction g = random_density(F, 2, rng);
  const Spectrum sg = fourier(F, g);
  CHECK(std::abs(sg.values[0].real() -
                 g.norm1().convert_to<double>() / 25.0) < 1e-9);
  CHECK(std::abs(sg.values[0].imag()) < 1e-9);
}

TEST_CASE("plancherel and inversion") {
  SplitMix64 rng(17);
  for (auto [p, r] : {std::pair{3u, 1u}, {7u, 1u}, {3u, 2u}}) {
    const FiniteField F(p, r);
    for (int d = 1; d <= 2; ++d) {
      const DensityFunction g = random_density(F, d, rng);
      const Spectrum s = fourier(F, g);
      const double qd = std::pow(double(F.q()), d);

      // sum_m |ghat|^2 = q^{-d} sum_x g^2
      CHECK(std::abs(s.power() -
                     g.norm2_squared().convert_to<double>() / qd) <
            1e-9 * (1 + s.power()));

      // g(x) = sum_m ghat(m) chi(x.m)
      for (std::uint64_t xi = 0; xi < g.domain_size(); ++xi) {
        const auto x = DensityFunction::point_coords(xi, F.q(), d);
        std::complex<double> acc = 0;
        for (std::uint64_t mi = 0; mi < g.domain_size(); ++mi) {
          const auto m = DensityFunction::point_coords(mi, F.q(), d);
          Elem dot = 0;
          for (int i = 0; i < d; ++i)
            dot = F.add(dot, F.mul(x[i], m[i]));
          acc += s.values[mi] * F.chi(dot);
        }
        CHECK(std::abs(acc - std::complex<double>(double(g.at(xi)), 0)) <
              1e-7);
      }
    }
  }
}

TEST_CASE("bilinear forms") {
  const FiniteField F(7, 1);
  const BilinearForm dot2 = BilinearForm::dot(2);
  CHECK(dot2.nondegenerate(F));
  CHECK(dot2.eval(F, {2, 3}, {4, 5}) == 2);  // 8 + 15 = 23 = 2 mod 7

  BilinearForm sing;
  sing.B = FqMatrix(2, 2);
  sing.B.e = {1, 2, 2, 4};
  CHECK_FALSE(sing.nondegenerate(F));
}

TEST_CASE("nu matches a direct four-loop oracle") {
  SplitMix64 rng(23);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const FiniteField F(p, 1);
    for (int trial = 0; trial < 4; ++trial) {
      const int d = 1 + int(rng.below(2));
      const DensityFunction f = random_density(F, d, rng);
      const DensityFunction g = random_density(F, d, rng);

      BilinearForm B = BilinearForm::dot(d);
      if (trial % 2 == 1) {
        // random nondegenerate form
        do {
          for (auto& e : B.B.e) e = Elem(rng.below(p));
        } while (det(F, B.B) == 0);
      }

      const IncidenceTable got = nu(F, f, g, B);
      const IncidenceTable want = nu_oracle(F, f, g, B);
      CHECK(got.values == want.values);
      CHECK(got.total_mass() == f.norm1() * g.norm1());
    }
  }
}

TEST_CASE("error bound holds on random instances") {
  SplitMix64 rng(31);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const FiniteField F(p, 1);
    for (int trial = 0; trial < 10; ++trial) {
      const int d = 1 + int(rng.below(3));
      const DensityFunction f = random_density(F, d, rng);
      const DensityFunction g = random_density(F, d, rng);
      BilinearForm B = BilinearForm::dot(d);
      const BoundReport rep = verify_error_bound(F, f, g, B);
      CHECK(rep.pass);
      CHECK(rep.max_ratio <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("second moment bound") {
  SplitMix64 rng(37);
  for (std::uint32_t p : {3u, 5u, 7u}) {
    const FiniteField F(p, 1);
    for (int trial = 0; trial < 8; ++trial) {
      const int d = 1 + int(rng.below(2));
      const DensityFunction f = random_density(F, d, rng, true);
      const DensityFunction g = random_density(F, d, rng);
      if (f.norm1() == 0) continue;

      const SecondMomentBound b = second_moment_bound(F, f, g);
      CHECK(b.lhs == nu(F, f, g, BilinearForm::dot(d)).second_moment());
      CHECK(b.holds(1e-6));
      CHECK(verify_second_moment(F, f, g).pass);
    }
  }
}

TEST_CASE("second moment bound rejects f with origin mass") {
  const FiniteField F(5, 1);
  DensityFunction f(5, 2);
  f.add(0, 1);
  DensityFunction g(5, 2);
  g.add(1, 1);
  CHECK_THROWS_AS(second_moment_bound(F, f, g), std::invalid_argument);
}
