#include "detlab/inequalities.hpp"

#include <chrono>
#include <stdexcept>

namespace detlab {

namespace {

std::string instance_tag(const FiniteField& F, const EntrySet& A, int d) {
  return F.describe() + " d=" + std::to_string(d) + " set=" + A.descriptor;
}

BigInt power(BigInt base, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

// sum_{j=0}^{d-1} |A|^j, kept exact instead of the asymptotic |A|^{d-1}
BigInt geometric_sum(std::size_t a, int d) {
  BigInt s = 0;
  for (int j = 0; j < d; ++j) s += power(BigInt(a), j);
  return s;
}

void record(RecursionReport& rep, std::string id, const BigInt& lhs,
            const BigInt& rhs, std::string witness = "") {
  const bool pass = lhs <= rhs;
  rep.checks.push_back({std::move(id), lhs.str(), rhs.str(), pass,
                        pass ? "" : std::move(witness)});
}

}  // namespace

bool RecursionReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

RecursionReport check_g_pointwise(const FiniteField& F, const EntrySet& A,
                                  int d, std::uint64_t budget) {
  const std::uint32_t q = F.q();
  const DensityFunction g = g_histogram(F, A, d, Convention::alternating, budget);
  const DistributionTable lower = count_bruteforce(F, A, d - 1, budget);
  RecursionReport rep{instance_tag(F, A, d), {}};

  for (int i = 1; i <= d; ++i) {
    std::uint64_t tails = 1;
    for (int j = i; j < d; ++j) tails *= q;
    BigInt worst_lhs = 0, worst_rhs = 0;
    std::string witness;
    bool ok = true;
    std::vector<Elem> y(d, 0);
    for (Elem yi = 1; yi < q && ok; ++yi) {
      const Elem signed_yi = (i % 2 != 0) ? F.neg(yi) : yi;
      const std::uint64_t bound = lower.counts[signed_yi];
      for (std::uint64_t tail = 0; tail < tails; ++tail) {
        std::fill(y.begin(), y.end(), 0);
        y[i - 1] = yi;
        std::uint64_t t = tail;
        for (int j = i; j < d; ++j) {
          y[j] = Elem(t % q);
          t /= q;
        }
        const std::uint64_t gv = g.at(DensityFunction::point_index(y, q));
        if (gv > bound) {
          ok = false;
          worst_lhs = gv;
          worst_rhs = bound;
          witness = "i=" + std::to_string(i) + " y_i=" + std::to_string(yi) +
                    " tail=" + std::to_string(tail);
          break;
        }
      }
    }
    CheckRecord c{"g_pointwise_i" + std::to_string(i),
                  ok ? "all g values" : worst_lhs.str(),
                  ok ? "N_{d-1} bounds" : worst_rhs.str(), ok,
                  std::move(witness)};
    rep.checks.push_back(std::move(c));
  }
  return rep;
}

RecursionReport check_tail_sum(const FiniteField& F, const EntrySet& A, int d,
                               std::uint64_t budget) {
  const std::uint32_t q = F.q();
  const DensityFunction g = g_histogram(F, A, d, Convention::alternating, budget);
  const DistributionTable lower = count_bruteforce(F, A, d - 1, budget);
  RecursionReport rep{instance_tag(F, A, d), {}};

  for (int i = 1; i <= d; ++i) {
    const BigInt scale = power(BigInt(A.size()), d - i);
    std::uint64_t tails = 1;
    for (int j = i; j < d; ++j) tails *= q;
    std::vector<Elem> y(d, 0);
    for (Elem yi = 1; yi < q; ++yi) {
      const Elem signed_yi = (i % 2 != 0) ? F.neg(yi) : yi;
      BigInt lhs = 0;
      for (std::uint64_t tail = 0; tail < tails; ++tail) {
        std::fill(y.begin(), y.end(), 0);
        y[i - 1] = yi;
        std::uint64_t t = tail;
        for (int j = i; j < d; ++j) {
          y[j] = Elem(t % q);
          t /= q;
        }
        lhs += g.at(DensityFunction::point_index(y, q));
      }
      record(rep, "tail_sum_i" + std::to_string(i) + "_y" + std::to_string(yi),
             lhs, scale * lower.counts[signed_yi],
             "i=" + std::to_string(i) + " y_i=" + std::to_string(yi));
    }
  }
  return rep;
}

RecursionReport check_lemma1_and_e7(const FiniteField& F, const EntrySet& A,
                                    int d, std::uint64_t budget) {
  const std::uint32_t q = F.q();
  const DensityFunction g = g_histogram(F, A, d, Convention::alternating, budget);
  const DistributionTable lower = count_bruteforce(F, A, d - 1, budget);
  BigInt second_moment = 0;  // sum over l != 0 of N_{d-1}^2
  for (std::uint32_t l = 1; l < q; ++l)
    second_moment += BigInt(lower.counts[l]) * lower.counts[l];

  RecursionReport rep{instance_tag(F, A, d), {}};
  BigInt restricted_norm = 0;
  std::vector<Elem> y(d, 0);
  for (int i = 1; i <= d; ++i) {
    std::uint64_t tails = 1;
    for (int j = i; j < d; ++j) tails *= q;
    BigInt lhs = 0;
    for (Elem yi = 1; yi < q; ++yi) {
      for (std::uint64_t tail = 0; tail < tails; ++tail) {
        std::fill(y.begin(), y.end(), 0);
        y[i - 1] = yi;
        std::uint64_t t = tail;
        for (int j = i; j < d; ++j) {
          y[j] = Elem(t % q);
          t /= q;
        }
        const BigInt gv = g.at(DensityFunction::point_index(y, q));
        lhs += gv * gv;
      }
    }
    restricted_norm += lhs;
    record(rep, "lemma1_i" + std::to_string(i), lhs,
           power(BigInt(A.size()), d - i) * second_moment,
           "i=" + std::to_string(i));
  }
  record(rep, "e7_geometric", restricted_norm,
         geometric_sum(A.size(), d) * second_moment, "restricted norm");
  return rep;
}

RecursionReport check_e8(const FiniteField& F, const EntrySet& A, int d,
                         Elem t, std::uint64_t budget) {
  if (t == 0) throw std::invalid_argument("e8 requires t != 0");
  const std::uint32_t q = F.q();
  const DistributionTable table = count_via_cofactors(F, A, d, budget);
  const DensityFunction g =
      g_histogram(F, A, d, Convention::laplace, budget);

  // both sides times q^2 to stay integral
  BigInt dev = BigInt(table.counts[t]) * q - power(BigInt(A.size()), d * d);
  if (dev < 0) dev = -dev;
  const BigInt lhs = dev * dev;
  BigInt rhs = power(BigInt(q), d + 1) * power(BigInt(A.size()), d) *
               g.norm2_squared();

  RecursionReport rep{instance_tag(F, A, d), {}};
  record(rep, "e8_t" + std::to_string(t), lhs, rhs, "t=" + std::to_string(t));
  return rep;
}

RecursionReport check_m4_chain(const FiniteField& F, const EntrySet& A, int d,
                               std::uint64_t budget) {
  const std::uint32_t q = F.q();
  const DistributionTable table = count_via_cofactors(F, A, d, budget);
  const BigInt s_d = pair_statistic_S(table);

  DensityFunction f0 = indicator_power(F, A, d);
  f0.clear_at(0);
  DensityFunction g0 = g_histogram(F, A, d, Convention::laplace, budget);
  g0.clear_at(0);

  RecursionReport rep{instance_tag(F, A, d), {}};

  // (a) sum_{l!=0} N_d^2 <= sum_t nu^2(t)
  const IncidenceTable table_nu =
      nu(F, f0, g0, BilinearForm::dot(d));
  const BigInt nu_sq = table_nu.second_moment();
  record(rep, "m4_a", s_d, nu_sq);

  // (b) second-moment bound, spectral term floating with guard band
  const SecondMomentBound bound = second_moment_bound(F, f0, g0);
  rep.checks.push_back({"m4_b", bound.lhs.str(), std::to_string(bound.rhs()),
                        bound.holds(1e-6),
                        bound.holds(1e-6) ? "" : "spectral bound"});

  // (c) bound right side <= |A|^{2d^2}/q + q^{d-1}|A|^{d+1} sum_{y!=0} g^2
  const BigInt restricted = g0.norm2_squared();
  const Rational final_rhs{
      power(BigInt(A.size()), 2 * d * d) +
          power(BigInt(q), d) * power(BigInt(A.size()), d + 1) * restricted,
      BigInt(q)};
  const double lhs_c = bound.rhs();
  const bool pass_c = lhs_c <= final_rhs.to_double() * (1 + 1e-6) + 1e-9;
  rep.checks.push_back({"m4_c", std::to_string(lhs_c), final_rhs.str(),
                        pass_c, pass_c ? "" : "collapse bound"});
  return rep;
}

RecursionReport check_composed(const FiniteField& F, const EntrySet& A, int d,
                               Elem t, std::uint64_t budget) {
  if (t == 0) throw std::invalid_argument("composed check requires t != 0");
  const std::uint32_t q = F.q();
  const DistributionTable table = count_via_cofactors(F, A, d, budget);
  const DistributionTable lower = count_bruteforce(F, A, d - 1, budget);
  const DensityFunction g =
      g_histogram(F, A, d, Convention::laplace, budget);
  BigInt second_moment = 0;
  for (std::uint32_t l = 1; l < q; ++l)
    second_moment += BigInt(lower.counts[l]) * lower.counts[l];
  const BigInt g0 = g.at(0);

  BigInt dev = BigInt(table.counts[t]) * q - power(BigInt(A.size()), d * d);
  if (dev < 0) dev = -dev;
  const BigInt lhs = dev * dev;
  const BigInt rhs =
      power(BigInt(q), d + 1) * power(BigInt(A.size()), d) *
      (geometric_sum(A.size(), d) * second_moment + g0 * g0);

  RecursionReport rep{instance_tag(F, A, d), {}};
  record(rep, "composed_t" + std::to_string(t), lhs, rhs,
         "t=" + std::to_string(t));
  return rep;
}

Rational epsilon_of(const FiniteField& F, const DistributionTable& table,
                    std::size_t set_size) {
  const BigInt mass = power(BigInt(set_size), table.d * table.d);
  BigInt worst = 0;
  for (std::uint32_t t = 1; t < F.q(); ++t) {
    BigInt dev = BigInt(table.counts[t]) * F.q() - mass;
    if (dev < 0) dev = -dev;
    if (dev > worst) worst = dev;
  }
  return {worst, mass};
}

std::vector<TrendRow> convergence_experiment(
    const FiniteField& F, int d, const std::vector<std::size_t>& sizes,
    const std::vector<std::uint64_t>& seeds, std::uint64_t budget,
    int workers) {
  std::vector<TrendRow> rows;
  for (std::size_t n : sizes) {
    for (std::uint64_t seed : seeds) {
      const EntrySet A = random_set(F, n, seed);
      const auto start = std::chrono::steady_clock::now();
      const DistributionTable table =
          d >= 2 ? count_via_cofactors(F, A, d, budget, workers)
                 : count_bruteforce(F, A, d, budget, workers);
      const auto stop = std::chrono::steady_clock::now();
      TrendRow row;
      row.set_size = n;
      row.seed = seed;
      row.eps = epsilon_of(F, table, n);
      row.s_d = pair_statistic_S(table);
      row.elapsed_ms =
          std::chrono::duration<double, std::milli>(stop - start).count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

}  // namespace detlab
