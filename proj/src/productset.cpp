#include "detlab/productset.hpp"

#include <cmath>
#include <stdexcept>

#include "detlab/rng.hpp"

namespace detlab {

namespace {

DensityFunction pair_indicator(const FiniteField& F, const EntrySet& S) {
  DensityFunction f(F.q(), 2);
  std::vector<Elem> x(2);
  for (Elem a : S.members)
    for (Elem b : S.members) {
      x[0] = a;
      x[1] = b;
      f.add(DensityFunction::point_index(x, F.q()), 1);
    }
  return f;
}

}  // namespace

BigInt quadruple_count(const FiniteField& F, const EntrySet& A,
                       const EntrySet& B, Elem x1, Elem y1) {
  if (!A.contains(x1) || !B.contains(y1))
    throw std::invalid_argument("pivot must come from A and B");
  if (F.mul(x1, y1) == 0) throw std::invalid_argument("pivot x1 y1 = 0");
  const Elem target = F.mul(2 % F.p(), F.mul(x1, y1));
  const DensityFunction f = pair_indicator(F, A);
  const DensityFunction g = pair_indicator(F, B);
  const IncidenceTable table = nu(F, f, g, BilinearForm::dot(2));
  return table.values[target];
}

BigInt trivial_quadruple_count(const FiniteField& F, const EntrySet& A,
                               const EntrySet& B, Elem x1, Elem y1) {
  const Elem pivot = F.mul(x1, y1);
  // the quadruples factor into two independent matching pairs
  BigInt matching = 0;
  for (Elem x : A.members)
    for (Elem y : B.members)
      if (F.mul(x, y) == pivot) ++matching;
  return matching * matching;
}

QuadrupleReport check_quadruple_lower_bound(const FiniteField& F,
                                            const EntrySet& A,
                                            const EntrySet& B, Elem x1,
                                            Elem y1) {
  const std::uint32_t q = F.q();
  const BigInt count = quadruple_count(F, A, B, x1, y1);
  const BigInt ab = BigInt(A.size()) * B.size();
  const BigInt mass = ab * ab;  // |A|^2 |B|^2

  QuadrupleReport rep;
  rep.count = count;
  rep.bound = mass.str() + "/" + std::to_string(q) + " - sqrt(" +
              std::to_string(q) + ")*" + ab.str();
  // count >= mass/q - sqrt(q) ab  <=>  q*count - mass >= -q^{3/2} ab
  const BigInt lhs = count * q - mass;
  if (lhs >= 0) return rep;
  // need (mass - q count)^2 <= q^3 ab^2
  const BigInt deficit = -lhs;
  rep.pass = deficit * deficit <= BigInt(q) * q * q * ab * ab;
  return rep;
}

std::optional<APWitness> find_3ap_in_productset(const FiniteField& F,
                                                const EntrySet& A,
                                                const EntrySet& B) {
  const std::uint32_t q = F.q();
  // one factorization per product value, first in scan order
  std::vector<int> has(q, 0);
  std::vector<Elem> fa(q, 0), fb(q, 0);
  for (Elem a : A.members)
    for (Elem b : B.members) {
      const Elem v = F.mul(a, b);
      if (!has[v]) {
        has[v] = 1;
        fa[v] = a;
        fb[v] = b;
      }
    }
  for (Elem start = 0; start < q; ++start) {
    if (!has[start]) continue;
    for (Elem delta = 1; delta < q; ++delta) {
      const Elem mid = F.add(start, delta);
      const Elem last = F.add(mid, delta);
      if (!has[mid] || !has[last]) continue;
      APWitness w;
      w.start = start;
      w.delta = delta;
      w.terms = {start, mid, last};
      w.factors_a = {fa[start], fa[mid], fa[last]};
      w.factors_b = {fb[start], fb[mid], fb[last]};
      return w;
    }
  }
  return std::nullopt;
}

ThresholdReport check_ap_threshold(const FiniteField& F, int trials,
                                   std::uint64_t seed) {
  const std::uint32_t q = F.q();
  // smallest integer product m with m > q(sqrt(q)+1), i.e. m > q and
  // (m - q)^2 > q^3
  const BigInt q3 = BigInt(q) * q * q;
  std::uint64_t min_product = q + 1;
  while (BigInt(min_product - q) * (min_product - q) <= q3) ++min_product;
  if (min_product > std::uint64_t(q) * q)
    throw std::invalid_argument("threshold not reachable for this q");

  ThresholdReport rep;
  SplitMix64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const std::size_t a_min = std::size_t((min_product + q - 1) / q);
    const std::size_t na = a_min + rng.below(q - a_min + 1);
    const std::size_t b_min = std::size_t((min_product + na - 1) / na);
    const std::size_t nb = b_min + rng.below(q - b_min + 1);
    const EntrySet A = random_set(F, na, rng.next());
    const EntrySet B = random_set(F, nb, rng.next());
    ++rep.trials;

    bool has_pivot = false;
    for (Elem a : A.members) {
      if (a == 0) continue;
      for (Elem b : B.members)
        if (b != 0) {
          has_pivot = true;
          break;
        }
      if (has_pivot) break;
    }
    if (!has_pivot) {
      ++rep.skipped;
      continue;
    }
    if (find_3ap_in_productset(F, A, B)) {
      ++rep.witnesses;
    } else {
      rep.pass = false;
      rep.failure = "A=" + A.descriptor + " B=" + B.descriptor +
                    " seed trial " + std::to_string(trial);
      return rep;
    }
  }
  return rep;
}

}  // namespace detlab
