#include "detlab/explab.hpp"

#include <algorithm>

namespace detlab {

DensityFunction random_density(const FiniteField& F, int d, SplitMix64& rng,
                               std::uint64_t max_value) {
  DensityFunction f(F.q(), d);
  for (std::uint64_t i = 0; i < f.domain_size(); ++i) {
    if (rng.next() & 1) continue;
    const std::uint64_t v = 1 + rng.below(max_value);
    f.add(i, v);
  }
  return f;
}

BilinearForm random_form(const FiniteField& F, int d, SplitMix64& rng) {
  for (;;) {
    FqMatrix B(d, d);
    for (auto& e : B.e) e = Elem(rng.below(F.q()));
    BilinearForm form{std::move(B)};
    if (form.nondegenerate(F)) return form;
  }
}

VerifyAllResult verify_all(const FiniteField& F, const EntrySet& A, int d,
                           std::uint64_t seed, std::uint64_t budget,
                           int workers) {
  const std::uint32_t q = F.q();
  VerifyAllResult out;
  json& data = out.data;
  data["field"] = field_json(F);
  data["d"] = d;
  data["set"] = A.descriptor;
  data["seed"] = seed;

  auto note = [&](const std::string& key, bool ok) {
    data["results"][key] = ok;
    out.pass = out.pass && ok;
  };

  // both counting routes agree, and the distribution invariants hold
  const DistributionTable fast = count_via_cofactors(F, A, d, budget, workers);
  const DistributionTable brute = count_bruteforce(F, A, d, budget, workers);
  note("oracle_equivalence", fast.counts == brute.counts);
  note("mass_conservation", [&] {
    BigInt expect = 1;
    for (int i = 0; i < d * d; ++i) expect *= A.size();
    return fast.total_mass() == expect;
  }());
  note("negation_symmetry", [&] {
    for (std::uint32_t t = 0; t < q; ++t)
      if (fast.counts[t] != fast.counts[F.neg(t)]) return false;
    return true;
  }());
  data["counts"] = fast.counts;
  data["S_d"] = pair_statistic_S(fast).str();

  // recursion suite
  json recursion = json::array();
  for (const auto& rep :
       {check_g_pointwise(F, A, d, budget), check_tail_sum(F, A, d, budget),
        check_lemma1_and_e7(F, A, d, budget), check_m4_chain(F, A, d, budget)}) {
    recursion.push_back(report_json(rep));
    out.pass = out.pass && rep.all_pass();
  }
  for (Elem t = 1; t < q; ++t) {
    const auto e8 = check_e8(F, A, d, t, budget);
    const auto composed = check_composed(F, A, d, t, budget);
    recursion.push_back(report_json(e8));
    recursion.push_back(report_json(composed));
    out.pass = out.pass && e8.all_pass() && composed.all_pass();
  }
  data["recursion"] = std::move(recursion);

  // randomized incidence bounds
  SplitMix64 rng(seed);
  bool eq1_ok = true, eq2_ok = true;
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = 1 + int(rng.below(3));
    const DensityFunction f = random_density(F, dim, rng);
    const DensityFunction g = random_density(F, dim, rng);
    const BilinearForm B = random_form(F, dim, rng);
    eq1_ok = eq1_ok && verify_error_bound(F, f, g, B).pass;
  }
  for (int trial = 0; trial < 10; ++trial) {
    const int dim = 2 + int(rng.below(2));
    DensityFunction f = random_density(F, dim, rng);
    f.clear_at(0);
    const DensityFunction g = random_density(F, dim, rng);
    eq2_ok = eq2_ok && verify_second_moment(F, f, g).pass;
  }
  note("error_bound_randomized", eq1_ok);
  note("second_moment_randomized", eq2_ok);

  // productset checks
  bool quad_ok = true;
  for (int trial = 0; trial < 5; ++trial) {
    const EntrySet SA = random_set(F, 1 + rng.below(q), rng.next());
    const EntrySet SB = random_set(F, 1 + rng.below(q), rng.next());
    Elem x1 = 0, y1 = 0;
    for (Elem a : SA.members)
      if (a != 0) x1 = a;
    for (Elem b : SB.members)
      if (b != 0) y1 = b;
    if (x1 == 0 || y1 == 0) continue;  // no valid pivot
    const BigInt via_nu = quadruple_count(F, SA, SB, x1, y1);
    // 4-loop oracle
    const Elem target = F.mul(2, F.mul(x1, y1));
    BigInt direct = 0;
    for (Elem x0 : SA.members)
      for (Elem y0 : SB.members)
        for (Elem x2 : SA.members)
          for (Elem y2 : SB.members)
            if (F.add(F.mul(x0, y0), F.mul(x2, y2)) == target) ++direct;
    quad_ok = quad_ok && via_nu == direct;
    quad_ok = quad_ok && check_quadruple_lower_bound(F, SA, SB, x1, y1).pass;
  }
  note("quadruple_counts", quad_ok);
  const ThresholdReport ap = check_ap_threshold(F, 5, rng.next());
  note("ap_threshold", ap.pass);
  data["ap_trials"] = {{"trials", ap.trials},
                       {"witnesses", ap.witnesses},
                       {"skipped", ap.skipped}};

  data["pass"] = out.pass;
  return out;
}

}  // namespace detlab
