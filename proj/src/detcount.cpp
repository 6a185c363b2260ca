#include "detlab/detcount.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

namespace detlab {

BigInt DistributionTable::total_mass() const {
  BigInt s = 0;
  for (auto c : counts) s += c;
  return s;
}

DensityFunction::DensityFunction(std::uint32_t q, int d) : q_(q), d_(d) {
  size_ = 1;
  for (int i = 0; i < d; ++i) size_ *= q;
  dense_ = size_ <= (1ULL << 24);
  if (dense_) dvals_.assign(size_, 0);
}

std::uint64_t DensityFunction::at(std::uint64_t idx) const {
  if (dense_) return dvals_[idx];
  auto it = svals_.find(idx);
  return it == svals_.end() ? 0 : it->second;
}

void DensityFunction::add(std::uint64_t idx, std::uint64_t v) {
  if (dense_)
    dvals_[idx] += v;
  else
    svals_[idx] += v;
}

void DensityFunction::clear_at(std::uint64_t idx) {
  if (dense_)
    dvals_[idx] = 0;
  else
    svals_.erase(idx);
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> DensityFunction::support()
    const {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (dense_) {
    for (std::uint64_t i = 0; i < size_; ++i)
      if (dvals_[i]) out.emplace_back(i, dvals_[i]);
  } else {
    out.assign(svals_.begin(), svals_.end());
    std::sort(out.begin(), out.end());
  }
  return out;
}

BigInt DensityFunction::norm1() const {
  BigInt s = 0;
  for (auto& [i, v] : support()) s += v;
  return s;
}

BigInt DensityFunction::norm2_squared() const {
  BigInt s = 0;
  for (auto& [i, v] : support()) s += BigInt(v) * v;
  return s;
}

std::uint64_t DensityFunction::point_index(const std::vector<Elem>& x,
                                           std::uint32_t q) {
  std::uint64_t idx = 0;
  for (std::size_t i = x.size(); i-- > 0;) idx = idx * q + x[i];
  return idx;
}

std::vector<Elem> DensityFunction::point_coords(std::uint64_t idx,
                                                std::uint32_t q, int d) {
  std::vector<Elem> x(d);
  for (int i = 0; i < d; ++i) {
    x[i] = Elem(idx % q);
    idx /= q;
  }
  return x;
}

DensityFunction indicator_power(const FiniteField& F, const EntrySet& A,
                                int d) {
  DensityFunction f(F.q(), d);
  std::vector<std::size_t> idx(d, 0);
  std::vector<Elem> x(d, A.members[0]);
  const std::size_t k = A.size();
  std::uint64_t total = 1;
  for (int i = 0; i < d; ++i) total *= k;
  for (std::uint64_t c = 0; c < total; ++c) {
    f.add(DensityFunction::point_index(x, F.q()), 1);
    for (int i = d - 1; i >= 0; --i) {
      if (++idx[i] < k) {
        x[i] = A.members[idx[i]];
        break;
      }
      idx[i] = 0;
      x[i] = A.members[0];
    }
  }
  return f;
}

namespace {

// determinant without heap allocation, for the enumeration hot loop
Elem det_fast(const FiniteField& F, const Elem* m, int n) {
  switch (n) {
    case 1:
      return m[0];
    case 2:
      return F.sub(F.mul(m[0], m[3]), F.mul(m[1], m[2]));
    case 3: {
      const Elem aei = F.mul(m[0], F.mul(m[4], m[8]));
      const Elem bfg = F.mul(m[1], F.mul(m[5], m[6]));
      const Elem cdh = F.mul(m[2], F.mul(m[3], m[7]));
      const Elem ceg = F.mul(m[2], F.mul(m[4], m[6]));
      const Elem bdi = F.mul(m[1], F.mul(m[3], m[8]));
      const Elem afh = F.mul(m[0], F.mul(m[5], m[7]));
      return F.sub(F.add(aei, F.add(bfg, cdh)),
                   F.add(ceg, F.add(bdi, afh)));
    }
    default: {
      Elem w[36];
      std::copy(m, m + n * n, w);
      Elem d = 1;
      for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
          if (w[r * n + c] != 0) {
            pivot = r;
            break;
          }
        if (pivot < 0) return 0;
        if (pivot != c) {
          for (int j = c; j < n; ++j) std::swap(w[pivot * n + j], w[c * n + j]);
          d = F.neg(d);
        }
        const Elem pv = w[c * n + c];
        d = F.mul(d, pv);
        const Elem pinv = F.inv(pv);
        for (int r = c + 1; r < n; ++r) {
          const Elem factor = F.mul(w[r * n + c], pinv);
          if (factor == 0) continue;
          for (int j = c; j < n; ++j)
            w[r * n + j] = F.sub(w[r * n + j], F.mul(factor, w[c * n + j]));
        }
      }
      return d;
    }
  }
}

void brute_worker(const FiniteField& F, const EntrySet& A, int d,
                  std::uint64_t begin, std::uint64_t end,
                  std::vector<std::uint64_t>& counts) {
  const std::size_t k = A.size();
  const int cells = d * d;
  std::vector<std::size_t> idx(cells, 0);
  std::vector<Elem> m(cells);
  std::uint64_t t = begin;
  for (int c = cells - 1; c >= 0; --c) {
    idx[c] = t % k;
    t /= k;
  }
  for (int c = 0; c < cells; ++c) m[c] = A.members[idx[c]];
  for (std::uint64_t cur = begin; cur < end; ++cur) {
    ++counts[det_fast(F, m.data(), d)];
    for (int c = cells - 1; c >= 0; --c) {
      if (++idx[c] < k) {
        m[c] = A.members[idx[c]];
        break;
      }
      idx[c] = 0;
      m[c] = A.members[0];
    }
  }
}

}  // namespace

DistributionTable count_bruteforce(const FiniteField& F, const EntrySet& A,
                                   int d, std::uint64_t budget, int workers) {
  if (d < 1 || d > 6) throw std::invalid_argument("d must be in 1..6");
  const std::uint64_t total = enumeration_total(A.size(), d, d, budget);
  workers = std::max(1, workers);
  std::vector<std::vector<std::uint64_t>> parts(
      workers, std::vector<std::uint64_t>(F.q(), 0));
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    const std::uint64_t begin = total * w / workers;
    const std::uint64_t end = total * (w + 1) / workers;
    pool.emplace_back(brute_worker, std::cref(F), std::cref(A), d, begin, end,
                      std::ref(parts[w]));
  }
  for (auto& t : pool) t.join();
  DistributionTable out{d, A.descriptor,
                        std::vector<std::uint64_t>(F.q(), 0)};
  for (auto& part : parts)
    for (std::uint32_t t = 0; t < F.q(); ++t) out.counts[t] += part[t];
  return out;
}

DensityFunction g_histogram(const FiniteField& F, const EntrySet& A, int d,
                            Convention conv, std::uint64_t budget) {
  if (d < 2 || d > 6) throw std::invalid_argument("d must be in 2..6");
  const std::uint64_t total = enumeration_total(A.size(), d - 1, d, budget);
  DensityFunction g(F.q(), d);
  enumerate_matrices(A, d - 1, d, 0, total, [&](const FqMatrix& M) {
    const auto v = cofactor_vector(F, M, conv);
    g.add(DensityFunction::point_index(v, F.q()), 1);
  });
  return g;
}

DistributionTable count_via_cofactors(const FiniteField& F, const EntrySet& A,
                                      int d, std::uint64_t budget,
                                      int workers) {
  if (d < 2 || d > 6) throw std::invalid_argument("d must be in 2..6");
  const DensityFunction g = g_histogram(F, A, d, Convention::laplace, budget);
  const auto supp = g.support();
  // decoded support points, flattened
  const std::uint32_t q = F.q();
  std::vector<Elem> pts(supp.size() * d);
  std::vector<std::uint64_t> vals(supp.size());
  for (std::size_t s = 0; s < supp.size(); ++s) {
    const auto y = DensityFunction::point_coords(supp[s].first, q, d);
    std::copy(y.begin(), y.end(), pts.begin() + s * d);
    vals[s] = supp[s].second;
  }

  const std::uint64_t rows = enumeration_total(A.size(), 1, d, budget);
  workers = std::max(1, workers);
  std::vector<std::vector<std::uint64_t>> parts(
      workers, std::vector<std::uint64_t>(q, 0));
  auto work = [&](int w) {
    const std::uint64_t begin = rows * w / workers;
    const std::uint64_t end = rows * (w + 1) / workers;
    auto& counts = parts[w];
    enumerate_matrices(A, 1, d, begin, end, [&](const FqMatrix& x) {
      for (std::size_t s = 0; s < vals.size(); ++s) {
        const Elem* y = &pts[s * d];
        Elem t = 0;
        for (int i = 0; i < d; ++i) t = F.add(t, F.mul(x.e[i], y[i]));
        counts[t] += vals[s];
      }
    });
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();

  DistributionTable out{d, A.descriptor, std::vector<std::uint64_t>(q, 0)};
  for (auto& part : parts)
    for (std::uint32_t t = 0; t < q; ++t) out.counts[t] += part[t];
  return out;
}

BigInt pair_statistic_S(const DistributionTable& table) {
  BigInt s = 0;
  for (std::size_t t = 1; t < table.counts.size(); ++t)
    s += BigInt(table.counts[t]) * table.counts[t];
  return s;
}

}  // namespace detlab
