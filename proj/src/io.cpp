#include "detlab/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace detlab {

json field_json(const FiniteField& F) {
  return {{"p", F.p()}, {"r", F.r()}, {"modulus", F.modulus()}};
}

std::string distribution_csv(const FiniteField& F,
                             const DistributionTable& table,
                             std::uint64_t seed) {
  std::ostringstream out;
  out << "# p," << F.p() << "\n# r," << F.r() << "\n# modulus,";
  for (std::size_t i = 0; i < F.modulus().size(); ++i)
    out << (i ? " " : "") << F.modulus()[i];
  out << "\n# d," << table.d << "\n# set," << table.set_descriptor
      << "\n# seed," << seed << "\nt,count\n";
  for (std::size_t t = 0; t < table.counts.size(); ++t)
    out << t << "," << table.counts[t] << "\n";
  return out.str();
}

json distribution_json(const FiniteField& F, const DistributionTable& table,
                       std::uint64_t seed) {
  return {{"field", field_json(F)},
          {"d", table.d},
          {"set", table.set_descriptor},
          {"seed", seed},
          {"counts", table.counts}};
}

json report_json(const RecursionReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json rec = {{"id", c.id}, {"lhs", c.lhs}, {"rhs", c.rhs},
                {"pass", c.pass}};
    if (!c.witness.empty()) rec["witness"] = c.witness;
    checks.push_back(std::move(rec));
  }
  return {{"instance", report.instance},
          {"pass", report.all_pass()},
          {"checks", std::move(checks)}};
}

std::string sweep_csv(const FiniteField& F, int d,
                      const std::vector<TrendRow>& rows) {
  std::ostringstream out;
  out << "size,seed,q,d,eps,eps_exact,S_d,elapsed_ms\n";
  for (const auto& r : rows)
    out << r.set_size << "," << r.seed << "," << F.q() << "," << d << ","
        << r.eps.to_double() << "," << r.eps.str() << "," << r.s_d.str()
        << "," << r.elapsed_ms << "\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

}  // namespace detlab
