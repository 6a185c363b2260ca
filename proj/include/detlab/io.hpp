#ifndef DETLAB_IO_HPP
#define DETLAB_IO_HPP

#include <string>

#include <json.hpp>

#include "detlab/detcount.hpp"
#include "detlab/inequalities.hpp"

namespace detlab {

using nlohmann::json;

json field_json(const FiniteField& F);

// "# key,value" metadata rows, then "t,count" rows; exact decimal integers
std::string distribution_csv(const FiniteField& F,
                             const DistributionTable& table,
                             std::uint64_t seed);

json distribution_json(const FiniteField& F, const DistributionTable& table,
                       std::uint64_t seed);

json report_json(const RecursionReport& report);

std::string sweep_csv(const FiniteField& F, int d,
                      const std::vector<TrendRow>& rows);

void write_file(const std::string& path, const std::string& content);

}  // namespace detlab

#endif
