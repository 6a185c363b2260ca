#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "detlab/explab.hpp"

namespace {

using namespace detlab;

struct CommonOpts {
  std::uint32_t p = 3;
  std::uint32_t r = 1;
  int d = 2;
  std::string set = "full";
  std::string set_b;
  std::uint64_t seed = 1;
  Elem t = 1;
  std::uint64_t budget = kDefaultBudget;
  int workers = 1;
  std::string out;
  std::string format = "csv";
  std::string method = "auto";
  std::string sizes;
  std::string intervals;
  int n_seeds = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--p", o.p, "field characteristic (odd prime)");
  cmd->add_option("--r", o.r, "field extension degree");
  cmd->add_option("--d", o.d, "matrix dimension");
  cmd->add_option("--set", o.set,
                  "entry set: list:a,b,... | interval:H | full | random:N");
  cmd->add_option("--seed", o.seed, "PRNG seed (splitmix64 stream)");
  cmd->add_option("--budget", o.budget, "enumeration budget (matrix visits)");
  cmd->add_option("--workers", o.workers, "worker thread count");
  cmd->add_option("--out", o.out, "output file (default stdout)");
  cmd->add_option("--format", o.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
}

void emit(const CommonOpts& o, const std::string& content) {
  if (o.out.empty())
    std::cout << content;
  else
    write_file(o.out, content);
}

json with_meta(json data) {
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  return {{"meta",
           {{"version", "0.1.0"},
            {"timestamp",
             std::chrono::duration_cast<std::chrono::seconds>(now).count()}}},
          {"data", std::move(data)}};
}

std::vector<std::size_t> parse_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(std::stoul(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact determinant-distribution laboratory over finite fields"};
  app.require_subcommand(1);

  CommonOpts o;
  if (const char* env = std::getenv("DETLAB_BUDGET"))
    o.budget = std::strtoull(env, nullptr, 10);

  auto* cmd_count = app.add_subcommand("count", "determinant distribution");
  add_common(cmd_count, o);
  cmd_count->add_option("--method", o.method, "auto | brute | cofactor")
      ->check(CLI::IsMember({"auto", "brute", "cofactor"}));

  auto* cmd_inc = app.add_subcommand("incidence", "incidence error bound");
  add_common(cmd_inc, o);

  auto* cmd_rec = app.add_subcommand("recursion", "recursive inequalities");
  add_common(cmd_rec, o);

  auto* cmd_m4 = app.add_subcommand("m4", "second-moment recursion chain");
  add_common(cmd_m4, o);

  auto* cmd_ap3 = app.add_subcommand("ap3", "3-AP search in a productset");
  add_common(cmd_ap3, o);
  cmd_ap3->add_option("--setB", o.set_b, "second entry set (default: same)");

  auto* cmd_sweep = app.add_subcommand("sweep", "convergence trend table");
  add_common(cmd_sweep, o);
  cmd_sweep->add_option("--sizes", o.sizes, "comma-separated |A| schedule");
  cmd_sweep->add_option("--intervals", o.intervals,
                        "comma-separated interval half-widths H");
  cmd_sweep->add_option("--seeds", o.n_seeds, "number of seeds (1..n)");

  auto* cmd_all = app.add_subcommand("verify-all", "full verification battery");
  add_common(cmd_all, o);

  CLI11_PARSE(app, argc, argv);

  try {
    const FiniteField F(o.p, o.r);
    if (app.got_subcommand(cmd_sweep)) {
      std::vector<TrendRow> rows;
      std::vector<std::uint64_t> seeds;
      for (int s = 1; s <= o.n_seeds; ++s) seeds.push_back(o.seed + s - 1);
      if (!o.intervals.empty()) {
        for (std::size_t H : parse_list(o.intervals)) {
          const EntrySet A = interval_set(F, std::uint32_t(H));
          const auto start = std::chrono::steady_clock::now();
          const DistributionTable table =
              count_via_cofactors(F, A, o.d, o.budget, o.workers);
          const auto stop = std::chrono::steady_clock::now();
          TrendRow row;
          row.set_size = A.size();
          row.seed = 0;
          row.eps = epsilon_of(F, table, A.size());
          row.s_d = pair_statistic_S(table);
          row.elapsed_ms =
              std::chrono::duration<double, std::milli>(stop - start).count();
          rows.push_back(std::move(row));
        }
      } else if (!o.sizes.empty()) {
        rows = convergence_experiment(F, o.d, parse_list(o.sizes), seeds,
                                      o.budget, o.workers);
      }
      emit(o, sweep_csv(F, o.d, rows));
      return 0;
    }

    const EntrySet A = parse_set(F, o.set, o.seed);

    if (app.got_subcommand(cmd_count)) {
      DistributionTable table;
      bool brute_feasible = true;
      try {
        enumeration_total(A.size(), o.d, o.d, o.budget);
      } catch (const BudgetError&) {
        brute_feasible = false;
      }
      if (o.method == "brute" || (o.method == "auto" && brute_feasible))
        table = count_bruteforce(F, A, o.d, o.budget, o.workers);
      else
        table = count_via_cofactors(F, A, o.d, o.budget, o.workers);
      if (o.format == "json")
        emit(o, with_meta(distribution_json(F, table, o.seed)).dump(2) + "\n");
      else
        emit(o, distribution_csv(F, table, o.seed));
      return 0;
    }

    if (app.got_subcommand(cmd_inc)) {
      const DensityFunction f = indicator_power(F, A, o.d);
      const DensityFunction g =
          g_histogram(F, A, o.d, Convention::laplace, o.budget);
      const BoundReport rep =
          verify_error_bound(F, f, g, BilinearForm::dot(o.d));
      json data = {{"field", field_json(F)},  {"d", o.d},
                   {"set", A.descriptor},     {"pass", rep.pass},
                   {"max_ratio", rep.max_ratio}, {"lhs", rep.lhs},
                   {"rhs", rep.rhs}};
      if (!rep.pass) data["witness_t"] = rep.witness_t;
      emit(o, with_meta(std::move(data)).dump(2) + "\n");
      return rep.pass ? 0 : 1;
    }

    if (app.got_subcommand(cmd_rec)) {
      json reports = json::array();
      bool pass = true;
      for (const auto& rep :
           {check_g_pointwise(F, A, o.d, o.budget),
            check_tail_sum(F, A, o.d, o.budget),
            check_lemma1_and_e7(F, A, o.d, o.budget)}) {
        reports.push_back(report_json(rep));
        pass = pass && rep.all_pass();
      }
      for (Elem t = 1; t < F.q(); ++t) {
        const auto rep = check_e8(F, A, o.d, t, o.budget);
        reports.push_back(report_json(rep));
        pass = pass && rep.all_pass();
      }
      emit(o, with_meta({{"pass", pass}, {"reports", std::move(reports)}})
                  .dump(2) +
              "\n");
      return pass ? 0 : 1;
    }

    if (app.got_subcommand(cmd_m4)) {
      const auto rep = check_m4_chain(F, A, o.d, o.budget);
      emit(o, with_meta(report_json(rep)).dump(2) + "\n");
      return rep.all_pass() ? 0 : 1;
    }

    if (app.got_subcommand(cmd_ap3)) {
      const EntrySet B =
          o.set_b.empty() ? A : parse_set(F, o.set_b, o.seed + 1);
      const auto witness = find_3ap_in_productset(F, A, B);
      json data = {{"field", field_json(F)},
                   {"setA", A.descriptor},
                   {"setB", B.descriptor},
                   {"found", witness.has_value()}};
      if (witness) {
        data["witness"] = {{"start", witness->start},
                          {"delta", witness->delta},
                          {"terms", witness->terms},
                          {"factors_a", witness->factors_a},
                          {"factors_b", witness->factors_b}};
      }
      emit(o, with_meta(std::move(data)).dump(2) + "\n");
      return 0;
    }

    if (app.got_subcommand(cmd_all)) {
      const VerifyAllResult res =
          verify_all(F, A, o.d, o.seed, o.budget, o.workers);
      emit(o, with_meta(res.data).dump(2) + "\n");
      return res.pass ? 0 : 1;
    }
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid configuration: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
