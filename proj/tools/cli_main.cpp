// hypsum command line: exact coefficient/Stirling tables, single-value
// evaluation, and identity verification sweeps.
//
// Exit codes: 0 success, 1 identity/equality failure, 2 usage error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hypsum/coefficients.hpp"
#include "hypsum/combinatorics.hpp"
#include "hypsum/identities.hpp"
#include "hypsum/io.hpp"
#include "hypsum/powersums.hpp"
#include "hypsum/psi.hpp"
#include "hypsum/verify.hpp"

namespace {

using namespace hypsum;

io::TableFormat parse_format(const std::string& s) {
  if (s == "csv") return io::TableFormat::csv;
  if (s == "json") return io::TableFormat::json;
  return io::TableFormat::bfile;
}

BuildRoute parse_route(const std::string& s) {
  if (s == "closed-form") return BuildRoute::closed_form;
  if (s == "recursion") return BuildRoute::recursion;
  if (s == "explicit") return BuildRoute::explicit_formula;
  return BuildRoute::solve;
}

int do_table(const std::string& kind, unsigned max_m, const std::string& format,
             const std::string& route) {
  const io::TableFormat fmt = parse_format(format);
  if (kind == "stirling1" || kind == "stirling2") {
    if (!route.empty())
      throw std::invalid_argument("--route applies only to kinds a and c");
    const StirlingTriangle t(kind == "stirling1" ? StirlingKind::first_unsigned
                                                 : StirlingKind::second,
                             max_m);
    std::cout << io::render_stirling_table(t, fmt);
    return 0;
  }
  const CoeffKind ck = kind == "a" ? CoeffKind::a : CoeffKind::c;
  const BuildRoute br = route.empty() ? default_route(ck) : parse_route(route);
  const CoeffTriangle t = CoeffTriangle::build(ck, max_m, br);
  std::cout << io::render_coeff_table(t, fmt);
  return 0;
}

// "kind,m,k" -> corrupt entry (m, k) of that table by +1
void apply_corruption(verify::TableSet& tables, const std::string& where) {
  std::istringstream is(where);
  std::string kind, m_str, k_str;
  if (!std::getline(is, kind, ',') || !std::getline(is, m_str, ',') ||
      !std::getline(is, k_str) || (kind != "a" && kind != "c"))
    throw std::invalid_argument("--corrupt-entry expects kind,m,k with kind a|c");
  const unsigned m = static_cast<unsigned>(std::stoul(m_str));
  const unsigned k = static_cast<unsigned>(std::stoul(k_str));
  (kind == "a" ? tables.a : tables.c).corrupt_entry(m, k, Rat(1));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dual-basis coefficient tables and identity verification"};
  app.require_subcommand(1);

  // table
  auto* table_cmd = app.add_subcommand("table", "emit a coefficient or Stirling table");
  std::string t_kind, t_format = "csv", t_route;
  unsigned t_max = 0;
  table_cmd->add_option("kind", t_kind, "a | c | stirling1 | stirling2")
      ->required()
      ->check(CLI::IsMember({"a", "c", "stirling1", "stirling2"}));
  table_cmd->add_option("--max-m", t_max, "largest row index")->required();
  table_cmd->add_option("--format", t_format, "csv | json | bfile")
      ->check(CLI::IsMember({"csv", "json", "bfile"}));
  table_cmd->add_option("--route", t_route, "construction route for a/c tables")
      ->check(CLI::IsMember({"closed-form", "recursion", "explicit", "solve"}));

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "evaluate a single quantity");
  eval_cmd->require_subcommand(1);
  unsigned e_a = 0, e_m = 0, e_n = 0, e_alpha = 0;
  std::string e_method = "both";

  auto* psi_cmd = eval_cmd->add_subcommand("psi", "psi_m(n)");
  psi_cmd->add_option("--m", e_m)->required();
  psi_cmd->add_option("--n", e_n)->required();

  auto* psig_cmd = eval_cmd->add_subcommand("psi-general", "psi_m^(a)(n)");
  psig_cmd->add_option("--a", e_a)->required();
  psig_cmd->add_option("--m", e_m)->required();
  psig_cmd->add_option("--n", e_n)->required();

  auto* hyp_cmd = eval_cmd->add_subcommand("hypersum", "S_m^(a)(n)");
  hyp_cmd->add_option("--a", e_a)->required();
  hyp_cmd->add_option("--m", e_m)->required();
  hyp_cmd->add_option("--n", e_n)->required();
  hyp_cmd->add_option("--method", e_method, "brute | expansion | both")
      ->check(CLI::IsMember({"brute", "expansion", "both"}));

  auto* t_sum_cmd = eval_cmd->add_subcommand("T", "sum_k c_mk k^alpha");
  t_sum_cmd->add_option("--m", e_m)->required();
  t_sum_cmd->add_option("--alpha", e_alpha)->required();

  auto* u_sum_cmd = eval_cmd->add_subcommand("U", "sum_k a_mk psi_alpha(k)");
  u_sum_cmd->add_option("--m", e_m)->required();
  u_sum_cmd->add_option("--alpha", e_alpha)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check identity families exactly");
  std::string v_family, v_format = "text", v_corrupt;
  verify::Bounds bounds;
  bool v_serial = false;
  std::vector<std::string> family_choices = verify::family_names();
  family_choices.push_back("all");
  verify_cmd->add_option("family", v_family, "identity family or \"all\"")
      ->required()
      ->check(CLI::IsMember(family_choices));
  verify_cmd->add_option("--max-m", bounds.max_m, "row bound (default 20)");
  verify_cmd->add_option("--max-alpha", bounds.max_alpha, "exponent bound (default 15)");
  verify_cmd->add_option("--max-n", bounds.max_n, "argument bound (default 12)");
  verify_cmd->add_option("--max-c", bounds.max_c, "hypotenuse bound (default 50)");
  verify_cmd->add_option("--format", v_format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_flag("--serial", v_serial, "run sweeps on one thread");
  verify_cmd->add_option("--corrupt-entry", v_corrupt)->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (*table_cmd) return do_table(t_kind, t_max, t_format, t_route);

    if (*eval_cmd) {
      if (*psi_cmd) {
        std::cout << psi(e_m, e_n).get_str() << "\n";
      } else if (*psig_cmd) {
        std::cout << to_string(psi_general(e_a, e_m, e_n)) << "\n";
      } else if (*hyp_cmd) {
        const HyperSumQuery q{e_a, e_m, e_n};
        if (e_method == "brute") {
          std::cout << hyper_sum_brute(q).get_str() << "\n";
        } else {
          const auto c_table =
              CoeffTriangle::build(CoeffKind::c, std::max(2u, e_m), BuildRoute::explicit_formula);
          const Int expansion = hyper_sum_expansion(q, c_table);
          if (e_method == "expansion") {
            std::cout << expansion.get_str() << "\n";
          } else {
            const Int brute = hyper_sum_brute(q);
            std::cout << brute.get_str() << " " << expansion.get_str() << "\n";
            if (brute != expansion) return 1;
          }
        }
      } else if (*t_sum_cmd) {
        const auto c_table =
            CoeffTriangle::build(CoeffKind::c, std::max(2u, e_m), BuildRoute::explicit_formula);
        std::cout << to_string(weighted_power_sum(e_m, e_alpha, c_table)) << "\n";
      } else if (*u_sum_cmd) {
        const auto a_table =
            CoeffTriangle::build(CoeffKind::a, std::max(2u, e_m), BuildRoute::closed_form);
        std::cout << to_string(weighted_psi_sum(e_m, e_alpha, a_table)) << "\n";
      }
      return 0;
    }

    if (*verify_cmd) {
      const ExecMode mode = v_serial ? ExecMode::serial : ExecMode::parallel;
      const std::vector<std::string> families =
          v_family == "all" ? verify::family_names() : std::vector<std::string>{v_family};
      verify::TableSet tables = verify::build_tables(families, bounds, mode);
      if (!v_corrupt.empty()) apply_corruption(tables, v_corrupt);
      const auto runs = verify::run_families(families, tables, bounds, mode);
      std::cout << (v_format == "json" ? io::render_runs_json(runs)
                                       : io::render_runs_text(runs));
      return verify::all_pass(runs) ? 0 : 1;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
