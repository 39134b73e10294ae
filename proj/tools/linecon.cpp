#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "linecon/errors.hpp"
#include "linecon/io.hpp"
#include "linecon/lattice_ops.hpp"
#include "linecon/oracle.hpp"
#include "linecon/render.hpp"
#include "linecon/trajectory.hpp"
#include "linecon/verify.hpp"

using namespace linecon;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct PairArgs {
  int n = 0;
  std::string a, b;
  std::string format = "text";
};

void add_pair_options(CLI::App* cmd, PairArgs& args) {
  cmd->add_option("--n", args.n, "line length")->required()->check(CLI::NonNegativeNumber);
  cmd->add_option("--a", args.a, "first congruence: id | total | k | k;r1,r2,...")->required();
  cmd->add_option("--b", args.b, "second congruence")->required();
  cmd->add_option("--format", args.format)->check(CLI::IsMember({"text", "json"}));
}

json congruence_record(const Congruence& c) {
  json j = to_json(c);
  j["form"] = to_string(c);
  return j;
}

void emit(const json& record, const std::string& format) {
  if (format == "json") {
    std::cout << record.dump(2) << "\n";
    return;
  }
  for (const auto& [key, value] : record.items())
    std::cout << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
}

std::optional<CatalogCase> catalog_of(const Congruence& a, const Congruence& b) {
  if (a.is_total() || b.is_total() || !common_extremes(a, b).only_endpoints()) return std::nullopt;
  if (join(a, b).is_total()) return std::nullopt;
  return catalog_case(a, b);
}

json join_record(const Congruence& a, const Congruence& b) {
  const auto j = join(a, b);
  json r;
  r["form"] = to_string(j);
  r["nontrivial"] = !j.is_total();
  r["step"] = j.step();
  if (!j.is_total()) r["frequency"] = frequency(j);
  if (auto c = catalog_of(a, b)) r["catalog"] = to_string(*c);
  return r;
}

json criterion_record(const Congruence& a, const Congruence& b) {
  json r;
  if (a.is_total() || b.is_total()) {
    r["nontrivial"] = false;
    return r;
  }
  const auto rep = nontriviality_criterion(a, b);
  r["common_extremes"] = rep.eta.eta;
  r["rest_part_agreement"] = rep.rest_part_agreement;
  r["gamma_valid"] = rep.gamma_valid;
  r["catalog_pair"] = rep.catalog_pair;
  r["a_compatible"] = rep.a_compatible;
  r["b_compatible"] = rep.b_compatible;
  if (rep.gamma) r["gamma"] = to_string(*rep.gamma);
  json cases = json::array();
  for (auto c : rep.restricted_cases) cases.push_back(to_string(c));
  r["restricted_cases"] = cases;
  r["nontrivial"] = rep.nontrivial();
  return r;
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw DomainError("cannot open " + out + " for writing");
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Congruences of finite line frames"};
  app.require_subcommand(1);

  int n = 0;

  auto* enumerate = app.add_subcommand("enumerate", "list every congruence of L_n");
  std::string enum_format = "table";
  enumerate->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--format", enum_format)->check(CLI::IsMember({"table", "json"}));

  auto* lattice = app.add_subcommand("lattice", "Hasse diagram or full table dump of Con L_n");
  std::string lat_format = "dot";
  lattice->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  lattice->add_option("--format", lat_format)->check(CLI::IsMember({"dot", "json"}));

  PairArgs pair;
  auto* meet_cmd = app.add_subcommand("meet", "meet of two congruences");
  auto* join_cmd = app.add_subcommand("join", "join of two congruences");
  auto* leq_cmd = app.add_subcommand("leq", "whether a is below b");
  auto* classify_cmd = app.add_subcommand("classify", "criterion report and catalog case");
  for (auto* cmd : {meet_cmd, join_cmd, leq_cmd, classify_cmd}) add_pair_options(cmd, pair);

  auto* diagram = app.add_subcommand("diagram", "folding or trajectory picture");
  std::string kind = "folding", diag_format = "ascii", out;
  std::string da, db;
  diagram->add_option("--kind", kind)->check(CLI::IsMember({"folding", "trajectory"}));
  diagram->add_option("--n", n)->required()->check(CLI::NonNegativeNumber);
  diagram->add_option("--a", da, "congruence (the one with the smaller step for trajectories)")->required();
  diagram->add_option("--b", db, "second congruence, trajectories only");
  diagram->add_option("--format", diag_format)->check(CLI::IsMember({"ascii", "svg"}));
  diagram->add_option("--out", out, "output file, stdout when omitted");

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  std::string suite = "all";
  int max_n = 8;
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember(verify::suite_names()));
  verify_cmd->add_option("--max-n", max_n)->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*enumerate) {
      const auto all = enumerate_congruences(n);
      if (enum_format == "json") {
        json arr = json::array();
        for (const auto& c : all) {
          json j = to_json(c);
          j["form"] = to_string(c);
          if (!c.is_total()) j["extremes"] = extremes(c);
          arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
      } else {
        std::cout << format_table(all);
      }
    } else if (*lattice) {
      std::vector<Partition> parts;
      for (const auto& c : enumerate_congruences(n)) parts.push_back(to_partition(c));
      const auto lat = oracle::build_lattice(parts);
      if (lat_format == "json")
        std::cout << lattice_to_json(lat).dump(2) << "\n";
      else
        std::cout << lattice_to_dot(lat);
    } else if (*meet_cmd || *join_cmd || *leq_cmd || *classify_cmd) {
      const auto a = parse_congruence(pair.n, pair.a);
      const auto b = parse_congruence(pair.n, pair.b);
      json r;
      if (*meet_cmd) {
        r = congruence_record(meet(a, b));
      } else if (*join_cmd) {
        r = join_record(a, b);
      } else if (*leq_cmd) {
        if (pair.format == "json") {
          r["leq"] = leq(a, b);
        } else {
          std::cout << (leq(a, b) ? "true" : "false") << "\n";
          return 0;
        }
      } else {
        r["a"] = to_string(a);
        r["b"] = to_string(b);
        r["criterion"] = criterion_record(a, b);
        r["join"] = join_record(a, b);
        r["meet"] = to_string(meet(a, b));
        r["permutes"] = permutes(a, b);
        // nested record, always JSON
        std::cout << r.dump(2) << "\n";
        return 0;
      }
      emit(r, pair.format);
    } else if (*diagram) {
      const auto a = parse_congruence(n, da);
      std::string text;
      if (kind == "folding") {
        if (!db.empty()) throw ParseError("--b is only used for trajectory diagrams");
        const auto f = folding(a);
        text = diag_format == "svg" ? render_folding_svg(f) : render_folding_ascii(f);
      } else {
        if (db.empty()) throw ParseError("trajectory diagrams need --b");
        auto b = parse_congruence(n, db);
        const bool swap = !a.is_total() && !b.is_total() && a.step() > b.step();
        const auto d = swap ? build_trajectory(b, a) : build_trajectory(a, b);
        text = diag_format == "svg" ? render_trajectory_svg(d) : render_trajectory_ascii(d);
      }
      write_output(text, out);
    } else if (*verify_cmd) {
      bool ok = true;
      for (const auto& r : verify::run(suite, max_n, oracle::cap_from_env())) {
        std::cout << verify::format(r) << "\n";
        ok = ok && r.passed;
      }
      return ok ? 0 : kExitCounterexample;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UndefinedOperation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return 0;
}
