// One PASS/FAIL line per acceptance criterion. All criteria are exact, so
// there are no numeric tolerances; the scan bounds below are the pinned
// thresholds.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "linecon/lattice_ops.hpp"
#include "linecon/oracle.hpp"
#include "linecon/render.hpp"
#include "linecon/trajectory.hpp"
#include "linecon/verify.hpp"

#ifndef LINECON_GOLDEN_DIR
#error "LINECON_GOLDEN_DIR must point at tests/golden"
#endif

using namespace linecon;

namespace {

constexpr int kCharacterizationMaxN = 9;
constexpr int kBruteForceCap = 10;
constexpr int kMeetMaxN = 12;
constexpr int kJoinMaxN = 12;
constexpr int kCriterionMaxN = 12;
constexpr int kCountingMaxN = 14;
constexpr int kCatalogMaxN = 14;
constexpr int kTableMaxN = 44;
constexpr int kFrequencyTwoMaxN = 14;
constexpr int kEmbeddingMaxN = 12;

struct Outcome {
  bool passed = true;
  std::string detail;
};

Outcome from_suite(const verify::SuiteResult& r) {
  return {r.passed, verify::format(r).substr(5)};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) return {};
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

Congruence F(int n, int k, std::vector<int> r = {}) { return Congruence::folded(n, k, std::move(r)); }

Outcome golden_diagrams() {
  std::vector<std::string> problems;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  };

  const auto d = build_trajectory(F(18, 4, {4, 13}), F(18, 6));
  expect(d.points.size() == 19, "19 points");
  expect(d.points.front() == Point{0, 0}, "start at (0,0)");
  expect(d.points.back() == Point{6, 0}, "end on the bottom edge at abscissa 6");
  std::vector<std::pair<int, int>> top_rests;
  for (const auto& b : d.bounces)
    if (b.is_rest && b.sides == kTop) top_rests.emplace_back(b.element, b.last);
  expect(top_rests == std::vector<std::pair<int, int>>{{4, 5}, {13, 14}}, "top rests at 4-5 and 13-14");
  expect(d.crossings.size() == 3, "3 crossings");

  const auto traj_svg = render_trajectory_svg(d);
  expect(traj_svg == render_trajectory_svg(build_trajectory(F(18, 4, {4, 13}), F(18, 6))),
         "trajectory svg is stable across runs");
  int labels = 0;
  for (auto pos = traj_svg.find("class=\"label\""); pos != std::string::npos;
       pos = traj_svg.find("class=\"label\"", pos + 1))
    ++labels;
  std::vector<bool> labeled(19, false);
  for (auto pos = traj_svg.find("font-size=\"0.3\">"); pos != std::string::npos;
       pos = traj_svg.find("font-size=\"0.3\">", pos + 1)) {
    std::istringstream text(traj_svg.substr(pos + 16, traj_svg.find('<', pos) - pos - 16));
    for (std::string tok; std::getline(text, tok, ',');) {
      const int x = std::stoi(tok);
      if (x >= 0 && x <= 18) labeled[x] = true;
    }
  }
  expect(labels > 0 && std::all_of(labeled.begin(), labeled.end(), [](bool b) { return b; }),
         "labels 0..18 in the svg");
  expect(traj_svg == slurp(std::string(LINECON_GOLDEN_DIR) + "/trajectory_4_4_13__6_L18.svg"),
         "trajectory svg matches golden bytes");

  const auto f = folding(F(5, 2, {2}));
  expect(f.heights == std::vector<int>{0, 1, 2, 2, 1, 0}, "folding heights 0,1,2,2,1,0");
  const auto fold_svg = render_folding_svg(f);
  expect(fold_svg == render_folding_svg(folding(F(5, 2, {2}))), "folding svg is stable across runs");
  expect(fold_svg == slurp(std::string(LINECON_GOLDEN_DIR) + "/folding_2_2_L5.svg"),
         "folding svg matches golden bytes");

  Outcome out;
  out.passed = problems.empty();
  if (out.passed) {
    out.detail = "19 points, 3 crossings, 2 top rests, goldens byte-equal";
  } else {
    out.detail = "failed:";
    for (const auto& p : problems) out.detail += " [" + p + "]";
  }
  return out;
}

struct Criterion {
  int id;
  std::string title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc == 3 && std::string(argv[1]) == "--criterion") only = std::atoi(argv[2]);

  const std::vector<Criterion> criteria{
      {1, "characterization equivalence",
       [] { return from_suite(verify::characterization(kCharacterizationMaxN, kBruteForceCap)); }},
      {2, "meet closed form and gcd", [] { return from_suite(verify::meet(kMeetMaxN)); }},
      {3, "join, lcm and permutability", [] { return from_suite(verify::join(kJoinMaxN)); }},
      {4, "nontriviality criterion", [] { return from_suite(verify::criterion(kCriterionMaxN)); }},
      {5, "counting formulas", [] { return from_suite(verify::counting(kCountingMaxN)); }},
      {6, "catalog and tables", [] { return from_suite(verify::catalog(kCatalogMaxN, kTableMaxN)); }},
      {7, "frequency-two law", [] { return from_suite(verify::frequency_two(kFrequencyTwoMaxN)); }},
      {8, "lattice structure",
       [] { return from_suite(verify::embedding(kEmbeddingMaxN, kBruteForceCap)); }},
      {9, "golden diagrams", golden_diagrams},
  };

  bool all = true;
  bool ran = false;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    ran = true;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << c.id << " " << c.title << ": " << o.detail
              << " [" << static_cast<int>(secs * 1000) << " ms]" << std::endl;
    all = all && o.passed;
  }
  if (!ran) {
    std::cerr << "usage: acceptance [--criterion 1..9]\n";
    return 2;
  }
  return all ? 0 : 1;
}
