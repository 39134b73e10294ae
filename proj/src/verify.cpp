#include "linecon/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "linecon/errors.hpp"
#include "linecon/lattice_ops.hpp"
#include "linecon/oracle.hpp"
#include "linecon/trajectory.hpp"

namespace linecon::verify {

namespace {

class Recorder {
 public:
  Recorder(std::string name, std::string scope) {
    r_.name = std::move(name);
    r_.scope = std::move(scope);
  }
  // Records one check; returns false once a counterexample has been seen.
  template <class Msg>
  bool expect(bool ok, Msg&& msg) {
    ++r_.checks;
    if (!ok && r_.passed) {
      r_.passed = false;
      r_.counterexample = msg();
    }
    return r_.passed;
  }
  bool ok() const { return r_.passed; }
  SuiteResult done() { return r_; }

 private:
  SuiteResult r_;
};

std::string upto(int n) { return "n <= " + std::to_string(n); }

std::string pair_str(const Congruence& a, const Congruence& b) {
  return "(" + to_string(a) + ", " + to_string(b) + ") on L_" + std::to_string(a.n());
}

std::vector<Congruence> nontotal(int n) {
  auto all = enumerate_congruences(n);
  std::erase_if(all, [](const Congruence& c) { return c.is_total(); });
  return all;
}

oracle::CongruenceLattice lattice_of(const std::vector<Congruence>& cs) {
  std::vector<Partition> parts;
  for (const auto& c : cs) parts.push_back(to_partition(c));
  return oracle::build_lattice(parts);
}

Congruence F(int n, int k, std::vector<int> r = {}) { return Congruence::folded(n, k, std::move(r)); }

}  // namespace

SuiteResult characterization(int max_n, int cap) {
  const int top = std::min(max_n, cap);
  Recorder rec("characterization", upto(top));
  for (int n = 0; n <= top && rec.ok(); ++n) {
    auto brute = oracle::congruences_bruteforce(n, cap);
    std::set<Partition> expected(brute.begin(), brute.end());
    std::set<Partition> got;
    for (const auto& c : enumerate_congruences(n)) got.insert(to_partition(c));
    rec.expect(got == expected, [&] {
      for (const auto& p : expected)
        if (!got.count(p)) return "L_" + std::to_string(n) + ": enumeration misses " + to_string(p);
      for (const auto& p : got)
        if (!expected.count(p)) return "L_" + std::to_string(n) + ": enumeration adds " + to_string(p);
      return std::string("set mismatch");
    });
  }
  return rec.done();
}

SuiteResult meet(int max_n) {
  Recorder rec("meet", upto(max_n));
  for (int n = 0; n <= max_n && rec.ok(); ++n) {
    auto all = enumerate_congruences(n);
    auto lat = lattice_of(all);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto pa = to_partition(a), pb = to_partition(b);
        const auto& glb = lat.elements[lat.meet(*lat.index_of(pa), *lat.index_of(pb))];
        if (!rec.expect(to_partition(linecon::meet(a, b)) == glb,
                        [&] { return "meet of " + pair_str(a, b) + " is not the glb"; }))
          return rec.done();
        if (a.is_total() || b.is_total() || linecon::join(a, b).is_total()) continue;
        const auto m = meet_closed_form(a, b);
        rec.expect(to_partition(m) == glb,
                   [&] { return "closed form " + to_string(m) + " for " + pair_str(a, b) + " is not the glb"; });
        rec.expect(frequency(m) == std::gcd(frequency(a), frequency(b)),
                   [&] { return "meet frequency is not gcd for " + pair_str(a, b); });
        if (!rec.ok()) return rec.done();
      }
  }
  return rec.done();
}

SuiteResult join(int max_n) {
  Recorder rec("join", upto(max_n));
  for (int n = 0; n <= max_n && rec.ok(); ++n) {
    auto all = enumerate_congruences(n);
    auto lat = lattice_of(all);
    for (const auto& a : all)
      for (const auto& b : all) {
        const auto pa = to_partition(a), pb = to_partition(b);
        const auto j = linecon::join(a, b);
        const auto pj = to_partition(j);
        rec.expect(pj == lat.elements[lat.join(*lat.index_of(pa), *lat.index_of(pb))],
                   [&] { return "join of " + pair_str(a, b) + " is not the lub"; });
        if (a.is_total() || b.is_total() || j.is_total()) continue;
        const long long l = lcm_ll(frequency(a), frequency(b));
        rec.expect(frequency(j) == l, [&] { return "join frequency is not lcm for " + pair_str(a, b); });
        rec.expect(step_of_join(a, b) == n / l && j.step() == n / l,
                   [&] { return "step of join differs from n div lcm for " + pair_str(a, b); });
        const auto rj = BinaryRelation::of(pj);
        rec.expect(compose(pa, pb) == rj && compose(pb, pa) == rj,
                   [&] { return "composition differs from join for " + pair_str(a, b); });
        if (!rec.ok()) return rec.done();
      }
  }
  return rec.done();
}

SuiteResult criterion(int max_n) {
  Recorder rec("criterion", upto(max_n));
  for (int n = 1; n <= max_n && rec.ok(); ++n) {
    auto all = nontotal(n);
    for (const auto& a : all)
      for (const auto& b : all)
        if (!rec.expect(join_is_nontrivial(a, b) == !linecon::join(a, b).is_total(),
                        [&] { return "criterion disagrees with closure on " + pair_str(a, b); }))
          return rec.done();
  }
  return rec.done();
}

SuiteResult counting(int max_n) {
  Recorder rec("counting", upto(max_n));
  for (int n = 1; n <= max_n && rec.ok(); ++n) {
    auto all = nontotal(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (a.step() > b.step() || !common_extremes(a, b).only_endpoints()) continue;
        const auto j = linecon::join(a, b);
        if (j.is_total()) continue;
        const auto d = build_trajectory(a, b);
        const auto cc = crossing_counts(d);
        const int fa = frequency(a), fb = frequency(b);
        auto who = [&] { return pair_str(a, b); };
        rec.expect(d.overlaps.empty(), [&] { return "overlapping segments for " + who(); });
        rec.expect(2 * cc.total() == (fa - 1) * (fb - 1),
                   [&] { return "crossing count " + std::to_string(cc.total()) + " for " + who(); });
        if (!a.rests().empty() || !b.rests().empty()) {
          const int ej = static_cast<int>(extremes(j).size());
          const int ea = static_cast<int>(extremes(a).size());
          const int eb = static_cast<int>(extremes(b).size());
          rec.expect(ej == ea + eb + 2 * cc.i + 4 * cc.h - 2,
                     [&] { return "extreme count of the join for " + who(); });
          rec.expect(frequency(j) == fa + fb - 1 + 2 * cc.total(),
                     [&] { return "join frequency from crossings for " + who(); });
        }
        rec.expect(frequency(j) == fa * fb, [&] { return "join frequency is not the product for " + who(); });
        rec.expect(std::gcd(fa, fb) == 1, [&] { return "frequencies not coprime for " + who(); });
        const Point end = d.points.back();
        rec.expect(end.y == (fa % 2 == 0 ? 0 : d.k) && end.x == (fb % 2 == 0 ? 0 : d.l),
                   [&] { return "endpoint parity for " + who(); });
        if (!rec.ok()) return rec.done();
      }
  }
  return rec.done();
}

SuiteResult catalog(int max_n, int table_max_n) {
  Recorder rec("catalog", upto(max_n) + ", tables " + upto(table_max_n));
  auto unique_case = [&](const Congruence& a, const Congruence& b) {
    auto cases = matching_cases(a, b);
    return rec.expect(cases.size() == 1, [&] {
      return std::to_string(cases.size()) + " catalog cases for " + pair_str(a, b);
    });
  };
  for (int n = 1; n <= max_n && rec.ok(); ++n) {
    auto all = nontotal(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (!common_extremes(a, b).only_endpoints() || linecon::join(a, b).is_total()) continue;
        if (!unique_case(a, b)) return rec.done();
      }
  }

  struct Example {
    Congruence a, b;
    CatalogCase expected;
  };
  const std::vector<Example> examples{
      {F(18, 4, {4, 13}), F(18, 6), CatalogCase::EvenTopVsOddNoRests},
      {F(30, 6), F(30, 7, {7, 22}), CatalogCase::EvenTopVsOddNoRests},
      {F(22, 4, {4, 13}), F(22, 7, {7}), CatalogCase::BothOddTop},
      {F(22, 4, {8, 17}), F(22, 7, {14}), CatalogCase::SameParityBottom},
      {F(44, 7, {14, 29}), F(44, 8, {8, 17, 26, 35}), CatalogCase::EvenBottomVsOddEverywhere},
      {F(29, 5, {5, 11, 17, 23}), F(29, 7, {14}), CatalogCase::EvenBottomVsOddEverywhere},
      {F(39, 7, {7, 15, 23, 31}), F(39, 9, {9, 19, 29}), CatalogCase::BothEverywhere},
      {F(12, 2, {4, 7}), F(12, 6), CatalogCase::FreqTwoMirrored},
  };
  for (const auto& e : examples) {
    rec.expect(!linecon::join(e.a, e.b).is_total(), [&] { return "trivial join for " + pair_str(e.a, e.b); });
    rec.expect(common_extremes(e.a, e.b).only_endpoints(),
               [&] { return "extra common extremes for " + pair_str(e.a, e.b); });
    auto cases = matching_cases(e.a, e.b);
    rec.expect(cases == std::vector<CatalogCase>{e.expected},
               [&] { return "wrong catalog case for " + pair_str(e.a, e.b); });
  }
  rec.expect(!validate(12, 2, {7, 9}).ok(), [] { return std::string("<2;7,9> validated on L_12"); });
  rec.expect(is_mirrored(F(12, 2, {4, 7})), [] { return std::string("<2;4,7> is not mirrored"); });

  for (int n = 1; n <= table_max_n && rec.ok(); ++n) {
    const auto members = catalog_candidates(n);
    for (const auto& c : members) {
      const auto p = rest_profile(c);
      rec.expect(simplified_relation(p, c.step(), n) == BinaryRelation::of(to_partition(c)),
                 [&] { return "simplified relation differs for " + to_string(c) + " on L_" + std::to_string(n); });
      rec.expect(n_from_step_frequency(p, c.step(), frequency(c)) == n,
                 [&] { return "table n(l,f) misses " + to_string(c) + " on L_" + std::to_string(n); });
    }
    for (const auto& a : members)
      for (const auto& b : members) {
        if (!common_extremes(a, b).only_endpoints() || linecon::join(a, b).is_total()) continue;
        if (!unique_case(a, b)) return rec.done();
      }
  }
  return rec.done();
}

SuiteResult frequency_two(int max_n) {
  // Scans everything so the report separates the two directions.
  Recorder rec("frequency-two", upto(max_n));
  long long trivial_but_mirrored = 0, nontrivial_unmirrored = 0, not_permuting = 0;
  for (int n = 1; n <= max_n; ++n) {
    auto all = nontotal(n);
    for (const auto& d : all) {
      if (frequency(d) != 2) continue;
      for (const auto& t : all) {
        const bool mirrored = is_mirrored(t);
        const bool nontrivial = !linecon::join(t, d).is_total();
        if (mirrored && !nontrivial) ++trivial_but_mirrored;
        if (!mirrored && nontrivial) ++nontrivial_unmirrored;
        rec.expect(nontrivial == mirrored,
                   [&] { return "join nontriviality differs from mirroredness for " + pair_str(t, d); });
        if (mirrored) {
          const bool p = permutes(t, d);
          if (!p) ++not_permuting;
          rec.expect(p, [&] { return "mirrored pair does not permute: " + pair_str(t, d); });
        }
      }
    }
  }
  auto r = rec.done();
  if (!r.passed)
    r.counterexample += "; mirrored with trivial join: " + std::to_string(trivial_but_mirrored) +
                        ", nontrivial join without mirroring: " + std::to_string(nontrivial_unmirrored) +
                        ", mirrored pairs not permuting: " + std::to_string(not_permuting);
  return r;
}

SuiteResult embedding(int max_n, int cap) {
  Recorder rec("embedding", upto(max_n));
  if (max_n >= 9) {
    auto lat = lattice_of(enumerate_congruences(9));
    auto idx = [&](const Congruence& c) { return *lat.index_of(to_partition(c)); };
    const int bot = idx(Congruence::identity(9)), a = idx(F(9, 4, {4})), b = idx(F(9, 2, {4})),
              c = idx(F(9, 1)), top = idx(Congruence::total(9));
    rec.expect(lat.leq(a, b) && a != b && !lat.leq(a, c) && !lat.leq(c, a) && !lat.leq(b, c) &&
                   !lat.leq(c, b) && lat.join(a, c) == top && lat.join(b, c) == top &&
                   lat.meet(a, c) == bot && lat.meet(b, c) == bot,
               [] { return std::string("{id, <4;4>, <2;4>, <1>, total} is not a pentagon in Con L_9"); });
    rec.expect(!oracle::is_modular(lat), [] { return std::string("Con L_9 is modular"); });
  }
  for (int p : {5, 7}) {
    if (p > max_n || p > cap) continue;
    auto lat = oracle::build_lattice(p, cap);
    rec.expect(oracle::find_m_antichain(lat, p - 2).has_value(), [&] {
      return "no antichain of size " + std::to_string(p - 2) + " in Con L_" + std::to_string(p);
    });
  }
  for (int n = 0; n <= max_n && rec.ok(); ++n) {
    auto all = enumerate_congruences(n);
    auto lat = lattice_of(all);
    for (const auto& rho : all) {
      if (rho.is_total()) continue;
      auto rep = divisor_embedding(rho);
      rec.expect(rep.ok(), [&] { return "embedding below " + to_string(rho) + " on L_" + std::to_string(n) + ": " + rep.failure; });
      // independent reading from the oracle tables
      const auto ideal = oracle::principal_ideal(lat, *lat.index_of(to_partition(rho)));
      std::vector<int> freq(lat.size(), 0);
      for (int i : ideal) freq[i] = frequency(canonicalize(lat.elements[i]));
      std::set<int> seen;
      for (int i : ideal) {
        rec.expect(seen.insert(freq[i]).second && frequency(rho) % freq[i] == 0,
                   [&] { return "frequency map below " + to_string(rho) + " is not injective into divisors"; });
        for (int j : ideal)
          rec.expect(freq[lat.meet(i, j)] == std::gcd(freq[i], freq[j]) &&
                         freq[lat.join(i, j)] == lcm_ll(freq[i], freq[j]),
                     [&] { return "oracle tables break gcd/lcm below " + to_string(rho); });
      }
      rec.expect(oracle::is_distributive(lat, ideal),
                 [&] { return "ideal below " + to_string(rho) + " is not distributive"; });
      if (!rec.ok()) return rec.done();
    }
  }
  return rec.done();
}

std::vector<std::string> suite_names() {
  return {"characterization", "meet", "join", "criterion", "counting",
          "catalog", "embedding", "frequency-two", "all"};
}

std::vector<SuiteResult> run(const std::string& suite, int max_n, int cap) {
  const bool all = suite == "all";
  std::vector<SuiteResult> out;
  if (all || suite == "characterization") out.push_back(characterization(max_n, cap));
  if (all || suite == "meet") out.push_back(meet(max_n));
  if (all || suite == "join") out.push_back(join(max_n));
  if (all || suite == "criterion") out.push_back(criterion(max_n));
  if (all || suite == "counting") out.push_back(counting(max_n));
  if (all || suite == "catalog") out.push_back(catalog(max_n, std::max(max_n, 44)));
  if (suite == "frequency-two") out.push_back(frequency_two(max_n));
  if (all || suite == "embedding") out.push_back(embedding(max_n, cap));
  if (out.empty()) throw DomainError("unknown suite \"" + suite + "\"");
  return out;
}

std::string format(const SuiteResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.scope << ", " << r.checks << " checks)";
  if (!r.passed) os << ": " << r.counterexample;
  return os.str();
}

}  // namespace linecon::verify
