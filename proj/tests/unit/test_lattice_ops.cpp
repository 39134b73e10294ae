#include <numeric>

#include "doctest.h"
#include "linecon/errors.hpp"
#include "linecon/lattice_ops.hpp"
#include "linecon/oracle.hpp"

using namespace linecon;

namespace {

Congruence F(int n, int k, std::vector<int> r = {}) { return Congruence::folded(n, k, std::move(r)); }
Congruence Id(int n) { return Congruence::identity(n); }
Congruence Tot(int n) { return Congruence::total(n); }

std::vector<Congruence> nontotal(int n) {
  auto all = enumerate_congruences(n);
  std::erase_if(all, [](const Congruence& c) { return c.is_total(); });
  return all;
}

}  // namespace

TEST_CASE("common extremes") {
  CHECK(common_extremes(F(18, 4, {4, 13}), F(18, 6)).eta == std::vector<int>{0, 18});
  CHECK(common_extremes(F(12, 2), F(12, 3)).eta == std::vector<int>{0, 6, 12});
  CHECK(common_extremes(F(4, 1), F(4, 2)).eta == std::vector<int>{0, 2, 4});
  CHECK_THROWS_AS(common_extremes(Tot(4), F(4, 2)), DomainError);
  CHECK_THROWS_AS(common_extremes(F(5, 1), F(4, 2)), DomainError);
}

TEST_CASE("compatibility") {
  CHECK(compatible(F(12, 2), F(12, 6)));
  CHECK(compatible(F(18, 4, {4, 13}), Id(18)));
  CHECK_THROWS_AS(compatible(F(12, 2), Tot(12)), DomainError);
  // first pair on L_12 where the order fails only through compatibility
  const auto all = nontotal(12);
  std::optional<std::pair<Congruence, Congruence>> found;
  for (const auto& g : all)
    for (const auto& t : all) {
      if (found || !g.is_folded() || !t.is_folded()) continue;
      const auto& tr = t.rests();
      bool subset = std::includes(tr.begin(), tr.end(), g.rests().begin(), g.rests().end());
      if (is_extreme(t, g.step()) && subset && !compatible(t, g)) found.emplace(g, t);
    }
  REQUIRE(found);
  CHECK(to_string(found->first) == "2");
  CHECK(to_string(found->second) == "1;1");
  CHECK_FALSE(to_partition(found->first).refines(to_partition(found->second)));
}

TEST_CASE("order examples") {
  CHECK_FALSE(leq(F(3, 1), F(3, 1, {1})));
  CHECK_FALSE(leq(F(9, 3), F(9, 1, {1, 3, 5, 7})));
  CHECK(leq(F(9, 4, {4}), F(9, 2, {4})));
  CHECK_FALSE(leq(F(12, 2), F(12, 3)));
  CHECK_FALSE(leq(F(12, 3), F(12, 2)));
  for (const auto& c : enumerate_congruences(8)) {
    CHECK(leq(Id(8), c));
    CHECK(leq(c, Tot(8)));
  }
}

TEST_CASE("order agrees with refinement") {
  for (int n = 0; n <= 14; ++n) {
    auto all = enumerate_congruences(n);
    std::vector<Partition> parts;
    for (const auto& c : all) parts.push_back(to_partition(c));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j)
        REQUIRE_MESSAGE(leq(all[i], all[j]) == parts[i].refines(parts[j]),
                        to_string(all[i]) << " <= " << to_string(all[j]) << " on L_" << n);
  }
}

TEST_CASE("meet examples") {
  CHECK(meet(F(4, 1), F(4, 2)) == F(4, 2));
  CHECK(meet(F(12, 2), F(12, 3)) == F(12, 6));
  CHECK(meet(F(6, 2), F(6, 3)) == Id(6));
  CHECK(meet(Tot(6), F(6, 3)) == F(6, 3));
  CHECK(meet_closed_form(F(12, 2), F(12, 3)) == F(12, 6));
}

TEST_CASE("join examples") {
  CHECK(join(F(6, 2), F(6, 3)) == F(6, 1));
  CHECK(join(F(9, 4, {4}), F(9, 1)) == Tot(9));
  CHECK(join(F(12, 2), F(12, 3)) == F(12, 1));
}

TEST_CASE("meet and join agree with the oracle lattice") {
  for (int n = 0; n <= 12; ++n) {
    auto all = enumerate_congruences(n);
    std::vector<Partition> parts;
    for (const auto& c : all) parts.push_back(to_partition(c));
    auto lat = oracle::build_lattice(parts);
    REQUIRE(lat.size() == static_cast<int>(all.size()));
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = 0; j < all.size(); ++j) {
        int li = *lat.index_of(parts[i]), lj = *lat.index_of(parts[j]);
        REQUIRE_MESSAGE(to_partition(meet(all[i], all[j])) == lat.elements[lat.meet(li, lj)],
                        "meet " << to_string(all[i]) << ", " << to_string(all[j]) << " on L_" << n);
        REQUIRE(to_partition(join(all[i], all[j])) == lat.elements[lat.join(li, lj)]);
      }
  }
}

TEST_CASE("criterion examples") {
  CHECK(join_is_nontrivial(F(18, 4, {4, 13}), F(18, 6)));
  CHECK_FALSE(join_is_nontrivial(F(9, 4, {4}), F(9, 1)));
  CHECK(join_is_nontrivial(F(39, 7, {7, 15, 23, 31}), F(39, 9, {9, 19, 29})));
  CHECK_THROWS_AS(join_is_nontrivial(Tot(5), F(5, 1)), DomainError);
}

TEST_CASE("criterion agrees with closure") {
  for (int n = 1; n <= 14; ++n) {
    auto all = nontotal(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        auto rep = nontriviality_criterion(a, b);
        REQUIRE_MESSAGE(rep.nontrivial() == !join(a, b).is_total(),
                        to_string(a) << " v " << to_string(b) << " on L_" << n);
      }
  }
}

TEST_CASE("meet closed form, gcd and lcm on nontrivial joins") {
  for (int n = 1; n <= 14; ++n) {
    auto all = nontotal(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        auto j = join(a, b);
        if (j.is_total()) continue;
        auto m = meet_closed_form(a, b);
        REQUIRE(leq(m, a));
        REQUIRE(leq(m, b));
        CHECK(frequency(m) == std::gcd(frequency(a), frequency(b)));
        CHECK(frequency(j) == lcm_ll(frequency(a), frequency(b)));
        CHECK(step_of_join(a, b) == j.step());
        auto pa = to_partition(a), pb = to_partition(b);
        CHECK(compose(pa, pb) == BinaryRelation::of(to_partition(j)));
        CHECK(compose(pb, pa) == BinaryRelation::of(to_partition(j)));
      }
  }
}

TEST_CASE("common extremes carry matching rest parts under nontrivial joins") {
  for (int n = 1; n <= 14; ++n) {
    auto all = nontotal(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (join(a, b).is_total()) continue;
        for (int e : common_extremes(a, b).eta) CHECK(rest_side(a, e) == rest_side(b, e));
      }
  }
}

TEST_CASE("frequency decomposition through the first common extreme") {
  for (int n = 1; n <= 12; ++n) {
    auto all = nontotal(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (join(a, b).is_total()) continue;
        const int e1 = common_extremes(a, b).first_positive();
        auto ra = restrict_to(a, e1), rb = restrict_to(b, e1);
        auto m = meet(a, b);
        CHECK(frequency(a) == frequency(ra) * frequency(m));
        CHECK(frequency(join(a, b)) == frequency(join(ra, rb)) * frequency(m));
      }
  }
}

TEST_CASE("permutes") {
  CHECK(permutes(F(12, 2, {4, 7}), F(12, 6)));
  CHECK(permutes(F(18, 4, {4, 13}), F(18, 6)));
  // first non-permuting pair in enumeration order, n <= 9
  std::optional<std::pair<std::string, std::string>> first;
  int first_n = 0;
  for (int n = 1; n <= 9 && !first; ++n) {
    const auto all = enumerate_congruences(n);
    for (const auto& a : all)
      for (const auto& b : all)
        if (!first && !permutes(a, b)) {
          first.emplace(to_string(a), to_string(b));
          first_n = n;
        }
  }
  REQUIRE(first);
  CHECK(first_n == 4);
  CHECK(first->first == "1;1");
  CHECK(first->second == "1;2");
}

TEST_CASE("rest profiles") {
  CHECK(rest_profile(F(18, 4, {4, 13})) == RestProfile::TopOnly);
  CHECK(rest_profile(F(18, 6)) == RestProfile::NoRests);
  CHECK(rest_profile(F(22, 4, {8, 17})) == RestProfile::BottomOnly);
  CHECK(rest_profile(F(44, 8, {8, 17, 26, 35})) == RestProfile::Everywhere);
  CHECK(rest_profile(Id(5)) == RestProfile::NoRests);
  CHECK_THROWS_AS(rest_profile(Tot(5)), DomainError);
}

TEST_CASE("regular profiles follow the closed rest formulas") {
  for (int n = 1; n <= 24; ++n)
    for (const auto& c : enumerate_congruences(n)) {
      if (!c.is_folded() || c.rests().empty()) continue;
      const int k = c.step();
      auto p = rest_profile(c);
      for (std::size_t i0 = 0; i0 < c.rests().size(); ++i0) {
        const int i = static_cast<int>(i0) + 1, r = c.rests()[i0];
        if (p == RestProfile::TopOnly) CHECK(r == (2 * k + 1) * i - k - 1);
        if (p == RestProfile::BottomOnly) CHECK(r == (2 * k + 1) * i - 1);
        if (p == RestProfile::Everywhere) CHECK(r == (k + 1) * i - 1);
      }
    }
}

TEST_CASE("catalog cases") {
  CHECK(catalog_case(F(22, 4, {4, 13}), F(22, 7, {7})) == CatalogCase::BothOddTop);
  CHECK(catalog_case(F(44, 7, {14, 29}), F(44, 8, {8, 17, 26, 35})) ==
        CatalogCase::EvenBottomVsOddEverywhere);
  CHECK(catalog_case(F(6, 2), F(6, 3)) == CatalogCase::FreqTwoMirrored);
  CHECK(catalog_case(F(7, 2, {2}), Id(7)) == CatalogCase::FreqOne);
  CHECK_THROWS_AS(catalog_case(F(12, 2), F(12, 3)), DomainError);
  CHECK_THROWS_AS(catalog_case(F(9, 4, {4}), F(9, 1)), DomainError);
}

TEST_CASE("every endpoint-only nontrivial pair has exactly one case") {
  for (int n = 1; n <= 14; ++n) {
    auto all = nontotal(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (!common_extremes(a, b).only_endpoints() || join(a, b).is_total()) continue;
        CHECK_NOTHROW(catalog_case(a, b));
      }
  }
}

TEST_CASE("simplified relations") {
  auto c = F(18, 4, {4, 13});
  CHECK(simplified_relation(RestProfile::TopOnly, 4, 18) == BinaryRelation::of(to_partition(c)));
  CHECK(simplified_related(RestProfile::NoRests, 3, 1, 5));
  CHECK(simplified_related(RestProfile::Everywhere, 3, 2, 5));
  CHECK_FALSE(simplified_related(RestProfile::Everywhere, 3, 2, 4));
  CHECK_THROWS_AS(simplified_related(RestProfile::Irregular, 3, 0, 0), DomainError);
}

TEST_CASE("table of line lengths") {
  CHECK(n_from_step_frequency(RestProfile::NoRests, 6, 3) == 18);
  CHECK(n_from_step_frequency(RestProfile::TopOnly, 4, 4) == 18);
  CHECK(n_from_step_frequency(RestProfile::Everywhere, 7, 5) == 39);
  CHECK(n_from_step_frequency(RestProfile::TopOnly, 7, 3) == 22);
  CHECK(n_from_step_frequency(RestProfile::BottomOnly, 7, 6) == 44);
  CHECK(n_from_step_frequency(RestProfile::BottomOnly, 4, 5) == 22);
  CHECK_THROWS_AS(n_from_step_frequency(RestProfile::NoRests, 6, 2), DomainError);
  CHECK_THROWS_AS(n_from_step_frequency(RestProfile::Irregular, 6, 3), DomainError);
}

TEST_CASE("step of join") {
  CHECK(step_of_join(F(18, 4, {4, 13}), F(18, 6)) == 1);
  CHECK(step_of_join_product_formula(F(18, 4, {4, 13}), F(18, 6)) == 1);
  CHECK(step_of_join(F(12, 2), F(12, 3)) == 1);
  CHECK(step_of_join(F(12, 2, {4, 7}), Id(12)) == 2);
  CHECK_THROWS_AS(step_of_join(F(9, 4, {4}), F(9, 1)), DomainError);
}

TEST_CASE("product formula on endpoint-only pairs") {
  for (int n = 1; n <= 14; ++n) {
    auto all = nontotal(n);
    for (const auto& a : all)
      for (const auto& b : all) {
        if (!common_extremes(a, b).only_endpoints() || join(a, b).is_total()) continue;
        CHECK(step_of_join_product_formula(a, b) == step_of_join(a, b));
        CHECK(frequency(join(a, b)) == frequency(a) * frequency(b));
        CHECK(std::gcd(frequency(a), frequency(b)) == 1);
      }
  }
}

TEST_CASE("divisor embedding") {
  auto rep = divisor_embedding(F(12, 1));
  CHECK(rep.ok());
  for (int f : rep.frequencies) CHECK(12 % f == 0);
  auto id = divisor_embedding(Id(7));
  CHECK(id.ok());
  CHECK(id.ideal == std::vector<Congruence>{Id(7)});
  CHECK(id.frequencies == std::vector<int>{1});
  auto two = divisor_embedding(F(12, 2));
  CHECK(two.ok());
  std::vector<std::string> names;
  for (const auto& c : two.ideal) names.push_back(to_string(c));
  CHECK(names == std::vector<std::string>{"id", "2", "4", "6"});
  CHECK_THROWS_AS(divisor_embedding(Tot(4)), DomainError);
}

TEST_CASE("catalog candidates match filtering the full enumeration") {
  for (int n = 1; n <= 22; ++n) {
    std::vector<Congruence> filtered;
    for (const auto& c : enumerate_congruences(n)) {
      if (!c.is_folded() || frequency(c) < 3) continue;
      if (rest_profile(c) != RestProfile::Irregular) filtered.push_back(c);
    }
    CHECK(catalog_candidates(n) == filtered);
  }
}
