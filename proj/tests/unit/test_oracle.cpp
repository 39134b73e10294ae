#include <random>

#include "doctest.h"
#include "linecon/congruence.hpp"
#include "linecon/errors.hpp"
#include "linecon/oracle.hpp"

using namespace linecon;
using namespace linecon::oracle;

namespace {

std::vector<int> all_indices(const CongruenceLattice& lat) {
  std::vector<int> v(lat.size());
  for (int i = 0; i < lat.size(); ++i) v[i] = i;
  return v;
}

Frame random_frame(std::mt19937& rng, int nodes) {
  std::vector<std::pair<int, int>> edges;
  std::bernoulli_distribution coin(0.3);
  for (int x = 0; x < nodes; ++x)
    for (int y = 0; y < nodes; ++y)
      if (coin(rng)) edges.emplace_back(x, y);
  return Frame(nodes, edges);
}

Partition random_partition(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> pick(0, n);
  std::vector<int> labels(n + 1);
  for (auto& l : labels) l = pick(rng);
  return Partition(labels);
}

}  // namespace

TEST_CASE("partition counts are Bell numbers") {
  CHECK(count_partitions(0) == 1);
  CHECK(count_partitions(1) == 2);
  CHECK(count_partitions(3) == 15);
  CHECK(count_partitions(9) == 115975);
}

TEST_CASE("cap guards exhaustive search") {
  CHECK_THROWS_AS(count_partitions(11), DomainError);
  CHECK_THROWS_AS(congruences_bruteforce(12, 10), DomainError);
  CHECK(count_partitions(4, 4) == 52);
}

TEST_CASE("brute-force congruence counts") {
  const std::vector<int> sizes{1, 2, 3, 4, 6, 8, 12, 18, 26, 41};
  for (int n = 0; n <= 9; ++n) CHECK(congruences_bruteforce(n).size() == static_cast<std::size_t>(sizes[n]));
}

TEST_CASE("naive bisimulation agrees with the block test on random frames") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 400; ++trial) {
    const int nodes = 1 + trial % 8;
    const auto f = random_frame(rng, nodes);
    const auto p = random_partition(rng, nodes - 1);
    CHECK(is_bisimulation_naive(f, p) == is_congruence(f, p));
  }
}

TEST_CASE("joins of congruences stay congruences") {
  for (int n = 0; n <= 8; ++n) {
    const auto cs = congruences_bruteforce(n);
    const auto line = Frame::line(n);
    for (const auto& a : cs)
      for (const auto& b : cs) CHECK(is_congruence(line, equivalence_closure(a, b)));
  }
}

TEST_CASE("lattice laws") {
  for (int n = 0; n <= 7; ++n) {
    const auto lat = build_lattice(n);
    CHECK_FALSE(check_lattice_laws(lat).has_value());
    CHECK(lat.elements[lat.bottom] == Partition::identity(n));
    CHECK(lat.elements[lat.top] == Partition::total(n));
  }
}

TEST_CASE("small lattices") {
  CHECK(build_lattice(1).covers.size() == 1);
  const auto l2 = build_lattice(2);
  CHECK(l2.size() == 3);
  CHECK(l2.covers.size() == 2);
  const auto l4 = build_lattice(4);
  CHECK(l4.size() == 6);
  CHECK(l4.covers.size() == 7);
}

TEST_CASE("distributivity and modularity") {
  for (int n = 0; n <= 3; ++n) {
    const auto lat = build_lattice(n);
    CHECK(is_distributive(lat, all_indices(lat)));
    CHECK(is_modular(lat));
    CHECK_FALSE(find_pentagon(lat).has_value());
  }
  for (int n = 4; n <= 9; ++n) {
    const auto lat = build_lattice(n);
    CHECK_FALSE(is_modular(lat));
    CHECK(find_pentagon(lat).has_value());
  }
}

TEST_CASE("antichains with trivial meets and joins") {
  CHECK(find_m_antichain(build_lattice(5), 3).has_value());
  CHECK(find_m_antichain(build_lattice(7), 5).has_value());
  CHECK_FALSE(find_m_antichain(build_lattice(3), 3).has_value());
}

TEST_CASE("principal ideals") {
  const auto lat = build_lattice(4);
  CHECK(principal_ideal(lat, lat.bottom) == std::vector<int>{lat.bottom});
  CHECK(principal_ideal(lat, lat.top).size() == 6);
}

TEST_CASE("external element sets must be closed under joins") {
  std::vector<Partition> ps{Partition::identity(4), Partition::total(4),
                            to_partition(Congruence::folded(4, 1, {1})),
                            to_partition(Congruence::folded(4, 1, {2}))};
  CHECK_NOTHROW(build_lattice(ps));
  // <2> v <3> = <1> on L_6
  std::vector<Partition> open{Partition::identity(6), Partition::total(6),
                              to_partition(Congruence::folded(6, 2, {})),
                              to_partition(Congruence::folded(6, 3, {}))};
  CHECK_THROWS_AS(build_lattice(open), ContractViolation);
}
