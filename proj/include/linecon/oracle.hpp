#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linecon/frame.hpp"

namespace linecon::oracle {

inline constexpr int kDefaultCap = 10;

/// Cap from LINECON_MAX_N if set and numeric, else kDefaultCap.
int cap_from_env();

/// Calls fn once per partition of {0,...,n}, in lexicographic order of the
/// restricted-growth string. Throws DomainError if n > cap.
void for_each_partition(int n, const std::function<void(const Partition&)>& fn,
                        int cap = kDefaultCap);

/// Bell(n+1) by counting the stream.
long long count_partitions(int n, int cap = kDefaultCap);

/// Literal reading of the bisimulation definition on an arbitrary frame:
/// whenever x' p x and x R y, some y' has x' R y' and y' p y.
bool is_bisimulation_naive(const Frame& f, const Partition& p);

/// All congruences of L_n by exhaustive filtering, in stream order.
std::vector<Partition> congruences_bruteforce(int n, int cap = kDefaultCap);

/// The congruence lattice as an explicit finite lattice under refinement.
struct CongruenceLattice {
  int n = 0;
  std::vector<Partition> elements;
  std::vector<std::vector<char>> order;  // order[i][j]: elements[i] refines elements[j]
  std::vector<std::pair<int, int>> covers;
  std::vector<std::vector<int>> meet_table;
  std::vector<std::vector<int>> join_table;
  int bottom = 0;
  int top = 0;

  int size() const { return static_cast<int>(elements.size()); }
  bool leq(int i, int j) const { return order[i][j] != 0; }
  int meet(int i, int j) const { return meet_table[i][j]; }
  int join(int i, int j) const { return join_table[i][j]; }
  std::optional<int> index_of(const Partition& p) const;
};

/// Lattice over the brute-force congruences of L_n.
CongruenceLattice build_lattice(int n, int cap = kDefaultCap);

/// Lattice over an externally supplied element set (all partitions of the
/// same n). Meets are found as greatest lower bounds by search; joins are
/// equivalence closures, and a closure outside the set raises
/// ContractViolation.
CongruenceLattice build_lattice(std::vector<Partition> elements);

/// First violated lattice law over all triples of the given indices, or
/// nullopt.
std::optional<std::string> check_lattice_laws(const CongruenceLattice& lat,
                                              const std::vector<int>& subset);
std::optional<std::string> check_lattice_laws(const CongruenceLattice& lat);

bool is_distributive(const CongruenceLattice& lat, const std::vector<int>& subset);
bool is_modular(const CongruenceLattice& lat);

/// Indices {i : elements[i] <= elements[top_index]}.
std::vector<int> principal_ideal(const CongruenceLattice& lat, int top_index);

/// (bottom, a, b, c, top) with bottom < a < b < top, c incomparable to a and
/// b, a v c = b v c = top, a ^ c = b ^ c = bottom.
std::optional<std::array<int, 5>> find_pentagon(const CongruenceLattice& lat);

/// m pairwise incomparable elements, distinct from bottom and top, with all
/// pairwise meets bottom and joins top.
std::optional<std::vector<int>> find_m_antichain(const CongruenceLattice& lat, int m);

}  // namespace linecon::oracle
