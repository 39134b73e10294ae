#include "linecon/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "linecon/errors.hpp"

namespace linecon::oracle {

int cap_from_env() {
  if (const char* s = std::getenv("LINECON_MAX_N")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && *end == '\0' && v >= 0 && v < 64) return static_cast<int>(v);
  }
  return kDefaultCap;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& fn, int cap) {
  if (n < 0) throw DomainError("negative n");
  if (n > cap)
    throw DomainError("n = " + std::to_string(n) + " exceeds the brute-force cap " +
                      std::to_string(cap) + "; raise it with LINECON_MAX_N if intended");
  const int size = n + 1;
  std::vector<int> a(size, 0), mx(size, 0);  // mx[i] = max(a[0..i-1]), mx[0] unused
  while (true) {
    fn(Partition(a));
    int i = size - 1;
    while (i > 0 && a[i] == mx[i] + 1) --i;
    if (i == 0) return;
    ++a[i];
    for (int j = i + 1; j < size; ++j) {
      mx[j] = std::max(mx[j - 1], a[j - 1]);
      a[j] = 0;
    }
  }
}

long long count_partitions(int n, int cap) {
  long long c = 0;
  for_each_partition(n, [&](const Partition&) { ++c; }, cap);
  return c;
}

bool is_bisimulation_naive(const Frame& f, const Partition& p) {
  if (p.size() != f.size()) throw DomainError("partition and frame sizes differ");
  const int s = f.size();
  for (int x = 0; x < s; ++x)
    for (int xp = 0; xp < s; ++xp) {
      if (!p.related(x, xp)) continue;
      for (int y = 0; y < s; ++y) {
        if (!f.has_edge(x, y)) continue;
        bool found = false;
        for (int yp = 0; yp < s && !found; ++yp) found = f.has_edge(xp, yp) && p.related(yp, y);
        if (!found) return false;
      }
    }
  return true;
}

std::vector<Partition> congruences_bruteforce(int n, int cap) {
  const Frame line = Frame::line(n);
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) {
    if (is_congruence(line, p)) out.push_back(p);
  }, cap);
  return out;
}

std::optional<int> CongruenceLattice::index_of(const Partition& p) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), p);
  if (it == elements.end() || *it != p) return std::nullopt;
  return static_cast<int>(it - elements.begin());
}

CongruenceLattice build_lattice(int n, int cap) {
  return build_lattice(congruences_bruteforce(n, cap));
}

CongruenceLattice build_lattice(std::vector<Partition> elements) {
  if (elements.empty()) throw DomainError("empty element set");
  CongruenceLattice lat;
  lat.n = elements.front().n();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  lat.elements = std::move(elements);
  const int m = lat.size();

  lat.order.assign(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) lat.order[i][j] = lat.elements[i].refines(lat.elements[j]);

  auto bottom = lat.index_of(Partition::identity(lat.n));
  auto top = lat.index_of(Partition::total(lat.n));
  if (!bottom || !top) throw ContractViolation("element set lacks identity or total");
  lat.bottom = *bottom;
  lat.top = *top;

  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !lat.leq(i, j)) continue;
      bool cover = true;
      for (int z = 0; z < m && cover; ++z)
        if (z != i && z != j && lat.leq(i, z) && lat.leq(z, j)) cover = false;
      if (cover) lat.covers.emplace_back(i, j);
    }

  lat.meet_table.assign(m, std::vector<int>(m, -1));
  lat.join_table.assign(m, std::vector<int>(m, -1));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      int best = -1;
      for (int z = 0; z < m; ++z)
        if (lat.leq(z, i) && lat.leq(z, j) && (best < 0 || lat.leq(best, z))) best = z;
      for (int z = 0; z < m; ++z)
        if (lat.leq(z, i) && lat.leq(z, j) && !lat.leq(z, best))
          throw ContractViolation("no greatest lower bound for " + to_string(lat.elements[i]) +
                                  " and " + to_string(lat.elements[j]));
      lat.meet_table[i][j] = lat.meet_table[j][i] = best;

      auto c = lat.index_of(equivalence_closure(lat.elements[i], lat.elements[j]));
      if (!c)
        throw ContractViolation("closure of " + to_string(lat.elements[i]) + " and " +
                                to_string(lat.elements[j]) + " is not in the element set");
      lat.join_table[i][j] = lat.join_table[j][i] = *c;
    }
  return lat;
}

std::optional<std::string> check_lattice_laws(const CongruenceLattice& lat,
                                              const std::vector<int>& subset) {
  auto name = [&](int i) { return to_string(lat.elements[i]); };
  for (int a : subset) {
    if (lat.meet(a, a) != a || lat.join(a, a) != a) return "idempotence fails at " + name(a);
    for (int b : subset) {
      if (lat.meet(a, b) != lat.meet(b, a)) return "meet not commutative at " + name(a) + ", " + name(b);
      if (lat.join(a, b) != lat.join(b, a)) return "join not commutative at " + name(a) + ", " + name(b);
      if (lat.meet(a, lat.join(a, b)) != a || lat.join(a, lat.meet(a, b)) != a)
        return "absorption fails at " + name(a) + ", " + name(b);
      for (int c : subset) {
        if (lat.meet(lat.meet(a, b), c) != lat.meet(a, lat.meet(b, c)))
          return "meet not associative at " + name(a) + ", " + name(b) + ", " + name(c);
        if (lat.join(lat.join(a, b), c) != lat.join(a, lat.join(b, c)))
          return "join not associative at " + name(a) + ", " + name(b) + ", " + name(c);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> check_lattice_laws(const CongruenceLattice& lat) {
  std::vector<int> all(lat.size());
  for (int i = 0; i < lat.size(); ++i) all[i] = i;
  return check_lattice_laws(lat, all);
}

bool is_distributive(const CongruenceLattice& lat, const std::vector<int>& subset) {
  for (int a : subset)
    for (int b : subset)
      for (int c : subset)
        if (lat.meet(a, lat.join(b, c)) != lat.join(lat.meet(a, b), lat.meet(a, c))) return false;
  return true;
}

bool is_modular(const CongruenceLattice& lat) {
  const int m = lat.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (!lat.leq(a, b)) continue;
      for (int c = 0; c < m; ++c)
        if (lat.join(a, lat.meet(c, b)) != lat.meet(lat.join(a, c), b)) return false;
    }
  return true;
}

std::vector<int> principal_ideal(const CongruenceLattice& lat, int top_index) {
  std::vector<int> out;
  for (int i = 0; i < lat.size(); ++i)
    if (lat.leq(i, top_index)) out.push_back(i);
  return out;
}

std::optional<std::array<int, 5>> find_pentagon(const CongruenceLattice& lat) {
  const int m = lat.size(), bot = lat.bottom, top = lat.top;
  auto inner = [&](int x) { return x != bot && x != top; };
  auto incomparable = [&](int x, int y) { return !lat.leq(x, y) && !lat.leq(y, x); };
  for (int a = 0; a < m; ++a) {
    if (!inner(a)) continue;
    for (int b = 0; b < m; ++b) {
      if (!inner(b) || a == b || !lat.leq(a, b)) continue;
      for (int c = 0; c < m; ++c) {
        if (!inner(c) || !incomparable(a, c) || !incomparable(b, c)) continue;
        if (lat.join(a, c) == top && lat.join(b, c) == top && lat.meet(a, c) == bot &&
            lat.meet(b, c) == bot)
          return std::array<int, 5>{bot, a, b, c, top};
      }
    }
  }
  return std::nullopt;
}

namespace {

bool extend_antichain(const CongruenceLattice& lat, int m, int from, std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == m) return true;
  for (int x = from; x < lat.size(); ++x) {
    if (x == lat.bottom || x == lat.top) continue;
    bool ok = true;
    for (int y : chosen)
      if (lat.leq(x, y) || lat.leq(y, x) || lat.meet(x, y) != lat.bottom ||
          lat.join(x, y) != lat.top) {
        ok = false;
        break;
      }
    if (!ok) continue;
    chosen.push_back(x);
    if (extend_antichain(lat, m, x + 1, chosen)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_m_antichain(const CongruenceLattice& lat, int m) {
  std::vector<int> chosen;
  if (m <= 0) return chosen;
  if (extend_antichain(lat, m, 0, chosen)) return chosen;
  return std::nullopt;
}

}  // namespace linecon::oracle
