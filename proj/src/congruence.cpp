#include "linecon/congruence.hpp"

#include <algorithm>
#include <sstream>

#include "linecon/errors.hpp"

namespace linecon {

std::string ValidationReport::summary() const {
  std::string out;
  for (const auto& v : violations) {
    if (!out.empty()) out += "; ";
    out += v;
  }
  return out;
}

int delta(const std::vector<int>& rests, int x) {
  return static_cast<int>(std::lower_bound(rests.begin(), rests.end(), x) - rests.begin());
}

ValidationReport validate(int n, int k, const std::vector<int>& rests) {
  ValidationReport rep;
  auto fail = [&](std::string s) { rep.violations.push_back(std::move(s)); };
  if (n < 1) fail("n must be at least 1");
  if (k < 1) {
    fail("step must be positive");
    return rep;
  }
  if (2 * k > n) fail("step " + std::to_string(k) + " exceeds n/2");
  const int m = static_cast<int>(rests.size());
  for (int i = 0; i < m; ++i) {
    const int r = rests[i];
    if (i > 0 && rests[i - 1] >= r) fail("rests must be strictly increasing");
    if (r < k || r > n - k)
      fail("rest " + std::to_string(r) + " outside [" + std::to_string(k) + "," +
           std::to_string(n - k) + "]");
    if (r == n - 1) fail("rest " + std::to_string(r) + " ends at n");
    if ((r - i) % k != 0)
      fail("step does not divide r_" + std::to_string(i + 1) + " - " + std::to_string(i));
    if (i > 0 && r - rests[i - 1] == 1)
      fail("consecutive rests " + std::to_string(rests[i - 1]) + "," + std::to_string(r));
  }
  if (n >= 0 && (n - m) % k != 0) fail("step does not divide n - |rests|");
  return rep;
}

Congruence Congruence::identity(int n) {
  if (n < 0) throw DomainError("negative n");
  if (n == 0) return total(0);
  return Congruence(n, Kind::Identity, n, {});
}

Congruence Congruence::total(int n) {
  if (n < 0) throw DomainError("negative n");
  return Congruence(n, Kind::Total, 0, {});
}

Congruence Congruence::folded(int n, int k, std::vector<int> rests) {
  auto rep = validate(n, k, rests);
  if (!rep.ok()) throw DomainError("invalid congruence: " + rep.summary());
  return Congruence(n, Kind::Folded, k, std::move(rests));
}

std::strong_ordering operator<=>(const Congruence& a, const Congruence& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_); c != 0) return c;
  if (auto c = a.k_ <=> b.k_; c != 0) return c;
  return a.rests_ <=> b.rests_;
}

std::string to_string(const Congruence& c) {
  switch (c.kind()) {
    case Kind::Identity: return "id";
    case Kind::Total: return "total";
    case Kind::Folded: break;
  }
  std::string out = std::to_string(c.step());
  for (std::size_t i = 0; i < c.rests().size(); ++i) {
    out += i == 0 ? ';' : ',';
    out += std::to_string(c.rests()[i]);
  }
  return out;
}

namespace {

void check_point(const Congruence& c, int x) {
  if (x < 0 || x > c.n()) throw DomainError("element " + std::to_string(x) + " outside [0,n]");
}

}  // namespace

int height(const Congruence& c, int x) {
  check_point(c, x);
  switch (c.kind()) {
    case Kind::Total: throw UndefinedOperation("height of the total congruence");
    case Kind::Identity: return x;
    case Kind::Folded: break;
  }
  const int k = c.step();
  const int h = (x - delta(c.rests(), x)) % (2 * k);
  return h <= k ? h : 2 * k - h;
}

bool related(const Congruence& c, int x, int y) {
  check_point(c, x);
  check_point(c, y);
  if (c.is_total()) return true;
  return height(c, x) == height(c, y);
}

Partition to_partition(const Congruence& c) {
  if (c.is_total()) return Partition::total(c.n());
  std::vector<int> labels(c.n() + 1);
  for (int x = 0; x <= c.n(); ++x) labels[x] = height(c, x);
  return Partition(labels);
}

Congruence canonicalize(const Partition& p) {
  const int n = p.n();
  if (!is_congruence(Frame::line(n), p))
    throw ContractViolation("partition " + to_string(p) + " is not a congruence of the line");
  if (p.num_blocks() == 1) return Congruence::total(n);
  if (p.num_blocks() == n + 1) return Congruence::identity(n);
  std::vector<int> rests;
  for (int x = 0; x < n; ++x)
    if (p.related(x, x + 1)) rests.push_back(x);
  auto c = Congruence::folded(n, p.num_blocks() - 1, rests);
  if (to_partition(c) != p) throw ContractViolation("canonical form does not reproduce partition");
  return c;
}

int frequency(const Congruence& c) {
  if (c.is_total()) throw UndefinedOperation("frequency of the total congruence");
  if (c.is_identity()) return 1;
  return (c.n() - static_cast<int>(c.rests().size())) / c.step();
}

std::vector<int> extremes(const Congruence& c) {
  if (c.is_total()) throw UndefinedOperation("extremes of the total congruence");
  std::vector<int> out;
  for (int x = 0; x <= c.n(); ++x)
    if (is_extreme(c, x)) out.push_back(x);
  return out;
}

bool is_extreme(const Congruence& c, int x) {
  const int h = height(c, x);
  return h == 0 || h == c.step();
}

bool is_mirrored(const Congruence& c) {
  if (c.is_total()) throw UndefinedOperation("mirroredness of the total congruence");
  const auto& r = c.rests();
  for (int x : r)
    if (!std::binary_search(r.begin(), r.end(), c.n() - x - 1)) return false;
  return true;
}

std::optional<RestSide> rest_side(const Congruence& c, int x) {
  check_point(c, x);
  const auto& r = c.rests();
  if (std::binary_search(r.begin(), r.end(), x)) return RestSide::Left;
  if (std::binary_search(r.begin(), r.end(), x - 1)) return RestSide::Right;
  return std::nullopt;
}

Congruence restrict_to(const Congruence& c, int a) {
  if (c.is_total()) throw DomainError("restriction of the total congruence");
  if (a < 0 || a > c.n() || !is_extreme(c, a))
    throw DomainError(std::to_string(a) + " is not an extreme of " + to_string(c));
  if (rest_side(c, a) == RestSide::Right)
    throw DomainError(std::to_string(a) + " ends a rest of " + to_string(c));
  if (a == c.n()) return c;
  if (a == 0) return Congruence::total(0);
  if (a == c.step()) return Congruence::identity(a);
  std::vector<int> below;
  for (int r : c.rests())
    if (r < a) below.push_back(r);
  return Congruence::folded(a, c.step(), std::move(below));
}

namespace {

void extend(int n, int k, std::vector<int>& rests, std::vector<Congruence>& out) {
  const int m = static_cast<int>(rests.size());
  if ((n - m) % k == 0) out.push_back(Congruence::folded(n, k, rests));
  int lo = rests.empty() ? k : rests.back() + 2;
  // first r >= lo with r = m (mod k)
  lo += ((m - lo) % k + k) % k;
  for (int r = lo; r <= n - k && r <= n - 2; r += k) {
    rests.push_back(r);
    extend(n, k, rests, out);
    rests.pop_back();
  }
}

}  // namespace

std::vector<Congruence> enumerate_congruences(int n) {
  if (n < 0) throw DomainError("negative n");
  std::vector<Congruence> out;
  if (n == 0) {
    out.push_back(Congruence::total(0));
    return out;
  }
  out.push_back(Congruence::identity(n));
  std::vector<int> rests;
  for (int k = 1; 2 * k <= n; ++k) extend(n, k, rests, out);
  out.push_back(Congruence::total(n));
  return out;
}

}  // namespace linecon
