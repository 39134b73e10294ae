#include "linecon/frame.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "linecon/errors.hpp"

namespace linecon {

namespace {

class UnionFind {
 public:
  explicit UnionFind(int size) : parent_(size) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<int> parent_;
};

void require_same_ground(int a, int b) {
  if (a != b) throw DomainError("ground sets differ");
}

}  // namespace

Partition::Partition(std::span<const int> labels) {
  if (labels.empty()) throw DomainError("partition needs at least one element");
  labels_.resize(labels.size());
  std::vector<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& s) { return s.first == labels[i]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[i], static_cast<int>(seen.size()));
      labels_[i] = seen.back().second;
    } else {
      labels_[i] = it->second;
    }
  }
  num_blocks_ = static_cast<int>(seen.size());
}

Partition Partition::identity(int n) {
  if (n < 0) throw DomainError("negative n");
  std::vector<int> l(n + 1);
  std::iota(l.begin(), l.end(), 0);
  return Partition(l);
}

Partition Partition::total(int n) {
  if (n < 0) throw DomainError("negative n");
  return Partition(std::vector<int>(n + 1, 0));
}

Partition Partition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 0) throw DomainError("negative n");
  std::vector<int> l(n + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int x : blocks[b]) {
      if (x < 0 || x > n) throw DomainError("element out of range");
      if (l[x] != -1) throw DomainError("blocks overlap");
      l[x] = static_cast<int>(b);
    }
  }
  if (std::find(l.begin(), l.end(), -1) != l.end())
    throw DomainError("blocks do not cover the ground set");
  return Partition(l);
}

std::vector<std::vector<int>> Partition::blocks() const {
  std::vector<std::vector<int>> out(num_blocks_);
  for (int x = 0; x < size(); ++x) out[labels_[x]].push_back(x);
  return out;
}

bool Partition::refines(const Partition& other) const {
  require_same_ground(n(), other.n());
  std::vector<int> image(num_blocks_, -1);
  for (int x = 0; x < size(); ++x) {
    int& img = image[labels_[x]];
    if (img == -1) img = other.labels_[x];
    else if (img != other.labels_[x]) return false;
  }
  return true;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  bool first_block = true;
  for (const auto& b : p.blocks()) {
    if (!first_block) os << ',';
    first_block = false;
    os << '{';
    for (std::size_t i = 0; i < b.size(); ++i) os << (i ? "," : "") << b[i];
    os << '}';
  }
  return os.str();
}

BinaryRelation::BinaryRelation(int n) : n_(n) {
  if (n < 0) throw DomainError("negative n");
  bits_.assign(static_cast<std::size_t>(n + 1) * (n + 1), 0);
}

BinaryRelation BinaryRelation::of(const Partition& p) {
  BinaryRelation r(p.n());
  for (int x = 0; x <= p.n(); ++x)
    for (int y = 0; y <= p.n(); ++y)
      if (p.related(x, y)) r.insert(x, y);
  return r;
}

BinaryRelation BinaryRelation::all_pairs(int n) {
  BinaryRelation r(n);
  std::fill(r.bits_.begin(), r.bits_.end(), 1);
  return r;
}

std::size_t BinaryRelation::index(int x, int y) const {
  if (x < 0 || y < 0 || x > n_ || y > n_) throw DomainError("pair out of range");
  return static_cast<std::size_t>(x) * (n_ + 1) + y;
}

std::size_t BinaryRelation::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

std::vector<std::pair<int, int>> BinaryRelation::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x <= n_; ++x)
    for (int y = 0; y <= n_; ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

Frame::Frame(int size, const std::vector<std::pair<int, int>>& edges) {
  if (size <= 0) throw DomainError("frame size must be positive");
  successors_.resize(size);
  for (auto [x, y] : edges) {
    if (x < 0 || y < 0 || x >= size || y >= size) throw DomainError("edge endpoint out of range");
    successors_[x].push_back(y);
  }
  for (auto& s : successors_) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
  }
}

Frame Frame::line(int n) {
  if (n < 0) throw DomainError("negative n");
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x <= n; ++x)
    for (int y = std::max(0, x - 1); y <= std::min(n, x + 1); ++y) edges.emplace_back(x, y);
  return Frame(n + 1, edges);
}

bool Frame::has_edge(int x, int y) const {
  auto s = neighbors(x);
  if (y < 0 || y >= size()) throw DomainError("node out of range");
  return std::binary_search(s.begin(), s.end(), y);
}

std::vector<std::pair<int, int>> Frame::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < size(); ++x)
    for (int y : successors_[x]) out.emplace_back(x, y);
  return out;
}

std::span<const int> Frame::neighbors(int x) const {
  if (x < 0 || x >= size()) throw DomainError("node out of range");
  return successors_[x];
}

namespace {

// Sorted set of blocks reachable in one step from x.
std::vector<int> reached_blocks(const Frame& f, const Partition& p, int x) {
  std::vector<int> out;
  for (int y : f.neighbors(x)) out.push_back(p.block_of(y));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool is_congruence(const Frame& f, const Partition& p) {
  if (p.size() != f.size()) throw DomainError("partition and frame sizes differ");
  std::vector<std::vector<int>> rep(p.num_blocks());
  std::vector<char> have(p.num_blocks(), 0);
  for (int x = 0; x < f.size(); ++x) {
    auto r = reached_blocks(f, p, x);
    int b = p.block_of(x);
    if (!have[b]) {
      rep[b] = std::move(r);
      have[b] = 1;
    } else if (rep[b] != r) {
      return false;
    }
  }
  return true;
}

Frame quotient(const Frame& f, const Partition& p) {
  if (!is_congruence(f, p)) throw ContractViolation("quotient of a non-congruence");
  std::vector<std::pair<int, int>> edges;
  for (auto [x, y] : f.edges()) edges.emplace_back(p.block_of(x), p.block_of(y));
  return Frame(p.num_blocks(), edges);
}

BinaryRelation compose(const BinaryRelation& a, const BinaryRelation& b) {
  require_same_ground(a.n(), b.n());
  const int n = a.n();
  BinaryRelation out(n);
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y) {
      if (!a.contains(x, y)) continue;
      for (int z = 0; z <= n; ++z)
        if (b.contains(y, z)) out.insert(x, z);
    }
  return out;
}

BinaryRelation compose(const Partition& a, const Partition& b) {
  require_same_ground(a.n(), b.n());
  // x (a;b) z iff the a-block of x meets the b-block of z.
  const int n = a.n();
  std::vector<char> meets(static_cast<std::size_t>(a.num_blocks()) * b.num_blocks(), 0);
  for (int y = 0; y <= n; ++y)
    meets[static_cast<std::size_t>(a.block_of(y)) * b.num_blocks() + b.block_of(y)] = 1;
  BinaryRelation out(n);
  for (int x = 0; x <= n; ++x)
    for (int z = 0; z <= n; ++z)
      if (meets[static_cast<std::size_t>(a.block_of(x)) * b.num_blocks() + b.block_of(z)])
        out.insert(x, z);
  return out;
}

Partition equivalence_closure(const Partition& a, const Partition& b) {
  require_same_ground(a.n(), b.n());
  UnionFind uf(a.size());
  std::vector<int> first_a(a.num_blocks(), -1), first_b(b.num_blocks(), -1);
  for (int x = 0; x < a.size(); ++x) {
    int& fa = first_a[a.block_of(x)];
    if (fa == -1) fa = x; else uf.unite(fa, x);
    int& fb = first_b[b.block_of(x)];
    if (fb == -1) fb = x; else uf.unite(fb, x);
  }
  std::vector<int> labels(a.size());
  for (int x = 0; x < a.size(); ++x) labels[x] = uf.find(x);
  return Partition(labels);
}

}  // namespace linecon
