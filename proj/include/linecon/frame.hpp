#pragma once

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace linecon {

/// Equivalence relation on {0,...,n} stored as a restricted-growth string:
/// block_of(0) == 0 and each new block index is one more than the maximum
/// seen so far. Structural equality is therefore partition equality.
class Partition {
 public:
  /// Accepts any labeling of n+1 elements and relabels it canonically.
  explicit Partition(std::span<const int> labels);
  explicit Partition(const std::vector<int>& labels)
      : Partition(std::span<const int>(labels)) {}

  static Partition identity(int n);
  static Partition total(int n);
  static Partition from_blocks(int n, const std::vector<std::vector<int>>& blocks);

  int n() const { return static_cast<int>(labels_.size()) - 1; }
  int size() const { return static_cast<int>(labels_.size()); }
  int block_of(int x) const { return labels_.at(x); }
  int num_blocks() const { return num_blocks_; }
  bool related(int x, int y) const { return block_of(x) == block_of(y); }
  std::span<const int> labels() const { return labels_; }

  /// Blocks in order of their smallest element; each block sorted.
  std::vector<std::vector<int>> blocks() const;

  /// True iff every block of *this lies inside a block of other.
  bool refines(const Partition& other) const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.labels_ <=> b.labels_;
  }

 private:
  std::vector<int> labels_;
  int num_blocks_ = 0;
};

std::string to_string(const Partition& p);

/// Binary relation over {0,...,n} as a dense boolean matrix.
class BinaryRelation {
 public:
  explicit BinaryRelation(int n);
  static BinaryRelation of(const Partition& p);
  static BinaryRelation all_pairs(int n);

  int n() const { return n_; }
  bool contains(int x, int y) const { return bits_[index(x, y)] != 0; }
  void insert(int x, int y) { bits_[index(x, y)] = 1; }
  std::size_t count() const;
  std::vector<std::pair<int, int>> pairs() const;

  friend bool operator==(const BinaryRelation&, const BinaryRelation&) = default;

 private:
  std::size_t index(int x, int y) const;

  int n_;
  std::vector<char> bits_;
};

/// Finite Kripke frame <F, R> on nodes {0,...,size-1}.
class Frame {
 public:
  Frame(int size, const std::vector<std::pair<int, int>>& edges);

  /// The line L_n: nodes {0,...,n}, x R y iff |x-y| <= 1.
  static Frame line(int n);

  int size() const { return static_cast<int>(successors_.size()); }
  bool has_edge(int x, int y) const;
  std::vector<std::pair<int, int>> edges() const;

  /// R[x], sorted ascending. Its size is v(x).
  std::span<const int> neighbors(int x) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::vector<int>> successors_;
};

/// Bisimulation test for an equivalence relation: every x' in the block of x
/// must reach, through R, every block that x reaches.
bool is_congruence(const Frame& f, const Partition& p);

/// F/p with a R_p b iff some x' in a, y' in b satisfy x' R y'. Throws
/// ContractViolation unless is_congruence(f, p).
Frame quotient(const Frame& f, const Partition& p);

/// {(x,z) | exists y: (x,y) in a and (y,z) in b}.
BinaryRelation compose(const BinaryRelation& a, const BinaryRelation& b);
BinaryRelation compose(const Partition& a, const Partition& b);

/// Finest partition coarsening both a and b.
Partition equivalence_closure(const Partition& a, const Partition& b);

}  // namespace linecon
