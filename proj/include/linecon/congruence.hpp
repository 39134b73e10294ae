#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "linecon/frame.hpp"

namespace linecon {

enum class Kind { Identity, Folded, Total };

/// One failed clause of the characterization, with a human-readable reason.
struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
  std::string summary() const;
};

/// Count of rests strictly below x.
int delta(const std::vector<int>& rests, int x);

/// Checks whether <k; rests> is a congruence of L_n.
ValidationReport validate(int n, int k, const std::vector<int>& rests);

/// A congruence of the line L_n in canonical form: the diagonal, the total
/// relation, or <k; r_1,...,r_m>.
///
/// Identity on L_0 is the same relation as Total and is represented as Total.
class Congruence {
 public:
  static Congruence identity(int n);
  static Congruence total(int n);
  /// Throws DomainError carrying the validation report if <k; rests> is not
  /// a congruence of L_n.
  static Congruence folded(int n, int k, std::vector<int> rests);

  int n() const { return n_; }
  Kind kind() const { return kind_; }
  bool is_identity() const { return kind_ == Kind::Identity; }
  bool is_total() const { return kind_ == Kind::Total; }
  bool is_folded() const { return kind_ == Kind::Folded; }

  /// k for folded forms, n for Identity, 0 for Total.
  int step() const { return k_; }
  const std::vector<int>& rests() const { return rests_; }

  friend bool operator==(const Congruence&, const Congruence&) = default;
  /// Identity < folded (by step, then rests lexicographically) < Total.
  friend std::strong_ordering operator<=>(const Congruence& a, const Congruence& b);

 private:
  Congruence(int n, Kind kind, int k, std::vector<int> rests)
      : n_(n), kind_(kind), k_(k), rests_(std::move(rests)) {}

  int n_;
  Kind kind_;
  int k_;
  std::vector<int> rests_;
};

/// "id", "total", "k" or "k;r1,r2,...".
std::string to_string(const Congruence& c);

/// Index j in [0, step] with x related to j. Undefined for Total.
int height(const Congruence& c, int x);

bool related(const Congruence& c, int x, int y);

Partition to_partition(const Congruence& c);

/// Inverse of to_partition. Throws ContractViolation if p is not a
/// congruence of L_{p.n()}.
Congruence canonicalize(const Partition& p);

/// (n - |rests|) / step; 1 for Identity. Throws UndefinedOperation on Total.
int frequency(const Congruence& c);

/// Sorted elements of 0/c and step/c. Throws UndefinedOperation on Total.
std::vector<int> extremes(const Congruence& c);
bool is_extreme(const Congruence& c, int x);

/// Rest set invariant under r -> n-r-1. Throws UndefinedOperation on Total.
bool is_mirrored(const Congruence& c);

enum class RestSide { Left, Right };

/// Left if x starts a rest, Right if x ends one, nullopt otherwise.
std::optional<RestSide> rest_side(const Congruence& c, int x);
inline bool in_rest(const Congruence& c, int x) { return rest_side(c, x).has_value(); }

/// The restriction of c to [0, a], as a congruence of L_a. Requires a to be
/// an extreme of c that does not end a rest; throws DomainError otherwise.
Congruence restrict_to(const Congruence& c, int a);

/// All congruences of L_n: Identity, folded forms by step then rests, Total.
std::vector<Congruence> enumerate_congruences(int n);

}  // namespace linecon
