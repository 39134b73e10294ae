#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linecon/congruence.hpp"

namespace linecon {

/// Sorted common extremes 0 = eta_0 < eta_1 < ... < eta_N = n.
struct CommonExtremes {
  std::vector<int> eta;
  int first_positive() const { return eta.size() > 1 ? eta[1] : eta.front(); }
  bool only_endpoints() const { return eta.size() == 2; }
};

enum class CatalogCase {
  FreqOne,
  FreqTwoMirrored,
  NoRests,
  EvenTopVsOddNoRests,
  BothOddTop,
  SameParityBottom,
  EvenBottomVsOddEverywhere,
  BothEverywhere,
};

enum class RestProfile { NoRests, TopOnly, BottomOnly, Everywhere, Irregular };

std::string to_string(CatalogCase c);
std::string to_string(RestProfile p);

CommonExtremes common_extremes(const Congruence& a, const Congruence& b);

/// Every element outside ext(gamma) lying in a rest of th has all of its
/// gamma-relatives in rests of th.
bool compatible(const Congruence& th, const Congruence& gamma);

/// Refinement order, decided on the canonical forms.
bool leq(const Congruence& a, const Congruence& b);

/// <eta_1; common rests>, or Identity when eta_1 = n. Throws DomainError if
/// that form is not a congruence or an argument is Total.
Congruence meet_closed_form(const Congruence& a, const Congruence& b);

/// Greatest lower bound. Uses the closed form when the join is nontrivial,
/// otherwise the coarsest congruence refining both partitions.
Congruence meet(const Congruence& a, const Congruence& b);

/// Least upper bound via equivalence closure.
Congruence join(const Congruence& a, const Congruence& b);

struct CriterionReport {
  CommonExtremes eta;
  bool rest_part_agreement = false;
  bool gamma_valid = false;
  bool catalog_pair = false;
  bool a_compatible = false;
  bool b_compatible = false;
  std::optional<Congruence> gamma;
  std::vector<CatalogCase> restricted_cases;

  bool nontrivial() const {
    return rest_part_agreement && gamma_valid && catalog_pair && a_compatible && b_compatible;
  }
};

/// Evaluates the five clauses deciding whether a v b is not Total. Throws
/// DomainError on Total arguments.
CriterionReport nontriviality_criterion(const Congruence& a, const Congruence& b);
bool join_is_nontrivial(const Congruence& a, const Congruence& b);

/// a;b == b;a as relations.
bool permutes(const Congruence& a, const Congruence& b);

/// Rest placement read off the folding. Throws DomainError on Total.
RestProfile rest_profile(const Congruence& c);

/// All catalog cases whose structural conditions hold for the pair, after
/// ordering it by step.
std::vector<CatalogCase> matching_cases(const Congruence& a, const Congruence& b);
inline bool match_catalog(const Congruence& a, const Congruence& b) {
  return !matching_cases(a, b).empty();
}

/// The unique case of a pair with nontrivial join and common extremes
/// {0, n}. Throws DomainError when those preconditions fail and
/// ContractViolation when zero or several cases match.
CatalogCase catalog_case(const Congruence& a, const Congruence& b);

/// Congruences of L_n with a regular rest profile and frequency >= 3, the
/// only shapes a member of a catalog pair with frequencies >= 3 can take.
/// Built from the closed rest formulas, so it stays cheap for large n.
std::vector<Congruence> catalog_candidates(int n);

/// Closed-form relation for a regular rest profile with step k.
bool simplified_related(RestProfile profile, int k, int x, int y);
BinaryRelation simplified_relation(RestProfile profile, int k, int n);

/// Line length of a catalog congruence with the given profile, step l and
/// frequency f >= 3.
int n_from_step_frequency(RestProfile profile, int l, int f);

long long lcm_ll(long long a, long long b);

/// n div lcm(f_a, f_b). Throws DomainError if the join is trivial.
int step_of_join(const Congruence& a, const Congruence& b);

/// floor(n k l / ((n - |r|)(n - |s|))), the same value for pairs whose only
/// common extremes are 0 and n.
long long step_of_join_product_formula(const Congruence& a, const Congruence& b);

struct EmbeddingReport {
  std::vector<Congruence> ideal;
  std::vector<int> frequencies;
  bool injective = false;
  bool into_divisors = false;
  bool meet_to_gcd = false;
  bool join_to_lcm = false;
  bool bottom_to_one = false;
  bool top_to_frequency = false;
  bool distributive = false;
  std::string failure;

  bool ok() const {
    return injective && into_divisors && meet_to_gcd && join_to_lcm && bottom_to_one &&
           top_to_frequency && distributive;
  }
};

/// Checks that theta -> f_theta embeds the ideal below rho into the divisor
/// lattice of f_rho. Throws DomainError on Total.
EmbeddingReport divisor_embedding(const Congruence& rho);

}  // namespace linecon
