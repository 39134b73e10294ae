#include "linecon/lattice_ops.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "linecon/errors.hpp"

namespace linecon {

namespace {

void require_same_n(const Congruence& a, const Congruence& b) {
  if (a.n() != b.n()) throw DomainError("congruences live on different lines");
}

void require_nontrivial(const Congruence& c) {
  if (c.is_total()) throw DomainError("operation needs a nontotal congruence");
}

std::vector<int> common_rests(const Congruence& a, const Congruence& b) {
  std::vector<int> out;
  std::set_intersection(a.rests().begin(), a.rests().end(), b.rests().begin(), b.rests().end(),
                        std::back_inserter(out));
  return out;
}

// Coarsest congruence of the line contained in the intersection of a and b.
Partition coarsest_refinement(const Partition& a, const Partition& b) {
  const int n = a.n();
  std::vector<int> labels(n + 1);
  for (int x = 0; x <= n; ++x) labels[x] = a.block_of(x) * (n + 1) + b.block_of(x);
  Partition p(labels);
  while (true) {
    std::map<std::vector<int>, int> sig_ids;
    std::vector<int> next(n + 1);
    for (int x = 0; x <= n; ++x) {
      std::vector<int> sig{p.block_of(x)};
      std::vector<int> nb;
      for (int y = std::max(0, x - 1); y <= std::min(n, x + 1); ++y) nb.push_back(p.block_of(y));
      std::sort(nb.begin(), nb.end());
      nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
      sig.insert(sig.end(), nb.begin(), nb.end());
      next[x] = sig_ids.emplace(sig, static_cast<int>(sig_ids.size())).first->second;
    }
    Partition q(next);
    if (q.num_blocks() == p.num_blocks()) return q;
    p = q;
  }
}

}  // namespace

std::string to_string(CatalogCase c) {
  switch (c) {
    case CatalogCase::FreqOne: return "FreqOne";
    case CatalogCase::FreqTwoMirrored: return "FreqTwoMirrored";
    case CatalogCase::NoRests: return "NoRests";
    case CatalogCase::EvenTopVsOddNoRests: return "EvenTopVsOddNoRests";
    case CatalogCase::BothOddTop: return "BothOddTop";
    case CatalogCase::SameParityBottom: return "SameParityBottom";
    case CatalogCase::EvenBottomVsOddEverywhere: return "EvenBottomVsOddEverywhere";
    case CatalogCase::BothEverywhere: return "BothEverywhere";
  }
  return "?";
}

std::string to_string(RestProfile p) {
  switch (p) {
    case RestProfile::NoRests: return "NoRests";
    case RestProfile::TopOnly: return "TopOnly";
    case RestProfile::BottomOnly: return "BottomOnly";
    case RestProfile::Everywhere: return "Everywhere";
    case RestProfile::Irregular: return "Irregular";
  }
  return "?";
}

CommonExtremes common_extremes(const Congruence& a, const Congruence& b) {
  require_same_n(a, b);
  require_nontrivial(a);
  require_nontrivial(b);
  CommonExtremes out;
  for (int x = 0; x <= a.n(); ++x)
    if (is_extreme(a, x) && is_extreme(b, x)) out.eta.push_back(x);
  return out;
}

bool compatible(const Congruence& th, const Congruence& gamma) {
  require_same_n(th, gamma);
  require_nontrivial(gamma);
  if (th.rests().empty()) return true;
  const int n = th.n();
  // per gamma-class: does it contain an element outside any rest of th?
  std::vector<char> has_free(gamma.step() + 1, 0);
  for (int x = 0; x <= n; ++x)
    if (!in_rest(th, x)) has_free[height(gamma, x)] = 1;
  for (int x = 0; x <= n; ++x)
    if (in_rest(th, x) && !is_extreme(gamma, x) && has_free[height(gamma, x)]) return false;
  return true;
}

bool leq(const Congruence& a, const Congruence& b) {
  require_same_n(a, b);
  if (a.is_identity() || b.is_total()) return true;
  if (a.is_total() || b.is_identity()) return a == b;
  const auto& t = a.rests();
  const auto& r = b.rests();
  if (!is_extreme(b, a.step()) || !std::includes(r.begin(), r.end(), t.begin(), t.end()) ||
      !compatible(b, a))
    return false;
  // a rest of b touching an extreme of a must already be a rest of a
  for (int x = 0; x <= a.n(); ++x)
    if (is_extreme(a, x) && in_rest(b, x) && !in_rest(a, x)) return false;
  return true;
}

Congruence meet_closed_form(const Congruence& a, const Congruence& b) {
  const int e1 = common_extremes(a, b).first_positive();
  if (e1 == a.n()) return Congruence::identity(a.n());
  return Congruence::folded(a.n(), e1, common_rests(a, b));
}

Congruence meet(const Congruence& a, const Congruence& b) {
  require_same_n(a, b);
  if (a.is_total()) return b;
  if (b.is_total()) return a;
  if (a.is_identity() || b.is_identity()) return Congruence::identity(a.n());
  if (join_is_nontrivial(a, b)) return meet_closed_form(a, b);
  return canonicalize(coarsest_refinement(to_partition(a), to_partition(b)));
}

Congruence join(const Congruence& a, const Congruence& b) {
  require_same_n(a, b);
  return canonicalize(equivalence_closure(to_partition(a), to_partition(b)));
}

CriterionReport nontriviality_criterion(const Congruence& a, const Congruence& b) {
  CriterionReport rep;
  rep.eta = common_extremes(a, b);
  const int n = a.n();

  rep.rest_part_agreement = std::all_of(rep.eta.eta.begin(), rep.eta.eta.end(),
                                        [&](int e) { return rest_side(a, e) == rest_side(b, e); });

  const int e1 = rep.eta.first_positive();
  auto shared = common_rests(a, b);
  if (e1 == n) {
    rep.gamma_valid = shared.empty();
    if (rep.gamma_valid) rep.gamma = Congruence::identity(n);
  } else {
    rep.gamma_valid = validate(n, e1, shared).ok();
    if (rep.gamma_valid) rep.gamma = Congruence::folded(n, e1, shared);
  }

  if (rest_side(a, e1) != RestSide::Right && rest_side(b, e1) != RestSide::Right) {
    rep.restricted_cases = matching_cases(restrict_to(a, e1), restrict_to(b, e1));
    rep.catalog_pair = !rep.restricted_cases.empty();
  }

  if (rep.gamma) {
    rep.a_compatible = compatible(a, *rep.gamma);
    rep.b_compatible = compatible(b, *rep.gamma);
  }
  return rep;
}

bool join_is_nontrivial(const Congruence& a, const Congruence& b) {
  return nontriviality_criterion(a, b).nontrivial();
}

bool permutes(const Congruence& a, const Congruence& b) {
  require_same_n(a, b);
  auto pa = to_partition(a), pb = to_partition(b);
  return compose(pa, pb) == compose(pb, pa);
}

RestProfile rest_profile(const Congruence& c) {
  if (c.is_total()) throw DomainError("rest profile of the total congruence");
  if (c.rests().empty()) return RestProfile::NoRests;
  const int k = c.step();
  int tops = 0, top_rests = 0, bottoms = 0, bottom_rests = 0;
  for (int x = 1; x < c.n(); ++x) {
    if (!is_extreme(c, x)) continue;
    auto side = rest_side(c, x);
    if (side == RestSide::Right) continue;
    const bool rest = side == RestSide::Left;
    if (height(c, x) == k) {
      ++tops;
      top_rests += rest;
    } else {
      ++bottoms;
      bottom_rests += rest;
    }
  }
  if (bottom_rests == 0 && top_rests == tops) return RestProfile::TopOnly;
  if (top_rests == 0 && bottom_rests == bottoms) return RestProfile::BottomOnly;
  if (top_rests == tops && bottom_rests == bottoms) return RestProfile::Everywhere;
  return RestProfile::Irregular;
}

std::vector<CatalogCase> matching_cases(const Congruence& a, const Congruence& b) {
  require_same_n(a, b);
  require_nontrivial(a);
  require_nontrivial(b);
  const Congruence& th = a.step() <= b.step() ? a : b;
  const Congruence& dl = a.step() <= b.step() ? b : a;
  const int ft = frequency(th), fd = frequency(dl);
  std::vector<CatalogCase> out;
  if (fd == 1) out.push_back(CatalogCase::FreqOne);
  if (fd == 2 && is_mirrored(th)) out.push_back(CatalogCase::FreqTwoMirrored);
  if (fd < 3 || ft < 3) return out;

  using P = RestProfile;
  const P pt = rest_profile(th), pd = rest_profile(dl);
  const bool et = ft % 2 == 0, ed = fd % 2 == 0;
  auto one_way = [](P p1, bool e1, P p2, bool e2, P want1, bool even1, P want2, bool even2) {
    return p1 == want1 && e1 == even1 && p2 == want2 && e2 == even2;
  };
  if (pt == P::NoRests && pd == P::NoRests) out.push_back(CatalogCase::NoRests);
  if (one_way(pt, et, pd, ed, P::TopOnly, true, P::NoRests, false) ||
      one_way(pd, ed, pt, et, P::TopOnly, true, P::NoRests, false))
    out.push_back(CatalogCase::EvenTopVsOddNoRests);
  if (pt == P::TopOnly && pd == P::TopOnly && !et && !ed) out.push_back(CatalogCase::BothOddTop);
  if (pt == P::BottomOnly && pd == P::BottomOnly && et == ed)
    out.push_back(CatalogCase::SameParityBottom);
  if (one_way(pt, et, pd, ed, P::BottomOnly, true, P::Everywhere, false) ||
      one_way(pd, ed, pt, et, P::BottomOnly, true, P::Everywhere, false))
    out.push_back(CatalogCase::EvenBottomVsOddEverywhere);
  if (pt == P::Everywhere && pd == P::Everywhere) out.push_back(CatalogCase::BothEverywhere);
  return out;
}

CatalogCase catalog_case(const Congruence& a, const Congruence& b) {
  if (!common_extremes(a, b).only_endpoints())
    throw DomainError("catalog pairs have common extremes {0, n} only");
  if (join(a, b).is_total()) throw DomainError("catalog pairs have a nontrivial join");
  auto cases = matching_cases(a, b);
  if (cases.size() != 1)
    throw ContractViolation(std::to_string(cases.size()) + " catalog cases match (" +
                            to_string(a) + ", " + to_string(b) + ") on L_" +
                            std::to_string(a.n()));
  return cases.front();
}

std::vector<Congruence> catalog_candidates(int n) {
  std::vector<Congruence> out;
  for (int k = 1; 2 * k <= n; ++k) {
    const RestProfile profiles[] = {RestProfile::NoRests, RestProfile::TopOnly,
                                    RestProfile::BottomOnly, RestProfile::Everywhere};
    for (auto p : profiles) {
      std::vector<int> rests;
      for (int i = 1;; ++i) {
        int r = 0;
        if (p == RestProfile::NoRests) break;
        if (p == RestProfile::TopOnly) r = (2 * k + 1) * i - k - 1;
        if (p == RestProfile::BottomOnly) r = (2 * k + 1) * i - 1;
        if (p == RestProfile::Everywhere) r = (k + 1) * i - 1;
        if (r > n - k || r > n - 2) break;
        rests.push_back(r);
      }
      if (!validate(n, k, rests).ok()) continue;
      auto c = Congruence::folded(n, k, rests);
      if (rest_profile(c) == p && frequency(c) >= 3 &&
          std::find(out.begin(), out.end(), c) == out.end())
        out.push_back(c);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool simplified_related(RestProfile profile, int k, int x, int y) {
  int m = 0, shift = 0;
  switch (profile) {
    case RestProfile::NoRests: m = 2 * k; break;
    case RestProfile::TopOnly: m = 2 * k + 1; break;
    case RestProfile::BottomOnly: m = 2 * k + 1; shift = 1; break;
    case RestProfile::Everywhere: m = 2 * k + 2; shift = 1; break;
    case RestProfile::Irregular: throw DomainError("irregular profiles have no simplified form");
  }
  if (k < 1) throw DomainError("step must be positive");
  return (x - y) % m == 0 || (x + y + shift) % m == 0;
}

BinaryRelation simplified_relation(RestProfile profile, int k, int n) {
  BinaryRelation r(n);
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= n; ++y)
      if (simplified_related(profile, k, x, y)) r.insert(x, y);
  return r;
}

int n_from_step_frequency(RestProfile profile, int l, int f) {
  if (f < 3) throw DomainError("table values need frequency at least 3");
  if (l < 1) throw DomainError("step must be positive");
  const bool even = f % 2 == 0;
  switch (profile) {
    case RestProfile::NoRests: return l * f;
    case RestProfile::TopOnly: return even ? (2 * l + 1) * f / 2 : ((2 * l + 1) * f - 1) / 2;
    case RestProfile::BottomOnly: return even ? (2 * l + 1) * f / 2 - 1 : ((2 * l + 1) * f - 1) / 2;
    case RestProfile::Everywhere: return (l + 1) * f - 1;
    case RestProfile::Irregular: break;
  }
  throw DomainError("irregular profiles have no table entry");
}

long long lcm_ll(long long a, long long b) { return std::lcm(a, b); }

int step_of_join(const Congruence& a, const Congruence& b) {
  require_same_n(a, b);
  if (a.is_total() || b.is_total() || !join_is_nontrivial(a, b))
    throw DomainError("step_of_join needs a nontrivial join");
  return static_cast<int>(a.n() / lcm_ll(frequency(a), frequency(b)));
}

long long step_of_join_product_formula(const Congruence& a, const Congruence& b) {
  require_same_n(a, b);
  require_nontrivial(a);
  require_nontrivial(b);
  const long long n = a.n();
  const long long ra = static_cast<long long>(a.rests().size());
  const long long rb = static_cast<long long>(b.rests().size());
  return n * a.step() * b.step() / ((n - ra) * (n - rb));
}

EmbeddingReport divisor_embedding(const Congruence& rho) {
  require_nontrivial(rho);
  EmbeddingReport rep;
  for (const auto& c : enumerate_congruences(rho.n()))
    if (leq(c, rho)) rep.ideal.push_back(c);
  for (const auto& c : rep.ideal) rep.frequencies.push_back(frequency(c));

  const int fr = frequency(rho);
  auto fail = [&](const std::string& why) {
    if (rep.failure.empty()) rep.failure = why;
  };
  auto sorted = rep.frequencies;
  std::sort(sorted.begin(), sorted.end());
  rep.injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!rep.injective) fail("two ideal members share a frequency");
  rep.into_divisors = std::all_of(sorted.begin(), sorted.end(), [&](int f) { return fr % f == 0; });
  if (!rep.into_divisors) fail("a frequency does not divide f_rho");
  rep.bottom_to_one = frequency(Congruence::identity(rho.n())) == 1 &&
                      std::find(rep.ideal.begin(), rep.ideal.end(),
                                Congruence::identity(rho.n())) != rep.ideal.end();
  if (!rep.bottom_to_one) fail("identity does not map to 1");
  rep.top_to_frequency = std::find(rep.ideal.begin(), rep.ideal.end(), rho) != rep.ideal.end();
  if (!rep.top_to_frequency) fail("rho missing from its own ideal");

  rep.meet_to_gcd = rep.join_to_lcm = rep.distributive = true;
  const std::size_t m = rep.ideal.size();
  std::vector<std::vector<Congruence>> meets(m), joins(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      meets[i].push_back(meet(rep.ideal[i], rep.ideal[j]));
      joins[i].push_back(join(rep.ideal[i], rep.ideal[j]));
      const int fi = rep.frequencies[i], fj = rep.frequencies[j];
      const auto pair = to_string(rep.ideal[i]) + ", " + to_string(rep.ideal[j]);
      if (joins[i][j].is_total() || frequency(joins[i][j]) != lcm_ll(fi, fj)) {
        rep.join_to_lcm = false;
        fail("join of " + pair + " does not map to lcm");
      }
      if (frequency(meets[i][j]) != std::gcd(fi, fj)) {
        rep.meet_to_gcd = false;
        fail("meet of " + pair + " does not map to gcd");
      }
    }
  auto index = [&](const Congruence& c) {
    return static_cast<std::size_t>(std::find(rep.ideal.begin(), rep.ideal.end(), c) -
                                    rep.ideal.begin());
  };
  for (std::size_t a = 0; a < m && rep.distributive; ++a)
    for (std::size_t b = 0; b < m && rep.distributive; ++b)
      for (std::size_t c = 0; c < m && rep.distributive; ++c) {
        std::size_t bc = index(joins[b][c]), ab = index(meets[a][b]), ac = index(meets[a][c]);
        if (bc == m || ab == m || ac == m || meets[a][bc] != joins[ab][ac]) {
          rep.distributive = false;
          fail("distributivity fails at " + to_string(rep.ideal[a]) + ", " +
               to_string(rep.ideal[b]) + ", " + to_string(rep.ideal[c]));
        }
      }
  return rep;
}

}  // namespace linecon
