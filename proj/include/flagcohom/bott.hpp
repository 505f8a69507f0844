#pragma once

// Bott's algorithm on G/P for a maximal parabolic P.
//
// A weight lambda is classified through the pairings (lambda + delta, alpha)
// over all of Phi+: any zero makes it singular, otherwise the number of
// negative pairings is the degree p in which the cohomology lives and the
// dimension is prod |(lambda+delta, alpha)| / prod (delta, alpha).
//
// Omega^q(k) splits into summands with highest weights w.delta - delta + k lambda_j,
// one for every w in W_1(q).

#include "flagcohom/errors.hpp"
#include "flagcohom/parabolic.hpp"
#include "flagcohom/rational.hpp"
#include "flagcohom/root_system.hpp"
#include "flagcohom/weyl.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace flagcohom {

enum class WeightStatus { Singular, Regular };

struct WeightVerdict {
  Vec weight;
  WeightStatus status = WeightStatus::Singular;
  int index = 0;        ///< meaningful only when regular
  BigInt dimension = 0; ///< 0 when singular

  bool singular() const { return status == WeightStatus::Singular; }
};

/// General route: exact rational pairings of an ambient weight against Phi+.
inline WeightVerdict classify_weight(const Vec& lambda, const RootSystem& rs)
{
  WeightVerdict v;
  v.weight = lambda;
  const Vec shifted = lambda + rs.delta();
  Rational num = 1, den = 1;
  int negatives = 0;
  for (const auto& alpha : rs.positive_roots()) {
    Rational p = rs.inner(shifted, alpha);
    if (p == 0) return v;
    if (p < 0) {
      ++negatives;
      p = -p;
    }
    num *= p;
    den *= rs.inner(rs.delta(), alpha);
  }
  Rational dim = num / den;
  if (!is_integer(dim)) throw std::logic_error("Weyl dimension is not an integer");
  v.status = WeightStatus::Regular;
  v.index = negatives;
  v.dimension = numerator_of(dim);
  return v;
}

/// Dimensions h^0..h^n; entries past n read as zero.
struct CohomologyVector {
  std::vector<BigInt> h;

  CohomologyVector() = default;
  explicit CohomologyVector(int n) : h(static_cast<std::size_t>(n + 1), BigInt(0)) {}

  BigInt operator[](int i) const
  {
    if (i < 0 || i >= static_cast<int>(h.size())) return 0;
    return h[static_cast<std::size_t>(i)];
  }

  int dim() const { return static_cast<int>(h.size()) - 1; }

  bool all_zero() const
  {
    for (const auto& x : h)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const CohomologyVector&, const CohomologyVector&) = default;
};

/// H^*(G/P, O(k)) from the single weight k * lambda_j.
inline CohomologyVector line_bundle_cohomology(const ParabolicData& pd, std::int64_t k)
{
  CohomologyVector out(pd.dim_x());
  const Vec lambda = Rational(k) * pd.root_system().fundamental_weight(pd.node());
  auto v = classify_weight(lambda, pd.root_system());
  if (!v.singular()) out.h[static_cast<std::size_t>(v.index)] = v.dimension;
  return out;
}

/// Integer tables for evaluating 2 (w.delta + k lambda_j, alpha) without
/// touching rationals: with x = 2 w.delta in root coordinates the pairing is
/// x . (G a) + 2 k c a_j, G the Gram matrix of the simple roots.
class PairingTables {
public:
  explicit PairingTables(const ParabolicData& pd) : rank_(pd.root_system().rank())
  {
    const auto& rs = pd.root_system();
    const auto l = static_cast<std::size_t>(rank_);
    two_delta_.assign(l, 0);
    for (const auto& a : rs.positive_root_coords())
      for (std::size_t i = 0; i < l; ++i) two_delta_[i] += a[i];
    const auto j = static_cast<std::size_t>(pd.node() - 1);
    denominator_ = 1;
    for (const auto& a : rs.positive_root_coords()) {
      std::vector<std::int64_t> ga(l, 0);
      for (std::size_t i = 0; i < l; ++i)
        for (std::size_t t = 0; t < l; ++t) ga[i] += std::int64_t(rs.gram(static_cast<int>(i), static_cast<int>(t))) * a[t];
      std::int64_t d = 0;
      for (std::size_t i = 0; i < l; ++i) d += two_delta_[i] * ga[i];
      gram_times_root_.push_back(std::move(ga));
      twice_lambda_pairing_.push_back(2 * std::int64_t(pd.c()) * a[j]);
      denominator_ *= d;
    }
  }

  /// 2 (w.delta + k lambda_j, alpha) for every alpha in Phi+, in positive_roots() order.
  std::vector<std::int64_t> doubled_pairings(const WeylElement& w, std::int64_t k) const
  {
    const auto l = static_cast<std::size_t>(rank_);
    std::vector<std::int64_t> x(l, 0);
    for (std::size_t r = 0; r < l; ++r)
      for (std::size_t c = 0; c < l; ++c) x[r] += std::int64_t(w.entry(static_cast<int>(r), static_cast<int>(c))) * two_delta_[c];
    std::vector<std::int64_t> out;
    out.reserve(gram_times_root_.size());
    for (std::size_t a = 0; a < gram_times_root_.size(); ++a) {
      std::int64_t p = k * twice_lambda_pairing_[a];
      for (std::size_t i = 0; i < l; ++i) p += x[i] * gram_times_root_[a][i];
      out.push_back(p);
    }
    return out;
  }

  /// prod 2 (delta, alpha).
  const BigInt& denominator() const { return denominator_; }

private:
  int rank_;
  std::vector<std::int64_t> two_delta_;
  std::vector<std::vector<std::int64_t>> gram_times_root_;
  std::vector<std::int64_t> twice_lambda_pairing_;
  BigInt denominator_;
};

/// Verdict for the summand w.delta - delta + k lambda_j, without the ambient weight.
inline WeightVerdict classify_summand(const PairingTables& tables, const WeylElement& w, std::int64_t k)
{
  WeightVerdict v;
  BigInt num = 1;
  int negatives = 0;
  for (std::int64_t p : tables.doubled_pairings(w, k)) {
    if (p == 0) return v;
    if (p < 0) {
      ++negatives;
      p = -p;
    }
    num *= p;
  }
  if (num % tables.denominator() != 0) throw std::logic_error("Weyl dimension is not an integer");
  v.status = WeightStatus::Regular;
  v.index = negatives;
  v.dimension = num / tables.denominator();
  return v;
}

/// Ambient weight w.delta - delta + k lambda_j.
inline Vec summand_weight(const ParabolicData& pd, const WeylElement& w, std::int64_t k)
{
  const auto& rs = pd.root_system();
  Vec wdelta = rs.from_coords(w.act(rs.delta_coords()));
  return wdelta - rs.delta() + Rational(k) * rs.fundamental_weight(pd.node());
}

/// Write-once, read-many store of coset representatives per (type, node).
class CosetRepCache {
public:
  std::shared_ptr<const GradedCosetReps> get(const ParabolicData& pd, std::uint64_t cap = kDefaultEnumerationCap)
  {
    const BigInt expected = pd.coset_count();
    if (expected > cap) throw CapExceeded(static_cast<std::uint64_t>(expected), cap);
    const std::pair<LieType, int> key{pd.root_system().type(), pd.node()};
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = store_.find(key);
    if (it != store_.end()) return it->second;
    auto reps = std::make_shared<const GradedCosetReps>(enumerate_coset_reps(pd, cap));
    store_.emplace(key, reps);
    return reps;
  }

  std::size_t size() const
  {
    std::lock_guard<std::mutex> lock(mutex_);
    return store_.size();
  }

private:
  mutable std::mutex mutex_;
  std::map<std::pair<LieType, int>, std::shared_ptr<const GradedCosetReps>> store_;
};

inline CosetRepCache& default_coset_cache()
{
  static CosetRepCache cache;
  return cache;
}

/// All summands of Omega^q(k), in the canonical order of W_1(q).
inline std::vector<WeightVerdict> twisted_forms_summands(const ParabolicData& pd, const GradedCosetReps& reps, int q,
                                                         std::int64_t k)
{
  std::vector<WeightVerdict> out;
  if (q < 0 || q > pd.dim_x()) return out;
  PairingTables tables(pd);
  for (const auto& w : reps.grade(q)) {
    auto v = classify_summand(tables, w, k);
    v.weight = summand_weight(pd, w, k);
    out.push_back(std::move(v));
  }
  return out;
}

inline CohomologyVector twisted_forms_cohomology(const ParabolicData& pd, const GradedCosetReps& reps,
                                                 const PairingTables& tables, int q, std::int64_t k)
{
  CohomologyVector out(pd.dim_x());
  if (q < 0 || q > pd.dim_x()) return out;
  for (const auto& w : reps.grade(q)) {
    auto v = classify_summand(tables, w, k);
    if (!v.singular()) out.h[static_cast<std::size_t>(v.index)] += v.dimension;
  }
  return out;
}

inline CohomologyVector twisted_forms_cohomology(const ParabolicData& pd, const GradedCosetReps& reps, int q,
                                                 std::int64_t k)
{
  return twisted_forms_cohomology(pd, reps, PairingTables(pd), q, k);
}

/// H^*(G/P, Omega^q(k)), enumerating W_1 on demand through the default cache.
inline CohomologyVector twisted_forms_cohomology(const ParabolicData& pd, int q, std::int64_t k,
                                                 std::uint64_t cap = kDefaultEnumerationCap)
{
  if (q < 0 || q > pd.dim_x()) return CohomologyVector(pd.dim_x());
  return twisted_forms_cohomology(pd, *default_coset_cache().get(pd, cap), q, k);
}

/// True when k > mu or k > q, in which case H^i(Omega^q(k)) = 0 for i > 0.
inline bool vanishing_shortcut(const ParabolicData& pd, int q, std::int64_t k)
{
  return Rational(k) > pd.mu() || k > q;
}

/// h^q(Omega^q) for q = 0..n.
inline std::vector<BigInt> hodge_diamond(const ParabolicData& pd, const GradedCosetReps& reps)
{
  std::vector<BigInt> out;
  PairingTables tables(pd);
  for (int q = 0; q <= pd.dim_x(); ++q) out.push_back(twisted_forms_cohomology(pd, reps, tables, q, 0)[q]);
  return out;
}

inline std::vector<BigInt> hodge_diamond(const ParabolicData& pd, std::uint64_t cap = kDefaultEnumerationCap)
{
  return hodge_diamond(pd, *default_coset_cache().get(pd, cap));
}

/// The non-compact-only criterion, which is exact when every non-compact
/// root has alpha_j-coefficient 1: singular iff c k = -(delta, w^{-1} alpha)
/// for some non-compact alpha with that coefficient.
inline bool simplified_singular(const ParabolicData& pd, const WeylElement& w, std::int64_t k)
{
  const auto& rs = pd.root_system();
  const auto j = static_cast<std::size_t>(pd.node() - 1);
  for (int idx : pd.noncompact_indices()) {
    const auto& a = rs.positive_root_coords()[static_cast<std::size_t>(idx)];
    if (a[j] != 1) continue;
    Vec pre = rs.from_coords(w.act_inverse(a));
    if (Rational(pd.c() * k) == -rs.inner(rs.delta(), pre)) return true;
  }
  return false;
}

/// |{alpha non-compact : c k < -(delta, w^{-1} alpha)}|.
inline int simplified_index(const ParabolicData& pd, const WeylElement& w, std::int64_t k)
{
  const auto& rs = pd.root_system();
  int p = 0;
  for (int idx : pd.noncompact_indices()) {
    Vec pre = rs.from_coords(w.act_inverse(rs.positive_root_coords()[static_cast<std::size_t>(idx)]));
    if (Rational(pd.c() * k) < -rs.inner(rs.delta(), pre)) ++p;
  }
  return p;
}

struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1; ///< inclusive; lo > hi is empty

  bool empty() const { return lo > hi; }
};

struct CohomologyTable {
  const ParabolicData* parabolic = nullptr;
  std::map<std::pair<int, std::int64_t>, CohomologyVector> entries;
};

/// Every (q, k) cell of a rectangle; q outside 0..n gives the zero vector.
inline CohomologyTable cohomology_table(const ParabolicData& pd, IntRange q_range, IntRange k_range,
                                        std::uint64_t cap = kDefaultEnumerationCap)
{
  CohomologyTable table;
  table.parabolic = &pd;
  if (q_range.empty() || k_range.empty()) return table;
  auto reps = default_coset_cache().get(pd, cap);
  PairingTables tables(pd);
  for (std::int64_t q = q_range.lo; q <= q_range.hi; ++q)
    for (std::int64_t k = k_range.lo; k <= k_range.hi; ++k)
      table.entries.emplace(std::pair{static_cast<int>(q), k},
                            q < 0 || q > pd.dim_x() ? CohomologyVector(pd.dim_x())
                                                    : twisted_forms_cohomology(pd, *reps, tables, static_cast<int>(q), k));
  return table;
}

} // namespace flagcohom
