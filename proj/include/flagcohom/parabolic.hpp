#pragma once

// Maximal parabolic subgroups: the compact / non-compact split of Phi+
// at a node j and the constants n = dim G/P, c, d0, mu.

#include "flagcohom/errors.hpp"
#include "flagcohom/rational.hpp"
#include "flagcohom/root_system.hpp"
#include "flagcohom/weyl.hpp"

#include <algorithm>
#include <memory>
#include <string>
#include <vector>

namespace flagcohom {

struct TorelliConstants {
  int n = 0;
  int c = 0;
  int d0 = 0;
  Rational mu;
};

class ParabolicData {
public:
  ParabolicData(RootSystemPtr rs, int node) : rs_(std::move(rs)), node_(node)
  {
    if (node < 1 || node > rs_->rank())
      throw Error(ErrorCode::IndexOutOfRange,
                  "node " + std::to_string(node) + " outside 1.." + std::to_string(rs_->rank()) + " for " +
                      rs_->type().name());
    const auto j = static_cast<std::size_t>(node - 1);
    const auto& coords = rs_->positive_root_coords();
    Vec noncompact_sum(rs_->ambient_dim(), Rational(0));
    for (std::size_t i = 0; i < coords.size(); ++i) {
      const int a = coords[i][j];
      if (a == 0) {
        compact_idx_.push_back(static_cast<int>(i));
        compact_.push_back(rs_->positive_roots()[i]);
      } else {
        noncompact_idx_.push_back(static_cast<int>(i));
        noncompact_.push_back(rs_->positive_roots()[i]);
        noncompact_sum = noncompact_sum + rs_->positive_roots()[i];
        max_coefficient_ = std::max(max_coefficient_, a);
      }
    }
    c_ = rs_->gram(node - 1, node - 1) / 2;

    // sum of non-compact roots = d0 * lambda_j, exactly
    const Vec& lambda = rs_->fundamental_weight(node);
    Rational ratio = rs_->inner(noncompact_sum, rs_->simple_root(node)) / rs_->inner(lambda, rs_->simple_root(node));
    if (!is_integer(ratio) || ratio <= 0 || ratio * lambda != noncompact_sum)
      throw Error(ErrorCode::NotProportional,
                  "sum of non-compact roots is not a positive multiple of lambda_" + std::to_string(node));
    d0_ = static_cast<int>(numerator_of(ratio));

    mu_ = 0;
    for (const auto& a : rs_->positive_roots()) mu_ = std::max(mu_, rs_->inner(a, rs_->delta()) / c_);

    for (int i = 0; i < rs_->rank(); ++i)
      if (i != node - 1) levi_nodes_.push_back(i);
  }

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  int node() const { return node_; }

  const std::vector<Vec>& compact_roots() const { return compact_; }
  const std::vector<Vec>& noncompact_roots() const { return noncompact_; }
  /// Indices into root_system().positive_roots().
  const std::vector<int>& compact_indices() const { return compact_idx_; }
  const std::vector<int>& noncompact_indices() const { return noncompact_idx_; }

  int dim_x() const { return static_cast<int>(noncompact_.size()); }
  int c() const { return c_; }
  int d0() const { return d0_; }
  const Rational& mu() const { return mu_; }

  /// Largest coefficient of alpha_j among non-compact roots; 1 iff the node is cominuscule.
  int max_node_coefficient() const { return max_coefficient_; }
  bool cominuscule() const { return max_coefficient_ == 1; }

  /// Simple-root nodes of the Levi factor (0-based), i.e. every node except j.
  const std::vector<int>& levi_nodes() const { return levi_nodes_; }

  std::vector<LieType> levi_components() const
  {
    std::vector<LieType> out;
    for (const auto& comp : dynkin_components(*rs_, levi_nodes_)) out.push_back(identify_subdiagram(*rs_, comp));
    return out;
  }

  std::string levi_type() const
  {
    auto comps = levi_components();
    if (comps.empty()) return "trivial";
    std::string s;
    for (const auto& t : comps) s += (s.empty() ? "" : "x") + t.name();
    return s;
  }

  BigInt levi_weyl_order() const { return subsystem_weyl_order(*rs_, levi_nodes_); }

  /// |W| / |W_Levi|, the number of minimal coset representatives.
  BigInt coset_count() const { return weyl_order(rs_->type()) / levi_weyl_order(); }

  std::string group_name() const { return rs_->type().name(); }

private:
  RootSystemPtr rs_;
  int node_;
  std::vector<Vec> compact_;
  std::vector<Vec> noncompact_;
  std::vector<int> compact_idx_;
  std::vector<int> noncompact_idx_;
  std::vector<int> levi_nodes_;
  int c_ = 1;
  int d0_ = 0;
  Rational mu_;
  int max_coefficient_ = 0;
};

inline ParabolicData build_parabolic(RootSystemPtr rs, int node) { return ParabolicData(std::move(rs), node); }

inline TorelliConstants torelli_constants(const ParabolicData& pd)
{
  return {pd.dim_x(), pd.c(), pd.d0(), pd.mu()};
}

/// Minimal-length representatives w with w^{-1} alpha > 0 on Phi_c, graded by length.
inline GradedCosetReps enumerate_coset_reps(const ParabolicData& pd, std::uint64_t cap = kDefaultEnumerationCap)
{
  const BigInt expected = pd.coset_count();
  const auto total = static_cast<std::uint64_t>(expected);
  return enumerate_minimal_reps(pd.root_system(), pd.levi_nodes(), cap, total);
}

} // namespace flagcohom
