#pragma once

// Root systems of the simple types in exact rational ambient coordinates.
//
// Realizations follow the Bourbaki plates. The invariant form is the
// Euclidean dot product times a per-type rational scalar chosen so that
// short roots have squared length 2:
//
//   A_l, D_l, E_6..8 : scale 1 (all roots squared length 2)
//   B_l, F_4         : scale 2 (short e_i has length 1 in the plate)
//   C_l, G_2         : scale 1 (long roots 4 resp. 6)
//
// This differs from the Killing form by one positive scalar per type.

#include "flagcohom/errors.hpp"
#include "flagcohom/rational.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

namespace flagcohom {

enum class Family { A, B, C, D, E, F, G };

inline char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

struct LieType {
  Family family = Family::A;
  int rank = 1;

  std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

  bool admissible() const
  {
    switch (family) {
      case Family::A: return rank >= 1;
      case Family::B: return rank >= 2;
      case Family::C: return rank >= 2;
      case Family::D: return rank >= 3;
      case Family::E: return rank >= 6 && rank <= 8;
      case Family::F: return rank == 4;
      case Family::G: return rank == 2;
    }
    return false;
  }

  void validate() const
  {
    if (!admissible()) throw Error(ErrorCode::InvalidRank, "no simple type " + name());
  }

  friend bool operator==(const LieType&, const LieType&) = default;
  friend auto operator<=>(const LieType&, const LieType&) = default;
};

/// Parse a family letter (case-insensitive). Throws InvalidRank on junk.
inline Family parse_family(std::string_view s)
{
  if (s.size() == 1) {
    char ch = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (ch >= 'A' && ch <= 'G') return static_cast<Family>(ch - 'A');
  }
  throw Error(ErrorCode::InvalidRank, "unknown Lie family '" + std::string(s) + "'");
}

/// Every admissible type with rank <= max_rank, in family/rank order.
inline std::vector<LieType> all_types(int max_rank)
{
  std::vector<LieType> out;
  for (int f = 0; f < 7; ++f)
    for (int r = 1; r <= max_rank; ++r) {
      LieType t{static_cast<Family>(f), r};
      if (t.admissible()) out.push_back(t);
    }
  return out;
}

/// Integer coordinates of a root in the basis of simple roots.
using RootCoords = std::vector<int>;

class RootSystem {
public:
  explicit RootSystem(LieType type) : type_(type)
  {
    type.validate();
    build_simple_roots();
    build_forms();
    build_positive_roots();
    build_weights();
  }

  const LieType& type() const { return type_; }
  int rank() const { return type_.rank; }
  std::size_t ambient_dim() const { return ambient_dim_; }

  /// The invariant form is `scale() * dot(u, v)`.
  const Rational& scale() const { return scale_; }

  Rational inner(const Vec& u, const Vec& v) const
  {
    if (u.size() != ambient_dim_ || v.size() != ambient_dim_)
      throw Error(ErrorCode::DimensionMismatch,
                  "expected ambient dimension " + std::to_string(ambient_dim_) + ", got " +
                      std::to_string(u.size()) + " and " + std::to_string(v.size()));
    return scale_ * dot(u, v);
  }

  /// Simple roots alpha_1..alpha_l (0-based storage, Bourbaki numbering).
  const std::vector<Vec>& simple_roots() const { return simple_; }
  const Vec& simple_root(int i) const { return simple_.at(static_cast<std::size_t>(i - 1)); }

  const std::vector<Vec>& positive_roots() const { return positive_; }
  const std::vector<RootCoords>& positive_root_coords() const { return positive_coords_; }

  const std::vector<Vec>& fundamental_weights() const { return fundamental_; }
  const Vec& fundamental_weight(int j) const { return fundamental_.at(static_cast<std::size_t>(j - 1)); }
  /// Fundamental weights expressed in the simple-root basis (rational).
  const std::vector<std::vector<Rational>>& fundamental_weight_coords() const { return fundamental_coords_; }

  const Vec& delta() const { return delta_; }
  /// delta in the simple-root basis; twice it is the integer vector sum of Phi+.
  const std::vector<Rational>& delta_coords() const { return delta_coords_; }

  /// cartan(i, k) = 2 (alpha_i, alpha_k) / (alpha_i, alpha_i), 0-based.
  int cartan(int i, int k) const { return cartan_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]; }
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  /// gram(i, k) = (alpha_i, alpha_k), always an integer under this normalization.
  int gram(int i, int k) const { return gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]; }

  /// Ambient vector of a root-lattice element given in the simple-root basis.
  template <class Coeff>
  Vec from_coords(const std::vector<Coeff>& coords) const
  {
    Vec v(ambient_dim_, Rational(0));
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] != 0) v = v + Rational(coords[i]) * simple_[i];
    return v;
  }

  /// Exact rational coordinates of v in the simple-root basis; NotInSpan
  /// if v has a component orthogonal to the root span.
  std::vector<Rational> rational_coords(const Vec& v) const
  {
    std::vector<Rational> rhs(static_cast<std::size_t>(rank()));
    for (int i = 0; i < rank(); ++i) rhs[static_cast<std::size_t>(i)] = inner(simple_[static_cast<std::size_t>(i)], v);
    std::vector<std::vector<Rational>> g(static_cast<std::size_t>(rank()), std::vector<Rational>(static_cast<std::size_t>(rank())));
    for (int i = 0; i < rank(); ++i)
      for (int k = 0; k < rank(); ++k) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] = gram(i, k);
    std::vector<Rational> x;
    solve_exact(g, rhs, x);
    if (from_coords(x) != v) throw Error(ErrorCode::NotInSpan, "vector is not in the root span");
    return x;
  }

  /// Integer coefficients a_i with alpha = sum a_i alpha_i.
  RootCoords decompose(const Vec& alpha) const
  {
    auto x = rational_coords(alpha);
    RootCoords out;
    out.reserve(x.size());
    for (const auto& c : x) {
      if (!is_integer(c)) throw Error(ErrorCode::NotInSpan, "vector is not in the root lattice");
      out.push_back(static_cast<int>(numerator_of(c)));
    }
    return out;
  }

  /// Index into positive_roots() of +-alpha, or -1.
  int positive_index(const RootCoords& coords) const
  {
    auto it = coord_index_.find(coords);
    if (it != coord_index_.end()) return it->second;
    RootCoords neg(coords);
    for (auto& a : neg) a = -a;
    it = coord_index_.find(neg);
    return it == coord_index_.end() ? -1 : it->second;
  }

  bool is_root(const Vec& v) const
  {
    try {
      return positive_index(decompose(v)) >= 0;
    } catch (const Error&) {
      return false;
    }
  }

  bool is_positive_root_coords(const RootCoords& coords) const { return coord_index_.count(coords) > 0; }

  /// (beta, delta). NotARoot unless beta is in Phi.
  Rational height(const Vec& beta) const
  {
    if (!is_root(beta)) throw Error(ErrorCode::NotARoot, "height of a non-root");
    return inner(beta, delta_);
  }

  const Vec& highest_root() const { return positive_.back(); }

private:
  LieType type_;
  std::size_t ambient_dim_ = 0;
  Rational scale_ = 1;
  std::vector<Vec> simple_;
  std::vector<std::vector<int>> gram_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Vec> positive_;
  std::vector<RootCoords> positive_coords_;
  std::map<RootCoords, int> coord_index_;
  std::vector<Vec> fundamental_;
  std::vector<std::vector<Rational>> fundamental_coords_;
  Vec delta_;
  std::vector<Rational> delta_coords_;

  Vec unit(std::size_t i, Rational s = 1) const
  {
    Vec v(ambient_dim_, Rational(0));
    v[i] = s;
    return v;
  }

  void build_simple_roots()
  {
    const int l = type_.rank;
    const Rational half(1, 2);
    auto e_diff = [&](std::size_t i, std::size_t j) { return unit(i) - unit(j); };
    switch (type_.family) {
      case Family::A:
        ambient_dim_ = static_cast<std::size_t>(l + 1);
        for (int i = 0; i < l; ++i) simple_.push_back(e_diff(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)));
        break;
      case Family::B:
      case Family::C:
      case Family::D:
        ambient_dim_ = static_cast<std::size_t>(l);
        for (int i = 0; i + 1 < l; ++i) simple_.push_back(e_diff(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)));
        if (type_.family == Family::B) {
          simple_.push_back(unit(static_cast<std::size_t>(l - 1)));
          scale_ = 2;
        } else if (type_.family == Family::C) {
          simple_.push_back(unit(static_cast<std::size_t>(l - 1), 2));
        } else {
          simple_.push_back(unit(static_cast<std::size_t>(l - 2)) + unit(static_cast<std::size_t>(l - 1)));
        }
        break;
      case Family::E: {
        ambient_dim_ = 8;
        Vec a1(8, -half);
        a1[0] = half;
        a1[7] = half;
        simple_.push_back(a1);
        simple_.push_back(unit(0) + unit(1));
        for (std::size_t i = 1; i + 1 < static_cast<std::size_t>(l); ++i) simple_.push_back(e_diff(i, i - 1));
        break;
      }
      case Family::F:
        ambient_dim_ = 4;
        scale_ = 2;
        simple_.push_back(e_diff(1, 2));
        simple_.push_back(e_diff(2, 3));
        simple_.push_back(unit(3));
        simple_.push_back(Vec{half, -half, -half, -half});
        break;
      case Family::G:
        ambient_dim_ = 3;
        simple_.push_back(e_diff(0, 1));
        simple_.push_back(Vec{Rational(-2), Rational(1), Rational(1)});
        break;
    }
  }

  void build_forms()
  {
    const auto l = static_cast<std::size_t>(type_.rank);
    gram_.assign(l, std::vector<int>(l, 0));
    cartan_.assign(l, std::vector<int>(l, 0));
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t k = 0; k < l; ++k) {
        Rational g = inner(simple_[i], simple_[k]);
        gram_[i][k] = static_cast<int>(numerator_of(g));
      }
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t k = 0; k < l; ++k) cartan_[i][k] = 2 * gram_[i][k] / gram_[i][i];
  }

  // Closure of the simple roots under alpha_i-strings, level by level.
  void build_positive_roots()
  {
    const int l = type_.rank;
    std::vector<RootCoords> level;
    for (int i = 0; i < l; ++i) {
      RootCoords c(static_cast<std::size_t>(l), 0);
      c[static_cast<std::size_t>(i)] = 1;
      level.push_back(c);
    }
    std::vector<RootCoords> all;
    std::map<RootCoords, int> seen;
    while (!level.empty()) {
      for (auto& r : level) {
        seen.emplace(r, 0);
        all.push_back(r);
      }
      std::vector<RootCoords> next;
      for (const auto& beta : level) {
        for (int i = 0; i < l; ++i) {
          int p = 0;
          RootCoords down(beta);
          while (true) {
            down[static_cast<std::size_t>(i)] -= 1;
            if (!seen.count(down)) break;
            ++p;
          }
          int pairing = 0;
          for (int k = 0; k < l; ++k) pairing += beta[static_cast<std::size_t>(k)] * cartan(i, k);
          if (p - pairing > 0) {
            RootCoords up(beta);
            up[static_cast<std::size_t>(i)] += 1;
            if (!seen.count(up) && std::find(next.begin(), next.end(), up) == next.end()) next.push_back(up);
          }
        }
      }
      std::sort(next.begin(), next.end());
      level = std::move(next);
    }
    positive_coords_ = std::move(all);
    for (std::size_t i = 0; i < positive_coords_.size(); ++i) {
      coord_index_.emplace(positive_coords_[i], static_cast<int>(i));
      positive_.push_back(from_coords(positive_coords_[i]));
    }
  }

  void build_weights()
  {
    const auto l = static_cast<std::size_t>(type_.rank);
    std::vector<std::vector<Rational>> g(l, std::vector<Rational>(l));
    for (std::size_t i = 0; i < l; ++i)
      for (std::size_t k = 0; k < l; ++k) g[i][k] = gram_[i][k];
    delta_coords_.assign(l, Rational(0));
    delta_ = Vec(ambient_dim_, Rational(0));
    for (std::size_t j = 0; j < l; ++j) {
      std::vector<Rational> rhs(l, Rational(0));
      rhs[j] = Rational(gram_[j][j], 2);
      std::vector<Rational> x;
      solve_exact(g, rhs, x);
      fundamental_coords_.push_back(x);
      fundamental_.push_back(from_coords(x));
      for (std::size_t k = 0; k < l; ++k) delta_coords_[k] += x[k];
      delta_ = delta_ + fundamental_.back();
    }
  }
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

inline RootSystemPtr build_root_system(LieType type) { return std::make_shared<const RootSystem>(type); }

/// Identify the simple type of a connected subdiagram on `nodes` (0-based).
inline LieType identify_subdiagram(const RootSystem& rs, const std::vector<int>& nodes)
{
  const int m = static_cast<int>(nodes.size());
  if (m == 1) return {Family::A, 1};
  std::vector<int> degree(static_cast<std::size_t>(m), 0);
  int double_a = -1, double_b = -1;
  bool triple = false;
  for (int x = 0; x < m; ++x)
    for (int y = x + 1; y < m; ++y) {
      int bond = rs.cartan(nodes[static_cast<std::size_t>(x)], nodes[static_cast<std::size_t>(y)]) *
                 rs.cartan(nodes[static_cast<std::size_t>(y)], nodes[static_cast<std::size_t>(x)]);
      if (bond == 0) continue;
      ++degree[static_cast<std::size_t>(x)];
      ++degree[static_cast<std::size_t>(y)];
      if (bond == 3) triple = true;
      if (bond == 2) {
        double_a = x;
        double_b = y;
      }
    }
  if (triple) return {Family::G, 2};
  if (double_a >= 0) {
    if (m == 2) return {Family::B, 2};
    const auto da = static_cast<std::size_t>(double_a), db = static_cast<std::size_t>(double_b);
    if (degree[da] == 2 && degree[db] == 2) return {Family::F, 4};
    std::size_t end = degree[da] == 1 ? da : db;
    std::size_t other = end == da ? db : da;
    int len_end = rs.gram(nodes[end], nodes[end]);
    int len_other = rs.gram(nodes[other], nodes[other]);
    return {len_end < len_other ? Family::B : Family::C, m};
  }
  auto branch = std::find(degree.begin(), degree.end(), 3);
  if (branch == degree.end()) return {Family::A, m};
  // Arm lengths from the branch node.
  const int centre = static_cast<int>(branch - degree.begin());
  std::vector<int> arms;
  for (int start = 0; start < m; ++start) {
    if (start == centre) continue;
    const auto cs = static_cast<std::size_t>(centre), ss = static_cast<std::size_t>(start);
    if (rs.cartan(nodes[cs], nodes[ss]) == 0) continue;
    int len = 1, prev = centre, cur = start;
    while (true) {
      int nxt = -1;
      for (int y = 0; y < m; ++y)
        if (y != prev && y != cur &&
            rs.cartan(nodes[static_cast<std::size_t>(cur)], nodes[static_cast<std::size_t>(y)]) != 0)
          nxt = y;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, m};
  return {Family::E, m};
}

/// Connected components of the Dynkin diagram restricted to `nodes` (0-based),
/// each sorted, ordered by smallest node.
inline std::vector<std::vector<int>> dynkin_components(const RootSystem& rs, std::vector<int> nodes)
{
  std::vector<std::vector<int>> comps;
  std::vector<bool> used(nodes.size(), false);
  for (std::size_t s = 0; s < nodes.size(); ++s) {
    if (used[s]) continue;
    std::vector<int> comp{nodes[s]};
    used[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head)
      for (std::size_t t = 0; t < nodes.size(); ++t)
        if (!used[t] && rs.cartan(comp[head], nodes[t]) != 0) {
          used[t] = true;
          comp.push_back(nodes[t]);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(comp);
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

} // namespace flagcohom
