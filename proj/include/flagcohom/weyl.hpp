#pragma once

// Weyl group elements and graded minimal coset representatives.
//
// An element is stored by its integer matrix in the simple-root basis
// (column k holds the coordinates of w(alpha_k), which is a root, so all
// entries are bounded by the largest root coefficient). This is the same
// linear map as the ambient orthogonal transformation restricted to the
// root span; apply() and ambient_matrix() give the ambient action.

#include "flagcohom/errors.hpp"
#include "flagcohom/rational.hpp"
#include "flagcohom/root_system.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

namespace flagcohom {

class WeylElement {
public:
  /// Identity of a rank-l group.
  static WeylElement identity(int rank)
  {
    WeylElement w;
    w.rank_ = rank;
    const auto l = static_cast<std::size_t>(rank);
    w.matrix_.assign(l * l, 0);
    for (std::size_t i = 0; i < l; ++i) w.matrix_[i * l + i] = 1;
    w.inverse_ = w.matrix_;
    return w;
  }

  int rank() const { return rank_; }
  int length() const { return static_cast<int>(word_.size()); }

  /// One reduced expression, 1-based simple reflection indices, applied right to left.
  const std::vector<int>& word() const { return word_; }

  /// Row-major l x l integer matrix in the simple-root basis.
  const std::vector<std::int8_t>& matrix() const { return matrix_; }
  const std::vector<std::int8_t>& inverse_matrix() const { return inverse_; }

  int entry(int row, int col) const { return matrix_[index(row, col)]; }
  int inverse_entry(int row, int col) const { return inverse_[index(row, col)]; }

  /// Canonical byte serialization of the matrix; equal keys iff equal elements.
  std::string key() const { return std::string(matrix_.begin(), matrix_.end()); }

  /// w applied to a vector given in simple-root coordinates.
  template <class T>
  std::vector<T> act(const std::vector<T>& coords) const
  {
    return multiply(matrix_, coords);
  }

  template <class T>
  std::vector<T> act_inverse(const std::vector<T>& coords) const
  {
    return multiply(inverse_, coords);
  }

  /// Ambient action, via the stored reduced word. Valid on all of the ambient space.
  Vec apply(const Vec& v, const RootSystem& rs) const
  {
    Vec out = v;
    for (auto it = word_.rbegin(); it != word_.rend(); ++it) out = reflect(out, *it, rs);
    return out;
  }

  /// Ambient matrix (row-major, ambient_dim squared) of the orthogonal map.
  std::vector<Rational> ambient_matrix(const RootSystem& rs) const
  {
    const std::size_t n = rs.ambient_dim();
    std::vector<Rational> m(n * n, Rational(0));
    for (std::size_t c = 0; c < n; ++c) {
      Vec e(n, Rational(0));
      e[c] = 1;
      Vec img = apply(e, rs);
      for (std::size_t r = 0; r < n; ++r) m[r * n + c] = img[r];
    }
    return m;
  }

  /// w * s_i (1-based i).
  WeylElement times_simple(int i, const RootSystem& rs) const
  {
    check_index(i, rs.rank());
    const bool longer = column_positive(i - 1);
    WeylElement out = raw_times_simple(i - 1, rs);
    if (longer) {
      out.word_.push_back(i);
    } else {
      out.word_ = out.reduced_word(rs);
    }
    return out;
  }

  /// True iff w(alpha_i) is a positive root (0-based i); then l(w s_i) = l(w) + 1.
  bool column_positive(int i) const
  {
    for (int r = 0; r < rank_; ++r)
      if (matrix_[index(r, i)] < 0) return false;
    return true;
  }

  /// True iff w^{-1}(alpha_i) is a positive root (0-based i).
  bool inverse_column_positive(int i) const
  {
    for (int r = 0; r < rank_; ++r)
      if (inverse_[index(r, i)] < 0) return false;
    return true;
  }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }

private:
  int rank_ = 0;
  std::vector<std::int8_t> matrix_;
  std::vector<std::int8_t> inverse_;
  std::vector<int> word_;

  std::size_t index(int r, int c) const
  {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(c);
  }

  template <class T>
  std::vector<T> multiply(const std::vector<std::int8_t>& m, const std::vector<T>& x) const
  {
    std::vector<T> out(static_cast<std::size_t>(rank_), T(0));
    for (int r = 0; r < rank_; ++r)
      for (int c = 0; c < rank_; ++c) {
        const int e = m[index(r, c)];
        if (e != 0) out[static_cast<std::size_t>(r)] += T(e) * x[static_cast<std::size_t>(c)];
      }
    return out;
  }

  static Vec reflect(const Vec& v, int i, const RootSystem& rs)
  {
    const Vec& a = rs.simple_root(i);
    Rational f = 2 * rs.inner(v, a) / rs.inner(a, a);
    return v - f * a;
  }

  // Matrix part of w * s_i (0-based i); the word is left untouched.
  WeylElement raw_times_simple(int ii, const RootSystem& rs) const
  {
    WeylElement out = *this;
    // (M S_i) column k = M col k - cartan(i,k) M col i
    for (int k = 0; k < rank_; ++k) {
      const int a = rs.cartan(ii, k);
      if (k == ii || a == 0) continue;
      for (int r = 0; r < rank_; ++r)
        out.matrix_[index(r, k)] = static_cast<std::int8_t>(matrix_[index(r, k)] - a * matrix_[index(r, ii)]);
    }
    for (int r = 0; r < rank_; ++r) out.matrix_[index(r, ii)] = static_cast<std::int8_t>(-matrix_[index(r, ii)]);
    // (S_i N) row i = N row i - sum_k cartan(i,k) N row k
    for (int c = 0; c < rank_; ++c) {
      int v = inverse_[index(ii, c)];
      for (int k = 0; k < rank_; ++k) v -= rs.cartan(ii, k) * inverse_[index(k, c)];
      out.inverse_[index(ii, c)] = static_cast<std::int8_t>(v);
    }
    return out;
  }

  // Peel right descents off the matrix until it is the identity.
  std::vector<int> reduced_word(const RootSystem& rs) const
  {
    std::vector<int> rev;
    WeylElement cur = *this;
    while (true) {
      int descent = -1;
      for (int i = 0; i < rank_ && descent < 0; ++i)
        if (!cur.column_positive(i)) descent = i;
      if (descent < 0) break;
      cur = cur.raw_times_simple(descent, rs);
      rev.push_back(descent + 1);
    }
    return {rev.rbegin(), rev.rend()};
  }

  static void check_index(int i, int rank)
  {
    if (i < 1 || i > rank)
      throw Error(ErrorCode::IndexOutOfRange,
                  "simple reflection index " + std::to_string(i) + " outside 1.." + std::to_string(rank));
  }

  friend WeylElement simple_reflection(int i, const RootSystem& rs);
};

inline WeylElement simple_reflection(int i, const RootSystem& rs)
{
  WeylElement::check_index(i, rs.rank());
  return WeylElement::identity(rs.rank()).times_simple(i, rs);
}

/// Inversion count |{alpha > 0 : w alpha < 0}|.
inline int length(const WeylElement& w, const RootSystem& rs)
{
  int count = 0;
  for (const auto& a : rs.positive_root_coords()) {
    auto img = w.act(a);
    for (int x : img) {
      if (x != 0) {
        if (x < 0) ++count;
        break;
      }
    }
  }
  return count;
}

/// |W| from the classical product formulas.
inline BigInt weyl_order(LieType type)
{
  type.validate();
  auto factorial = [](int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  const int l = type.rank;
  switch (type.family) {
    case Family::A: return factorial(l + 1);
    case Family::B:
    case Family::C: return (BigInt(1) << l) * factorial(l);
    case Family::D: return (BigInt(1) << (l - 1)) * factorial(l);
    case Family::E: return l == 6 ? BigInt(51840) : l == 7 ? BigInt(2903040) : BigInt(696729600);
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

struct GradedCosetReps {
  std::vector<std::vector<WeylElement>> by_length;
  std::uint64_t total = 0;

  std::vector<std::uint64_t> sizes() const
  {
    std::vector<std::uint64_t> s;
    for (const auto& g : by_length) s.push_back(g.size());
    return s;
  }

  const std::vector<WeylElement>& grade(int q) const
  {
    static const std::vector<WeylElement> empty;
    if (q < 0 || q >= static_cast<int>(by_length.size())) return empty;
    return by_length[static_cast<std::size_t>(q)];
  }
};

inline constexpr std::uint64_t kDefaultEnumerationCap = 1'000'000;

/// BFS from the identity by right multiplication with simple reflections,
/// keeping only w with w^{-1}(alpha_k) > 0 for every k in `levi_nodes`
/// (0-based). With an empty Levi set this enumerates the whole group.
/// `expected_total`, when known, is checked against the cap up front.
inline GradedCosetReps enumerate_minimal_reps(const RootSystem& rs, const std::vector<int>& levi_nodes,
                                              std::uint64_t cap, std::uint64_t expected_total = 0)
{
  if (expected_total > cap) throw CapExceeded(expected_total, cap);
  GradedCosetReps out;
  std::unordered_set<std::string> seen;
  std::vector<WeylElement> frontier{WeylElement::identity(rs.rank())};
  seen.insert(frontier.front().key());
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end(),
              [](const WeylElement& a, const WeylElement& b) { return a.matrix() < b.matrix(); });
    out.total += frontier.size();
    if (out.total > cap) throw CapExceeded(out.total, cap);
    std::vector<WeylElement> next;
    for (const auto& w : frontier) {
      for (int i = 1; i <= rs.rank(); ++i) {
        if (!w.column_positive(i - 1)) continue;
        WeylElement v = w.times_simple(i, rs);
        bool member = std::all_of(levi_nodes.begin(), levi_nodes.end(),
                                  [&](int k) { return v.inverse_column_positive(k); });
        if (!member) continue;
        if (seen.insert(v.key()).second) next.push_back(std::move(v));
      }
    }
    out.by_length.push_back(std::move(frontier));
    frontier = std::move(next);
  }
  return out;
}

/// Product of the Weyl orders of the Dynkin components on `nodes`.
inline BigInt subsystem_weyl_order(const RootSystem& rs, const std::vector<int>& nodes)
{
  BigInt order = 1;
  for (const auto& comp : dynkin_components(rs, nodes)) order *= weyl_order(identify_subdiagram(rs, comp));
  return order;
}

} // namespace flagcohom
