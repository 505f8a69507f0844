#pragma once

// Cyclic coverings f: Z -> X = G/P of degree N branched along a divisor
// of O_X(d): the effective infinitesimal Torelli bound, the dimension of
// the Kuranishi tangent space, and h^0 of the canonical bundle of Z.

#include "flagcohom/bott.hpp"
#include "flagcohom/errors.hpp"
#include "flagcohom/parabolic.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace flagcohom {

struct CoverSpec {
  const ParabolicData* pd = nullptr;
  std::int64_t d = 1;
  std::int64_t N = 2;
};

inline void validate(const CoverSpec& spec)
{
  if (spec.pd == nullptr) throw Error(ErrorCode::InvalidCover, "missing parabolic data");
  if (spec.d < 1) throw Error(ErrorCode::InvalidCover, "d must be >= 1, got " + std::to_string(spec.d));
  if (spec.N < 2) throw Error(ErrorCode::InvalidCover, "N must be >= 2, got " + std::to_string(spec.N));
  if (spec.pd->dim_x() < 2)
    throw Error(ErrorCode::DimensionTooSmall,
                "dim X = " + std::to_string(spec.pd->dim_x()) + " < 2 for " + spec.pd->group_name());
}

enum class TorelliReason { ExceedsMu, ExceedsDim, NotEstablished };

struct TorelliReport {
  std::int64_t bound = 0; ///< d(N-1) - d0
  Rational mu;
  std::int64_t n_minus_1 = 0;
  bool holds = false; ///< false means "not established", never a disproof
  TorelliReason reason = TorelliReason::NotEstablished;
};

inline TorelliReport check_torelli(const CoverSpec& spec)
{
  validate(spec);
  TorelliReport r;
  r.bound = spec.d * (spec.N - 1) - spec.pd->d0();
  r.mu = spec.pd->mu();
  r.n_minus_1 = spec.pd->dim_x() - 1;
  if (Rational(r.bound) > r.mu) {
    r.holds = true;
    r.reason = TorelliReason::ExceedsMu;
  } else if (r.bound > r.n_minus_1) {
    r.holds = true;
    r.reason = TorelliReason::ExceedsDim;
  }
  return r;
}

/// Upper limit of the sum of h^0(O(jd)) giving h^0(Z, N_Z). The default
/// (j = 0..N) is the printed form; UpToNMinus1 is kept for comparison.
enum class KuranishiSumLimit { UpToN, UpToNMinus1 };

struct KuranishiReport {
  BigInt h0_normal;
  bool tau_vanishes = false;         ///< d(N-1) > d0
  std::optional<BigInt> h1_tangent;  ///< known only when tau_vanishes
};

inline KuranishiReport kuranishi(const CoverSpec& spec, KuranishiSumLimit limit = KuranishiSumLimit::UpToN)
{
  validate(spec);
  const std::int64_t top = limit == KuranishiSumLimit::UpToN ? spec.N : spec.N - 1;
  KuranishiReport r;
  r.h0_normal = -1;
  for (std::int64_t j = 0; j <= top; ++j) r.h0_normal += line_bundle_cohomology(*spec.pd, j * spec.d)[0];
  r.tau_vanishes = spec.d * (spec.N - 1) > spec.pd->d0();
  if (r.tau_vanishes) r.h1_tangent = r.h0_normal;
  return r;
}

struct CoverInvariants {
  std::int64_t omega_degree = 0; ///< omega_Z = f^* O_X(omega_degree)
  BigInt geometric_genus;        ///< h^0(Z, omega_Z)
};

/// f_* O_Z = sum_{i<N} L^{-i} and the projection formula give
/// h^0(omega_Z) = sum_{i=0}^{N-1} h^0(O(d(N-1-i) - d0)).
inline CoverInvariants cover_invariants(const CoverSpec& spec)
{
  validate(spec);
  CoverInvariants inv;
  inv.omega_degree = spec.d * (spec.N - 1) - spec.pd->d0();
  inv.geometric_genus = 0;
  for (std::int64_t i = 0; i < spec.N; ++i)
    inv.geometric_genus += line_bundle_cohomology(*spec.pd, spec.d * (spec.N - 1 - i) - spec.pd->d0())[0];
  return inv;
}

} // namespace flagcohom
