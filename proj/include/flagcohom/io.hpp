#pragma once

// JSON renderings. Rationals are written as "p/q" strings and big
// integers as decimal strings; key order is fixed.

#include "flagcohom/bott.hpp"
#include "flagcohom/parabolic.hpp"
#include "flagcohom/root_system.hpp"
#include "flagcohom/torelli.hpp"
#include "flagcohom/weyl.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace flagcohom {

using Json = nlohmann::ordered_json;

inline Json vec_json(const Vec& v)
{
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_fraction_string(x));
  return a;
}

inline Json big_json(const std::vector<BigInt>& h)
{
  Json a = Json::array();
  for (const auto& x : h) a.push_back(x.str());
  return a;
}

inline Json root_system_json(const RootSystem& rs)
{
  Json j;
  j["type"] = rs.type().name();
  Json roots = Json::array();
  for (const auto& r : rs.positive_roots()) roots.push_back(vec_json(r));
  j["positive_roots"] = roots;
  j["delta"] = vec_json(rs.delta());
  return j;
}

inline Json constants_json(const ParabolicData& pd)
{
  Json j;
  j["group"] = pd.group_name();
  j["node"] = pd.node();
  j["dim"] = pd.dim_x();
  j["c"] = pd.c();
  j["d0"] = pd.d0();
  j["mu"] = to_fraction_string(pd.mu());
  return j;
}

inline Json describe_json(const ParabolicData& pd)
{
  Json j = constants_json(pd);
  j["positive_roots"] = pd.root_system().positive_roots().size();
  j["compact_roots"] = pd.compact_roots().size();
  j["weyl_order"] = weyl_order(pd.root_system().type()).str();
  j["levi"] = pd.levi_type();
  j["cominuscule"] = pd.cominuscule();
  return j;
}

inline Json sizes_json(const std::vector<std::uint64_t>& sizes)
{
  Json j;
  j["sizes"] = sizes;
  return j;
}

inline Json cohomology_table_json(const CohomologyTable& table)
{
  const auto& pd = *table.parabolic;
  Json j;
  j["group"] = pd.group_name();
  j["node"] = pd.node();
  j["dim"] = pd.dim_x();
  Json cells = Json::array();
  for (const auto& [qk, vec] : table.entries) {
    Json cell;
    cell["q"] = qk.first;
    cell["k"] = qk.second;
    cell["h"] = big_json(vec.h);
    cells.push_back(cell);
  }
  j["cells"] = cells;
  return j;
}

inline const char* torelli_verdict(const TorelliReport& r) { return r.holds ? "holds" : "not established"; }

inline Json torelli_json(const CoverSpec& spec, const TorelliReport& r, const KuranishiReport& k,
                         const CoverInvariants& inv)
{
  Json j;
  j["group"] = spec.pd->group_name();
  j["node"] = spec.pd->node();
  j["d"] = spec.d;
  j["N"] = spec.N;
  j["bound"] = r.bound;
  j["mu"] = to_fraction_string(r.mu);
  j["n"] = spec.pd->dim_x();
  j["torelli"] = torelli_verdict(r);
  j["h0_normal"] = k.h0_normal.str();
  j["h1_tangent"] = k.h1_tangent ? k.h1_tangent->str() : std::string("unknown");
  j["omega_degree"] = inv.omega_degree;
  j["geometric_genus"] = inv.geometric_genus.str();
  return j;
}

inline Json kuranishi_json(const CoverSpec& spec, KuranishiSumLimit limit, const KuranishiReport& k)
{
  Json j;
  j["group"] = spec.pd->group_name();
  j["node"] = spec.pd->node();
  j["d"] = spec.d;
  j["N"] = spec.N;
  j["sum_limit"] = limit == KuranishiSumLimit::UpToN ? "N" : "N-1";
  j["h0_normal"] = k.h0_normal.str();
  j["tau_vanishes"] = k.tau_vanishes;
  j["h1_tangent"] = k.h1_tangent ? k.h1_tangent->str() : std::string("unknown");
  return j;
}

} // namespace flagcohom
