#pragma once

// Command-line front end: describe, betti, line, cohom, torelli, kuranishi.
// Exit codes: 0 success, 2 invalid input, 3 enumeration cap exceeded.

#include "flagcohom/bott.hpp"
#include "flagcohom/errors.hpp"
#include "flagcohom/io.hpp"
#include "flagcohom/parabolic.hpp"
#include "flagcohom/root_system.hpp"
#include "flagcohom/torelli.hpp"
#include "flagcohom/weyl.hpp"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace flagcohom::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitCap = 3;
inline constexpr const char* kCapEnv = "FLAGCOHOM_CAP";

enum class Format { Table, Json, Csv };

struct CliConfig {
  std::string family = "A";
  int rank = 1;
  int node = 1;
  std::string q_range = "0..0";
  std::string k_range = "0..0";
  std::int64_t d = 1;
  std::int64_t N = 2;
  Format format = Format::Table;
  std::uint64_t cap = kDefaultEnumerationCap;
  KuranishiSumLimit sum_limit = KuranishiSumLimit::UpToN;
};

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "a..b" inclusive, or a single integer "a". a > b is the empty range.
inline IntRange parse_range(const std::string& s)
{
  auto to_int = [&](const std::string& part) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(part, &used);
    } catch (const std::exception&) {
      throw InvalidInput("bad range '" + s + "'");
    }
    if (used != part.size()) throw InvalidInput("bad range '" + s + "'");
    return v;
  };
  auto dots = s.find("..");
  if (dots == std::string::npos) {
    auto v = to_int(s);
    return {v, v};
  }
  return {to_int(s.substr(0, dots)), to_int(s.substr(dots + 2))};
}

inline std::string format_h(const CohomologyVector& v)
{
  std::ostringstream os;
  for (std::size_t i = 0; i < v.h.size(); ++i) os << (i ? " " : "") << v.h[i];
  return os.str();
}

inline void render_describe(const ParabolicData& pd, Format fmt, std::ostream& out)
{
  const auto& rs = pd.root_system();
  if (fmt == Format::Json) {
    out << describe_json(pd).dump() << "\n";
    return;
  }
  std::vector<std::pair<std::string, std::string>> rows{
      {"group", pd.group_name()},
      {"node", std::to_string(pd.node())},
      {"dim", std::to_string(pd.dim_x())},
      {"positive_roots", std::to_string(rs.positive_roots().size())},
      {"compact_roots", std::to_string(pd.compact_roots().size())},
      {"c", std::to_string(pd.c())},
      {"d0", std::to_string(pd.d0())},
      {"mu", to_display_string(pd.mu())},
      {"weyl_order", weyl_order(rs.type()).str()},
      {"levi", pd.levi_type()},
      {"cominuscule", pd.cominuscule() ? "yes" : "no"},
  };
  if (fmt == Format::Csv) {
    out << "key,value\n";
    for (const auto& [k, v] : rows) out << k << "," << v << "\n";
    return;
  }
  for (const auto& [k, v] : rows) out << std::left << std::setw(16) << k << v << "\n";
}

inline void render_betti(const ParabolicData& pd, const GradedCosetReps& reps, Format fmt, std::ostream& out)
{
  const auto sizes = reps.sizes();
  if (fmt == Format::Json) {
    Json j;
    j["group"] = pd.group_name();
    j["node"] = pd.node();
    j["dim"] = pd.dim_x();
    j["sizes"] = sizes;
    out << j.dump() << "\n";
    return;
  }
  out << (fmt == Format::Csv ? "q,b\n" : "q  b_2q\n");
  for (std::size_t q = 0; q < sizes.size(); ++q)
    out << q << (fmt == Format::Csv ? "," : "  ") << sizes[q] << "\n";
}

inline void render_line(const ParabolicData& pd, IntRange ks, Format fmt, std::ostream& out)
{
  std::vector<std::pair<std::int64_t, CohomologyVector>> rows;
  if (!ks.empty())
    for (std::int64_t k = ks.lo; k <= ks.hi; ++k) rows.emplace_back(k, line_bundle_cohomology(pd, k));
  if (fmt == Format::Json) {
    Json j;
    j["group"] = pd.group_name();
    j["node"] = pd.node();
    j["dim"] = pd.dim_x();
    Json cells = Json::array();
    for (const auto& [k, v] : rows) {
      Json cell;
      cell["k"] = k;
      cell["h"] = big_json(v.h);
      cells.push_back(cell);
    }
    j["cells"] = cells;
    out << j.dump() << "\n";
    return;
  }
  if (fmt == Format::Csv) {
    out << "k,i,h\n";
    for (const auto& [k, v] : rows)
      for (std::size_t i = 0; i < v.h.size(); ++i) out << k << "," << i << "," << v.h[i] << "\n";
    return;
  }
  out << "k  h^0..h^" << pd.dim_x() << "\n";
  for (const auto& [k, v] : rows) out << k << "  " << format_h(v) << "\n";
}

inline void render_cohom(const CohomologyTable& table, Format fmt, std::ostream& out)
{
  if (fmt == Format::Json) {
    out << cohomology_table_json(table).dump() << "\n";
    return;
  }
  if (fmt == Format::Csv) {
    out << "q,k,i,h\n";
    for (const auto& [qk, v] : table.entries)
      for (std::size_t i = 0; i < v.h.size(); ++i) out << qk.first << "," << qk.second << "," << i << "," << v.h[i] << "\n";
    return;
  }
  out << "q  k  h^0..h^" << table.parabolic->dim_x() << "\n";
  for (const auto& [qk, v] : table.entries) out << qk.first << "  " << qk.second << "  " << format_h(v) << "\n";
}

inline std::string torelli_sentence(const TorelliReport& r)
{
  std::ostringstream os;
  switch (r.reason) {
    case TorelliReason::ExceedsMu: os << "holds (bound " << r.bound << " > mu " << to_display_string(r.mu) << ")"; break;
    case TorelliReason::ExceedsDim: os << "holds (bound " << r.bound << " > n-1 " << r.n_minus_1 << ")"; break;
    case TorelliReason::NotEstablished:
      os << "not established by the theorem (bound " << r.bound << " <= mu " << to_display_string(r.mu)
         << " and bound " << r.bound << " <= n-1 " << r.n_minus_1 << ")";
      break;
  }
  return os.str();
}

inline void render_torelli(const CoverSpec& spec, Format fmt, std::ostream& out)
{
  const auto r = check_torelli(spec);
  const auto k = kuranishi(spec);
  const auto inv = cover_invariants(spec);
  if (fmt == Format::Json) {
    out << torelli_json(spec, r, k, inv).dump() << "\n";
    return;
  }
  if (fmt == Format::Csv) {
    out << "group,node,d,N,bound,mu,n,torelli,h0_normal,h1_tangent\n"
        << spec.pd->group_name() << "," << spec.pd->node() << "," << spec.d << "," << spec.N << "," << r.bound << ","
        << to_fraction_string(r.mu) << "," << spec.pd->dim_x() << "," << torelli_verdict(r) << "," << k.h0_normal << ","
        << (k.h1_tangent ? k.h1_tangent->str() : "unknown") << "\n";
    return;
  }
  out << spec.pd->group_name() << " node " << spec.pd->node() << ", d " << spec.d << ", N " << spec.N << "\n"
      << "infinitesimal Torelli: " << torelli_sentence(r) << "\n"
      << "omega_Z degree " << inv.omega_degree << ", h0(omega_Z) " << inv.geometric_genus << "\n"
      << "h0_normal " << k.h0_normal << ", h1_tangent " << (k.h1_tangent ? k.h1_tangent->str() : "unknown") << "\n"
      << "(assumes the Kuranishi space of Z is smooth)\n";
}

inline void render_kuranishi(const CoverSpec& spec, KuranishiSumLimit limit, Format fmt, std::ostream& out)
{
  const auto k = kuranishi(spec, limit);
  if (fmt == Format::Json) {
    out << kuranishi_json(spec, limit, k).dump() << "\n";
    return;
  }
  const std::string h1 = k.h1_tangent ? k.h1_tangent->str() : "unknown";
  if (fmt == Format::Csv) {
    out << "group,node,d,N,sum_limit,h0_normal,tau_vanishes,h1_tangent\n"
        << spec.pd->group_name() << "," << spec.pd->node() << "," << spec.d << "," << spec.N << ","
        << (limit == KuranishiSumLimit::UpToN ? "N" : "N-1") << "," << k.h0_normal << ","
        << (k.tau_vanishes ? "true" : "false") << "," << h1 << "\n";
    return;
  }
  out << "h0_normal " << k.h0_normal << "\n"
      << "tau_vanishes " << (k.tau_vanishes ? "yes" : "no") << " (d(N-1) = " << spec.d * (spec.N - 1)
      << ", d0 = " << spec.pd->d0() << ")\n"
      << "h1 " << h1 << "\n";
}

/// Run one invocation; all output goes to `out` / `err`.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact cohomology of twisted forms on G/P and cyclic-cover Torelli bounds", "flagcohom"};
  app.require_subcommand(1);
  CliConfig cfg;
  std::string format = "table";
  std::string sum_limit = "N";
  std::uint64_t cap_flag = 0;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--type", cfg.family, "Lie family letter A..G")->required();
    sub->add_option("--rank", cfg.rank, "rank of the simple type")->required();
    sub->add_option("--node", cfg.node, "simple root generating P (Bourbaki numbering)")->required();
    sub->add_option("--format", format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--cap", cap_flag, "maximum number of coset representatives");
  };
  auto* describe = app.add_subcommand("describe", "constants of G/P");
  auto* betti = app.add_subcommand("betti", "Betti numbers |W_1(q)|");
  auto* line = app.add_subcommand("line", "cohomology of O(k)");
  auto* cohom = app.add_subcommand("cohom", "cohomology of Omega^q(k)");
  auto* torelli = app.add_subcommand("torelli", "infinitesimal Torelli bound for a cyclic cover");
  auto* kur = app.add_subcommand("kuranishi", "Kuranishi tangent space of a cyclic cover");
  for (auto* sub : {describe, betti, line, cohom, torelli, kur}) common(sub);
  line->add_option("--k", cfg.k_range, "twist range a..b");
  cohom->add_option("--q", cfg.q_range, "form degree range a..b");
  cohom->add_option("--k", cfg.k_range, "twist range a..b");
  for (auto* sub : {torelli, kur}) {
    sub->add_option("--d", cfg.d, "L = O_X(d)")->required();
    sub->add_option("--N", cfg.N, "covering degree")->required();
  }
  kur->add_option("--kuranishi-sum-limit", sum_limit, "upper limit of the h0 sum")
      ->check(CLI::IsMember({"N", "N-1"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  }

  cfg.format = format == "json" ? Format::Json : format == "csv" ? Format::Csv : Format::Table;
  cfg.sum_limit = sum_limit == "N-1" ? KuranishiSumLimit::UpToNMinus1 : KuranishiSumLimit::UpToN;
  if (const char* env = std::getenv(kCapEnv)) {
    try {
      cfg.cap = std::stoull(env);
    } catch (const std::exception&) {
      err << "invalid " << kCapEnv << " value '" << env << "'\n";
      return kExitInvalid;
    }
  }
  if (cap_flag > 0) cfg.cap = cap_flag;

  try {
    LieType type{parse_family(cfg.family), cfg.rank};
    type.validate();
    const auto pd = build_parabolic(build_root_system(type), cfg.node);
    if (describe->parsed()) {
      render_describe(pd, cfg.format, out);
    } else if (betti->parsed()) {
      render_betti(pd, *default_coset_cache().get(pd, cfg.cap), cfg.format, out);
    } else if (line->parsed()) {
      render_line(pd, parse_range(cfg.k_range), cfg.format, out);
    } else if (cohom->parsed()) {
      const auto table = cohomology_table(pd, parse_range(cfg.q_range), parse_range(cfg.k_range), cfg.cap);
      render_cohom(table, cfg.format, out);
    } else {
      CoverSpec spec{&pd, cfg.d, cfg.N};
      if (torelli->parsed())
        render_torelli(spec, cfg.format, out);
      else
        render_kuranishi(spec, cfg.sum_limit, cfg.format, out);
    }
  } catch (const CapExceeded& e) {
    err << e.what() << "\n";
    return kExitCap;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  } catch (const InvalidInput& e) {
    err << e.what() << "\n";
    return kExitInvalid;
  }
  return kExitOk;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err)
{
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, out, err);
}

} // namespace flagcohom::cli
