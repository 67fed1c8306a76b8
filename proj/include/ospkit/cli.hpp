#pragma once

// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 usage error or a weight that violates a precondition.

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catO.hpp"
#include "homology.hpp"
#include "oracles.hpp"
#include "serialize.hpp"
#include "verify.hpp"

namespace osp::cli {

enum ExitCode : int { kOk = 0, kMismatch = 1, kUsage = 2 };

struct RunConfig {
  std::size_t n = 0;
  Weight lambda;
  std::size_t k_max = 0;
  bool json = false;
  std::optional<std::filesystem::path> cache_dir;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

struct RawOptions {
  std::size_t n = 0;
  std::string lambda;
  std::size_t k_max = 0;
  std::string format = "table";
  std::string cache_dir;
};

inline RunConfig resolve(const RawOptions& raw, bool need_lambda_rank)
{
  RunConfig cfg;
  cfg.json = raw.format == "json";
  if (!raw.lambda.empty()) {
    try {
      cfg.lambda = parse_weight(raw.lambda);
    } catch (const std::exception& e) {
      throw UsageError(std::string("cannot parse --lambda: ") + e.what());
    }
    if (raw.n && raw.n != cfg.lambda.rank())
      throw UsageError("--n " + std::to_string(raw.n) + " disagrees with the " + std::to_string(cfg.lambda.rank()) +
                       " coordinates of --lambda");
    cfg.n = cfg.lambda.rank();
  } else {
    if (!raw.n) throw UsageError(need_lambda_rank ? "--lambda or --n is required" : "--n is required");
    cfg.n = raw.n;
    cfg.lambda = Weight(raw.n);
  }
  if (cfg.n == 0) throw UsageError("n must be positive");
  if (cfg.n > kDefaultWeylBound) throw UsageError("n exceeds the supported bound " + std::to_string(kDefaultWeylBound));
  cfg.k_max = raw.k_max ? raw.k_max : cfg.n * cfg.n + 1;
  if (!raw.cache_dir.empty()) cfg.cache_dir = raw.cache_dir;
  else if (const char* env = std::getenv("OSP_CACHE_DIR"); env && *env) cfg.cache_dir = env;
  return cfg;
}

inline void require_dominant(const Weight& lambda)
{
  if (!is_integral_dominant(lambda))
    throw UsageError("lambda = (" + to_string(lambda) +
                     ") must be integral dominant: non-negative integers in weakly decreasing order");
}

inline void print_character(std::ostream& out, const FormalCharacter& ch)
{
  for (const auto& [w, m] : ch) out << "  (" << to_string(w) << ")  " << m << '\n';
}

inline int roots(const RunConfig& cfg, std::ostream& out)
{
  const auto rs = build_root_system(cfg.n);
  std::set<std::size_t> simple;
  for (std::size_t k = 0; k < cfg.n; ++k) simple.insert(static_cast<std::size_t>(rs.simple_index(k)));
  if (cfg.json) {
    Json pos = Json::array();
    for (std::size_t r = 0; r < rs.num_positive(); ++r) {
      const auto& root = rs.positive()[r];
      pos.push_back({{"root", to_string(root.weight)},
                     {"label", root_label(root.weight)},
                     {"parity", root.parity == Parity::odd ? "odd" : "even"},
                     {"simple", simple.count(r) > 0}});
    }
    out << Json{{"n", cfg.n}, {"rho", to_string(rs.rho())}, {"positive", pos}}.dump(2) << '\n';
    return kOk;
  }
  out << "positive roots of osp(1|" << 2 * cfg.n << ")\n";
  for (std::size_t r = 0; r < rs.num_positive(); ++r) {
    const auto& root = rs.positive()[r];
    out << "  " << std::left << std::setw(10) << root_label(root.weight) << std::setw(6)
        << (root.parity == Parity::odd ? "odd" : "even") << (simple.count(r) ? "simple" : "") << '\n';
  }
  out << "rho = (" << to_string(rs.rho()) << ")\n";
  return kOk;
}

inline int weyl(const RunConfig& cfg, std::ostream& out)
{
  const auto elems = enumerate_weyl(cfg.n);
  auto word_text = [](const WeylElement& w) {
    std::string t;
    for (auto s : reduced_word(w)) t += (t.empty() ? "s" : " s") + std::to_string(s + 1);
    return t.empty() ? std::string("e") : t;
  };
  if (cfg.json) {
    Json list = Json::array();
    for (const auto& w : elems)
      list.push_back({{"w", to_string(w)}, {"length", length(w)}, {"word", word_text(w)}});
    Json sizes = Json::array();
    for (std::size_t k = 0; k <= cfg.n * cfg.n; ++k) sizes.push_back(elements_of_length(cfg.n, k).size());
    out << Json{{"n", cfg.n}, {"order", elems.size()}, {"sizes", sizes}, {"elements", list}}.dump(2) << '\n';
    return kOk;
  }
  out << "Weyl group of type B" << cfg.n << ", order " << elems.size() << '\n';
  for (const auto& w : elems)
    out << "  " << std::left << std::setw(18) << to_string(w) << "l=" << std::setw(4) << length(w) << word_text(w)
        << '\n';
  return kOk;
}

inline int character(const RunConfig& cfg, std::ostream& out)
{
  require_dominant(cfg.lambda);
  const auto ch = simple_character(cfg.lambda);
  if (cfg.json) {
    out << Json{{"lambda", to_string(cfg.lambda)}, {"dimension", ch.dimension()}, {"character", to_json(ch)}}.dump(2)
        << '\n';
    return kOk;
  }
  out << "ch L(" << to_string(cfg.lambda) << "), dimension " << ch.dimension() << '\n';
  print_character(out, ch);
  return kOk;
}

inline ChainComplex make_complex(const RunConfig& cfg)
{
  return ChainComplex(std::make_shared<const SimpleModule>(cached_simple_quotient(cfg.cache_dir, cfg.lambda)));
}

inline int homology(const RunConfig& cfg, std::ostream& out)
{
  require_dominant(cfg.lambda);
  const auto C = make_complex(cfg);
  const auto rep = homology_dims(C, cfg.k_max);
  if (cfg.json) {
    out << to_json(rep).dump(2) << '\n';
  } else {
    out << "homology of the chain complex for L(" << to_string(rep.lambda) << "), k <= " << rep.k_max << '\n';
    for (const auto& [k, h] : rep.homology) {
      out << "H_" << k << ":" << (h.empty() ? " 0" : "") << '\n';
      print_character(out, h);
    }
    out << "matches the dot orbit by length: " << (rep.match ? "yes" : "NO") << '\n';
  }
  return rep.match ? kOk : kMismatch;
}

inline std::vector<std::size_t> degrees(const RunConfig& cfg, const std::optional<std::size_t>& k)
{
  if (k) return {*k};
  std::vector<std::size_t> ks;
  for (std::size_t i = 0; i <= cfg.k_max; ++i) ks.push_back(i);
  return ks;
}

inline int laplacian(const RunConfig& cfg, const std::optional<std::size_t>& k, std::ostream& out)
{
  require_dominant(cfg.lambda);
  const auto C = make_complex(cfg);
  const auto ks = degrees(cfg, k);
  const auto rep = homology_dims(C, std::max<std::size_t>(1, *std::max_element(ks.begin(), ks.end())));
  bool contains = true;
  Json list = Json::array();
  for (auto deg : ks) {
    const auto lap = laplacian_kernel(C, deg);
    const auto& h = rep.homology.at(deg);
    for (const auto& [mu, d] : h)
      if (d > (lap.kernel.count(mu) ? lap.kernel.at(mu) : 0)) contains = false;
    if (cfg.json) {
      Json j = to_json(lap);
      j["homology"] = h.dimension();
      list.push_back(std::move(j));
    } else {
      out << "k=" << deg << ": dim ker Laplacian = " << lap.total << ", dim H = " << h.dimension() << '\n';
      for (const auto& [mu, d] : lap.kernel) out << "  (" << to_string(mu) << ")  kernel " << d << ", homology " << h[mu] << '\n';
    }
  }
  if (cfg.json) out << Json{{"lambda", to_string(cfg.lambda)}, {"degrees", list}, {"contains", contains}}.dump(2) << '\n';
  return contains ? kOk : kMismatch;
}

inline int decompose(const RunConfig& cfg, const std::optional<std::size_t>& k, std::ostream& out)
{
  require_dominant(cfg.lambda);
  const auto C = make_complex(cfg);
  bool ok = true;
  Json list = Json::array();
  for (auto deg : degrees(cfg, k)) {
    const auto rep = verify_decomposition(C, deg);
    const bool phi = deg == 0 || verify_phi_iso(C, deg);
    ok = ok && rep.ok && phi;
    if (cfg.json) {
      Json j = to_json(rep);
      j["phiIso"] = phi;
      list.push_back(std::move(j));
      continue;
    }
    out << "k=" << deg << ": splitting " << (rep.ok ? "ok" : "FAILS") << ", phi " << (phi ? "bijective" : "NOT bijective")
        << '\n';
    for (const auto& b : rep.blocks)
      out << "  (" << to_string(b.mu) << ")  C=" << b.dim_c << " A=" << b.dim_a << " dA=" << b.dim_delta_a
          << " R=" << b.dim_r << " B=" << b.dim_b << '\n';
  }
  if (cfg.json) out << Json{{"lambda", to_string(cfg.lambda)}, {"degrees", list}, {"ok", ok}}.dump(2) << '\n';
  return ok ? kOk : kMismatch;
}

inline int bgg(const RunConfig& cfg, std::ostream& out)
{
  require_dominant(cfg.lambda);
  const auto res = bgg_resolution(cfg.lambda);
  if (cfg.json) {
    out << to_json(res).dump(2) << '\n';
    return kOk;
  }
  out << "BGG resolution of L(" << to_string(cfg.lambda) << ")\n";
  for (std::size_t k = 0; k < res.terms.size(); ++k) {
    out << "  term " << k << ":";
    for (const auto& e : res.terms[k]) out << "  M(" << to_string(e.weight) << ")";
    out << '\n';
  }
  return kOk;
}

inline int bbw_cmd(const RunConfig& cfg, std::ostream& out)
{
  if (!cfg.lambda.is_integral()) throw UsageError("bbw requires an integral weight");
  const auto a = bbw(cfg.lambda);
  if (cfg.json) out << to_json(a).dump() << '\n';
  else if (a.zero) out << "all cohomology vanishes (lambda + rho is singular)\n";
  else out << "H^" << a.k << " = L(" << to_string(a.highest_weight) << "), all other degrees vanish\n";
  return kOk;
}

inline int projdim(const RunConfig& cfg, bool weight_given, std::ostream& out)
{
  if (weight_given) {
    if (!cfg.lambda.is_integral()) throw UsageError("projdim requires an integral weight");
    ProjectiveDimensions pd;
    try {
      pd = projective_dimensions(cfg.lambda);
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
    if (cfg.json)
      out << Json{{"mu", to_string(cfg.lambda)},
                  {"w", to_string(pd.w)},
                  {"dominant", to_string(pd.dominant)},
                  {"verma", pd.verma},
                  {"simple", pd.simple}}
                 .dump(2)
          << '\n';
    else
      out << "mu = (" << to_string(cfg.lambda) << ") = " << to_string(pd.w) << " . (" << to_string(pd.dominant)
          << ")\n  pd M(mu) = " << pd.verma << "\n  pd L(mu) = " << pd.simple << '\n';
    return kOk;
  }
  const auto elems = enumerate_weyl(cfg.n);
  if (cfg.json) {
    Json list = Json::array();
    for (const auto& w : elems)
      list.push_back({{"w", to_string(w)}, {"length", length(w)}, {"verma", pd_verma(w)}, {"simple", pd_simple(w)}});
    out << Json{{"n", cfg.n}, {"elements", list}, {"global_dim", global_dim(cfg.n)}}.dump(2) << '\n';
    return kOk;
  }
  out << std::left << std::setw(18) << "w" << std::setw(8) << "l(w)" << std::setw(10) << "pd M" << "pd L" << '\n';
  for (const auto& w : elems)
    out << std::setw(18) << to_string(w) << std::setw(8) << length(w) << std::setw(10) << pd_verma(w) << pd_simple(w)
        << '\n';
  out << "global dimension " << global_dim(cfg.n) << '\n';
  return kOk;
}

inline int verify_all(const RunConfig& cfg, std::ostream& out)
{
  require_dominant(cfg.lambda);
  const auto checks = verify_weight(cfg.lambda, cfg.cache_dir, false);
  std::vector<OracleResult> oracles;
  if (cfg.n <= 2) oracles = oracle_suite(cfg.n, cfg.lambda);
  bool ok = true;
  for (const auto& c : checks) ok = ok && c.pass;
  for (const auto& r : oracles) ok = ok && r.pass;
  if (cfg.json) {
    Json cj = Json::array(), oj = Json::array();
    for (const auto& c : checks) cj.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    for (const auto& r : oracles)
      oj.push_back({{"name", r.name}, {"expected", r.expected}, {"actual", r.actual}, {"pass", r.pass}});
    out << Json{{"lambda", to_string(cfg.lambda)}, {"checks", cj}, {"oracles", oj}, {"pass", ok}}.dump(2) << '\n';
  } else {
    for (const auto& c : checks)
      out << (c.pass ? "PASS  " : "FAIL  ") << c.name << (c.detail.empty() || c.pass ? "" : "  [" + c.detail + "]")
          << '\n';
    for (const auto& r : oracles)
      out << (r.pass ? "PASS  " : "FAIL  ") << "oracle: " << r.name
          << (r.pass ? "" : "  [expected " + r.expected + ", got " + r.actual + "]") << '\n';
    out << (ok ? "all checks passed" : "verification FAILED") << '\n';
  }
  return ok ? kOk : kMismatch;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Exact homological computations for osp(1|2n)", "osp"};
  app.require_subcommand(1);
  detail::RawOptions raw;
  std::optional<std::size_t> k;

  auto common = [&](CLI::App* sub, bool with_kmax) {
    sub->add_option("--n", raw.n, "rank n of osp(1|2n)");
    sub->add_option("--lambda", raw.lambda, "weight as comma-separated coordinates, e.g. 1,0");
    if (with_kmax) sub->add_option("--kmax", raw.k_max, "largest degree (default n^2+1)")->check(CLI::PositiveNumber);
    sub->add_option("--format", raw.format, "output format")->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--cache-dir", raw.cache_dir, "directory for cached simple modules (env OSP_CACHE_DIR)");
  };
  auto* roots = app.add_subcommand("roots", "positive roots, parities and rho");
  auto* weyl = app.add_subcommand("weyl", "Weyl group elements with lengths and reduced words");
  auto* character = app.add_subcommand("character", "character of L(lambda)");
  auto* homology = app.add_subcommand("homology", "n-bar homology of L(lambda)");
  auto* laplacian = app.add_subcommand("laplacian", "Laplacian kernel against homology");
  auto* decompose = app.add_subcommand("decompose", "A + delta*A + R splitting of the chain spaces");
  auto* bgg = app.add_subcommand("bgg", "BGG resolution terms");
  auto* bbw = app.add_subcommand("bbw", "Bott-Borel-Weil answer for a line bundle weight");
  auto* projdim = app.add_subcommand("projdim", "projective dimensions in the regular block");
  auto* verify = app.add_subcommand("verify-all", "every check for one highest weight");
  for (auto* s : {roots, weyl, character, bgg, bbw, projdim}) common(s, false);
  for (auto* s : {homology, laplacian, decompose, verify}) common(s, true);
  for (auto* s : {laplacian, decompose}) s->add_option("--k", k, "single degree (default: all up to kmax)");

  std::vector<std::string> storage{"osp"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    const bool weight_given = !raw.lambda.empty();
    const auto cfg = detail::resolve(raw, true);
    if (roots->parsed()) return detail::roots(cfg, out);
    if (weyl->parsed()) return detail::weyl(cfg, out);
    if (character->parsed()) return detail::character(cfg, out);
    if (homology->parsed()) return detail::homology(cfg, out);
    if (laplacian->parsed()) return detail::laplacian(cfg, k, out);
    if (decompose->parsed()) return detail::decompose(cfg, k, out);
    if (bgg->parsed()) return detail::bgg(cfg, out);
    if (bbw->parsed()) return detail::bbw_cmd(cfg, out);
    if (projdim->parsed()) return detail::projdim(cfg, weight_given, out);
    if (verify->parsed()) return detail::verify_all(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "verification error: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}

}  // namespace osp::cli
