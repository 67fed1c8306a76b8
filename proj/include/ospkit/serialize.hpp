#pragma once

// Canonical JSON forms: rationals as "p/q" (q omitted when 1), weights as
// comma-joined coordinates, object keys sorted. Also the versioned on-disk
// cache for SimpleModule.

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "catO.hpp"
#include "homology.hpp"
#include "verma.hpp"

namespace osp {

using Json = nlohmann::json;

inline Json to_json(const FormalCharacter& ch)
{
  Json out = Json::array();
  for (const auto& [w, m] : ch) out.push_back({{"weight", to_string(w)}, {"mult", m}});
  return out;
}

inline Json to_json(const SignedCharacter& ch)
{
  Json out = Json::array();
  for (const auto& w : ch.support()) out.push_back({{"weight", to_string(w)}, {"mult", ch[w]}});
  return out;
}

inline Json to_json(const HomologyReport& rep)
{
  Json degrees = Json::array(), blocks = Json::array(), homology = Json::array(), predicted = Json::array();
  for (const auto& [k, ch] : rep.homology) {
    degrees.push_back(k);
    homology.push_back(to_json(ch));
    predicted.push_back(to_json(rep.predicted.at(k)));
  }
  for (const auto& b : rep.blocks)
    blocks.push_back({{"k", b.k}, {"mu", to_string(b.mu)}, {"dimC", b.dim_c}, {"dimH", b.dim_h}});
  return {{"lambda", to_string(rep.lambda)},
          {"k", degrees},
          {"blocks", blocks},
          {"homology", homology},
          {"predicted", predicted},
          {"match", rep.match}};
}

inline Json to_json(const BGGResolution& res)
{
  Json terms = Json::array();
  for (const auto& term : res.terms) {
    Json t = Json::array();
    for (const auto& e : term) t.push_back({{"w", to_string(e.w)}, {"weight", to_string(e.weight)}});
    terms.push_back(std::move(t));
  }
  return {{"lambda", to_string(res.lambda)}, {"terms", terms}};
}

inline Json to_json(const BBWAnswer& a)
{
  if (a.zero) return {{"kind", "zero"}};
  return {{"kind", "cohomology"}, {"k", a.k}, {"weight", to_string(a.highest_weight)}};
}

inline Json to_json(const LaplacianReport& rep)
{
  Json blocks = Json::array();
  for (const auto& [mu, d] : rep.kernel) blocks.push_back({{"mu", to_string(mu)}, {"dim", d}});
  return {{"k", rep.k}, {"blocks", blocks}, {"total", rep.total}};
}

inline Json to_json(const DecompositionReport& rep)
{
  Json blocks = Json::array();
  for (const auto& b : rep.blocks)
    blocks.push_back({{"mu", to_string(b.mu)},
                      {"dimC", b.dim_c},
                      {"dimA", b.dim_a},
                      {"dimDeltaA", b.dim_delta_a},
                      {"dimR", b.dim_r},
                      {"dimB", b.dim_b},
                      {"dimANext", b.dim_a_next},
                      {"aMeetsKernel", b.a_meets_kernel},
                      {"directAndSpanning", b.direct_and_spanning}});
  return {{"k", rep.k}, {"blocks", blocks}, {"ok", rep.ok}};
}

// ---- SimpleModule cache ----

inline constexpr int kCacheVersion = 1;

inline Json matrix_to_json(const Matrix& m)
{
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(std::move(r));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", rows}};
}

inline Matrix matrix_from_json(const Json& j)
{
  Matrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  const auto& data = j.at("data");
  if (data.size() != m.rows()) throw std::runtime_error("cache: row count mismatch");
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (data[i].size() != m.cols()) throw std::runtime_error("cache: column count mismatch");
    for (std::size_t j2 = 0; j2 < m.cols(); ++j2) m(i, j2) = parse_rational(data[i][j2].get<std::string>());
  }
  return m;
}

inline Json module_to_json(const SimpleModule& L)
{
  Json blocks = Json::array(), actions = Json::array();
  for (const auto& [mu, d] : L.blocks()) blocks.push_back({{"mu", to_string(mu)}, {"dim", d}});
  for (const auto& [key, m] : L.actions())
    actions.push_back({{"root", key.first}, {"mu", to_string(key.second)}, {"matrix", matrix_to_json(m)}});
  return {{"version", kCacheVersion},
          {"n", L.highest_weight().rank()},
          {"lambda", to_string(L.highest_weight())},
          {"blocks", blocks},
          {"actions", actions}};
}

/// nullopt when the blob has another version or key.
inline std::optional<SimpleModule> module_from_json(const Json& j, std::shared_ptr<const Realization> g,
                                                    const Weight& lambda)
{
  if (!j.is_object() || j.value("version", -1) != kCacheVersion) return std::nullopt;
  if (j.value("n", std::size_t{0}) != lambda.rank() || j.value("lambda", std::string{}) != to_string(lambda))
    return std::nullopt;
  SimpleModule L(std::move(g), lambda);
  for (const auto& b : j.at("blocks")) L.set_block(parse_weight(b.at("mu").get<std::string>()), b.at("dim").get<std::size_t>());
  for (const auto& a : j.at("actions"))
    L.set_action(a.at("root").get<std::size_t>(), parse_weight(a.at("mu").get<std::string>()), matrix_from_json(a.at("matrix")));
  return L;
}

inline std::filesystem::path cache_path(const std::filesystem::path& dir, const Weight& lambda)
{
  return dir / ("simple_n" + std::to_string(lambda.rank()) + "_" + to_string(lambda) + ".json");
}

/// Loads L(lambda) from `dir` when a matching blob exists, otherwise builds
/// and stores it. Unreadable or mismatched blobs are recomputed.
inline SimpleModule cached_simple_quotient(const std::optional<std::filesystem::path>& dir, const Weight& lambda)
{
  auto g = realize(lambda.rank());
  if (!dir) return simple_quotient(g, lambda);
  const auto path = cache_path(*dir, lambda);
  if (std::ifstream in(path); in) {
    try {
      if (auto L = module_from_json(Json::parse(in), g, lambda)) return std::move(*L);
    } catch (const std::exception&) {
    }
  }
  SimpleModule L = simple_quotient(g, lambda);
  std::error_code ec;
  std::filesystem::create_directories(*dir, ec);
  if (std::ofstream out(path); out) out << module_to_json(L).dump() << '\n';
  return L;
}

}  // namespace osp
