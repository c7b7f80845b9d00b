#include "netdist/error.hpp"
#include "netdist/experiment.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <string>

namespace netdist {

namespace {

double parse_real(std::string_view text, std::string_view what) {
  if (text == "inf" || text == "infinity") return std::numeric_limits<double>::infinity();
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidParams,
                "bad " + std::string(what) + " value '" + std::string(text) + "'");
  }
  return value;
}

std::size_t parse_count(std::string_view text, std::string_view what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::InvalidParams,
                "bad " + std::string(what) + " value '" + std::string(text) + "'");
  }
  return value;
}

// JSON value that may be a number or a keyword string ("all", "auto", "inf").
std::optional<double> optional_real(const nlohmann::json& j, std::string_view keyword) {
  if (j.is_null()) return std::nullopt;
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == keyword) return std::nullopt;
    return parse_real(s, keyword);
  }
  return j.get<double>();
}

}  // namespace

Representation representation_from_string(std::string_view name) {
  if (name == "adjacency") return Representation::Adjacency;
  if (name == "laplacian") return Representation::Laplacian;
  if (name == "normalized_laplacian") return Representation::NormalizedLaplacian;
  throw Error(ErrorKind::InvalidParams, "unknown representation '" + std::string(name) + "'");
}

DistanceSpec parse_distance(std::string_view text) {
  DistanceSpec spec;
  const auto colon = text.find(':');
  spec.kind = distance_kind_from_string(text.substr(0, colon));
  std::string_view rest = colon == text.npos ? std::string_view{} : text.substr(colon + 1);
  while (!rest.empty()) {
    const auto next = rest.find(':');
    const auto item = rest.substr(0, next);
    rest = next == rest.npos ? std::string_view{} : rest.substr(next + 1);
    const auto eq = item.find('=');
    if (eq == item.npos) {
      throw Error(ErrorKind::InvalidParams, "expected key=value in '" + std::string(item) + "'");
    }
    const auto key = item.substr(0, eq);
    const auto value = item.substr(eq + 1);
    if (key == "k") {
      if (value != "all") spec.k = parse_count(value, "k");
    } else if (key == "p") {
      spec.p_norm = parse_real(value, "p");
    } else if (key == "eps") {
      if (value != "auto") spec.eps = parse_real(value, "eps");
    } else if (key == "penalty") {
      if (value != "auto") spec.penalty = parse_real(value, "penalty");
    } else {
      throw Error(ErrorKind::InvalidParams, "unknown distance option '" + std::string(key) + "'");
    }
  }
  spec.validate();
  return spec;
}

void to_json(nlohmann::json& j, const DistanceSpec& spec) {
  j = nlohmann::json{{"kind", to_string(spec.kind)}, {"id", spec.id()}};
  if (is_spectral(spec.kind)) {
    j["k"] = spec.k ? nlohmann::json(*spec.k) : nlohmann::json("all");
    j["p_norm"] = std::isinf(spec.p_norm) ? nlohmann::json("inf") : nlohmann::json(spec.p_norm);
  }
  if (spec.kind == DistanceKind::DeltaCon) {
    j["eps"] = spec.eps ? nlohmann::json(*spec.eps) : nlohmann::json("auto");
  }
  if (spec.kind == DistanceKind::ResistanceRenormalized) {
    j["penalty"] = spec.penalty ? nlohmann::json(*spec.penalty) : nlohmann::json("auto");
  }
}

void from_json(const nlohmann::json& j, DistanceSpec& spec) {
  if (j.is_string()) {
    spec = parse_distance(j.get<std::string>());
    return;
  }
  try {
    spec = DistanceSpec{};
    spec.kind = distance_kind_from_string(j.at("kind").get<std::string>());
    if (j.contains("k")) {
      if (auto k = optional_real(j.at("k"), "all")) spec.k = static_cast<std::size_t>(*k);
    }
    if (j.contains("p_norm")) spec.p_norm = optional_real(j.at("p_norm"), "").value_or(2.0);
    if (j.contains("eps")) spec.eps = optional_real(j.at("eps"), "auto");
    if (j.contains("penalty")) spec.penalty = optional_real(j.at("penalty"), "auto");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidParams, std::string("distance spec: ") + e.what());
  }
  spec.validate();
}

void to_json(nlohmann::json& j, const BoxStats& s) {
  j = nlohmann::json{{"median", s.median}, {"q1", s.q1},   {"q3", s.q3},
                     {"p5", s.p5},         {"p95", s.p95}, {"mean", s.mean}};
}

void to_json(nlohmann::json& j, const ScaledSampleSet& set) {
  j = nlohmann::json{{"distance_id", set.distance_id},
                     {"mu0", set.mu0},
                     {"sigma0", set.sigma0},
                     {"stats", set.stats},
                     {"d0", set.d0},
                     {"d1", set.d1},
                     {"d1_hat", set.d1_hat}};
}

void to_json(nlohmann::json& j, const ExperimentConfig& cfg) {
  j = nlohmann::json{{"null", cfg.null_spec},
                     {"alternative", cfg.alt_spec},
                     {"null_degrees_from_alternative", cfg.null_degrees_from_alt},
                     {"distances", cfg.distances},
                     {"samples", cfg.n_samples},
                     {"seed", cfg.master_seed}};
}

void from_json(const nlohmann::json& j, ExperimentConfig& cfg) {
  try {
    cfg.null_degrees_from_alt = j.value("null_degrees_from_alternative", false);
    cfg.alt_spec = j.at("alternative").get<EnsembleSpec>();
    cfg.null_spec = j.at("null").get<EnsembleSpec>();
    cfg.distances = j.at("distances").get<std::vector<DistanceSpec>>();
    cfg.n_samples = j.value("samples", std::size_t{500});
    cfg.master_seed = j.value("seed", std::uint64_t{0});
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidParams, std::string("experiment config: ") + e.what());
  }
}

void to_json(nlohmann::json& j, const Benchmark& bench) {
  j = bench.config;
  j["name"] = bench.name;
  auto sweeps = nlohmann::json::array();
  for (const auto& s : bench.sweeps) {
    sweeps.push_back({{"representation", to_string(s.representation)}, {"k", s.k_values}});
  }
  j["sweeps"] = std::move(sweeps);
}

void from_json(const nlohmann::json& j, Benchmark& bench) {
  bench.config = j.get<ExperimentConfig>();
  try {
    bench.name = j.value("name", std::string("custom"));
    bench.sweeps.clear();
    if (j.contains("sweeps")) {
      for (const auto& s : j.at("sweeps")) {
        bench.sweeps.push_back({representation_from_string(s.at("representation").get<std::string>()),
                                s.at("k").get<std::vector<std::size_t>>()});
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidParams, std::string("benchmark config: ") + e.what());
  }
}

}  // namespace netdist
