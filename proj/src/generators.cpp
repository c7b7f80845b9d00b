#include "netdist/generators.hpp"

#include "netdist/error.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace netdist {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

double pairs(std::size_t n) { return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1); }

std::uint64_t edge_key(Vertex a, Vertex b) {
  const auto lo = static_cast<std::uint32_t>(std::min(a, b));
  const auto hi = static_cast<std::uint32_t>(std::max(a, b));
  return (static_cast<std::uint64_t>(lo) << 32) | hi;
}

void invalid(const std::string& what) { throw Error(ErrorKind::InvalidParams, what); }

bool is_probability(double p) { return p >= 0.0 && p <= 1.0; }

Graph gnp(std::size_t n, double p, Rng& rng) {
  std::vector<EdgeInput> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.bernoulli(p)) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), {}});
    }
  }
  return Graph(n, edges);
}

Graph sbm2(std::size_t n, const Sbm2Params& prm, Rng& rng) {
  const std::size_t first = (n + 1) / 2;
  std::vector<EdgeInput> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool same = (i < first) == (j < first);
      if (rng.bernoulli(same ? prm.p : prm.q)) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j), {}});
      }
    }
  }
  return Graph(n, edges);
}

// Star on l + 1 vertices with hub l, then each arrival attaches to l distinct
// earlier vertices. Targets are drawn sequentially without replacement with
// weights equal to the degrees before the arrival.
Graph preferential_attachment(std::size_t n, std::size_t l, Rng& rng) {
  std::vector<EdgeInput> edges;
  edges.reserve(l * (n - l));
  std::vector<double> degree(n, 0.0);
  const auto hub = static_cast<Vertex>(l);
  for (Vertex v = 0; v < hub; ++v) {
    edges.push_back({v, hub, {}});
    degree[static_cast<std::size_t>(v)] = 1.0;
  }
  degree[l] = static_cast<double>(l);

  std::vector<double> weight;
  std::vector<Vertex> chosen;
  for (std::size_t v = l + 1; v < n; ++v) {
    weight.assign(degree.begin(), degree.begin() + static_cast<std::ptrdiff_t>(v));
    double total = std::accumulate(weight.begin(), weight.end(), 0.0);
    chosen.clear();
    for (std::size_t draw = 0; draw < l; ++draw) {
      const double target = rng.uniform() * total;
      double acc = 0.0;
      std::size_t pick = v;
      for (std::size_t u = 0; u < v; ++u) {
        if (weight[u] <= 0.0) continue;
        acc += weight[u];
        pick = u;
        if (target < acc) break;
      }
      total -= weight[pick];
      weight[pick] = 0.0;
      chosen.push_back(static_cast<Vertex>(pick));
    }
    for (Vertex u : chosen) {
      edges.push_back({u, static_cast<Vertex>(v), {}});
      degree[static_cast<std::size_t>(u)] += 1.0;
    }
    degree[v] = static_cast<double>(l);
  }
  return Graph(n, edges);
}

Graph watts_strogatz(std::size_t n, const WattsStrogatzParams& prm, Rng& rng) {
  const std::size_t half = prm.k_ring / 2;
  std::vector<std::pair<Vertex, Vertex>> ring;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t o = 1; o <= half; ++o) {
      const auto j = (i + o) % n;
      ring.emplace_back(static_cast<Vertex>(std::min(i, j)), static_cast<Vertex>(std::max(i, j)));
    }
  }
  std::sort(ring.begin(), ring.end());

  std::unordered_set<std::uint64_t> present;
  std::vector<std::size_t> degree(n, 0);
  for (const auto& [i, j] : ring) {
    present.insert(edge_key(i, j));
    ++degree[static_cast<std::size_t>(i)];
    ++degree[static_cast<std::size_t>(j)];
  }

  for (const auto& [i, j] : ring) {
    if (!rng.bernoulli(prm.beta)) continue;
    if (degree[static_cast<std::size_t>(i)] + 1 >= n) continue;  // no eligible target
    Vertex target;
    do {
      target = static_cast<Vertex>(rng.below(n));
    } while (target == i || present.contains(edge_key(i, target)));
    present.erase(edge_key(i, j));
    present.insert(edge_key(i, target));
    --degree[static_cast<std::size_t>(j)];
    ++degree[static_cast<std::size_t>(target)];
  }

  std::vector<EdgeInput> edges;
  edges.reserve(present.size());
  for (auto key : present) {
    edges.push_back({static_cast<Vertex>(key >> 32), static_cast<Vertex>(key & 0xffffffffU), {}});
  }
  return Graph(n, edges);
}

Graph lattice2d(const Lattice2dParams& prm) {
  std::vector<EdgeInput> edges;
  auto id = [&](std::size_t r, std::size_t c) { return static_cast<Vertex>(r * prm.cols + c); };
  for (std::size_t r = 0; r < prm.rows; ++r) {
    for (std::size_t c = 0; c < prm.cols; ++c) {
      if (c + 1 < prm.cols) edges.push_back({id(r, c), id(r, c + 1), {}});
      if (r + 1 < prm.rows) edges.push_back({id(r, c), id(r + 1, c), {}});
    }
  }
  return Graph(prm.rows * prm.cols, edges);
}

}  // namespace

std::string_view EnsembleSpec::model() const noexcept {
  return std::visit(Overloaded{
                        [](const GnpParams&) { return std::string_view("gnp"); },
                        [](const Sbm2Params&) { return std::string_view("sbm2"); },
                        [](const PreferentialAttachmentParams&) {
                          return std::string_view("preferential_attachment");
                        },
                        [](const WattsStrogatzParams&) { return std::string_view("watts_strogatz"); },
                        [](const DegreeSequenceParams&) {
                          return std::string_view("random_degree_sequence");
                        },
                        [](const Lattice2dParams&) { return std::string_view("lattice2d"); },
                    },
                    params);
}

void EnsembleSpec::validate() const {
  if (n == 0) invalid("n must be >= 1");
  std::visit(Overloaded{
                 [](const GnpParams& p) {
                   if (!is_probability(p.p)) invalid("gnp: p must lie in [0, 1]");
                 },
                 [](const Sbm2Params& p) {
                   if (!is_probability(p.p) || !is_probability(p.q)) {
                     invalid("sbm2: p and q must lie in [0, 1]");
                   }
                 },
                 [this](const PreferentialAttachmentParams& p) {
                   if (p.l < 1 || p.l >= n) invalid("preferential_attachment: need 1 <= l < n");
                 },
                 [this](const WattsStrogatzParams& p) {
                   if (p.k_ring < 2 || p.k_ring % 2 != 0 || p.k_ring >= n) {
                     invalid("watts_strogatz: k_ring must be even with 2 <= k_ring < n");
                   }
                   if (!is_probability(p.beta)) invalid("watts_strogatz: beta must lie in [0, 1]");
                 },
                 [this](const DegreeSequenceParams& p) {
                   if (p.degrees.empty()) return;
                   if (p.degrees.size() != n) invalid("random_degree_sequence: need n degrees");
                   if (!is_graphical(p.degrees)) {
                     invalid("random_degree_sequence: sequence is not graphical");
                   }
                 },
                 [this](const Lattice2dParams& p) {
                   if (p.rows * p.cols != n) invalid("lattice2d: rows * cols must equal n");
                 },
             },
             params);
}

Graph sample_once(const EnsembleSpec& spec, Seed seed, std::uint64_t attempt) {
  spec.validate();
  Rng rng(seed, attempt);
  const std::size_t n = spec.n;
  return std::visit(
      Overloaded{
          [&](const GnpParams& p) { return gnp(n, p.p, rng); },
          [&](const Sbm2Params& p) { return sbm2(n, p, rng); },
          [&](const PreferentialAttachmentParams& p) {
            return preferential_attachment(n, p.l, rng);
          },
          [&](const WattsStrogatzParams& p) { return watts_strogatz(n, p, rng); },
          [&](const DegreeSequenceParams& p) {
            if (p.degrees.empty()) {
              invalid("random_degree_sequence: no target degrees given");
            }
            Graph start = havel_hakimi(p.degrees);
            return degree_preserving_shuffle(start, 10 * start.m(), rng);
          },
          [&](const Lattice2dParams& p) { return lattice2d(p); },
      },
      spec.params);
}

Graph sample(const EnsembleSpec& spec, Seed seed) {
  if (!spec.require_connected) return sample_once(spec, seed, 0);
  for (std::uint64_t attempt = 0; attempt <= spec.max_retries; ++attempt) {
    Graph g = sample_once(spec, seed, attempt);
    if (is_connected(g)) return g;
  }
  throw Error(ErrorKind::RetriesExhausted,
              std::string(spec.model()) + ": no connected draw after " +
                  std::to_string(spec.max_retries) + " retries");
}

double volume_match_gnp(const EnsembleSpec& alt) {
  alt.validate();
  const std::size_t n = alt.n;
  if (n < 2) invalid("volume matching needs n >= 2");
  if (const auto* pa = std::get_if<PreferentialAttachmentParams>(&alt.params)) {
    return static_cast<double>(pa->l * (n - pa->l)) / pairs(n);
  }
  if (const auto* sbm = std::get_if<Sbm2Params>(&alt.params)) {
    const std::size_t c1 = (n + 1) / 2;
    const std::size_t c2 = n - c1;
    const double within = c1 >= 2 ? pairs(c1) : 0.0;
    const double within2 = c2 >= 2 ? pairs(c2) : 0.0;
    const double expected = (within + within2) * sbm->p +
                            static_cast<double>(c1) * static_cast<double>(c2) * sbm->q;
    return expected / pairs(n);
  }
  if (const auto* ws = std::get_if<WattsStrogatzParams>(&alt.params)) {
    return static_cast<double>(n * ws->k_ring / 2) / pairs(n);
  }
  throw Error(ErrorKind::UnsupportedModel,
              "volume matching is defined for preferential_attachment, sbm2 and watts_strogatz, not " +
                  std::string(alt.model()));
}

DegreeSequence degree_sequence_of(const Graph& g) {
  DegreeSequence out;
  out.degrees.reserve(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) {
    out.degrees.push_back(static_cast<double>(g.degree(static_cast<Vertex>(v))));
  }
  return out;
}

bool is_graphical(std::span<const std::size_t> degrees) {
  const std::size_t n = degrees.size();
  std::vector<std::size_t> d(degrees.begin(), degrees.end());
  std::sort(d.begin(), d.end(), std::greater<>());
  std::size_t total = std::accumulate(d.begin(), d.end(), std::size_t{0});
  if (total % 2 != 0) return false;
  if (n > 0 && d.front() >= n) return false;
  std::size_t lhs = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    lhs += d[k - 1];
    std::size_t rhs = k * (k - 1);
    for (std::size_t i = k; i < n; ++i) rhs += std::min(d[i], k);
    if (lhs > rhs) return false;
  }
  return true;
}

Graph havel_hakimi(std::span<const std::size_t> degrees) {
  if (!is_graphical(degrees)) invalid("degree sequence is not graphical");
  const std::size_t n = degrees.size();
  std::vector<std::size_t> remaining(degrees.begin(), degrees.end());
  std::vector<Vertex> order(n);
  std::vector<EdgeInput> edges;
  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
      return remaining[static_cast<std::size_t>(a)] > remaining[static_cast<std::size_t>(b)];
    });
    const Vertex head = order[0];
    const std::size_t d = remaining[static_cast<std::size_t>(head)];
    if (d == 0) break;
    remaining[static_cast<std::size_t>(head)] = 0;
    for (std::size_t t = 1; t <= d; ++t) {
      const Vertex v = order[t];
      --remaining[static_cast<std::size_t>(v)];
      edges.push_back({head, v, {}});
    }
  }
  return Graph(n, edges);
}

Graph degree_preserving_shuffle(const Graph& g, std::size_t swaps, Rng& rng) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::unordered_set<std::uint64_t> present;
  edges.reserve(g.m());
  present.reserve(2 * g.m());
  for (const auto& e : g.edges()) {
    edges.emplace_back(e.i, e.j);
    present.insert(edge_key(e.i, e.j));
  }
  const std::size_t m = edges.size();
  if (m >= 2) {
    for (std::size_t s = 0; s < swaps; ++s) {
      const auto x = rng.below(m);
      const auto y = rng.below(m);
      if (x == y) continue;
      auto [a, b] = edges[x];
      auto [c, d] = edges[y];
      if (rng.next() & 1U) std::swap(c, d);
      // (a, b), (c, d) -> (a, d), (c, b)
      if (a == d || c == b) continue;
      if (present.contains(edge_key(a, d)) || present.contains(edge_key(c, b))) continue;
      present.erase(edge_key(a, b));
      present.erase(edge_key(c, d));
      present.insert(edge_key(a, d));
      present.insert(edge_key(c, b));
      edges[x] = {a, d};
      edges[y] = {c, b};
    }
  }
  std::vector<EdgeInput> out;
  out.reserve(m);
  for (const auto& [a, b] : edges) out.push_back({a, b, {}});
  return Graph(g.n(), out);
}

void to_json(nlohmann::json& j, const EnsembleSpec& spec) {
  nlohmann::json params = std::visit(
      Overloaded{
          [](const GnpParams& p) { return nlohmann::json{{"p", p.p}}; },
          [](const Sbm2Params& p) { return nlohmann::json{{"p", p.p}, {"q", p.q}}; },
          [](const PreferentialAttachmentParams& p) { return nlohmann::json{{"l", p.l}}; },
          [](const WattsStrogatzParams& p) {
            return nlohmann::json{{"k_ring", p.k_ring}, {"beta", p.beta}};
          },
          [](const DegreeSequenceParams& p) { return nlohmann::json{{"degrees", p.degrees}}; },
          [](const Lattice2dParams& p) {
            return nlohmann::json{{"rows", p.rows}, {"cols", p.cols}};
          },
      },
      spec.params);
  j = nlohmann::json{{"model", spec.model()},
                     {"n", spec.n},
                     {"params", std::move(params)},
                     {"require_connected", spec.require_connected},
                     {"max_retries", spec.max_retries}};
}

void from_json(const nlohmann::json& j, EnsembleSpec& spec) {
  try {
    const auto model = j.at("model").get<std::string>();
    const auto& p = j.contains("params") ? j.at("params") : nlohmann::json::object();
    spec.require_connected = j.value("require_connected", false);
    spec.max_retries = j.value("max_retries", std::size_t{1000});
    if (model == "gnp") {
      spec.params = GnpParams{p.at("p").get<double>()};
    } else if (model == "sbm2") {
      spec.params = Sbm2Params{p.at("p").get<double>(), p.at("q").get<double>()};
    } else if (model == "preferential_attachment" || model == "pa") {
      spec.params = PreferentialAttachmentParams{p.at("l").get<std::size_t>()};
    } else if (model == "watts_strogatz" || model == "ws") {
      spec.params = WattsStrogatzParams{p.at("k_ring").get<std::size_t>(), p.at("beta").get<double>()};
    } else if (model == "random_degree_sequence" || model == "rds") {
      spec.params = DegreeSequenceParams{p.value("degrees", std::vector<std::size_t>{})};
    } else if (model == "lattice2d") {
      Lattice2dParams lat{p.at("rows").get<std::size_t>(), p.at("cols").get<std::size_t>()};
      spec.params = lat;
      spec.n = lat.rows * lat.cols;
    } else {
      throw Error(ErrorKind::InvalidParams, "unknown model '" + model + "'");
    }
    if (j.contains("n")) {
      spec.n = j.at("n").get<std::size_t>();
    } else if (auto* ds = std::get_if<DegreeSequenceParams>(&spec.params); ds && !ds->degrees.empty()) {
      spec.n = ds->degrees.size();
    } else if (!std::holds_alternative<Lattice2dParams>(spec.params)) {
      throw Error(ErrorKind::InvalidParams, "ensemble spec is missing 'n'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidParams, std::string("ensemble spec: ") + e.what());
  }
}

}  // namespace netdist
