#pragma once

#include "netdist/graph.hpp"

#include <initializer_list>
#include <utility>
#include <vector>

namespace fixture {

inline netdist::Graph make(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<netdist::EdgeInput> in;
  for (auto [i, j] : edges) in.push_back({i, j, std::nullopt});
  return netdist::build_graph(n, in);
}

inline netdist::Graph complete(std::size_t n) {
  std::vector<netdist::EdgeInput> in;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) in.push_back({int(i), int(j), std::nullopt});
  }
  return netdist::build_graph(n, in);
}

inline netdist::Graph path(std::size_t n) {
  std::vector<netdist::EdgeInput> in;
  for (std::size_t i = 0; i + 1 < n; ++i) in.push_back({int(i), int(i + 1), std::nullopt});
  return netdist::build_graph(n, in);
}

inline netdist::Graph star(std::size_t leaves) {
  std::vector<netdist::EdgeInput> in;
  for (std::size_t i = 1; i <= leaves; ++i) in.push_back({0, int(i), std::nullopt});
  return netdist::build_graph(leaves + 1, in);
}

inline netdist::Graph empty(std::size_t n) { return netdist::build_graph(n, {}); }

}  // namespace fixture

#include "netdist/error.hpp"

#include <optional>

namespace fixture {

/// Kind of the netdist::Error thrown by f, or nullopt when f returns normally.
template <class F>
std::optional<netdist::ErrorKind> error_kind(F&& f) {
  try {
    f();
  } catch (const netdist::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace fixture
