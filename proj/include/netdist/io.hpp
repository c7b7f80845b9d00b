#pragma once

#include "netdist/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace netdist::io {

// Edge-list text: one edge per line as "i j" or "i j w", '#' starts a comment,
// and an optional first line "n=<count>" fixes the vertex count (otherwise
// max id + 1). All parse failures throw Error{ParseError}.

Graph read_edge_list(std::istream& in);
Graph read_edge_list(const std::filesystem::path& path);

/// Writes "i j" for unit weights and "i j w" otherwise. The "n=<count>" header
/// is emitted only when the vertex count cannot be recovered from the edges.
void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list(const std::filesystem::path& path, const Graph& g);

/// CSV with header "t,u,v".
std::vector<ContactEvent> read_contacts(std::istream& in);
std::vector<ContactEvent> read_contacts(const std::filesystem::path& path);

/// Dense CSV, n rows of n comma-separated reals.
Eigen::MatrixXd read_matrix_csv(std::istream& in);
Eigen::MatrixXd read_matrix_csv(const std::filesystem::path& path);

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double x);

}  // namespace netdist::io
