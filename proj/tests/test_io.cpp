#include "fixtures.hpp"

#include "netdist/error.hpp"
#include "netdist/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace netdist;
using fixture::error_kind;

TEST_CASE("edge lists parse comments, weights and headers") {
  std::istringstream in("# triangle\n0 1\n1 2 2.5\n\n0 2  # trailing\n");
  const Graph g = io::read_edge_list(in);
  CHECK(g.n() == 3);
  CHECK(g.m() == 3);
  CHECK(g.weight(1, 2) == 2.5);

  std::istringstream header("n=5\n0 1\n");
  CHECK(io::read_edge_list(header).n() == 5);

  std::istringstream blank("");
  CHECK(io::read_edge_list(blank).n() == 0);
}

TEST_CASE("edge-list parse failures are ParseError") {
  for (const char* text : {"0\n", "0 x\n", "0 1 2 3\n", "-1 2\n", "1 1\n", "0 1 -2\n", "n=2\n0 5\n",
                           "0 1\nn=4\n"}) {
    std::istringstream in(text);
    CAPTURE(text);
    CHECK(error_kind([&] { io::read_edge_list(in); }) == ErrorKind::ParseError);
  }
  CHECK(error_kind([] { io::read_edge_list(std::filesystem::path("/nonexistent/x.edges")); }) ==
        ErrorKind::ParseError);
}

TEST_CASE("edge lists round-trip") {
  std::vector<EdgeInput> edges{{0, 1, std::nullopt}, {1, 3, 0.1}, {2, 3, 1e-300}};
  const Graph g = build_graph(6, edges);
  std::ostringstream out;
  io::write_edge_list(out, g);
  CHECK(out.str().rfind("n=6\n", 0) == 0);
  std::istringstream in(out.str());
  CHECK(io::read_edge_list(in) == g);

  std::ostringstream c4;
  io::write_edge_list(c4, fixture::make(4, {{0, 1}, {1, 3}, {3, 2}, {2, 0}}));
  CHECK(c4.str() == "0 1\n0 2\n1 3\n2 3\n");
}

TEST_CASE("contact CSV") {
  std::istringstream in("t,u,v\n0.5,0,1\n20,2,1\n");
  const auto events = io::read_contacts(in);
  REQUIRE(events.size() == 2);
  CHECK(events[1].t == 20.0);
  CHECK(events[1].u == 2);
  CHECK(events[1].v == 1);

  std::istringstream header_only("t,u,v\n");
  CHECK(io::read_contacts(header_only).empty());

  for (const char* text : {"a,b,c\n1,0,1\n", "t,u,v\n1,0\n", "t,u,v\nx,0,1\n", "t,u,v\n1,0,0\n",
                           "t,u,v\ninf,0,1\n"}) {
    std::istringstream bad(text);
    CAPTURE(text);
    CHECK(error_kind([&] { io::read_contacts(bad); }) == ErrorKind::ParseError);
  }
}

TEST_CASE("matrix CSV") {
  std::istringstream in("1,-0.8\n-0.8,1\n");
  const auto m = io::read_matrix_csv(in);
  REQUIRE(m.rows() == 2);
  CHECK(m(0, 1) == -0.8);
  std::istringstream ragged("1,2\n3\n");
  CHECK(error_kind([&] { io::read_matrix_csv(ragged); }) == ErrorKind::ParseError);
  std::istringstream rect("1,2\n3,4\n5,6\n");
  CHECK(error_kind([&] { io::read_matrix_csv(rect); }) == ErrorKind::ParseError);
}

TEST_CASE("format_double round-trips") {
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(2.0) == "2");
  const double x = 0.1 + 0.2;
  CHECK(std::stod(io::format_double(x)) == x);
}
