#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <stdexcept>

#include "pebblekit/io.hpp"

using namespace pebblekit;

TEST_CASE("graph files round-trip canonically") {
  Graph g = generate_family({Family::Bistar, 2});
  std::string text = save_graph(g);
  Graph back = load_graph(text);
  CHECK(back.vertex_count() == g.vertex_count());
  CHECK(back.edges() == g.edges());
  CHECK(back.vertex_name(0) == g.vertex_name(0));
  CHECK(save_graph(back) == text);

  Graph bare(3, {{0, 1}, {1, 2}});
  Graph bare_back = load_graph(save_graph(bare));
  CHECK(!bare_back.has_names());
  CHECK(bare_back.edges() == bare.edges());
}

TEST_CASE("assignment and distribution files round-trip") {
  VertexAssignment a{{3, 1, 2}};
  CHECK(load_assignment(save_assignment(a)) == a);

  Distribution d;
  d.counts = {0, 4, 1};
  CHECK(load_distribution(save_distribution(d)) == d);

  std::vector<Move> cert{{0, 1}, {2, 1}};
  auto back = load_certificate(save_certificate(cert));
  CHECK(back == cert);
  CHECK(load_certificate("[]").empty());
}

TEST_CASE("loaders reject malformed documents") {
  CHECK_THROWS_AS(load_graph("{"), std::invalid_argument);
  CHECK_THROWS_AS(load_graph("[]"), std::invalid_argument);
  CHECK_THROWS_AS(load_graph(R"({"vertex_count": 2})"), std::invalid_argument);
  CHECK_THROWS_AS(load_graph(R"({"vertex_count": 2, "edges": [[0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_graph(R"({"vertex_count": 2, "edges": [[0, 0]]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_graph(R"({"vertex_count": "2", "edges": []})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_assignment(R"({"assignment": [1, null]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_assignment(R"({"counts": [1]})"), std::invalid_argument);
  CHECK_THROWS_AS(load_distribution(R"({"counts": [-1]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_distribution(R"({"counts": [1.5]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(load_certificate(R"([[1]])"), std::invalid_argument);
  CHECK_THROWS_AS(load_certificate(R"([1, 2])"), std::invalid_argument);
}

TEST_CASE("text file helpers name the path in errors") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "pebblekit-io-test";
  fs::create_directories(dir);
  fs::path file = dir / "probe.json";

  write_text_file(file, "{\"counts\": [2]}\n");
  CHECK(read_text_file(file) == "{\"counts\": [2]}\n");

  fs::path missing = dir / "absent.json";
  try {
    read_text_file(missing);
    FAIL("expected a throw");
  } catch (const std::exception& e) {
    CHECK(std::string(e.what()).find("absent.json") != std::string::npos);
  }
  fs::remove_all(dir);
}
