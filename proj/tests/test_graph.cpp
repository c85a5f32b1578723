#include <catch2/catch_amalgamated.hpp>

#include "planarcolor/graph.hpp"
#include "test_support.hpp"

using namespace planar;
using namespace testsupport;

namespace {

PlanarMultigraph triangleGraph() {
  return PlanarMultigraph::fromRotations(3, {{0, 1}, {1, 2}, {2, 0}},
                                         {{0, 2}, {1, 0}, {2, 1}});
}

std::multiset<size_t> faceSizes(const PlanarMultigraph& g) {
  std::multiset<size_t> out;
  for (const Face& f : g.facesOf()) out.insert(f.boundary.size());
  return out;
}

std::multiset<int> degreeSequence(const PlanarMultigraph& g) {
  std::multiset<int> out;
  for (VertexId v : g.aliveVertexIds()) out.insert(g.degree(v));
  return out;
}

}  // namespace

TEST_CASE("theta graph faces and Euler formula") {
  auto doc = loadFixture("theta.rsg");
  const auto& g = doc.graph;
  auto faces = g.facesOf();
  REQUIRE(faces.size() == 3);
  for (const Face& f : faces) REQUIRE(f.boundary.size() == 2);
  EulerReport r = g.eulerCheck();
  REQUIRE(r.pass);
  REQUIRE(r.vertices == 2);
  REQUIRE(r.edges == 3);
  REQUIRE(r.faces == 3);
}

TEST_CASE("prism fixture faces match the seven listed cycles") {
  auto doc = loadFixture("prism.rsg");
  auto faces = doc.graph.facesOf();
  REQUIRE(faces.size() == 7);
  for (const auto& [name, cycle] : prismCycles()) {
    INFO(name);
    REQUIRE(faceByUnums(doc, faces, cycle) >= 0);
  }
  EulerReport r = doc.graph.eulerCheck();
  REQUIRE(r.pass);
  REQUIRE(r.vertices == 10);
  REQUIRE(r.edges == 15);
  REQUIRE(r.faces == 7);
}

TEST_CASE("single triangle has two triangular faces") {
  auto g = triangleGraph();
  auto faces = g.facesOf();
  REQUIRE(faces.size() == 2);
  for (const Face& f : faces) REQUIRE(f.boundary.size() == 3);
  REQUIRE(g.eulerCheck().pass);
}

TEST_CASE("K4 passes the Euler check as the tetrahedron") {
  auto doc = loadFixture("k4.rsg");
  EulerReport r = doc.graph.eulerCheck();
  REQUIRE(r.pass);
  REQUIRE(r.vertices == 4);
  REQUIRE(r.edges == 6);
  REQUIRE(r.faces == 4);
}

TEST_CASE("Petersen admits no sphere embedding: the shipped rotation fails Euler") {
  auto doc = loadFixture("petersen.rsg", false, /*enforceEuler=*/false);
  EulerReport r = doc.graph.eulerCheck();
  REQUIRE_FALSE(r.pass);
  REQUIRE(r.genusDefect > 0);
}

TEST_CASE("bridge detection") {
  auto theta = loadFixture("theta.rsg").graph;
  REQUIRE(theta.isBridgeless());

  // two triangles joined by one edge: the joining edge is a bridge
  auto barbell = PlanarMultigraph::fromRotations(
      6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}},
      {{0, 2}, {1, 0}, {2, 3, 1}, {3, 6, 4}, {5, 4}, {6, 5}});
  REQUIRE_FALSE(barbell.isBridgeless());
  REQUIRE(barbell.bridges() == std::vector<EdgeId>{3});

  // prism: removing any single edge keeps the graph connected (independent check)
  auto prism = loadFixture("prism.rsg").graph;
  for (EdgeId e : prism.aliveEdgeIds()) {
    auto cut = prism.removeEdge(e);
    REQUIRE(cut.isConnected());
  }
  REQUIRE(prism.isBridgeless());
}

TEST_CASE("subdivideEdge bookkeeping") {
  auto theta = loadFixture("theta.rsg").graph;
  auto s = theta.subdivideEdge(0);
  REQUIRE(s.graph.vertexCount() == 3);
  REQUIRE(s.graph.edgeCount() == 4);
  REQUIRE(s.graph.eulerCheck().pass);
  REQUIRE(s.graph.degree(s.newVertex) == 2);

  auto prismDoc = loadFixture("prism.rsg");
  auto p = prismDoc.graph.subdivideEdge(prismDoc.edge(11));
  EulerReport r = p.graph.eulerCheck();
  REQUIRE(r.pass);
  REQUIRE(r.vertices == 11);
  REQUIRE(r.edges == 16);
  REQUIRE(r.faces == 7);
}

TEST_CASE("subdivide then smooth is the identity up to edge renaming") {
  auto check = [](const PlanarMultigraph& g) {
    auto sizesBefore = faceSizes(g);
    auto degBefore = degreeSequence(g);
    for (EdgeId e : g.aliveEdgeIds()) {
      auto s = g.subdivideEdge(e);
      auto m = s.graph.smoothVertex(s.newVertex);
      REQUIRE(m.graph.vertexCount() == g.vertexCount());
      REQUIRE(m.graph.edgeCount() == g.edgeCount());
      REQUIRE(faceSizes(m.graph) == sizesBefore);
      REQUIRE(degreeSequence(m.graph) == degBefore);
      REQUIRE(m.graph.eulerCheck().pass == g.eulerCheck().pass);
    }
  };
  check(loadFixture("theta.rsg").graph);
  check(loadFixture("k4.rsg").graph);
  for (std::uint64_t seed : {11u, 22u, 33u}) check(randomTriangulation(8, seed));
}

TEST_CASE("smoothVertex error cases") {
  auto k4 = loadFixture("k4.rsg").graph;
  REQUIRE_THROWS_AS(k4.smoothVertex(0), Error);  // degree 3

  // a degree-2 vertex whose two edges are parallel copies is rejected
  auto g = PlanarMultigraph::fromRotations(3, {{0, 1}, {0, 1}, {1, 2}},
                                           {{0, 1}, {0, 2, 1}, {2}});
  REQUIRE_THROWS_AS(g.smoothVertex(0), Error);

  // a plain degree-2 vertex on a path smooths fine
  auto path = PlanarMultigraph::fromRotations(3, {{0, 1}, {1, 2}}, {{0}, {0, 1}, {1}});
  auto m = path.smoothVertex(1);
  REQUIRE(m.graph.edgeCount() == 1);
  auto [a, b] = m.graph.endpoints(m.mergedEdge);
  REQUIRE(((a == 0 && b == 2) || (a == 2 && b == 0)));
}

TEST_CASE("addEdgeInFace splits a face") {
  auto cubeDoc = loadFixture("cube.rsg");
  const auto& g = cubeDoc.graph;
  auto faces = g.facesOf();
  const Face& quad = faces.front();
  REQUIRE(quad.boundary.size() == 4);
  // diagonal between two opposite corners of the quad
  auto added = g.addEdgeInFace(quad.boundary[0], quad.boundary[2]);
  EulerReport r = added.graph.eulerCheck();
  REQUIRE(r.pass);
  REQUIRE(r.edges == g.edgeCount() + 1);
  REQUIRE(r.faces == 7);
  auto sizes = faceSizes(added.graph);
  REQUIRE(sizes.count(3) == 2);
}

TEST_CASE("addEdgeInFace supports parallel edges but rejects loops") {
  auto theta = loadFixture("theta.rsg").graph;
  auto faces = theta.facesOf();
  const Face& f = faces.front();
  // the two corners of a 2-gon face sit at the two distinct vertices, so the
  // new edge is a parallel copy, which the multigraph policy allows
  auto added = theta.addEdgeInFace(f.boundary[0], f.boundary[1]);
  EulerReport r = added.graph.eulerCheck();
  REQUIRE(r.pass);
  REQUIRE(r.vertices == 2);
  REQUIRE(r.edges == 4);
  REQUIRE(r.faces == 4);

  // corners with the same target would create a loop
  auto cube = loadFixture("cube.rsg").graph;
  auto cfaces = cube.facesOf();
  const Face& quad = cfaces.front();
  REQUIRE_THROWS_AS(cube.addEdgeInFace(quad.boundary[0], quad.boundary[0]), Error);
}

TEST_CASE("addEdgeInFace by vertex pair") {
  auto cubeDoc = loadFixture("cube.rsg");
  const auto& g = cubeDoc.graph;
  auto faces = g.facesOf();
  const Face& quad = faces.front();
  VertexId a = g.target(quad.boundary[0]);
  VertexId c = g.target(quad.boundary[2]);
  auto added = g.addEdgeInFace(a, c, quad);
  REQUIRE(added.graph.eulerCheck().pass);
  auto [x, y] = added.graph.endpoints(added.newEdge);
  REQUIRE(((x == a && y == c) || (x == c && y == a)));

  VertexId notOnFace = kNoVertex;
  for (VertexId v : g.aliveVertexIds()) {
    bool onFace = false;
    for (DartId d : quad.boundary) onFace = onFace || g.target(d) == v;
    if (!onFace) {
      notOnFace = v;
      break;
    }
  }
  REQUIRE(notOnFace != kNoVertex);
  REQUIRE_THROWS_AS(g.addEdgeInFace(a, notOnFace, quad), Error);
}

TEST_CASE("faces partition the darts and satisfy Euler on random graphs") {
  for (std::uint64_t seed : {5u, 6u, 7u, 8u}) {
    auto g = randomTriangulation(4 + static_cast<int>(seed % 9), seed * 977);
    auto faces = g.facesOf();
    std::vector<char> seen(g.dartCapacity(), 0);
    size_t total = 0;
    for (const Face& f : faces)
      for (DartId d : f.boundary) {
        REQUIRE_FALSE(seen[d]);
        seen[d] = 1;
        ++total;
      }
    REQUIRE(total == 2 * static_cast<size_t>(g.edgeCount()));
    REQUIRE(static_cast<int>(faces.size()) == 2 - g.vertexCount() + g.edgeCount());
  }
}

TEST_CASE("loops are rejected at construction") {
  REQUIRE_THROWS_AS(PlanarMultigraph::fromRotations(2, {{0, 0}, {0, 1}}, {{0, 0, 1}, {1}}),
                    Error);
}
