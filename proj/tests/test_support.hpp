#pragma once
// Shared fixtures and helpers for the test suites.

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "planarcolor/edge_set.hpp"
#include "planarcolor/graph.hpp"
#include "planarcolor/io.hpp"
#include "planarcolor/klein.hpp"

namespace testsupport {

using namespace planar;

inline std::string fixturePath(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

inline GraphDocument loadFixture(const std::string& name, bool noEmbed = false,
                                 bool enforceEuler = true) {
  return loadGraphFile(fixturePath(name), noEmbed, enforceEuler);
}

// Edge set from external u-numbers of a document.
inline EdgeSet uset(const GraphDocument& doc, const std::vector<long long>& unums) {
  EdgeSet s(doc.graph);
  for (long long u : unums) s.insert(doc.edge(u));
  return s;
}

inline std::vector<long long> unums(const GraphDocument& doc, const EdgeSet& s) {
  std::vector<long long> out;
  for (EdgeId e : s.ids()) out.push_back(doc.edgeName[e]);
  std::sort(out.begin(), out.end());
  return out;
}

// The seven cycles of the prism fixture, by external edge numbers.
inline const std::vector<std::pair<std::string, std::vector<long long>>>& prismCycles() {
  static const std::vector<std::pair<std::string, std::vector<long long>>> cycles = {
      {"c1", {1, 2, 5, 11}},          {"c2", {4, 5, 7, 13}},  {"c3", {6, 7, 9, 14}},
      {"c4", {8, 9, 10, 15}},         {"c5", {2, 3, 10, 12}}, {"c6", {11, 12, 13, 14, 15}},
      {"c0", {1, 3, 4, 6, 8}},
  };
  return cycles;
}

// The fixture coloring of the prism: one-factors by external edge numbers.
inline const std::vector<long long>& prismRf() {
  static const std::vector<long long> v = {2, 5, 7, 8, 15};
  return v;
}
inline const std::vector<long long>& prismBf() {
  static const std::vector<long long> v = {3, 4, 9, 12, 13};
  return v;
}
inline const std::vector<long long>& prismGf() {
  static const std::vector<long long> v = {1, 6, 10, 11, 14};
  return v;
}

inline EdgeColoring prismPaperColoring(const GraphDocument& prism) {
  ColoringDocument cdoc = loadColoringFile(fixturePath("prism-paper.col"));
  return edgeColoringFromDocument(prism, cdoc);
}

// Find the face of a document graph matching a u-number cycle.
inline int faceByUnums(const GraphDocument& doc, const std::vector<Face>& faces,
                       const std::vector<long long>& cycle) {
  EdgeSet want = uset(doc, cycle);
  for (const Face& f : faces)
    if (faceEdgeSet(doc.graph, f) == want) return f.id;
  return -1;
}

// Random maximal planar graph: grow a triangulation by repeatedly inserting a
// vertex inside a random face and joining it to the face's three corners.
// Always simple, connected, bridgeless, with every vertex of degree >= 3.
inline PlanarMultigraph randomTriangulation(int nVertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PlanarMultigraph g = PlanarMultigraph::fromRotations(
      3, {{0, 1}, {1, 2}, {2, 0}}, {{0, 2}, {1, 0}, {2, 1}});
  while (g.vertexCount() < nVertices) {
    auto faces = g.facesOf();
    const Face& f = faces[rng() % faces.size()];
    // takes the three corner darts of a triangular face
    DartId d0 = f.boundary[0], d1 = f.boundary[1], d2 = f.boundary[2];
    auto s = g.addEdgeInFace(d0, d1);  // chord? no: new edge between two corners
    // replace: subdivide the fresh chord to create the interior vertex, then
    // connect it to the remaining corner
    auto sub = s.graph.subdivideEdge(s.newEdge);
    // the new vertex w sits on the boundary of both faces created by the chord;
    // connect w to the third corner inside the face that contains it
    auto faces2 = sub.graph.facesOf();
    VertexId w = sub.newVertex;
    VertexId c = sub.graph.target(d2);
    for (const Face& f2 : faces2) {
      DartId cw = kNoDart, cc = kNoDart;
      for (DartId d : f2.boundary) {
        if (sub.graph.target(d) == w) cw = d;
        if (sub.graph.target(d) == c && d != cw) cc = d;
      }
      if (cw != kNoDart && cc != kNoDart) {
        g = sub.graph.addEdgeInFace(cw, cc).graph;
        break;
      }
    }
  }
  return g;
}

// Random simple bridgeless planar graph: a triangulation with some removable
// edges deleted (kept bridgeless and with minimum degree >= 2).
inline PlanarMultigraph randomPlanarGraph(int nVertices, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  PlanarMultigraph g = randomTriangulation(nVertices, rng());
  int attempts = static_cast<int>(g.aliveEdgeIds().size()) / 3;
  for (int i = 0; i < attempts; ++i) {
    auto edges = g.aliveEdgeIds();
    EdgeId e = edges[rng() % edges.size()];
    auto [a, b] = g.endpoints(e);
    if (g.degree(a) <= 3 || g.degree(b) <= 3) continue;
    PlanarMultigraph candidate = g.removeEdge(e);
    if (candidate.isBridgeless()) g = std::move(candidate);
  }
  return g;
}

}  // namespace testsupport
