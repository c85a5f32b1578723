#pragma once
// Maximalization: split every non-triangular face of a simple bridgeless
// planar graph into triangles by adding chords.

#include <utility>
#include <vector>

#include "planarcolor/graph.hpp"

namespace planar {

struct TriangulationRecord {
  struct Added {
    EdgeId edge;
    std::vector<EdgeId> faceEdges;  // the face that was split, at the time of the split
  };
  std::vector<Added> added;
};

// Repeatedly pick, inside the first non-triangular face, the boundary corner
// whose two neighbors along the face are distinct and not yet adjacent (ties
// broken by smallest corner vertex id) and add that chord. Fails loudly when
// a face admits no such ear.
inline std::pair<PlanarMultigraph, TriangulationRecord> triangulate(const PlanarMultigraph& g) {
  if (g.vertexCount() < 3) throw Error(Errc::bad_input, "triangulate: need at least 3 vertices");
  if (g.hasParallelEdges())
    throw Error(Errc::bad_input, "triangulate: parallel edges are not accepted");
  if (!g.isBridgeless()) throw Error(Errc::bridge, "triangulate: input has a bridge");
  if (!g.eulerCheck().pass)
    throw Error(Errc::not_spherical, "triangulate: rotation system is not a sphere embedding");

  PlanarMultigraph cur = g;
  TriangulationRecord rec;
  for (;;) {
    auto faces = cur.facesOf();
    const Face* big = nullptr;
    for (const Face& f : faces)
      if (f.boundary.size() > 3) {
        big = &f;
        break;
      }
    if (!big) break;

    int k = static_cast<int>(big->boundary.size());
    int bestPos = -1;
    VertexId bestCorner = kNoVertex;
    for (int i = 0; i < k; ++i) {
      DartId dIn = big->boundary[i];
      DartId dOut = big->boundary[(i + 1) % k];
      VertexId corner = cur.target(dIn);
      VertexId a = cur.origin(dIn);
      VertexId b = cur.target(dOut);
      if (a == b || cur.adjacent(a, b)) continue;
      if (bestPos < 0 || corner < bestCorner) {
        bestPos = i;
        bestCorner = corner;
      }
    }
    if (bestPos < 0)
      throw Error(Errc::bad_input,
                  "triangulate: face admits no chord without duplicating an edge");
    DartId cornerA = big->boundary[(bestPos + k - 1) % k];  // target = neighbor a
    DartId cornerB = big->boundary[(bestPos + 1) % k];      // target = neighbor b
    auto edges = faceEdges(*big);
    auto added = cur.addEdgeInFace(cornerA, cornerB);
    rec.added.push_back({added.newEdge, std::move(edges)});
    cur = std::move(added.graph);
  }

  if (cur.edgeCount() != 3 * cur.vertexCount() - 6)
    throw Error(Errc::bad_input, "triangulate: result is not maximal planar");
  return {std::move(cur), std::move(rec)};
}

}  // namespace planar
