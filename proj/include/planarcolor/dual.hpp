#pragma once
// Dual of a maximal planar graph: a cubic planar graph whose vertices are the
// primal faces, with the edge bijection needed to pull colorings back.

#include <sstream>
#include <string>
#include <vector>

#include "planarcolor/graph.hpp"

namespace planar {

struct DualCorrespondence {
  std::vector<VertexId> faceToVertex;  // primal face id -> dual vertex
  std::vector<int> vertexToFace;       // primal vertex -> dual face id
  std::vector<EdgeId> edgeToEdge;      // primal edge -> dual edge
};

struct DualResult {
  PlanarMultigraph dual;
  DualCorrespondence corr;
};

// Every vertex has degree 3, V is even, and E = 3V/2.
inline bool checkCubic(const PlanarMultigraph& h) {
  if (!h.isCubic()) return false;
  if (h.vertexCount() % 2 != 0) return false;
  return h.edgeCount() * 2 == 3 * h.vertexCount();
}

// Dual construction: dual vertex i = primal face i; the dual edge of a primal
// edge keeps its id and joins the faces on the edge's two sides; the rotation
// at a dual vertex is the boundary order of the corresponding primal face.
inline DualResult dualize(const PlanarMultigraph& g) {
  if (g.vertexCount() < 3) throw Error(Errc::bad_input, "dualize: need at least 3 vertices");
  if (!g.isSimple()) throw Error(Errc::bad_input, "dualize: input must be simple");
  if (!g.eulerCheck().pass)
    throw Error(Errc::not_spherical, "dualize: rotation system is not a sphere embedding");
  auto faces = g.facesOf();
  for (const Face& f : faces)
    if (f.boundary.size() != 3)
      throw Error(Errc::bad_input, "dualize: non-triangular face present");
  auto faceOf = g.faceOfDartMap(faces);

  std::vector<EdgeId> primalToDual(g.edgeCapacity(), kNoEdge);
  std::vector<std::pair<VertexId, VertexId>> dualEdges;
  for (EdgeId e : g.aliveEdgeIds()) {
    int f1 = faceOf[2 * e], f2 = faceOf[2 * e + 1];
    if (f1 == f2) throw Error(Errc::bridge, "dualize: edge has the same face on both sides");
    primalToDual[e] = static_cast<EdgeId>(dualEdges.size());
    dualEdges.emplace_back(f1, f2);
  }
  std::vector<std::vector<EdgeId>> rotations(faces.size());
  for (const Face& f : faces)
    for (DartId d : f.boundary)
      rotations[f.id].push_back(primalToDual[PlanarMultigraph::edgeOf(d)]);

  DualResult out{PlanarMultigraph::fromRotations(static_cast<int>(faces.size()), dualEdges,
                                                 rotations),
                 {}};
  if (!checkCubic(out.dual)) throw Error(Errc::not_cubic, "dualize: dual is not cubic");
  if (!out.dual.eulerCheck().pass)
    throw Error(Errc::not_spherical, "dualize: dual embedding is not spherical");
  if (!out.dual.isBridgeless()) throw Error(Errc::bridge, "dualize: dual has a bridge");

  out.corr.faceToVertex.resize(faces.size());
  for (const Face& f : faces) out.corr.faceToVertex[f.id] = f.id;
  out.corr.edgeToEdge = primalToDual;

  // The dual's faces are the primal vertex stars: every boundary dart of a
  // dual face has the same primal origin. Dual dart 2*primalToDual[e] + s
  // corresponds to primal dart 2e + s.
  std::vector<EdgeId> dualToPrimal(dualEdges.size(), kNoEdge);
  for (EdgeId e : g.aliveEdgeIds()) dualToPrimal[primalToDual[e]] = e;
  auto primalDartOf = [&](DartId dd) {
    return 2 * dualToPrimal[PlanarMultigraph::edgeOf(dd)] + (dd & 1);
  };
  auto dualFaces = out.dual.facesOf();
  out.corr.vertexToFace.assign(g.vertexCapacity(), -1);
  for (const Face& df : dualFaces) {
    VertexId v = g.origin(primalDartOf(df.boundary.front()));
    for (DartId d : df.boundary)
      if (g.origin(primalDartOf(d)) != v)
        throw Error(Errc::bad_input, "dualize: dual face does not match a primal vertex star");
    out.corr.vertexToFace[v] = df.id;
  }
  for (VertexId v : g.aliveVertexIds())
    if (out.corr.vertexToFace[v] < 0)
      throw Error(Errc::bad_input, "dualize: primal vertex missing from dual faces");
  return out;
}

// Aligned text table of the face (elementary cycle) matrix of g: one row per
// face, one column per edge.
inline std::string formatCycleMatrix(const PlanarMultigraph& g) {
  auto faces = g.facesOf();
  auto edges = g.aliveEdgeIds();
  std::ostringstream os;
  os << "      ";
  for (EdgeId e : edges) os << " u" << e + 1;
  os << '\n';
  for (const Face& f : faces) {
    os << "c" << f.id << (f.id < 10 ? "    " : "   ");
    std::vector<char> in(g.edgeCapacity(), 0);
    for (DartId d : f.boundary) in[PlanarMultigraph::edgeOf(d)] = 1;
    for (EdgeId e : edges) {
      std::string name = "u" + std::to_string(e + 1);
      os << std::string(name.size(), ' ') << (in[e] ? '1' : '.');
    }
    os << '\n';
  }
  return os.str();
}

// Aligned text table of the vertex-edge incidence matrix of h.
inline std::string formatIncidenceMatrix(const PlanarMultigraph& h) {
  auto edges = h.aliveEdgeIds();
  std::ostringstream os;
  os << "      ";
  for (EdgeId e : edges) os << " u" << e + 1;
  os << '\n';
  for (VertexId v : h.aliveVertexIds()) {
    os << "x" << v << (v < 10 ? "    " : "   ");
    for (EdgeId e : edges) {
      auto [a, b] = h.endpoints(e);
      std::string name = "u" + std::to_string(e + 1);
      os << std::string(name.size(), ' ') << ((a == v || b == v) ? '1' : '.');
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace planar
