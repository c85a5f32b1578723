#pragma once
// Independent brute-force ground truth, used to validate the constructive
// machinery at desk scale: exhaustive 3-edge-coloring, exhaustive <=4 vertex
// coloring, and exhaustive bicolored-cycle enumeration.

#include <optional>
#include <vector>

#include "planarcolor/klein.hpp"

namespace planar {

// Backtracking over edges in id order, trying R < B < G at each, pruning on
// the colors already present at either endpoint. Returns the
// lexicographically first proper coloring, or nothing.
inline std::optional<EdgeColoring> bruteForceEdge3Color(const PlanarMultigraph& h,
                                                        int limitEdges = 40) {
  if (h.edgeCount() > limitEdges)
    throw Error(Errc::size_limit, "bruteForceEdge3Color: graph exceeds the size cap");
  if (!h.isCubic()) throw Error(Errc::not_cubic, "bruteForceEdge3Color: graph is not cubic");
  auto edges = h.aliveEdgeIds();
  EdgeColoring col(h);
  std::vector<unsigned> vertexMask(h.vertexCapacity(), 0);

  std::vector<size_t> stack;
  size_t i = 0;
  std::vector<int> choice(edges.size(), -1);
  while (true) {
    if (i == edges.size()) return col;
    EdgeId e = edges[i];
    auto [a, b] = h.endpoints(e);
    bool advanced = false;
    for (int c = choice[i] + 1; c < 3; ++c) {
      unsigned bit = 1u << static_cast<unsigned>(kChromatic[c]);
      if ((vertexMask[a] | vertexMask[b]) & bit) continue;
      choice[i] = c;
      col.set(e, kChromatic[c]);
      vertexMask[a] |= bit;
      vertexMask[b] |= bit;
      ++i;
      advanced = true;
      break;
    }
    if (advanced) continue;
    choice[i] = -1;
    if (i == 0) return std::nullopt;
    --i;
    EdgeId pe = edges[i];
    auto [pa, pb] = h.endpoints(pe);
    unsigned bit = 1u << static_cast<unsigned>(kChromatic[choice[i]]);
    vertexMask[pa] &= ~bit;
    vertexMask[pb] &= ~bit;
    col.set(pe, KleinColor::W);
  }
}

// Backtracking over vertices in id order with labels 0..3; deterministic
// first solution or nothing. The graph must be simple.
inline std::optional<VertexColoring> bruteForceVertex4Color(const PlanarMultigraph& g,
                                                            int limitVertices = 20) {
  if (g.vertexCount() > limitVertices)
    throw Error(Errc::size_limit, "bruteForceVertex4Color: graph exceeds the size cap");
  if (!g.isSimple()) throw Error(Errc::bad_input, "bruteForceVertex4Color: graph must be simple");
  auto verts = g.aliveVertexIds();
  std::vector<int> label(g.vertexCapacity(), -1);
  std::vector<int> pos(g.vertexCapacity(), -1);
  for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = static_cast<int>(i);

  size_t i = 0;
  std::vector<int> choice(verts.size(), -1);
  while (true) {
    if (i == verts.size()) {
      VertexColoring vc(g);
      for (VertexId v : verts) vc.set(v, label[v]);
      return vc;
    }
    VertexId v = verts[i];
    bool advanced = false;
    for (int c = choice[i] + 1; c < 4; ++c) {
      bool clash = false;
      for (DartId d : g.dartsAt(v)) {
        VertexId w = g.target(d);
        if (label[w] == c) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      choice[i] = c;
      label[v] = c;
      ++i;
      advanced = true;
      break;
    }
    if (advanced) continue;
    choice[i] = -1;
    label[v] = -1;
    if (i == 0) return std::nullopt;
    --i;
    label[verts[i]] = -1;
  }
}

// Every bicolored simple cycle of the coloring, found per unordered color
// pair by decomposing the two-color subgraph into connected components. Must
// equal the union of the disc listings over the three 2-factors.
inline std::vector<Disc> enumerateDiscsBrute(const PlanarMultigraph& h, const EdgeColoring& col) {
  requireProper(h, col, "enumerateDiscsBrute");
  std::vector<Disc> out;
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      KleinColor a = kChromatic[i], b = kChromatic[j];
      KleinColor klass = thirdColor(a, b);
      // component sweep over the {a,b}-subgraph
      std::vector<char> seenVertex(h.vertexCapacity(), 0);
      for (VertexId v0 : h.aliveVertexIds()) {
        if (seenVertex[v0]) continue;
        // gather the component of v0 in the subgraph
        std::vector<VertexId> comp{v0};
        seenVertex[v0] = 1;
        std::vector<EdgeId> compEdges;
        std::vector<char> edgeSeen(h.edgeCapacity(), 0);
        for (size_t k = 0; k < comp.size(); ++k) {
          for (DartId d : h.dartsAt(comp[k])) {
            EdgeId e = PlanarMultigraph::edgeOf(d);
            KleinColor c = col.color(e);
            if (c != a && c != b) continue;
            if (!edgeSeen[e]) {
              edgeSeen[e] = 1;
              compEdges.push_back(e);
            }
            VertexId w = h.target(d);
            if (!seenVertex[w]) {
              seenVertex[w] = 1;
              comp.push_back(w);
            }
          }
        }
        if (compEdges.empty()) continue;
        // in a proper coloring the component is a simple cycle
        if (compEdges.size() != comp.size())
          throw Error(Errc::bad_input, "enumerateDiscsBrute: component is not a cycle");
        std::vector<char> in(h.edgeCapacity(), 0);
        for (EdgeId e : compEdges) in[e] = 1;
        auto cycs = detail::traceCycles(h, in, klass);
        for (Disc& d : cycs) out.push_back(std::move(d));
      }
    }
  }
  return out;
}

}  // namespace planar
