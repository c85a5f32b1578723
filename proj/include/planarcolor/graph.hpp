#pragma once
// Connected planar multigraphs represented by rotation systems (combinatorial
// embeddings on the sphere). Faces are derived from the rotation system, never
// stored. Graph values are immutable: every surgery returns a new value.
//
// Dart layout: edge e owns darts 2e and 2e+1 (its two orientations); the twin
// of dart d is d^1. Loops are rejected everywhere; parallel edges are allowed.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planar {

using VertexId = int;
using EdgeId = int;
using DartId = int;

inline constexpr VertexId kNoVertex = -1;
inline constexpr EdgeId kNoEdge = -1;
inline constexpr DartId kNoDart = -1;

enum class Errc {
  bad_input,      // malformed data or violated precondition
  not_spherical,  // rotation system is not a sphere embedding
  bridge,         // bridge present where 2-edge-connectivity is required
  not_cubic,
  no_coloring,    // exhaustive search found none, or budget and oracle both failed
  size_limit,
  host_mismatch,  // edge sets or colorings bound to different host graphs
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// One orbit of the face-traversal permutation d -> next(twin(d)).
struct Face {
  int id = -1;
  std::vector<DartId> boundary;  // darts in traversal order
};

struct EulerReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int genusDefect = 0;  // 0 exactly when V - E + F = 2
  bool pass = false;
};

struct SubdivideResult;
struct SmoothResult;
struct AddEdgeResult;

class PlanarMultigraph {
 public:
  PlanarMultigraph() : stamp_(nextStamp()) {}

  // Build from explicit clockwise rotations. `clockwiseEdges[v]` lists the
  // edge ids incident to v in clockwise order. Parallel edges are fine; an
  // edge with both endpoints equal (a loop) is rejected.
  static PlanarMultigraph fromRotations(int vertexCount,
                                        const std::vector<std::pair<VertexId, VertexId>>& edges,
                                        const std::vector<std::vector<EdgeId>>& clockwiseEdges) {
    PlanarMultigraph g = skeleton(vertexCount, edges);
    if (static_cast<int>(clockwiseEdges.size()) != vertexCount)
      throw Error(Errc::bad_input, "rotation list count does not match vertex count");
    std::vector<int> seen(edges.size(), 0);
    for (VertexId v = 0; v < vertexCount; ++v) {
      std::vector<DartId> ring;
      for (EdgeId e : clockwiseEdges[v]) {
        if (e < 0 || e >= static_cast<int>(edges.size()))
          throw Error(Errc::bad_input, "rotation references unknown edge " + std::to_string(e));
        auto [a, b] = edges[e];
        DartId d;
        if (a == v && seen[e] == 0) {
          d = 2 * e;
        } else if (b == v && (a != v || seen[e] == 1)) {
          d = 2 * e + 1;
        } else {
          throw Error(Errc::bad_input, "edge " + std::to_string(e) + " not incident to vertex " +
                                           std::to_string(v) + " (or listed too often)");
        }
        ++seen[e];
        ring.push_back(d);
      }
      if (ring.empty()) throw Error(Errc::bad_input, "isolated vertex " + std::to_string(v));
      g.installRing(v, ring);
    }
    for (EdgeId e = 0; e < static_cast<int>(edges.size()); ++e)
      if (seen[e] != 2)
        throw Error(Errc::bad_input,
                    "edge " + std::to_string(e) + " must appear exactly twice across rotations");
    g.validate();
    return g;
  }

  // Build with an arbitrary rotation system (incident edges in id order).
  // Used for graphs that carry no embedding; the Euler check will normally fail.
  static PlanarMultigraph fromEdgeList(int vertexCount,
                                       const std::vector<std::pair<VertexId, VertexId>>& edges) {
    PlanarMultigraph g = skeleton(vertexCount, edges);
    std::vector<std::vector<DartId>> rings(vertexCount);
    for (EdgeId e = 0; e < static_cast<int>(edges.size()); ++e) {
      rings[edges[e].first].push_back(2 * e);
      rings[edges[e].second].push_back(2 * e + 1);
    }
    for (VertexId v = 0; v < vertexCount; ++v) {
      if (rings[v].empty()) throw Error(Errc::bad_input, "isolated vertex " + std::to_string(v));
      g.installRing(v, rings[v]);
    }
    g.validate();
    return g;
  }

  // --- basic accessors -------------------------------------------------

  int vertexCount() const { return aliveVertices_; }
  int edgeCount() const { return aliveEdges_; }
  int vertexCapacity() const { return static_cast<int>(vertexDart_.size()); }
  int edgeCapacity() const { return static_cast<int>(edgeAlive_.size()); }
  int dartCapacity() const { return 2 * edgeCapacity(); }
  std::uint64_t stamp() const { return stamp_; }

  bool vertexAlive(VertexId v) const {
    return v >= 0 && v < vertexCapacity() && vertexAlive_[v];
  }
  bool edgeAlive(EdgeId e) const { return e >= 0 && e < edgeCapacity() && edgeAlive_[e]; }
  bool dartAlive(DartId d) const { return d >= 0 && edgeAlive(d >> 1); }

  static constexpr DartId twin(DartId d) { return d ^ 1; }
  static constexpr EdgeId edgeOf(DartId d) { return d >> 1; }
  static constexpr DartId dart(EdgeId e, int side) { return 2 * e + side; }

  VertexId origin(DartId d) const { return dartOrigin_[d]; }
  VertexId target(DartId d) const { return dartOrigin_[twin(d)]; }
  DartId next(DartId d) const { return next_[d]; }
  DartId prev(DartId d) const { return prev_[d]; }
  DartId nextFaceDart(DartId d) const { return next_[twin(d)]; }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const {
    return {dartOrigin_[2 * e], dartOrigin_[2 * e + 1]};
  }

  DartId anyDartAt(VertexId v) const { return vertexDart_[v]; }

  std::vector<DartId> dartsAt(VertexId v) const {
    std::vector<DartId> out;
    DartId d0 = vertexDart_[v];
    if (d0 == kNoDart) return out;
    DartId d = d0;
    do {
      out.push_back(d);
      d = next_[d];
    } while (d != d0);
    return out;
  }

  int degree(VertexId v) const { return static_cast<int>(dartsAt(v).size()); }

  std::vector<EdgeId> aliveEdgeIds() const {
    std::vector<EdgeId> out;
    out.reserve(aliveEdges_);
    for (EdgeId e = 0; e < edgeCapacity(); ++e)
      if (edgeAlive_[e]) out.push_back(e);
    return out;
  }

  std::vector<VertexId> aliveVertexIds() const {
    std::vector<VertexId> out;
    out.reserve(aliveVertices_);
    for (VertexId v = 0; v < vertexCapacity(); ++v)
      if (vertexAlive_[v]) out.push_back(v);
    return out;
  }

  bool adjacent(VertexId a, VertexId b) const {
    for (DartId d : dartsAt(a))
      if (target(d) == b) return true;
    return false;
  }

  bool hasParallelEdges() const {
    std::vector<std::pair<VertexId, VertexId>> seen;
    for (EdgeId e : aliveEdgeIds()) {
      auto [a, b] = endpoints(e);
      if (a > b) std::swap(a, b);
      seen.emplace_back(a, b);
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) != seen.end();
  }

  bool isSimple() const { return !hasParallelEdges(); }  // loops are impossible by construction

  bool isCubic() const {
    for (VertexId v : aliveVertexIds())
      if (degree(v) != 3) return false;
    return true;
  }

  // --- derived structure ------------------------------------------------

  // All orbits of d -> next(twin(d)), ordered by smallest dart id.
  std::vector<Face> facesOf() const {
    std::vector<Face> faces;
    std::vector<char> seen(dartCapacity(), 0);
    for (DartId d0 = 0; d0 < dartCapacity(); ++d0) {
      if (!dartAlive(d0) || seen[d0]) continue;
      Face f;
      f.id = static_cast<int>(faces.size());
      DartId d = d0;
      do {
        seen[d] = 1;
        f.boundary.push_back(d);
        d = nextFaceDart(d);
      } while (d != d0);
      faces.push_back(std::move(f));
    }
    return faces;
  }

  // faceOfDart[d] = id of the face whose boundary contains dart d.
  std::vector<int> faceOfDartMap(const std::vector<Face>& faces) const {
    std::vector<int> map(dartCapacity(), -1);
    for (const Face& f : faces)
      for (DartId d : f.boundary) map[d] = f.id;
    return map;
  }

  EulerReport eulerCheck() const {
    EulerReport r;
    r.vertices = aliveVertices_;
    r.edges = aliveEdges_;
    r.faces = static_cast<int>(facesOf().size());
    int chi = r.vertices - r.edges + r.faces;
    r.genusDefect = (2 - chi) / 2;
    r.pass = (chi == 2) && isConnected();
    return r;
  }

  bool isConnected() const {
    if (aliveVertices_ == 0) return false;
    VertexId start = kNoVertex;
    for (VertexId v = 0; v < vertexCapacity(); ++v)
      if (vertexAlive_[v]) {
        start = v;
        break;
      }
    std::vector<char> seen(vertexCapacity(), 0);
    std::vector<VertexId> stack{start};
    seen[start] = 1;
    int count = 0;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      ++count;
      for (DartId d : dartsAt(v)) {
        VertexId w = target(d);
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
      }
    }
    return count == aliveVertices_;
  }

  std::vector<EdgeId> bridges() const {
    std::vector<EdgeId> out;
    std::vector<int> disc(vertexCapacity(), -1), low(vertexCapacity(), 0);
    int timer = 0;
    std::function<void(VertexId, DartId)> dfs = [&](VertexId v, DartId arrival) {
      disc[v] = low[v] = timer++;
      for (DartId d : dartsAt(v)) {
        if (d == arrival) continue;  // skip the exact dart we arrived on
        VertexId w = target(d);
        if (disc[w] < 0) {
          dfs(w, twin(d));
          low[v] = std::min(low[v], low[w]);
          if (low[w] > disc[v]) out.push_back(edgeOf(d));
        } else {
          low[v] = std::min(low[v], disc[w]);
        }
      }
    };
    for (VertexId v = 0; v < vertexCapacity(); ++v)
      if (vertexAlive_[v] && disc[v] < 0) dfs(v, kNoDart);
    std::sort(out.begin(), out.end());
    return out;
  }

  bool isBridgeless() const { return isConnected() && bridges().empty(); }

  // --- surgeries (pure: return new values; see the result structs below) ---

  // Replace edge e = (u, v) by a path u - w - v through a fresh vertex w.
  // All other ids are stable; planarity is preserved.
  SubdivideResult subdivideEdge(EdgeId e) const;

  // Merge the two distinct edges at a degree-2 vertex into one edge.
  // Rejected when the two edges are parallel copies (the merge would be a loop).
  SmoothResult smoothVertex(VertexId v) const;

  // Add an edge inside a face. Corners are named by darts on the face walk:
  // the new edge runs from target(cornerA) to target(cornerB) and is spliced
  // into the walk right after each corner dart. Loops are rejected.
  AddEdgeResult addEdgeInFace(DartId cornerA, DartId cornerB) const;

  // Convenience form: corners found by vertex on the given face (first visit).
  AddEdgeResult addEdgeInFace(VertexId v1, VertexId v2, const Face& face) const;

  // Delete a non-bridge edge (its two sides are distinct faces, which merge).
  PlanarMultigraph removeEdge(EdgeId e) const {
    requireEdge(e, "removeEdge");
    PlanarMultigraph g = *this;
    g.freshStamp();
    g.removeDartFromRing(2 * e);
    g.removeDartFromRing(2 * e + 1);
    g.killEdge(e);
    g.validate();
    return g;
  }

  // --- invariants ---------------------------------------------------------

  // Structural check: rings are consistent permutations partitioning the alive
  // darts, origins match, no loops, graph connected.
  void validate() const {
    int dartsSeen = 0;
    std::vector<char> seen(dartCapacity(), 0);
    for (VertexId v = 0; v < vertexCapacity(); ++v) {
      if (!vertexAlive_[v]) continue;
      DartId d0 = vertexDart_[v];
      if (d0 == kNoDart) throw Error(Errc::bad_input, "alive vertex without darts");
      DartId d = d0;
      int steps = 0;
      do {
        if (!dartAlive(d)) throw Error(Errc::bad_input, "dead dart in ring");
        if (seen[d]) throw Error(Errc::bad_input, "dart in two rings");
        seen[d] = 1;
        if (dartOrigin_[d] != v) throw Error(Errc::bad_input, "dart origin mismatch");
        if (dartOrigin_[twin(d)] == v) throw Error(Errc::bad_input, "loop edge");
        if (prev_[next_[d]] != d || next_[prev_[d]] != d)
          throw Error(Errc::bad_input, "ring links broken");
        d = next_[d];
        if (++steps > dartCapacity()) throw Error(Errc::bad_input, "ring does not close");
      } while (d != d0);
      dartsSeen += steps;
    }
    if (dartsSeen != 2 * aliveEdges_)
      throw Error(Errc::bad_input, "rings do not partition the darts");
    if (!isConnected()) throw Error(Errc::bad_input, "graph is not connected");
  }

 private:
  static PlanarMultigraph skeleton(int vertexCount,
                                   const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (vertexCount <= 0) throw Error(Errc::bad_input, "vertex count must be positive");
    PlanarMultigraph g;
    g.vertexAlive_.assign(vertexCount, 1);
    g.vertexDart_.assign(vertexCount, kNoDart);
    g.aliveVertices_ = vertexCount;
    int m = static_cast<int>(edges.size());
    g.edgeAlive_.assign(m, 1);
    g.aliveEdges_ = m;
    g.dartOrigin_.assign(2 * m, kNoVertex);
    g.next_.assign(2 * m, kNoDart);
    g.prev_.assign(2 * m, kNoDart);
    for (EdgeId e = 0; e < m; ++e) {
      auto [a, b] = edges[e];
      if (a < 0 || a >= vertexCount || b < 0 || b >= vertexCount)
        throw Error(Errc::bad_input, "edge endpoint out of range");
      if (a == b) throw Error(Errc::bad_input, "loops are not supported (edge " + std::to_string(e) + ")");
      g.dartOrigin_[2 * e] = a;
      g.dartOrigin_[2 * e + 1] = b;
    }
    return g;
  }

  void installRing(VertexId v, const std::vector<DartId>& ring) {
    int k = static_cast<int>(ring.size());
    for (int i = 0; i < k; ++i) {
      next_[ring[i]] = ring[(i + 1) % k];
      prev_[ring[(i + 1) % k]] = ring[i];
    }
    vertexDart_[v] = ring[0];
  }

  bool sameFaceOrbit(DartId a, DartId b) const {
    DartId d = a;
    do {
      if (d == b) return true;
      d = nextFaceDart(d);
    } while (d != a);
    return false;
  }

  void requireEdge(EdgeId e, const char* who) const {
    if (!edgeAlive(e))
      throw Error(Errc::bad_input, std::string(who) + ": unknown edge " + std::to_string(e));
  }
  void requireVertex(VertexId v, const char* who) const {
    if (!vertexAlive(v))
      throw Error(Errc::bad_input, std::string(who) + ": unknown vertex " + std::to_string(v));
  }
  void requireDart(DartId d, const char* who) const {
    if (!dartAlive(d))
      throw Error(Errc::bad_input, std::string(who) + ": unknown dart " + std::to_string(d));
  }

  VertexId newVertex() {
    vertexAlive_.push_back(1);
    vertexDart_.push_back(kNoDart);
    ++aliveVertices_;
    return static_cast<VertexId>(vertexAlive_.size() - 1);
  }

  EdgeId newEdge() {
    edgeAlive_.push_back(1);
    ++aliveEdges_;
    dartOrigin_.resize(dartOrigin_.size() + 2, kNoVertex);
    next_.resize(next_.size() + 2, kNoDart);
    prev_.resize(prev_.size() + 2, kNoDart);
    return static_cast<EdgeId>(edgeAlive_.size() - 1);
  }

  void killEdge(EdgeId e) {
    edgeAlive_[e] = 0;
    --aliveEdges_;
  }

  void killVertex(VertexId v) {
    vertexAlive_[v] = 0;
    vertexDart_[v] = kNoDart;
    --aliveVertices_;
  }

  // Put dNew into dOld's ring slot; dOld leaves the ring.
  void replaceInRing(DartId dOld, DartId dNew) {
    VertexId v = dartOrigin_[dOld];
    if (next_[dOld] == dOld) {
      next_[dNew] = dNew;
      prev_[dNew] = dNew;
    } else {
      next_[dNew] = next_[dOld];
      prev_[dNew] = prev_[dOld];
      next_[prev_[dOld]] = dNew;
      prev_[next_[dOld]] = dNew;
    }
    if (vertexDart_[v] == dOld) vertexDart_[v] = dNew;
  }

  void insertAfter(DartId dExisting, DartId dNew) {
    next_[dNew] = next_[dExisting];
    prev_[dNew] = dExisting;
    prev_[next_[dExisting]] = dNew;
    next_[dExisting] = dNew;
  }

  void removeDartFromRing(DartId d) {
    VertexId v = dartOrigin_[d];
    if (next_[d] == d) {
      vertexDart_[v] = kNoDart;  // vertex loses its last dart; caller must handle
      return;
    }
    next_[prev_[d]] = next_[d];
    prev_[next_[d]] = prev_[d];
    if (vertexDart_[v] == d) vertexDart_[v] = next_[d];
  }

  void freshStamp() { stamp_ = nextStamp(); }

  static std::uint64_t nextStamp() {
    static std::atomic<std::uint64_t> counter{1};
    return counter.fetch_add(1, std::memory_order_relaxed);
  }

  std::vector<VertexId> dartOrigin_;
  std::vector<DartId> next_, prev_;
  std::vector<char> edgeAlive_, vertexAlive_;
  std::vector<DartId> vertexDart_;
  int aliveVertices_ = 0;
  int aliveEdges_ = 0;
  std::uint64_t stamp_;
};

struct SubdivideResult {
  PlanarMultigraph graph;
  VertexId newVertex;
  EdgeId farHalf;  // the fresh half (newVertex, v); the (u, newVertex) half keeps the old id
};

struct SmoothResult {
  PlanarMultigraph graph;
  EdgeId mergedEdge;  // the surviving edge id (smaller of the two)
  EdgeId deadEdge;
  DartId seamDart;  // the merged edge's re-homed dart, sitting where the dead far dart was
};

struct AddEdgeResult {
  PlanarMultigraph graph;
  EdgeId newEdge;  // dart 2*newEdge originates at target(cornerA)
};

inline SubdivideResult PlanarMultigraph::subdivideEdge(EdgeId e) const {
  requireEdge(e, "subdivideEdge");
  PlanarMultigraph g = *this;
  g.freshStamp();
  DartId d1 = 2 * e + 1;
  VertexId v = g.dartOrigin_[d1];
  VertexId w = g.newVertex();
  EdgeId f = g.newEdge();
  DartId f0 = 2 * f, f1 = 2 * f + 1;
  // f1 takes d1's slot in v's ring
  g.replaceInRing(d1, f1);
  g.dartOrigin_[f1] = v;
  // ring at w: (d1, f0)
  g.dartOrigin_[d1] = w;
  g.dartOrigin_[f0] = w;
  g.next_[d1] = f0;
  g.next_[f0] = d1;
  g.prev_[d1] = f0;
  g.prev_[f0] = d1;
  g.vertexDart_[w] = d1;
  g.validate();
  return {std::move(g), w, f};
}

inline SmoothResult PlanarMultigraph::smoothVertex(VertexId v) const {
  requireVertex(v, "smoothVertex");
  std::vector<DartId> ring = dartsAt(v);
  if (ring.size() != 2)
    throw Error(Errc::bad_input, "smoothVertex: vertex " + std::to_string(v) + " has degree " +
                                     std::to_string(ring.size()));
  DartId x = ring[0], y = ring[1];
  EdgeId ex = edgeOf(x), ey = edgeOf(y);
  if (ex == ey) throw Error(Errc::bad_input, "smoothVertex: loop at vertex");
  VertexId a = target(x), b = target(y);
  if (a == b)
    throw Error(Errc::bad_input, "smoothVertex: incident edges are parallel copies; "
                                 "smoothing would create a loop");
  if (ex > ey) {
    std::swap(x, y);
    std::swap(ex, ey);
    std::swap(a, b);
  }
  // keep ex = (a, v); dead ey = (v, b). Re-home ex's dart at v to b.
  PlanarMultigraph g = *this;
  g.freshStamp();
  DartId keptAtV = x;        // origin v
  DartId deadFar = twin(y);  // origin b
  g.replaceInRing(deadFar, keptAtV);
  g.dartOrigin_[keptAtV] = b;
  g.killEdge(ey);
  g.killVertex(v);
  g.validate();
  return {std::move(g), ex, ey, keptAtV};
}

inline AddEdgeResult PlanarMultigraph::addEdgeInFace(DartId cornerA, DartId cornerB) const {
  requireDart(cornerA, "addEdgeInFace");
  requireDart(cornerB, "addEdgeInFace");
  if (cornerA == cornerB) throw Error(Errc::bad_input, "addEdgeInFace: identical corners");
  if (!sameFaceOrbit(cornerA, cornerB))
    throw Error(Errc::bad_input, "addEdgeInFace: corners lie on different faces");
  VertexId u = target(cornerA), w = target(cornerB);
  if (u == w) throw Error(Errc::bad_input, "addEdgeInFace: corners share a vertex (loop)");
  PlanarMultigraph g = *this;
  g.freshStamp();
  EdgeId n = g.newEdge();
  DartId n0 = 2 * n, n1 = 2 * n + 1;
  g.dartOrigin_[n0] = u;
  g.dartOrigin_[n1] = w;
  g.insertAfter(twin(cornerA), n0);
  g.insertAfter(twin(cornerB), n1);
  g.validate();
  return {std::move(g), n};
}

inline AddEdgeResult PlanarMultigraph::addEdgeInFace(VertexId v1, VertexId v2,
                                                     const Face& face) const {
  DartId cornerA = kNoDart, cornerB = kNoDart;
  for (DartId d : face.boundary) {
    if (cornerA == kNoDart && target(d) == v1) cornerA = d;
    if (cornerB == kNoDart && target(d) == v2 && d != cornerA) cornerB = d;
  }
  if (cornerA == kNoDart || cornerB == kNoDart)
    throw Error(Errc::bad_input, "addEdgeInFace: vertex not on the named face");
  return addEdgeInFace(cornerA, cornerB);
}

// Edge ids on a face boundary, in traversal order (an edge may repeat only
// when it is a bridge).
inline std::vector<EdgeId> faceEdges(const Face& f) {
  std::vector<EdgeId> out;
  out.reserve(f.boundary.size());
  for (DartId d : f.boundary) out.push_back(PlanarMultigraph::edgeOf(d));
  return out;
}

}  // namespace planar
