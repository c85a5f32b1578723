#pragma once
// Klein four-group color algebra on cubic graphs: proper 3-edge-colorings,
// 1-factors and 2-factors, discs (Kempe cycles), disc rotation, and the
// induced coloring of faces.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "planarcolor/edge_set.hpp"
#include "planarcolor/graph.hpp"

namespace planar {

// W is the identity and is forbidden in proper colorings.
enum class KleinColor : std::uint8_t { W = 0, R = 1, B = 2, G = 3 };

constexpr KleinColor kleinAdd(KleinColor a, KleinColor b) {
  return static_cast<KleinColor>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

constexpr std::array<KleinColor, 3> kChromatic = {KleinColor::R, KleinColor::B, KleinColor::G};

constexpr char kleinName(KleinColor c) {
  switch (c) {
    case KleinColor::W: return 'W';
    case KleinColor::R: return 'R';
    case KleinColor::B: return 'B';
    case KleinColor::G: return 'G';
  }
  return '?';
}

inline std::optional<KleinColor> kleinFromName(char c) {
  switch (c) {
    case 'W': return KleinColor::W;
    case 'R': return KleinColor::R;
    case 'B': return KleinColor::B;
    case 'G': return KleinColor::G;
    default: return std::nullopt;
  }
}

// Given two distinct chromatic colors, the third one.
constexpr KleinColor thirdColor(KleinColor a, KleinColor b) { return kleinAdd(a, b); }

// Total mapping edge -> color on one host graph. W marks an unassigned edge;
// such colorings are representable for diagnostics but rejected by every
// algebraic operation.
class EdgeColoring {
 public:
  EdgeColoring() = default;
  explicit EdgeColoring(const PlanarMultigraph& g)
      : stamp_(g.stamp()), byEdge_(g.edgeCapacity(), KleinColor::W) {}

  std::uint64_t hostStamp() const { return stamp_; }
  KleinColor color(EdgeId e) const { return byEdge_[e]; }
  void set(EdgeId e, KleinColor c) { byEdge_[e] = c; }
  const std::vector<KleinColor>& raw() const { return byEdge_; }

  bool operator==(const EdgeColoring& o) const {
    return stamp_ == o.stamp_ && byEdge_ == o.byEdge_;
  }

  // Compact fingerprint for visited-state bookkeeping.
  std::string fingerprint() const {
    std::string s(byEdge_.size(), 0);
    for (size_t i = 0; i < byEdge_.size(); ++i) s[i] = static_cast<char>(byEdge_[i]);
    return s;
  }

 private:
  std::uint64_t stamp_ = 0;
  std::vector<KleinColor> byEdge_;
};

struct ProperReport {
  bool proper = false;
  std::vector<VertexId> violations;  // vertices whose incident colors are not {R,B,G}
};

inline void requireSameHost(const PlanarMultigraph& g, std::uint64_t stamp, const char* who) {
  if (g.stamp() != stamp)
    throw Error(Errc::host_mismatch, std::string(who) + ": coloring bound to another graph");
}

// Proper iff the three edges at every vertex carry three distinct chromatic colors.
inline ProperReport validateProper(const PlanarMultigraph& g, const EdgeColoring& col) {
  requireSameHost(g, col.hostStamp(), "validateProper");
  ProperReport r;
  r.proper = true;
  for (VertexId v : g.aliveVertexIds()) {
    auto darts = g.dartsAt(v);
    unsigned mask = 0;
    bool bad = darts.size() != 3;
    for (DartId d : darts) {
      KleinColor c = col.color(PlanarMultigraph::edgeOf(d));
      if (c == KleinColor::W) bad = true;
      unsigned bit = 1u << static_cast<unsigned>(c);
      if (mask & bit) bad = true;
      mask |= bit;
    }
    if (bad) {
      r.proper = false;
      r.violations.push_back(v);
    }
  }
  return r;
}

inline void requireProper(const PlanarMultigraph& g, const EdgeColoring& col, const char* who) {
  if (!validateProper(g, col).proper)
    throw Error(Errc::bad_input, std::string(who) + ": coloring is not proper");
}

// One-factors (edges of each color) and two-factors (their complements).
struct ColorFactors {
  std::array<EdgeSet, 4> one, two;  // indexed by KleinColor; W slots unused
  const EdgeSet& oneFactor(KleinColor c) const { return one[static_cast<int>(c)]; }
  const EdgeSet& twoFactor(KleinColor c) const { return two[static_cast<int>(c)]; }
};

inline ColorFactors factors(const PlanarMultigraph& g, const EdgeColoring& col) {
  requireProper(g, col, "factors");
  ColorFactors f;
  for (KleinColor c : kChromatic) {
    f.one[static_cast<int>(c)] = EdgeSet(g);
    f.two[static_cast<int>(c)] = EdgeSet(g);
  }
  for (EdgeId e : g.aliveEdgeIds()) {
    KleinColor c = col.color(e);
    f.one[static_cast<int>(c)].insert(e);
    for (KleinColor other : kChromatic)
      if (other != c) f.two[static_cast<int>(other)].insert(e);
  }
  return f;
}

// One simple cycle of a colored 2-factor; its edges alternate the two colors
// other than `klass`. Edge i joins vertices[i] and vertices[(i+1) % size].
struct Disc {
  KleinColor klass = KleinColor::W;
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;

  bool containsEdge(EdgeId e) const {
    for (EdgeId x : edges)
      if (x == e) return true;
    return false;
  }
};

namespace detail {

// Trace the cycles of a 2-regular spanning subgraph given by `inSet`.
// Deterministic: each cycle starts at its smallest edge, walking from that
// edge's first endpoint toward its second.
inline std::vector<Disc> traceCycles(const PlanarMultigraph& g,
                                     const std::vector<char>& inSet, KleinColor klass) {
  std::vector<Disc> out;
  std::vector<char> used(g.edgeCapacity(), 0);
  for (EdgeId e0 = 0; e0 < g.edgeCapacity(); ++e0) {
    if (!g.edgeAlive(e0) || !inSet[e0] || used[e0]) continue;
    Disc d;
    d.klass = klass;
    auto [u, v] = g.endpoints(e0);
    d.edges.push_back(e0);
    d.vertices.push_back(u);
    used[e0] = 1;
    VertexId at = v;
    EdgeId cur = e0;
    while (at != u) {
      d.vertices.push_back(at);
      EdgeId nxt = kNoEdge;
      for (DartId dd : g.dartsAt(at)) {
        EdgeId f = PlanarMultigraph::edgeOf(dd);
        if (f != cur && inSet[f]) {
          nxt = f;
          break;
        }
      }
      if (nxt == kNoEdge || used[nxt])
        throw Error(Errc::bad_input, "subgraph is not a disjoint union of cycles");
      d.edges.push_back(nxt);
      used[nxt] = 1;
      auto [a, b] = g.endpoints(nxt);
      at = (a == at) ? b : a;
      cur = nxt;
    }
    out.push_back(std::move(d));
  }
  return out;
}

}  // namespace detail

// The discs of twoFactor(klass), ordered by smallest edge id.
inline std::vector<Disc> discs(const PlanarMultigraph& g, const EdgeColoring& col,
                               KleinColor klass) {
  requireProper(g, col, "discs");
  if (klass == KleinColor::W) throw Error(Errc::bad_input, "discs: W has no 2-factor");
  std::vector<char> in(g.edgeCapacity(), 0);
  for (EdgeId e : g.aliveEdgeIds())
    if (col.color(e) != klass) in[e] = 1;
  return detail::traceCycles(g, in, klass);
}

// The disc of the given class containing edge e, if the edge lies in that 2-factor.
inline std::optional<Disc> discThrough(const PlanarMultigraph& g, const EdgeColoring& col,
                                       KleinColor klass, EdgeId e) {
  if (col.color(e) == klass) return std::nullopt;
  for (Disc& d : discs(g, col, klass))
    if (d.containsEdge(e)) return std::move(d);
  return std::nullopt;
}

// Extend a spanning even-cycle subgraph to a proper coloring: edges outside
// `tf` take `color`; each cycle of `tf` is alternately 2-colored with the
// other two colors, the smallest edge of a cycle taking the smaller color.
inline EdgeColoring coloringFromTwoFactor(const PlanarMultigraph& g, KleinColor color,
                                          const EdgeSet& tf) {
  if (color == KleinColor::W) throw Error(Errc::bad_input, "coloringFromTwoFactor: W not allowed");
  if (tf.hostStamp() != g.stamp())
    throw Error(Errc::host_mismatch, "coloringFromTwoFactor: edge set bound to another graph");
  for (VertexId v : g.aliveVertexIds()) {
    int deg = 0;
    for (DartId d : g.dartsAt(v))
      if (tf.contains(PlanarMultigraph::edgeOf(d))) ++deg;
    if (deg != 2)
      throw Error(Errc::bad_input, "coloringFromTwoFactor: subgraph is not 2-regular spanning");
  }
  std::vector<char> in(g.edgeCapacity(), 0);
  for (EdgeId e : tf.ids()) in[e] = 1;
  auto cycles = detail::traceCycles(g, in, color);
  KleinColor first = KleinColor::W, second = KleinColor::W;
  for (KleinColor c : kChromatic)
    if (c != color) (first == KleinColor::W ? first : second) = c;
  EdgeColoring out(g);
  for (EdgeId e : g.aliveEdgeIds())
    if (!tf.contains(e)) out.set(e, color);
  for (const Disc& d : cycles) {
    if (d.edges.size() % 2 != 0)
      throw Error(Errc::bad_input, "coloringFromTwoFactor: odd cycle is not 2-colorable");
    for (size_t i = 0; i < d.edges.size(); ++i)
      out.set(d.edges[i], i % 2 == 0 ? first : second);
  }
  return out;
}

// Swap the two alternating colors along a disc; an involution that preserves
// properness and the disc's edge set.
inline EdgeColoring rotateDisc(const PlanarMultigraph& g, const EdgeColoring& col,
                               const Disc& d) {
  bool found = false;
  for (const Disc& x : discs(g, col, d.klass)) {
    if (x.edges.size() == d.edges.size()) {
      EdgeSet a = EdgeSet::of(g, x.edges), b = EdgeSet::of(g, d.edges);
      if (a == b) {
        found = true;
        break;
      }
    }
  }
  if (!found) throw Error(Errc::bad_input, "rotate: not a disc of this coloring");
  EdgeColoring out = col;
  for (EdgeId e : d.edges) {
    KleinColor c = col.color(e);
    out.set(e, thirdColor(d.klass, c));  // swap within the two non-klass colors
  }
  return out;
}

// Total mapping face -> {W,R,B,G}, indexed by face id.
class FaceColoring {
 public:
  FaceColoring() = default;
  FaceColoring(std::uint64_t stamp, int faceCount)
      : stamp_(stamp), byFace_(faceCount, KleinColor::W) {}

  std::uint64_t hostStamp() const { return stamp_; }
  int faceCount() const { return static_cast<int>(byFace_.size()); }
  KleinColor color(int faceId) const { return byFace_[faceId]; }
  void set(int faceId, KleinColor c) { byFace_[faceId] = c; }

  bool operator==(const FaceColoring& o) const {
    return stamp_ == o.stamp_ && byFace_ == o.byFace_;
  }

 private:
  std::uint64_t stamp_ = 0;
  std::vector<KleinColor> byFace_;
};

// Color the faces of a sphere-embedded, properly colored cubic graph: the
// outer face takes W and crossing an edge adds the edge's color. Throws when
// no globally consistent assignment exists (improper coloring or a rotation
// system that is not a sphere embedding).
inline FaceColoring faceColoring(const PlanarMultigraph& g, const EdgeColoring& col,
                                 const std::vector<Face>& faces, int outerFaceId) {
  requireProper(g, col, "faceColoring");
  auto faceOf = g.faceOfDartMap(faces);
  FaceColoring fc(g.stamp(), static_cast<int>(faces.size()));
  std::vector<char> assigned(faces.size(), 0);
  std::vector<int> stack{outerFaceId};
  fc.set(outerFaceId, KleinColor::W);
  assigned[outerFaceId] = 1;
  while (!stack.empty()) {
    int f = stack.back();
    stack.pop_back();
    for (DartId d : faces[f].boundary) {
      int other = faceOf[PlanarMultigraph::twin(d)];
      KleinColor want = kleinAdd(fc.color(f), col.color(PlanarMultigraph::edgeOf(d)));
      if (!assigned[other]) {
        fc.set(other, want);
        assigned[other] = 1;
        stack.push_back(other);
      } else if (fc.color(other) != want) {
        throw Error(Errc::not_spherical,
                    "faceColoring: inconsistent assignment (improper coloring or "
                    "non-spherical embedding)");
      }
    }
  }
  for (char a : assigned)
    if (!a) throw Error(Errc::bad_input, "faceColoring: face structure not connected");
  return fc;
}

// Add x to every face color; the edge-sum property is preserved.
inline FaceColoring shiftFaceColoring(const FaceColoring& fc, KleinColor x) {
  FaceColoring out = fc;
  for (int f = 0; f < fc.faceCount(); ++f) out.set(f, kleinAdd(fc.color(f), x));
  return out;
}

// Recover the edge coloring induced by a face coloring: each edge takes the
// Klein sum of its two sides. Throws when two adjacent faces share a color.
inline EdgeColoring edgeColoringFromFaces(const PlanarMultigraph& g,
                                          const std::vector<Face>& faces,
                                          const FaceColoring& fc) {
  if (fc.hostStamp() != g.stamp())
    throw Error(Errc::host_mismatch, "edgeColoringFromFaces: wrong host");
  auto faceOf = g.faceOfDartMap(faces);
  EdgeColoring col(g);
  for (EdgeId e : g.aliveEdgeIds()) {
    KleinColor a = fc.color(faceOf[2 * e]);
    KleinColor b = fc.color(faceOf[2 * e + 1]);
    KleinColor c = kleinAdd(a, b);
    if (c == KleinColor::W)
      throw Error(Errc::bad_input, "edgeColoringFromFaces: adjacent faces share a color");
    col.set(e, c);
  }
  return col;
}

// The sums of same-colored face boundaries satisfy the circular-sum
// identities: sum(R)+sum(B) and sum(G)+sum(W) both equal the green 2-factor
// of the induced edge coloring, and cyclically for the other two pairings.
// Returns false when the face coloring does not induce a proper edge coloring
// or any of the identities fails.
inline bool cycleColorSumIdentities(const PlanarMultigraph& g, const std::vector<Face>& faces,
                                    const FaceColoring& fc) {
  EdgeColoring col;
  try {
    col = edgeColoringFromFaces(g, faces, fc);
  } catch (const Error&) {
    return false;
  }
  if (!validateProper(g, col).proper) return false;
  ColorFactors f = factors(g, col);
  std::array<EdgeSet, 4> sum;
  for (int c = 0; c < 4; ++c) sum[c] = EdgeSet(g);
  for (const Face& face : faces)
    sum[static_cast<int>(fc.color(face.id))] ^= faceEdgeSet(g, face);
  const EdgeSet& sR = sum[static_cast<int>(KleinColor::R)];
  const EdgeSet& sB = sum[static_cast<int>(KleinColor::B)];
  const EdgeSet& sG = sum[static_cast<int>(KleinColor::G)];
  const EdgeSet& sW = sum[static_cast<int>(KleinColor::W)];
  return (sR ^ sB) == (sG ^ sW) && (sR ^ sB) == f.twoFactor(KleinColor::G) &&
         (sR ^ sG) == (sB ^ sW) && (sR ^ sG) == f.twoFactor(KleinColor::B) &&
         (sG ^ sB) == (sR ^ sW) && (sG ^ sB) == f.twoFactor(KleinColor::R);
}

// Vertex labels 0..3 (the Klein elements reused as labels).
class VertexColoring {
 public:
  VertexColoring() = default;
  explicit VertexColoring(const PlanarMultigraph& g)
      : stamp_(g.stamp()), byVertex_(g.vertexCapacity(), 0) {}

  std::uint64_t hostStamp() const { return stamp_; }
  int label(VertexId v) const { return byVertex_[v]; }
  void set(VertexId v, int label) { byVertex_[v] = label; }

 private:
  std::uint64_t stamp_ = 0;
  std::vector<int> byVertex_;
};

struct VertexProperReport {
  bool proper = false;
  std::vector<EdgeId> violations;  // edges whose endpoints share a label
};

inline VertexProperReport validateVertexColoring(const PlanarMultigraph& g,
                                                 const VertexColoring& vc) {
  VertexProperReport r;
  r.proper = true;
  for (EdgeId e : g.aliveEdgeIds()) {
    auto [a, b] = g.endpoints(e);
    if (vc.label(a) == vc.label(b) || vc.label(a) < 0 || vc.label(a) > 3 || vc.label(b) < 0 ||
        vc.label(b) > 3) {
      r.proper = false;
      r.violations.push_back(e);
    }
  }
  return r;
}

}  // namespace planar
