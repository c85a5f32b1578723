#pragma once
// GF(2) spanning-subgraph algebra: edge subsets of a fixed host graph with
// symmetric difference (the circular sum) as addition, face bases, and the
// MacLane functional.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "planarcolor/graph.hpp"

namespace planar {

// Characteristic vector over the edge ids of one host graph. Operations
// across different hosts are rejected.
class EdgeSet {
 public:
  EdgeSet() = default;

  explicit EdgeSet(const PlanarMultigraph& g)
      : stamp_(g.stamp()), capacity_(g.edgeCapacity()), words_((capacity_ + 63) / 64, 0) {}

  static EdgeSet of(const PlanarMultigraph& g, std::initializer_list<EdgeId> ids) {
    EdgeSet s(g);
    for (EdgeId e : ids) s.insert(e);
    return s;
  }

  static EdgeSet of(const PlanarMultigraph& g, const std::vector<EdgeId>& ids) {
    EdgeSet s(g);
    for (EdgeId e : ids) s.insert(e);
    return s;
  }

  static EdgeSet full(const PlanarMultigraph& g) {
    EdgeSet s(g);
    for (EdgeId e : g.aliveEdgeIds()) s.insert(e);
    return s;
  }

  std::uint64_t hostStamp() const { return stamp_; }
  int capacity() const { return capacity_; }

  bool contains(EdgeId e) const {
    return e >= 0 && e < capacity_ && (words_[e >> 6] >> (e & 63)) & 1;
  }
  void insert(EdgeId e) {
    check(e);
    words_[e >> 6] |= (std::uint64_t{1} << (e & 63));
  }
  void erase(EdgeId e) {
    check(e);
    words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }
  void toggle(EdgeId e) {
    check(e);
    words_[e >> 6] ^= (std::uint64_t{1} << (e & 63));
  }

  int count() const {
    int n = 0;
    for (std::uint64_t w : words_) n += __builtin_popcountll(w);
    return n;
  }
  bool empty() const {
    for (std::uint64_t w : words_)
      if (w) return false;
    return true;
  }

  std::vector<EdgeId> ids() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < capacity_; ++e)
      if (contains(e)) out.push_back(e);
    return out;
  }

  // Circular sum: (U1 ∪ U2) \ (U1 ∩ U2).
  EdgeSet operator^(const EdgeSet& o) const {
    EdgeSet r = *this;
    r ^= o;
    return r;
  }
  EdgeSet& operator^=(const EdgeSet& o) {
    if (stamp_ != o.stamp_)
      throw Error(Errc::host_mismatch, "circular sum across different host graphs");
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  bool operator==(const EdgeSet& o) const {
    return stamp_ == o.stamp_ && words_ == o.words_;
  }
  bool operator!=(const EdgeSet& o) const { return !(*this == o); }

 private:
  void check(EdgeId e) const {
    if (e < 0 || e >= capacity_) throw Error(Errc::bad_input, "edge id outside host graph");
  }

  std::uint64_t stamp_ = 0;
  int capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

inline EdgeSet circularSum(const EdgeSet& a, const EdgeSet& b) { return a ^ b; }

inline EdgeSet faceEdgeSet(const PlanarMultigraph& g, const Face& f) {
  EdgeSet s(g);
  for (DartId d : f.boundary) s.toggle(PlanarMultigraph::edgeOf(d));
  return s;
}

// Face basis of an embedded bridgeless graph: the boundaries of all faces but
// one together with the rim (the boundary of the distinguished outer face).
struct CycleBasis {
  std::vector<EdgeSet> cycles;
  std::vector<int> cycleFaceIds;
  EdgeSet rim;
  int rimFaceId = -1;
};

// Default outer face: largest boundary, ties broken by smallest dart id.
inline int defaultOuterFace(const std::vector<Face>& faces) {
  int best = -1;
  size_t bestSize = 0;
  for (const Face& f : faces) {
    if (best < 0 || f.boundary.size() > bestSize) {
      best = f.id;
      bestSize = f.boundary.size();
    }
  }
  return best;  // faces come ordered by smallest dart id, so ties pick the earlier one
}

inline CycleBasis faceBasis(const PlanarMultigraph& g, const std::vector<Face>& faces,
                            int outerFaceId) {
  if (!g.isBridgeless())
    throw Error(Errc::bridge, "faceBasis: bridge present, boundaries are not cycles");
  CycleBasis b;
  b.rim = EdgeSet(g);
  for (const Face& f : faces) {
    if (f.id == outerFaceId) {
      b.rim = faceEdgeSet(g, f);
      b.rimFaceId = f.id;
    } else {
      b.cycles.push_back(faceEdgeSet(g, f));
      b.cycleFaceIds.push_back(f.id);
    }
  }
  if (b.rimFaceId < 0) throw Error(Errc::bad_input, "faceBasis: unknown outer face");
  return b;
}

inline CycleBasis faceBasis(const PlanarMultigraph& g) {
  auto faces = g.facesOf();
  return faceBasis(g, faces, defaultOuterFace(faces));
}

// MacLane functional F(C) = Σ_i (S_i - 1)(S_i - 2), where S_i counts the given
// cycles through edge i; the sum runs over all edges of the host graph.
inline long long maclane(const PlanarMultigraph& g, std::span<const EdgeSet> cycles) {
  long long total = 0;
  for (EdgeId e : g.aliveEdgeIds()) {
    long long s = 0;
    for (const EdgeSet& c : cycles)
      if (c.contains(e)) ++s;
    total += (s - 1) * (s - 2);
  }
  return total;
}

inline long long maclane(const PlanarMultigraph& g, const std::vector<EdgeSet>& cycles) {
  return maclane(g, std::span<const EdgeSet>(cycles));
}

}  // namespace planar
