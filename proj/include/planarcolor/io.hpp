#pragma once
// File formats: .rsg graph documents (edges + clockwise rotations), .edges
// documents (edge list only, no embedding), .col coloring documents, and DOT
// export. External ids are arbitrary non-negative integers; documents keep
// the mapping to the dense internal ids.

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "planarcolor/graph.hpp"
#include "planarcolor/klein.hpp"

namespace planar {

struct GraphDocument {
  std::string name;
  PlanarMultigraph graph;
  bool embedded = true;                  // false for .edges documents
  std::vector<long long> vertexName;    // internal id -> external id
  std::vector<long long> edgeName;
  std::unordered_map<long long, VertexId> vertexByName;
  std::unordered_map<long long, EdgeId> edgeByName;

  VertexId vertex(long long external) const {
    auto it = vertexByName.find(external);
    if (it == vertexByName.end())
      throw Error(Errc::bad_input, "unknown vertex id " + std::to_string(external));
    return it->second;
  }
  EdgeId edge(long long external) const {
    auto it = edgeByName.find(external);
    if (it == edgeByName.end())
      throw Error(Errc::bad_input, "unknown edge id " + std::to_string(external));
    return it->second;
  }
};

namespace iodetail {

inline std::vector<std::string> tokenizeLine(const std::string& line) {
  std::vector<std::string> out;
  std::string tok;
  for (char c : line) {
    if (c == '#') break;
    if (c == ' ' || c == '\t' || c == '\r' || c == ':') {
      if (!tok.empty()) {
        out.push_back(tok);
        tok.clear();
      }
    } else {
      tok += c;
    }
  }
  if (!tok.empty()) out.push_back(tok);
  return out;
}

inline long long parseNonNegative(const std::string& s, const char* what) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size() || v < 0) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(Errc::bad_input, std::string("expected a non-negative ") + what + ", got '" + s + "'");
  }
}

}  // namespace iodetail

// Load a .rsg document: graph/vertices/edges header, edge lines, rotation
// lines listing each vertex's incident edges in clockwise order. With
// enforceEuler the loaded rotation system must be a sphere embedding.
inline GraphDocument loadRsg(std::istream& in, bool enforceEuler = true) {
  using iodetail::parseNonNegative;
  using iodetail::tokenizeLine;
  GraphDocument doc;
  long long nDeclared = -1, mDeclared = -1;
  std::vector<std::pair<long long, std::pair<long long, long long>>> edgeLines;
  std::vector<std::pair<long long, std::vector<long long>>> rotationLines;
  std::string line;
  while (std::getline(in, line)) {
    auto tok = tokenizeLine(line);
    if (tok.empty()) continue;
    if (tok[0] == "graph" && tok.size() >= 2) {
      doc.name = tok[1];
    } else if (tok[0] == "vertices" && tok.size() == 2) {
      nDeclared = parseNonNegative(tok[1], "vertex count");
    } else if (tok[0] == "edges" && tok.size() == 2) {
      mDeclared = parseNonNegative(tok[1], "edge count");
    } else if (tok[0] == "edge" && tok.size() == 4) {
      edgeLines.push_back({parseNonNegative(tok[1], "edge id"),
                           {parseNonNegative(tok[2], "vertex id"),
                            parseNonNegative(tok[3], "vertex id")}});
    } else if (tok[0] == "rotation" && tok.size() >= 2) {
      std::vector<long long> ids;
      for (size_t i = 2; i < tok.size(); ++i) ids.push_back(parseNonNegative(tok[i], "edge id"));
      rotationLines.push_back({parseNonNegative(tok[1], "vertex id"), std::move(ids)});
    } else {
      throw Error(Errc::bad_input, "unrecognized line: " + line);
    }
  }
  if (nDeclared < 0 || mDeclared < 0)
    throw Error(Errc::bad_input, "missing vertices/edges header");
  if (static_cast<long long>(edgeLines.size()) != mDeclared)
    throw Error(Errc::bad_input, "edge line count does not match the header");
  if (static_cast<long long>(rotationLines.size()) != nDeclared)
    throw Error(Errc::bad_input, "rotation line count does not match the header");

  auto internVertex = [&doc](long long name) {
    auto [it, fresh] = doc.vertexByName.try_emplace(name, static_cast<VertexId>(doc.vertexName.size()));
    if (fresh) doc.vertexName.push_back(name);
    return it->second;
  };
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (auto& [eid, vs] : edgeLines) {
    if (doc.edgeByName.count(eid))
      throw Error(Errc::bad_input, "duplicate edge id " + std::to_string(eid));
    if (vs.first == vs.second)
      throw Error(Errc::bad_input, "loop edge " + std::to_string(eid) + " rejected");
    doc.edgeByName[eid] = static_cast<EdgeId>(doc.edgeName.size());
    doc.edgeName.push_back(eid);
    edges.emplace_back(internVertex(vs.first), internVertex(vs.second));
  }
  if (static_cast<long long>(doc.vertexName.size()) != nDeclared)
    throw Error(Errc::bad_input, "vertex count does not match the vertices used by edges");
  std::vector<std::vector<EdgeId>> rotations(doc.vertexName.size());
  std::vector<char> seen(doc.vertexName.size(), 0);
  for (auto& [vid, ids] : rotationLines) {
    VertexId v = doc.vertex(vid);
    if (seen[v]) throw Error(Errc::bad_input, "duplicate rotation for vertex " + std::to_string(vid));
    seen[v] = 1;
    for (long long e : ids) rotations[v].push_back(doc.edge(e));
  }
  doc.graph = PlanarMultigraph::fromRotations(static_cast<int>(doc.vertexName.size()), edges,
                                              rotations);
  if (enforceEuler) {
    EulerReport r = doc.graph.eulerCheck();
    if (!r.pass) {
      std::ostringstream os;
      os << "rotation system is not a sphere embedding: V=" << r.vertices << " E=" << r.edges
         << " F=" << r.faces << " genus defect " << r.genusDefect;
      throw Error(Errc::not_spherical, os.str());
    }
  }
  doc.embedded = true;
  return doc;
}

// Load an .edges document: edge lines only, no embedding. The graph carries
// an arbitrary rotation system and is only suitable for operations that need
// no embedding.
inline GraphDocument loadEdges(std::istream& in) {
  using iodetail::parseNonNegative;
  using iodetail::tokenizeLine;
  GraphDocument doc;
  doc.embedded = false;
  std::vector<std::pair<VertexId, VertexId>> edges;
  auto internVertex = [&doc](long long name) {
    auto [it, fresh] = doc.vertexByName.try_emplace(name, static_cast<VertexId>(doc.vertexName.size()));
    if (fresh) doc.vertexName.push_back(name);
    return it->second;
  };
  std::string line;
  while (std::getline(in, line)) {
    auto tok = tokenizeLine(line);
    if (tok.empty()) continue;
    if (tok[0] == "graph" && tok.size() >= 2) {
      doc.name = tok[1];
      continue;
    }
    if (tok[0] != "edge" || tok.size() != 4)
      throw Error(Errc::bad_input, "unrecognized line: " + line);
    long long eid = parseNonNegative(tok[1], "edge id");
    long long a = parseNonNegative(tok[2], "vertex id");
    long long b = parseNonNegative(tok[3], "vertex id");
    if (a == b) throw Error(Errc::bad_input, "loop edge " + std::to_string(eid) + " rejected");
    if (doc.edgeByName.count(eid))
      throw Error(Errc::bad_input, "duplicate edge id " + std::to_string(eid));
    doc.edgeByName[eid] = static_cast<EdgeId>(doc.edgeName.size());
    doc.edgeName.push_back(eid);
    edges.emplace_back(internVertex(a), internVertex(b));
  }
  if (edges.empty()) throw Error(Errc::bad_input, "no edges in document");
  doc.graph = PlanarMultigraph::fromEdgeList(static_cast<int>(doc.vertexName.size()), edges);
  return doc;
}

inline GraphDocument loadGraphFile(const std::string& path, bool noEmbed = false,
                                   bool enforceEuler = true) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::bad_input, "cannot open " + path);
  return noEmbed ? loadEdges(in) : loadRsg(in, enforceEuler);
}

inline void saveRsg(std::ostream& out, const GraphDocument& doc) {
  const PlanarMultigraph& g = doc.graph;
  out << "graph " << (doc.name.empty() ? "g" : doc.name) << "\n";
  out << "vertices " << g.vertexCount() << "\n";
  out << "edges " << g.edgeCount() << "\n";
  for (EdgeId e : g.aliveEdgeIds()) {
    auto [a, b] = g.endpoints(e);
    out << "edge " << doc.edgeName[e] << " " << doc.vertexName[a] << " " << doc.vertexName[b]
        << "\n";
  }
  for (VertexId v : g.aliveVertexIds()) {
    out << "rotation " << doc.vertexName[v] << ":";
    for (DartId d : g.dartsAt(v)) out << " " << doc.edgeName[PlanarMultigraph::edgeOf(d)];
    out << "\n";
  }
}

// Wrap a bare graph in a document with 1-based external ids.
inline GraphDocument documentFor(const PlanarMultigraph& g, const std::string& name) {
  GraphDocument doc;
  doc.name = name;
  doc.graph = g;
  doc.vertexName.assign(g.vertexCapacity(), -1);
  doc.edgeName.assign(g.edgeCapacity(), -1);
  long long nv = 1, ne = 1;
  for (VertexId v : g.aliveVertexIds()) {
    doc.vertexName[v] = nv;
    doc.vertexByName[nv] = v;
    ++nv;
  }
  for (EdgeId e : g.aliveEdgeIds()) {
    doc.edgeName[e] = ne;
    doc.edgeByName[ne] = e;
    ++ne;
  }
  return doc;
}

// Coloring documents: `color <eid> <R|B|G>` edge lines, `face <fid> <W|R|B|G>`
// face lines, or `vcolor <vid> <0..3>` vertex lines; one kind per document.
struct ColoringDocument {
  enum class Kind { edge, face, vertex };
  Kind kind = Kind::edge;
  std::vector<std::pair<long long, KleinColor>> colorEntries;  // edge or face entries
  std::vector<std::pair<long long, int>> vertexEntries;
};

inline ColoringDocument loadColoring(std::istream& in) {
  using iodetail::parseNonNegative;
  using iodetail::tokenizeLine;
  ColoringDocument doc;
  bool kindSet = false;
  std::string line;
  while (std::getline(in, line)) {
    auto tok = tokenizeLine(line);
    if (tok.empty()) continue;
    if (tok[0] == "color" && tok.size() == 3) {
      if (kindSet && doc.kind != ColoringDocument::Kind::edge)
        throw Error(Errc::bad_input, "mixed coloring document");
      doc.kind = ColoringDocument::Kind::edge;
      kindSet = true;
      auto c = tok[2].size() == 1 ? kleinFromName(tok[2][0]) : std::nullopt;
      if (!c || *c == KleinColor::W)
        throw Error(Errc::bad_input, "edge color must be R, B or G: " + line);
      doc.colorEntries.push_back({parseNonNegative(tok[1], "edge id"), *c});
    } else if (tok[0] == "face" && tok.size() == 3) {
      if (kindSet && doc.kind != ColoringDocument::Kind::face)
        throw Error(Errc::bad_input, "mixed coloring document");
      doc.kind = ColoringDocument::Kind::face;
      kindSet = true;
      auto c = tok[2].size() == 1 ? kleinFromName(tok[2][0]) : std::nullopt;
      if (!c) throw Error(Errc::bad_input, "face color must be W, R, B or G: " + line);
      doc.colorEntries.push_back({parseNonNegative(tok[1], "face id"), *c});
    } else if (tok[0] == "vcolor" && tok.size() == 3) {
      if (kindSet && doc.kind != ColoringDocument::Kind::vertex)
        throw Error(Errc::bad_input, "mixed coloring document");
      doc.kind = ColoringDocument::Kind::vertex;
      kindSet = true;
      long long label = parseNonNegative(tok[2], "vertex label");
      if (label > 3) throw Error(Errc::bad_input, "vertex label must be 0..3: " + line);
      doc.vertexEntries.push_back({parseNonNegative(tok[1], "vertex id"), static_cast<int>(label)});
    } else {
      throw Error(Errc::bad_input, "unrecognized line: " + line);
    }
  }
  if (!kindSet) throw Error(Errc::bad_input, "empty coloring document");
  return doc;
}

inline ColoringDocument loadColoringFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::bad_input, "cannot open " + path);
  return loadColoring(in);
}

// Instantiate an edge-coloring document against its host graph; must be total.
inline EdgeColoring edgeColoringFromDocument(const GraphDocument& gdoc,
                                             const ColoringDocument& cdoc) {
  if (cdoc.kind != ColoringDocument::Kind::edge)
    throw Error(Errc::bad_input, "not an edge coloring document");
  EdgeColoring col(gdoc.graph);
  std::vector<char> seen(gdoc.graph.edgeCapacity(), 0);
  for (auto& [eid, c] : cdoc.colorEntries) {
    EdgeId e = gdoc.edge(eid);
    if (seen[e]) throw Error(Errc::bad_input, "edge colored twice: " + std::to_string(eid));
    seen[e] = 1;
    col.set(e, c);
  }
  for (EdgeId e : gdoc.graph.aliveEdgeIds())
    if (!seen[e])
      throw Error(Errc::bad_input,
                  "edge " + std::to_string(gdoc.edgeName[e]) + " is missing a color");
  return col;
}

inline VertexColoring vertexColoringFromDocument(const GraphDocument& gdoc,
                                                 const ColoringDocument& cdoc) {
  if (cdoc.kind != ColoringDocument::Kind::vertex)
    throw Error(Errc::bad_input, "not a vertex coloring document");
  VertexColoring vc(gdoc.graph);
  std::vector<char> seen(gdoc.graph.vertexCapacity(), 0);
  for (auto& [vid, label] : cdoc.vertexEntries) {
    VertexId v = gdoc.vertex(vid);
    if (seen[v]) throw Error(Errc::bad_input, "vertex colored twice: " + std::to_string(vid));
    seen[v] = 1;
    vc.set(v, label);
  }
  for (VertexId v : gdoc.graph.aliveVertexIds())
    if (!seen[v])
      throw Error(Errc::bad_input,
                  "vertex " + std::to_string(gdoc.vertexName[v]) + " is missing a label");
  return vc;
}

inline void saveEdgeColoring(std::ostream& out, const GraphDocument& gdoc,
                             const EdgeColoring& col) {
  for (EdgeId e : gdoc.graph.aliveEdgeIds())
    out << "color " << gdoc.edgeName[e] << " " << kleinName(col.color(e)) << "\n";
}

// Face ids in documents are 1-based positions in the deterministic face order.
inline void saveFaceColoring(std::ostream& out, const std::vector<Face>& faces,
                             const FaceColoring& fc) {
  for (const Face& f : faces)
    out << "face " << f.id + 1 << " " << kleinName(fc.color(f.id)) << "\n";
}

inline void saveVertexColoring(std::ostream& out, const GraphDocument& gdoc,
                               const VertexColoring& vc) {
  for (VertexId v : gdoc.graph.aliveVertexIds())
    out << "vcolor " << gdoc.vertexName[v] << " " << vc.label(v) << "\n";
}

// DOT export with the drawing legend: red solid, blue dotted, green dashed
// (white, which only ever appears in diagnostics, dash-dotted).
inline void exportDot(std::ostream& out, const GraphDocument& gdoc,
                      const EdgeColoring* col = nullptr) {
  const PlanarMultigraph& g = gdoc.graph;
  out << "graph " << (gdoc.name.empty() ? "g" : gdoc.name) << " {\n";
  for (EdgeId e : g.aliveEdgeIds()) {
    auto [a, b] = g.endpoints(e);
    out << "  v" << gdoc.vertexName[a] << " -- v" << gdoc.vertexName[b];
    if (col) {
      switch (col->color(e)) {
        case KleinColor::R: out << " [color=red, style=solid]"; break;
        case KleinColor::B: out << " [color=blue, style=dotted]"; break;
        case KleinColor::G: out << " [color=green, style=dashed]"; break;
        case KleinColor::W: out << " [color=gray, style=\"dashed,dotted\"]"; break;
      }
    }
    out << ";  // u" << gdoc.edgeName[e] << "\n";
  }
  out << "}\n";
}

}  // namespace planar
