#pragma once
// Tait correspondence: a proper 3-edge-coloring of the dual cubic graph gives
// a 4-coloring of the original planar graph's vertices, end to end.

#include "planarcolor/builder.hpp"
#include "planarcolor/dual.hpp"
#include "planarcolor/klein.hpp"
#include "planarcolor/triangulate.hpp"

namespace planar {

// Each vertex of the maximal graph takes the color of its corresponding dual
// face; Klein labels are reused as the four vertex labels.
inline VertexColoring faceColorsToVertexColors(const PlanarMultigraph& gMaximal,
                                               const PlanarMultigraph& h,
                                               const DualCorrespondence& corr,
                                               const FaceColoring& fc) {
  if (fc.hostStamp() != h.stamp())
    throw Error(Errc::host_mismatch, "faceColorsToVertexColors: face coloring not on the dual");
  VertexColoring vc(gMaximal);
  for (VertexId v : gMaximal.aliveVertexIds()) {
    int f = corr.vertexToFace[v];
    if (f < 0 || f >= fc.faceCount())
      throw Error(Errc::bad_input, "faceColorsToVertexColors: correspondence mismatch");
    vc.set(v, static_cast<int>(fc.color(f)));
  }
  if (!validateVertexColoring(gMaximal, vc).proper)
    throw Error(Errc::bad_input, "faceColorsToVertexColors: induced coloring is not proper");
  return vc;
}

// Four-color a connected simple bridgeless planar graph: triangulate, build
// the cubic dual, color its edges, color its faces, and pull the face colors
// back to the vertices. Added triangulation edges only constrain the coloring
// further, so the restriction to the input graph stays proper.
inline VertexColoring fourColor(const PlanarMultigraph& g, const InsertOptions& opts = {}) {
  auto [gMax, rec] = triangulate(g);
  auto [h, corr] = dualize(gMax);
  auto [col, stats] = colorCubic(h, opts);
  auto faces = h.facesOf();
  FaceColoring fc = faceColoring(h, col, faces, defaultOuterFace(faces));
  VertexColoring vc = faceColorsToVertexColors(gMax, h, corr, fc);
  if (!validateVertexColoring(g, vc).proper)
    throw Error(Errc::bad_input, "fourColor: restriction to the input graph is not proper");
  return vc;
}

}  // namespace planar
