#pragma once

#include "seqgraph/embedding.hpp"
#include "seqgraph/graph.hpp"

#include <string>

namespace seqgraph {

struct SvgStyle {
  double canvas = 1000.0;
  double margin = 20.0;
  double vertex_radius = 3.0;
  double stroke_width = 1.0;
  double double_offset = 4.0;  // bulge of each curve of a double edge, pixels
  std::string vertex_fill = "#1f4e79";
  std::string edge_stroke = "#555555";
  std::string background = "#ffffff";
  bool labels = false;  // vertex values next to the circles
};

// Normalises, then maps x, y onto the canvas; 3D embeddings are drawn in
// orthographic projection onto their first two axes. One <path> per single
// edge, two bowed <path>s per double edge, one <circle> per vertex.
// Throws DimensionMismatch, DegenerateEmbedding.
std::string render_svg(const SequenceGraph& g, const Embedding& e, const SvgStyle& style = {});

}  // namespace seqgraph
