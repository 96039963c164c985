#pragma once

#include <string>
#include <vector>

#include "bowvar/fixed_points.hpp"
#include "bowvar/weights.hpp"

namespace bowvar {

// A vertex is addressed by its segment column and its slot counted from the
// top of that column; segment -1 with slot 0 denotes the framing vertex.
struct VertexRef {
  int segment = -1;
  int slot = 0;

  friend auto operator<=>(const VertexRef&, const VertexRef&) = default;
};

enum class EdgeType {
  Left,       // across a D5 brane, one step left in the same row
  Down,       // within a column flanked by a D5 brane
  Right,      // across an NS5 brane, one step right in the same row
  DownLeft,   // across an NS5 brane, one left and one down
  FrameIn,    // framing vertex -> top vertex left of the butterfly's own brane
  FrameOut,   // distinguished vertex right of the brane -> framing vertex
};

struct ButterflyEdge {
  EdgeType type;
  VertexRef from;
  VertexRef to;

  friend auto operator<=>(const ButterflyEdge&, const ButterflyEdge&) = default;
};

// The triangular vertex arrangement attached to one D5 brane.  Columns are
// indexed by segment; count[k] vertices hang below segment k, forming a
// contiguous nonzero interval around the brane.  Grid rows grow downward and
// heights decrease downward; the two are glued by the framing-edge rules.
struct Butterfly {
  int d5_ordinal = 0;                // 1-based
  int brane_position = 0;            // position of this D5 brane in the diagram
  std::vector<i64> count;            // size total+1, indexed by segment
  std::vector<i64> top_row;          // grid row of each column's top vertex (valid where count > 0)
  std::vector<i64> top_height;       // height of each column's top vertex (valid where count > 0)
  std::vector<ButterflyEdge> edges;  // sorted

  bool empty() const;
  int lo = 0;  // nonzero column interval [lo, hi]; empty() when hi < lo
  int hi = -1;

  i64 height_at(int segment, int slot) const {
    return top_height[static_cast<size_t>(segment)] - slot;
  }
};

struct ButterflyDiagram {
  TieDiagram source;
  std::vector<Butterfly> butterflies;  // one per D5 brane, in ordinal order
};

ButterflyDiagram build_butterfly_diagram(const TieDiagram& t);

// Restriction of every tautological bundle to this fixed point, indexed by
// segment 0..total; vertex below segment X in the butterfly of D5 brane j
// contributes u_j * h^height.
std::vector<KClass> taut_restrictions(const ButterflyDiagram& bd);

// The full tangent character assembled from first principles: sum the brane
// contributions, subtract the moment-map and gauge directions.  Everything
// downstream is cross-checked against this class.
KClass tangent_class_oracle(const ButterflyDiagram& bd);

// Column-aligned grid of vertex heights, one block per nonempty butterfly.
std::string render_ascii(const ButterflyDiagram& bd);

}  // namespace bowvar
