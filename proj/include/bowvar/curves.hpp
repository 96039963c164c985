#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "bowvar/diagram.hpp"
#include "bowvar/engine.hpp"
#include "bowvar/fixed_points.hpp"
#include "bowvar/tangent.hpp"
#include "bowvar/weights.hpp"

namespace bowvar {

// A cell of a Young diagram: row is 1-based from the top, offset is 0-based
// from the left end of that row.
struct Box {
  i64 row = 0;
  i64 offset = 0;

  friend auto operator<=>(const Box&, const Box&) = default;
};

// The data of a surgery attached to an unequal pair: a set of boxes of the
// source column's Young diagram that migrates to the target column's diagram,
// shifted vertically by delta_y.
struct Surgery {
  int source_col = 0;  // column holding the 1 (1-based)
  int target_col = 0;  // column holding the 0 (1-based)
  int pair_row = 0;    // row of the defining pair (1-based)
  int block_end = 0;   // last table row of the block the walk closed over
  bool matched = false;
  std::vector<Box> site;  // sorted
  i64 delta_y = 0;
  i64 zero_offset_boxes = 0;  // site boxes in the leftmost column
  int components = 0;         // connected components of the site (squares touching
                              // corner-to-corner count as adjacent)

  friend bool operator==(const Surgery&, const Surgery&) = default;
};

// A surgery ruled out by the margin constraint: moving the site would need
// `required` leftmost-column boxes but only `available` exist.  The attempted
// surgery is kept for diagnostics and cross-checking.
struct Blocked {
  Surgery attempt;
  i64 available = 0;
  i64 required = 0;
};

// Number of connected components of a box set, where two closed unit squares
// are adjacent if they share an edge or a corner.
int count_components(const std::vector<Box>& site);

// Builds the surgery for one unequal pair of `bct`, or reports it blocked.
// A pair that does not describe two differing entries is rejected (NotAPair).
std::variant<Surgery, Blocked> try_surgery_for_pair(const Bct& bct, const KlPair& pair);

// Same, but a blocked pair raises BlockedError.
Surgery surgery_for_pair(const Bct& bct, const KlPair& pair);

enum class CurveType { I, II, III };

const char* to_string(CurveType t);

// One invariant curve through a fixed point, in the separated torus
// coordinates.  Type I curves are compact and join two fixed points; types II
// and III are noncompact.  Type III curves exist independently of the table
// (margin data only) and carry no surgery.
struct Curve {
  CurveType type = CurveType::I;
  Weight weight;  // tangent weight of the curve at this fixed point
  bool compact = false;
  std::optional<Surgery> surgery;
  std::optional<std::size_t> endpoint;  // index into the enumeration (type I only)
  int type3_col_small = 0;              // type III only: the pair of columns and
  int type3_col_big = 0;                //   the h-power step
  i64 type3_step = 0;

  friend bool operator==(const Curve&, const Curve&) = default;
};

struct BlockedRecord {
  KlPair pair;
  i64 available = 0;
  i64 required = 0;
};

struct ClassifiedCurves {
  std::vector<Curve> curves;
  std::vector<BlockedRecord> blocked;
};

// Margin-only curves: for each column pair j < j', one curve of weight
// u_j/u_{j'} * h^t for t = 1..max(0, c_{j'} - c_j).
std::vector<Curve> nonsurgery_curves(const Margins& margins);

// All invariant curves through one fixed point.  When `universe` (the full
// canonical enumeration) is given, compact curves carry the index of their
// other endpoint.
ClassifiedCurves classify_curves(const Bct& bct, const std::vector<Bct>* universe = nullptr);

// An indecomposable two-column swap: the entries of the two columns exchanged
// across a minimal closed block of rows.  These are exactly the moves realized
// by compact curves.
struct BlockSwap {
  int top_row = 0;
  int bottom_row = 0;
  int col_small = 0;
  int col_big = 0;
  Bct result{0, 0, {}};

  friend bool operator==(const BlockSwap&, const BlockSwap&) = default;
};

std::vector<BlockSwap> block_swaps(const Bct& bct);

// The 1-skeleton: fixed points, one edge per compact invariant curve, one ray
// per pencil containing a noncompact curve.  Weights are reported in the
// original diagram's torus coordinates.
struct SkeletonEdge {
  std::size_t p1 = 0;  // p1 < p2, indices into fixed_points
  std::size_t p2 = 0;
  i64 pencil_dim = 0;  // multiplicity of the weight in the tangent space at p1
  Weight w1;           // weight at p1
  Weight w2;           // weight at p2 (= 1/w1)

  friend bool operator==(const SkeletonEdge&, const SkeletonEdge&) = default;
};

struct SkeletonRay {
  std::size_t p = 0;
  i64 pencil_dim = 0;
  Weight w;
  std::vector<CurveType> types;  // distinct types present in the pencil, sorted

  friend bool operator==(const SkeletonRay&, const SkeletonRay&) = default;
};

struct Skeleton {
  BraneDiagram original;
  BraneDiagram separated;
  std::vector<int> sigma;
  std::vector<Bct> fixed_points;
  std::vector<SkeletonEdge> edges;
  std::vector<SkeletonRay> rays;

  friend bool operator==(const Skeleton&, const Skeleton&) = default;
};

Skeleton skeleton(const BraneDiagram& d, ExecutionPolicy policy = ExecutionPolicy::Serial);

}  // namespace bowvar
