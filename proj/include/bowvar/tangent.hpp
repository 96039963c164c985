#pragma once

#include <vector>

#include "bowvar/diagram.hpp"
#include "bowvar/engine.hpp"
#include "bowvar/fixed_points.hpp"
#include "bowvar/weights.hpp"

namespace bowvar {

// An unequal pair of entries in one row of a fixed-point table: columns
// col_small < col_big (1-based) whose bits differ in row `row` (1-based).
// one_in_big distinguishes a 01 pair (the 1 sits in the larger column) from a
// 10 pair.
struct KlPair {
  int row = 0;
  int col_small = 0;
  int col_big = 0;
  bool one_in_big = false;

  friend bool operator==(const KlPair&, const KlPair&) = default;
};

// A fixed-point table together with its column prefix-sum matrix and its
// unequal pairs.  s has n+1 rows and m+1 columns, both 1-based: s[i][j] is the
// number of 1s in column j among rows 1..i (row 0 and column 0 are zero).
struct PairTable {
  Bct bct{0, 0, {}};
  std::vector<std::vector<i64>> s;
  std::vector<KlPair> pairs01;
  std::vector<KlPair> pairs10;
};

PairTable pair_table(const Bct& bct);

// Tangent weights at a fixed point of a separated diagram, in the separated
// torus coordinates: each 01 pair contributes a dual pair of weights
//   u_{j0}/u_{j1} * h^{s[i][j1]-s[i][j0]}   and its image under w -> h/w.
// Sorted canonically.
std::vector<Weight> tangent_weights(const Bct& bct);

// Same, mapped back through u_j -> u_j * h^{sigma_j} and re-sorted.
std::vector<Weight> tangent_weights_twisted(const Bct& bct, const std::vector<int>& sigma);

// Tangent weights at a fixed point of an arbitrary diagram, in the original
// torus coordinates.  Checks that the table's margins are the diagram's
// charges.
std::vector<Weight> tangent_weights_general(const BraneDiagram& d, const Bct& bct);

// The number of 01 pairs of any table with the given margins (it does not
// depend on the table):  sum_j (j-1)*c_j - sum_i r_i*(r_i-1)/2.  Half the
// tangent dimension.
i64 pair_count_from_margins(const Margins& margins);

// Weights at every fixed point in `points`, optionally in parallel; output
// order matches input order regardless of policy.
std::vector<std::vector<Weight>> tangent_weights_batch(const std::vector<Bct>& points,
                                                       const std::vector<int>& sigma,
                                                       ExecutionPolicy policy);

}  // namespace bowvar
