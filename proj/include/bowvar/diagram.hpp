#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bowvar/checked_int.hpp"

namespace bowvar {

enum class BraneKind { NS5, D5 };

// A type-A brane diagram: an alternating word of 5-branes ('/' = NS5,
// '\' = D5) with a nonnegative D3 multiplicity on every interior segment.
// Branes are numbered 1..total() left to right; segment k sits between branes
// k and k+1, with segments 0 and total() (outside the diagram) pinned to 0.
struct BraneDiagram {
  std::vector<BraneKind> branes;  // index 0 holds brane 1
  std::vector<i64> mult;          // size branes.size()+1; mult[k] = multiplicity of segment k

  int total() const { return static_cast<int>(branes.size()); }
  BraneKind kind_at(int position) const { return branes[static_cast<size_t>(position - 1)]; }
  i64 mult_at(int segment) const { return mult[static_cast<size_t>(segment)]; }

  int ns5_count() const;
  int d5_count() const;
  // 1-based ordinal -> 1-based brane position.
  int ns5_position(int ordinal) const;
  int d5_position(int ordinal) const;

  bool operator==(const BraneDiagram&) const = default;
};

// Accepts '/' and '\' (or the shell-safe aliases 's' and 'b') with one
// nonnegative integer between consecutive brane symbols; whitespace between
// tokens is ignored.  Throws MalformedDiagram otherwise.
BraneDiagram parse_diagram(std::string_view text);

// Canonical form: '/'-'\' alphabet, no whitespace.
std::string format_diagram(const BraneDiagram& d);

// Row margins (one per NS5) and column margins (one per D5) of the tables
// indexing the diagram's torus fixed points.
struct Margins {
  std::vector<i64> row;
  std::vector<i64> col;

  bool operator==(const Margins&) const = default;
};

Margins charges(const BraneDiagram& d);

// Exchanges the unlike branes at positions k, k+1 and recomputes the
// multiplicity between them so that both charge vectors are preserved.
// Throws SameKind / NegativeMultiplicity when the move is illegal.
BraneDiagram hw_step(const BraneDiagram& d, int k);

// True when every NS5 precedes every D5.
bool is_separated(const BraneDiagram& d);

struct HwStepRecord {
  int position;
  i64 old_mult;
  i64 new_mult;
};

// Result of pushing all D5 branes to the right.  sigma[j-1] counts the NS5
// branes that sat strictly right of D5 brane j in the *original* diagram;
// it is the exponent twist needed to map weights back to the original frame.
struct HwTrace {
  BraneDiagram separated;
  std::vector<HwStepRecord> steps;
  std::vector<int> sigma;
};

HwTrace separate(const BraneDiagram& d);

}  // namespace bowvar
