#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bowvar/diagram.hpp"

namespace bowvar {

// A binary contingency table; the torus fixed points of a bow variety are
// exactly the 0/1 tables whose margins equal the diagram's charge vectors.
// Rows correspond to NS5 branes, columns to D5 branes, both in diagram order.
struct Bct {
  int rows = 0;
  int cols = 0;
  std::vector<std::uint8_t> bits;  // row-major

  static Bct zero(int rows, int cols) {
    return Bct{rows, cols, std::vector<std::uint8_t>(static_cast<size_t>(rows) * static_cast<size_t>(cols), 0)};
  }

  // 0-based accessors; the CLI and JSON layers are the only 1-based surfaces.
  std::uint8_t at(int i, int j) const { return bits[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
  void set(int i, int j, std::uint8_t v) { bits[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)] = v; }

  // Row-major lexicographic comparison is the canonical fixed-point order.
  friend auto operator<=>(const Bct&, const Bct&) = default;
};

Margins margins_of(const Bct& b);

struct FixedPointSet {
  std::vector<Bct> points;
  std::optional<std::string> diagnostic;  // set when the margins admit no table
};

// Enumerates all tables with the given margins in ascending row-major
// lexicographic order.  Margins that are out of range or unrealizable yield an
// empty set with a diagnostic rather than an error.
FixedPointSet enumerate_fixed_points(const Margins& margins);

// Binary search in the canonical enumeration; 0-based index.
std::optional<std::size_t> locate(const std::vector<Bct>& points, const Bct& b);

// A fixed point in brane-diagram language: which (NS5 i, D5 j) pairs are tied.
struct TieDiagram {
  BraneDiagram diagram;
  std::vector<std::pair<int, int>> ties;  // 1-based ordinals, sorted

  bool operator==(const TieDiagram&) const = default;
};

TieDiagram bct_to_ties(const BraneDiagram& d, const Bct& b);
Bct ties_to_bct(const TieDiagram& t);

// The table drawn together with its margins and the staircase separating line
// ('D' for each NS5, 'R' for each D5, in brane order).
struct TableWithMargins {
  Bct table;
  Margins margins;
  std::vector<char> line;
};

TableWithMargins table_with_margins(const BraneDiagram& d, const Bct& b);

// Transports a fixed point through the transition at position k: branes swap
// and the tie between the two affected branes toggles.  The underlying table
// is unchanged.
TieDiagram hw_fixed_point(const TieDiagram& t, int k);

// Column j's 1s encode a partition with distinct parts: row i contributes part
// rows - i + 1 (1-based).  Parts are listed in decreasing order.
struct YoungTuple {
  std::vector<std::vector<i64>> columns;  // one strict partition per D5 brane
};

YoungTuple young_diagrams(const Bct& b);

// Compact alias for two-column tables whose rows each hold a single 1 (at
// most nine rows): the ascending list of rows with the 1 in column 2,
// concatenated, e.g. "13".  Empty when the table is not of that shape.
std::optional<std::string> subset_label(const Bct& b);

}  // namespace bowvar
