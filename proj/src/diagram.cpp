#include "bowvar/diagram.hpp"

#include <cctype>
#include <limits>

#include "bowvar/error.hpp"

namespace bowvar {

int BraneDiagram::ns5_count() const {
  int count = 0;
  for (BraneKind b : branes) count += (b == BraneKind::NS5) ? 1 : 0;
  return count;
}

int BraneDiagram::d5_count() const { return total() - ns5_count(); }

int BraneDiagram::ns5_position(int ordinal) const {
  int seen = 0;
  for (int p = 1; p <= total(); ++p) {
    if (kind_at(p) == BraneKind::NS5 && ++seen == ordinal) return p;
  }
  throw Error(ErrorKind::MalformedDiagram, "NS5 ordinal out of range");
}

int BraneDiagram::d5_position(int ordinal) const {
  int seen = 0;
  for (int p = 1; p <= total(); ++p) {
    if (kind_at(p) == BraneKind::D5 && ++seen == ordinal) return p;
  }
  throw Error(ErrorKind::MalformedDiagram, "D5 ordinal out of range");
}

namespace {

struct Token {
  bool is_brane;
  BraneKind kind;  // valid when is_brane
  i64 value;       // valid when !is_brane
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '/' || c == 's') {
      tokens.push_back({true, BraneKind::NS5, 0});
      ++i;
    } else if (c == '\\' || c == 'b') {
      tokens.push_back({true, BraneKind::D5, 0});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      i64 value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        int digit = text[i] - '0';
        if (value > (std::numeric_limits<i64>::max() - digit) / 10) {
          throw Error(ErrorKind::MalformedDiagram, "multiplicity literal too large");
        }
        value = value * 10 + digit;
        ++i;
      }
      tokens.push_back({false, BraneKind::NS5, value});
    } else {
      throw Error(ErrorKind::MalformedDiagram, std::string("unexpected character '") + c + "'");
    }
  }
  return tokens;
}

}  // namespace

BraneDiagram parse_diagram(std::string_view text) {
  const std::vector<Token> tokens = tokenize(text);
  if (tokens.empty()) {
    throw Error(ErrorKind::MalformedDiagram, "empty diagram");
  }
  if (!tokens.front().is_brane || !tokens.back().is_brane) {
    throw Error(ErrorKind::MalformedDiagram, "diagram must begin and end with a brane symbol");
  }
  BraneDiagram d;
  d.mult.push_back(0);  // segment 0, outside the diagram
  bool expect_brane = true;
  for (const Token& t : tokens) {
    if (t.is_brane != expect_brane) {
      throw Error(ErrorKind::MalformedDiagram,
                  expect_brane ? "expected a brane symbol" : "expected exactly one multiplicity between branes");
    }
    if (t.is_brane) {
      d.branes.push_back(t.kind);
    } else {
      d.mult.push_back(t.value);
    }
    expect_brane = !expect_brane;
  }
  if (!expect_brane) {
    // Sequence ended after a brane: counts line up only if every interior gap
    // carried a number.
    if (d.mult.size() != d.branes.size()) {
      throw Error(ErrorKind::MalformedDiagram, "missing multiplicity between branes");
    }
  } else {
    throw Error(ErrorKind::MalformedDiagram, "diagram must end with a brane symbol");
  }
  d.mult.push_back(0);  // segment total(), outside the diagram
  return d;
}

std::string format_diagram(const BraneDiagram& d) {
  std::string out;
  for (int p = 1; p <= d.total(); ++p) {
    out += (d.kind_at(p) == BraneKind::NS5) ? '/' : '\\';
    if (p < d.total()) out += std::to_string(d.mult_at(p));
  }
  return out;
}

Margins charges(const BraneDiagram& d) {
  Margins m;
  const int total = d.total();
  // Suffix counts of NS5 branes let each D5 charge be read off in O(1).
  std::vector<int> ns5_right(static_cast<size_t>(total) + 2, 0);
  for (int p = total; p >= 1; --p) {
    ns5_right[static_cast<size_t>(p)] =
        ns5_right[static_cast<size_t>(p) + 1] + (d.kind_at(p) == BraneKind::NS5 ? 1 : 0);
  }
  int d5_left = 0;
  for (int p = 1; p <= total; ++p) {
    if (d.kind_at(p) == BraneKind::NS5) {
      m.row.push_back(checked_add(checked_sub(d.mult_at(p), d.mult_at(p - 1)), d5_left));
    } else {
      m.col.push_back(
          checked_add(checked_sub(d.mult_at(p - 1), d.mult_at(p)), ns5_right[static_cast<size_t>(p) + 1]));
      ++d5_left;
    }
  }
  return m;
}

BraneDiagram hw_step(const BraneDiagram& d, int k) {
  if (k < 1 || k + 1 > d.total()) {
    throw Error(ErrorKind::MalformedDiagram, "transition position out of range");
  }
  if (d.kind_at(k) == d.kind_at(k + 1)) {
    throw Error(ErrorKind::SameKind, "branes at positions " + std::to_string(k) + "," +
                                         std::to_string(k + 1) + " have the same type");
  }
  const i64 d1 = d.mult_at(k - 1);
  const i64 d2 = d.mult_at(k);
  const i64 d3 = d.mult_at(k + 1);
  const i64 replacement = checked_sub(checked_add(checked_add(d1, d3), 1), d2);
  if (replacement < 0) {
    throw Error(ErrorKind::NegativeMultiplicity,
                "transition at position " + std::to_string(k) + " would set multiplicity " +
                    std::to_string(replacement));
  }
  BraneDiagram out = d;
  std::swap(out.branes[static_cast<size_t>(k - 1)], out.branes[static_cast<size_t>(k)]);
  out.mult[static_cast<size_t>(k)] = replacement;
  return out;
}

bool is_separated(const BraneDiagram& d) {
  bool seen_d5 = false;
  for (int p = 1; p <= d.total(); ++p) {
    if (d.kind_at(p) == BraneKind::D5) {
      seen_d5 = true;
    } else if (seen_d5) {
      return false;
    }
  }
  return true;
}

HwTrace separate(const BraneDiagram& d) {
  HwTrace trace;
  // The twist exponents depend only on the original positions: D5 brane j
  // crosses exactly the NS5 branes that start out strictly to its right.
  const int m = d.d5_count();
  for (int j = 1; j <= m; ++j) {
    int pos = d.d5_position(j);
    int crossings = 0;
    for (int p = pos + 1; p <= d.total(); ++p) {
      if (d.kind_at(p) == BraneKind::NS5) ++crossings;
    }
    trace.sigma.push_back(crossings);
  }
  BraneDiagram current = d;
  for (;;) {
    int k = 0;
    for (int p = 1; p + 1 <= current.total(); ++p) {
      if (current.kind_at(p) == BraneKind::D5 && current.kind_at(p + 1) == BraneKind::NS5) {
        k = p;
        break;
      }
    }
    if (k == 0) break;
    const i64 old_mult = current.mult_at(k);
    current = hw_step(current, k);
    trace.steps.push_back({k, old_mult, current.mult_at(k)});
  }
  trace.separated = std::move(current);
  return trace;
}

}  // namespace bowvar
