#include "bowvar/json_io.hpp"

#include <sstream>

namespace bowvar {

using nlohmann::json;

void to_json(json& j, const Weight& w) {
  j = json{{"u", w.u}, {"h", w.h}, {"str", to_string(w)}};
}

void to_json(json& j, const KClass& k) {
  j = json::array();
  for (const auto& [w, coeff] : k.terms()) {
    json term;
    to_json(term, w);
    term["coeff"] = coeff;
    j.push_back(std::move(term));
  }
}

void to_json(json& j, const Bct& b) {
  json bits = json::array();
  for (int i = 0; i < b.rows; ++i) {
    json row = json::array();
    for (int jj = 0; jj < b.cols; ++jj) row.push_back(static_cast<int>(b.at(i, jj)));
    bits.push_back(std::move(row));
  }
  j = json{{"rows", b.rows}, {"cols", b.cols}, {"bits", std::move(bits)}};
}

void to_json(json& j, const TieDiagram& t) {
  json ties = json::array();
  for (const auto& [a, b] : t.ties) ties.push_back(json::array({a, b}));
  j = json{{"diagram", format_diagram(t.diagram)}, {"ties", std::move(ties)}};
}

void to_json(json& j, const Surgery& s) {
  json site = json::array();
  for (const Box& b : s.site) site.push_back(json::array({b.row, b.offset}));
  j = json{{"source_col", s.source_col},
           {"target_col", s.target_col},
           {"pair_row", s.pair_row},
           {"block_end", s.block_end},
           {"matched", s.matched},
           {"site", std::move(site)},
           {"delta_y", s.delta_y},
           {"zero_offset_boxes", s.zero_offset_boxes},
           {"components", s.components}};
}

void to_json(json& j, const Curve& c) {
  j = json{{"type", to_string(c.type)}, {"compact", c.compact}};
  to_json(j["weight"], c.weight);
  if (c.surgery) to_json(j["surgery"], *c.surgery);
  if (c.endpoint) j["endpoint"] = *c.endpoint + 1;
  if (c.type == CurveType::III) {
    j["columns"] = json::array({c.type3_col_small, c.type3_col_big});
    j["step"] = c.type3_step;
  }
}

void to_json(json& j, const ClassifiedCurves& c) {
  j = json{{"curves", c.curves}};
  json blocked = json::array();
  for (const BlockedRecord& b : c.blocked) {
    blocked.push_back(json{{"row", b.pair.row},
                           {"col_small", b.pair.col_small},
                           {"col_big", b.pair.col_big},
                           {"one_in_big", b.pair.one_in_big},
                           {"available", b.available},
                           {"required", b.required}});
  }
  j["blocked"] = std::move(blocked);
}

void to_json(json& j, const Butterfly& b) {
  j = json{{"d5_ordinal", b.d5_ordinal}, {"brane_position", b.brane_position}};
  if (b.empty()) {
    j["segments"] = json::array();
    return;
  }
  json segments = json::array();
  for (int k = b.lo; k <= b.hi; ++k) {
    json heights = json::array();
    for (int s = 0; s < b.count[static_cast<size_t>(k)]; ++s) heights.push_back(b.height_at(k, s));
    segments.push_back(json{{"segment", k}, {"heights", std::move(heights)}});
  }
  j["segments"] = std::move(segments);
  json edges = json::array();
  for (const ButterflyEdge& e : b.edges) {
    const char* kind = "?";
    switch (e.type) {
      case EdgeType::Left:
        kind = "left";
        break;
      case EdgeType::Down:
        kind = "down";
        break;
      case EdgeType::Right:
        kind = "right";
        break;
      case EdgeType::DownLeft:
        kind = "down_left";
        break;
      case EdgeType::FrameIn:
        kind = "frame_in";
        break;
      case EdgeType::FrameOut:
        kind = "frame_out";
        break;
    }
    edges.push_back(json{{"kind", kind},
                         {"from", json::array({e.from.segment, e.from.slot})},
                         {"to", json::array({e.to.segment, e.to.slot})}});
  }
  j["edges"] = std::move(edges);
}

void to_json(json& j, const ButterflyDiagram& b) {
  json source;
  to_json(source, b.source);
  j = json{{"source", std::move(source)}, {"butterflies", b.butterflies}};
}

void to_json(json& j, const Skeleton& s) {
  j = json{{"diagram", format_diagram(s.original)},
           {"separated", format_diagram(s.separated)},
           {"sigma", s.sigma},
           {"fixed_points", s.fixed_points}};
  json edges = json::array();
  for (const SkeletonEdge& e : s.edges) {
    json entry{{"p1", e.p1 + 1}, {"p2", e.p2 + 1}, {"dim", e.pencil_dim}};
    to_json(entry["w1"], e.w1);
    to_json(entry["w2"], e.w2);
    edges.push_back(std::move(entry));
  }
  j["edges"] = std::move(edges);
  json rays = json::array();
  for (const SkeletonRay& r : s.rays) {
    json entry{{"p", r.p + 1}, {"dim", r.pencil_dim}};
    to_json(entry["w"], r.w);
    json types = json::array();
    for (CurveType t : r.types) types.push_back(to_string(t));
    entry["types"] = std::move(types);
    rays.push_back(std::move(entry));
  }
  j["rays"] = std::move(rays);
}

std::string dot_skeleton(const Skeleton& s) {
  std::ostringstream out;
  out << "graph skeleton {\n";
  out << "  node [shape=circle];\n";
  for (std::size_t i = 0; i < s.fixed_points.size(); ++i) {
    std::string name = std::to_string(i + 1);
    if (auto label = subset_label(s.fixed_points[i])) name = *label;
    out << "  p" << (i + 1) << " [label=\"" << name << "\"];\n";
  }
  for (const SkeletonEdge& e : s.edges) {
    out << "  p" << (e.p1 + 1) << " -- p" << (e.p2 + 1) << " [label=\"" << to_string(e.w1)
        << "\"];\n";
  }
  std::size_t ray_id = 0;
  for (const SkeletonRay& r : s.rays) {
    ++ray_id;
    out << "  r" << ray_id << " [shape=point];\n";
    out << "  p" << (r.p + 1) << " -- r" << ray_id << " [style=dashed, label=\"" << to_string(r.w)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace bowvar
