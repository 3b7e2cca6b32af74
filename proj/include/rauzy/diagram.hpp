#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "rauzy/induction.hpp"

namespace rauzy {

enum class Mode { Reduced, Labeled };

inline const char* mode_name(Mode m) {
  return m == Mode::Reduced ? "reduced" : "labeled";
}

inline Mode mode_from_name(const std::string& s) {
  if (s == "reduced") return Mode::Reduced;
  if (s == "labeled") return Mode::Labeled;
  throw ParseError("unknown mode: " + s);
}

struct DiagramEdge {
  uint32_t src;
  MoveKind kind;
  uint32_t dst;
  std::string winner;  // symbol name carried by the surviving side
  std::string looser;
};

// One orbit of the two moves.  Vertices are stored in discovery order:
// breadth-first layers from the start vertex, each layer sorted by canonical
// key, so the layout is reproducible run to run.
struct RauzyDiagram {
  Mode mode = Mode::Reduced;
  Alphabet alphabet;  // labeled mode only; shared by every vertex
  std::vector<std::string> keys;
  std::vector<Row> tops;  // reduced mode keeps the word in bottoms
  std::vector<Row> bottoms;
  std::vector<DiagramEdge> edges;
  std::map<std::string, uint32_t> index;

  size_t size() const { return keys.size(); }

  LabeledPermutation labeled_at(uint32_t v) const {
    return LabeledPermutation{alphabet, tops[v], bottoms[v]};
  }
  ReducedPermutation reduced_at(uint32_t v) const {
    return ReducedPermutation{bottoms[v]};
  }
  std::string vertex_text(uint32_t v) const {
    if (mode == Mode::Labeled) return labeled_at(v).to_text();
    return reduced_at(v).to_text();
  }
};

namespace detail {

struct PendingVertex {
  std::string key;
  Row top;
  Row bottom;
};

}  // namespace detail

// Breadth-first closure under the two moves.  Throws ReducibleInput for a
// reducible seed and BudgetExceeded before the vertex set would pass the
// budget.  Both moves are total on an irreducible class, so no MoveUndefined
// can escape here.
inline RauzyDiagram enumerate_class(const LabeledPermutation& seed, Mode mode,
                                    uint64_t budget = 10000000) {
  if (!is_irreducible(seed)) throw ReducibleInput(seed.to_text());

  RauzyDiagram dia;
  dia.mode = mode;
  dia.alphabet = seed.alphabet;
  int d = seed.size();

  auto key_of = [&](const Row& top, const Row& bottom) {
    if (mode == Mode::Labeled)
      return LabeledPermutation{seed.alphabet, top, bottom}.canonical_key();
    return ReducedPermutation{bottom}.canonical_key();
  };
  auto normal_form = [&](const LabeledPermutation& p) {
    if (mode == Mode::Labeled)
      return detail::PendingVertex{p.canonical_key(), p.top, p.bottom};
    ReducedPermutation r = reduce(p);
    return detail::PendingVertex{r.canonical_key(), Row{}, r.word};
  };
  auto push_vertex = [&](detail::PendingVertex&& pv) {
    dia.index.emplace(pv.key, static_cast<uint32_t>(dia.keys.size()));
    dia.keys.push_back(std::move(pv.key));
    dia.tops.push_back(std::move(pv.top));
    dia.bottoms.push_back(std::move(pv.bottom));
  };
  auto step = [&](uint32_t v, MoveKind k) {
    if (mode == Mode::Labeled)
      return normal_form(rauzy_move(dia.labeled_at(v), k));
    Word w = dia.bottoms[v];
    rauzy_reduced_word(w, k);
    return detail::PendingVertex{ReducedPermutation{w}.canonical_key(), Row{},
                                 std::move(w)};
  };

  if (budget < 1) throw BudgetExceeded(0);
  push_vertex(normal_form(seed));
  size_t layer_begin = 0;
  while (layer_begin < dia.keys.size()) {
    size_t layer_end = dia.keys.size();
    std::map<std::string, detail::PendingVertex> found;
    for (size_t v = layer_begin; v < layer_end; ++v)
      for (MoveKind k : {MoveKind::Top, MoveKind::Bottom}) {
        detail::PendingVertex pv = step(static_cast<uint32_t>(v), k);
        if (dia.index.count(pv.key) || found.count(pv.key)) continue;
        std::string key = pv.key;
        found.emplace(std::move(key), std::move(pv));
      }
    for (auto& [key, pv] : found) {
      if (dia.keys.size() + 1 > budget)
        throw BudgetExceeded(dia.keys.size());
      push_vertex(std::move(pv));
    }
    layer_begin = layer_end;
  }

  // Second pass wires the edges in vertex order, Top move then Bottom move.
  for (uint32_t v = 0; v < dia.keys.size(); ++v)
    for (MoveKind k : {MoveKind::Top, MoveKind::Bottom}) {
      detail::PendingVertex pv = step(v, k);
      uint32_t dst = dia.index.at(pv.key);
      std::string winner, looser;
      if (mode == Mode::Labeled) {
        const auto& names = *seed.alphabet;
        uint8_t tl = dia.tops[v].back(), bl = dia.bottoms[v].back();
        winner = k == MoveKind::Top ? names[tl] : names[bl];
        looser = k == MoveKind::Top ? names[bl] : names[tl];
      } else {
        const Word& w = dia.bottoms[v];
        uint8_t top_sym = static_cast<uint8_t>(d);  // identity top row
        uint8_t bottom_sym = w.back();
        winner = std::to_string(int(k == MoveKind::Top ? top_sym : bottom_sym));
        looser = std::to_string(int(k == MoveKind::Top ? bottom_sym : top_sym));
      }
      dia.edges.push_back({v, k, dst, std::move(winner), std::move(looser)});
    }
  return dia;
}

inline RauzyDiagram enumerate_class(const ReducedPermutation& seed, Mode mode,
                                    uint64_t budget = 10000000) {
  return enumerate_class(embed(seed), mode, budget);
}

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

inline std::string export_dot(const RauzyDiagram& dia) {
  std::ostringstream os;
  os << "digraph rauzy {\n";
  os << "  rankdir=LR;\n";
  os << "  node [shape=box];\n";
  for (uint32_t v = 0; v < dia.keys.size(); ++v)
    os << "  \"" << dot_escape(dia.keys[v]) << "\" [label=\""
       << dot_escape(dia.vertex_text(v)) << "\"];\n";
  for (const auto& e : dia.edges)
    os << "  \"" << dot_escape(dia.keys[e.src]) << "\" -> \""
       << dot_escape(dia.keys[e.dst]) << "\" [label=\"" << move_char(e.kind)
       << ":" << dot_escape(e.winner) << "\"];\n";
  os << "}\n";
  return os.str();
}

inline nlohmann::ordered_json diagram_to_json(const RauzyDiagram& dia) {
  nlohmann::ordered_json j;
  j["mode"] = mode_name(dia.mode);
  j["start"] = dia.vertex_text(0);
  auto verts = nlohmann::ordered_json::array();
  for (uint32_t v = 0; v < dia.keys.size(); ++v) {
    nlohmann::ordered_json jv;
    jv["key"] = dia.keys[v];
    if (dia.mode == Mode::Labeled) {
      jv["top"] = dia.labeled_at(v).top_text();
      jv["bottom"] = dia.labeled_at(v).bottom_text();
    } else {
      jv["top"] = dia.reduced_at(v).top_text();
      jv["bottom"] = dia.reduced_at(v).bottom_text();
    }
    verts.push_back(std::move(jv));
  }
  j["vertices"] = std::move(verts);
  auto edges = nlohmann::ordered_json::array();
  for (const auto& e : dia.edges) {
    nlohmann::ordered_json je;
    je["src"] = dia.keys[e.src];
    je["move"] = std::string(1, move_char(e.kind));
    je["dst"] = dia.keys[e.dst];
    je["winner"] = e.winner;
    je["looser"] = e.looser;
    edges.push_back(std::move(je));
  }
  j["edges"] = std::move(edges);
  return j;
}

inline std::string export_json(const RauzyDiagram& dia) {
  return diagram_to_json(dia).dump(2) + "\n";
}

// Rebuild a diagram from its JSON export.  Round-tripping through this and
// export_json is byte-identical; that property doubles as the cache format
// check.
inline RauzyDiagram diagram_from_json(const nlohmann::json& j) {
  RauzyDiagram dia;
  dia.mode = mode_from_name(j.at("mode").get<std::string>());
  const auto& verts = j.at("vertices");
  if (verts.empty()) throw ParseError("diagram has no vertices");
  if (dia.mode == Mode::Labeled) {
    std::string first = verts[0].at("top").get<std::string>() + " / " +
                        verts[0].at("bottom").get<std::string>();
    dia.alphabet = parse_labeled(first).alphabet;
  }
  for (const auto& jv : verts) {
    std::string key = jv.at("key").get<std::string>();
    std::string text = jv.at("top").get<std::string>() + " / " +
                       jv.at("bottom").get<std::string>();
    if (dia.mode == Mode::Labeled) {
      LabeledPermutation p = parse_labeled(text);
      Row top(p.size()), bottom(p.size());
      // re-express in the shared alphabet; vertex alphabets agree as sets
      const auto& names = *dia.alphabet;
      auto id_of = [&](const std::string& name) {
        for (size_t i = 0; i < names.size(); ++i)
          if (names[i] == name) return static_cast<uint8_t>(i);
        throw ParseError("vertex alphabet mismatch: " + name);
      };
      for (int i = 0; i < p.size(); ++i) {
        top[i] = id_of((*p.alphabet)[p.top[i]]);
        bottom[i] = id_of((*p.alphabet)[p.bottom[i]]);
      }
      dia.tops.push_back(std::move(top));
      dia.bottoms.push_back(std::move(bottom));
    } else {
      LabeledPermutation p = parse_labeled(text);
      ReducedPermutation r = reduce(p);
      dia.tops.push_back(Row{});
      dia.bottoms.push_back(r.word);
    }
    dia.index.emplace(key, static_cast<uint32_t>(dia.keys.size()));
    dia.keys.push_back(std::move(key));
  }
  for (const auto& je : j.at("edges")) {
    DiagramEdge e;
    e.src = dia.index.at(je.at("src").get<std::string>());
    e.dst = dia.index.at(je.at("dst").get<std::string>());
    std::string mv = je.at("move").get<std::string>();
    if (mv != "t" && mv != "b") throw ParseError("unknown move tag: " + mv);
    e.kind = mv == "t" ? MoveKind::Top : MoveKind::Bottom;
    e.winner = je.at("winner").get<std::string>();
    e.looser = je.at("looser").get<std::string>();
    dia.edges.push_back(std::move(e));
  }
  return dia;
}

}
