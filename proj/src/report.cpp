#include "snark/report.hpp"

#include <chrono>
#include <sstream>

#include "snark/canonical.hpp"
#include "snark/constructions.hpp"
#include "snark/cycles.hpp"
#include "snark/graph6.hpp"
#include "snark/matchings.hpp"
#include "snark/parameters.hpp"

namespace snark {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

json edge_ids_json(const EdgeBits& bits) {
  json out = json::array();
  for (int id : bits.to_ids()) out.push_back(id);
  return out;
}

json coloring_json(const MultiColoring& c) {
  json out = json::array();
  for (const auto& colours : c.as_lists()) out.push_back(colours);
  return out;
}

MultiColoring coloring_from_json(const json& j, int k) {
  MultiColoring c;
  c.k = k;
  for (const auto& colours : j) {
    std::uint32_t set = 0;
    for (int col : colours.get<std::vector<int>>()) set |= 1u << col;
    c.colour_sets.push_back(set);
  }
  return c;
}

json lattice_node_json(const LatticeNode& node) {
  json out;
  switch (node.kind) {
    case LatticeNode::Kind::ComponentSplit: out["kind"] = "component-split"; break;
    case LatticeNode::Kind::TwoCutSplit: out["kind"] = "2-cut-split"; break;
    case LatticeNode::Kind::TightThreeCutSplit: out["kind"] = "tight-3-cut-split"; break;
    case LatticeNode::Kind::LeafBipartite: out["kind"] = "bipartite"; break;
    case LatticeNode::Kind::LeafBrick: out["kind"] = "brick-non-petersen"; break;
    case LatticeNode::Kind::LeafPetersen: out["kind"] = "petersen"; break;
    case LatticeNode::Kind::LeafBridge: out["kind"] = "bridge"; break;
  }
  out["graph"] = node.graph_text;
  if (!node.cut_edge_ids.empty()) out["cut"] = node.cut_edge_ids;
  if (!node.children.empty()) {
    out["children"] = json::array();
    for (const auto& c : node.children) out["children"].push_back(lattice_node_json(c));
  }
  return out;
}

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// exact chromatic index by increasing k; Shannon's bound caps the loop
json chromatic_index_json(const CubicMultigraph& g, const AnalysisOptions& opts,
                          bool* indeterminate) {
  json out;
  int limit = 3 * g.delta() / 2 + 1;
  for (int k = std::max(1, g.delta()); k <= limit; ++k) {
    auto r = edge_color(g, k, opts.node_limit);
    if (r.verdict == ColorVerdict::Colourable) {
      out["value"] = k;
      out["class"] = (k == g.delta()) ? "I" : "II";
      out["coloring"] = coloring_json(r.coloring);
      out["nodes"] = r.nodes;
      return out;
    }
    if (r.verdict == ColorVerdict::Indeterminate) {
      out["indeterminate"] = true;
      out["at_least"] = k;
      out["nodes"] = r.nodes;
      *indeterminate = true;
      return out;
    }
  }
  out["error"] = "exceeded Shannon bound";  // unreachable for valid inputs
  return out;
}

json pm_index_json(const CubicMultigraph& g, const MatchingList& list,
                   const AnalysisOptions& opts) {
  json out;
  auto r = perfect_matching_index(g, list, opts.cap);
  out["cap"] = r.cap;
  switch (r.kind) {
    case PmIndexResult::Kind::Value: {
      out["value"] = r.value;
      json witness = json::array();
      for (int i : r.witness) witness.push_back(edge_ids_json(list[i].edges));
      out["witness"] = witness;
      break;
    }
    case PmIndexResult::Kind::GreaterThanCap:
      out["greater_than_cap"] = true;
      break;
    case PmIndexResult::Kind::Infinite:
      out["infinite"] = true;
      break;
  }
  return out;
}

json l_json(const CubicMultigraph& g, const MatchingList& list, const AnalysisOptions& opts,
            bool* indeterminate) {
  json out;
  auto r = l_value(g, opts.kmax, opts.node_limit);
  out["kmax"] = opts.kmax;
  switch (r.kind) {
    case LValue::Kind::Finite: {
      out["verdict"] = "finite";
      out["k"] = r.k;
      out["witness"] = r.witness;
      json ms = json::array();
      for (int i : r.witness) ms.push_back(edge_ids_json(list[i].edges));
      out["witness_matchings"] = ms;
      out["coloring"] = coloring_json(r.coloring);
      break;
    }
    case LValue::Kind::AtLeast:
      out["verdict"] = "at_least";
      out["k"] = r.k;
      break;
    case LValue::Kind::Infinite:
      out["verdict"] = "infinite";
      out["bridge_failure"] = r.certificate.bridge_failure;
      out["certificate"] = lattice_node_json(r.certificate.root);
      break;
    case LValue::Kind::Indeterminate:
      out["verdict"] = "indeterminate";
      *indeterminate = true;
      break;
  }
  return out;
}

json lm_entry_json(const LmValue& v) {
  json e;
  switch (v.kind) {
    case LmValue::Kind::Finite:
      e["verdict"] = "finite";
      e["t"] = v.t;
      e["coloring"] = coloring_json(v.coloring);
      break;
    case LmValue::Kind::AtLeast:
      e["verdict"] = "at_least";
      e["t"] = v.t;
      break;
    case LmValue::Kind::Indeterminate:
      e["verdict"] = "indeterminate";
      break;
  }
  return e;
}

json scc_json(const CubicMultigraph& g, const AnalysisOptions& opts) {
  json out;
  int dim = g.m() - g.n() + 1;
  if (g.is_simple() && is_connected(g) && dim <= opts.dim_cap) {
    auto r = scc_exact(g, opts.family_bound, opts.dim_cap);
    out["method"] = "family-search";
    out["family_bound"] = opts.family_bound;
    if (r.found) {
      out["exact"] = true;
      out["length"] = r.length;
      json cover = json::array();
      for (const auto& c : r.cover.cycles) cover.push_back(edge_ids_json(c));
      out["cover"] = cover;
    } else {
      out["exact"] = false;
      out["error"] = "no cover within the family bound";
    }
    return out;
  }
  // large cycle space: try the colouring translation, which still gives the
  // exact value when it lands on the 4/3 bound
  auto via = four_thirds_cover_via_coloring(g, opts.tmax);
  out["method"] = "coloring-translation";
  if (via) {
    out["exact"] = true;
    out["length"] = via->cover.length();
    out["t"] = via->t;
    if (via->matching_index >= 0) out["matching_index"] = via->matching_index;
    json cover = json::array();
    for (const auto& c : via->cover.cycles) cover.push_back(edge_ids_json(c));
    out["cover"] = cover;
  } else {
    out["exact"] = false;
    out["at_least"] = (4 * g.m() + 2) / 3;
    out["note"] = "no 4/3 cover within tmax; value exceeds 4/3 |E| if the host is frumious";
  }
  return out;
}

json cdc_json(const CubicMultigraph& g, const MatchingList& list, const AnalysisOptions& opts) {
  json out;
  auto idx = perfect_matching_index(g, list, 4);
  if (idx.kind == PmIndexResult::Kind::Value && idx.value <= 4) {
    std::array<EdgeBits, 4> four;
    for (int i = 0; i < 4; ++i) four[i] = list[idx.witness[i % idx.witness.size()]].edges;
    auto cdc = cdc_from_four_cover(g, four);
    out["via"] = "four-cover";
    json cycles = json::array();
    for (const auto& c : cdc.cycles) cycles.push_back(edge_ids_json(c));
    out["cycles"] = cycles;
    return out;
  }
  (void)opts;
  out["via"] = "none-within-bounds";
  out["note"] = "perfect matching index above 4; no Steffen/Hou construction";
  return out;
}

json fan_raspaud_json(const MatchingList& list) {
  json out;
  auto triple = fan_raspaud(list);
  if (triple) {
    out["triple"] = *triple;
    json ms = json::array();
    for (int i : *triple) ms.push_back(edge_ids_json(list[i].edges));
    out["matchings"] = ms;
  } else {
    out["triple"] = nullptr;
  }
  return out;
}

json sp_json(const CubicMultigraph& g, const AnalysisOptions& opts, bool* indeterminate) {
  json out;
  json sp = json::array();
  for (int t = 1; t <= opts.sp_tmax + 1; ++t) {
    auto r = sp_membership_witnessed(g, t, opts.node_limit);
    json e;
    e["t"] = t;
    if (r.verdict == ColorVerdict::Indeterminate) {
      e["member"] = nullptr;
      *indeterminate = true;
    } else {
      e["member"] = r.verdict == ColorVerdict::Colourable;
      if (r.verdict == ColorVerdict::Colourable) e["coloring"] = coloring_json(r.coloring);
    }
    sp.push_back(e);
  }
  out["sp"] = sp;
  json sp2 = json::array();
  for (int t = 0; t <= opts.sp_tmax; ++t) {
    auto r = sp2_membership_witnessed(g, t, opts.node_limit);
    json e;
    e["t"] = t;
    if (r.verdict == ColorVerdict::Indeterminate) {
      e["member"] = nullptr;
      *indeterminate = true;
    } else {
      e["member"] = r.verdict == ColorVerdict::Colourable;
      if (r.verdict == ColorVerdict::Colourable) {
        e["factors"] = r.factors;
        e["coloring"] = coloring_json(r.coloring);
      }
    }
    sp2.push_back(e);
  }
  out["sp2"] = sp2;
  return out;
}

}  // namespace

json analyze_graph(const CubicMultigraph& g, const AnalysisOptions& opts) {
  json record;
  record["schema"] = 1;
  record["n"] = g.n();
  record["m"] = g.m();
  record["instances"] = g.instance_count();
  record["regular"] = g.is_regular();
  record["simple"] = g.is_simple();
  record["cubic"] = g.is_cubic();
  record["digest"] = canonical_digest(g);
  if (g.is_simple())
    record["graph6"] = write_graph6(g);
  else
    record["sparse6"] = write_sparse6(g);

  std::set<std::string> select = opts.select.empty() ? std::set<std::string>{"info"} : opts.select;
  bool indeterminate = false;
  json timings;

  auto want = [&select](const char* name) { return select.count(name) > 0; };

  if (want("info")) {
    auto t0 = Clock::now();
    json info;
    auto gi = girth(g);
    record["girth"] = gi ? json(*gi) : json(nullptr);
    info["connected"] = is_connected(g);
    info["bipartite"] = is_bipartite(g);
    info["bridges"] = bridges(g);
    if (g.is_cubic() && is_connected(g)) {
      auto cc = cyclic_connectivity(g);
      json c;
      c["value"] = cc.value;
      c["exact"] = cc.exact;
      c["from_rank"] = cc.from_rank;
      info["cyclic_connectivity"] = c;
    }
    record["info"] = info;
    timings["info"] = ms_since(t0);
  }

  const bool needs_matchings = want("chie") || want("l") || want("lm") || want("frumious") ||
                               want("cdc") || want("fan-raspaud");
  MatchingList list;
  if (needs_matchings && g.is_cubic()) list = enumerate_perfect_matchings(g);

  auto guarded = [&](const char* name, auto&& fn) {
    if (!want(name)) return;
    auto t0 = Clock::now();
    try {
      record[name] = fn();
    } catch (const std::exception& e) {
      record[name] = json{{"error", e.what()}};
    }
    timings[name] = ms_since(t0);
  };

  guarded("chi", [&] { return chromatic_index_json(g, opts, &indeterminate); });
  guarded("chie", [&] { return pm_index_json(g, list, opts); });
  guarded("l", [&] { return l_json(g, list, opts, &indeterminate); });
  guarded("lm", [&] {
    auto r = frumious_bounded(g, list, opts.tmax, opts.threads, opts.node_limit);
    json table = json::array();
    for (size_t i = 0; i < r.table.size(); ++i) {
      json e = lm_entry_json(r.table[i]);
      e["matching"] = i;
      table.push_back(e);
      if (static_cast<int>(i) == r.witness_matching) break;  // sequential scan stopped here
    }
    if (r.indeterminate) indeterminate = true;
    return json{{"tmax", opts.tmax}, {"table", table}};
  });
  guarded("frumious", [&] {
    auto r = frumious_bounded(g, list, opts.tmax, opts.threads, opts.node_limit);
    json out;
    out["tmax"] = r.t_max;
    if (r.witness_matching >= 0) {
      out["verdict"] = "not-frumious";
      out["witness_matching"] = r.witness_matching;
      out["witness_t"] = r.witness.t;
      out["witness_coloring"] = coloring_json(r.witness.coloring);
      out["witness_matching_edges"] = edge_ids_json(list[r.witness_matching].edges);
    } else if (r.frumious_up_to) {
      out["verdict"] = "frumious-up-to";
      out["matchings_probed"] = list.size();
    } else {
      out["verdict"] = "indeterminate";
      indeterminate = true;
    }
    return out;
  });
  guarded("scc", [&] { return scc_json(g, opts); });
  guarded("cdc", [&] { return cdc_json(g, list, opts); });
  guarded("fan-raspaud", [&] { return fan_raspaud_json(list); });
  guarded("sp", [&] { return sp_json(g, opts, &indeterminate); });

  record["timings_ms"] = timings;
  if (indeterminate) record["indeterminate"] = true;
  return record;
}

namespace {

CubicMultigraph record_graph(const json& record) {
  if (record.contains("graph6")) return parse_graph6(record["graph6"].get<std::string>());
  if (record.contains("sparse6")) return parse_graph6(record["sparse6"].get<std::string>());
  throw ContractViolation("record carries no graph");
}

bool is_matching_of(const CubicMultigraph& g, const EdgeBits& edges) {
  std::vector<int> deg(g.n(), 0);
  for (int id = edges.first(); id >= 0; id = edges.next(id)) {
    if (id >= g.m()) return false;
    ++deg[g.edge(id).u];
    ++deg[g.edge(id).v];
  }
  for (int v = 0; v < g.n(); ++v)
    if (deg[v] != 1) return false;
  return true;
}

bool verify_lattice_node(const json& node, std::string* error) {
  CubicMultigraph g = parse_edge_list_text(node.at("graph").get<std::string>());
  std::string kind = node.at("kind").get<std::string>();
  auto fail = [&](const std::string& msg) {
    *error = "lattice certificate: " + msg;
    return false;
  };
  if (kind == "bipartite") return is_bipartite(g) ? true : fail("leaf is not bipartite");
  if (kind == "petersen") return is_petersen(g) ? true : fail("leaf is not petersen");
  if (kind == "bridge") return !bridges(g).empty() ? true : fail("leaf has no bridge");
  if (kind == "brick-non-petersen") {
    if (is_petersen(g)) return fail("brick leaf is petersen");
    if (!find_two_cuts(g).empty()) return fail("brick leaf has a 2-cut");
    return true;
  }
  const json& children = node.at("children");
  if (kind == "component-split") {
    if (components(g).size() != children.size()) return fail("component count mismatch");
  } else {
    std::vector<int> cut = node.at("cut").get<std::vector<int>>();
    EdgeCut ec;
    if (!classify_cut(g, cut, &ec)) return fail("recorded cut is not a cut");
    std::pair<CubicMultigraph, CubicMultigraph> parts =
        (kind == "2-cut-split") ? two_edge_reduction(g, ec) : three_edge_reduction(g, ec);
    if (children.size() != 2) return fail("split must have two children");
    std::string a = children[0].at("graph").get<std::string>();
    std::string b = children[1].at("graph").get<std::string>();
    if (a != to_edge_list_text(parts.first) || b != to_edge_list_text(parts.second))
      return fail("reduction children do not match");
  }
  for (const json& c : children)
    if (!verify_lattice_node(c, error)) return false;
  return true;
}

}  // namespace

bool verify_record(const json& record, std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  CubicMultigraph g = record_graph(record);
  if (record.at("digest").get<std::string>() != canonical_digest(g))
    return fail("digest mismatch");

  if (record.contains("chi") && record["chi"].contains("coloring")) {
    int k = record["chi"]["value"].get<int>();
    auto c = coloring_from_json(record["chi"]["coloring"], k);
    if (!validate_coloring(g, c)) return fail("chi colouring invalid");
    if (record["chi"]["class"] == "I" && k != g.delta()) return fail("class I but k != delta");
  }
  if (record.contains("chie") && record["chie"].contains("witness")) {
    EdgeBits covered;
    int count = 0;
    for (const auto& m : record["chie"]["witness"]) {
      EdgeBits bits = EdgeBits::of(m.get<std::vector<int>>());
      if (!is_matching_of(g, bits)) return fail("chie witness member is not a perfect matching");
      covered |= bits;
      ++count;
    }
    if (covered != EdgeBits::all(g.m())) return fail("chie witness does not cover");
    if (count != record["chie"]["value"].get<int>()) return fail("chie witness size mismatch");
  }
  if (record.contains("l")) {
    const json& l = record["l"];
    if (l.contains("verdict") && l["verdict"] == "finite") {
      CubicMultigraph host = g;
      for (const auto& m : l["witness_matchings"]) {
        EdgeBits bits = EdgeBits::of(m.get<std::vector<int>>());
        if (!is_matching_of(g, bits)) return fail("l witness member is not a perfect matching");
        host = host.with_added_edges(bits);
      }
      auto c = coloring_from_json(l["coloring"], l["k"].get<int>() + 3);
      if (!validate_coloring(host, c)) return fail("l witness colouring invalid");
    }
    if (l.contains("verdict") && l["verdict"] == "infinite") {
      if (!verify_lattice_node(l["certificate"], error ? error : nullptr)) return false;
      std::string root_text = l["certificate"]["graph"].get<std::string>();
      if (root_text != to_edge_list_text(g)) return fail("certificate root is a different graph");
    }
  }
  if (record.contains("frumious") && record["frumious"].contains("witness_coloring")) {
    EdgeBits bits =
        EdgeBits::of(record["frumious"]["witness_matching_edges"].get<std::vector<int>>());
    if (!is_matching_of(g, bits)) return fail("frumious witness is not a perfect matching");
    int t = record["frumious"]["witness_t"].get<int>();
    CubicMultigraph host = g;
    for (int i = 0; i < t; ++i) host = host.with_added_edges(bits);
    auto c = coloring_from_json(record["frumious"]["witness_coloring"], t + 3);
    if (!validate_coloring(host, c)) return fail("frumious witness colouring invalid");
  }
  if (record.contains("scc") && record["scc"].contains("cover")) {
    CycleCover cover;
    for (const auto& cyc : record["scc"]["cover"])
      cover.cycles.push_back(EdgeBits::of(cyc.get<std::vector<int>>()));
    if (!validate_cover(g, cover)) return fail("scc cover invalid");
    if (cover.length() != record["scc"]["length"].get<int>()) return fail("scc length mismatch");
  }
  if (record.contains("cdc") && record["cdc"].contains("cycles")) {
    std::vector<EdgeBits> family;
    for (const auto& cyc : record["cdc"]["cycles"])
      family.push_back(EdgeBits::of(cyc.get<std::vector<int>>()));
    if (!is_cycle_double_cover(g, family)) return fail("cdc family invalid");
  }
  if (record.contains("fan-raspaud") && !record["fan-raspaud"]["triple"].is_null()) {
    EdgeBits inter = EdgeBits::all(g.m());
    for (const auto& m : record["fan-raspaud"]["matchings"]) {
      EdgeBits bits = EdgeBits::of(m.get<std::vector<int>>());
      if (!is_matching_of(g, bits)) return fail("fan-raspaud member is not a perfect matching");
      inter &= bits;
    }
    if (inter.any()) return fail("fan-raspaud triple intersection not empty");
  }
  if (record.contains("sp")) {
    for (const auto& e : record["sp"]["sp"]) {
      if (!e.contains("coloring")) continue;
      int t = e["t"].get<int>();
      auto c = coloring_from_json(e["coloring"], 3 * t);
      if (!validate_coloring(g.scaled(t), c)) return fail("sp witness colouring invalid");
    }
    for (const auto& e : record["sp"]["sp2"]) {
      if (!e.contains("coloring")) continue;
      int t = e["t"].get<int>();
      MatchingList list = enumerate_perfect_matchings(g);
      CubicMultigraph host = g;
      for (int idx : e["factors"].get<std::vector<int>>())
        host = host.with_added_edges(EdgeBits::all(g.m()) & ~list[idx].edges);
      auto c = coloring_from_json(e["coloring"], 2 * t + 3);
      if (!validate_coloring(host, c)) return fail("sp2 witness colouring invalid");
    }
  }
  if (record.contains("lm")) {
    for (const auto& e : record["lm"]["table"]) {
      if (!e.contains("coloring")) continue;
      // entry index refers to the canonical matching list of g
      MatchingList list = enumerate_perfect_matchings(g);
      int idx = e["matching"].get<int>();
      int t = e["t"].get<int>();
      CubicMultigraph host = g;
      for (int i = 0; i < t; ++i) host = host.with_added_edges(list[idx].edges);
      auto c = coloring_from_json(e["coloring"], t + 3);
      if (!validate_coloring(host, c)) return fail("lm witness colouring invalid");
    }
  }
  return true;
}

std::string csv_header() {
  return "n,m,digest,girth,cyclic_connectivity,chi,chie,l,frumious,scc";
}

std::string record_to_csv(const json& record) {
  std::ostringstream os;
  auto field = [&record](const char* a, const char* b) -> std::string {
    if (!record.contains(a)) return "";
    const json& j = record[a];
    if (!j.contains(b)) return "";
    return j[b].is_string() ? j[b].get<std::string>() : j[b].dump();
  };
  os << record["n"] << ',' << record["m"] << ',' << record["digest"].get<std::string>() << ',';
  os << (record.contains("girth") && !record["girth"].is_null() ? record["girth"].dump() : "");
  os << ',';
  if (record.contains("info") && record["info"].contains("cyclic_connectivity"))
    os << record["info"]["cyclic_connectivity"]["value"];
  os << ',' << field("chi", "value") << ',';
  if (record.contains("chie")) {
    if (record["chie"].contains("value"))
      os << record["chie"]["value"];
    else if (record["chie"].contains("greater_than_cap"))
      os << ">" << record["chie"]["cap"];
    else if (record["chie"].contains("infinite"))
      os << "inf";
  }
  os << ',';
  if (record.contains("l")) {
    const json& l = record["l"];
    if (l.contains("verdict")) {
      std::string v = l["verdict"].get<std::string>();
      if (v == "finite")
        os << l["k"];
      else if (v == "at_least")
        os << ">=" << l["k"];
      else
        os << v;
    }
  }
  os << ',' << field("frumious", "verdict") << ',' << field("scc", "length");
  return os.str();
}

}  // namespace snark
