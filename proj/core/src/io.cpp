#include "mckay/io.hpp"

#include <sstream>

namespace mckay {

namespace {

const char* const kTypeColours[] = {"red", "blue", "darkgreen", "orange", "purple",
                                    "brown", "magenta", "cyan", "gray"};

const char* colour(int type) {
  return kTypeColours[static_cast<std::size_t>(type - 1) % std::size(kTypeColours)];
}

Int as_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw ParseError(where + ": expected an integer");
  return j.get<Int>();
}

IntVector as_ints(const Json& j, const std::string& where) {
  if (!j.is_array()) throw ParseError(where + ": expected an array of integers");
  IntVector out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(as_int(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw ParseError(where + ": expected an object");
  const auto it = j.find(name);
  if (it == j.end()) throw ParseError(where + ": missing field \"" + name + "\"");
  return *it;
}

Json rows_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  return rows;
}

std::string dot_id(const CosetPoint& p) { return "\"" + rep_key(p) + "\""; }

}  // namespace

std::string rep_key(const CosetPoint& p) {
  std::string s;
  for (std::size_t i = 0; i < p.rep.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.rep[i]);
  }
  return s;
}

GroupInput parse_group(const Json& j) {
  const Int n = as_int(field(j, "n", "group"), "group.n");
  if (n < 1) throw ParseError("group.n: must be at least 1");
  const auto un = static_cast<std::size_t>(n);
  const bool has_gens = j.contains("generators");
  const bool has_bprime = j.contains("bprime");
  if (has_gens == has_bprime)
    throw ParseError("group: exactly one of \"generators\" and \"bprime\" is required");

  if (has_gens) {
    const Json& gens = j["generators"];
    if (!gens.is_array()) throw ParseError("group.generators: expected an array");
    GroupSpec spec{un, {}};
    for (std::size_t g = 0; g < gens.size(); ++g) {
      const std::string where = "group.generators[" + std::to_string(g) + "]";
      spec.generators.push_back({as_int(field(gens[g], "order", where), where + ".order"),
                                 as_ints(field(gens[g], "weights", where), where + ".weights")});
    }
    LatticeEmbedding e = embedding_from_spec(spec);
    return {std::move(spec), std::move(e)};
  }

  const Json& rows = j["bprime"];
  if (!rows.is_array() || rows.size() != un)
    throw ParseError("group.bprime: expected " + std::to_string(n) + " rows");
  std::vector<IntVector> r;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    r.push_back(as_ints(rows[i], "group.bprime[" + std::to_string(i) + "]"));
    if (r.back().size() != un)
      throw ParseError("group.bprime[" + std::to_string(i) + "]: expected " +
                       std::to_string(n) + " entries");
  }
  const IntMatrix b = IntMatrix::from_rows(r);
  if (determinant(b) == 0) throw ParseError("group.bprime: matrix is singular");
  return {std::nullopt, LatticeEmbedding(b)};
}

GroupInput parse_group(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return parse_group(j);
}

TypeVector parse_type(const std::string& text) {
  TypeVector t;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    Int v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      throw ParseError("type: \"" + item + "\" is not an integer");
    }
    if (item.find_first_not_of(" \t", used) != std::string::npos)
      throw ParseError("type: \"" + item + "\" is not an integer");
    t.gamma.push_back(v);
  }
  if (t.gamma.empty()) throw ParseError("type: empty");
  return t;
}

CutInput parse_cut(const McKayQuiver& q, const Json& j) {
  CutInput out{ArrowSet(q.arrow_count()), std::nullopt};
  if (j.contains("type")) {
    out.declared_type = TypeVector{as_ints(j["type"], "cut.type")};
    if (out.declared_type->size() != static_cast<std::size_t>(q.type_count()))
      throw ParseError("cut.type: expected " + std::to_string(q.type_count()) + " entries");
  }
  const Json& arrows = field(j, "arrows", "cut");
  if (!arrows.is_array()) throw ParseError("cut.arrows: expected an array");
  for (std::size_t i = 0; i < arrows.size(); ++i) {
    const std::string where = "cut.arrows[" + std::to_string(i) + "]";
    const IntVector src = as_ints(field(arrows[i], "source", where), where + ".source");
    if (src.size() != q.dimension())
      throw ParseError(where + ".source: expected " + std::to_string(q.dimension()) + " entries");
    const Int t = as_int(field(arrows[i], "arrow_type", where), where + ".arrow_type");
    if (t < 1 || t > q.type_count())
      throw ParseError(where + ".arrow_type: must be in 1.." + std::to_string(q.type_count()));
    out.arrows.insert(q.arrow_id(q.vertex_of(src), static_cast<int>(t)));
  }
  return out;
}

Json to_json(const TypeVector& t) { return t.gamma; }

Json to_json(const LatticeEmbedding& e) {
  Json j;
  j["n"] = e.dimension();
  j["m"] = e.order();
  j["bprime"] = rows_json(e.hnf());
  return j;
}

Json to_json(const McKayQuiver& q) {
  Json j;
  j["n"] = q.dimension();
  j["m"] = q.order();
  Json vs = Json::array();
  for (const CosetPoint& p : q.vertices()) vs.push_back(p.rep);
  j["vertices"] = vs;
  Json as = Json::array();
  for (const Arrow& a : q.arrows())
    as.push_back({{"source", q.vertex(a.source).rep},
                  {"arrow_type", a.type},
                  {"target", q.vertex(a.target).rep}});
  j["arrows"] = as;
  return j;
}

Json to_json(const McKayQuiver& q, const Cut& c) {
  Json j;
  j["type"] = to_json(type_of(q, c));
  Json as = Json::array();
  for (ArrowId id : c.arrows().members()) {
    const Arrow& a = q.arrow(id);
    as.push_back({{"source", q.vertex(a.source).rep}, {"arrow_type", a.type}});
  }
  j["arrows"] = as;
  return j;
}

Json to_json(const McKayQuiver& q, const HeightFunction& h) {
  Json values = Json::object();
  for (VertexId v = 0; v < q.vertex_count(); ++v) values[rep_key(q.vertex(v))] = h.values[v];
  Json j;
  j["values"] = values;
  j["l1_values"] = h.l1_values;
  return j;
}

Json to_json(const TypeSimplexReport& r) {
  Json types = Json::array();
  for (const auto& t : r.all_types) types.push_back(t.gamma);
  Json positive = Json::array();
  for (const auto& t : r.positive_types) positive.push_back(t.gamma);
  Json j;
  j["types"] = types;
  j["positive"] = positive;
  j["hollow"] = r.hollow;
  return j;
}

Json to_json(const McKayQuiver& q, const DegreeZeroPresentation& p) {
  Json arrows = Json::array();
  for (const Arrow& a : p.quiver.arrows)
    arrows.push_back({{"source", q.vertex(a.source).rep},
                      {"arrow_type", a.type},
                      {"target", q.vertex(a.target).rep}});
  Json rels = Json::array();
  for (const CommutationRelation& r : p.relations)
    rels.push_back({{"source", q.vertex(r.source).rep}, {"i", r.i}, {"j", r.j}});
  Json j;
  j["arrows"] = arrows;
  j["relations"] = rels;
  return j;
}

Json to_json(const McKayQuiver& q, const MutationLattice& lat) {
  Json cuts = Json::array();
  for (std::size_t i = 0; i < lat.cuts.size(); ++i) {
    Json c = to_json(q, lat.cuts[i]);
    c["v"] = lat.heights[i].entries;
    cuts.push_back(c);
  }
  Json edges = Json::array();
  for (const HasseEdge& e : lat.hasse_edges) {
    Json je{{"lower", e.lower}, {"upper", e.upper}};
    je["vertex"] = e.vertex ? Json(q.vertex(*e.vertex).rep) : Json(nullptr);
    edges.push_back(je);
  }
  Json j;
  j["type"] = to_json(lat.type);
  j["cuts"] = cuts;
  j["hasse"] = edges;
  j["max_index"] = lat.max_index;
  j["min_index"] = lat.min_index;
  j["mutation_covers"] = lat.mutation_covers;
  return j;
}

std::string quiver_dot(const McKayQuiver& q) { return cut_dot(q, Cut::trusted(ArrowSet(q.arrow_count()))); }

std::string cut_dot(const McKayQuiver& q, const Cut& c) {
  std::ostringstream out;
  out << "digraph Q {\n";
  for (const CosetPoint& p : q.vertices()) out << "  " << dot_id(p) << ";\n";
  for (ArrowId id = 0; id < q.arrow_count(); ++id) {
    const Arrow& a = q.arrow(id);
    out << "  " << dot_id(q.vertex(a.source)) << " -> " << dot_id(q.vertex(a.target))
        << " [color=" << colour(a.type) << ", label=" << a.type;
    if (c.contains(id)) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string hasse_dot(const McKayQuiver& q, const MutationLattice& lat) {
  std::ostringstream out;
  out << "digraph Hasse {\n  rankdir=BT;\n";
  for (std::size_t i = 0; i < lat.cuts.size(); ++i)
    out << "  c" << i << " [label=\"" << to_string(lat.heights[i].entries) << "\"];\n";
  for (const HasseEdge& e : lat.hasse_edges) {
    out << "  c" << e.lower << " -> c" << e.upper;
    if (e.vertex) out << " [label=\"" << rep_key(q.vertex(*e.vertex)) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace mckay
