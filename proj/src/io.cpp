#include "gcat/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gcat/corpus.hpp"
#include "gcat/error.hpp"

namespace gcat::io {

namespace {

const json& field(const json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw MalformedInput(what + ": missing \"" + key + "\"");
  return j.at(key);
}

int as_int(const json& j, const std::string& what) {
  if (!j.is_number_integer()) throw MalformedInput(what + ": expected an integer");
  return j.get<int>();
}

std::vector<Simplex> simplex_list(const json& j, const std::string& what) {
  if (!j.is_array()) throw MalformedInput(what + ": expected a list of vertex lists");
  std::vector<Simplex> out;
  for (const auto& s : j) {
    if (!s.is_array()) throw MalformedInput(what + ": expected a vertex list");
    Simplex v;
    for (const auto& x : s) v.push_back(as_int(x, what));
    out.push_back(std::move(v));
  }
  return out;
}

std::string arg_text(const json& a) {
  if (a.is_string()) return a.get<std::string>();
  if (a.is_number_integer()) return std::to_string(a.get<long long>());
  throw MalformedInput("fact argument must be a string or an integer");
}

}  // namespace

json to_json(const SimplicialComplex& x) {
  json m = json::array();
  for (const auto& s : x.maximal_simplices()) m.push_back(s);
  return json{{"name", x.name()}, {"vertex_count", x.vertex_count()}, {"maximal_simplices", m}};
}

SimplicialComplex complex_from_json(const json& j) {
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "complex";
  const std::string what = "complex " + name;
  const int n = as_int(field(j, "vertex_count", what), what);
  if (j.contains("simplices")) return SimplicialComplex::from_simplices(n, simplex_list(j["simplices"], what), name);
  auto x = SimplicialComplex::from_maximal(simplex_list(field(j, "maximal_simplices", what), what), name);
  if (x.vertex_count() != n)
    throw MalformedInput(what + ": vertex_count " + std::to_string(n) + " but simplices use " +
                         std::to_string(x.vertex_count()) + " vertices");
  return x;
}

void Workspace::add(const SimplicialComplex& x) { named_[x.name()] = x; }

void Workspace::add_directory(std::filesystem::path dir) { dirs_.push_back(std::move(dir)); }

SimplicialComplex Workspace::get(const std::string& name) const {
  if (auto it = named_.find(name); it != named_.end()) return it->second;
  for (const auto& d : dirs_) {
    auto p = d / (name + ".json");
    if (std::filesystem::exists(p)) return complex_from_json(read_json_file(p));
  }
  for (const auto& x : corpus::complexes())
    if (x.name() == name) return x;
  if (name == "hexagon") return corpus::hexagon();
  throw MalformedInput("unknown complex '" + name + "'");
}

SimplicialComplex Workspace::resolve(const json& ref) const {
  if (ref.is_string()) return get(ref.get<std::string>());
  if (ref.is_object()) return complex_from_json(ref);
  throw MalformedInput("expected a complex name or object");
}

json to_json(const SimplicialMap& f) {
  return json{{"source", f.source().name()}, {"target", f.target().name()}, {"vertex_map", f.vertex_map()}};
}

SimplicialMap map_from_json(const json& j, const Workspace& ws) {
  auto source = ws.resolve(field(j, "source", "map"));
  auto target = ws.resolve(field(j, "target", "map"));
  std::vector<Vertex> vm;
  const auto& m = field(j, "vertex_map", "map");
  if (!m.is_array()) throw MalformedInput("map: vertex_map must be a list");
  for (const auto& v : m) vm.push_back(as_int(v, "map"));
  return SimplicialMap(source, target, std::move(vm));
}

json to_json(const VertexCover& c) {
  return json{{"complex", c.complex.name()}, {"pieces", c.pieces}, {"partition", c.partition}};
}

VertexCover cover_from_json(const json& j, const Workspace& ws) {
  auto x = ws.resolve(field(j, "complex", "cover"));
  const bool partition = j.contains("partition") && j["partition"].is_boolean() && j["partition"].get<bool>();
  return VertexCover::make(x, simplex_list(field(j, "pieces", "cover"), "cover"), partition);
}

BundleData bundle_from_json(const json& j, const Workspace& ws) {
  const auto& kind = field(j, "kind", "bundle");
  if (kind == "product") {
    auto b = product_bundle(ws.resolve(field(j, "fibre", "bundle")), ws.resolve(field(j, "base", "bundle")));
    if (j.contains("name") && j["name"].is_string()) b.total = b.total.renamed(j["name"].get<std::string>());
    return b;
  }
  if (kind == "mapping_torus") {
    auto g = map_from_json(field(j, "automorphism", "bundle"), ws);
    const int layers = j.contains("layers") ? as_int(j["layers"], "bundle") : 3;
    auto m = mapping_torus(g, layers);
    if (j.contains("name") && j["name"].is_string())
      m.complex = m.complex.renamed(j["name"].get<std::string>());
    return mapping_torus_bundle(m);
  }
  throw MalformedInput("bundle kind must be \"product\" or \"mapping_torus\"");
}

json to_json(const Statement& s) {
  json args = json::array();
  for (const auto& a : s.args) args.push_back(a);
  return json{{"predicate", s.predicate}, {"args", args}};
}

Statement statement_from_json(const json& j) {
  const auto& p = field(j, "predicate", "statement");
  if (!p.is_string()) throw MalformedInput("statement: predicate must be a string");
  const auto& a = field(j, "args", "statement");
  if (!a.is_array()) throw MalformedInput("statement: args must be a list");
  std::vector<std::string> args;
  for (const auto& x : a) args.push_back(arg_text(x));
  return make_statement(p.get<std::string>(), std::move(args));
}

json to_json(const Fact& f) {
  json prov;
  switch (f.provenance.kind) {
    case ProvenanceKind::Axiom: prov = {{"kind", "axiom"}, {"citation", f.provenance.note}}; break;
    case ProvenanceKind::Computed:
      prov = {{"kind", "computed"}, {"witness", f.provenance.note}};
      if (f.provenance.cover) {
        auto c = to_json(*f.provenance.cover);
        c["complex"] = to_json(f.provenance.cover->complex);
        prov["cover"] = c;
      }
      if (f.provenance.cover_class) prov["class"] = f.provenance.cover_class->descriptor();
      break;
    case ProvenanceKind::Derived: throw MalformedInput("derived facts are not written; they are re-derived");
  }
  return json{{"statement", to_json(f.statement)}, {"provenance", prov}};
}

void read_facts(std::istream& in, FactStore& store, const Workspace& ws, const Budget& budget) {
  std::string line;
  int n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = json::parse(line);
      auto s = statement_from_json(field(j, "statement", "fact"));
      const auto& p = field(j, "provenance", "fact");
      const auto kind = field(p, "kind", "provenance");
      if (kind == "axiom") {
        const auto& c = field(p, "citation", "provenance");
        if (!c.is_string()) throw MalformedInput("citation must be a string");
        store.assert_axiom(s, c.get<std::string>());
      } else if (kind == "computed") {
        if (s.predicate == "cat_upper" || s.predicate == "lscat_upper") {
          auto cover = cover_from_json(field(p, "cover", "computed " + s.predicate), ws);
          const auto& space = s.args[0];
          std::size_t id = 0;
          if (s.predicate == "cat_upper") id = store.add_cover(space, cover, GroupClass::parse(s.args[1]), budget);
          else id = store.add_ls_cover(space, cover);
          if (!(store.facts()[id].statement == s))
            throw MalformedInput("witness proves " + store.facts()[id].statement.str() + ", not " + s.str());
        } else {
          const auto& w = field(p, "witness", "provenance");
          store.add_computed(s, w.is_string() ? w.get<std::string>() : w.dump());
        }
      } else {
        throw MalformedInput("provenance kind must be \"axiom\" or \"computed\"");
      }
    } catch (const json::exception& e) {
      throw MalformedInput("facts line " + std::to_string(n) + ": " + e.what());
    } catch (const MalformedInput& e) {
      throw MalformedInput("facts line " + std::to_string(n) + ": " + e.what());
    }
  }
}

void write_facts(std::ostream& out, const FactStore& store) {
  for (const auto& f : store.facts())
    if (f.provenance.kind != ProvenanceKind::Derived) out << to_json(f).dump() << "\n";
}

json read_json_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw MalformedInput("cannot read " + p.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw MalformedInput(p.string() + ": " + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace gcat::io
