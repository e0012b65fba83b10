#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "json.hpp"

#include "gcat/certify.hpp"
#include "gcat/complex.hpp"
#include "gcat/covers.hpp"
#include "gcat/fibration.hpp"

namespace gcat::io {

using nlohmann::json;

/// {"name", "vertex_count", "maximal_simplices"}.
json to_json(const SimplicialComplex& x);
/// Accepts "maximal_simplices" (face closure taken) or a complete
/// "simplices" list (checked strictly). vertex_count must match.
SimplicialComplex complex_from_json(const json& j);

/// Named complexes. Lookup order: registered, "<name>.json" in the search
/// directories, then the built-in corpus.
class Workspace {
 public:
  void add(const SimplicialComplex& x);
  void add_directory(std::filesystem::path dir);
  /// A name or an embedded complex object. Throws MalformedInput.
  SimplicialComplex resolve(const json& ref) const;
  SimplicialComplex get(const std::string& name) const;

 private:
  std::map<std::string, SimplicialComplex> named_;
  std::vector<std::filesystem::path> dirs_;
};

/// {"source": name, "target": name, "vertex_map": [...]}.
json to_json(const SimplicialMap& f);
SimplicialMap map_from_json(const json& j, const Workspace& ws);

/// {"complex": name, "pieces": [[...]], "partition": bool}.
json to_json(const VertexCover& c);
VertexCover cover_from_json(const json& j, const Workspace& ws);

/// {"kind": "product", "fibre", "base"} or
/// {"kind": "mapping_torus", "automorphism": map, "layers": 3}.
BundleData bundle_from_json(const json& j, const Workspace& ws);

json to_json(const Statement& s);
Statement statement_from_json(const json& j);
/// Axiom and computed facts only; cover witnesses are embedded with their complex.
json to_json(const Fact& f);
/// One fact per line. Computed cover facts are revalidated; derived facts are rejected.
void read_facts(std::istream& in, FactStore& store, const Workspace& ws, const Budget& budget = {});
void write_facts(std::ostream& out, const FactStore& store);

json read_json_file(const std::filesystem::path& p);
/// Pretty JSON plus a trailing newline.
std::string dump(const json& j);

}  // namespace gcat::io
