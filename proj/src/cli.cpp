#include "gcat/cli.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "gcat/certify.hpp"
#include "gcat/corpus.hpp"
#include "gcat/error.hpp"
#include "gcat/fca.hpp"
#include "gcat/fibration.hpp"
#include "gcat/io.hpp"

namespace gcat::cli {

namespace {

using io::json;

int code(Answer a) {
  switch (a) {
    case Answer::Yes: return 0;
    case Answer::No: return 1;
    case Answer::Unknown: return 2;
  }
  return 2;
}

std::string simplex_str(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

std::string invariants_str(const AbelianInvariants& h) {
  std::string out;
  if (h.rank > 0) out = "Z^" + std::to_string(h.rank);
  for (auto t : h.torsion) out += (out.empty() ? "" : " + ") + std::string("Z/") + std::to_string(t);
  return out.empty() ? "0" : out;
}

io::Workspace workspace_for(const std::string& file) {
  io::Workspace ws;
  auto dir = std::filesystem::path(file).parent_path();
  ws.add_directory(dir.empty() ? std::filesystem::path(".") : dir);
  return ws;
}

SimplicialComplex load_complex(const std::string& file) { return io::complex_from_json(io::read_json_file(file)); }

void print_verdict_trace(std::ostream& out, const Verdict& v, const std::string& indent) {
  for (const auto& t : v.trace) out << indent << t << "\n";
}

void append_facts(const std::string& path, const FactStore& s) {
  std::ofstream f(path, std::ios::app);
  if (!f) throw MalformedInput("cannot write " + path);
  io::write_facts(f, s);
}

// covers on a complex other than the input embed it, so the output reloads
json witness_json(const VertexCover& c, const SimplicialComplex& input) {
  auto j = io::to_json(c);
  if (!(c.complex == input)) j["complex"] = io::to_json(c.complex);
  return j;
}

struct Globals {
  int budget = 200;
  long long max_cosets = 10000;
  unsigned seed = 0;
  Budget make() const { return Budget{max_cosets, budget}; }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"cat_G bounds, covers, FCA checks and vanishing certificates for finite simplicial complexes", "gcat"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--budget", g.budget, "Tietze move budget")->capture_default_str();
  app.add_option("--max-cosets", g.max_cosets, "coset table limit")->capture_default_str();
  app.add_option("--seed", g.seed, "accepted for scripting; every algorithm here is deterministic");

  int result = 0;
  std::string file, file2, cls = "amenable", strategy = "greedy", goal, emit;
  std::vector<std::string> files, facts;
  int n = 1, simplify = -1, basepoint = 0, layers = 3, dim = 0, exact_cap = 12, rounds = 64;
  std::string name, out_dir = "corpus", fibre_cover, base_cover;
  std::vector<int> basepoints;

  auto* validate = app.add_subcommand("validate", "check complex invariants");
  validate->add_option("file", file)->required();
  validate->callback([&] {
    auto x = load_complex(file);
    out << "valid " << x.name() << ": " << x.vertex_count() << " vertices, dim " << x.dim() << ", f-vector (";
    auto fv = x.f_vector();
    for (std::size_t i = 0; i < fv.size(); ++i) out << (i ? ", " : "") << fv[i];
    out << "), chi " << euler_characteristic(x) << "\n";
  });

  auto* chi = app.add_subcommand("chi", "Euler characteristic");
  chi->add_option("file", file)->required();
  chi->callback([&] { out << euler_characteristic(load_complex(file)) << "\n"; });

  auto* subdivide = app.add_subcommand("subdivide", "iterated barycentric subdivision");
  subdivide->add_option("file", file)->required();
  subdivide->add_option("-n", n, "number of subdivisions")->capture_default_str()->check(CLI::NonNegativeNumber);
  subdivide->callback([&] {
    auto x = load_complex(file);
    auto y = iterated_subdivision(x, n);
    out << io::dump(io::to_json(y.renamed(n == 1 ? x.name() + "_sd" : x.name() + "_sd" + std::to_string(n))));
  });

  auto* pi1 = app.add_subcommand("pi1", "edge-path presentation");
  pi1->add_option("file", file)->required();
  pi1->add_option("--simplify", simplify, "Tietze moves to apply");
  pi1->add_option("--basepoint", basepoint)->capture_default_str();
  pi1->callback([&] {
    auto x = load_complex(file);
    if (basepoint < 0 || basepoint >= x.vertex_count()) throw MalformedInput("basepoint out of range");
    auto p = edge_path_presentation(x, basepoint).group;
    if (simplify >= 0) p = simplify_presentation(p, simplify);
    out << "generators " << p.generator_count << "\n";
    out << "relators " << p.relators.size() << "\n";
    for (const auto& r : p.relators) out << "  " << to_string(r) << "\n";
    out << "abelianization " << invariants_str(abelianization(p)) << "\n";
  });

  auto* prod = app.add_subcommand("product", "staircase product");
  prod->add_option("a", file)->required();
  prod->add_option("b", file2)->required();
  prod->add_option("--name", name);
  prod->callback([&] {
    auto p = product(load_complex(file), load_complex(file2)).complex;
    out << io::dump(io::to_json(name.empty() ? p : p.renamed(name)));
  });

  auto* wed = app.add_subcommand("wedge", "wedge at basepoints");
  wed->add_option("files", files)->required();
  wed->add_option("--basepoints", basepoints, "one per complex, default 0");
  wed->add_option("--name", name);
  wed->callback([&] {
    std::vector<SimplicialComplex> xs;
    for (const auto& f : files) xs.push_back(load_complex(f));
    if (basepoints.empty()) basepoints.assign(xs.size(), 0);
    auto w = wedge(xs, basepoints).complex;
    out << io::dump(io::to_json(name.empty() ? w : w.renamed(name)));
  });

  auto* mt = app.add_subcommand("mapping-torus", "mapping torus of a simplicial automorphism");
  mt->add_option("map", file)->required();
  mt->add_option("--layers", layers)->capture_default_str();
  mt->add_option("--name", name);
  mt->callback([&] {
    auto ws = workspace_for(file);
    auto m = mapping_torus(io::map_from_json(io::read_json_file(file), ws), layers);
    out << io::dump(io::to_json(name.empty() ? m.complex : m.complex.renamed(name)));
  });

  auto* cover = app.add_subcommand("cover", "cover operations");
  cover->require_subcommand(1);
  auto* check = cover->add_subcommand("check", "validate a cover against a class");
  check->add_option("cover", file)->required();
  check->add_option("--class", cls)->capture_default_str();
  check->callback([&] {
    auto ws = workspace_for(file);
    auto c = io::cover_from_json(io::read_json_file(file), ws);
    auto v = validate_cover(c, GroupClass::parse(cls), g.make());
    for (std::size_t i = 0; i < v.pieces.size(); ++i) {
      out << "piece " << i << " " << simplex_str(c.pieces[i]) << ": " << to_string(v.pieces[i].answer) << "\n";
      print_verdict_trace(out, v.pieces[i], "  ");
    }
    out << "overall: " << to_string(v.overall.answer) << "\n";
    result = code(v.overall.answer);
  });

  auto* nerve = app.add_subcommand("nerve", "multiplicity and nerve of a cover");
  nerve->add_option("cover", file)->required();
  nerve->callback([&] {
    auto ws = workspace_for(file);
    auto c = io::cover_from_json(io::read_json_file(file), ws);
    auto r = multiplicity_and_nerve(c);
    out << "multiplicity " << r.multiplicity << "\n";
    out << io::dump(io::to_json(r.nerve));
  });

  auto* cat = app.add_subcommand("cat", "category bounds");
  cat->require_subcommand(1);
  auto* upper = cat->add_subcommand("upper", "upper bound with a witness cover");
  upper->add_option("file", file)->required();
  upper->add_option("--class", cls)->capture_default_str();
  upper->add_option("--strategy", strategy, "stars, greedy or exact")->capture_default_str();
  upper->add_option("--exact-cap", exact_cap, "vertex limit for exact")->capture_default_str();
  upper->add_option("--emit", emit, "append the computed fact to this facts file");
  upper->callback([&] {
    auto x = load_complex(file);
    const auto c = GroupClass::parse(cls);
    CatOptions opt;
    opt.exact_vertex_cap = exact_cap;
    auto r = cat_upper(x, c, strategy, g.make(), opt);
    out << r.bound << "\n";
    out << io::dump(witness_json(r.witness, x));
    out << "validation: " << to_string(r.validation.overall.answer) << "\n";
    for (const auto& t : r.trace) out << "  " << t << "\n";
    if (strategy == "exact") out << "minimal: " << (r.minimal ? "yes" : "not claimed") << "\n";
    if (!emit.empty() && r.validation.overall.answer == Answer::Yes) {
      FactStore s;
      s.add_cover(x.name(), r.witness, c, g.make());
      s.add_computed(make_statement("dim", {x.name(), std::to_string(x.dim())}), "dimension of " + x.name());
      append_facts(emit, s);
    }
    result = code(r.validation.overall.answer);
  });
  auto* lower = cat->add_subcommand("lower", "lower bound from the fundamental group");
  lower->add_option("file", file)->required();
  lower->add_option("--class", cls)->capture_default_str();
  lower->callback([&] {
    auto x = load_complex(file);
    auto r = cat_lower(x, GroupClass::parse(cls), g.make());
    out << r.bound << "\n";
    out << "pi1 in " << cls << ": " << to_string(r.verdict.answer) << "\n";
    print_verdict_trace(out, r.verdict, "  ");
  });

  auto* combine = app.add_subcommand("combine", "product cover for a bundle");
  combine->add_option("bundle", file)->required();
  combine->add_option("--class", cls)->capture_default_str();
  combine->add_option("--fibre-cover", fibre_cover, "default: greedy cat upper on the fibre");
  combine->add_option("--base-cover", base_cover, "default: two arcs of the base circle");
  combine->callback([&] {
    auto ws = workspace_for(file);
    auto b = io::bundle_from_json(io::read_json_file(file), ws);
    const auto c = GroupClass::parse(cls);
    auto fc = fibre_cover.empty() ? cat_upper(b.fibre, c, "exact", g.make()).witness
                                  : io::cover_from_json(io::read_json_file(fibre_cover), ws);
    auto bc = base_cover.empty() ? circle_ls_cover(b.base) : io::cover_from_json(io::read_json_file(base_cover), ws);
    auto r = combine_covers(b, fc, bc, g.make());
    auto v = validate_cover(r, c, g.make());
    out << r.size() << "\n";
    out << io::dump(witness_json(r, SimplicialComplex()));
    out << "validation: " << to_string(v.overall.answer) << "\n";
    result = code(v.overall.answer);
  });

  auto* fca = app.add_subcommand("fca", "fibre collapsing assumption");
  fca->require_subcommand(1);
  auto* fcheck = fca->add_subcommand("check", "check the FCA for a simplicial map");
  fcheck->add_option("map", file)->required();
  fcheck->add_option("--class", cls)->capture_default_str();
  fcheck->add_option("--dim", dim, "k")->required();
  fcheck->add_option("--emit", emit, "append fca and dim facts to this facts file on Yes");
  fcheck->callback([&] {
    auto ws = workspace_for(file);
    auto f = io::map_from_json(io::read_json_file(file), ws);
    const auto c = GroupClass::parse(cls);
    auto r = check_fca(f, c, dim, g.make());
    out << "simplex\tfibre vertices\tverdict\n";
    for (const auto& rep : r.reports)
      out << simplex_str(rep.target_simplex) << "\t" << rep.fibre.complex.vertex_count() << "\t"
          << to_string(rep.overall.answer) << "\n";
    out << "fca(" << f.source().name() << ", " << c.descriptor() << ", " << dim << "): " << to_string(r.verdict.answer)
        << "\n";
    if (r.reports.empty()) print_verdict_trace(out, r.verdict, "  ");
    if (!emit.empty() && r.verdict.answer == Answer::Yes) {
      FactStore s;
      s.add_computed(make_statement("fca", {f.source().name(), c.descriptor(), std::to_string(dim)}),
                     "check_fca on " + std::to_string(r.reports.size()) + " fibres of a map to " + f.target().name());
      s.add_computed(make_statement("dim", {f.source().name(), std::to_string(f.source().dim())}),
                     "dimension of " + f.source().name());
      append_facts(emit, s);
    }
    result = code(r.verdict.answer);
  });

  auto* certify = app.add_subcommand("certify", "derive a goal from facts");
  certify->add_option("--goal", goal, "statement pattern, _ for any argument")->required();
  certify->add_option("--facts", facts, "facts files (JSON lines)");
  certify->add_option("--rounds", rounds, "saturation rounds")->capture_default_str();
  certify->callback([&] {
    FactStore s;
    for (const auto& f : facts) {
      std::ifstream in(f);
      if (!in) throw MalformedInput("cannot read " + f);
      io::read_facts(in, s, workspace_for(f), g.make());
    }
    auto rep = s.saturate(SaturationBudget{rounds, 100000});
    const auto pattern = parse_statement(goal, true);
    if (!rep.contradictions.empty()) {
      out << "inconsistent facts:\n";
      for (const auto& c : rep.contradictions) out << "  " << c << "\n";
      result = 1;
      return;
    }
    auto q = s.query(pattern);
    if (q.found) {
      out << q.trace;
      result = 0;
      return;
    }
    out << "not derived: " << pattern.str() << "\n";
    for (const auto& m : q.missing) out << "  missing: " << m << "\n";
    if (!rep.complete) {
      out << "saturation stopped after " << rep.rounds << " rounds\n";
      result = 2;
    } else {
      result = 1;
    }
  });

  auto* corp = app.add_subcommand("corpus", "write the example corpus");
  corp->add_option("--out", out_dir)->capture_default_str();
  corp->callback([&] {
    for (const auto& p : write_corpus(out_dir)) out << p.string() << "\n";
  });

  if (!args.empty() && args[0].rfind("-", 0) != 0 && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "error: unknown subcommand '" << args[0] << "'\n" << app.help();
    return 3;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return 3;
  } catch (const MalformedInput& e) {
    err << "input error: " << e.what() << "\n";
    return 3;
  } catch (const UnsupportedInput& e) {
    err << "unsupported input: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return result;
}

// ---------------------------------------------------------------------------

std::vector<std::filesystem::path> write_corpus(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  std::vector<std::filesystem::path> written;
  auto write = [&](const std::string& name, const std::string& text) {
    auto p = dir / name;
    std::ofstream f(p);
    if (!f) throw MalformedInput("cannot write " + p.string());
    f << text;
    written.push_back(p);
  };
  for (const auto& x : corpus::complexes()) write(x.name() + ".json", io::dump(io::to_json(x)));
  write("hexagon.json", io::dump(io::to_json(corpus::hexagon())));

  write("hexagon_reflection.json", io::dump(io::to_json(corpus::hexagon_reflection())));
  auto t = product(corpus::circle(), corpus::circle());
  write("torus_projection.json",
        io::dump(json{{"source", "torus"}, {"target", "circle"}, {"vertex_map", t.first.vertex_map()}}));
  write("torus_bundle.json", io::dump(json{{"kind", "product"}, {"fibre", "circle"}, {"base", "circle"}, {"name", "torus"}}));
  write("klein_bundle.json", io::dump(json{{"kind", "mapping_torus"},
                                          {"automorphism", io::to_json(corpus::hexagon_reflection())},
                                          {"layers", 3},
                                          {"name", "klein"}}));
  auto s1 = corpus::circle();
  write("circle_arcs.json", io::dump(io::to_json(circle_ls_cover(s1))));
  write("circle_stars.json", io::dump(json{{"complex", io::to_json(stars_cover(s1).cover.complex)},
                                           {"pieces", stars_cover(s1).cover.pieces},
                                           {"partition", true}}));

  const auto am = GroupClass::of(ClassKind::Amenable);
  {
    FactStore s;
    s.add_cover("circle", VertexCover::make(s1, {{0, 1, 2}}, true), am);
    s.add_ls_cover("circle", circle_ls_cover(s1));
    s.assert_axiom(parse_statement("bundle(torus, circle, circle)"), "torus.json is the staircase product circle x circle");
    s.assert_axiom(parse_statement("manifold(torus, 2)"), "closed surface");
    std::ostringstream o;
    io::write_facts(o, s);
    write("torus.facts", o.str());
  }
  {
    FactStore s;
    auto hex = corpus::hexagon();
    s.add_cover("hexagon", VertexCover::make(hex, {{0, 1, 2, 3, 4, 5}}, true), am);
    s.assert_axiom(parse_statement("mapping_torus(klein, hexagon)"),
                   "klein.json is the mapping torus of the hexagon reflection");
    s.assert_axiom(parse_statement("manifold(klein, 2)"), "closed surface");
    std::ostringstream o;
    io::write_facts(o, s);
    write("klein.facts", o.str());
  }
  {
    FactStore s;
    s.assert_axiom(parse_statement("cat_upper(N, amenable, 3)"), "N closed orientable surface of genus 2; stars cover");
    s.assert_axiom(parse_statement("dim(N, 2)"), "N is a surface");
    s.assert_axiom(parse_statement("mapping_torus(M, N)"), "M fibres over the circle with fibre N and pseudo-Anosov monodromy");
    s.assert_axiom(parse_statement("manifold(M, 3)"), "M closed orientable 3-manifold");
    s.assert_axiom(parse_statement("cat_lower(M, amenable, 4)"),
                   "amenable category of a closed hyperbolic 3-manifold is 4 (external)");
    s.assert_axiom(parse_statement("simvol_positive(M)"), "closed hyperbolic manifolds have positive simplicial volume");
    std::ostringstream o;
    io::write_facts(o, s);
    write("hyperbolic_fibred.facts", o.str());
  }
  return written;
}

}  // namespace gcat::cli
