#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gcat/covers.hpp"
#include "gcat/group_classes.hpp"

namespace gcat {

/// predicate(arg, ...). Args are stored canonically: class descriptors,
/// decimal integers, rates as "p/q", names verbatim.
struct Statement {
  std::string predicate;
  std::vector<std::string> args;

  std::string str() const;
  friend auto operator<=>(const Statement&, const Statement&) = default;
};

/// Checks the predicate signature and canonicalises args. Throws MalformedInput.
Statement make_statement(std::string predicate, std::vector<std::string> args);
/// "cat_upper(torus, amenable, 2)". With `pattern`, "_" is accepted for any arg.
Statement parse_statement(const std::string& text, bool pattern = false);
bool is_known_predicate(const std::string& p);

enum class ProvenanceKind { Axiom, Computed, Derived };

struct Provenance {
  ProvenanceKind kind = ProvenanceKind::Axiom;
  /// Citation, witness description, or the rule id.
  std::string note;
  std::vector<std::size_t> premises;
  /// Computed cover facts keep their witness.
  std::optional<VertexCover> cover;
  std::optional<GroupClass> cover_class;
};

struct Fact {
  Statement statement;
  Provenance provenance;
  /// Rule steps in the shortest known derivation; 0 for leaves.
  int depth = 0;
};

struct Rule {
  std::string id;
  std::string label;
};
const std::vector<Rule>& rules();
const Rule& rule(const std::string& id);

struct SaturationBudget {
  int max_rounds = 64;
  std::size_t max_facts = 100000;
};

struct SaturationReport {
  int rounds = 0;
  std::size_t derived = 0;
  bool complete = true;
  std::vector<std::string> contradictions;
};

struct QueryResult {
  bool found = false;
  std::optional<std::size_t> fact;
  std::string trace;
  std::vector<std::string> missing;
};

class FactStore {
 public:
  /// Throws MalformedInput on an empty citation.
  std::size_t assert_axiom(const Statement& s, const std::string& citation);
  /// Computed facts other than cat_upper; cat_upper needs add_cover.
  std::size_t add_computed(const Statement& s, const std::string& witness);
  /// cat_upper(space, c, |cover|) after validate_cover says Yes; throws
  /// UnsupportedInput otherwise.
  std::size_t add_cover(const std::string& space, const VertexCover& cover, const GroupClass& c,
                        const Budget& budget = {});
  /// lscat_upper(space, |cover|) when every piece collapses; UnsupportedInput otherwise.
  std::size_t add_ls_cover(const std::string& space, const VertexCover& cover);

  SaturationReport saturate(const SaturationBudget& budget = {});
  /// Pairs of facts that cannot both hold.
  std::vector<std::string> contradictions() const;
  QueryResult query(const Statement& goal) const;

  const std::vector<Fact>& facts() const { return facts_; }
  std::optional<std::size_t> find(const Statement& s) const;
  std::string trace(std::size_t id) const;
  /// Leaf facts (axioms, computed) under a fact.
  std::vector<std::size_t> leaves(std::size_t id) const;
  bool exhausted() const { return exhausted_; }

 private:
  std::size_t add(Fact f);
  std::vector<std::size_t> with(const std::string& predicate) const;
  std::vector<std::string> explain(const Statement& goal) const;
  void render(std::size_t id, int indent, std::string& out) const;

  std::vector<Fact> facts_;
  std::map<Statement, std::size_t> index_;
  std::map<std::string, std::vector<std::size_t>> by_predicate_;
  bool exhausted_ = false;
};

/// Goal `a` follows from fact `b` without a rule: larger upper bounds,
/// smaller lower bounds, bigger classes for upper bounds and FCA, smaller
/// rates for FNCA.
bool entails(const Statement& fact, const Statement& goal);
bool matches(const Statement& fact, const Statement& pattern);

}  // namespace gcat
