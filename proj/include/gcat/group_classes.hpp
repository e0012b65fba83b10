#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "gcat/pi1.hpp"

namespace gcat {

using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& q);
/// "p/q" or "p"; throws MalformedInput.
Rational parse_rational(const std::string& s);

enum class Rounding { LowerBound, UpperBound };

/// Natural-log growth rate, stored exactly.
struct LogRate {
  Rational value{0};
  Rounding rounding = Rounding::LowerBound;
  friend bool operator==(const LogRate&, const LogRate&) = default;
};

/// 549/500 <= log 3.
LogRate log3_lower_bound();

/// value / (2d - 1); exact, so the rounding mode just carries over.
LogRate finite_cover_rate(const LogRate& rate, int d);

enum class ClassKind { Trivial, Finite, Abelian, Amenable, Poly, SubexpBelow, Subexp, ExpBelow };

struct GroupClass {
  ClassKind kind = ClassKind::Amenable;
  /// Only meaningful for SubexpBelow and ExpBelow; strictly positive there.
  Rational rate{0};
  bool fg_closure_applied = false;

  static GroupClass of(ClassKind k) { return GroupClass{k, Rational(0), false}; }
  static GroupClass subexp_below(Rational r);
  static GroupClass exp_below(Rational r);
  /// Parses "trivial", "finite", "abelian", "amenable", "poly", "subexp",
  /// "subexp<p/q", "exp<p/q".
  static GroupClass parse(const std::string& s);

  std::string descriptor() const;
  bool has_rate() const { return kind == ClassKind::SubexpBelow || kind == ClassKind::ExpBelow; }
  /// Exp_{<d} is not closed under subgroups; everything else here is.
  bool subgroup_closed() const { return kind != ClassKind::ExpBelow; }

  friend bool operator==(const GroupClass& a, const GroupClass& b) {
    return a.kind == b.kind && (!a.has_rate() || a.rate == b.rate);
  }
};

/// Every group in a lies in b.
bool implies(const GroupClass& a, const GroupClass& b);

enum class Answer { Yes, No, Unknown };
std::string to_string(Answer a);

struct Verdict {
  Answer answer = Answer::Unknown;
  std::vector<std::string> trace;
};

struct Budget {
  std::int64_t max_cosets = 10000;
  int tietze_moves = 200;
};

/// Membership facts established for one group: it lies in every class of
/// `in` and in none of `out`.
struct GroupEvidence {
  struct Item {
    GroupClass cls;
    std::string reason;
  };
  std::vector<Item> in;
  std::vector<Item> out;
};

GroupEvidence group_evidence(const GroupPresentation& p, const Budget& budget);
Verdict decide(const GroupEvidence& e, const GroupClass& c);

Verdict classify_group(const GroupPresentation& p, const GroupClass& c, const Budget& budget = {});

/// Ambient group with the work shared by many image classifications done once.
struct AmbientGroup {
  GroupPresentation presentation;
  GroupEvidence evidence;
  SimplifiedPresentation simplified;

  static AmbientGroup make(const GroupPresentation& p, const Budget& budget);
};

/// Classifies the image of one component's group in the ambient group.
Verdict classify_image(const ComponentImage& image, const AmbientGroup& ambient,
                       const GroupClass& c, const Budget& budget = {});
Verdict classify_image(const ComponentImage& image, const GroupPresentation& ambient,
                       const GroupClass& c, const Budget& budget = {});
/// All components: Yes iff every component is Yes, No if some component is No.
Verdict classify_image(const Pi1Image& image, const GroupClass& c, const Budget& budget = {});

/// Rank of the subgroup of the free group generated by the words, via
/// Stallings folding.
int free_subgroup_rank(const std::vector<Word>& words);

/// A single relator where every generator occurs twice with opposite signs
/// and the polygon gluing has one vertex: the genus, else 0.
int surface_genus(const GroupPresentation& p);

}  // namespace gcat
