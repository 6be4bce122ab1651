#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "agband/groupoid.hpp"

namespace agband {

// A groupoid word: a single-letter variable or the product of two words.
class Term {
 public:
  static Term variable(char name);
  static Term product(Term left, Term right);

  bool is_variable() const noexcept { return children_ == nullptr; }
  char name() const;
  const Term& left() const;
  const Term& right() const;

  friend bool operator==(const Term& a, const Term& b);

 private:
  Term() = default;

  char name_ = 0;
  std::shared_ptr<const std::pair<Term, Term>> children_;
};

struct Identity {
  Term lhs;
  Term rhs;
  // Union of the variables of both sides, in first-occurrence order
  // (left side first).
  std::vector<char> variables;

  friend bool operator==(const Identity&, const Identity&) = default;
};

Identity make_identity(Term lhs, Term rhs);

// Grammar (whitespace ignored, juxtaposition is the product):
//   identity := side '=' side
//   side     := term | term term          (outer parentheses optional)
//   term     := VAR | '(' term term ')'
//   VAR      := a single ASCII letter
// Throws ParseError carrying the byte offset of the problem.
Identity parse_identity(std::string_view src);
Term parse_term(std::string_view src);

// Fully parenthesized, e.g. "((x y) z) = ((z y) x)". Re-parses to an equal
// value.
std::string to_string(const Term& t);
std::string to_string(const Identity& id);

struct VarietySpec {
  std::string name;
  std::vector<Identity> identities;
};

// Throws ArgumentError if `identities` is empty.
VarietySpec make_variety(std::string name, std::vector<Identity> identities);

namespace presets {
const VarietySpec& ag();      // (xy)z = (zy)x
const VarietySpec& band();    // AG + x = xx
const VarietySpec& aragb();   // BAND + (xy)x = y
const VarietySpec& medial();  // (xy)(zw) = (xz)(yw)
const VarietySpec& evans();   // (xy)(yz) = y
}  // namespace presets

std::vector<std::string> preset_names();
std::optional<VarietySpec> find_preset(std::string_view name);

// A preset name (case-insensitive) or one or more identities separated by
// ';'. Inline identities produce a variety named after the source text.
VarietySpec variety_from_string(std::string_view text);

using Environment = std::map<char, Index>;

// Throws EvaluationError for an unbound variable and BoundsError for a
// value outside the groupoid.
Index eval_term(const Term& t, const FiniteGroupoid& g, const Environment& env);

// Postfix form of an identity over variable slots, for the exhaustive loops.
class CompiledIdentity {
 public:
  explicit CompiledIdentity(Identity id);

  const Identity& identity() const noexcept { return identity_; }
  std::size_t arity() const noexcept { return identity_.variables.size(); }

  // `values[k]` is the value of identity().variables[k].
  std::pair<Index, Index> evaluate(TableView table,
                                   std::span<const Index> values) const;
  bool holds_at(TableView table, std::span<const Index> values) const {
    auto [l, r] = evaluate(table, values);
    return l == r;
  }
  // Exhaustive check with early exit.
  bool holds(TableView table) const;

 private:
  static constexpr int kMultiply = -1;

  Index run(const std::vector<int>& program, TableView table,
            std::span<const Index> values) const;

  Identity identity_;
  std::vector<int> lhs_program_;
  std::vector<int> rhs_program_;
};

struct IdentityReport {
  bool holds = true;
  // First failing assignment in lexicographic order, values listed in the
  // identity's variable order.
  std::optional<std::vector<Index>> counterexample;
  Index lhs_value = 0;
  Index rhs_value = 0;
  std::uint64_t assignments_checked = 0;
};

IdentityReport check_identity(const FiniteGroupoid& g, const Identity& id);

struct VarietyReport {
  std::string variety;
  std::vector<std::pair<Identity, IdentityReport>> results;

  bool holds() const noexcept;
  // First identity that fails, if any.
  const std::pair<Identity, IdentityReport>* first_failure() const noexcept;
};

VarietyReport check_variety(const FiniteGroupoid& g, const VarietySpec& v);

// Structural equality after renaming variables in first-occurrence order,
// allowing the two sides to be swapped.
bool same_law(const Identity& a, const Identity& b);

// True when the variety contains (xy)x = y or its mirror x(yx) = y. On a
// finite carrier either law makes every row and column a permutation.
bool forces_cancellation(const VarietySpec& v);

// True when the variety contains x = xx.
bool forces_idempotency(const VarietySpec& v);

}  // namespace agband
