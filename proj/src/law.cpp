#include "agband/law.hpp"

#include <algorithm>
#include <cctype>

#include "agband/errors.hpp"

namespace agband {

// ---------------------------------------------------------------- Term

Term Term::variable(char name) {
  if (!std::isalpha(static_cast<unsigned char>(name))) {
    throw ArgumentError(std::string("variable name must be a letter, got '") +
                        name + "'");
  }
  Term t;
  t.name_ = name;
  return t;
}

Term Term::product(Term left, Term right) {
  Term t;
  t.children_ = std::make_shared<const std::pair<Term, Term>>(std::move(left),
                                                             std::move(right));
  return t;
}

char Term::name() const {
  if (!is_variable()) throw ArgumentError("compound term has no name");
  return name_;
}

const Term& Term::left() const {
  if (is_variable()) throw ArgumentError("variable has no left factor");
  return children_->first;
}

const Term& Term::right() const {
  if (is_variable()) throw ArgumentError("variable has no right factor");
  return children_->second;
}

bool operator==(const Term& a, const Term& b) {
  if (a.is_variable() || b.is_variable()) {
    return a.is_variable() && b.is_variable() && a.name_ == b.name_;
  }
  if (a.children_ == b.children_) return true;
  return a.left() == b.left() && a.right() == b.right();
}

namespace {

void collect_variables(const Term& t, std::vector<char>& out) {
  if (t.is_variable()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
      out.push_back(t.name());
    }
    return;
  }
  collect_variables(t.left(), out);
  collect_variables(t.right(), out);
}

}  // namespace

Identity make_identity(Term lhs, Term rhs) {
  std::vector<char> vars;
  collect_variables(lhs, vars);
  collect_variables(rhs, vars);
  return Identity{std::move(lhs), std::move(rhs), std::move(vars)};
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Identity identity() {
    Term lhs = side();
    skip_space();
    if (at_end() || peek() != '=') fail("expected '='");
    ++pos_;
    Term rhs = side();
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    return make_identity(std::move(lhs), std::move(rhs));
  }

  Term lone_side() {
    Term t = side();
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
    return t;
  }

 private:
  // One term, or two juxtaposed terms with the outer parentheses dropped.
  Term side() {
    Term first = term();
    skip_space();
    if (at_end() || peek() == '=') return first;
    Term second = term();
    skip_space();
    if (!at_end() && peek() != '=') {
      fail("too many factors; parenthesize products of more than two terms");
    }
    return Term::product(std::move(first), std::move(second));
  }

  Term term() {
    skip_space();
    if (at_end()) fail("unexpected end of input, expected a term");
    const char c = peek();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      ++pos_;
      if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                        peek() == '_')) {
        fail("variable names are single letters");
      }
      return Term::variable(c);
    }
    if (c == '(') {
      ++pos_;
      Term left = term();
      skip_space();
      if (!at_end() && peek() == ')') {
        fail("a parenthesized term needs exactly two factors");
      }
      Term right = term();
      skip_space();
      if (at_end()) fail("unexpected end of input, expected ')'");
      if (peek() != ')') {
        fail("a parenthesized term needs exactly two factors");
      }
      ++pos_;
      return Term::product(std::move(left), std::move(right));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
      ++pos_;
    }
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return src_[pos_]; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

}  // namespace

Identity parse_identity(std::string_view src) { return Parser(src).identity(); }

Term parse_term(std::string_view src) { return Parser(src).lone_side(); }

std::string to_string(const Term& t) {
  if (t.is_variable()) return std::string(1, t.name());
  return "(" + to_string(t.left()) + " " + to_string(t.right()) + ")";
}

std::string to_string(const Identity& id) {
  return to_string(id.lhs) + " = " + to_string(id.rhs);
}

// ---------------------------------------------------------------- varieties

VarietySpec make_variety(std::string name, std::vector<Identity> identities) {
  if (identities.empty()) {
    throw ArgumentError("variety '" + name + "' has no identities");
  }
  return VarietySpec{std::move(name), std::move(identities)};
}

namespace presets {

namespace {
const Identity& left_invertive() {
  static const Identity id = parse_identity("((x y) z) = ((z y) x)");
  return id;
}
const Identity& idempotent() {
  static const Identity id = parse_identity("x = (x x)");
  return id;
}
const Identity& anti_rectangular() {
  static const Identity id = parse_identity("((x y) x) = y");
  return id;
}
}  // namespace

const VarietySpec& ag() {
  static const VarietySpec v = make_variety("AG", {left_invertive()});
  return v;
}

const VarietySpec& band() {
  static const VarietySpec v =
      make_variety("BAND", {left_invertive(), idempotent()});
  return v;
}

const VarietySpec& aragb() {
  static const VarietySpec v = make_variety(
      "ARAGB", {left_invertive(), idempotent(), anti_rectangular()});
  return v;
}

const VarietySpec& medial() {
  static const VarietySpec v =
      make_variety("MEDIAL", {parse_identity("((x y)(z w)) = ((x z)(y w))")});
  return v;
}

const VarietySpec& evans() {
  static const VarietySpec v =
      make_variety("EVANS", {parse_identity("((x y)(y z)) = y")});
  return v;
}

}  // namespace presets

std::vector<std::string> preset_names() {
  return {"AG", "BAND", "ARAGB", "MEDIAL", "EVANS"};
}

std::optional<VarietySpec> find_preset(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (upper == "AG") return presets::ag();
  if (upper == "BAND") return presets::band();
  if (upper == "ARAGB") return presets::aragb();
  if (upper == "MEDIAL") return presets::medial();
  if (upper == "EVANS") return presets::evans();
  return std::nullopt;
}

VarietySpec variety_from_string(std::string_view text) {
  if (auto preset = find_preset(text)) return *preset;
  std::vector<Identity> identities;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    if (piece.find_first_not_of(" \t\n") != std::string_view::npos) {
      try {
        identities.push_back(parse_identity(piece));
      } catch (const ParseError& e) {
        throw ParseError(std::string("in '") + std::string(piece) +
                             "': " + e.what(),
                         start + e.offset());
      }
    }
    start = end + 1;
  }
  return make_variety(std::string(text), std::move(identities));
}

// ---------------------------------------------------------------- evaluation

Index eval_term(const Term& t, const FiniteGroupoid& g, const Environment& env) {
  if (t.is_variable()) {
    auto it = env.find(t.name());
    if (it == env.end()) {
      throw EvaluationError(std::string("unbound variable '") + t.name() + "'");
    }
    if (it->second >= g.order()) {
      throw BoundsError(std::string("variable '") + t.name() +
                        "' bound outside the groupoid");
    }
    return it->second;
  }
  return g(eval_term(t.left(), g, env), eval_term(t.right(), g, env));
}

namespace {

void compile(const Term& t, const std::vector<char>& vars,
             std::vector<int>& out) {
  if (t.is_variable()) {
    auto slot = std::find(vars.begin(), vars.end(), t.name()) - vars.begin();
    out.push_back(static_cast<int>(slot));
    return;
  }
  compile(t.left(), vars, out);
  compile(t.right(), vars, out);
  out.push_back(-1);
}

// Odometer over [0, n)^k, last slot fastest, i.e. lexicographic order.
bool advance(std::vector<Index>& values, Index n) {
  for (std::size_t k = values.size(); k-- > 0;) {
    if (++values[k] < n) return true;
    values[k] = 0;
  }
  return false;
}

}  // namespace

CompiledIdentity::CompiledIdentity(Identity id) : identity_(std::move(id)) {
  compile(identity_.lhs, identity_.variables, lhs_program_);
  compile(identity_.rhs, identity_.variables, rhs_program_);
  if (lhs_program_.size() > 127 || rhs_program_.size() > 127) {
    throw ResourceError("term too large for compiled evaluation");
  }
}

Index CompiledIdentity::run(const std::vector<int>& program, TableView table,
                            std::span<const Index> values) const {
  // Terms in the laws of interest are shallow; a fixed stack suffices and
  // keeps the hot loop allocation-free.
  Index stack[64];
  std::size_t top = 0;
  for (int op : program) {
    if (op == kMultiply) {
      const Index r = stack[--top];
      const Index l = stack[--top];
      stack[top++] = table.at(l, r);
    } else {
      stack[top++] = values[op];
    }
  }
  return stack[0];
}

std::pair<Index, Index> CompiledIdentity::evaluate(
    TableView table, std::span<const Index> values) const {
  return {run(lhs_program_, table, values), run(rhs_program_, table, values)};
}

bool CompiledIdentity::holds(TableView table) const {
  std::vector<Index> values(arity(), 0);
  do {
    if (!holds_at(table, values)) return false;
  } while (advance(values, static_cast<Index>(table.order)));
  return true;
}

IdentityReport check_identity(const FiniteGroupoid& g, const Identity& id) {
  const CompiledIdentity compiled(id);
  const auto table = g.view();
  IdentityReport report;
  std::vector<Index> values(compiled.arity(), 0);
  do {
    ++report.assignments_checked;
    auto [l, r] = compiled.evaluate(table, values);
    if (l != r) {
      report.holds = false;
      report.counterexample = values;
      report.lhs_value = l;
      report.rhs_value = r;
      break;
    }
  } while (advance(values, static_cast<Index>(g.order())));
  return report;
}

bool VarietyReport::holds() const noexcept { return first_failure() == nullptr; }

const std::pair<Identity, IdentityReport>* VarietyReport::first_failure()
    const noexcept {
  for (const auto& entry : results) {
    if (!entry.second.holds) return &entry;
  }
  return nullptr;
}

VarietyReport check_variety(const FiniteGroupoid& g, const VarietySpec& v) {
  VarietyReport report{v.name, {}};
  for (const auto& id : v.identities) {
    report.results.emplace_back(id, check_identity(g, id));
  }
  return report;
}

// ---------------------------------------------------------------- law shapes

namespace {

Term rename(const Term& t, const std::vector<char>& order) {
  if (t.is_variable()) {
    auto slot = std::find(order.begin(), order.end(), t.name()) - order.begin();
    return Term::variable(static_cast<char>('a' + slot));
  }
  return Term::product(rename(t.left(), order), rename(t.right(), order));
}

Identity normalized(const Term& lhs, const Term& rhs) {
  std::vector<char> order;
  collect_variables(lhs, order);
  collect_variables(rhs, order);
  return make_identity(rename(lhs, order), rename(rhs, order));
}

bool contains_law(const VarietySpec& v, const Identity& law) {
  return std::any_of(v.identities.begin(), v.identities.end(),
                     [&](const Identity& id) { return same_law(id, law); });
}

}  // namespace

bool same_law(const Identity& a, const Identity& b) {
  const Identity na = normalized(a.lhs, a.rhs);
  return na == normalized(b.lhs, b.rhs) || na == normalized(b.rhs, b.lhs);
}

bool forces_cancellation(const VarietySpec& v) {
  static const Identity law = parse_identity("(x y) x = y");
  static const Identity mirror = parse_identity("x (y x) = y");
  return contains_law(v, law) || contains_law(v, mirror);
}

bool forces_idempotency(const VarietySpec& v) {
  static const Identity law = parse_identity("x = (x x)");
  return contains_law(v, law);
}

}  // namespace agband
