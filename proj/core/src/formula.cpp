#include "teamenum/formula.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <utility>

namespace teamenum {

namespace {

enum class TokKind { Ident, Bang, Amp, Semi, Comma, Colon, LParen, RParen, Zero, One, Or, End };

struct Token {
  TokKind kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  Token next() {
    skip_space();
    int line = line_, column = column_;
    if (pos_ >= text_.size()) return {TokKind::End, "", line, column};
    char c = text_[pos_];
    if (c == '!') return advance({TokKind::Bang, "!", line, column});
    if (c == '&') return advance({TokKind::Amp, "&", line, column});
    if (c == ';') return advance({TokKind::Semi, ";", line, column});
    if (c == ',') return advance({TokKind::Comma, ",", line, column});
    if (c == ':') return advance({TokKind::Colon, ":", line, column});
    if (c == '(') return advance({TokKind::LParen, "(", line, column});
    if (c == ')') return advance({TokKind::RParen, ")", line, column});
    if (c == '0') return advance({TokKind::Zero, "0", line, column});
    if (c == '1') return advance({TokKind::One, "1", line, column});
    if (c == '\\' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
      step();
      step();
      return {TokKind::Or, "\\/", line, column};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ident += text_[pos_];
        step();
      }
      return {TokKind::Ident, ident, line, column};
    }
    throw ParseError(line, column, std::string("unknown token '") + c + "'");
  }

 private:
  Token advance(Token t) {
    step();
    return t;
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      step();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

}  // namespace

class Parser {
 public:
  explicit Parser(std::string_view text) : lexer_(text) { shift(); }

  std::vector<Formula> parse_disjuncts() {
    parse_header();
    std::vector<ConjunctNodes> conjuncts;
    conjuncts.push_back(parse_conjunction());
    while (cur_.kind == TokKind::Or) {
      shift();
      conjuncts.push_back(parse_conjunction());
    }
    if (cur_.kind != TokKind::End)
      throw ParseError(cur_.line, cur_.column,
                       "unexpected '" + cur_.text + "' after formula");
    std::vector<Formula> out;
    out.reserve(conjuncts.size());
    for (auto& c : conjuncts) out.push_back(build(c));
    return out;
  }

 private:
  struct ConjunctNodes {
    std::vector<Formula::Node> nodes;
    std::vector<Formula::DepAtom> atoms;
    int root = -1;
  };

  void shift() { cur_ = lexer_.next(); }

  void expect(TokKind kind, const char* what) {
    if (cur_.kind != kind)
      throw ParseError(cur_.line, cur_.column,
                       std::string("expected ") + what + ", got '" + cur_.text + "'");
    shift();
  }

  // `vars :` introduces the header; ':' occurs nowhere else in the grammar.
  // A leading identifier `vars` without ':' is an ordinary variable.
  void parse_header() {
    if (cur_.kind != TokKind::Ident || cur_.text != "vars") return;
    Token saved = cur_;
    shift();
    if (cur_.kind != TokKind::Colon) {
      pending_ident_ = saved;
      return;
    }
    shift();
    header_declared_ = true;
    while (cur_.kind == TokKind::Ident) {
      if (index_.contains(cur_.text))
        throw ParseError(cur_.line, cur_.column,
                         "duplicate variable '" + cur_.text + "' in vars header");
      append_variable(cur_.text, cur_.line, cur_.column);
      shift();
      while (cur_.kind == TokKind::Comma) shift();
    }
    expect(TokKind::Semi, "';' after vars header");
  }

  int append_variable(const std::string& name, int line, int column) {
    if (order_.size() >= Assignment::kMaxWidth)
      throw ParseError(line, column, "more than 64 variables");
    int idx = static_cast<int>(order_.size());
    order_.push_back(name);
    index_.emplace(name, idx);
    return idx;
  }

  int variable(const std::string& name, int line, int column) {
    auto it = index_.find(name);
    if (it != index_.end()) return it->second;
    if (header_declared_)
      throw ParseError(line, column,
                       "variable '" + name + "' not declared in vars header");
    return append_variable(name, line, column);
  }

  bool at_ident() const {
    return pending_ident_.has_value() || cur_.kind == TokKind::Ident;
  }

  Token take_ident() {
    if (pending_ident_) {
      Token t = *pending_ident_;
      pending_ident_.reset();
      return t;
    }
    Token t = cur_;
    shift();
    return t;
  }

  ConjunctNodes parse_conjunction() {
    ConjunctNodes c;
    c.root = parse_term(c);
    while (cur_.kind == TokKind::Amp) {
      shift();
      int rhs = parse_term(c);
      Formula::Node node;
      node.kind = Formula::NodeKind::And;
      node.lhs = c.root;
      node.rhs = rhs;
      c.nodes.push_back(node);
      c.root = static_cast<int>(c.nodes.size()) - 1;
    }
    return c;
  }

  int parse_term(ConjunctNodes& c) {
    if (!pending_ident_) {
      if (cur_.kind == TokKind::Zero || cur_.kind == TokKind::One) {
        Formula::Node node;
        node.kind = cur_.kind == TokKind::Zero ? Formula::NodeKind::ConstFalse
                                               : Formula::NodeKind::ConstTrue;
        shift();
        c.nodes.push_back(node);
        return static_cast<int>(c.nodes.size()) - 1;
      }
      if (cur_.kind == TokKind::Bang) {
        Token bang = cur_;
        shift();
        if (cur_.kind != TokKind::Ident)
          throw ParseError(bang.line, bang.column, "expected variable after '!'");
        Token name = cur_;
        shift();
        Formula::Node node;
        node.kind = Formula::NodeKind::NegVar;
        node.var = variable(name.text, name.line, name.column);
        c.nodes.push_back(node);
        return static_cast<int>(c.nodes.size()) - 1;
      }
    }
    if (at_ident()) {
      Token name = take_ident();
      if (name.text == "dep") {
        expect(TokKind::LParen, "'(' after dep");
        Formula::DepAtom atom;
        atom.determining = parse_varlist();
        expect(TokKind::Semi, "';' between dep variable lists");
        atom.determined = parse_varlist();
        expect(TokKind::RParen, "')' closing dep");
        c.atoms.push_back(std::move(atom));
        Formula::Node node;
        node.kind = Formula::NodeKind::Dep;
        node.atom = static_cast<int>(c.atoms.size()) - 1;
        c.nodes.push_back(node);
        return static_cast<int>(c.nodes.size()) - 1;
      }
      Formula::Node node;
      node.kind = Formula::NodeKind::Var;
      node.var = variable(name.text, name.line, name.column);
      c.nodes.push_back(node);
      return static_cast<int>(c.nodes.size()) - 1;
    }
    throw ParseError(cur_.line, cur_.column,
                     "expected term, got '" + cur_.text + "'");
  }

  std::vector<int> parse_varlist() {
    std::vector<int> vars;
    std::set<int> dedup;
    while (cur_.kind == TokKind::Ident || cur_.kind == TokKind::Comma) {
      if (cur_.kind == TokKind::Comma) {
        shift();
        continue;
      }
      int idx = variable(cur_.text, cur_.line, cur_.column);
      if (!dedup.insert(idx).second)
        throw ParseError(cur_.line, cur_.column,
                         "duplicate variable '" + cur_.text + "' in dep list");
      vars.push_back(idx);
      shift();
    }
    return vars;
  }

  Formula build(ConjunctNodes& c) {
    Formula f;
    f.variable_order_ = order_;
    f.nodes_ = std::move(c.nodes);
    f.dep_atoms_ = std::move(c.atoms);
    f.root_ = c.root;
    return f;
  }

  Lexer lexer_;
  Token cur_{TokKind::End, "", 0, 0};
  std::optional<Token> pending_ident_;
  std::vector<std::string> order_;
  std::map<std::string, int> index_;
  bool header_declared_ = false;
};

std::vector<Formula> parse_disjunction(std::string_view text) {
  Parser parser(text);
  return parser.parse_disjuncts();
}

Formula parse_formula(std::string_view text) {
  std::vector<Formula> disjuncts = parse_disjunction(text);
  if (disjuncts.size() != 1)
    throw ParseError(1, 1, "top-level disjunction not allowed here");
  return std::move(disjuncts.front());
}

std::string chain_formula_text(int k) {
  if (k < 2) throw std::invalid_argument("chain formula needs k >= 2");
  std::string out;
  for (int i = 1; i < k; ++i) {
    if (i > 1) out += " & ";
    out += "dep(x" + std::to_string(i) + ";x" + std::to_string(k) + ")";
  }
  return out;
}

namespace {

void print_node(const Formula& f, int idx, std::string& out) {
  const Formula::Node& node = f.nodes()[static_cast<std::size_t>(idx)];
  switch (node.kind) {
    case Formula::NodeKind::Var:
      out += f.variable_order()[static_cast<std::size_t>(node.var)];
      return;
    case Formula::NodeKind::NegVar:
      out += '!';
      out += f.variable_order()[static_cast<std::size_t>(node.var)];
      return;
    case Formula::NodeKind::ConstFalse:
      out += '0';
      return;
    case Formula::NodeKind::ConstTrue:
      out += '1';
      return;
    case Formula::NodeKind::And:
      print_node(f, node.lhs, out);
      out += " & ";
      print_node(f, node.rhs, out);
      return;
    case Formula::NodeKind::Dep: {
      const auto& atom = f.dep_atoms()[static_cast<std::size_t>(node.atom)];
      out += "dep(";
      for (std::size_t i = 0; i < atom.determining.size(); ++i) {
        if (i > 0) out += ", ";
        out += f.variable_order()[static_cast<std::size_t>(atom.determining[i])];
      }
      out += "; ";
      for (std::size_t i = 0; i < atom.determined.size(); ++i) {
        if (i > 0) out += ", ";
        out += f.variable_order()[static_cast<std::size_t>(atom.determined[i])];
      }
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string Formula::to_string() const {
  std::string out = "vars: ";
  for (std::size_t i = 0; i < variable_order_.size(); ++i) {
    if (i > 0) out += ", ";
    out += variable_order_[i];
  }
  out += "; ";
  if (root_ >= 0) print_node(*this, root_, out);
  return out;
}

ReducedFormula reduce(const Formula& f) {
  ReducedFormula rf;
  rf.original_order_ = f.variable_order();
  const int n = f.var_count();

  std::set<int> forced_true, forced_false;
  std::vector<const Formula::DepAtom*> atoms;
  bool has_false = false;

  // Flatten the conjunction.
  std::vector<int> stack;
  if (f.root() >= 0) stack.push_back(f.root());
  while (!stack.empty()) {
    int idx = stack.back();
    stack.pop_back();
    const Formula::Node& node = f.nodes()[static_cast<std::size_t>(idx)];
    switch (node.kind) {
      case Formula::NodeKind::And:
        stack.push_back(node.lhs);
        stack.push_back(node.rhs);
        break;
      case Formula::NodeKind::Var:
        forced_true.insert(node.var);
        break;
      case Formula::NodeKind::NegVar:
        forced_false.insert(node.var);
        break;
      case Formula::NodeKind::ConstFalse:
        has_false = true;
        break;
      case Formula::NodeKind::ConstTrue:
        break;
      case Formula::NodeKind::Dep:
        atoms.push_back(&f.dep_atoms()[static_cast<std::size_t>(node.atom)]);
        break;
    }
  }

  rf.forced_true_.assign(forced_true.begin(), forced_true.end());
  rf.forced_false_.assign(forced_false.begin(), forced_false.end());
  for (int v : forced_true)
    if (forced_false.contains(v)) rf.contradictory_ = true;
  if (has_false) rf.contradictory_ = true;

  std::set<int> forced = forced_true;
  forced.insert(forced_false.begin(), forced_false.end());
  std::vector<int> free_pos_of_var(static_cast<std::size_t>(n), -1);
  for (int v = 0; v < n; ++v) {
    if (forced.contains(v)) continue;
    free_pos_of_var[static_cast<std::size_t>(v)] =
        static_cast<int>(rf.free_positions_.size());
    rf.free_positions_.push_back(v);
    rf.free_names_.push_back(f.variable_order()[static_cast<std::size_t>(v)]);
  }

  const int free_n = rf.free_count();
  auto mask_of = [free_n](const std::vector<int>& positions) {
    std::uint64_t m = 0;
    for (int p : positions) m |= std::uint64_t{1} << (free_n - 1 - p);
    return m;
  };

  std::set<std::pair<std::vector<int>, std::vector<int>>> dedup;
  for (const Formula::DepAtom* atom : atoms) {
    ReducedAtom reduced;
    for (int v : atom->determining) {
      int p = free_pos_of_var[static_cast<std::size_t>(v)];
      if (p >= 0) reduced.determining.push_back(p);
    }
    for (int v : atom->determined) {
      int p = free_pos_of_var[static_cast<std::size_t>(v)];
      if (p >= 0) reduced.determined.push_back(p);
    }
    if (reduced.determined.empty()) continue;  // vacuously true
    std::sort(reduced.determining.begin(), reduced.determining.end());
    std::sort(reduced.determined.begin(), reduced.determined.end());
    if (!dedup.insert({reduced.determining, reduced.determined}).second) continue;
    reduced.determining_mask = mask_of(reduced.determining);
    reduced.determined_mask = mask_of(reduced.determined);
    rf.atoms_.push_back(std::move(reduced));
  }
  std::sort(rf.atoms_.begin(), rf.atoms_.end(),
            [](const ReducedAtom& a, const ReducedAtom& b) {
              if (a.determining != b.determining)
                return a.determining < b.determining;
              return a.determined < b.determined;
            });

  for (int v : forced_true)
    rf.forced_pattern_ |= std::uint64_t{1} << (n - 1 - v);

  rf.size_measure_ = 1 + static_cast<std::uint64_t>(free_n);
  for (const auto& atom : rf.atoms_)
    rf.size_measure_ += 1 + atom.determining.size() + atom.determined.size();
  return rf;
}

bool ReducedFormula::model_check(const Team& t, StepCounter* counter) const {
  if (contradictory_)
    throw std::invalid_argument("model_check on contradictory formula");
  if (!t.empty() && t.width() != free_count())
    throw std::invalid_argument("team width mismatch");
  if (atoms_.empty()) return true;
  const auto members = t.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const std::uint64_t diff = members[i].value() ^ members[j].value();
      tick(counter);
      for (const auto& atom : atoms_) {
        tick(counter);
        if ((diff & atom.determining_mask) == 0 &&
            (diff & atom.determined_mask) != 0)
          return false;
      }
    }
  }
  return true;
}

bool ReducedFormula::pair_satisfies(const Assignment& s,
                                    StepCounter* counter) const {
  if (contradictory_)
    throw std::invalid_argument("pair_satisfies on contradictory formula");
  if (s.width() != free_count())
    throw std::invalid_argument("assignment width mismatch");
  if (s.is_zero())
    throw std::invalid_argument("pair_satisfies needs a nonzero assignment");
  for (const auto& atom : atoms_) {
    tick(counter);
    if ((s.value() & atom.determining_mask) == 0 &&
        (s.value() & atom.determined_mask) != 0)
      return false;
  }
  return true;
}

Team ReducedFormula::expand(const Team& t, StepCounter* counter) const {
  if (contradictory_)
    throw std::invalid_argument("expand on contradictory formula");
  if (t.width() != free_count())
    throw std::invalid_argument("assignment width mismatch");
  const int n = original_count();
  Team out(n);
  for (const auto& m : t.members()) {
    std::uint64_t value = forced_pattern_;
    for (int p = 0; p < free_count(); ++p) {
      if ((m.value() >> (free_count() - 1 - p)) & 1u)
        value |= std::uint64_t{1}
                 << (n - 1 - free_positions_[static_cast<std::size_t>(p)]);
    }
    tick(counter);
    out.push_max(Assignment(value, n));
  }
  return out;
}

Assignment ReducedFormula::zero_expansion() const {
  return Assignment(forced_pattern_, original_count());
}

}  // namespace teamenum
