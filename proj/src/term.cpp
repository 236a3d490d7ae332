#include "qadm/term.hpp"

#include <cctype>
#include <stdexcept>

#include "qadm/errors.hpp"

namespace qadm {

Term Term::variable(std::string name) {
  if (name.empty()) throw std::invalid_argument("empty variable name");
  return Term(std::make_shared<const Node>(Node{std::move(name), kVariable, {}}));
}

Term Term::apply(const Signature& sig, std::size_t op, std::vector<Term> args) {
  if (op >= sig.size()) throw std::invalid_argument("unknown operation index " + std::to_string(op));
  if (args.size() != sig[op].arity)
    throw std::invalid_argument("symbol '" + sig[op].name + "' expects " + std::to_string(sig[op].arity) +
                                " arguments, got " + std::to_string(args.size()));
  return Term(std::make_shared<const Node>(Node{sig[op].name, op, std::move(args)}));
}

void Term::collect_variables(std::set<std::string>& out) const {
  if (is_variable()) {
    out.insert(name());
    return;
  }
  for (const auto& a : args()) a.collect_variables(out);
}

std::set<std::string> Term::variables() const {
  std::set<std::string> out;
  collect_variables(out);
  return out;
}

std::size_t Term::depth() const {
  std::size_t d = 0;
  for (const auto& a : args()) d = std::max(d, a.depth() + 1);
  return d;
}

std::string Term::to_string() const {
  if (is_variable() || args().empty()) return name();
  std::string out = name() + "(";
  for (std::size_t i = 0; i < args().size(); ++i) {
    if (i) out += ", ";
    out += args()[i].to_string();
  }
  return out + ")";
}

bool Term::operator==(const Term& other) const {
  if (node_ == other.node_) return true;
  if (op() != other.op() || name() != other.name() || args().size() != other.args().size()) return false;
  for (std::size_t i = 0; i < args().size(); ++i)
    if (!(args()[i] == other.args()[i])) return false;
  return true;
}

std::string Equation::to_string() const { return lhs.to_string() + " ~ " + rhs.to_string(); }

std::set<std::string> Clause::variables() const {
  std::set<std::string> out;
  for (const auto* side : {&premises, &conclusions})
    for (const auto& e : *side) {
      e.lhs.collect_variables(out);
      e.rhs.collect_variables(out);
    }
  return out;
}

std::string Clause::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < premises.size(); ++i) out += (i ? ", " : "") + premises[i].to_string();
  out += premises.empty() ? "=>" : " =>";
  for (std::size_t i = 0; i < conclusions.size(); ++i) out += (i ? ", " : " ") + conclusions[i].to_string();
  return out;
}

std::set<std::string> Rule::variables() const {
  std::set<std::string> out;
  for (const auto& p : premises) p.collect_variables(out);
  conclusion.collect_variables(out);
  return out;
}

std::string Rule::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < premises.size(); ++i) out += (i ? ", " : "") + premises[i].to_string();
  return out + (premises.empty() ? "/ " : " / ") + conclusion.to_string();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Term term() {
    skip_space();
    std::string id = identifier();
    skip_space();
    auto op = sig_.find(id);
    if (!op) {
      if (peek() == '(') fail("unknown operation symbol '" + id + "'");
      return Term::variable(id);
    }
    std::vector<Term> args;
    if (peek() == '(') {
      ++pos_;
      skip_space();
      if (peek() == ')') {
        ++pos_;
      } else {
        while (true) {
          args.push_back(term());
          skip_space();
          if (peek() == ',') {
            ++pos_;
            continue;
          }
          expect(')');
          break;
        }
      }
    }
    if (args.size() != sig_[*op].arity)
      fail("symbol '" + id + "' expects " + std::to_string(sig_[*op].arity) + " arguments, got " +
           std::to_string(args.size()));
    return Term::apply(sig_, *op, std::move(args));
  }

  Equation equation() {
    Term lhs = term();
    skip_space();
    expect('~');
    Term rhs = term();
    return {std::move(lhs), std::move(rhs)};
  }

  std::vector<Equation> equation_list() {
    std::vector<Equation> out;
    skip_space();
    if (at_end() || at_arrow()) return out;
    while (true) {
      out.push_back(equation());
      skip_space();
      if (peek() != ',') break;
      ++pos_;
    }
    return out;
  }

  Clause clause() {
    Clause c;
    c.premises = equation_list();
    skip_space();
    if (!at_arrow()) fail("expected '=>'");
    pos_ += 2;
    c.conclusions = equation_list();
    finish();
    return c;
  }

  Rule rule() {
    std::vector<Term> premises;
    skip_space();
    if (peek() != '/') {
      while (true) {
        premises.push_back(term());
        skip_space();
        if (peek() != ',') break;
        ++pos_;
      }
    }
    skip_space();
    expect('/');
    Term conclusion = term();
    finish();
    return {std::move(premises), std::move(conclusion)};
  }

  void finish() {
    skip_space();
    if (!at_end()) fail("unexpected trailing input");
  }

  bool at_end() const { return pos_ >= text_.size(); }

 private:
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_arrow() const { return text_.substr(pos_, 2) == "=>"; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string identifier() {
    const std::size_t start = pos_;
    auto ident_char = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\''; };
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("expected identifier");
    while (!at_end() && ident_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("<input>", 1, what + " at column " + std::to_string(pos_ + 1));
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t pos_ = 0;
};

}  // namespace

Term parse_term(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  Term t = p.term();
  p.finish();
  return t;
}

Equation parse_equation(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  Equation e = p.equation();
  p.finish();
  return e;
}

std::vector<Equation> parse_equations(std::string_view text, const Signature& sig) {
  Parser p(text, sig);
  auto out = p.equation_list();
  p.finish();
  return out;
}

Clause parse_clause(std::string_view text, const Signature& sig) { return Parser(text, sig).clause(); }

Rule parse_rule(std::string_view text, const Signature& sig) { return Parser(text, sig).rule(); }

Element eval_term(const FiniteAlgebra& alg, const Term& t, const std::map<std::string, Element>& assignment) {
  if (t.is_variable()) {
    auto it = assignment.find(t.name());
    if (it == assignment.end()) throw std::invalid_argument("unbound variable '" + t.name() + "'");
    if (it->second >= alg.size()) throw std::invalid_argument("assignment out of range for '" + t.name() + "'");
    return it->second;
  }
  const auto& sig = alg.signature();
  if (t.op() >= sig.size() || sig[t.op()].name != t.name() || sig[t.op()].arity != t.args().size())
    throw std::invalid_argument("term symbol '" + t.name() + "' does not match the algebra's signature");
  std::vector<Element> args;
  args.reserve(t.args().size());
  for (const auto& a : t.args()) args.push_back(eval_term(alg, a, assignment));
  return alg.apply(t.op(), args);
}

}  // namespace qadm
