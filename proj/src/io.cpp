#include "qadm/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "qadm/errors.hpp"

namespace qadm {

namespace {

struct Token {
  std::string text;
  std::size_t line;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == '\n') {
      ++line;
      ++i;
    } else if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else {
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) && text[i] != '#') ++i;
      out.push_back({std::string(text.substr(start, i - start)), line});
    }
  }
  return out;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '-' || c == '+' || c == '.'))
      return false;
  return true;
}

bool is_keyword(const std::string& s) { return s == "signature" || s == "algebra" || s == "size" || s == "op"; }

class Reader {
 public:
  Reader(std::vector<Token> tokens, std::string source) : tokens_(std::move(tokens)), source_(std::move(source)) {}

  bool done() const { return pos_ >= tokens_.size(); }
  const Token& peek() const { return tokens_[pos_]; }
  bool peek_is(const char* word) const { return !done() && peek().text == word; }

  const Token& next(const char* expecting) {
    if (done()) fail(last_line(), std::string("unexpected end of input, expected ") + expecting);
    return tokens_[pos_++];
  }

  void expect(const char* word) {
    const Token& t = next(word);
    if (t.text != word) fail(t.line, std::string("expected '") + word + "', found '" + t.text + "'");
  }

  std::string identifier(const char* what) {
    const Token& t = next(what);
    if (!is_identifier(t.text) || is_keyword(t.text)) fail(t.line, std::string("invalid ") + what + " '" + t.text + "'");
    return t.text;
  }

  std::uint64_t number(const char* what) {
    const Token& t = next(what);
    if (t.text.empty() || t.text.size() > 18) fail(t.line, std::string("invalid ") + what + " '" + t.text + "'");
    for (char c : t.text)
      if (!std::isdigit(static_cast<unsigned char>(c))) fail(t.line, std::string("invalid ") + what + " '" + t.text + "'");
    return std::stoull(t.text);
  }

  std::size_t last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }
  std::size_t line() const { return done() ? last_line() : peek().line; }

  [[noreturn]] void fail(std::size_t line, const std::string& what) const { throw ParseError(source_, line, what); }

 private:
  std::vector<Token> tokens_;
  std::string source_;
  std::size_t pos_ = 0;
};

}  // namespace

ProblemFile parse_problem(std::string_view text, const std::string& source, SignaturePtr inherited) {
  Reader in(tokenize(text), source);
  ProblemFile out;
  if (in.peek_is("signature")) {
    const std::size_t line = in.line();
    in.expect("signature");
    std::vector<Symbol> symbols;
    while (!in.done() && !in.peek_is("algebra")) {
      std::string name = in.identifier("symbol name");
      std::uint64_t arity = in.number("arity");
      if (arity > 8) in.fail(in.line(), "arity " + std::to_string(arity) + " is too large");
      for (const auto& s : symbols)
        if (s.name == name) in.fail(line, "duplicate symbol '" + name + "'");
      symbols.push_back({name, arity});
    }
    out.signature = make_signature(std::move(symbols));
    if (inherited && !(*inherited == *out.signature)) in.fail(line, "signature differs from earlier input");
    if (inherited) out.signature = inherited;
  } else {
    if (!inherited) in.fail(in.line(), "missing signature block");
    out.signature = inherited;
  }
  const Signature& sig = *out.signature;

  while (!in.done()) {
    const std::size_t alg_line = in.line();
    in.expect("algebra");
    std::string name = in.identifier("algebra name");
    in.expect("size");
    const std::size_t size_line = in.line();
    std::uint64_t k = in.number("size");
    if (k == 0) in.fail(size_line, "algebra size must be positive");
    if (k > 0xffffff) in.fail(size_line, "algebra size too large");
    std::vector<std::vector<Element>> tables(sig.size());
    std::vector<bool> seen(sig.size(), false);
    while (in.peek_is("op")) {
      in.expect("op");
      const std::size_t op_line = in.line();
      std::string op_name = in.identifier("operation name");
      auto op = sig.find(op_name);
      if (!op) in.fail(op_line, "operation '" + op_name + "' is not in the signature");
      if (seen[*op]) in.fail(op_line, "operation '" + op_name + "' given twice");
      seen[*op] = true;
      std::uint64_t entries = checked_power(k, sig[*op].arity);
      if (entries > (std::uint64_t{1} << 30)) in.fail(op_line, "table too large");
      auto& table = tables[*op];
      table.reserve(entries);
      for (std::uint64_t e = 0; e < entries; ++e) {
        const std::size_t value_line = in.line();
        std::uint64_t v = in.number("table entry");
        if (v >= k)
          in.fail(value_line, "entry " + std::to_string(v) + " of '" + op_name + "' is out of range 0.." +
                                  std::to_string(k - 1));
        table.push_back(static_cast<Element>(v));
      }
    }
    for (std::size_t op = 0; op < sig.size(); ++op)
      if (!seen[op]) in.fail(alg_line, "algebra '" + name + "' lacks a table for '" + sig[op].name + "'");
    if (!in.done() && !in.peek_is("algebra"))
      in.fail(in.line(), "unexpected token '" + in.peek().text + "' (too many table entries?)");
    out.algebras.emplace_back(out.signature, name, k, std::move(tables));
  }
  return out;
}

ProblemFile load_problem_files(std::span<const std::string> paths) {
  ProblemFile all;
  for (const auto& path : paths) {
    std::ifstream file(path);
    if (!file) throw ParseError(path, 0, "cannot open file");
    std::stringstream buffer;
    buffer << file.rdbuf();
    auto part = parse_problem(buffer.str(), path, all.signature);
    all.signature = part.signature;
    for (auto& a : part.algebras) all.algebras.push_back(std::move(a));
  }
  return all;
}

std::string format_signature(const Signature& sig) {
  std::ostringstream out;
  out << "signature\n";
  for (const auto& s : sig.symbols()) out << "  " << s.name << ' ' << s.arity << '\n';
  return out.str();
}

std::string format_algebra(const FiniteAlgebra& alg) {
  std::ostringstream out;
  out << "algebra " << alg.name() << '\n';
  out << "  size " << alg.size() << '\n';
  const auto& sig = alg.signature();
  for (std::size_t op = 0; op < sig.size(); ++op) {
    out << "  op " << sig[op].name << '\n';
    const auto table = alg.table(op);
    const std::size_t row = sig[op].arity == 0 ? 1 : alg.size();
    for (std::size_t i = 0; i < table.size(); i += row) {
      out << "   ";
      for (std::size_t j = i; j < i + row; ++j) out << ' ' << table[j];
      out << '\n';
    }
  }
  return out.str();
}

std::string format_problem(const Signature& sig, std::span<const FiniteAlgebra> algs) {
  std::string out = format_signature(sig);
  for (const auto& a : algs) out += format_algebra(a);
  return out;
}

}  // namespace qadm
