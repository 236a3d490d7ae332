#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qadm {

using Element = std::uint32_t;

struct Symbol {
  std::string name;
  std::size_t arity = 0;

  bool operator==(const Symbol&) const = default;
};

// Ordered list of operation symbols shared by every algebra of a problem.
class Signature {
 public:
  Signature() = default;
  explicit Signature(std::vector<Symbol> symbols);

  std::size_t size() const { return symbols_.size(); }
  const Symbol& operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Symbol>& symbols() const { return symbols_; }

  std::optional<std::size_t> find(std::string_view name) const;
  bool has_constants() const;
  std::size_t max_arity() const;

  bool operator==(const Signature& other) const { return symbols_ == other.symbols_; }

 private:
  std::vector<Symbol> symbols_;
};

using SignaturePtr = std::shared_ptr<const Signature>;

SignaturePtr make_signature(std::vector<Symbol> symbols);

// Throws SignatureMismatch unless both signatures list the same symbols.
void require_same_signature(const Signature& a, const Signature& b);

// Universe 0..size-1 with one total table per signature symbol. A table for
// an r-ary symbol is stored row-major with the last argument varying fastest.
class FiniteAlgebra {
 public:
  FiniteAlgebra(SignaturePtr signature, std::string name, std::size_t size,
                std::vector<std::vector<Element>> tables);

  const Signature& signature() const { return *signature_; }
  const SignaturePtr& signature_ptr() const { return signature_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }
  std::size_t size() const { return size_; }

  std::span<const Element> table(std::size_t op) const { return tables_[op]; }
  const std::vector<std::vector<Element>>& tables() const { return tables_; }

  Element apply(std::size_t op, std::span<const Element> args) const {
    std::size_t idx = 0;
    for (Element a : args) idx = idx * size_ + a;
    return tables_[op][idx];
  }
  Element apply(std::size_t op, std::initializer_list<Element> args) const {
    return apply(op, std::span<const Element>(args.begin(), args.size()));
  }

  // Same size and identical tables; names are ignored.
  bool same_tables(const FiniteAlgebra& other) const;

 private:
  SignaturePtr signature_;
  std::string name_;
  std::size_t size_;
  std::vector<std::vector<Element>> tables_;
};

// A map between universes; image[a] is the image of source element a.
struct ElementMap {
  std::vector<Element> image;

  Element operator()(Element a) const { return image[a]; }
  std::size_t size() const { return image.size(); }
  bool operator==(const ElementMap&) const = default;
};

// Number of r-tuples over a k-element set; throws if it overflows 64 bits.
std::uint64_t checked_power(std::uint64_t k, std::size_t r);

}  // namespace qadm
