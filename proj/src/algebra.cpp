#include "qadm/algebra.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "qadm/errors.hpp"
#include "qadm/limits.hpp"

namespace qadm {

Signature::Signature(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
  std::set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (s.name.empty()) throw std::invalid_argument("empty operation symbol name");
    if (!seen.insert(s.name).second)
      throw std::invalid_argument("duplicate operation symbol '" + s.name + "'");
  }
}

std::optional<std::size_t> Signature::find(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

bool Signature::has_constants() const {
  return std::any_of(symbols_.begin(), symbols_.end(), [](const Symbol& s) { return s.arity == 0; });
}

std::size_t Signature::max_arity() const {
  std::size_t r = 0;
  for (const auto& s : symbols_) r = std::max(r, s.arity);
  return r;
}

SignaturePtr make_signature(std::vector<Symbol> symbols) {
  return std::make_shared<const Signature>(std::move(symbols));
}

void require_same_signature(const Signature& a, const Signature& b) {
  if (&a == &b || a == b) return;
  throw SignatureMismatch("algebras do not share a signature");
}

std::uint64_t checked_power(std::uint64_t k, std::size_t r) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (k != 0 && p > std::numeric_limits<std::uint64_t>::max() / k)
      throw ResourceLimitError("table size", std::numeric_limits<std::uint64_t>::max(), p);
    p *= k;
  }
  return p;
}

FiniteAlgebra::FiniteAlgebra(SignaturePtr signature, std::string name, std::size_t size,
                             std::vector<std::vector<Element>> tables)
    : signature_(std::move(signature)), name_(std::move(name)), size_(size), tables_(std::move(tables)) {
  if (!signature_) throw std::invalid_argument("algebra without signature");
  if (size_ == 0) throw std::invalid_argument("algebra '" + name_ + "' has empty universe");
  if (tables_.size() != signature_->size())
    throw std::invalid_argument("algebra '" + name_ + "' has " + std::to_string(tables_.size()) +
                                " tables for " + std::to_string(signature_->size()) + " symbols");
  for (std::size_t op = 0; op < tables_.size(); ++op) {
    const auto& sym = (*signature_)[op];
    if (tables_[op].size() != checked_power(size_, sym.arity))
      throw std::invalid_argument("table of '" + sym.name + "' in '" + name_ + "' has wrong length");
    for (Element v : tables_[op])
      if (v >= size_)
        throw std::invalid_argument("table of '" + sym.name + "' in '" + name_ +
                                    "' has out-of-range entry " + std::to_string(v));
  }
}

bool FiniteAlgebra::same_tables(const FiniteAlgebra& other) const {
  return size_ == other.size_ && tables_ == other.tables_;
}

void Limits::check_deadline() const {
  if (deadline && std::chrono::steady_clock::now() > *deadline)
    throw ResourceLimitError("time limit", 0, 0);
}

}  // namespace qadm
