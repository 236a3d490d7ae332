#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qadm/algebra.hpp"

namespace qadm {

struct ProblemFile {
  SignaturePtr signature;
  std::vector<FiniteAlgebra> algebras;
};

// Parses the algebra text format. A text without a signature block uses
// `inherited`; a text with one must match `inherited` when both are given.
ProblemFile parse_problem(std::string_view text, const std::string& source, SignaturePtr inherited = nullptr);

// Concatenates several files, all over one signature.
ProblemFile load_problem_files(std::span<const std::string> paths);

std::string format_signature(const Signature& sig);
std::string format_algebra(const FiniteAlgebra& alg);
std::string format_problem(const Signature& sig, std::span<const FiniteAlgebra> algs);

}  // namespace qadm
