#pragma once

#include <functional>
#include <optional>
#include <string>

#include "qadm/algebra.hpp"

namespace qadm {

enum class HomMode { any, injective, surjective };

// Optional per-element restriction: the search only maps a to b when
// allowed(a, b) holds.
using ImageFilter = std::function<bool(Element, Element)>;

// Deterministic backtracking search for a homomorphism A -> B. Images are
// assigned to a greedy generating sequence of A; every other element's image
// is then forced, and each operation entry is checked once.
std::optional<ElementMap> find_homomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b,
                                            HomMode mode, const ImageFilter& allowed = {});

bool embeds(const FiniteAlgebra& a, const FiniteAlgebra& b);
bool is_homomorphic_image(const FiniteAlgebra& image, const FiniteAlgebra& source);
bool are_isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

// Relabeling map old -> new producing the canonical form.
ElementMap canonical_labeling(const FiniteAlgebra& alg);
FiniteAlgebra canonical_form(const FiniteAlgebra& alg);
// Compact byte string of the canonical tables; equal iff isomorphic.
std::string canonical_code(const FiniteAlgebra& alg);

// Applies a bijective relabeling old -> new to every table.
FiniteAlgebra relabel(const FiniteAlgebra& alg, const ElementMap& perm);

}  // namespace qadm
