#pragma once

#include <cstddef>
#include <vector>

namespace qadm::detail {

// Visits every r-tuple of indices over [0, n) that has at least one entry
// >= done, in lexicographic order. The visitor returns false to stop early;
// the function returns false iff it was stopped.
template <class Visit>
bool for_each_new_tuple(std::size_t r, std::size_t n, std::size_t done, std::vector<std::size_t>& idx,
                        Visit&& visit) {
  idx.assign(r, 0);
  if (r == 0) return done == 0 ? visit(idx) : true;
  if (n == 0 || done >= n) return true;
  while (true) {
    bool prefix_new = false;
    for (std::size_t i = 0; i + 1 < r; ++i) prefix_new |= idx[i] >= done;
    for (std::size_t last = prefix_new ? 0 : done; last < n; ++last) {
      idx[r - 1] = last;
      if (!visit(idx)) return false;
    }
    std::size_t i = r - 1;
    while (i > 0) {
      --i;
      if (++idx[i] < n) break;
      idx[i] = 0;
      if (i == 0) return true;
    }
    if (r == 1) return true;
  }
}

}  // namespace qadm::detail
