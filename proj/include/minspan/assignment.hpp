#ifndef MINSPAN_ASSIGNMENT_HPP
#define MINSPAN_ASSIGNMENT_HPP

#include <vector>

namespace minspan {

/// Maximum-weight one-to-one assignment of rows to columns (Kuhn-Munkres,
/// O(n^3)). `weights` is rows x cols, rectangular allowed, entries >= 0.
/// Returns, for each row, its column or -1 when left unassigned.
std::vector<int> max_weight_assignment(const std::vector<std::vector<double>>& weights);

}  // namespace minspan

#endif
