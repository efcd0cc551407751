#ifndef MINSPAN_COMPARE_HPP
#define MINSPAN_COMPARE_HPP

#include <string>
#include <vector>

#include "minspan/conll.hpp"
#include "minspan/mina.hpp"
#include "minspan/parallel.hpp"

namespace minspan {

/// A key and a system mention that share a MINA span but not their
/// maximum boundaries.
struct BoundaryMismatch {
  Mention key;
  Mention sys;
  std::vector<int> min_tokens;
  std::string key_text;
  std::string sys_text;
};

/// Every such pair, in (doc_id, part, sentence, key span, system span) order.
/// Both sides are resolved against the key file's trees.
std::vector<BoundaryMismatch> compare_boundaries(const std::vector<Document>& key_docs,
                                                 const std::vector<Document>& sys_docs,
                                                 const TagPolicy& policy,
                                                 Execution execution = Execution::Parallel);

}  // namespace minspan

#endif
