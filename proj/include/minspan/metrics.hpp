#ifndef MINSPAN_METRICS_HPP
#define MINSPAN_METRICS_HPP

#include <compare>
#include <string>
#include <vector>

namespace minspan {

/// Canonical equality key of a mention under one matching mode.
struct SpanIdentity {
  std::string doc_id;
  int part = 0;
  int sentence_index = 0;
  std::vector<int> tokens;  // sorted, nonempty

  auto operator<=>(const SpanIdentity&) const = default;
};

using Entity = std::vector<SpanIdentity>;  // sorted, unique

/// One side (key or response) of a coreference partition.
struct EntitySet {
  std::vector<Entity> entities;

  std::size_t mention_count() const;
};

/// Recall/precision/F1 as fractions in [0, 1].
struct Prf {
  double recall = 0;
  double precision = 0;
  double f1 = 0;
};

double f1_of(double precision, double recall);

/// Numerators and denominators, summed across documents before dividing.
struct MetricCounts {
  double recall_num = 0;
  double recall_den = 0;
  double precision_num = 0;
  double precision_den = 0;

  MetricCounts& operator+=(const MetricCounts& other);
  Prf prf() const;
};

MetricCounts muc_counts(const EntitySet& key, const EntitySet& response);
MetricCounts b3_counts(const EntitySet& key, const EntitySet& response);
MetricCounts ceafe_counts(const EntitySet& key, const EntitySet& response);
MetricCounts lea_counts(const EntitySet& key, const EntitySet& response);

// Link-based: R = sum(|K| - |p(K)|) / sum(|K| - 1); P with roles swapped.
inline Prf muc_score(const EntitySet& key, const EntitySet& response) {
  return muc_counts(key, response).prf();
}
// Mention-based: R = sum_i sum_j |K_i & R_j|^2 / |K_i|, over sum |K_i|.
inline Prf b3_score(const EntitySet& key, const EntitySet& response) {
  return b3_counts(key, response).prf();
}
// Entity-based with phi4 = 2|K & R| / (|K| + |R|) and an optimal one-to-one
// alignment.
inline Prf ceafe_score(const EntitySet& key, const EntitySet& response) {
  return ceafe_counts(key, response).prf();
}
// Link-weighted entity importance; singletons have one self link that is
// resolved only when the mention is also a singleton in the other side.
inline Prf lea_score(const EntitySet& key, const EntitySet& response) {
  return lea_counts(key, response).prf();
}

/// phi4 similarity of two entities.
double phi4(const Entity& a, const Entity& b);

}  // namespace minspan

#endif
