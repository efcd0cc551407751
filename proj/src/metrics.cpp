#include "minspan/metrics.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "minspan/assignment.hpp"

namespace minspan {

namespace {

using EntityIndex = std::map<SpanIdentity, int>;

EntityIndex index_of(const EntitySet& set) {
  EntityIndex index;
  for (std::size_t e = 0; e < set.entities.size(); ++e) {
    for (const SpanIdentity& id : set.entities[e]) index.emplace(id, static_cast<int>(e));
  }
  return index;
}

std::size_t overlap(const Entity& a, const Entity& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

// sum over `from` entities of (|E| - |partition of E by `to`|), and sum(|E| - 1).
std::pair<double, double> muc_side(const EntitySet& from, const EntitySet& to) {
  const EntityIndex to_index = index_of(to);
  double num = 0;
  double den = 0;
  for (const Entity& entity : from.entities) {
    if (entity.empty()) continue;
    std::set<int> linked;
    std::size_t unmatched = 0;
    for (const SpanIdentity& id : entity) {
      auto it = to_index.find(id);
      if (it == to_index.end()) {
        ++unmatched;
      } else {
        linked.insert(it->second);
      }
    }
    const double parts = static_cast<double>(linked.size() + unmatched);
    num += static_cast<double>(entity.size()) - parts;
    den += static_cast<double>(entity.size()) - 1;
  }
  return {num, den};
}

std::pair<double, double> b3_side(const EntitySet& from, const EntitySet& to) {
  const EntityIndex to_index = index_of(to);
  double num = 0;
  double den = 0;
  for (const Entity& entity : from.entities) {
    if (entity.empty()) continue;
    std::map<int, std::size_t> shared;
    for (const SpanIdentity& id : entity) {
      auto it = to_index.find(id);
      if (it != to_index.end()) ++shared[it->second];
    }
    double sum = 0;
    for (const auto& [other, count] : shared) sum += static_cast<double>(count * count);
    num += sum / static_cast<double>(entity.size());
    den += static_cast<double>(entity.size());
  }
  return {num, den};
}

double links(std::size_t n) { return static_cast<double>(n) * static_cast<double>(n - 1) / 2.0; }

std::pair<double, double> lea_side(const EntitySet& from, const EntitySet& to) {
  const EntityIndex to_index = index_of(to);
  double num = 0;
  double den = 0;
  for (const Entity& entity : from.entities) {
    if (entity.empty()) continue;
    const double size = static_cast<double>(entity.size());
    double resolved = 0;
    if (entity.size() == 1) {
      auto it = to_index.find(entity.front());
      if (it != to_index.end() && to.entities[it->second].size() == 1) resolved = 1;
    } else {
      std::map<int, std::size_t> shared;
      for (const SpanIdentity& id : entity) {
        auto it = to_index.find(id);
        if (it != to_index.end()) ++shared[it->second];
      }
      double common = 0;
      for (const auto& [other, count] : shared) common += links(count);
      resolved = common / links(entity.size());
    }
    num += size * resolved;
    den += size;
  }
  return {num, den};
}

}  // namespace

std::size_t EntitySet::mention_count() const {
  std::size_t n = 0;
  for (const Entity& e : entities) n += e.size();
  return n;
}

double f1_of(double precision, double recall) {
  return precision + recall == 0 ? 0.0 : 2 * precision * recall / (precision + recall);
}

MetricCounts& MetricCounts::operator+=(const MetricCounts& other) {
  recall_num += other.recall_num;
  recall_den += other.recall_den;
  precision_num += other.precision_num;
  precision_den += other.precision_den;
  return *this;
}

Prf MetricCounts::prf() const {
  Prf out;
  out.recall = recall_den == 0 ? 0.0 : recall_num / recall_den;
  out.precision = precision_den == 0 ? 0.0 : precision_num / precision_den;
  out.f1 = f1_of(out.precision, out.recall);
  return out;
}

MetricCounts muc_counts(const EntitySet& key, const EntitySet& response) {
  auto [rn, rd] = muc_side(key, response);
  auto [pn, pd] = muc_side(response, key);
  return {rn, rd, pn, pd};
}

MetricCounts b3_counts(const EntitySet& key, const EntitySet& response) {
  auto [rn, rd] = b3_side(key, response);
  auto [pn, pd] = b3_side(response, key);
  return {rn, rd, pn, pd};
}

MetricCounts lea_counts(const EntitySet& key, const EntitySet& response) {
  auto [rn, rd] = lea_side(key, response);
  auto [pn, pd] = lea_side(response, key);
  return {rn, rd, pn, pd};
}

double phi4(const Entity& a, const Entity& b) {
  if (a.empty() && b.empty()) return 0.0;
  return 2.0 * static_cast<double>(overlap(a, b)) / static_cast<double>(a.size() + b.size());
}

MetricCounts ceafe_counts(const EntitySet& key, const EntitySet& response) {
  std::vector<std::vector<double>> similarity(key.entities.size(),
                                              std::vector<double>(response.entities.size(), 0.0));
  for (std::size_t i = 0; i < key.entities.size(); ++i) {
    for (std::size_t j = 0; j < response.entities.size(); ++j) {
      similarity[i][j] = phi4(key.entities[i], response.entities[j]);
    }
  }
  const std::vector<int> assignment = max_weight_assignment(similarity);
  double total = 0;
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    if (assignment[i] >= 0) total += similarity[i][assignment[i]];
  }
  return {total, static_cast<double>(key.entities.size()), total,
          static_cast<double>(response.entities.size())};
}

}  // namespace minspan
