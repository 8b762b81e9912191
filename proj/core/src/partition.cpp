#include "ualg/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ualg {

Partition::Partition(std::vector<int> labels) : labels_(std::move(labels)) {
  const int n = static_cast<int>(labels_.size());
  // Normalize: label of each element becomes the least member of its class.
  std::map<int, int> least;
  for (int i = 0; i < n; ++i) {
    int l = labels_[i];
    if (l < 0) throw validation_error("partition: negative label");
    auto it = least.find(l);
    if (it == least.end()) {
      least.emplace(l, i);
    } else if (i < it->second) {
      it->second = i;
    }
  }
  for (int i = 0; i < n; ++i) labels_[i] = least.at(labels_[i]);
}

Partition Partition::identity(int n) {
  std::vector<int> l(n);
  std::iota(l.begin(), l.end(), 0);
  Partition p;
  p.labels_ = std::move(l);
  return p;
}

Partition Partition::total(int n) {
  Partition p;
  p.labels_.assign(n, 0);
  return p;
}

Partition Partition::kernel(const std::vector<int>& map) {
  return Partition(map);
}

int Partition::num_classes() const {
  int c = 0;
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == i) ++c;
  return c;
}

std::vector<std::vector<int>> Partition::classes() const {
  std::map<int, std::vector<int>> by_label;
  for (int i = 0; i < size(); ++i) by_label[labels_[i]].push_back(i);
  std::vector<std::vector<int>> out;
  out.reserve(by_label.size());
  for (auto& [l, cls] : by_label) out.push_back(std::move(cls));
  return out;
}

std::vector<int> Partition::class_index() const {
  std::vector<int> idx(size(), -1);
  int next = 0;
  std::map<int, int> seen;
  for (int i = 0; i < size(); ++i) {
    auto [it, inserted] = seen.emplace(labels_[i], next);
    if (inserted) ++next;
    idx[i] = it->second;
  }
  return idx;
}

bool Partition::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] != i) return false;
  return true;
}

bool Partition::is_total() const {
  for (int l : labels_)
    if (l != 0) return false;
  return size() > 0;
}

Partition Partition::meet(const Partition& other) const {
  if (other.size() != size()) throw validation_error("partition meet: size mismatch");
  std::map<std::pair<int, int>, int> pair_label;
  std::vector<int> l(size());
  for (int i = 0; i < size(); ++i) {
    auto key = std::make_pair(labels_[i], other.labels_[i]);
    auto [it, inserted] = pair_label.emplace(key, i);
    l[i] = it->second;
  }
  return Partition(std::move(l));
}

namespace {
int uf_find(std::vector<int>& parent, int i) {
  while (parent[i] != i) {
    parent[i] = parent[parent[i]];
    i = parent[i];
  }
  return i;
}
}  // namespace

Partition Partition::join_with(const Partition& other) const {
  if (other.size() != size()) throw validation_error("partition join: size mismatch");
  std::vector<int> parent(size());
  std::iota(parent.begin(), parent.end(), 0);
  auto unite = [&](int a, int b) {
    a = uf_find(parent, a);
    b = uf_find(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (int i = 0; i < size(); ++i) {
    unite(i, labels_[i]);
    unite(i, other.labels_[i]);
  }
  std::vector<int> l(size());
  for (int i = 0; i < size(); ++i) l[i] = uf_find(parent, i);
  return Partition(std::move(l));
}

bool Partition::leq(const Partition& other) const {
  if (other.size() != size()) throw validation_error("partition leq: size mismatch");
  for (int i = 0; i < size(); ++i)
    if (other.labels_[i] != other.labels_[labels_[i]]) return false;
  return true;
}

std::string Partition::to_block_string() const {
  std::string out;
  for (const auto& cls : classes()) {
    if (!out.empty()) out += '|';
    for (int e : cls) out += std::to_string(e);
  }
  return out;
}

Relation Relation::from_partition(const Partition& p) {
  Relation r(p.size());
  for (int a = 0; a < p.size(); ++a)
    for (int b = 0; b < p.size(); ++b)
      if (p.related(a, b)) r.set(a, b);
  return r;
}

Relation Relation::compose(const Relation& other) const {
  Relation out(n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      if (get(a, b))
        for (int c = 0; c < n_; ++c)
          if (other.get(b, c)) out.set(a, c);
  return out;
}

Relation relcompose(const Partition& p, const Partition& q, int k) {
  if (k < 1) throw validation_error("relcompose: k must be >= 1");
  Relation rp = Relation::from_partition(p);
  Relation rq = Relation::from_partition(q);
  Relation acc = rp;
  for (int i = 1; i < k; ++i) acc = acc.compose(i % 2 == 1 ? rq : rp);
  return acc;
}

}  // namespace ualg
