#ifndef UALG_PARTITION_HPP_
#define UALG_PARTITION_HPP_

#include <string>
#include <vector>

#include "ualg/errors.hpp"

namespace ualg {

/// Partition of {0..n-1} in canonical form: label[i] is the least element
/// of i's class, so label[label[i]] == label[i] and label[i] <= i.
class Partition {
public:
  Partition() = default;
  /// Normalizes an arbitrary label array (elements with equal labels are
  /// in the same class).
  explicit Partition(std::vector<int> labels);

  static Partition identity(int n);
  static Partition total(int n);
  /// Kernel of a map {0..n-1} -> values.
  static Partition kernel(const std::vector<int>& map);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<int>& labels() const { return labels_; }
  int label(int i) const { return labels_.at(i); }
  bool related(int a, int b) const { return labels_.at(a) == labels_.at(b); }

  int num_classes() const;
  /// Classes listed by ascending least element, each sorted ascending.
  std::vector<std::vector<int>> classes() const;
  /// class_index()[i] is the position of i's class in classes().
  std::vector<int> class_index() const;

  bool is_identity() const;
  bool is_total() const;

  Partition meet(const Partition& other) const;
  /// Join in the partition lattice (transitive closure of the union).
  /// For congruences of a common algebra this is also the congruence join.
  Partition join_with(const Partition& other) const;

  /// Refinement order: every class of *this is inside a class of other.
  bool leq(const Partition& other) const;

  /// Bar-separated block string, e.g. "02|13" (single-digit elements only).
  std::string to_block_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.labels_ <=> b.labels_;
  }

private:
  std::vector<int> labels_;
};

/// Binary relation on {0..n-1} as a dense boolean matrix.
class Relation {
public:
  Relation() = default;
  explicit Relation(int n) : n_(n), bits_(static_cast<size_t>(n) * n, false) {}
  static Relation from_partition(const Partition& p);

  int size() const { return n_; }
  bool get(int a, int b) const { return bits_[static_cast<size_t>(a) * n_ + b]; }
  void set(int a, int b, bool v = true) { bits_[static_cast<size_t>(a) * n_ + b] = v; }

  /// Relational product: (a,c) with some b, a R b and b S c.
  Relation compose(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

private:
  int n_ = 0;
  std::vector<bool> bits_;
};

/// k-fold alternating composite p o q o p o ... (k factors).
Relation relcompose(const Partition& p, const Partition& q, int k);

}  // namespace ualg

#endif  // UALG_PARTITION_HPP_
