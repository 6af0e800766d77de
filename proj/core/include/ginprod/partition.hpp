#pragma once

#include <compare>
#include <stdexcept>
#include <vector>

namespace ginprod {

/// Integer partition with weakly increasing positive parts.  Partitions
/// index the trace monomials Tr W^{m_1} ... Tr W^{m_k} (m_1 <= ... <= m_k).
class Partition {
 public:
  Partition() = default;  // the empty partition of 0

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    int prev = 1;
    for (int p : parts_) {
      if (p < prev) throw std::invalid_argument("Partition: parts must be positive and weakly increasing");
      prev = p;
    }
  }

  static Partition sorted(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int weight() const {
    int m = 0;
    for (int p : parts_) m += p;
    return m;
  }
  bool empty() const { return parts_.empty(); }

  /// Multiplicity of the value j among the parts.
  int multiplicity(int j) const {
    int f = 0;
    for (int p : parts_) f += (p == j);
    return f;
  }

  auto operator<=>(const Partition&) const = default;

  std::string str() const;

 private:
  std::vector<int> parts_;
};

/// All partitions of m in lexicographic order on the weakly increasing
/// tuple: (1,1,1) < (1,2) < (3).
std::vector<Partition> partitions(int m);

}  // namespace ginprod
