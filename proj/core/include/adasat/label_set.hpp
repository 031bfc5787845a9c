#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace adasat {

// Set of non-negative integer justification labels. Stored sorted and
// duplicate-free; most sets occurring in practice are empty or tiny.
class LabelSet {
public:
  LabelSet() = default;
  LabelSet(std::initializer_list<int32_t> xs);

  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static LabelSet range(int32_t lo, int32_t hi);

  bool empty() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  bool contains(int32_t x) const;
  bool intersects(const LabelSet& other) const;
  bool subset_of(const LabelSet& other) const;

  // Largest element; throws std::logic_error on the empty set.
  int32_t max_label() const;

  void insert(int32_t x);  // throws std::invalid_argument on negative labels
  void unite_with(const LabelSet& other);
  LabelSet unioned(const LabelSet& other) const;
  LabelSet minus(const LabelSet& other) const;

  bool operator==(const LabelSet&) const = default;

  std::vector<int32_t>::const_iterator begin() const { return elems_.begin(); }
  std::vector<int32_t>::const_iterator end() const { return elems_.end(); }

  std::string to_string() const;  // "{1,3,7}"

private:
  std::vector<int32_t> elems_;
};

}  // namespace adasat
