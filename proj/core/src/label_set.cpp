#include "adasat/label_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace adasat {

LabelSet::LabelSet(std::initializer_list<int32_t> xs) {
  for (int32_t x : xs) insert(x);
}

LabelSet LabelSet::range(int32_t lo, int32_t hi) {
  if (lo < 0) throw std::invalid_argument("negative label in range");
  LabelSet s;
  s.elems_.reserve(hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0);
  for (int32_t x = lo; x <= hi; ++x) s.elems_.push_back(x);
  return s;
}

bool LabelSet::contains(int32_t x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

bool LabelSet::intersects(const LabelSet& other) const {
  auto a = elems_.begin();
  auto b = other.elems_.begin();
  while (a != elems_.end() && b != other.elems_.end()) {
    if (*a == *b) return true;
    if (*a < *b)
      ++a;
    else
      ++b;
  }
  return false;
}

bool LabelSet::subset_of(const LabelSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(),
                       elems_.begin(), elems_.end());
}

int32_t LabelSet::max_label() const {
  if (elems_.empty()) throw std::logic_error("max_label of empty label set");
  return elems_.back();
}

void LabelSet::insert(int32_t x) {
  if (x < 0) throw std::invalid_argument("negative justification label");
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x);
  if (it == elems_.end() || *it != x) elems_.insert(it, x);
}

void LabelSet::unite_with(const LabelSet& other) {
  if (other.elems_.empty()) return;
  if (elems_.empty()) {
    elems_ = other.elems_;
    return;
  }
  std::vector<int32_t> merged;
  merged.reserve(elems_.size() + other.elems_.size());
  std::set_union(elems_.begin(), elems_.end(), other.elems_.begin(),
                 other.elems_.end(), std::back_inserter(merged));
  elems_ = std::move(merged);
}

LabelSet LabelSet::unioned(const LabelSet& other) const {
  LabelSet out = *this;
  out.unite_with(other);
  return out;
}

LabelSet LabelSet::minus(const LabelSet& other) const {
  LabelSet out;
  out.elems_.reserve(elems_.size());
  std::set_difference(elems_.begin(), elems_.end(), other.elems_.begin(),
                      other.elems_.end(), std::back_inserter(out.elems_));
  return out;
}

std::string LabelSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(elems_[i]);
  }
  out += "}";
  return out;
}

}  // namespace adasat
