#include "conedd/zeroset.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace conedd {

ZeroSet::ZeroSet(std::size_t dim) : words_(words_for(dim), 0), dim_(dim) {}

ZeroSet ZeroSet::full(std::size_t dim) {
  ZeroSet z(dim);
  for (auto& w : z.words_) w = ~Word{0};
  if (std::size_t tail = dim % kWordBits; tail != 0)
    z.words_.back() = (Word{1} << tail) - 1;
  return z;
}

ZeroSet ZeroSet::of_indices(std::size_t dim, std::span<const std::size_t> indices) {
  ZeroSet z(dim);
  for (std::size_t k : indices) z.insert(k);
  return z;
}

ZeroSet ZeroSet::from_words(std::size_t dim, std::span<const Word> words) {
  if (words.size() != words_for(dim)) throw std::invalid_argument("zero set word count does not match dimension");
  ZeroSet z(dim);
  std::copy(words.begin(), words.end(), z.words_.begin());
  if (z != (z & full(dim))) throw std::invalid_argument("zero set has bits beyond its dimension");
  return z;
}

void ZeroSet::insert(std::size_t k) {
  if (k >= dim_) throw std::out_of_range("zero set index " + std::to_string(k) + " out of range");
  words_[k / kWordBits] |= Word{1} << (k % kWordBits);
}

void ZeroSet::erase(std::size_t k) {
  if (k >= dim_) throw std::out_of_range("zero set index " + std::to_string(k) + " out of range");
  words_[k / kWordBits] &= ~(Word{1} << (k % kWordBits));
}

std::size_t ZeroSet::count() const {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> ZeroSet::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w != 0) {
      out.push_back(i * kWordBits + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

void ZeroSet::require_same_dim(const ZeroSet& other) const {
  if (dim_ != other.dim_)
    throw std::invalid_argument("zero set dimension mismatch: " + std::to_string(dim_) + " vs " +
                                std::to_string(other.dim_));
}

bool ZeroSet::is_superset_of(const ZeroSet& other) const {
  require_same_dim(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != other.words_[i]) return false;
  return true;
}

ZeroSet ZeroSet::operator&(const ZeroSet& other) const {
  require_same_dim(other);
  ZeroSet out(dim_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = words_[i] & other.words_[i];
  return out;
}

std::string ZeroSet::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (std::size_t k : indices()) {
    if (!first) os << ',';
    os << k;
    first = false;
  }
  os << '}';
  return os.str();
}

void validate_groups(std::span<const ConstraintGroup> groups, std::size_t dim) {
  ZeroSet seen(dim);
  for (const auto& g : groups) {
    for (std::size_t j = 0; j < g.indices.size(); ++j) {
      std::size_t k = g.indices[j];
      if (k >= dim)
        throw std::invalid_argument("group index " + std::to_string(k) + " out of range for d=" +
                                    std::to_string(dim));
      if (j > 0 && g.indices[j - 1] >= k)
        throw std::invalid_argument("group indices must be strictly increasing");
      if (seen.contains(k))
        throw std::invalid_argument("index " + std::to_string(k) + " appears in two groups");
      seen.insert(k);
    }
  }
}

ZeroSet zeroset_of(std::span<const mpz_class> vector) {
  ZeroSet z(vector.size());
  for (std::size_t k = 0; k < vector.size(); ++k)
    if (sgn(vector[k]) == 0) z.insert(k);
  return z;
}

ZeroSet zeroset_of(std::span<const long> vector) {
  ZeroSet z(vector.size());
  for (std::size_t k = 0; k < vector.size(); ++k)
    if (vector[k] == 0) z.insert(k);
  return z;
}

ZeroSet intersect(const ZeroSet& a, const ZeroSet& b) { return a & b; }

bool is_superset(const ZeroSet& a, const ZeroSet& b) { return a.is_superset_of(b); }

bool group_satisfied(const ZeroSet& z, std::span<const ConstraintGroup> groups) {
  return GroupMasks(groups, z.dim()).satisfied(z);
}

GroupMasks::GroupMasks(std::span<const ConstraintGroup> groups, std::size_t dim) {
  validate_groups(groups, dim);
  groups_.reserve(groups.size());
  for (const auto& g : groups) {
    Group compiled{{}, g.indices.size()};
    for (std::size_t k : g.indices) {
      std::size_t word = k / ZeroSet::kWordBits;
      ZeroSet::Word bit = ZeroSet::Word{1} << (k % ZeroSet::kWordBits);
      if (!compiled.parts.empty() && compiled.parts.back().word == word)
        compiled.parts.back().mask |= bit;
      else
        compiled.parts.push_back({word, bit});
    }
    groups_.push_back(std::move(compiled));
  }
}

bool GroupMasks::satisfied(std::span<const ZeroSet::Word> words) const {
  for (const auto& g : groups_) {
    std::size_t present = 0;
    for (const auto& part : g.parts)
      present += static_cast<std::size_t>(std::popcount(words[part.word] & part.mask));
    if (present + 1 < g.size) return false;
  }
  return true;
}

}  // namespace conedd
