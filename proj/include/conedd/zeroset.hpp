#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace conedd {

/// Fixed-width bitmask over coordinate indices 0..d-1, packed 64 per word.
/// Bits at positions >= d are always clear.
class ZeroSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ZeroSet() = default;
  explicit ZeroSet(std::size_t dim);

  static ZeroSet full(std::size_t dim);
  static ZeroSet of_indices(std::size_t dim, std::span<const std::size_t> indices);
  /// Adopts packed words; throws if the word count is wrong or a bit >= dim is set.
  static ZeroSet from_words(std::size_t dim, std::span<const Word> words);

  static constexpr std::size_t words_for(std::size_t dim) {
    return (dim + kWordBits - 1) / kWordBits;
  }

  std::size_t dim() const { return dim_; }
  std::span<const Word> words() const { return words_; }

  bool contains(std::size_t k) const {
    return (words_[k / kWordBits] >> (k % kWordBits)) & 1u;
  }
  void insert(std::size_t k);
  void erase(std::size_t k);

  std::size_t count() const;
  std::vector<std::size_t> indices() const;

  /// True iff every member of `other` is also a member of *this.
  bool is_superset_of(const ZeroSet& other) const;
  ZeroSet operator&(const ZeroSet& other) const;

  friend bool operator==(const ZeroSet&, const ZeroSet&) = default;
  friend auto operator<=>(const ZeroSet&, const ZeroSet&) = default;

  std::string to_string() const;

 private:
  void require_same_dim(const ZeroSet& other) const;

  std::vector<Word> words_;
  std::size_t dim_ = 0;
};

/// Indices of coordinates forced to have at most one non-zero entry.
struct ConstraintGroup {
  std::vector<std::size_t> indices;

  friend bool operator==(const ConstraintGroup&, const ConstraintGroup&) = default;
};

/// Throws std::invalid_argument unless each group is strictly increasing,
/// within 0..dim-1, and disjoint from every other group.
void validate_groups(std::span<const ConstraintGroup> groups, std::size_t dim);

ZeroSet zeroset_of(std::span<const mpz_class> vector);
ZeroSet zeroset_of(std::span<const long> vector);

ZeroSet intersect(const ZeroSet& a, const ZeroSet& b);
bool is_superset(const ZeroSet& a, const ZeroSet& b);
inline std::size_t count(const ZeroSet& a) { return a.count(); }

/// True iff every group has at most one index absent from `z`.
bool group_satisfied(const ZeroSet& z, std::span<const ConstraintGroup> groups);

/// Groups pre-split into per-word bitmasks so the test is a handful of
/// AND/popcount operations per group.
class GroupMasks {
 public:
  GroupMasks() = default;
  GroupMasks(std::span<const ConstraintGroup> groups, std::size_t dim);

  bool satisfied(const ZeroSet& z) const { return satisfied(z.words()); }
  bool satisfied(std::span<const ZeroSet::Word> words) const;
  bool empty() const { return groups_.empty(); }

 private:
  struct Part {
    std::size_t word;
    ZeroSet::Word mask;
  };
  struct Group {
    std::vector<Part> parts;
    std::size_t size;
  };
  std::vector<Group> groups_;
};

}  // namespace conedd
