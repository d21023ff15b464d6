#ifndef PERMSEP_PERMUTATION_HPP
#define PERMSEP_PERMUTATION_HPP

#include <compare>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace permsep {

/// A bijection of the 2r index slots {1, ..., 2r} of an r-party operator.
///
/// Slot 2k-1 is the row (ket) index of party k and slot 2k its column (bra)
/// index. The permutation is stored in one-line word notation: images()[k-1]
/// is the image of slot k. All indices at this interface are 1-based.
class Permutation {
 public:
  /// Validates that `images` is a bijection of {1, ..., images.size()} and
  /// that the size is even and positive.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int parties);

  /// The global transpose (1,2)(3,4)...(2r-1,2r).
  static Permutation global_transpose(int parties);

  /// Product of pairwise disjoint transpositions on 2*parties slots.
  static Permutation from_transpositions(std::span<const std::pair<int, int>> pairs, int parties);

  int parties() const { return static_cast<int>(images_.size()) / 2; }
  int slots() const { return static_cast<int>(images_.size()); }

  /// Image of a 1-based slot.
  int operator()(int slot) const { return images_[slot - 1]; }

  const std::vector<int> &images() const { return images_; }

  Permutation inverse() const;

  /// Disjoint cycles of length >= 2, each starting at its smallest element,
  /// ordered by that element.
  std::vector<std::vector<int>> cycles() const;

  bool is_identity() const;

  /// "[1 3 2 4]"
  std::string word_string() const;
  /// "(2,3)" or "()" for the identity.
  std::string cycle_string() const;

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend std::strong_ordering operator<=>(const Permutation &a, const Permutation &b) {
    return a.images_ <=> b.images_;
  }

 private:
  std::vector<int> images_;
};

/// Permutation whose criterion map applies `first` and then `second`:
/// result(k) = second(first(k)), so that
/// apply_criterion(apply_criterion(A, first), second) == apply_criterion(A, compose(first, second)).
Permutation compose(const Permutation &first, const Permutation &second);

/// Membership in the group generated by same-parity slot transpositions and
/// the global transpose. These are exactly the permutations that keep the
/// odd/even slot classes intact or exchange them wholesale.
bool is_norm_preserving(const Permutation &sigma);

/// Whether two criteria are identified: mu is reached from sigma by a
/// norm-preserving post-map, or from sigma with the global transpose applied
/// first. The relation is an equivalence on permutations of equal size.
bool dependent(const Permutation &sigma, const Permutation &mu);

}  // namespace permsep

#endif
