#ifndef PERMSEP_CRITERIA_HPP
#define PERMSEP_CRITERIA_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "permsep/permutation.hpp"

namespace permsep {

/// Per-subsystem role in a disjoint arrow configuration. The declaration
/// order is the total order used for canonical forms.
enum class Role : std::uint8_t { Free, Loop, Head, Tail };

char role_char(Role role);

/// One role per subsystem, with as many heads as tails.
class RoleAssignment {
 public:
  explicit RoleAssignment(std::vector<Role> roles);

  /// Parses a string over {F, L, H, T}, e.g. "HTLF".
  static RoleAssignment parse(std::string_view text);

  int parties() const { return static_cast<int>(roles_.size()); }
  Role operator[](int party) const { return roles_[party - 1]; }  // 1-based
  const std::vector<Role> &roles() const { return roles_; }
  int count(Role role) const;

  std::string to_string() const;

  friend bool operator==(const RoleAssignment &, const RoleAssignment &) = default;
  friend std::strong_ordering operator<=>(const RoleAssignment &a, const RoleAssignment &b) {
    return a.roles_ <=> b.roles_;
  }

 private:
  std::vector<Role> roles_;
};

RoleAssignment swap_head_tail(const RoleAssignment &a);
RoleAssignment swap_loop_free(const RoleAssignment &a);

/// Arrow from subsystem `head` to subsystem `tail` (1-based).
struct Arrow {
  int head;
  int tail;
  /// Reversed arrows (head after tail) are the R' reshuffles.
  bool primed() const { return head > tail; }
  friend bool operator==(const Arrow &, const Arrow &) = default;
};

/// The i-th smallest head paired with the i-th smallest tail.
std::vector<Arrow> arrows(const RoleAssignment &a);

struct CriterionClass {
  RoleAssignment canonical;
  int class_id;  ///< position in enumerate_classes(parties)
  std::string label;

  int parties() const { return canonical.parties(); }
  friend bool operator==(const CriterionClass &, const CriterionClass &) = default;
};

inline constexpr int kDefaultMaxParties = 8;

/// Lexicographic minimum over {id, swap_head_tail, swap_loop_free, both}.
RoleAssignment canonical_form(const RoleAssignment &a);

/// canonical_form wrapped with its enumeration index and label. Supported for
/// 1 <= parties <= kDefaultMaxParties.
CriterionClass canonicalize(const RoleAssignment &a);

/// Every class for `parties` subsystems, sorted by canonical form.
std::vector<CriterionClass> enumerate_classes(int parties, int max_parties = kDefaultMaxParties);

/// Orbit count (C(2r,r) + 2^r + even(r) C(r,r/2)) / 4 in exact arithmetic.
/// Throws std::overflow_error if an intermediate does not fit in 64 bits.
std::uint64_t count_classes(int parties);

/// Product of (2k, 2l-1) for each arrow k->l and (2m-1, 2m) for each loop m.
Permutation to_permutation(const RoleAssignment &a);
Permutation to_permutation(const CriterionClass &c);

/// Roles of the coset of sigma: party k is Free, Loop, Head or Tail according
/// to which of its slots 2k-1, 2k are sent to odd slots (first only, second
/// only, both, neither).
RoleAssignment roles_of(const Permutation &sigma);

/// The class in enumerate_classes(sigma.parties()) dependent on sigma.
/// Throws std::logic_error if the representative fails the dependence check.
CriterionClass class_of(const Permutation &sigma);

/// Display name such as "identity", "QT", "2QT", "R", "R+QT", "2R", "R+R'".
/// Uses the orbit member with the fewest loops and fewest primed arrows.
std::string label_class(const CriterionClass &c);
std::string label_roles(const RoleAssignment &a);

/// Per-arrow detail of the canonical form, e.g. "R(1->2) R'(4->3) QT(3)".
std::string describe(const RoleAssignment &a);

}  // namespace permsep

#endif
