#include "permsep/criteria.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>

namespace permsep {

char role_char(Role role) {
  switch (role) {
    case Role::Free: return 'F';
    case Role::Loop: return 'L';
    case Role::Head: return 'H';
    case Role::Tail: return 'T';
  }
  return '?';
}

RoleAssignment::RoleAssignment(std::vector<Role> roles) : roles_(std::move(roles)) {
  if (roles_.empty()) throw std::invalid_argument("role assignment needs at least one subsystem");
  if (count(Role::Head) != count(Role::Tail)) {
    throw std::invalid_argument("role assignment " + to_string() + " has " + std::to_string(count(Role::Head)) +
                                " heads but " + std::to_string(count(Role::Tail)) + " tails");
  }
}

RoleAssignment RoleAssignment::parse(std::string_view text) {
  std::vector<Role> roles;
  roles.reserve(text.size());
  for (char ch : text) {
    switch (ch) {
      case 'F': roles.push_back(Role::Free); break;
      case 'L': roles.push_back(Role::Loop); break;
      case 'H': roles.push_back(Role::Head); break;
      case 'T': roles.push_back(Role::Tail); break;
      default: throw std::invalid_argument(std::string("unknown role character '") + ch + "' (expected F, L, H, T)");
    }
  }
  return RoleAssignment(std::move(roles));
}

int RoleAssignment::count(Role role) const {
  return static_cast<int>(std::count(roles_.begin(), roles_.end(), role));
}

std::string RoleAssignment::to_string() const {
  std::string s;
  for (Role r : roles_) s.push_back(role_char(r));
  return s;
}

RoleAssignment swap_head_tail(const RoleAssignment &a) {
  auto roles = a.roles();
  for (Role &r : roles) {
    if (r == Role::Head) r = Role::Tail;
    else if (r == Role::Tail) r = Role::Head;
  }
  return RoleAssignment(std::move(roles));
}

RoleAssignment swap_loop_free(const RoleAssignment &a) {
  auto roles = a.roles();
  for (Role &r : roles) {
    if (r == Role::Loop) r = Role::Free;
    else if (r == Role::Free) r = Role::Loop;
  }
  return RoleAssignment(std::move(roles));
}

std::vector<Arrow> arrows(const RoleAssignment &a) {
  std::vector<int> heads, tails;
  for (int k = 1; k <= a.parties(); ++k) {
    if (a[k] == Role::Head) heads.push_back(k);
    if (a[k] == Role::Tail) tails.push_back(k);
  }
  std::vector<Arrow> out;
  for (std::size_t i = 0; i < heads.size(); ++i) out.push_back({heads[i], tails[i]});
  return out;
}

RoleAssignment canonical_form(const RoleAssignment &a) {
  const auto ht = swap_head_tail(a);
  return std::min({a, ht, swap_loop_free(a), swap_loop_free(ht)});
}

namespace {

std::vector<CriterionClass> build_classes(int parties) {
  std::vector<RoleAssignment> forms;
  std::vector<Role> roles(parties, Role::Free);
  // Odometer over all 4^r role sequences; keep the balanced canonical ones.
  while (true) {
    int heads = 0, tails = 0;
    for (Role r : roles) {
      heads += r == Role::Head;
      tails += r == Role::Tail;
    }
    if (heads == tails) {
      RoleAssignment a(roles);
      if (canonical_form(a) == a) forms.push_back(std::move(a));
    }
    int k = parties - 1;
    while (k >= 0 && roles[k] == Role::Tail) roles[k--] = Role::Free;
    if (k < 0) break;
    roles[k] = static_cast<Role>(static_cast<int>(roles[k]) + 1);
  }
  // The odometer visits sequences in lexicographic order already.
  std::vector<CriterionClass> out;
  out.reserve(forms.size());
  for (std::size_t i = 0; i < forms.size(); ++i) {
    auto label = label_roles(forms[i]);
    out.push_back({std::move(forms[i]), static_cast<int>(i), std::move(label)});
  }
  return out;
}

const std::vector<CriterionClass> &class_table(int parties) {
  static const auto tables = [] {
    std::array<std::vector<CriterionClass>, kDefaultMaxParties + 1> t;
    for (int r = 1; r <= kDefaultMaxParties; ++r) t[r] = build_classes(r);
    return t;
  }();
  return tables[parties];
}

std::string term(int count, const char *name) {
  return count == 1 ? std::string(name) : std::to_string(count) + name;
}

bool mul_checked(std::uint64_t a, std::uint64_t b, std::uint64_t &out) { return !__builtin_mul_overflow(a, b, &out); }

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays an integer at every step.
    std::uint64_t next;
    if (!mul_checked(result, static_cast<std::uint64_t>(n - k + i), next)) {
      throw std::overflow_error("binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows 64 bits");
    }
    result = next / static_cast<std::uint64_t>(i);
  }
  return result;
}

}  // namespace

CriterionClass canonicalize(const RoleAssignment &a) {
  auto form = canonical_form(a);
  const int r = form.parties();
  if (r > kDefaultMaxParties) {
    throw std::invalid_argument("canonicalize supports up to " + std::to_string(kDefaultMaxParties) +
                                " parties, got " + std::to_string(r));
  }
  const auto &table = class_table(r);
  auto it = std::lower_bound(table.begin(), table.end(), form,
                             [](const CriterionClass &c, const RoleAssignment &f) { return c.canonical < f; });
  if (it == table.end() || it->canonical != form) {
    throw std::logic_error("canonical form " + form.to_string() + " missing from the class table");
  }
  return *it;
}

std::vector<CriterionClass> enumerate_classes(int parties, int max_parties) {
  if (parties < 1 || parties > max_parties) {
    throw std::invalid_argument("party count " + std::to_string(parties) + " outside 1.." + std::to_string(max_parties));
  }
  if (parties <= kDefaultMaxParties) return class_table(parties);
  return build_classes(parties);
}

std::uint64_t count_classes(int parties) {
  if (parties < 1) throw std::invalid_argument("party count must be >= 1, got " + std::to_string(parties));
  if (parties >= 63) throw std::overflow_error("2^r overflows 64 bits for r = " + std::to_string(parties));
  std::uint64_t total = binomial(2 * parties, parties);
  const std::uint64_t pow2 = std::uint64_t{1} << parties;
  if (__builtin_add_overflow(total, pow2, &total)) throw std::overflow_error("class count overflows 64 bits");
  if (parties % 2 == 0 && __builtin_add_overflow(total, binomial(parties, parties / 2), &total)) {
    throw std::overflow_error("class count overflows 64 bits");
  }
  if (total % 4 != 0) {
    throw std::logic_error("orbit count numerator " + std::to_string(total) + " is not divisible by 4");
  }
  return total / 4;
}

Permutation to_permutation(const RoleAssignment &a) {
  std::vector<std::pair<int, int>> pairs;
  for (const Arrow &arrow : arrows(a)) pairs.emplace_back(2 * arrow.head, 2 * arrow.tail - 1);
  for (int m = 1; m <= a.parties(); ++m) {
    if (a[m] == Role::Loop) pairs.emplace_back(2 * m - 1, 2 * m);
  }
  return Permutation::from_transpositions(pairs, a.parties());
}

Permutation to_permutation(const CriterionClass &c) { return to_permutation(c.canonical); }

RoleAssignment roles_of(const Permutation &sigma) {
  std::vector<Role> roles(sigma.parties());
  for (int k = 1; k <= sigma.parties(); ++k) {
    const bool row_odd = sigma(2 * k - 1) % 2 == 1;
    const bool col_odd = sigma(2 * k) % 2 == 1;
    if (row_odd && col_odd) roles[k - 1] = Role::Head;
    else if (row_odd) roles[k - 1] = Role::Free;
    else if (col_odd) roles[k - 1] = Role::Loop;
    else roles[k - 1] = Role::Tail;
  }
  return RoleAssignment(std::move(roles));
}

CriterionClass class_of(const Permutation &sigma) {
  auto c = canonicalize(roles_of(sigma));
  if (!dependent(sigma, to_permutation(c))) {
    throw std::logic_error("permutation " + sigma.word_string() + " is not dependent on its class representative " +
                           c.canonical.to_string());
  }
  return c;
}

std::string label_roles(const RoleAssignment &a) {
  const int loops = std::min(a.count(Role::Loop), a.count(Role::Free));
  const auto arrs = arrows(a);
  const int total = static_cast<int>(arrs.size());
  const int primed_here = static_cast<int>(std::count_if(arrs.begin(), arrs.end(), [](const Arrow &x) { return x.primed(); }));
  // Swapping heads with tails turns the primed count p into total - p.
  const int primed = std::min(primed_here, total - primed_here);
  const int plain = total - primed;

  std::vector<std::string> parts;
  if (plain > 0) parts.push_back(term(plain, "R"));
  if (primed > 0) parts.push_back(term(primed, "R'"));
  if (loops > 0) parts.push_back(term(loops, "QT"));
  if (parts.empty()) return "identity";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "+" + parts[i];
  return out;
}

std::string label_class(const CriterionClass &c) { return label_roles(c.canonical); }

std::string describe(const RoleAssignment &a) {
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << ' ';
    first = false;
  };
  for (const Arrow &arrow : arrows(a)) {
    sep();
    out << (arrow.primed() ? "R'(" : "R(") << arrow.head << "->" << arrow.tail << ')';
  }
  for (int m = 1; m <= a.parties(); ++m) {
    if (a[m] == Role::Loop) {
      sep();
      out << "QT(" << m << ')';
    }
  }
  if (first) out << "identity";
  return out.str();
}

}  // namespace permsep
