#include "permsep/permutation.hpp"

#include <sstream>
#include <stdexcept>

namespace permsep {

namespace {

void require_parties(int parties) {
  if (parties < 1) {
    throw std::invalid_argument("party count must be >= 1, got " + std::to_string(parties));
  }
}

void require_same_size(const Permutation &a, const Permutation &b) {
  if (a.slots() != b.slots()) {
    throw std::invalid_argument("permutations act on different slot counts: " + std::to_string(a.slots()) +
                                " vs " + std::to_string(b.slots()));
  }
}

}  // namespace

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const auto n = images_.size();
  if (n == 0 || n % 2 != 0) {
    throw std::invalid_argument("a permutation of index slots needs an even, positive length; got " +
                                std::to_string(n));
  }
  std::vector<bool> seen(n + 1, false);
  for (int v : images_) {
    if (v < 1 || static_cast<std::size_t>(v) > n) {
      throw std::invalid_argument("permutation image " + std::to_string(v) + " outside 1.." + std::to_string(n));
    }
    if (seen[v]) {
      throw std::invalid_argument("permutation image " + std::to_string(v) + " appears twice");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int parties) {
  require_parties(parties);
  std::vector<int> w(2 * parties);
  for (int k = 0; k < 2 * parties; ++k) w[k] = k + 1;
  return Permutation(std::move(w));
}

Permutation Permutation::global_transpose(int parties) {
  require_parties(parties);
  std::vector<int> w(2 * parties);
  for (int k = 1; k <= parties; ++k) {
    w[2 * k - 2] = 2 * k;
    w[2 * k - 1] = 2 * k - 1;
  }
  return Permutation(std::move(w));
}

Permutation Permutation::from_transpositions(std::span<const std::pair<int, int>> pairs, int parties) {
  require_parties(parties);
  const int n = 2 * parties;
  std::vector<int> w(n);
  for (int k = 0; k < n; ++k) w[k] = k + 1;
  std::vector<bool> used(n + 1, false);
  for (auto [a, b] : pairs) {
    if (a < 1 || a > n || b < 1 || b > n) {
      throw std::invalid_argument("transposition (" + std::to_string(a) + "," + std::to_string(b) +
                                  ") outside 1.." + std::to_string(n));
    }
    if (a == b || used[a] || used[b]) {
      throw std::invalid_argument("transpositions are not disjoint at (" + std::to_string(a) + "," +
                                  std::to_string(b) + ")");
    }
    used[a] = used[b] = true;
    std::swap(w[a - 1], w[b - 1]);
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> w(images_.size());
  for (std::size_t k = 0; k < images_.size(); ++k) w[images_[k] - 1] = static_cast<int>(k) + 1;
  return Permutation(std::move(w));
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size() + 1, false);
  for (int start = 1; start <= slots(); ++start) {
    if (seen[start] || (*this)(start) == start) continue;
    std::vector<int> cycle;
    for (int k = start; !seen[k]; k = (*this)(k)) {
      seen[k] = true;
      cycle.push_back(k);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= slots(); ++k) {
    if ((*this)(k) != k) return false;
  }
  return true;
}

std::string Permutation::word_string() const {
  std::ostringstream out;
  out << '[';
  for (std::size_t k = 0; k < images_.size(); ++k) {
    if (k) out << ' ';
    out << images_[k];
  }
  out << ']';
  return out.str();
}

std::string Permutation::cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::ostringstream out;
  for (const auto &c : cs) {
    out << '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) out << ',';
      out << c[k];
    }
    out << ')';
  }
  return out.str();
}

Permutation compose(const Permutation &first, const Permutation &second) {
  require_same_size(first, second);
  std::vector<int> w(first.slots());
  for (int k = 1; k <= first.slots(); ++k) w[k - 1] = second(first(k));
  return Permutation(std::move(w));
}

bool is_norm_preserving(const Permutation &sigma) {
  // Either every slot keeps its parity or every slot flips it.
  const bool keeps_first = (sigma(1) % 2) == 1;
  for (int k = 1; k <= sigma.slots(); ++k) {
    const bool keeps = (sigma(k) % 2) == (k % 2);
    if (keeps != keeps_first) return false;
  }
  return true;
}

bool dependent(const Permutation &sigma, const Permutation &mu) {
  require_same_size(sigma, mu);
  const auto sigma_inv = sigma.inverse();
  if (is_norm_preserving(compose(sigma_inv, mu))) return true;
  // The transpose-first partner of sigma applies the global transpose first.
  const auto tau = Permutation::global_transpose(sigma.parties());
  return is_norm_preserving(compose(compose(sigma_inv, tau), mu));
}

}  // namespace permsep
