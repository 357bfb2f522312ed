#include "pel/perm.hpp"

#include <numeric>
#include <stdexcept>

namespace pel {

Permutation::Permutation(std::vector<uint32_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (uint32_t v : images_) {
    if (v >= images_.size() || seen[v])
      throw std::invalid_argument("Permutation: image table is not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(uint32_t degree) {
  Permutation p;
  p.images_.resize(degree);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

Permutation Permutation::from_cycles(uint32_t degree,
                                     const std::vector<std::vector<uint32_t>>& cycles) {
  Permutation p = identity(degree);
  for (const auto& c : cycles) {
    for (size_t i = 0; i < c.size(); ++i) {
      uint32_t from = c[i], to = c[(i + 1) % c.size()];
      if (from >= degree || to >= degree)
        throw std::invalid_argument("Permutation::from_cycles: point out of range");
      p.images_[from] = to;
    }
  }
  // re-validate via the checking constructor
  return Permutation(std::move(p.images_));
}

bool Permutation::is_identity() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(degree());
  for (uint32_t i = 0; i < degree(); ++i) r.images_[images_[i]] = i;
  return r;
}

uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  uint64_t result = 1;
  for (uint32_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    uint64_t len = 0;
    for (uint32_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    result = std::lcm(result, len);
  }
  return result;
}

uint32_t Permutation::smallest_moved_point() const {
  for (uint32_t i = 0; i < degree(); ++i)
    if (images_[i] != i) return i;
  return degree();
}

std::string Permutation::cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (uint32_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += "(";
    bool first = true;
    for (uint32_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("Permutation compose: degree mismatch");
  std::vector<uint32_t> img(a.degree());
  for (uint32_t i = 0; i < a.degree(); ++i) img[i] = b[a[i]];
  return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  return g.inverse() * x * g;
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

bool commute(const Permutation& a, const Permutation& b) {
  // compare a*b with b*a pointwise, no temporaries
  for (uint32_t i = 0; i < a.degree(); ++i)
    if (b[a[i]] != a[b[i]]) return false;
  return true;
}

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_p_element(const Permutation& x, uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("is_p_element: p is not prime");
  uint64_t n = x.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

uint64_t element_order(const Permutation& x) { return x.order(); }

}  // namespace pel
