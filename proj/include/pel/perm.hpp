#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pel {

/// A permutation of {0..degree-1} stored as an image table.
///
/// Action convention (fixed project-wide): permutations act on the right,
/// i.e. the image of a point i under x is x[i], and (a*b)[i] = b[a[i]]
/// ("apply a, then b"). Conjugation is x^g = g^-1 * x * g.
class Permutation {
public:
  explicit Permutation(std::vector<uint32_t> images);
  static Permutation identity(uint32_t degree);
  /// Builds a permutation of the given degree from disjoint cycles,
  /// e.g. {{0,1},{2,3,4}}.
  static Permutation from_cycles(uint32_t degree,
                                 const std::vector<std::vector<uint32_t>>& cycles);

  uint32_t degree() const { return static_cast<uint32_t>(images_.size()); }
  uint32_t operator[](uint32_t i) const { return images_[i]; }
  const std::vector<uint32_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Least n >= 1 with x^n = identity (lcm of cycle lengths).
  uint64_t order() const;
  uint32_t smallest_moved_point() const;  // degree() if identity

  /// Cycle notation, e.g. "(0 1)(2 3 4)"; "()" for the identity.
  std::string cycle_string() const;

  bool operator==(const Permutation& o) const { return images_ == o.images_; }
  bool operator<(const Permutation& o) const { return images_ < o.images_; }

private:
  Permutation() = default;
  std::vector<uint32_t> images_;
};

/// (a*b)[i] = b[a[i]]: apply a first, then b. Throws on degree mismatch.
Permutation operator*(const Permutation& a, const Permutation& b);
inline Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }

/// g^-1 * x * g.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// Commutator [a,b] = a^-1 * b^-1 * a * b.
Permutation commutator(const Permutation& a, const Permutation& b);

bool commute(const Permutation& a, const Permutation& b);

/// True iff order(x) is a power of p (p^0 = identity counts). Throws if p
/// is not prime.
bool is_p_element(const Permutation& x, uint64_t p);

uint64_t element_order(const Permutation& x);

struct PermHash {
  size_t operator()(const Permutation& x) const {
    // FNV-1a over the image table
    uint64_t h = 1469598103934665603ull;
    for (uint32_t v : x.images()) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

bool is_prime(uint64_t n);

}  // namespace pel
