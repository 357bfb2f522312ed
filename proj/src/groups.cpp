#include "pel/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace pel {

namespace {

// ---- small helpers for building block-structured permutations ----

// image table that starts as the identity on `degree` points
struct ImageBuilder {
  std::vector<uint32_t> img;
  explicit ImageBuilder(uint32_t degree) : img(degree) {
    std::iota(img.begin(), img.end(), 0u);
  }
  Permutation perm() { return Permutation(img); }
};

uint64_t ipow(uint64_t base, uint64_t exp) {
  uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

uint64_t pow_mod(uint64_t base, uint64_t exp, uint64_t mod) {
  uint64_t r = 1 % mod;
  base %= mod;
  while (exp) {
    if (exp & 1) r = r * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return r;
}

uint64_t inv_mod(uint64_t a, uint64_t p) { return pow_mod(a, p - 2, p); }

// ---- individual families ----

PermGroup make_cyclic(uint64_t n) {
  if (n == 0) throw InvalidSpec("cyclic: n must be >= 1");
  if (n == 1) return PermGroup::trivial(1);
  ImageBuilder b(static_cast<uint32_t>(n));
  for (uint32_t i = 0; i < n; ++i) b.img[i] = (i + 1) % n;
  return PermGroup(static_cast<uint32_t>(n), {b.perm()});
}

PermGroup make_elementary_abelian(uint64_t p, uint64_t k) {
  if (!is_prime(p) || k == 0) throw InvalidSpec("elementary_abelian: need prime p, k >= 1");
  uint32_t degree = static_cast<uint32_t>(p * k);
  std::vector<Permutation> gens;
  for (uint64_t block = 0; block < k; ++block) {
    ImageBuilder b(degree);
    uint32_t off = static_cast<uint32_t>(block * p);
    for (uint32_t i = 0; i < p; ++i) b.img[off + i] = off + (i + 1) % p;
    gens.push_back(b.perm());
  }
  return PermGroup(degree, std::move(gens));
}

// D_{2n} on n points (n >= 3); the degenerate n = 1, 2 cases get regular
// actions so the constructor is total
PermGroup make_dihedral(uint64_t n) {
  if (n == 0) throw InvalidSpec("dihedral: n must be >= 1");
  if (n == 1) return make_cyclic(2);
  if (n == 2) return make_elementary_abelian(2, 2);
  uint32_t d = static_cast<uint32_t>(n);
  ImageBuilder rot(d), refl(d);
  for (uint32_t i = 0; i < n; ++i) {
    rot.img[i] = (i + 1) % n;
    refl.img[i] = static_cast<uint32_t>((n - i) % n);
  }
  return PermGroup(d, {rot.perm(), refl.perm()});
}

PermGroup make_symmetric(uint64_t n) {
  if (n == 0) throw InvalidSpec("symmetric: n must be >= 1");
  uint32_t d = static_cast<uint32_t>(n);
  if (n <= 1) return PermGroup::trivial(d);
  std::vector<Permutation> gens{Permutation::from_cycles(d, {{0, 1}})};
  if (n >= 3) {
    std::vector<uint32_t> cyc(n);
    std::iota(cyc.begin(), cyc.end(), 0u);
    gens.push_back(Permutation::from_cycles(d, {cyc}));
  }
  return PermGroup(d, std::move(gens));
}

PermGroup make_alternating(uint64_t n) {
  if (n < 3) throw InvalidSpec("alternating: n must be >= 3");
  uint32_t d = static_cast<uint32_t>(n);
  std::vector<Permutation> gens{Permutation::from_cycles(d, {{0, 1, 2}})};
  if (n > 3) {
    std::vector<uint32_t> cyc;
    if (n % 2 == 1) {  // n-cycle is even
      cyc.resize(n);
      std::iota(cyc.begin(), cyc.end(), 0u);
    } else {  // (n-1)-cycle fixing 0 is even
      cyc.resize(n - 1);
      std::iota(cyc.begin(), cyc.end(), 1u);
    }
    gens.push_back(Permutation::from_cycles(d, {cyc}));
  }
  return PermGroup(d, std::move(gens));
}

// action on the projective line over F_p: points 0..p-1, infinity = p
PermGroup make_psl2(uint64_t p) {
  if (!is_prime(p)) throw InvalidSpec("psl2: p must be prime");
  uint32_t d = static_cast<uint32_t>(p + 1), inf = static_cast<uint32_t>(p);
  ImageBuilder shift(d), invneg(d);
  for (uint32_t z = 0; z < p; ++z) shift.img[z] = (z + 1) % p;
  invneg.img[0] = inf;
  invneg.img[inf] = 0;
  for (uint32_t z = 1; z < p; ++z)
    invneg.img[z] = static_cast<uint32_t>((p - inv_mod(z, p)) % p);  // z -> -1/z
  return PermGroup(d, {shift.perm(), invneg.perm()});
}

// action on the p^2 - 1 nonzero vectors of (F_p)^2
PermGroup make_sl2(uint64_t p) {
  if (!is_prime(p)) throw InvalidSpec("sl2: p must be prime");
  uint32_t d = static_cast<uint32_t>(p * p - 1);
  auto idx = [p](uint64_t x, uint64_t y) { return static_cast<uint32_t>(x * p + y - 1); };
  ImageBuilder e(d), f(d);
  for (uint64_t x = 0; x < p; ++x)
    for (uint64_t y = 0; y < p; ++y) {
      if (x == 0 && y == 0) continue;
      e.img[idx(x, y)] = idx((x + y) % p, y);  // [[1,1],[0,1]]
      f.img[idx(x, y)] = idx(x, (x + y) % p);  // [[1,0],[1,1]]
    }
  return PermGroup(d, {e.perm(), f.perm()});
}

// carry-less multiply in F_{2^r} with a fixed irreducible polynomial
struct F2Field {
  uint32_t r;
  uint32_t poly;  // bit r set
  explicit F2Field(uint32_t r_) : r(r_) {
    switch (r) {
      case 2: poly = 0b111; break;            // x^2+x+1
      case 3: poly = 0b1011; break;           // x^3+x+1
      case 5: poly = 0b100101; break;         // x^5+x^2+1
      case 7: poly = 0b10000011; break;       // x^7+x+1
      default: throw InvalidSpec("singer_mersenne: supported r are 2, 3, 5, 7");
    }
  }
  uint32_t mul(uint32_t a, uint32_t b) const {
    uint32_t acc = 0;
    for (uint32_t i = 0; i < r; ++i)
      if ((a >> i) & 1) acc ^= b << i;
    for (int i = 2 * r - 2; i >= static_cast<int>(r); --i)
      if ((acc >> i) & 1) acc ^= poly << (i - r);
    return acc;
  }
};

// (C_2)^r : C_{p^k}, p = 2^r - 1, the cyclic part acting through a Singer
// cycle of order p; orbits: F_2^r (2^r points) + Z_{p^k} (faithfulness)
PermGroup make_singer(uint64_t r, uint64_t k) {
  if (k == 0) throw InvalidSpec("singer_mersenne: k must be >= 1");
  F2Field field(static_cast<uint32_t>(r));
  uint64_t p = ipow(2, r) - 1;
  if (!is_prime(p)) throw InvalidSpec("singer_mersenne: 2^r - 1 is not prime");
  uint64_t n = ipow(2, r), pk = ipow(p, k);
  uint32_t d = static_cast<uint32_t>(n + pk);
  std::vector<Permutation> gens;
  for (uint32_t bit = 0; bit < r; ++bit) {
    ImageBuilder b(d);
    for (uint32_t v = 0; v < n; ++v) b.img[v] = v ^ (1u << bit);
    gens.push_back(b.perm());
  }
  ImageBuilder c(d);
  for (uint32_t v = 0; v < n; ++v) c.img[v] = field.mul(v, 2);  // multiply by x
  for (uint64_t j = 0; j < pk; ++j)
    c.img[n + j] = static_cast<uint32_t>(n + (j + 1) % pk);
  gens.push_back(c.perm());
  return PermGroup(d, std::move(gens));
}

// quaternion units encoded as 2*u + (sign?1:0), u in {0:1, 1:i, 2:j, 3:k}
struct Q8 {
  // (unit, unit) -> (sign, unit)
  static std::pair<int, int> unit_mul(int a, int b) {
    if (a == 0) return {+1, b};
    if (b == 0) return {+1, a};
    if (a == b) return {-1, 0};
    // i*j=k, j*k=i, k*i=j (cyclic), reverse order negates
    if ((a % 3) + 1 == b || (a == 3 && b == 1)) return {+1, 6 - a - b};
    return {-1, 6 - a - b};
  }
  static int mul(int x, int y) {
    int ux = x >> 1, sx = (x & 1) ? -1 : +1;
    int uy = y >> 1, sy = (y & 1) ? -1 : +1;
    auto [s, u] = unit_mul(ux, uy);
    return 2 * u + ((s * sx * sy) < 0 ? 1 : 0);
  }
};

// Q_8 : C_{3^k}; Q_8 in its regular action on 8 points, the cyclic part
// inducing the automorphism i -> j -> k, plus a Z_{3^k} orbit
PermGroup make_q8_ext(uint64_t k) {
  if (k == 0) throw InvalidSpec("q8_ext: k must be >= 1");
  uint64_t m = ipow(3, k);
  uint32_t d = static_cast<uint32_t>(8 + m);
  std::vector<Permutation> gens;
  for (int unit : {2, 4}) {  // right multiplication by i and by j
    ImageBuilder b(d);
    for (int x = 0; x < 8; ++x) b.img[x] = static_cast<uint32_t>(Q8::mul(x, unit));
    gens.push_back(b.perm());
  }
  ImageBuilder c(d);
  // automorphism: fixes +-1, maps +-i -> +-j -> +-k -> +-i
  for (int x = 0; x < 8; ++x) {
    int u = x >> 1, s = x & 1;
    int nu = (u == 0) ? 0 : (u % 3) + 1;
    c.img[x] = static_cast<uint32_t>(2 * nu + s);
  }
  for (uint64_t j = 0; j < m; ++j) c.img[8 + j] = static_cast<uint32_t>(8 + (j + 1) % m);
  gens.push_back(c.perm());
  return PermGroup(d, std::move(gens));
}

// C_3 : C_{2^k} with the cyclic part acting by inversion
PermGroup make_c3_ext(uint64_t k) {
  if (k == 0) throw InvalidSpec("c3_ext: k must be >= 1");
  uint64_t m = ipow(2, k);
  uint32_t d = static_cast<uint32_t>(3 + m);
  ImageBuilder a(d), c(d);
  for (uint32_t i = 0; i < 3; ++i) {
    a.img[i] = (i + 1) % 3;
    c.img[i] = (3 - i) % 3;
  }
  for (uint64_t j = 0; j < m; ++j) c.img[3 + j] = static_cast<uint32_t>(3 + (j + 1) % m);
  return PermGroup(d, {a.perm(), c.perm()});
}

void validate_ex1(uint64_t p, uint64_t r) {
  if (!is_prime(p) || p == 2) throw InvalidSpec("ex1: p must be an odd prime");
  if (!is_prime(r)) throw InvalidSpec("ex1: r must be prime");
  if (r % p != 1) throw InvalidSpec("ex1: need r = 1 (mod p)");
}

// smallest element of multiplicative order exactly p in F_r
uint64_t scalar_of_order_p(uint64_t p, uint64_t r) {
  for (uint64_t m = 2; m < r; ++m)
    if (pow_mod(m, p, r) == 1) return m;
  throw std::logic_error("no order-p scalar found");  // unreachable: p | r-1
}

struct Ex1Layout {
  uint64_t p, r, mu;
  uint64_t nv;  // r^p points for V = (F_r)^p
  uint64_t na;  // p^3 points for A = (F_p)^3
  uint32_t d;
  Ex1Layout(uint64_t p_, uint64_t r_)
      : p(p_), r(r_), mu(scalar_of_order_p(p_, r_)), nv(ipow(r_, p_)), na(ipow(p_, 3)),
        d(static_cast<uint32_t>(nv + na)) {}
  // V points are indexed by base-r digit strings, A points by base-p
  std::vector<uint64_t> v_digits(uint64_t i) const {
    std::vector<uint64_t> w(p);
    for (uint64_t j = p; j-- > 0;) { w[j] = i % r; i /= r; }
    return w;
  }
  uint64_t v_index(const std::vector<uint64_t>& w) const {
    uint64_t i = 0;
    for (uint64_t j = 0; j < p; ++j) i = i * r + (w[j] % r);
    return i;
  }
};

// V:(A:B) of Example-3.12 shape: A = (C_p)^3 with B = C_p acting as one
// Jordan block; K = ker(J-1)^2 acts trivially on V, the module generator
// a = e3 acts as the scalar mu, b acts as diag(1, mu, ..., mu^{p-1})
PermGroup make_ex1(uint64_t p, uint64_t r) {
  validate_ex1(p, r);
  Ex1Layout L(p, r);
  std::vector<Permutation> gens;

  // V translations (p basis vectors)
  for (uint64_t axis = 0; axis < p; ++axis) {
    ImageBuilder b(L.d);
    for (uint64_t i = 0; i < L.nv; ++i) {
      auto w = L.v_digits(i);
      w[axis] = (w[axis] + 1) % r;
      b.img[i] = static_cast<uint32_t>(L.v_index(w));
    }
    gens.push_back(b.perm());
  }
  // A translations; the scalar action on V is mu^(e3-coordinate)
  for (uint64_t axis = 0; axis < 3; ++axis) {
    ImageBuilder b(L.d);
    uint64_t scalar = (axis == 2) ? L.mu : 1;
    if (scalar != 1)
      for (uint64_t i = 0; i < L.nv; ++i) {
        auto w = L.v_digits(i);
        for (auto& c : w) c = c * scalar % r;
        b.img[i] = static_cast<uint32_t>(L.v_index(w));
      }
    uint64_t step = ipow(p, 2 - axis);  // base-p digit for this axis
    for (uint64_t i = 0; i < L.na; ++i) {
      uint64_t digit = i / step % p;
      uint64_t j = i + ((digit + 1) % p - digit) * step;
      b.img[L.nv + i] = static_cast<uint32_t>(L.nv + j);
    }
    gens.push_back(b.perm());
  }
  // b: Jordan block on A, diag(1, mu, ..., mu^{p-1}) on V
  {
    ImageBuilder b(L.d);
    for (uint64_t i = 0; i < L.nv; ++i) {
      auto w = L.v_digits(i);
      uint64_t s = 1;
      for (uint64_t j = 0; j < p; ++j) {
        w[j] = w[j] * s % r;
        s = s * L.mu % r;
      }
      b.img[i] = static_cast<uint32_t>(L.v_index(w));
    }
    for (uint64_t i = 0; i < L.na; ++i) {
      uint64_t w0 = i / (p * p), w1 = i / p % p, w2 = i % p;
      uint64_t j = ((w0 + w1) % p) * p * p + ((w1 + w2) % p) * p + w2;
      b.img[L.nv + i] = static_cast<uint32_t>(L.nv + j);
    }
    gens.push_back(b.perm());
  }
  return PermGroup(L.d, std::move(gens));
}

// witness x in K \ Z(H): translation by e2 on the A orbit, trivial on V
Permutation ex1_witness(uint64_t p, uint64_t r) {
  validate_ex1(p, r);
  Ex1Layout L(p, r);
  ImageBuilder b(L.d);
  for (uint64_t i = 0; i < L.na; ++i) {
    uint64_t digit = i / p % p;
    uint64_t j = i + ((digit + 1) % p - digit) * p;
    b.img[L.nv + i] = static_cast<uint32_t>(L.nv + j);
  }
  return b.perm();
}

// V:D_16 of Example-3.13 shape, V = (F_r)^2; a of order 8 acts as -I,
// b as diag(-1, 1); orbits: V (r^2 points) + octagon (D_16 faithfulness)
PermGroup make_ex2(uint64_t r) {
  if (!is_prime(r) || r == 2) throw InvalidSpec("ex2: r must be an odd prime");
  uint32_t n = static_cast<uint32_t>(r * r);
  uint32_t d = n + 8;
  auto idx = [r](uint64_t x, uint64_t y) { return static_cast<uint32_t>((x % r) * r + y % r); };
  ImageBuilder v1(d), v2(d), a(d), b(d);
  for (uint64_t x = 0; x < r; ++x)
    for (uint64_t y = 0; y < r; ++y) {
      v1.img[idx(x, y)] = idx(x + 1, y);
      v2.img[idx(x, y)] = idx(x, y + 1);
      a.img[idx(x, y)] = idx(r - x, r - y);
      b.img[idx(x, y)] = idx(r - x, y);
    }
  for (uint32_t i = 0; i < 8; ++i) {
    a.img[n + i] = n + (i + 1) % 8;
    b.img[n + i] = n + (8 - i) % 8;
  }
  return PermGroup(d, {v1.perm(), v2.perm(), a.perm(), b.perm()});
}

Permutation ex2_witness(uint64_t r) {
  if (!is_prime(r) || r == 2) throw InvalidSpec("ex2: r must be an odd prime");
  uint32_t n = static_cast<uint32_t>(r * r);
  ImageBuilder b(n + 8);
  for (uint32_t i = 0; i < 8; ++i) b.img[n + i] = n + (i + 2) % 8;  // a^2, order 4
  return b.perm();
}

// C_35 : D_12 with s inverting both C_5 and C_7 and t inverting C_7 only;
// the derived C_3 of D_12 acts trivially, so N = C_3 is normal with
// G/N = D_10 x D_14. This is SmallGroup(420,30) in the usual catalog
// numbering. Orbits: Z_5 + Z_7 + a hexagon carrying D_12 faithfully.
PermGroup make_sg420_30() {
  uint32_t d = 18;
  ImageBuilder a(d), b(d), s(d), t(d);
  for (uint32_t i = 0; i < 5; ++i) {
    a.img[i] = (i + 1) % 5;
    s.img[i] = (5 - i) % 5;
  }
  for (uint32_t i = 0; i < 7; ++i) {
    b.img[5 + i] = 5 + (i + 1) % 7;
    s.img[5 + i] = 5 + (7 - i) % 7;
    t.img[5 + i] = 5 + (7 - i) % 7;
  }
  for (uint32_t i = 0; i < 6; ++i) {
    s.img[12 + i] = 12 + (i + 1) % 6;
    t.img[12 + i] = 12 + (6 - i) % 6;
  }
  return PermGroup(d, {a.perm(), b.perm(), s.perm(), t.perm()});
}

PermGroup make_product(const std::vector<GroupSpec>& factors) {
  std::vector<PermGroup> parts;
  parts.reserve(factors.size());
  uint64_t degree = 0;
  for (const auto& f : factors) {
    parts.push_back(construct(f));
    degree += parts.back().degree();
  }
  uint32_t d = static_cast<uint32_t>(degree);
  std::vector<Permutation> gens;
  uint32_t off = 0;
  for (const auto& part : parts) {
    for (const auto& g : part.generators()) {
      ImageBuilder b(d);
      for (uint32_t i = 0; i < part.degree(); ++i) b.img[off + i] = off + g[i];
      gens.push_back(b.perm());
    }
    off += part.degree();
  }
  return PermGroup(d, std::move(gens));
}

PermGroup make_perm_gens(const GroupSpec& spec) {
  if (spec.gens.empty()) throw InvalidSpec("perm_gens: no generators given");
  uint32_t d = spec.params.count("d") ? static_cast<uint32_t>(spec.param("d"))
                                      : static_cast<uint32_t>(spec.gens[0].size());
  std::vector<Permutation> gens;
  for (const auto& table : spec.gens) {
    if (table.size() != d) throw InvalidSpec("perm_gens: generator degree mismatch");
    gens.push_back(Permutation(table));
  }
  return PermGroup(d, std::move(gens));
}

}  // namespace

PermGroup construct(const GroupSpec& spec) {
  switch (spec.kind) {
    case GroupKind::cyclic: return make_cyclic(spec.param("n"));
    case GroupKind::elementary_abelian:
      return make_elementary_abelian(spec.param("p"), spec.param("k"));
    case GroupKind::dihedral: return make_dihedral(spec.param("n"));
    case GroupKind::symmetric: return make_symmetric(spec.param("n"));
    case GroupKind::alternating: return make_alternating(spec.param("n"));
    case GroupKind::psl2: return make_psl2(spec.param("p"));
    case GroupKind::sl2: return make_sl2(spec.param("p"));
    case GroupKind::singer_mersenne: return make_singer(spec.param("r"), spec.param("k"));
    case GroupKind::q8_ext: return make_q8_ext(spec.param("k"));
    case GroupKind::c3_ext: return make_c3_ext(spec.param("k"));
    case GroupKind::ex1: return make_ex1(spec.param("p"), spec.param("r"));
    case GroupKind::ex2: return make_ex2(spec.param("r"));
    case GroupKind::smallgroup_420_30: return make_sg420_30();
    case GroupKind::direct_product: return make_product(spec.factors);
    case GroupKind::perm_gens: return make_perm_gens(spec);
  }
  throw InvalidSpec("unknown group kind");
}

std::optional<BigInt> closed_form_order(const GroupSpec& spec) {
  auto fact = [](uint64_t n) {
    BigInt r = 1;
    for (uint64_t i = 2; i <= n; ++i) r *= i;
    return r;
  };
  switch (spec.kind) {
    case GroupKind::cyclic: return BigInt(spec.param("n"));
    case GroupKind::elementary_abelian:
      return boost::multiprecision::pow(BigInt(spec.param("p")),
                                        static_cast<unsigned>(spec.param("k")));
    case GroupKind::dihedral: return BigInt(2 * spec.param("n"));
    case GroupKind::symmetric: return fact(spec.param("n"));
    case GroupKind::alternating: return fact(spec.param("n")) / 2;
    case GroupKind::psl2: {
      BigInt p = spec.param("p");
      if (p == 2) return BigInt(6);
      if (p == 3) return BigInt(12);
      return p * (p * p - 1) / 2;
    }
    case GroupKind::sl2: {
      BigInt p = spec.param("p");
      return p * (p * p - 1);
    }
    case GroupKind::singer_mersenne: {
      unsigned r = static_cast<unsigned>(spec.param("r"));
      BigInt p = (BigInt(1) << r) - 1;
      return (BigInt(1) << r) *
             boost::multiprecision::pow(p, static_cast<unsigned>(spec.param("k")));
    }
    case GroupKind::q8_ext:
      return BigInt(8) * boost::multiprecision::pow(BigInt(3),
                                                    static_cast<unsigned>(spec.param("k")));
    case GroupKind::c3_ext:
      return BigInt(3) * boost::multiprecision::pow(BigInt(2),
                                                    static_cast<unsigned>(spec.param("k")));
    case GroupKind::ex1: {
      BigInt p = spec.param("p"), r = spec.param("r");
      return boost::multiprecision::pow(p, 4) *
             boost::multiprecision::pow(r, static_cast<unsigned>(spec.param("p")));
    }
    case GroupKind::ex2: {
      BigInt r = spec.param("r");
      return 16 * r * r;
    }
    case GroupKind::smallgroup_420_30: return BigInt(420);
    case GroupKind::direct_product: {
      BigInt n = 1;
      for (const auto& f : spec.factors) {
        auto m = closed_form_order(f);
        if (!m) return std::nullopt;
        n *= *m;
      }
      return n;
    }
    case GroupKind::perm_gens: return std::nullopt;
  }
  return std::nullopt;
}

Permutation example_witness(const GroupSpec& spec) {
  if (spec.kind == GroupKind::ex1) return ex1_witness(spec.param("p"), spec.param("r"));
  if (spec.kind == GroupKind::ex2) return ex2_witness(spec.param("r"));
  throw InvalidSpec("example_witness: only defined for ex1 and ex2");
}

Fingerprint fingerprint(const PermGroup& g) {
  Fingerprint fp;
  fp.order = g.order();
  const auto& elems = g.elements();

  std::map<uint64_t, uint64_t> orders;
  for (const auto& e : elems) ++orders[e.order()];
  fp.order_multiset.assign(orders.begin(), orders.end());

  fp.center_order = center(g).order();
  fp.derived_order = derived_subgroup(g).order();

  for (uint64_t p : prime_divisors(fp.order)) {
    Fingerprint::PrimeData pd;
    pd.p = p;
    pd.p_element_count = 0;
    for (const auto& e : elems)
      if (is_p_element(e, p)) ++pd.p_element_count;
    PermGroup syl = sylow_subgroup(g, p);
    pd.sylow_order = syl.order();
    pd.sylow_normal = is_normal(g, syl);
    pd.sylow_abelian = is_abelian(syl);
    pd.p_core_order = p_core(g, p).order();
    fp.primes.push_back(std::move(pd));
  }
  return fp;
}

std::string Fingerprint::str() const {
  std::ostringstream out;
  out << "|G|=" << order << " |Z|=" << center_order << " |G'|=" << derived_order
      << " orders={";
  for (size_t i = 0; i < order_multiset.size(); ++i) {
    if (i) out << ",";
    out << order_multiset[i].first << ":" << order_multiset[i].second;
  }
  out << "}";
  for (const auto& pd : primes)
    out << " p" << pd.p << "=(|G_p|=" << pd.p_element_count << ",|P|=" << pd.sylow_order
        << ",nrm=" << pd.sylow_normal << ",ab=" << pd.sylow_abelian
        << ",|O_p|=" << pd.p_core_order << ")";
  return out.str();
}

}  // namespace pel
