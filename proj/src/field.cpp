#include "sumprod/field.hpp"

#include <string>

namespace sumprod {

namespace {

constexpr u64 kInverseTableLimit = u64{1} << 22;

u64 mulmod64(u64 a, u64 b, u64 m) noexcept {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 powmod64(u64 b, u64 e, u64 m) noexcept {
  u64 r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mulmod64(r, b, m);
    b = mulmod64(b, b, m);
    e >>= 1;
  }
  return r;
}

std::vector<u64> distinct_prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(u64 n) noexcept {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These bases are deterministic for all 64-bit n.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(u64 p) {
  if (p < 3 || p > kMaxModulus || !is_prime(p)) {
    throw Error(ErrorKind::NotPrime,
                "modulus " + std::to_string(p) +
                    " must be an odd prime below 2^31");
  }
  p_ = static_cast<u32>(p);
  factors_ = std::make_shared<const std::vector<u64>>(
      distinct_prime_factors(p - 1));
  for (u32 g = 2; g < p_; ++g) {
    bool generator = true;
    for (u64 q : *factors_) {
      if (powmod64(g, (p - 1) / q, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) {
      primitive_root_ = g;
      break;
    }
  }
  if (p <= kInverseTableLimit) {
    std::vector<u32> table(p_);
    table[1] = 1;
    for (u32 i = 2; i < p_; ++i) {
      // inv(i) = -(p / i) * inv(p mod i)
      table[i] = static_cast<u32>(
          (p - static_cast<u64>(p / i) * table[p % i] % p) % p);
    }
    inverses_ = std::make_shared<const std::vector<u32>>(std::move(table));
  }
}

u32 Prime::inv(u32 a) const {
  if (a == 0) throw Error(ErrorKind::ZeroInverse, "0 has no inverse");
  if (inverses_) return (*inverses_)[a];
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  return reduce(t);
}

u32 Prime::pow(u32 base, u64 exp) const noexcept {
  return static_cast<u32>(powmod64(base, exp, p_));
}

Elem ProjPoint::value() const {
  if (infinite_) throw Error(ErrorKind::InvalidArgument, "point at infinity");
  return value_;
}

Elem cross_ratio(const Prime& p, const ProjPoint& a, const ProjPoint& b,
                 const ProjPoint& c, const ProjPoint& d) {
  const ProjPoint* pts[4] = {&a, &b, &c, &d};
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (*pts[i] == *pts[j]) {
        throw Error(ErrorKind::DegenerateQuadruple,
                    "cross-ratio needs four distinct points");
      }
    }
  }
  auto det = [&](const ProjPoint& u, const ProjPoint& v) {
    return p.sub(p.mul(u.hx(), v.hz()), p.mul(u.hz(), v.hx()));
  };
  const u32 num = p.mul(det(a, b), det(c, d));
  const u32 den = p.mul(det(a, c), det(b, d));
  return Elem{p.mul(num, p.inv(den))};
}

}  // namespace sumprod
