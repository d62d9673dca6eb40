#ifndef REDCERT_MONOMIAL_HPP
#define REDCERT_MONOMIAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace redcert {

// Hard limits of the packed exponent representation below.
inline constexpr int kMaxVars = 8;
inline constexpr unsigned kMaxExp = 127;

/// A monomial in at most kMaxVars variables T0..T7, with the exponent of
/// T_i stored in byte i of a single 64-bit word.  Exponents are capped at
/// kMaxExp so that componentwise addition can be overflow-checked in one
/// mask test.
struct Monomial {
  std::uint64_t bits = 0;

  static Monomial one() { return Monomial{}; }

  static Monomial var(int i, unsigned e = 1) {
    Monomial m;
    m.set_exp(i, e);
    return m;
  }

  unsigned exp(int i) const { return unsigned(bits >> (8 * i)) & 0xffu; }

  void set_exp(int i, unsigned e) {
    if (e > kMaxExp) throw std::overflow_error("monomial exponent exceeds " + std::to_string(kMaxExp));
    bits = (bits & ~(std::uint64_t(0xff) << (8 * i))) | (std::uint64_t(e) << (8 * i));
  }

  unsigned total_degree() const {
    std::uint64_t x = bits;
    x = (x & 0x00ff00ff00ff00ffULL) + ((x >> 8) & 0x00ff00ff00ff00ffULL);
    x = (x & 0x0000ffff0000ffffULL) + ((x >> 16) & 0x0000ffff0000ffffULL);
    return unsigned((x + (x >> 32)) & 0xffff);
  }

  bool is_one() const { return bits == 0; }

  Monomial operator*(Monomial o) const {
    std::uint64_t s = bits + o.bits;
    // With every exponent <= 127 a per-byte sum never carries, so a set
    // high bit in any byte is exactly an exponent that left the range.
    if (s & 0x8080808080808080ULL)
      throw std::overflow_error("monomial degree overflow (exponent > 127)");
    return Monomial{s};
  }

  bool divides(Monomial o) const {
    // With all exponents <= 127, any per-byte underflow in o - *this leaves
    // a byte >= 128, so one mask test covers the componentwise comparison.
    return ((o.bits - bits) & 0x8080808080808080ULL) == 0;
  }

  Monomial divide(Monomial o) const {  // *this / o, caller checks o.divides(*this)
    return Monomial{bits - o.bits};
  }

  bool operator==(Monomial o) const { return bits == o.bits; }
  bool operator!=(Monomial o) const { return bits != o.bits; }
};

/// Graded lexicographic order with T0 < T1 < ... < T7: total degree first,
/// ties broken by the packed word, whose most significant byte is the
/// highest-index variable.
struct GrlexLess {
  bool operator()(Monomial a, Monomial b) const {
    unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) return da < db;
    return a.bits < b.bits;
  }
};

inline bool grlex_less(Monomial a, Monomial b) { return GrlexLess{}(a, b); }

}  // namespace redcert

#endif
