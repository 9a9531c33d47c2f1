#pragma once

#include <cstdint>

#include "eightvx/error.hpp"
#include "eightvx/params.hpp"

namespace eightvx {

// The three ways to split four ports into two pairs. With ports listed
// counterclockwise, P3 is the crossing pairing.
//   P1 = {0,1}{2,3},  P2 = {0,3}{1,2},  P3 = {0,2}{1,3}
enum class Pairing : uint8_t { P1 = 0, P2 = 1, P3 = 2 };

enum class Sign : uint8_t { Plus = 0, Minus = 1 };

struct SignedPairing {
  Pairing pairing = Pairing::P1;
  Sign sign = Sign::Plus;

  bool operator==(const SignedPairing&) const = default;
};

inline constexpr int kSignedPairingCount = 6;

// Dense index: P1+, P1-, P2+, P2-, P3+, P3-.
inline int sp_index(SignedPairing sp) {
  return int(sp.pairing) * 2 + int(sp.sign);
}

inline SignedPairing sp_from_index(int i) {
  return SignedPairing{Pairing(i / 2), Sign(i % 2)};
}

inline const char* sp_name(SignedPairing sp) {
  static const char* names[6] = {"s1+", "s1-", "s2+", "s2-", "s3+", "s3-"};
  return names[sp_index(sp)];
}

// Partner of `port` under the pairing (ports 0..3).
inline int pair_partner(Pairing p, int port) {
  switch (p) {
    case Pairing::P1: return port ^ 1;          // {0,1}{2,3}
    case Pairing::P2: return 3 - port;          // {0,3}{1,2}
    case Pairing::P3: return port ^ 2;          // {0,2}{1,3}
  }
  return -1;
}

// Sign of a pairing against an even pattern: plus iff the two ports in each
// pair carry opposite bits (one arrow in, one out per pair), minus iff equal
// bits. Even parity guarantees both pairs agree.
inline Sign pairing_sign(LocalPattern pat, Pairing p) {
  if (!even_pattern(pat)) fail(ErrorCode::InvalidPattern, "odd-parity pattern has no pairing sign");
  const int b0 = (pat >> 0) & 1;
  const int partner = pair_partner(p, 0);
  const int bp = (pat >> partner) & 1;
  return b0 == bp ? Sign::Minus : Sign::Plus;
}

inline SignedPairing compatible_signed_pairing(LocalPattern pat, Pairing p) {
  return SignedPairing{p, pairing_sign(pat, p)};
}

}  // namespace eightvx
