#pragma once

#include "bridgeland/lattice.hpp"

#include <random>

namespace fixtures {

using bridgeland::ChernCharacter;
using bridgeland::NSClass;
using bridgeland::Rational;
using bridgeland::Surface;

inline constexpr Surface P = Surface::P1xP1;
inline constexpr Surface B = Surface::BlpP2;

/// O(p, q) on P1xP1, O(pE + qF) on BlpP2.
inline ChernCharacter O(Surface s, int p = 0, int q = 0) {
    return ChernCharacter::line_bundle(s, NSClass(p, q));
}

/// O_E(E) on BlpP2.
inline ChernCharacter T() { return ChernCharacter(B, 0, NSClass(1, 0), Rational(-1, 2)); }

inline ChernCharacter G() { return ChernCharacter(P, 3, NSClass(1, 1), -1); }
inline ChernCharacter G1() { return ChernCharacter(B, 2, NSClass(1, 1), Rational(-1, 2)); }

inline ChernCharacter random_class(Surface s, std::mt19937& rng, int range = 4) {
    std::uniform_int_distribution<int> r(-3, 3), c(-range, range), h(-2 * range, 2 * range);
    return ChernCharacter(s, r(rng), NSClass(c(rng), c(rng)), Rational(h(rng), 2));
}

}  // namespace fixtures
