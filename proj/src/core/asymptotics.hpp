#pragma once

#include "params.hpp"

namespace fracwave {

// The coupling constant selects one of three expansion regimes when a = 1.
enum class BCase { generic, even_pi_multiple, odd_pi_multiple };

// |b/pi - round(b/pi)| <= 1e-9 counts as a pi multiple.
BCase classify_b(double b);

struct BranchId {
  int branch = 1;  // 1: roots near i n pi (a=1) or i n pi sqrt(a) (a!=1)
                   // 2: roots near i n pi + i pi/2 (a=1) or i(n+1/2)pi (a!=1)
  long n = 0;
  BCase b_case = BCase::generic;
};

inline constexpr long kMinAsymptoticIndex = 10;

// Closed-form expansion of the branch root, including every printed
// correction term for the given regime. Requires |n| >= kMinAsymptoticIndex.
complexd asymptotic_root(const BranchId& id, const SystemParams& p);

inline complexd asymptotic_root(int branch, long n, const SystemParams& p) {
  return asymptotic_root(BranchId{branch, n, classify_b(p.b)}, p);
}

// Growth factor that turns |lambda_refined - asymptotic| into an O(1)
// quantity (the reciprocal of the expansion's remainder order); used for
// the scaled-residual column of asymptotic-comparison tables.
double remainder_scale(const BranchId& id, const SystemParams& p);

}  // namespace fracwave
