#pragma once

#include <array>
#include <optional>
#include <vector>

#include "bargain/game.hpp"

namespace bargain {

/// Two buyers, divisible goods, linear utilities.  Raw instances carry one
/// unit of each good; merged instances may carry arbitrary amounts.
struct Adnb2Instance {
  std::vector<Int> u1, u2;        // integer utility per unit of each good
  std::vector<Rational> amounts;  // available quantity per good, > 0
  Rational c1, c2;                // fallback utilities, >= 0
  long long w1 = 1, w2 = 1;

  std::size_t goods() const { return u1.size(); }
  void validate() const;
};

struct Adnb2Feasibility {
  bool feasible = false;
  int k1 = 0, k2 = 0;  // 1-based goods reached by the two greedy sweeps
  Rational x, y;       // partial amounts consumed of goods k1 / k2
};

struct Adnb2Equilibrium {
  std::vector<Rational> prices;                    // > 0 per good
  std::vector<std::array<Rational, 2>> alloc;      // alloc[j] = {x_1j, x_2j}
  Rational v1, v2;
  Rational gamma1, gamma2;  // maximum bang-per-buck of each buyer
  Rational m1, m2;          // money spent: m_i = w_i + c_i / gamma_i
  std::optional<int> split_good;  // 0-based shared good when both buy it
};

/// Collapses goods with equal utility ratios into single representatives,
/// preserving each player's total attainable utility; output ratios are
/// strictly decreasing.
Adnb2Instance merge_goods(const Adnb2Instance& raw);

/// Greedy feasibility sweep over a merged, sorted instance.
Adnb2Feasibility check_adnb2_feasible(const Adnb2Instance& inst);

/// Scans the O(n) split/share candidates and returns the unique verified
/// market equilibrium.  Requires a merged instance; throws
/// InfeasibleMarketError when the fallback utilities are not jointly
/// improvable.
Adnb2Equilibrium solve_adnb2(const Adnb2Instance& inst);

/// Exact re-checks of the equilibrium conditions: market clearing, budget
/// identities, and per-good bang-per-buck optimality.
VerificationReport verify_equilibrium(const Adnb2Instance& inst, const Adnb2Equilibrium& eq);

}  // namespace bargain
