#include "bargain/adnb2.hpp"

#include <algorithm>
#include <numeric>

namespace bargain {

void Adnb2Instance::validate() const {
  const std::size_t g = goods();
  if (g == 0) throw InputError("market: at least one good required");
  if (u2.size() != g) throw InputError("market: utility rows differ in length");
  if (!amounts.empty() && amounts.size() != g)
    throw InputError("market: amounts must list one quantity per good");
  bool p1_wants = false, p2_wants = false;
  for (std::size_t j = 0; j < g; ++j) {
    if (u1[j] < 0 || u2[j] < 0) throw InputError("market: utilities must be nonnegative integers");
    if (u1[j] == 0 && u2[j] == 0)
      throw InputError("market: good " + std::to_string(j) + " is desired by neither player");
    p1_wants = p1_wants || u1[j] > 0;
    p2_wants = p2_wants || u2[j] > 0;
    if (!amounts.empty() && amounts[j].sign() <= 0)
      throw InputError("market: amounts must be positive");
  }
  if (!p1_wants || !p2_wants) throw InputError("market: each player must desire some good");
  if (c1.sign() < 0 || c2.sign() < 0) throw InputError("market: c must be nonnegative");
  if (w1 < 1 || w2 < 1) throw InputError("market: clouts w must be positive integers");
}

namespace {

Rational amount_of(const Adnb2Instance& inst, std::size_t j) {
  return inst.amounts.empty() ? Rational(1) : inst.amounts[j];
}

// Ratio u1/u2 ordering by cross-multiplication; u2 = 0 sorts first (infinite
// ratio), u1 = 0 last.
bool ratio_greater(const Adnb2Instance& inst, std::size_t a, std::size_t b) {
  return inst.u1[a] * inst.u2[b] > inst.u1[b] * inst.u2[a];
}
bool ratio_equal(const Adnb2Instance& inst, std::size_t a, std::size_t b) {
  return inst.u1[a] * inst.u2[b] == inst.u1[b] * inst.u2[a];
}

}  // namespace

Adnb2Instance merge_goods(const Adnb2Instance& raw) {
  raw.validate();
  std::vector<std::size_t> order(raw.goods());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return ratio_greater(raw, a, b); });

  Adnb2Instance out;
  out.c1 = raw.c1;
  out.c2 = raw.c2;
  out.w1 = raw.w1;
  out.w2 = raw.w2;

  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && ratio_equal(raw, order[i], order[j])) ++j;

    // Representative: the group member with the smallest u1 (smallest u2 for
    // goods player 1 does not value).  Every member converts into
    // representative units at the matching utility exchange rate.
    std::size_t rep = order[i];
    const bool by_u1 = raw.u1[order[i]] > 0;
    for (std::size_t k = i; k < j; ++k) {
      const auto& cur = by_u1 ? raw.u1 : raw.u2;
      if (cur[order[k]] < cur[rep]) rep = order[k];
    }
    Rational units;
    for (std::size_t k = i; k < j; ++k) {
      const Int& num = by_u1 ? raw.u1[order[k]] : raw.u2[order[k]];
      const Int& den = by_u1 ? raw.u1[rep] : raw.u2[rep];
      units += Rational(num, den) * amount_of(raw, order[k]);
    }
    out.u1.push_back(raw.u1[rep]);
    out.u2.push_back(raw.u2[rep]);
    out.amounts.push_back(units);
    i = j;
  }
  return out;
}

Adnb2Feasibility check_adnb2_feasible(const Adnb2Instance& inst) {
  inst.validate();
  const auto n = static_cast<int>(inst.goods());

  // Player 1 consumes greedily from the best-ratio end; an exactly exhausted
  // good rolls the index forward so the partial amount stays < the supply.
  int k1 = 0;
  Rational x;
  {
    Rational remaining = inst.c1;
    while (k1 < n) {
      if (remaining.is_zero()) break;
      const Rational have = Rational(inst.u1[static_cast<std::size_t>(k1)]) *
                            amount_of(inst, static_cast<std::size_t>(k1));
      if (remaining < have) {
        x = remaining / Rational(inst.u1[static_cast<std::size_t>(k1)]);
        remaining = Rational(0);
        break;
      }
      remaining -= have;
      ++k1;
    }
    if (!remaining.is_zero()) k1 = n + 1;  // not reachable even with everything
  }

  int k2 = n - 1;
  Rational y;
  {
    Rational remaining = inst.c2;
    while (k2 >= 0) {
      if (remaining.is_zero()) break;
      const Rational have = Rational(inst.u2[static_cast<std::size_t>(k2)]) *
                            amount_of(inst, static_cast<std::size_t>(k2));
      if (remaining < have) {
        y = remaining / Rational(inst.u2[static_cast<std::size_t>(k2)]);
        remaining = Rational(0);
        break;
      }
      remaining -= have;
      --k2;
    }
    if (!remaining.is_zero()) k2 = -2;
  }

  Adnb2Feasibility f;
  f.k1 = k1 + 1;  // 1-based for reporting
  f.k2 = k2 + 1;
  f.x = x;
  f.y = y;
  f.feasible =
      k1 < k2 || (k1 == k2 && k1 < n && x + y < amount_of(inst, static_cast<std::size_t>(k1)));
  return f;
}

namespace {

struct Candidate {
  Adnb2Equilibrium eq;
};

// Full equilibrium conditions, checked exactly; the construction guarantees
// most of them, this is the gate that picks the right (case, k).
bool equilibrium_holds(const Adnb2Instance& inst, const Adnb2Equilibrium& eq) {
  const std::size_t n = inst.goods();
  for (std::size_t j = 0; j < n; ++j) {
    if (eq.prices[j].sign() <= 0) return false;
    if (eq.alloc[j][0] + eq.alloc[j][1] != amount_of(inst, j)) return false;
    if (eq.alloc[j][0].sign() < 0 || eq.alloc[j][1].sign() < 0) return false;
  }
  for (int i = 0; i < 2; ++i) {
    const auto& u = i == 0 ? inst.u1 : inst.u2;
    const Rational gamma = i == 0 ? eq.gamma1 : eq.gamma2;
    Rational spend, utility;
    for (std::size_t j = 0; j < n; ++j) {
      // gamma must dominate every good's bang-per-buck, with equality on
      // anything actually bought.
      if (Rational(u[j]) > gamma * eq.prices[j]) return false;
      if (eq.alloc[j][static_cast<std::size_t>(i)].sign() > 0 &&
          Rational(u[j]) != gamma * eq.prices[j])
        return false;
      spend += eq.prices[j] * eq.alloc[j][static_cast<std::size_t>(i)];
      utility += Rational(u[j]) * eq.alloc[j][static_cast<std::size_t>(i)];
    }
    const Rational money = i == 0 ? eq.m1 : eq.m2;
    const Rational c = i == 0 ? inst.c1 : inst.c2;
    const Rational w = Rational(Int(i == 0 ? inst.w1 : inst.w2));
    if (spend != money) return false;
    if (gamma.sign() <= 0) return false;
    if (money != w + c / gamma) return false;
    if (utility != (i == 0 ? eq.v1 : eq.v2)) return false;
  }
  return true;
}

std::optional<Adnb2Equilibrium> try_case1(const Adnb2Instance& inst, std::size_t k) {
  const std::size_t n = inst.goods();
  Rational us1, us2;  // total utility mass on each side of the split
  for (std::size_t j = 0; j <= k; ++j) us1 += Rational(inst.u1[j]) * amount_of(inst, j);
  for (std::size_t j = k + 1; j < n; ++j) us2 += Rational(inst.u2[j]) * amount_of(inst, j);
  if (us1 <= inst.c1 || us2 <= inst.c2) return std::nullopt;

  // gamma_1 = 1/x with m1 = x * us1 = w1 + c1 * x, symmetrically for y.
  const Rational x = Rational(Int(inst.w1)) / (us1 - inst.c1);
  const Rational y = Rational(Int(inst.w2)) / (us2 - inst.c2);

  Adnb2Equilibrium eq;
  eq.prices.resize(n);
  eq.alloc.assign(n, {Rational(0), Rational(0)});
  for (std::size_t j = 0; j <= k; ++j) {
    eq.prices[j] = x * Rational(inst.u1[j]);
    eq.alloc[j][0] = amount_of(inst, j);
  }
  for (std::size_t j = k + 1; j < n; ++j) {
    eq.prices[j] = y * Rational(inst.u2[j]);
    eq.alloc[j][1] = amount_of(inst, j);
  }
  eq.v1 = us1;
  eq.v2 = us2;
  eq.gamma1 = 1 / x;
  eq.gamma2 = 1 / y;
  eq.m1 = Rational(Int(inst.w1)) + inst.c1 * x;
  eq.m2 = Rational(Int(inst.w2)) + inst.c2 * y;
  if (!equilibrium_holds(inst, eq)) return std::nullopt;
  return eq;
}

std::optional<Adnb2Equilibrium> try_case2(const Adnb2Instance& inst, std::size_t k) {
  const std::size_t n = inst.goods();
  if (inst.u1[k] == 0 || inst.u2[k] == 0) return std::nullopt;  // nobody shares it
  const Rational ratio = Rational(inst.u1[k], inst.u2[k]);

  // Joint budget: m1 + m2 = x * (sum of u1 mass up to k + ratio * u2 mass
  // beyond k) = w1 + w2 + (c1 + c2*ratio) * x.
  Rational mass;
  for (std::size_t j = 0; j <= k; ++j) mass += Rational(inst.u1[j]) * amount_of(inst, j);
  for (std::size_t j = k + 1; j < n; ++j)
    mass += ratio * Rational(inst.u2[j]) * amount_of(inst, j);
  const Rational denom = mass - inst.c1 - inst.c2 * ratio;
  if (denom.sign() <= 0) return std::nullopt;
  const Rational x = Rational(Int(inst.w1 + inst.w2)) / denom;

  Adnb2Equilibrium eq;
  eq.prices.resize(n);
  eq.alloc.assign(n, {Rational(0), Rational(0)});
  for (std::size_t j = 0; j <= k; ++j) eq.prices[j] = x * Rational(inst.u1[j]);
  for (std::size_t j = k + 1; j < n; ++j) eq.prices[j] = ratio * x * Rational(inst.u2[j]);

  eq.m1 = Rational(Int(inst.w1)) + inst.c1 * x;
  eq.m2 = Rational(Int(inst.w2)) + inst.c2 * ratio * x;

  // Player 1 exhausts its budget on goods below k plus a share of good k.
  Rational spent;
  for (std::size_t j = 0; j < k; ++j) {
    eq.alloc[j][0] = amount_of(inst, j);
    spent += eq.prices[j] * amount_of(inst, j);
  }
  const Rational share = (eq.m1 - spent) / eq.prices[k];
  if (share.sign() < 0 || share > amount_of(inst, k)) return std::nullopt;
  eq.alloc[k][0] = share;
  eq.alloc[k][1] = amount_of(inst, k) - share;
  for (std::size_t j = k + 1; j < n; ++j) eq.alloc[j][1] = amount_of(inst, j);

  eq.gamma1 = 1 / x;
  eq.gamma2 = 1 / (ratio * x);
  Rational v1, v2;
  for (std::size_t j = 0; j < n; ++j) {
    v1 += Rational(inst.u1[j]) * eq.alloc[j][0];
    v2 += Rational(inst.u2[j]) * eq.alloc[j][1];
  }
  eq.v1 = v1;
  eq.v2 = v2;
  eq.split_good = static_cast<int>(k);
  if (!equilibrium_holds(inst, eq)) return std::nullopt;
  return eq;
}

}  // namespace

Adnb2Equilibrium solve_adnb2(const Adnb2Instance& inst) {
  const Adnb2Feasibility feas = check_adnb2_feasible(inst);
  if (!feas.feasible)
    throw InfeasibleMarketError("market is infeasible: fallback utilities exhaust the goods",
                                feas.k1, feas.k2);

  std::optional<Adnb2Equilibrium> winner;
  auto consider = [&](std::optional<Adnb2Equilibrium> cand) {
    if (!cand) return;
    if (!winner) {
      winner = std::move(cand);
      return;
    }
    // Equilibrium prices are unique; later candidates may only re-derive the
    // same equilibrium at a case boundary.
    for (std::size_t j = 0; j < inst.goods(); ++j)
      if (winner->prices[j] != cand->prices[j] || winner->v1 != cand->v1 ||
          winner->v2 != cand->v2)
        throw SolverBugError("two distinct equilibria verified; prices should be unique");
  };

  for (std::size_t k = 0; k < inst.goods(); ++k) consider(try_case1(inst, k));
  for (std::size_t k = 0; k < inst.goods(); ++k) consider(try_case2(inst, k));
  if (!winner) throw SolverBugError("no equilibrium candidate verified on a feasible market");
  return *winner;
}

VerificationReport verify_equilibrium(const Adnb2Instance& inst, const Adnb2Equilibrium& eq) {
  VerificationReport rep;
  auto add = [&rep](std::string name, bool pass, std::string detail = {}) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const std::size_t n = inst.goods();
  bool sizes = eq.prices.size() == n && eq.alloc.size() == n;
  add("shape", sizes, "one price and one allocation pair per good");
  if (!sizes) return rep;

  bool clearing = true, positive = true;
  for (std::size_t j = 0; j < n; ++j) {
    clearing = clearing && eq.alloc[j][0] + eq.alloc[j][1] == amount_of(inst, j) &&
               eq.alloc[j][0].sign() >= 0 && eq.alloc[j][1].sign() >= 0;
    positive = positive && eq.prices[j].sign() > 0;
  }
  add("market-clearing", clearing, "every good fully allocated");
  add("prices-positive", positive);

  for (int i = 0; i < 2; ++i) {
    const auto& u = i == 0 ? inst.u1 : inst.u2;
    const Rational gamma = i == 0 ? eq.gamma1 : eq.gamma2;
    const Rational money = i == 0 ? eq.m1 : eq.m2;
    const Rational c = i == 0 ? inst.c1 : inst.c2;
    const Rational w = Rational(Int(i == 0 ? inst.w1 : inst.w2));
    const std::string who = i == 0 ? "buyer1" : "buyer2";
    bool bpb = gamma.sign() > 0;
    Rational spend, utility;
    for (std::size_t j = 0; j < n; ++j) {
      bpb = bpb && Rational(u[j]) <= gamma * eq.prices[j] &&
            (eq.alloc[j][static_cast<std::size_t>(i)].is_zero() ||
             Rational(u[j]) == gamma * eq.prices[j]);
      spend += eq.prices[j] * eq.alloc[j][static_cast<std::size_t>(i)];
      utility += Rational(u[j]) * eq.alloc[j][static_cast<std::size_t>(i)];
    }
    add(who + "-bang-per-buck", bpb, "only maximum bang-per-buck goods are bought");
    add(who + "-budget", spend == money && money == w + c / gamma, "m_i = w_i + c_i/gamma_i spent exactly");
    add(who + "-utility", utility == (i == 0 ? eq.v1 : eq.v2));
  }
  return rep;
}

}  // namespace bargain
