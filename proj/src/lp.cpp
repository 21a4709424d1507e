#include "bargain/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace bargain {

namespace {

// Standard-form tableau: maximize over equality rows with nonnegative
// variables.  Columns are laid out as [structural | slack | artificial];
// every row gets an artificial so the starting basis is the identity and
// the final reduced-cost entries under the artificial block read off the
// row multipliers directly.
struct Tableau {
  RationalMatrix body;      // active rows x total columns
  RationalVector rhs;       // active rows, kept >= 0
  RationalVector cost1;     // phase-1 reduced costs
  RationalVector cost2;     // phase-2 reduced costs
  Rational value1, value2;
  std::vector<Eigen::Index> basis;     // basic column per active row
  std::vector<Eigen::Index> orig_row;  // active row -> original constraint
  Eigen::Index art_start = 0;

  Eigen::Index rows() const { return body.rows(); }
  Eigen::Index cols() const { return body.cols(); }

  void pivot(Eigen::Index r, Eigen::Index c) {
    const Rational piv = body(r, c);
    body.row(r) /= piv;
    rhs(r) /= piv;
    for (Eigen::Index i = 0; i < rows(); ++i) {
      if (i == r || body(i, c).is_zero()) continue;
      const Rational f = body(i, c);
      body.row(i) -= f * body.row(r);
      rhs(i) -= f * rhs(r);
    }
    const Rational f1 = cost1(c);
    if (!f1.is_zero()) {
      cost1 -= f1 * body.row(r).transpose();
      value1 += f1 * rhs(r);
    }
    const Rational f2 = cost2(c);
    if (!f2.is_zero()) {
      cost2 -= f2 * body.row(r).transpose();
      value2 += f2 * rhs(r);
    }
    basis[static_cast<std::size_t>(r)] = c;
  }

  // Bland's rule: entering column is the lowest-index improving one, the
  // leaving row breaks ratio ties by lowest basic column.  Returns false
  // when the current phase objective admits no improving column.
  // Throws only in phase 2, where a missing blocking row means unbounded.
  enum class Step { improved, done, unbounded };

  Step step(const RationalVector& reduced, Eigen::Index col_limit) {
    Eigen::Index enter = -1;
    for (Eigen::Index j = 0; j < col_limit; ++j) {
      if (reduced(j).sign() > 0) {
        enter = j;
        break;
      }
    }
    if (enter < 0) return Step::done;

    Eigen::Index leave = -1;
    Rational best;
    for (Eigen::Index i = 0; i < rows(); ++i) {
      if (body(i, enter).sign() <= 0) continue;
      Rational ratio = rhs(i) / body(i, enter);
      if (leave < 0 || ratio < best ||
          (ratio == best &&
           basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
        leave = i;
        best = ratio;
      }
    }
    if (leave < 0) return Step::unbounded;
    pivot(leave, enter);
    return Step::improved;
  }
};

void validate(const LpProblem& p) {
  if (p.n_vars() < 1) throw std::invalid_argument("lp: at least one variable required");
  if (!p.nonneg.empty() && p.nonneg.size() != static_cast<std::size_t>(p.n_vars()))
    throw std::invalid_argument("lp: nonneg flags do not match the variable count");
  for (std::size_t j = 0; j < p.constraints.size(); ++j) {
    if (p.constraints[j].row.size() != p.n_vars())
      throw std::invalid_argument("lp: constraint " + std::to_string(j) +
                                  " has wrong row length");
  }
}

}  // namespace

LpOutcome solve_lp(const LpProblem& p) {
  validate(p);

  const Eigen::Index n = p.n_vars();
  const Eigen::Index m = static_cast<Eigen::Index>(p.constraints.size());
  const bool flip_sense = p.sense == Sense::minimize;

  // Structural columns: one per variable, plus a negated twin for each
  // free variable (x = x+ - x-).
  std::vector<std::pair<Eigen::Index, int>> col_var;  // (variable, sign)
  for (Eigen::Index i = 0; i < n; ++i) {
    col_var.emplace_back(i, +1);
    if (!p.var_nonneg(i)) col_var.emplace_back(i, -1);
  }
  const auto n_struct = static_cast<Eigen::Index>(col_var.size());

  Eigen::Index n_slack = 0;
  for (const auto& c : p.constraints)
    if (c.rel != Relation::eq) ++n_slack;

  Tableau t;
  t.art_start = n_struct + n_slack;
  const Eigen::Index total = t.art_start + m;
  t.body = RationalMatrix::Zero(m, total);
  t.rhs = RationalVector::Zero(m);
  t.cost1 = RationalVector::Zero(total);
  t.cost2 = RationalVector::Zero(total);
  t.basis.resize(static_cast<std::size_t>(m));
  t.orig_row.resize(static_cast<std::size_t>(m));

  std::vector<int> row_sign(static_cast<std::size_t>(m), +1);
  Eigen::Index slack_at = n_struct;
  for (Eigen::Index j = 0; j < m; ++j) {
    const auto& c = p.constraints[static_cast<std::size_t>(j)];
    for (Eigen::Index k = 0; k < n_struct; ++k)
      t.body(j, k) = c.row(col_var[static_cast<std::size_t>(k)].first) *
                     Rational(col_var[static_cast<std::size_t>(k)].second);
    if (c.rel != Relation::eq) t.body(j, slack_at++) = Rational(c.rel == Relation::le ? 1 : -1);
    t.rhs(j) = c.rhs;
    if (t.rhs(j).sign() < 0) {
      t.body.row(j) = -t.body.row(j);
      t.rhs(j) = -t.rhs(j);
      row_sign[static_cast<std::size_t>(j)] = -1;
    }
    t.body(j, t.art_start + j) = 1;
    t.basis[static_cast<std::size_t>(j)] = t.art_start + j;
    t.orig_row[static_cast<std::size_t>(j)] = j;
  }

  for (Eigen::Index k = 0; k < n_struct; ++k) {
    const auto [var, sgn] = col_var[static_cast<std::size_t>(k)];
    Rational c = p.objective(var) * Rational(sgn);
    t.cost2(k) = flip_sense ? -c : c;
  }

  // Phase 1: maximize -(sum of artificials).  Reduced costs start from the
  // artificial basis, whose objective row is the sum of all constraint rows.
  for (Eigen::Index j = 0; j < m; ++j) t.cost1(t.art_start + j) = -1;
  for (Eigen::Index j = 0; j < m; ++j) {
    t.cost1 += t.body.row(j).transpose();
    t.value1 -= t.rhs(j);
  }

  while (t.step(t.cost1, total) == Tableau::Step::improved) {
  }
  if (t.value1.sign() < 0) return LpOutcome{LpStatus::infeasible, {}, {}, {}};

  // Drive leftover artificials out of the (degenerate) basis; rows that
  // cannot be pivoted are redundant and get dropped, their multiplier is 0.
  std::vector<bool> keep(static_cast<std::size_t>(m), true);
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    if (t.basis[static_cast<std::size_t>(i)] < t.art_start) continue;
    Eigen::Index c = -1;
    for (Eigen::Index j = 0; j < t.art_start; ++j) {
      if (!t.body(i, j).is_zero()) {
        c = j;
        break;
      }
    }
    if (c >= 0)
      t.pivot(i, c);
    else
      keep[static_cast<std::size_t>(i)] = false;
  }
  if (std::find(keep.begin(), keep.end(), false) != keep.end()) {
    Eigen::Index kept = 0;
    for (Eigen::Index i = 0; i < t.rows(); ++i)
      if (keep[static_cast<std::size_t>(i)]) ++kept;
    RationalMatrix body(kept, total);
    RationalVector rhs(kept);
    std::vector<Eigen::Index> basis, orig;
    for (Eigen::Index i = 0, r = 0; i < t.rows(); ++i) {
      if (!keep[static_cast<std::size_t>(i)]) continue;
      body.row(r) = t.body.row(i);
      rhs(r) = t.rhs(i);
      basis.push_back(t.basis[static_cast<std::size_t>(i)]);
      orig.push_back(t.orig_row[static_cast<std::size_t>(i)]);
      ++r;
    }
    t.body = std::move(body);
    t.rhs = std::move(rhs);
    t.basis = std::move(basis);
    t.orig_row = std::move(orig);
  }

  // Phase 2: artificial columns are barred from entering.
  for (;;) {
    const auto s = t.step(t.cost2, t.art_start);
    if (s == Tableau::Step::done) break;
    if (s == Tableau::Step::unbounded) return LpOutcome{LpStatus::unbounded, {}, {}, {}};
  }

  LpOutcome out;
  out.status = LpStatus::optimal;
  out.primal = RationalVector::Zero(n);
  for (Eigen::Index i = 0; i < t.rows(); ++i) {
    const Eigen::Index b = t.basis[static_cast<std::size_t>(i)];
    if (b < n_struct) {
      const auto [var, sgn] = col_var[static_cast<std::size_t>(b)];
      out.primal(var) += Rational(sgn) * t.rhs(i);
    }
  }
  Rational value;
  for (Eigen::Index i = 0; i < n; ++i) value += p.objective(i) * out.primal(i);
  out.value = value;

  // Multiplier of equality row j is -cost2[artificial_j]; restore the row
  // negation sign and the sense flip.  Dropped redundant rows keep 0.
  out.dual = RationalVector::Zero(m);
  std::vector<bool> active(static_cast<std::size_t>(m), false);
  for (auto r : t.orig_row) active[static_cast<std::size_t>(r)] = true;
  for (Eigen::Index j = 0; j < m; ++j) {
    if (!active[static_cast<std::size_t>(j)]) continue;
    Rational y = -t.cost2(t.art_start + j);
    y *= Rational(row_sign[static_cast<std::size_t>(j)]);
    out.dual(j) = flip_sense ? -y : y;
  }
  return out;
}

}  // namespace bargain
