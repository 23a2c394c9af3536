#include "bihilb/oracle/saturation.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "bihilb/combinatorics.hpp"
#include "bihilb/errors.hpp"
#include "bihilb/fp/echelon.hpp"
#include "bihilb/parallel.hpp"

namespace bihilb::oracle {

namespace {

struct Subspace {
  FpMatrix basis;                    // sorted RREF rows
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.rows(); }
};

Subspace zero_subspace(const PrimeField& f, std::size_t ambient) { return {FpMatrix(f, 0, ambient), {}}; }

Subspace full_subspace(const PrimeField& f, std::size_t ambient) {
  Subspace s{FpMatrix::identity(f, ambient), {}};
  for (std::size_t i = 0; i < ambient; ++i) s.pivots.push_back(i);
  return s;
}

Subspace from_echelon(const fp::EchelonBasis& e) {
  auto r = e.to_rref();
  return {std::move(r.matrix), std::move(r.pivots)};
}

// { v : F_j v in W for every j }, each F_j mapping into W's ambient space.
Subspace preimage(const std::vector<const FpMatrix*>& maps, const Subspace& w, std::size_t target,
                  std::size_t source, const PrimeField& f) {
  if (w.dim() == target) return full_subspace(f, source);
  std::vector<char> is_pivot(target, 0);
  for (auto p : w.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < target; ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  fp::EchelonBasis conditions(f, source);
  FpMatrix reduced(f, free.size(), source);
  std::vector<u64> coefs(w.dim());
  std::vector<const u64*> rows(w.dim());
  for (const FpMatrix* m : maps) {
    // Coordinates of F v modulo W: (F v)[free] - W[:, free]^T (F v)[pivots].
    for (std::size_t r = 0; r < w.dim(); ++r) rows[r] = m->row(w.pivots[r]).data();
    for (std::size_t u = 0; u < free.size(); ++u) {
      for (std::size_t r = 0; r < w.dim(); ++r) coefs[r] = f.neg(w.basis(r, free[u]));
      fp::detail::combine(f, source, m->row(free[u]).data(), coefs, rows, reduced.row(u).data());
    }
    conditions.add_rows(reduced);
    if (conditions.rank() == source) return zero_subspace(f, source);
  }
  const FpMatrix kernel = conditions.kernel();
  fp::EchelonBasis span(f, source);
  span.add_rows(transpose(kernel));
  return from_echelon(span);
}

Bidegree sigma_of(const Instance& inst) {
  Bidegree s{-(inst.shape.n + 1), -(inst.shape.m + 1)};
  for (const auto& form : inst.forms) s = s + form.degree;
  return s;
}

}  // namespace

std::int64_t SaturatedWindow::hf_v(Bidegree mu) const {
  const auto i = window.index(mu);
  return static_cast<std::int64_t>(quotient_dim[i] - torsion[i].rows());
}

std::int64_t SaturatedWindow::hf_si(Bidegree mu) const {
  return static_cast<std::int64_t>(quotient_dim[window.index(mu)]);
}

SaturationOracle::SaturationOracle(Instance inst, unsigned threads)
    : quotient_(std::move(inst)), threads_(std::max(1u, threads)) {}

int SaturationOracle::default_padding(const Window& window) const {
  const Bidegree s = sigma_of(instance());
  const auto p = std::max(s.a, s.b) - std::min(window.hi.a, window.hi.b);
  return static_cast<int>(std::clamp<std::int64_t>(p, 4, 1 << 20));
}

SaturatedWindow SaturationOracle::saturate(const Window& window, int padding) {
  validate_window(window, true);
  if (padding < 1) throw std::invalid_argument("padding must be at least 1");
  const PrimeField& f = instance().field;
  const Window outer{window.lo, window.hi + Bidegree{padding, padding}};
  quotient_.ensure(outer.hi);

  std::vector<std::size_t> q(outer.size());
  std::vector<Subspace> u;
  u.reserve(outer.size());
  for (std::size_t i = 0; i < outer.size(); ++i) {
    q[i] = quotient_.built_dim(outer.at(i));
    u.push_back(zero_subspace(f, q[i]));
  }
  std::vector<char> changed(outer.size(), 1);
  const int nx = instance().shape.n + 1;
  const int ny = instance().shape.m + 1;

  for (int k = 0; k < padding; ++k) {
    const Window dom{window.lo, window.hi + Bidegree{padding - k - 1, padding - k - 1}};
    std::vector<std::size_t> todo;
    for (std::size_t i = 0; i < dom.size(); ++i) {
      const Bidegree mu = dom.at(i);
      if (changed[outer.index(mu + Bidegree{1, 1})]) todo.push_back(outer.index(mu));
    }
    std::vector<std::optional<Subspace>> next(todo.size());
    parallel_for(todo.size(), threads_, [&](std::size_t t) {
      const Bidegree mu = outer.at(todo[t]);
      const Bidegree right = mu + Bidegree{1, 0};
      const Bidegree diag = mu + Bidegree{1, 1};
      const std::size_t qr = q[outer.index(right)];
      const std::size_t qd = q[outer.index(diag)];
      std::vector<const FpMatrix*> ys, xs;
      for (int j = 0; j < ny; ++j) ys.push_back(&quotient_.built_map(1, j, right));
      for (int i = 0; i < nx; ++i) xs.push_back(&quotient_.built_map(0, i, mu));
      const Subspace mid = preimage(ys, u[outer.index(diag)], qd, qr, f);
      Subspace fresh = preimage(xs, mid, qr, q[todo[t]], f);
      if (fresh.dim() != u[todo[t]].dim()) next[t] = std::move(fresh);
    });
    std::fill(changed.begin(), changed.end(), 0);
    bool any = false;
    for (std::size_t t = 0; t < todo.size(); ++t) {
      if (!next[t]) continue;
      u[todo[t]] = std::move(*next[t]);
      changed[todo[t]] = 1;
      any = true;
    }
    if (!any) {
      SaturatedWindow out{window, padding, k + 1, {}, {}};
      for (const auto& mu : window.points()) {
        out.quotient_dim.push_back(q[outer.index(mu)]);
        out.torsion.push_back(u[outer.index(mu)].basis);
      }
      return out;
    }
  }
  throw PaddingExhausted("saturation did not stabilize within padding " + std::to_string(padding), padding);
}

SaturatedWindow SaturationOracle::saturate(const Window& window, const RetryPolicy& policy) {
  int padding = policy.initial_padding > 0 ? policy.initial_padding : default_padding(window);
  padding = std::min(padding, std::max(1, policy.max_padding));
  while (true) {
    try {
      return saturate(window, padding);
    } catch (const PaddingExhausted&) {
      if (padding >= policy.max_padding) throw;
      padding = std::min(2 * padding, policy.max_padding);
    }
  }
}

IntGrid SaturationOracle::hf_v(const Window& window, const RetryPolicy& policy) {
  validate_window(window, false);
  IntGrid grid(window, 0);
  const Window clipped{{std::max<std::int64_t>(window.lo.a, 0), std::max<std::int64_t>(window.lo.b, 0)}, window.hi};
  if (!window.hi.nonnegative()) return grid;
  const auto sat = saturate(clipped, policy);
  for (const auto& mu : clipped.points()) grid[mu] = sat.hf_v(mu);
  return grid;
}

DegreewiseIdeal SaturationOracle::saturated_ideal(const SaturatedWindow& sat) {
  const PrimeField& f = instance().field;
  DegreewiseIdeal out{sat.window, {}};
  for (const auto& mu : sat.window.points()) {
    const FpMatrix& nf = quotient_.normal_forms(mu);
    const FpMatrix& torsion = sat.torsion[sat.window.index(mu)];
    Subspace w{torsion, {}};
    for (std::size_t r = 0; r < torsion.rows(); ++r) {
      const auto row = torsion.row(r);
      w.pivots.push_back(static_cast<std::size_t>(std::find_if(row.begin(), row.end(), [](u64 v) { return v != 0; }) -
                                                  row.begin()));
    }
    out.pieces.emplace(mu, preimage({&nf}, w, nf.rows(), nf.cols(), f).basis);
  }
  return out;
}

DegreewiseIdeal saturate_window(const Instance& inst, const Window& window, int padding) {
  SaturationOracle oracle(inst);
  return oracle.saturated_ideal(oracle.saturate(window, padding));
}

IntGrid hf_v_oracle(const Instance& inst, const Window& window, const RetryPolicy& policy) {
  SaturationOracle oracle(inst, default_threads());
  return oracle.hf_v(window, policy);
}

Staircase stabilization_staircase(const IntGrid& grid, const BigInt& deg) {
  const Window& w = grid.window;
  std::vector<char> good(w.size(), 0);
  std::vector<Bidegree> corners;
  for (std::size_t idx = w.size(); idx-- > 0;) {
    const Bidegree mu = w.at(idx);
    bool ok = BigInt(grid.values[idx]) == deg;
    if (ok && mu.a < w.hi.a) ok = good[w.index(mu + Bidegree{1, 0})];
    if (ok && mu.b < w.hi.b) ok = good[w.index(mu + Bidegree{0, 1})];
    good[idx] = ok;
    if (ok) corners.push_back(mu);
  }
  return Staircase::from_points(corners);
}

Staircase stabilization_staircase(const IntGrid& grid, const BigInt& deg, const RegionSpec& spec) {
  const Staircase guaranteed = guaranteed_corners(spec);
  for (const auto& c : guaranteed.corners()) {
    if (!leq(c, grid.window.hi)) {
      throw WindowTooSmall("window upper corner " + grid.window.hi.str() + " does not dominate " + c.str());
    }
  }
  return stabilization_staircase(grid, deg);
}

Window validation_window(const RegionSpec& spec, const Window& window) {
  Window out = window;
  const Staircase guaranteed = guaranteed_corners(spec);
  for (const auto& c : guaranteed.corners()) {
    out.hi.a = std::max(out.hi.a, c.a);
    out.hi.b = std::max(out.hi.b, c.b);
  }
  return out;
}

void validate_complete_intersection(const Instance& inst, const RegionSpec& spec, const IntGrid& grid) {
  if (!(inst.shape == spec.shape)) throw ShapeMismatch("instance shape differs from the region spec");
  if (inst.forms.size() != static_cast<std::size_t>(spec.r())) {
    throw NotCompleteIntersection("expected " + std::to_string(spec.r()) + " forms, got " +
                                  std::to_string(inst.forms.size()));
  }
  for (const auto& form : inst.forms) {
    if (form.degree != spec.d) {
      throw ShapeMismatch("form of bidegree " + form.degree.str() + " in a spec of bidegree " + spec.d.str());
    }
  }
  const Staircase guaranteed = guaranteed_corners(spec);
  for (const auto& c : guaranteed.corners()) {
    if (!grid.window.contains(c)) {
      throw WindowTooSmall("validation window " + grid.window.lo.str() + "-" + grid.window.hi.str() +
                           " misses guaranteed corner " + c.str());
    }
  }
  const BigInt deg = degree_ci(spec.shape, spec.d);
  for (const auto& mu : grid.window.points()) {
    if (guaranteed_regular(spec, mu) && BigInt(grid[mu]) != deg) {
      throw NotCompleteIntersection("HF_V" + mu.str() + " = " + std::to_string(grid[mu]) + " but degree is " +
                                    deg.str());
    }
  }
}

}  // namespace bihilb::oracle
