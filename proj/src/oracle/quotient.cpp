#include "bihilb/oracle/quotient.hpp"

#include <algorithm>
#include <stdexcept>

#include "bihilb/errors.hpp"
#include "bihilb/fp/echelon.hpp"

namespace bihilb::oracle {

namespace {

constexpr Bidegree kUnit[2] = {{1, 0}, {0, 1}};

std::int64_t coord(Bidegree mu, int cls) { return cls == 0 ? mu.a : mu.b; }

std::vector<int>& exps(Monomial& mono, int cls) { return cls == 0 ? mono.x : mono.y; }
const std::vector<int>& exps(const Monomial& mono, int cls) { return cls == 0 ? mono.x : mono.y; }

int first_var(const Monomial& mono, int cls) {
  const auto& e = exps(mono, cls);
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] > 0) return static_cast<int>(k);
  }
  return -1;
}

// Rows [k*h, (k+1)*h) of m.
FpMatrix row_block(const FpMatrix& m, std::size_t k, std::size_t h) {
  FpMatrix out(m.field(), h, m.cols());
  std::copy(m.data().begin() + static_cast<std::ptrdiff_t>(k * h * m.cols()),
            m.data().begin() + static_cast<std::ptrdiff_t>((k + 1) * h * m.cols()), out.data().begin());
  return out;
}

}  // namespace

GradedQuotient::GradedQuotient(Instance inst) : inst_(std::move(inst)) {
  const int nv[2] = {inst_.shape.n + 1, inst_.shape.m + 1};
  for (int cls = 0; cls < 2; ++cls) {
    splits_[cls].resize(inst_.forms.size());
    chains_[cls].resize(inst_.forms.size());
    for (std::size_t i = 0; i < inst_.forms.size(); ++i) {
      const Form& f = inst_.forms[i];
      if (coord(f.degree, cls) < 1) continue;
      auto& parts = splits_[cls][i];
      parts.assign(static_cast<std::size_t>(nv[cls]), Split{f.degree - kUnit[cls], {}});
      for (const auto& t : f.terms) {
        Monomial rest = t.mono;
        const int k = first_var(rest, cls);
        --exps(rest, cls)[static_cast<std::size_t>(k)];
        parts[static_cast<std::size_t>(k)].terms.emplace_back(std::move(rest), t.coeff);
      }
      chains_[cls][i].resize(static_cast<std::size_t>(nv[cls]));
    }
  }
}

void GradedQuotient::ensure(Bidegree nu) {
  if (!nu.nonnegative() || built(nu)) return;
  if (nu.a >= 1) ensure(nu - kUnit[0]);
  if (nu.b >= 1) ensure(nu - kUnit[1]);
  build(nu);
}

std::size_t GradedQuotient::dim(Bidegree nu) {
  if (!nu.nonnegative()) return 0;
  ensure(nu);
  return piece(nu).q;
}

std::size_t GradedQuotient::built_dim(Bidegree nu) const {
  if (!nu.nonnegative()) return 0;
  return piece(nu).q;
}

const FpMatrix& GradedQuotient::map(int cls, int k, Bidegree source) {
  ensure(source + kUnit[cls]);
  return built_map(cls, k, source);
}

const FpMatrix& GradedQuotient::built_map(int cls, int k, Bidegree source) const {
  return piece(source).out[cls].at(static_cast<std::size_t>(k));
}

void GradedQuotient::build(Bidegree nu) {
  const PrimeField& f = inst_.field;
  const int nv[2] = {inst_.shape.n + 1, inst_.shape.m + 1};
  Piece cur;

  if (nu == Bidegree{0, 0}) {
    const bool unit_ideal = std::any_of(inst_.forms.begin(), inst_.forms.end(), [](const Form& g) {
      return g.degree == Bidegree{0, 0} && !g.is_zero();
    });
    cur.q = unit_ideal ? 0 : 1;
    pieces_.emplace(nu, std::move(cur));
    return;
  }

  // Present with the variable class giving the narrower matrix.
  int c = nu.a >= 1 ? 0 : 1;
  if (nu.a >= 1 && nu.b >= 1) {
    const std::size_t wx = static_cast<std::size_t>(nv[0]) * piece(nu - kUnit[0]).q;
    const std::size_t wy = static_cast<std::size_t>(nv[1]) * piece(nu - kUnit[1]).q;
    if (wy < wx) c = 1;
  }
  const int o = 1 - c;
  const Bidegree below = nu - kUnit[c];
  const std::size_t qs = piece(below).q;
  const std::size_t cols = static_cast<std::size_t>(nv[c]) * qs;

  fp::EchelonBasis relations(f, cols);
  FpMatrix batch(f, 0, cols);
  std::vector<u64> row(cols);
  auto flush = [&] {
    if (batch.rows() > 0) relations.add_rows(batch);
    batch = FpMatrix(f, 0, cols);
  };
  auto push = [&] {
    batch.append_row(row);
    if (batch.rows() >= 256) flush();
  };

  // Koszul relations c_l (c_k s) = c_k (c_l s).
  if (coord(nu, c) >= 2) {
    const Bidegree two = below - kUnit[c];
    const Piece& p2 = piece(two);
    for (int k = 0; k < nv[c]; ++k) {
      for (int l = k + 1; l < nv[c]; ++l) {
        const FpMatrix& mk = p2.out[c][static_cast<std::size_t>(k)];
        const FpMatrix& ml = p2.out[c][static_cast<std::size_t>(l)];
        for (std::size_t s = 0; s < p2.q; ++s) {
          std::fill(row.begin(), row.end(), 0);
          for (std::size_t i = 0; i < qs; ++i) {
            row[static_cast<std::size_t>(k) * qs + i] = ml(i, s);
            row[static_cast<std::size_t>(l) * qs + i] = f.neg(mk(i, s));
          }
          push();
        }
      }
    }
  }

  // Generators g * f_i = sum_k c_k (split_k * g) where g involves only the
  // other class; generators of smaller c-degree are already zero below.
  for (std::size_t i = 0; i < inst_.forms.size(); ++i) {
    const Bidegree d = inst_.forms[i].degree;
    if (coord(d, c) != coord(nu, c) || coord(d, o) > coord(nu, o)) continue;
    const std::int64_t level = coord(nu, o) - coord(d, o);
    std::vector<const std::vector<std::vector<u64>>*> parts;
    for (int k = 0; k < nv[c]; ++k) parts.push_back(&chain(i, c, k, level));
    const std::size_t count = parts.front()->size();
    for (std::size_t g = 0; g < count; ++g) {
      for (int k = 0; k < nv[c]; ++k) {
        const auto& v = (*parts[static_cast<std::size_t>(k)])[g];
        std::copy(v.begin(), v.end(), row.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(k) * qs));
      }
      push();
    }
  }
  flush();

  const auto free = relations.free_columns();
  std::vector<std::ptrdiff_t> free_pos(cols, -1);
  for (std::size_t t = 0; t < free.size(); ++t) free_pos[free[t]] = static_cast<std::ptrdiff_t>(t);
  std::vector<std::ptrdiff_t> pivot_row(cols, -1);
  for (std::size_t r = 0; r < relations.rank(); ++r) {
    pivot_row[relations.pivots()[r]] = static_cast<std::ptrdiff_t>(r);
  }

  cur.q = free.size();
  cur.dir = c;
  cur.origin = free;

  // Maps c_k : Q_below -> Q_nu read off the reduced relations.
  std::vector<FpMatrix> cmaps;
  for (int k = 0; k < nv[c]; ++k) {
    FpMatrix m(f, cur.q, qs);
    for (std::size_t s = 0; s < qs; ++s) {
      const std::size_t col = static_cast<std::size_t>(k) * qs + s;
      if (free_pos[col] >= 0) {
        m(static_cast<std::size_t>(free_pos[col]), s) = 1;
      } else {
        const auto rel = relations.row(static_cast<std::size_t>(pivot_row[col]));
        for (std::size_t t = 0; t < cur.q; ++t) m(t, s) = f.neg(rel[free[t]]);
      }
    }
    cmaps.push_back(std::move(m));
  }

  // Maps o_j : Q_side -> Q_nu. Write t in Q_side as sum_k c_k u_k; then
  // o_j t = sum_k c_k (o_j u_k) with o_j u_k computed one step down.
  std::vector<FpMatrix> omaps;
  if (coord(nu, o) >= 1) {
    const Bidegree side = nu - kUnit[o];
    const Bidegree corner = below - kUnit[o];
    const FpMatrix& lifted = lift(side, c);
    const std::size_t qc = piece(corner).q;
    for (int j = 0; j < nv[o]; ++j) {
      const FpMatrix& down = piece(corner).out[o][static_cast<std::size_t>(j)];
      FpMatrix acc(f, cur.q, piece(side).q);
      for (int k = 0; k < nv[c]; ++k) {
        const FpMatrix step = multiply(cmaps[static_cast<std::size_t>(k)], down);
        const FpMatrix term = multiply(step, row_block(lifted, static_cast<std::size_t>(k), qc));
        for (std::size_t e = 0; e < acc.data().size(); ++e) acc.data()[e] = f.add(acc.data()[e], term.data()[e]);
      }
      omaps.push_back(std::move(acc));
    }
  }

  pieces_.emplace(nu, std::move(cur));
  piece(below).out[c] = std::move(cmaps);
  if (coord(nu, o) >= 1) piece(nu - kUnit[o]).out[o] = std::move(omaps);
}

const FpMatrix& GradedQuotient::lift(Bidegree nu, int cls) {
  Piece& p = piece(nu);
  if (p.lift[cls]) return *p.lift[cls];
  const int nv = cls == 0 ? inst_.shape.n + 1 : inst_.shape.m + 1;
  const Bidegree below = nu - kUnit[cls];
  const std::size_t qs = piece(below).q;
  const PrimeField& f = inst_.field;
  FpMatrix out(f, static_cast<std::size_t>(nv) * qs, p.q);
  if (p.dir == cls) {
    for (std::size_t t = 0; t < p.q; ++t) out(p.origin[t], t) = 1;
  } else {
    // Right inverse of [c_0 | ... | c_n] through an invertible set of columns.
    FpMatrix stacked(f, p.q, 0);
    for (int k = 0; k < nv; ++k) stacked = augment(stacked, piece(below).out[cls][static_cast<std::size_t>(k)]);
    fp::EchelonBasis cols(f, stacked.cols());
    cols.add_rows(stacked);
    auto chosen = cols.pivots();
    std::sort(chosen.begin(), chosen.end());
    if (chosen.size() != p.q) throw std::logic_error("multiplication maps into a graded piece are not onto");
    FpMatrix square(f, p.q, 2 * p.q);
    for (std::size_t r = 0; r < p.q; ++r) {
      for (std::size_t t = 0; t < p.q; ++t) square(r, t) = stacked(r, chosen[t]);
      square(r, p.q + r) = 1;
    }
    const auto inv = rref(square);
    for (std::size_t t = 0; t < p.q; ++t) {
      for (std::size_t r = 0; r < p.q; ++r) out(chosen[t], r) = inv.matrix(t, p.q + r);
    }
  }
  p.lift[cls] = std::move(out);
  return *p.lift[cls];
}

const std::vector<std::vector<u64>>& GradedQuotient::chain(std::size_t form, int cls, int k, std::int64_t level) {
  auto& levels = chains_[cls][form][static_cast<std::size_t>(k)];
  const Split& split = splits_[cls][form][static_cast<std::size_t>(k)];
  const int o = 1 - cls;
  if (levels.empty()) levels.push_back({normal_form(split)});
  while (static_cast<std::int64_t>(levels.size()) <= level) {
    const std::int64_t t = static_cast<std::int64_t>(levels.size()) - 1;
    const Bidegree at = split.degree + t * kUnit[o];
    std::vector<std::vector<u64>> next;
    for (const auto& g : monomial_basis(inst_.shape, (t + 1) * kUnit[o])) {
      Monomial rest = g;
      const int j = first_var(rest, o);
      --exps(rest, o)[static_cast<std::size_t>(j)];
      const FpMatrix& step = map(o, j, at);
      next.push_back(fp::apply(step, levels[static_cast<std::size_t>(t)][monomial_index(inst_.shape, rest)]));
    }
    levels.push_back(std::move(next));
  }
  return levels[static_cast<std::size_t>(level)];
}

std::vector<u64> GradedQuotient::normal_form(const Split& poly) {
  const FpMatrix& nf = normal_forms(poly.degree);
  std::vector<u64> out(nf.rows(), 0);
  const PrimeField& f = inst_.field;
  for (const auto& [mono, coeff] : poly.terms) {
    const std::size_t col = monomial_index(inst_.shape, mono);
    for (std::size_t r = 0; r < nf.rows(); ++r) out[r] = f.add(out[r], f.mul(coeff, nf(r, col)));
  }
  return out;
}

const FpMatrix& GradedQuotient::normal_forms(Bidegree nu) {
  ensure(nu);
  Piece& p = piece(nu);
  if (p.nf) return *p.nf;
  const auto basis = monomial_basis(inst_.shape, nu);
  FpMatrix out(inst_.field, p.q, basis.size());
  if (nu == Bidegree{0, 0}) {
    if (p.q == 1) out(0, 0) = 1;
  } else {
    const int cls = nu.a >= 1 ? 0 : 1;
    const FpMatrix& lower = normal_forms(nu - kUnit[cls]);
    for (std::size_t col = 0; col < basis.size(); ++col) {
      Monomial rest = basis[col];
      const int k = first_var(rest, cls);
      --exps(rest, cls)[static_cast<std::size_t>(k)];
      const auto src = lower.column(monomial_index(inst_.shape, rest));
      const auto img = fp::apply(built_map(cls, k, nu - kUnit[cls]), src);
      for (std::size_t r = 0; r < p.q; ++r) out(r, col) = img[r];
    }
  }
  p.nf = std::move(out);
  return *p.nf;
}

}  // namespace bihilb::oracle
