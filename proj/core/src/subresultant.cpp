#include "rootforge/subresultant.hpp"

#include "rootforge/errors.hpp"

namespace rootforge {

namespace {

struct RowSpec {
  bool from_f;
  int shift;  // row polynomial is y^shift * (f or g)
};

// Rows of the j-th Sylvester-Habicht matrix: y^(q-j-1) f .. f, then y^(p-j-1) g .. g.
std::vector<RowSpec> row_specs(int p, int q, int j) {
  std::vector<RowSpec> rows;
  for (int s = q - j - 1; s >= 0; --s) rows.push_back({true, s});
  for (int s = p - j - 1; s >= 0; --s) rows.push_back({false, s});
  return rows;
}

// Matrix whose columns hold the coefficients of y^d for d = p+q-j-1 .. j+1
// followed by one column for y^last.
std::vector<std::vector<IntPoly>> build_matrix(const IntPoly2& f, const IntPoly2& g,
                                               const std::vector<RowSpec>& rows, int j,
                                               int last) {
  const int p = f.deg_y(), q = g.deg_y();
  const int N = static_cast<int>(rows.size());
  std::vector<std::vector<IntPoly>> m(N, std::vector<IntPoly>(N));
  for (int r = 0; r < N; ++r) {
    const IntPoly2& src = rows[r].from_f ? f : g;
    const int s = rows[r].shift;
    for (int col = 0; col + 1 < N; ++col) {
      int d = p + q - j - 1 - col;
      m[r][col] = src.coeff_y(d - s);
    }
    m[r][N - 1] = src.coeff_y(last - s);
  }
  return m;
}

int top_index(int p, int q) { return p > q ? q : q - 1; }

void check_args(const IntPoly2& f, const IntPoly2& g) {
  if (g.is_zero()) throw DomainError("subresultants with g = 0");
  if (f.deg_y() < g.deg_y()) throw DomainError("subresultants need deg_y f >= deg_y g");
}

}  // namespace

IntPoly determinant(std::vector<std::vector<IntPoly>> m) {
  const size_t n = m.size();
  if (n == 0) return IntPoly::constant(1);
  int sign = 1;
  IntPoly prev = IntPoly::constant(1);
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero()) ++piv;
      if (piv == n) return {};
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        IntPoly t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_div(t, prev);
      }
    }
    prev = m[k][k];
  }
  IntPoly d = m[n - 1][n - 1];
  return sign < 0 ? -d : d;
}

std::vector<SubresultantEntry> subresultant_sequence(const IntPoly2& f, const IntPoly2& g) {
  check_args(f, g);
  const int p = f.deg_y(), q = g.deg_y();
  std::vector<SubresultantEntry> out;
  for (int j = 0; j <= top_index(p, q); ++j) {
    auto rows = row_specs(p, q, j);
    const int N = static_cast<int>(rows.size());
    SubresultantEntry e;
    e.index = j;
    std::vector<IntPoly> sres(j + 1);
    for (int i = 0; i <= j; ++i) sres[i] = determinant(build_matrix(f, g, rows, j, i));
    e.sres = IntPoly2(sres);
    e.sr = sres[j];
    // Cofactor expansion along the last column.
    auto base = build_matrix(f, g, rows, j, 0);
    for (int r = 0; r < N; ++r) {
      std::vector<std::vector<IntPoly>> minor;
      for (int rr = 0; rr < N; ++rr) {
        if (rr == r) continue;
        minor.emplace_back(base[rr].begin(), base[rr].end() - 1);
      }
      IntPoly cof = determinant(std::move(minor));
      if ((r + N - 1) % 2 == 1) cof = -cof;
      IntPoly2 term = IntPoly2::from_x(cof) * IntPoly2::term(1, 0, rows[r].shift);
      if (rows[r].from_f)
        e.u += term;
      else
        e.v += term;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<IntPoly> principal_subresultants(const IntPoly2& f, const IntPoly2& g) {
  check_args(f, g);
  const int p = f.deg_y(), q = g.deg_y();
  std::vector<IntPoly> out;
  for (int j = 0; j <= top_index(p, q); ++j)
    out.push_back(determinant(build_matrix(f, g, row_specs(p, q, j), j, j)));
  return out;
}

IntPoly resultant_y(const IntPoly2& f, const IntPoly2& g) {
  if (f.is_zero() || g.is_zero()) throw DomainError("resultant with a zero polynomial");
  const int p = f.deg_y(), q = g.deg_y();
  if (p < q) {
    IntPoly r = resultant_y(g, f);
    return (p % 2 == 1 && q % 2 == 1) ? -r : r;
  }
  if (p == 0 && q == 0) return IntPoly::constant(1);
  return determinant(build_matrix(f, g, row_specs(p, q, 0), 0, 0));
}

}  // namespace rootforge
