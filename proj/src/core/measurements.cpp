// Copyright 2026 The coherence-toolkit developers
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "core/measurements.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "core/eigen.hpp"
#include "core/errors.hpp"

namespace coh {

namespace {

constexpr double kPsdTol = 1e-10;  // POVM element positivity slack

double min_eigenvalue(const Matrix& m) { return eigh(m).eigenvalues.front(); }

// Verification reports must not throw on corrupted input, so they
// diagonalize the Hermitian part; the Hermiticity defect is reported
// separately.
double min_eigenvalue_tolerant(const Matrix& m) {
  const int d = m.dim();
  Matrix h(d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c)
      h(r, c) = 0.5 * (m(r, c) + std::conj(m(c, r)));
  return eigh(h).eigenvalues.front();
}

// The d(d+1) traceless generators F_n^(b) of the unbiased family.
std::vector<std::vector<Matrix>> mum_generators(const PartitionedBasis& p) {
  const int d = p.dim();
  const double sqrt_d = std::sqrt(static_cast<double>(d));
  std::vector<std::vector<Matrix>> gen(d + 1);
  for (int b = 0; b <= d; ++b) {
    gen[b].reserve(d);
    for (int n = 0; n < d - 1; ++n) {
      Matrix f = p.group_sum(b);
      Matrix scaled = p.op(b, n);
      scaled *= cplx{d + sqrt_d, 0.0};
      f -= scaled;
      gen[b].push_back(std::move(f));
    }
    Matrix last = p.group_sum(b);
    last *= cplx{1.0 + sqrt_d, 0.0};
    gen[b].push_back(std::move(last));
  }
  return gen;
}

std::vector<Matrix> gsm_generators(const OperatorBasis& basis) {
  const int d = basis.dim();
  Matrix f_total(d);
  for (const auto& f : basis.ops()) f_total += f;

  std::vector<Matrix> gen;
  gen.reserve(static_cast<std::size_t>(d) * d);
  for (int k = 0; k < d * d - 1; ++k) {
    Matrix g = f_total;
    Matrix scaled = basis.op(k);
    scaled *= cplx{static_cast<double>(d) * (d + 1), 0.0};
    g -= scaled;
    gen.push_back(std::move(g));
  }
  Matrix last = f_total;
  last *= cplx{static_cast<double>(d + 1), 0.0};
  gen.push_back(std::move(last));
  return gen;
}

// Smallest element eigenvalue across the family at strength t; the
// positivity searches bisect on its sign.
double mum_min_eigenvalue(const std::vector<std::vector<Matrix>>& gen, int d,
                          double t) {
  double min_eig = 1.0;
  for (const auto& band : gen) {
    for (const auto& f : band) {
      Matrix p = Matrix::identity(d);
      p *= cplx{1.0 / d, 0.0};
      Matrix tf = f;
      tf *= cplx{t, 0.0};
      p += tf;
      min_eig = std::min(min_eig, min_eigenvalue(p));
    }
  }
  return min_eig;
}

double gsm_min_eigenvalue(const std::vector<Matrix>& gen, int d, double t) {
  double min_eig = 1.0;
  for (const auto& g : gen) {
    Matrix p = Matrix::identity(d);
    p *= cplx{1.0 / (static_cast<double>(d) * d), 0.0};
    Matrix tg = g;
    tg *= cplx{t, 0.0};
    p += tg;
    min_eig = std::min(min_eig, min_eigenvalue(p));
  }
  return min_eig;
}

// Bracket from t_hi = d downward until feasible, then bisect to 1e-12 and
// return the feasible endpoint. The feasibility gate sits well inside the
// -1e-12 contract so that kappa(t*) and a(t*) cannot overshoot their upper
// boundaries (1 and 1/d^2) by more than ~1e-13 when the positivity limit
// coincides with the projective case.
template <typename MinEigFn>
double bisect_max_t(const MinEigFn& family_min_eig, int d) {
  const auto feasible = [&](double t) { return family_min_eig(t) >= -1e-14; };

  double hi = static_cast<double>(d);
  if (feasible(hi)) return hi;
  double lo = hi;
  while (!feasible(lo)) {
    lo *= 0.5;
    if (lo < 1e-9)
      raise(ErrorCode::bracket_failure,
            "no positive strength t found: even t = 1e-9 violates positivity");
  }
  while (hi - lo > 1e-12) {
    const double mid = 0.5 * (lo + hi);
    (feasible(mid) ? lo : hi) = mid;
  }
  return lo;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

bool is_prime_power(int n) {
  for (int p = 2; p <= n; ++p) {
    if (!is_prime(p) || n % p != 0) continue;
    int m = n;
    while (m % p == 0) m /= p;
    return m == 1;
  }
  return false;
}

}  // namespace

double kappa_of(int dim, double t) {
  if (dim < 2) raise(ErrorCode::invalid_argument, "dimension must be >= 2");
  const double sqrt_d = std::sqrt(static_cast<double>(dim));
  return 1.0 / dim + t * t * (1.0 + sqrt_d) * (1.0 + sqrt_d) * (dim - 1);
}

double a_of(int dim, double t) {
  if (dim < 2) raise(ErrorCode::invalid_argument, "dimension must be >= 2");
  const double d = dim;
  return 1.0 / (d * d * d) + t * t * (d - 1.0) * (d + 1.0) * (d + 1.0) * (d + 1.0);
}

MumSet build_mum(const PartitionedBasis& partition, double t) {
  if (t == 0.0)
    raise(ErrorCode::zero_t,
          "t = 0 is excluded: kappa would equal the 1/d boundary");

  const int d = partition.dim();
  const auto gen = mum_generators(partition);

  MumSet out;
  out.dim = d;
  out.t = t;
  out.kappa = kappa_of(d, t);
  out.povms.resize(d + 1);

  for (int b = 0; b <= d; ++b) {
    out.povms[b].dim = d;
    out.povms[b].elements.reserve(d);
    for (int n = 0; n < d; ++n) {
      Matrix p = Matrix::identity(d);
      p *= cplx{1.0 / d, 0.0};
      Matrix tf = gen[b][n];
      tf *= cplx{t, 0.0};
      p += tf;
      const double min_eig = min_eigenvalue(p);
      if (min_eig < -kPsdTol) {
        std::ostringstream msg;
        msg << "element not positive semidefinite at t = " << t << ": band b = "
            << b + 1 << ", outcome n = " << n + 1
            << ", min eigenvalue = " << min_eig;
        raise(ErrorCode::not_positive, msg.str());
      }
      out.povms[b].elements.push_back(std::move(p));
    }
  }
  return out;
}

GsmSet build_gsm(const OperatorBasis& basis, double t) {
  if (t == 0.0)
    raise(ErrorCode::zero_t,
          "t = 0 is excluded: a would equal the 1/d^3 boundary");

  const int d = basis.dim();
  const auto gen = gsm_generators(basis);

  GsmSet out;
  out.dim = d;
  out.t = t;
  out.a = a_of(d, t);
  out.povm.dim = d;
  out.povm.elements.reserve(gen.size());

  for (std::size_t k = 0; k < gen.size(); ++k) {
    Matrix p = Matrix::identity(d);
    p *= cplx{1.0 / (static_cast<double>(d) * d), 0.0};
    Matrix tg = gen[k];
    tg *= cplx{t, 0.0};
    p += tg;
    const double min_eig = min_eigenvalue(p);
    if (min_eig < -kPsdTol) {
      std::ostringstream msg;
      msg << "element not positive semidefinite at t = " << t
          << ": k = " << k + 1 << ", min eigenvalue = " << min_eig;
      raise(ErrorCode::not_positive, msg.str());
    }
    out.povm.elements.push_back(std::move(p));
  }
  return out;
}

double max_positive_t_mum(const PartitionedBasis& partition) {
  const auto gen = mum_generators(partition);
  const int d = partition.dim();
  return bisect_max_t(
      [&](double t) { return mum_min_eigenvalue(gen, d, t); }, d);
}

double max_positive_t_gsm(const OperatorBasis& basis) {
  const auto gen = gsm_generators(basis);
  const int d = basis.dim();
  return bisect_max_t(
      [&](double t) { return gsm_min_eigenvalue(gen, d, t); }, d);
}

MubSet build_mub_prime(int dim) {
  if (dim < 2)
    raise(ErrorCode::invalid_argument, "dimension must be >= 2");
  if (!is_prime(dim)) {
    if (is_prime_power(dim))
      raise(ErrorCode::unsupported,
            "Unsupported: prime-power dimension " + std::to_string(dim) +
                " (only prime dimensions are implemented)");
    raise(ErrorCode::not_prime,
          "dimension " + std::to_string(dim) + " is not prime");
  }
  if (dim > 31)
    raise(ErrorCode::unsupported,
          "Unsupported: prime dimensions above 31 are not implemented");

  MubSet out;
  out.dim = dim;
  out.bases.reserve(dim + 1);
  out.bases.push_back(Matrix::identity(dim));

  if (dim == 2) {
    const double s = 1.0 / std::sqrt(2.0);
    Matrix x(2);  // sigma_x eigenbasis
    x(0, 0) = s;
    x(1, 0) = s;
    x(0, 1) = s;
    x(1, 1) = -s;
    Matrix y(2);  // sigma_y eigenbasis
    y(0, 0) = s;
    y(1, 0) = cplx{0.0, s};
    y(0, 1) = s;
    y(1, 1) = cplx{0.0, -s};
    out.bases.push_back(std::move(x));
    out.bases.push_back(std::move(y));
    return out;
  }

  // Odd prime: |psi_n^(b)> = d^{-1/2} sum_j w^{b j^2 + n j} |j> with
  // w = exp(2 pi i / d); cross-basis overlaps are quadratic Gauss sums of
  // modulus sqrt(d).
  std::vector<cplx> w(dim);
  for (int m = 0; m < dim; ++m) {
    const double angle = 2.0 * std::numbers::pi * m / dim;
    w[m] = {std::cos(angle), std::sin(angle)};
  }
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int b = 0; b < dim; ++b) {
    Matrix basis(dim);
    for (int n = 0; n < dim; ++n)
      for (int j = 0; j < dim; ++j)
        basis(j, n) = scale * w[(b * j * j + n * j) % dim];
    out.bases.push_back(std::move(basis));
  }
  return out;
}

GsmSet builtin_sic(int dim) {
  if (dim != 2 && dim != 3)
    raise(ErrorCode::unsupported,
          "Unsupported: exact SIC-POVMs are built in for d = 2 and d = 3 only");

  GsmSet out;
  out.dim = dim;
  out.a = 1.0 / (static_cast<double>(dim) * dim);
  // Strength consistent with a = 1/d^2 under the a(t) relation.
  out.t = std::pow(static_cast<double>(dim) * (dim + 1), -1.5);
  out.povm.dim = dim;

  if (dim == 2) {
    // P_k = (I + r_k . sigma)/4 for the four tetrahedral Bloch vectors.
    const double s = 1.0 / std::sqrt(3.0);
    const double bloch[4][3] = {
        {s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
    for (const auto& r : bloch) {
      Matrix p(2);
      p(0, 0) = 0.25 * (1.0 + r[2]);
      p(1, 1) = 0.25 * (1.0 - r[2]);
      p(0, 1) = 0.25 * cplx{r[0], -r[1]};
      p(1, 0) = 0.25 * cplx{r[0], r[1]};
      out.povm.elements.push_back(std::move(p));
    }
    return out;
  }

  // d = 3: clock-and-shift orbit X^p Z^q of the fiducial (0, 1, -1)/sqrt(2),
  // with X|j> = |j+1 mod 3> and Z|j> = w^j |j>.
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const cplx fiducial[3] = {0.0, inv_sqrt2, -inv_sqrt2};
  const cplx w[3] = {cplx{1.0, 0.0}, cplx{-0.5, std::sqrt(3.0) / 2.0},
                     cplx{-0.5, -std::sqrt(3.0) / 2.0}};
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) {
      cplx v[3];
      for (int j = 0; j < 3; ++j) {
        const int src = (j - p + 3) % 3;  // X^p shifts the index up by p
        v[j] = w[(q * src) % 3] * fiducial[src];
      }
      Matrix proj(3);
      for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
          proj(r, c) = v[r] * std::conj(v[c]) / 3.0;
      out.povm.elements.push_back(std::move(proj));
    }
  }
  return out;
}

double FamilyReport::max_residual() const {
  double m = 0.0;
  for (const auto& item : items) m = std::max(m, item.residual);
  return m;
}

bool FamilyReport::passed(double tol) const { return max_residual() <= tol; }

namespace {

void element_residuals(const std::vector<const Matrix*>& elements, int d,
                       FamilyReport& report) {
  double herm = 0.0;
  double neg = 0.0;
  Matrix sum(d);
  for (const Matrix* p : elements) {
    herm = std::max(herm, p->hermiticity_error());
    neg = std::max(neg, std::max(0.0, -min_eigenvalue_tolerant(*p)));
    sum += *p;
  }
  sum -= Matrix::identity(d);
  report.items.push_back({"element_hermiticity", herm});
  report.items.push_back({"element_negativity", neg});
  report.items.push_back({"completeness", sum.max_abs()});
}

}  // namespace

FamilyReport verify_family(const MumSet& mum) {
  const int d = mum.dim;
  FamilyReport report;

  std::vector<const Matrix*> flat;
  for (const auto& povm : mum.povms)
    for (const auto& p : povm.elements) flat.push_back(&p);

  double trace_res = 0.0;
  for (const Matrix* p : flat)
    trace_res = std::max(trace_res, std::abs(p->trace() - cplx{1.0, 0.0}));
  report.items.push_back({"unit_trace", trace_res});

  // Per-band completeness is the meaningful one for a MUM family.
  double completeness = 0.0;
  double herm = 0.0;
  double neg = 0.0;
  for (const auto& povm : mum.povms) {
    Matrix sum(d);
    for (const auto& p : povm.elements) {
      sum += p;
      herm = std::max(herm, p.hermiticity_error());
      neg = std::max(neg, std::max(0.0, -min_eigenvalue_tolerant(p)));
    }
    sum -= Matrix::identity(d);
    completeness = std::max(completeness, sum.max_abs());
  }
  report.items.push_back({"element_hermiticity", herm});
  report.items.push_back({"element_negativity", neg});
  report.items.push_back({"completeness", completeness});

  double cross = 0.0;
  double same_diag = 0.0;
  double same_off = 0.0;
  const double off_target = (1.0 - mum.kappa) / (d - 1);
  for (int b = 0; b <= d; ++b) {
    for (int bp = b; bp <= d; ++bp) {
      for (int n = 0; n < d; ++n) {
        for (int np = 0; np < d; ++np) {
          const double overlap =
              trace_product(mum.povms[b].elements[n], mum.povms[bp].elements[np])
                  .real();
          if (b != bp) {
            cross = std::max(cross, std::abs(overlap - 1.0 / d));
          } else if (n == np) {
            same_diag = std::max(same_diag, std::abs(overlap - mum.kappa));
          } else {
            same_off = std::max(same_off, std::abs(overlap - off_target));
          }
        }
      }
    }
  }
  report.items.push_back({"cross_band_overlap", cross});
  report.items.push_back({"same_band_diagonal", same_diag});
  report.items.push_back({"same_band_off_diagonal", same_off});
  report.items.push_back(
      {"kappa_formula", std::abs(mum.kappa - kappa_of(d, mum.t))});
  return report;
}

FamilyReport verify_family(const GsmSet& gsm) {
  const int d = gsm.dim;
  FamilyReport report;

  std::vector<const Matrix*> flat;
  for (const auto& p : gsm.povm.elements) flat.push_back(&p);
  element_residuals(flat, d, report);

  double diag = 0.0;
  double off = 0.0;
  const double off_target =
      (1.0 - d * gsm.a) / (static_cast<double>(d) * (d * d - 1));
  const int n = static_cast<int>(flat.size());
  for (int k = 0; k < n; ++k) {
    for (int l = k; l < n; ++l) {
      const double overlap = trace_product(*flat[k], *flat[l]).real();
      if (k == l)
        diag = std::max(diag, std::abs(overlap - gsm.a));
      else
        off = std::max(off, std::abs(overlap - off_target));
    }
  }
  report.items.push_back({"purity_overlap", diag});
  report.items.push_back({"cross_overlap", off});
  report.items.push_back({"a_formula", std::abs(gsm.a - a_of(d, gsm.t))});
  return report;
}

FamilyReport verify_family(const MubSet& mub) {
  const int d = mub.dim;
  FamilyReport report;

  double ortho = 0.0;
  for (const auto& basis : mub.bases) {
    Matrix gram = basis.adjoint() * basis;
    gram -= Matrix::identity(d);
    ortho = std::max(ortho, gram.max_abs());
  }
  report.items.push_back({"basis_orthonormality", ortho});

  const double target = 1.0 / std::sqrt(static_cast<double>(d));
  double unbiased = 0.0;
  for (std::size_t b = 0; b < mub.bases.size(); ++b) {
    for (std::size_t c = b + 1; c < mub.bases.size(); ++c) {
      const Matrix overlaps = mub.bases[b].adjoint() * mub.bases[c];
      for (const auto& e : overlaps.entries())
        unbiased = std::max(unbiased, std::abs(std::abs(e) - target));
    }
  }
  report.items.push_back({"cross_basis_unbiasedness", unbiased});
  return report;
}

int Measurement::dim() const {
  return std::visit([](const auto& m) { return m.dim; }, value);
}

FamilyReport Measurement::verify() const {
  return std::visit([](const auto& m) { return verify_family(m); }, value);
}

const char* kind_name(Measurement::Kind kind) {
  switch (kind) {
    case Measurement::Kind::mum: return "mum";
    case Measurement::Kind::gsm: return "gsm";
    case Measurement::Kind::mub: return "mub";
    case Measurement::Kind::sic: return "sic";
  }
  return "unknown";
}

}  // namespace coh
