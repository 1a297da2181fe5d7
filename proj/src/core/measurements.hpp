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
#pragma once

#include <string>
#include <variant>
#include <vector>

#include "core/matrix.hpp"
#include "core/operator_basis.hpp"

namespace coh {

/// Positive operator-valued measure: PSD elements summing to the identity.
struct Povm {
  int dim = 0;
  std::vector<Matrix> elements;
};

/// Complete family of d+1 mutually unbiased measurements with strength t and
/// efficiency kappa = 1/d + t^2 (1+sqrt(d))^2 (d-1). Each POVM has d
/// unit-trace elements; cross-family overlaps are 1/d and same-family
/// overlaps interpolate between kappa and (1-kappa)/(d-1).
struct MumSet {
  int dim = 0;
  double t = 0.0;
  double kappa = 0.0;
  std::vector<Povm> povms;  // d+1 entries of d elements each
};

/// General symmetric informationally complete measurement: d^2 elements with
/// Tr(P_k^2) = a and Tr(P_k P_l) = (1 - d a) / (d (d^2 - 1)) for k != l,
/// where a = 1/d^3 + t^2 (d-1)(d+1)^3. a = 1/d^2 is the rank-one (SIC-POVM)
/// limit.
struct GsmSet {
  int dim = 0;
  double t = 0.0;
  double a = 0.0;
  Povm povm;  // d^2 elements
};

/// d+1 orthonormal bases with all cross-basis overlaps of modulus 1/sqrt(d).
/// Basis b is stored as a matrix whose columns are the basis vectors.
struct MubSet {
  int dim = 0;
  std::vector<Matrix> bases;  // d+1 unitary matrices
};

/// kappa as a function of the construction strength t.
double kappa_of(int dim, double t);
/// a as a function of the construction strength t.
double a_of(int dim, double t);

/// Builds the d+1 unbiased measurements P_n^(b) = I/d + t F_n^(b) on top of a
/// partitioned basis, where F_n^(b) = F^(b) - (d + sqrt(d)) F_{n,b} for
/// n < d and (1 + sqrt(d)) F^(b) for n = d.
///
/// Throws ZeroT for t = 0 (kappa would hit the excluded 1/d boundary) and
/// NotPositive naming the first offending (b, n) when any element has an
/// eigenvalue below -1e-10.
MumSet build_mum(const PartitionedBasis& partition, double t);

/// Builds the d^2-element general SIC measurement P_k = I/d^2 +
/// t [F - d(d+1) F_k] (k < d^2), P_{d^2} = I/d^2 + t (d+1) F, with
/// F = sum_k F_k. Same error contract as build_mum.
GsmSet build_gsm(const OperatorBasis& basis, double t);

/// Largest t > 0 keeping every element of build_mum positive semidefinite,
/// located by bisection to 1e-12 after bracketing downward from t = d.
double max_positive_t_mum(const PartitionedBasis& partition);
double max_positive_t_gsm(const OperatorBasis& basis);

/// Complete MUB set for prime d <= 31: the computational basis plus the d
/// quadratic Gauss-sum bases (Pauli eigenbases for d = 2). Prime powers are
/// rejected as Unsupported, other composites as NotPrime.
MubSet build_mub_prime(int dim);

/// Exact SIC-POVMs as GsmSets with a = 1/d^2: the Bloch tetrahedron for
/// d = 2 and the clock-and-shift orbit of the fiducial (0, 1, -1)/sqrt(2)
/// for d = 3. Other dimensions are Unsupported.
GsmSet builtin_sic(int dim);

/// Per-condition maximum residuals of a measurement family's defining
/// relations; reporting only, never throws.
struct FamilyReport {
  struct Item {
    std::string name;
    double residual;
  };
  std::vector<Item> items;

  double max_residual() const;
  bool passed(double tol) const;
};

FamilyReport verify_family(const MumSet& mum);
FamilyReport verify_family(const GsmSet& gsm);
FamilyReport verify_family(const MubSet& mub);

/// Tagged measurement family, the unit of serialization; a SIC-POVM is a
/// GsmSet remembered as Kind::sic.
struct Measurement {
  enum class Kind { mum, gsm, mub, sic };

  Kind kind;
  std::variant<MumSet, GsmSet, MubSet> value;

  int dim() const;
  FamilyReport verify() const;
};

const char* kind_name(Measurement::Kind kind);

}  // namespace coh
