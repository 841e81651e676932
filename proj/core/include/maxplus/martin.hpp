#pragma once

#include <cstddef>
#include <vector>

#include "maxplus/star.hpp"

namespace maxplus::martin {

/// A Martin column K(·,y) = A*(·,y) - A*(b,y), shared by every state of the
/// recurrence class of y.
struct MartinObject {
  MaxPlusFunction column;
  std::size_t class_id = 0;
  /// States of the recurrence class, ascending. Never empty.
  std::vector<std::size_t> members;
  bool harmonic = false;
  /// Harmonic with H(ξ,ξ) = 0.
  bool minimal = false;

  std::size_t representative() const noexcept { return members.front(); }
};

/// Max-plus weights on a list of Martin objects, aligned by position.
using MartinMeasure = std::vector<Value>;

/// One object per recurrence class, in the order of `recurrence_classes`.
/// The basepoint is the source kernel's. Throws AssumptionViolated on a flagged
/// star.
std::vector<MartinObject> martin_kernel(const StarMatrix& s);

/// Spectral density of ξ at η. In a finite space the topology on Martin
/// columns is discrete, so the limsup reduces to a max over the class of η:
/// max_{x ~ η} A*(b,x) + ξ(x).
Value mu(const MaxPlusFunction& xi, const MartinObject& eta, const StarMatrix& s);

/// H(η,ξ) = μ_ξ(η); equals A♮(x,y) for representatives x of η and y of ξ.
Value boundary_kernel(const MartinObject& eta, const MartinObject& xi, const StarMatrix& s);

/// Ah = h (one step suffices for a power-generated semigroup). Throws
/// InvalidArgument if h takes the value +inf.
bool is_harmonic(const KernelMatrix& a, const MaxPlusFunction& h);
/// Ah <= h.
bool is_superharmonic(const KernelMatrix& a, const MaxPlusFunction& h);

/// Martin columns that are harmonic and satisfy H(ξ,ξ) = 0.
std::vector<MartinObject> minimal_martin_space(const StarMatrix& s);

/// μ_h restricted to the minimal space. Throws NotHarmonic.
MartinMeasure spectral_measure(const MaxPlusFunction& h, const std::vector<MartinObject>& minimal,
                               const StarMatrix& s);

/// x ↦ max_w ν(w) + w(x). Throws DimensionMismatch if ν and the list differ
/// in length.
MaxPlusFunction represent(const MartinMeasure& nu, const std::vector<MartinObject>& minimal,
                          std::size_t states);

/// Whether h is a normalized extremal generator of the harmonic cone, decided
/// by searching for w with h = μ_h(w) + w. Throws NotNormalized unless
/// h(b) = 0, and NotHarmonic.
bool is_extremal(const MaxPlusFunction& h, const std::vector<MartinObject>& minimal,
                 const StarMatrix& s);

/// Pointwise equality up to kTolerance.
bool approx_equal(const MaxPlusFunction& f, const MaxPlusFunction& g, double tol = kTolerance);

}  // namespace maxplus::martin
