#include "maxplus/martin.hpp"

#include <algorithm>
#include <string>

#include "maxplus/error.hpp"

namespace maxplus::martin {

namespace {

void require_no_pos_inf(const MaxPlusFunction& h) {
  if (std::any_of(h.begin(), h.end(), [](Value v) { return v.is_pos_inf(); })) {
    throw Error(Errc::InvalidArgument, "harmonic candidates may not take the value +inf");
  }
}

void require_size(const MaxPlusFunction& h, std::size_t n) {
  if (h.size() != n) {
    throw Error(Errc::DimensionMismatch, "function has " + std::to_string(h.size()) +
                                             " entries, expected " + std::to_string(n));
  }
}

MaxPlusFunction column_of(const StarMatrix& s, std::size_t y) {
  const std::size_t b = s.basepoint();
  MaxPlusFunction col(s.size());
  for (std::size_t x = 0; x < s.size(); ++x) col[x] = Value{s(x, y).finite() - s(b, y).finite()};
  return col;
}

}  // namespace

bool approx_equal(const MaxPlusFunction& f, const MaxPlusFunction& g, double tol) {
  if (f.size() != g.size()) return false;
  for (std::size_t i = 0; i < f.size(); ++i)
    if (!maxplus::approx_equal(f[i], g[i], tol)) return false;
  return true;
}

bool is_harmonic(const KernelMatrix& a, const MaxPlusFunction& h) {
  require_size(h, a.size());
  require_no_pos_inf(h);
  return approx_equal(apply(a, h), h);
}

bool is_superharmonic(const KernelMatrix& a, const MaxPlusFunction& h) {
  require_size(h, a.size());
  require_no_pos_inf(h);
  const MaxPlusFunction ah = apply(a, h);
  for (std::size_t x = 0; x < h.size(); ++x)
    if (!approx_less_equal(ah[x], h[x])) return false;
  return true;
}

Value mu(const MaxPlusFunction& xi, const MartinObject& eta, const StarMatrix& s) {
  require_size(xi, s.size());
  const std::size_t b = s.basepoint();
  Value best = kNegInf;
  for (std::size_t x : eta.members) best = oplus(best, otimes(s(b, x), xi[x]));
  return best;
}

Value boundary_kernel(const MartinObject& eta, const MartinObject& xi, const StarMatrix& s) {
  return mu(xi.column, eta, s);
}

std::vector<MartinObject> martin_kernel(const StarMatrix& s) {
  s.require_irreducible();
  const auto classes = recurrence_classes(s);
  std::vector<MartinObject> out;
  out.reserve(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    MartinObject obj;
    obj.class_id = c;
    obj.members = classes[c];
    obj.column = column_of(s, obj.representative());
    for (std::size_t y : obj.members) {
      if (!approx_equal(column_of(s, y), obj.column)) {
        throw Error(Errc::AssumptionViolated,
                    "states '" + s.source().states()[obj.representative()] + "' and '" +
                        s.source().states()[y] + "' are equivalent but have different Martin columns");
      }
    }
    obj.harmonic = is_harmonic(s.source(), obj.column);
    out.push_back(std::move(obj));
  }
  for (auto& obj : out) {
    obj.minimal = obj.harmonic && maxplus::approx_equal(boundary_kernel(obj, obj, s), Value::unit());
  }
  return out;
}

std::vector<MartinObject> minimal_martin_space(const StarMatrix& s) {
  std::vector<MartinObject> all = martin_kernel(s);
  std::vector<MartinObject> out;
  for (auto& obj : all)
    if (obj.minimal) out.push_back(std::move(obj));
  return out;
}

MartinMeasure spectral_measure(const MaxPlusFunction& h, const std::vector<MartinObject>& minimal,
                               const StarMatrix& s) {
  if (!is_harmonic(s.source(), h)) throw Error(Errc::NotHarmonic, "function is not harmonic (Ah != h)");
  MartinMeasure nu;
  nu.reserve(minimal.size());
  for (const auto& w : minimal) nu.push_back(mu(h, w, s));
  return nu;
}

MaxPlusFunction represent(const MartinMeasure& nu, const std::vector<MartinObject>& minimal,
                          std::size_t states) {
  if (nu.size() != minimal.size()) {
    throw Error(Errc::DimensionMismatch, "measure has " + std::to_string(nu.size()) +
                                             " weights for " + std::to_string(minimal.size()) +
                                             " minimal points");
  }
  MaxPlusFunction h(states, kNegInf);
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    require_size(minimal[k].column, states);
    for (std::size_t x = 0; x < states; ++x) h[x] = oplus(h[x], otimes(nu[k], minimal[k].column[x]));
  }
  return h;
}

bool is_extremal(const MaxPlusFunction& h, const std::vector<MartinObject>& minimal,
                 const StarMatrix& s) {
  require_size(h, s.size());
  if (!maxplus::approx_equal(h[s.basepoint()], Value::unit())) {
    throw Error(Errc::NotNormalized, "extremality is tested on normalized functions, h(b) must be 0");
  }
  const MartinMeasure nu = spectral_measure(h, minimal, s);
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    if (nu[k].is_neg_inf()) continue;
    MaxPlusFunction shifted(h.size());
    for (std::size_t x = 0; x < h.size(); ++x) shifted[x] = otimes(nu[k], minimal[k].column[x]);
    if (approx_equal(shifted, h)) return true;
  }
  return false;
}

}  // namespace maxplus::martin
