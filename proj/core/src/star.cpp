#include "maxplus/star.hpp"

#include "maxplus/error.hpp"

namespace maxplus::martin {

StarMatrix::StarMatrix(Matrix entries, KernelMatrix source, std::vector<std::string> diagnostics)
    : entries_(std::move(entries)),
      source_(std::move(source)),
      diagnostics_(std::move(diagnostics)),
      assumption_violated_(entries_.has_neg_inf()) {
  if (entries_.size() != source_.size()) {
    throw Error(Errc::DimensionMismatch, "star and source kernel sizes differ");
  }
}

void StarMatrix::require_irreducible() const {
  if (assumption_violated_) {
    throw Error(Errc::AssumptionViolated,
                "A*(x,y) must be finite for all states x,y (irreducibility); the star has -inf entries");
  }
}

StarMatrix kleene_star(const KernelMatrix& a) {
  const std::size_t n = a.size();
  Matrix s = oplus(Matrix::identity(n), a.entries());
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const Value sik = s(i, k);
      if (sik.is_neg_inf()) continue;
      for (std::size_t j = 0; j < n; ++j) s(i, j) = oplus(s(i, j), otimes(sik, s(k, j)));
    }
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (s(i, i).finite() > kTolerance) {
      throw Error(Errc::PositiveCycle, "a cycle through state '" + a.states()[i] +
                                           "' has positive weight, so A* diverges to +inf; "
                                           "normalize by the maximum cycle mean first");
    }
    // Rounding in normalized float kernels can leave a critical cycle a hair
    // above zero.
    s(i, i) = Value::unit();
  }

  std::vector<std::string> diagnostics;
  diagnostics.emplace_back("diagonal zero: ok");
  if (s.has_neg_inf()) {
    diagnostics.emplace_back(
        "warning: A* has -inf entries; irreducibility (A*(x,y) finite) fails and "
        "Martin operations will refuse this instance");
  } else {
    diagnostics.emplace_back("irreducible: ok");
  }
  return StarMatrix(std::move(s), a, std::move(diagnostics));
}

std::vector<std::vector<std::size_t>> recurrence_classes(const StarMatrix& s) {
  const std::size_t n = s.size();
  std::vector<std::vector<std::size_t>> classes;
  std::vector<bool> assigned(n, false);
  for (std::size_t x = 0; x < n; ++x) {
    if (assigned[x]) continue;
    std::vector<std::size_t> cls{x};
    assigned[x] = true;
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!assigned[y] && approx_equal(otimes(s(x, y), s(y, x)), Value::unit())) {
        cls.push_back(y);
        assigned[y] = true;
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

Matrix natural_kernel(const StarMatrix& s) {
  s.require_irreducible();
  const std::size_t n = s.size();
  const std::size_t b = s.basepoint();
  Matrix out(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      out(x, y) = Value{s(b, x).finite() + s(x, y).finite() - s(b, y).finite()};
  return out;
}

}  // namespace maxplus::martin
