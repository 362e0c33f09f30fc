#include "dal/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dal/entanglement.hpp"
#include "dal/error.hpp"

namespace dal {

namespace {
constexpr double kDegeneracyGap = 1e-8;
}

ComplexVector Spectrum::state(std::size_t n) const {
  if (n >= size()) {
    throw Error(ErrorKind::IndexOutOfRange, "eigenstate index " + std::to_string(n));
  }
  return states.column(n);
}

std::size_t FidelityVector::argmax() const {
  return static_cast<std::size_t>(
      std::distance(values.begin(), std::max_element(values.begin(), values.end())));
}

Spectrum hamiltonian_spectrum(const ModelParams& p) {
  auto eig = eigh(build_hamiltonian(p));
  Spectrum s;
  s.energies = std::move(eig.eigenvalues);
  s.states = std::move(eig.eigenvectors);
  s.degenerate_with_next.assign(s.energies.size(), false);
  for (std::size_t n = 0; n + 1 < s.energies.size(); ++n) {
    s.degenerate_with_next[n] = s.energies[n + 1] - s.energies[n] < kDegeneracyGap;
  }
  return s;
}

FidelityVector fidelities(const DensityMatrix& rho, const Spectrum& s) {
  if (rho.dim() != s.states.rows()) {
    throw Error(ErrorKind::InvalidState, "fidelities: state and spectrum dimensions differ");
  }
  const ComplexMatrix& m = rho.matrix();
  FidelityVector f;
  f.values.resize(s.size());
  for (std::size_t n = 0; n < s.size(); ++n) {
    const ComplexVector e = s.state(n);
    const Complex value = dot(e, m * std::span<const Complex>(e));
    if (std::abs(value.imag()) > 1e-12) {
      throw Error(ErrorKind::InvalidState, "fidelities: non-real expectation value");
    }
    f.values[n] = value.real();
  }
  return f;
}

std::vector<SubspaceFidelity> subspace_fidelities(const FidelityVector& f, const Spectrum& s) {
  std::vector<SubspaceFidelity> out;
  for (std::size_t n = 0; n < s.size(); ++n) {
    if (n == 0 || !s.degenerate_with_next[n - 1]) {
      out.push_back({{}, s.energies[n], 0.0});
    }
    out.back().indices.push_back(n);
    out.back().value += f.values.at(n);
  }
  return out;
}

TruncatedMixture truncated_mixture(const Spectrum& s, const FidelityVector& f,
                                   std::span<const std::size_t> indices) {
  if (indices.empty()) throw Error(ErrorKind::EmptySelection, "no eigenstates selected");
  std::vector<bool> selected(s.size(), false);
  for (std::size_t n : indices) {
    if (n >= s.size()) {
      throw Error(ErrorKind::IndexOutOfRange, "eigenstate index " + std::to_string(n));
    }
    selected[n] = true;
  }
  ComplexMatrix rho(s.states.rows(), s.states.rows());
  double weight = 0.0;
  double total = 0.0;
  for (std::size_t n = 0; n < s.size(); ++n) {
    total += f.values.at(n);
    if (!selected[n]) continue;
    weight += f.values[n];
    rho += ComplexMatrix::outer(s.state(n)) * f.values[n];
  }
  if (!(weight > 0.0)) {
    throw Error(ErrorKind::EmptySelection, "selected eigenstates carry no weight");
  }
  rho *= 1.0 / weight;
  return {DensityMatrix(std::move(rho)), weight, total - weight};
}

double eigenstate_negativity(const Spectrum& s, std::size_t n) {
  const ComplexVector e = s.state(n);
  return negativity(partial_trace_c(DensityMatrix::pure(e)));
}

}  // namespace dal
