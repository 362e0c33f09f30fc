#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dal/model.hpp"
#include "dal/quantum.hpp"

namespace dal {

/// Eigen-decomposition of the undamped Hamiltonian. Eigenstate labels are
/// ascending-energy ranks, so |E_0> is the ground state. The labelling is an
/// inference, since the model itself does not fix an ordering.
struct Spectrum {
  std::vector<double> energies;  // ascending
  ComplexMatrix states;          // column n is |E_n>
  /// degenerate_with_next[n] is set when E_{n+1} - E_n < 1e-8.
  std::vector<bool> degenerate_with_next;

  std::size_t size() const noexcept { return energies.size(); }
  ComplexVector state(std::size_t n) const;
};

struct FidelityVector {
  std::vector<double> values;  // F_n = <E_n|rho|E_n>

  std::size_t argmax() const;
};

Spectrum hamiltonian_spectrum(const ModelParams& p);

/// Throws InvalidState when rho is not 8x8 or a diagonal element carries an
/// imaginary part above 1e-12.
FidelityVector fidelities(const DensityMatrix& rho, const Spectrum& s);

/// Individual F_n are basis dependent inside a degenerate eigenspace; the
/// summed weight of the whole subspace is not.
struct SubspaceFidelity {
  std::vector<std::size_t> indices;
  double energy;
  double value;
};
std::vector<SubspaceFidelity> subspace_fidelities(const FidelityVector& f, const Spectrum& s);

struct TruncatedMixture {
  DensityMatrix rho;
  double retained_weight;  // sum of selected F_n before renormalization
  double discarded_weight;
};

/// sum_{n in indices} F_n |E_n><E_n|, renormalized to unit trace.
/// Throws EmptySelection when nothing (or zero weight) is selected and
/// IndexOutOfRange for labels beyond the spectrum.
TruncatedMixture truncated_mixture(const Spectrum& s, const FidelityVector& f,
                                   std::span<const std::size_t> indices);

/// Negativity of tr_C(|E_n><E_n|).
double eigenstate_negativity(const Spectrum& s, std::size_t n);

}  // namespace dal
