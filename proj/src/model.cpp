#include "dal/model.hpp"

#include <array>
#include <cmath>
#include <string>

#include "dal/error.hpp"

namespace dal {

namespace {

struct DecayChannel {
  Site site;
  double rate;
};

std::array<DecayChannel, 3> decay_channels(const ModelParams& p) {
  return {{{Site::A, p.gamma}, {Site::B, p.gamma}, {Site::C, p.gamma_c}}};
}

}  // namespace

void ModelParams::validate() const {
  const std::array<std::pair<const char*, double>, 5> fields = {{
      {"omega_c", omega_c}, {"j", j}, {"j_c", j_c}, {"gamma", gamma}, {"gamma_c", gamma_c}}};
  for (const auto& [name, value] : fields) {
    if (!std::isfinite(value)) {
      throw Error(ErrorKind::InvalidParams, std::string(name) + " must be finite");
    }
  }
  if (gamma < 0.0) throw Error(ErrorKind::InvalidParams, "gamma must be >= 0");
  if (gamma_c < 0.0) throw Error(ErrorKind::InvalidParams, "gamma_c must be >= 0");
}

Superoperator::Superoperator(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != kSystemDim * kSystemDim || m_.cols() != kSystemDim * kSystemDim) {
    throw Error(ErrorKind::DimensionMismatch, "Superoperator: expected 64x64");
  }
}

ComplexMatrix build_hamiltonian(const ModelParams& p) {
  p.validate();
  const ComplexMatrix sz = pauli(PauliKind::Z);
  const ComplexMatrix sx = pauli(PauliKind::X);
  const ComplexMatrix xa = embed(sx, Site::A);
  const ComplexMatrix xb = embed(sx, Site::B);
  const ComplexMatrix xc = embed(sx, Site::C);

  ComplexMatrix h = (embed(sz, Site::A) + embed(sz, Site::B)) * (0.5 * ModelParams::omega);
  h += embed(sz, Site::C) * (0.5 * p.omega_c);
  h += xa * xb * p.j;
  h += (xa * xc + xb * xc) * p.j_c;
  return h;
}

Superoperator build_liouvillian(const ModelParams& p) {
  using namespace std::complex_literals;
  const ComplexMatrix h = build_hamiltonian(p);
  ComplexMatrix m = (left_multiplication(h) - right_multiplication(h)) * -1.0i;
  const ComplexMatrix lower = pauli(PauliKind::Minus);
  for (const auto& [site, rate] : decay_channels(p)) {
    if (rate == 0.0) continue;
    const ComplexMatrix l = embed(lower, site);
    const ComplexMatrix l_dag = l.adjoint();
    const ComplexMatrix number = l_dag * l;
    ComplexMatrix d = sandwich(l, l_dag);
    d -= (left_multiplication(number) + right_multiplication(number)) * 0.5;
    m += d * rate;
  }
  return Superoperator(std::move(m));
}

ComplexMatrix apply_liouvillian(const ModelParams& p, const ComplexMatrix& rho) {
  using namespace std::complex_literals;
  if (rho.rows() != kSystemDim || rho.cols() != kSystemDim) {
    throw Error(ErrorKind::DimensionMismatch, "apply_liouvillian: expected an 8x8 operator");
  }
  const ComplexMatrix h = build_hamiltonian(p);
  ComplexMatrix out = (h * rho - rho * h) * -1.0i;
  const ComplexMatrix lower = pauli(PauliKind::Minus);
  for (const auto& [site, rate] : decay_channels(p)) {
    if (rate == 0.0) continue;
    const ComplexMatrix l = embed(lower, site);
    const ComplexMatrix l_dag = l.adjoint();
    const ComplexMatrix number = l_dag * l;
    ComplexMatrix d = l * rho * l_dag;
    d -= (number * rho + rho * number) * 0.5;
    out += d * rate;
  }
  return out;
}

ComplexMatrix apply_liouvillian(const ModelParams& p, const DensityMatrix& rho) {
  return apply_liouvillian(p, rho.matrix());
}

}  // namespace dal
