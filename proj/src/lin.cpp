// SPDX-License-Identifier: Apache-2.0

#include "wmono/lin.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace wmono::lin {

namespace {

void check_square(const Matrix& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    std::ostringstream os;
    os << who << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
    throw std::domain_error(os.str());
  }
}

double max_hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

namespace {

void check_subset_shape(const std::vector<int>& idx) {
  if (idx.empty()) throw std::domain_error("QubitSubset: must be non-empty");
  if (idx.front() < 1) throw std::domain_error("QubitSubset: indices are 1-based");
  for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
    if (idx[k] >= idx[k + 1]) {
      throw std::domain_error("QubitSubset: indices must be strictly increasing");
    }
  }
}

}  // namespace

QubitSubset::QubitSubset(std::initializer_list<int> idx) : indices(idx) {
  check_subset_shape(indices);
}

QubitSubset::QubitSubset(std::vector<int> idx) : indices(std::move(idx)) {
  check_subset_shape(indices);
}

bool QubitSubset::contains(int q) const {
  return std::binary_search(indices.begin(), indices.end(), q);
}

void QubitSubset::validate_against(int num_subsystems) const {
  for (int q : indices) {
    if (q < 1 || q > num_subsystems) {
      std::ostringstream os;
      os << "QubitSubset: index " << q << " outside [1, " << num_subsystems << "]";
      throw std::domain_error(os.str());
    }
  }
}

PureState::PureState(int num_qubits, Vector amplitudes)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
  if (num_qubits_ < 1) throw std::domain_error("PureState: need at least one qubit");
  const std::size_t want = std::size_t{1} << num_qubits_;
  if (static_cast<std::size_t>(amplitudes_.size()) != want) {
    std::ostringstream os;
    os << "PureState: " << num_qubits_ << " qubits need " << want << " amplitudes, got "
       << amplitudes_.size();
    throw std::domain_error(os.str());
  }
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-12) {
    std::ostringstream os;
    os << "PureState: squared norm " << norm2 << " deviates from 1 beyond 1e-12";
    throw std::domain_error(os.str());
  }
}

DensityMatrix::DensityMatrix(std::vector<int> subsystem_dims, Matrix entries)
    : dims_(std::move(subsystem_dims)), entries_(std::move(entries)) {
  check_square(entries_, "DensityMatrix");
  if (dims_.empty()) throw std::domain_error("DensityMatrix: empty subsystem dimension list");
  std::size_t prod = 1;
  for (int d : dims_) {
    if (d < 2) throw std::domain_error("DensityMatrix: subsystem dimensions must be >= 2");
    prod *= static_cast<std::size_t>(d);
  }
  if (prod != static_cast<std::size_t>(entries_.rows())) {
    std::ostringstream os;
    os << "DensityMatrix: dimension product " << prod << " does not match matrix size "
       << entries_.rows();
    throw std::domain_error(os.str());
  }
  const double herm = max_hermiticity_defect(entries_);
  if (herm > 1e-12) {
    std::ostringstream os;
    os << "DensityMatrix: hermiticity defect " << herm << " exceeds 1e-12";
    throw std::domain_error(os.str());
  }
  const double tr = entries_.trace().real();
  if (std::abs(tr - 1.0) > 1e-12 || std::abs(entries_.trace().imag()) > 1e-12) {
    std::ostringstream os;
    os << "DensityMatrix: trace " << tr << " deviates from 1 beyond 1e-12";
    throw std::domain_error(os.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(entries_, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::domain_error("DensityMatrix: eigensolver failed during validation");
  }
  const double lo = es.eigenvalues().minCoeff();
  if (lo < -1e-10) {
    std::ostringstream os;
    os << "DensityMatrix: eigenvalue " << lo << " below -1e-10, matrix is not PSD";
    throw std::domain_error(os.str());
  }
}

DensityMatrix density_of(const PureState& psi) {
  Matrix m = psi.amplitudes() * psi.amplitudes().adjoint();
  // Symmetrize away the last-bit rounding so the validated ctor is happy.
  m = (m + m.adjoint().eval()) / 2.0;
  return DensityMatrix(std::vector<int>(static_cast<std::size_t>(psi.num_qubits()), 2),
                       std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSubset& keep) {
  const auto& dims = rho.subsystem_dims();
  const int n = rho.num_subsystems();
  keep.validate_against(n);

  std::vector<int> kept(keep.indices);
  std::vector<int> traced;
  for (int q = 1; q <= n; ++q) {
    if (!keep.contains(q)) traced.push_back(q);
  }
  if (traced.empty()) return rho;

  std::size_t dim_keep = 1, dim_tr = 1;
  std::vector<int> kept_dims;
  for (int q : kept) {
    kept_dims.push_back(dims[static_cast<std::size_t>(q - 1)]);
    dim_keep *= static_cast<std::size_t>(kept_dims.back());
  }
  for (int q : traced) dim_tr *= static_cast<std::size_t>(dims[static_cast<std::size_t>(q - 1)]);

  // Strides of each subsystem in the big row-major basis index.
  std::vector<std::size_t> stride(static_cast<std::size_t>(n), 1);
  for (int q = n - 1; q >= 1; --q) {
    stride[static_cast<std::size_t>(q - 1)] =
        stride[static_cast<std::size_t>(q)] * static_cast<std::size_t>(dims[static_cast<std::size_t>(q)]);
  }

  // Big index of a (kept-block, traced-block) pair of digit tuples.
  auto big_index = [&](std::size_t keep_part, std::size_t tr_part) {
    std::size_t idx = 0;
    for (std::size_t k = kept.size(); k-- > 0;) {
      const int q = kept[k];
      const std::size_t d = static_cast<std::size_t>(dims[static_cast<std::size_t>(q - 1)]);
      idx += (keep_part % d) * stride[static_cast<std::size_t>(q - 1)];
      keep_part /= d;
    }
    for (std::size_t k = traced.size(); k-- > 0;) {
      const int q = traced[k];
      const std::size_t d = static_cast<std::size_t>(dims[static_cast<std::size_t>(q - 1)]);
      idx += (tr_part % d) * stride[static_cast<std::size_t>(q - 1)];
      tr_part /= d;
    }
    return idx;
  };

  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim_keep), static_cast<Eigen::Index>(dim_keep));
  for (std::size_t r = 0; r < dim_keep; ++r) {
    for (std::size_t c = 0; c < dim_keep; ++c) {
      Complex acc{0.0, 0.0};
      for (std::size_t t = 0; t < dim_tr; ++t) {
        acc += rho.entries()(static_cast<Eigen::Index>(big_index(r, t)),
                             static_cast<Eigen::Index>(big_index(c, t)));
      }
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = acc;
    }
  }
  out = (out + out.adjoint().eval()) / 2.0;
  return DensityMatrix(std::move(kept_dims), std::move(out));
}

Matrix partial_transpose(const DensityMatrix& rho, const QubitSubset& side) {
  const auto& dims = rho.subsystem_dims();
  const int n = rho.num_subsystems();
  side.validate_against(n);

  std::vector<std::size_t> stride(static_cast<std::size_t>(n), 1);
  for (int q = n - 1; q >= 1; --q) {
    stride[static_cast<std::size_t>(q - 1)] =
        stride[static_cast<std::size_t>(q)] * static_cast<std::size_t>(dims[static_cast<std::size_t>(q)]);
  }
  auto digit = [&](std::size_t idx, int q) {
    return (idx / stride[static_cast<std::size_t>(q - 1)]) %
           static_cast<std::size_t>(dims[static_cast<std::size_t>(q - 1)]);
  };

  const std::size_t dim = static_cast<std::size_t>(rho.dim());
  Matrix out(rho.dim(), rho.dim());
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) {
      // Swap the digits of the transposed side between row and column.
      std::size_t rr = r, cc = c;
      for (int q : side.indices) {
        const std::size_t dr = digit(r, q), dc = digit(c, q);
        rr += (dc - dr) * stride[static_cast<std::size_t>(q - 1)];
        cc += (dr - dc) * stride[static_cast<std::size_t>(q - 1)];
      }
      out(static_cast<Eigen::Index>(rr), static_cast<Eigen::Index>(cc)) =
          rho.entries()(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return out;
}

Spectrum hermitian_spectrum(const Matrix& m) {
  check_square(m, "hermitian_spectrum");
  const double herm = max_hermiticity_defect(m);
  if (herm > 1e-10) {
    std::ostringstream os;
    os << "hermitian_spectrum: hermiticity defect " << herm << " exceeds 1e-10";
    throw std::domain_error(os.str());
  }
  const Matrix sym = (m + m.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw std::domain_error("hermitian_spectrum: eigensolver did not converge");
  }
  Spectrum s;
  s.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(s.eigenvalues.begin(), s.eigenvalues.end(), std::greater<double>());
  for (double& v : s.eigenvalues) {
    if (std::abs(v) < 1e-12) v = 0.0;
  }
  return s;
}

double trace_norm(const Matrix& m) {
  check_square(m, "trace_norm");
  // Hermitian inputs (the only ones this project produces) get the exact
  // sum-of-|eigenvalue| route; anything else falls back to singular values.
  if (max_hermiticity_defect(m) <= 1e-10) {
    const Matrix sym = (m + m.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
      throw std::domain_error("trace_norm: eigensolver did not converge");
    }
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues().sum();
}

}  // namespace wmono::lin
