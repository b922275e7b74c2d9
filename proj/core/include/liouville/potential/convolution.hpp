#pragma once

#include <complex>
#include <vector>

#include "liouville/field/scalar_field.hpp"
#include "liouville/potential/kernels.hpp"

namespace liouville {

/// Zero-padded linear convolution of grid data with a KernelTable, via FFT.
///
/// The kernel spectrum is computed once; apply() allocates its own buffers
/// and may be called from several threads.
class ConvolutionOperator {
 public:
  ConvolutionOperator(const Grid2D& grid, const KernelTable& table, int padding_factor = 2);

  const Grid2D& grid() const { return grid_; }
  int padded_size() const { return m_; }

  /// out(x_i) = sum_j values_j * w(x_i - y_j) * h^2.
  ScalarField apply(const ScalarField& density) const;

 private:
  Grid2D grid_;
  int m_;
  std::vector<std::complex<double>> spectrum_;
};

}  // namespace liouville
