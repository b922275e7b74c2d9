#include "liouville/potential/convolution.hpp"

#include <fftw3.h>

#include <memory>
#include <mutex>
#include <stdexcept>

namespace liouville {

namespace {

// FFTW's planner is not reentrant; execution with new-array calls is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

template <class T>
std::unique_ptr<T[], FftwFree> fftw_buffer(std::size_t count) {
  auto* p = static_cast<T*>(fftw_malloc(sizeof(T) * count));
  if (!p) throw std::bad_alloc();
  return std::unique_ptr<T[], FftwFree>(p);
}

struct Plans {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
  ~Plans() {
    std::lock_guard lock(planner_mutex());
    if (forward) fftw_destroy_plan(forward);
    if (backward) fftw_destroy_plan(backward);
  }
};

}  // namespace

ConvolutionOperator::ConvolutionOperator(const Grid2D& grid, const KernelTable& table, int padding_factor)
    : grid_(grid), m_(padding_factor * grid.n()) {
  if (padding_factor < 2) throw std::invalid_argument("ConvolutionOperator: padding_factor must be at least 2");
  const int n = grid.n();
  const std::size_t real_count = static_cast<std::size_t>(m_) * m_;
  const std::size_t cplx_count = static_cast<std::size_t>(m_) * (m_ / 2 + 1);
  auto real = fftw_buffer<double>(real_count);
  auto cplx = fftw_buffer<fftw_complex>(cplx_count);
  std::fill(real.get(), real.get() + real_count, 0.0);
  // Circulant embedding: offset d in (-n, n) stored at d mod m.
  const double area = grid.cell_area();
  for (int dj = -(n - 1); dj <= n - 1; ++dj) {
    const int row = (dj + m_) % m_;
    for (int di = -(n - 1); di <= n - 1; ++di) {
      const int col = (di + m_) % m_;
      real[static_cast<std::size_t>(row) * m_ + col] = table.weight(di, dj) * area;
    }
  }
  {
    Plans plans;
    {
      std::lock_guard lock(planner_mutex());
      plans.forward = fftw_plan_dft_r2c_2d(m_, m_, real.get(), cplx.get(), FFTW_ESTIMATE);
    }
    fftw_execute(plans.forward);
  }
  spectrum_.resize(cplx_count);
  const double norm = 1.0 / static_cast<double>(real_count);
  for (std::size_t k = 0; k < cplx_count; ++k) spectrum_[k] = {cplx[k][0] * norm, cplx[k][1] * norm};
}

ScalarField ConvolutionOperator::apply(const ScalarField& density) const {
  require_same_grid(density.grid(), grid_, "ConvolutionOperator::apply");
  const int n = grid_.n();
  const std::size_t real_count = static_cast<std::size_t>(m_) * m_;
  const std::size_t cplx_count = static_cast<std::size_t>(m_) * (m_ / 2 + 1);
  auto real = fftw_buffer<double>(real_count);
  auto cplx = fftw_buffer<fftw_complex>(cplx_count);
  Plans plans;
  {
    std::lock_guard lock(planner_mutex());
    plans.forward = fftw_plan_dft_r2c_2d(m_, m_, real.get(), cplx.get(), FFTW_ESTIMATE);
    plans.backward = fftw_plan_dft_c2r_2d(m_, m_, cplx.get(), real.get(), FFTW_ESTIMATE);
  }
  std::fill(real.get(), real.get() + real_count, 0.0);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const std::size_t k = grid_.index(i, j);
      real[static_cast<std::size_t>(j) * m_ + i] = density.valid(k) ? density[k] : 0.0;
    }
  }
  fftw_execute(plans.forward);
  for (std::size_t k = 0; k < cplx_count; ++k) {
    const std::complex<double> z(cplx[k][0], cplx[k][1]);
    const std::complex<double> p = z * spectrum_[k];
    cplx[k][0] = p.real();
    cplx[k][1] = p.imag();
  }
  fftw_execute(plans.backward);
  ScalarField out(grid_);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) out.at(i, j) = real[static_cast<std::size_t>(j) * m_ + i];
  }
  return out;
}

}  // namespace liouville
