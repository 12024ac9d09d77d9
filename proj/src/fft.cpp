#include "latchem/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace latchem {

namespace {
// FFTW plan creation/destruction is not thread-safe; execution is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

TensorTransform::TensorTransform(int N, int slots, Complex* buf) : buf_(buf) {
    if (N < 2 || slots < 1 || slots > 4)
        throw std::invalid_argument("TensorTransform: bad N or slot count");
    const int64_t K = int64_t(N) * N;
    total_ = 1;
    for (int r = 0; r < slots; ++r) total_ *= K;
    factor_ = 1.0;
    for (int r = 0; r < slots; ++r) factor_ /= N;

    // Each slot contributes two transform dimensions (x then y), innermost
    // slot having unit element stride.
    fftw_iodim64 dims[8];
    int nd = 0;
    int64_t stride = total_;
    for (int r = 0; r < slots; ++r) {
        stride /= K;  // element stride of slot r
        dims[nd++] = {N, stride * N, stride * N};
        dims[nd++] = {N, stride, stride};
    }

    auto* data = reinterpret_cast<fftw_complex*>(buf_);
    std::lock_guard<std::mutex> lock(plan_mutex());
    fwd_ = fftw_plan_guru64_dft(nd, dims, 0, nullptr, data, data, FFTW_FORWARD,
                                FFTW_ESTIMATE);
    inv_ = fftw_plan_guru64_dft(nd, dims, 0, nullptr, data, data, FFTW_BACKWARD,
                                FFTW_ESTIMATE);
    if (!fwd_ || !inv_) throw std::runtime_error("TensorTransform: fftw planning failed");
}

TensorTransform::~TensorTransform() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    if (fwd_) fftw_destroy_plan(static_cast<fftw_plan>(fwd_));
    if (inv_) fftw_destroy_plan(static_cast<fftw_plan>(inv_));
}

void TensorTransform::scale() const {
    const double f = factor_;
#pragma omp parallel for schedule(static)
    for (int64_t i = 0; i < total_; ++i) buf_[i] *= f;
}

void TensorTransform::forward() const {
    fftw_execute(static_cast<fftw_plan>(fwd_));
    scale();
}

void TensorTransform::inverse() const {
    fftw_execute(static_cast<fftw_plan>(inv_));
    scale();
}

}  // namespace latchem
