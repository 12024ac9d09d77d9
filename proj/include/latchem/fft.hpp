#pragma once

#include <cstdint>
#include <vector>

#include "latchem/lattice.hpp"

namespace latchem {

// In-place discrete Fourier transform of an R-slot tensor, where each slot is
// a 2D N x N grid (layout: flat = ((slot_0*K + slot_1)*K + ...), K = N^2).
// forward() applies e^{-i k j} per slot, inverse() e^{+i k j}; both carry a
// 1/N factor per 2D slot so that forward followed by inverse is the identity
// and norms are preserved (Parseval).
//
// Plans are bound to the buffer passed at construction (FFTW requirement);
// the buffer must stay alive and fixed while the transform is used.
class TensorTransform {
public:
    TensorTransform(int N, int slots, Complex* buf);
    ~TensorTransform();

    TensorTransform(const TensorTransform&) = delete;
    TensorTransform& operator=(const TensorTransform&) = delete;

    void forward() const;
    void inverse() const;

    int64_t size() const { return total_; }

private:
    void scale() const;

    void* fwd_ = nullptr;  // fftw_plan
    void* inv_ = nullptr;
    Complex* buf_ = nullptr;
    int64_t total_ = 0;
    double factor_ = 1.0;  // 1/N^slots
};

}  // namespace latchem
