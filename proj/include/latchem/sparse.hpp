#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "latchem/lattice.hpp"

namespace latchem {

struct Triplet {
    int64_t row;
    int64_t col;
    double value;
};

// Real-symmetric sparse operator over an enumerated basis, CSR storage.
// All model Hamiltonians in this library are real, so Hermitian == symmetric.
class SparseHamiltonian {
public:
    SparseHamiltonian() = default;
    // Duplicate (row,col) entries are summed; entries that cancel to zero are kept.
    SparseHamiltonian(int64_t dim, std::vector<Triplet> triplets);

    int64_t dim() const { return dim_; }
    int64_t nonzeros() const { return int64_t(col_.size()); }

    void matvec(const double* x, double* y) const;
    void matvec(const Complex* x, Complex* y) const;

    // Exact check on stored entries: entry(i,j) == entry(j,i).
    bool is_hermitian(double tol = 0.0) const;

    double diagonal_min() const;
    double diagonal_max() const;
    // Gershgorin bound on the spectral radius, used for step-size heuristics.
    double gershgorin_bound() const;

    std::vector<Triplet> to_triplets() const;

    // JSON header (dimension, nnz, optional params echo) + raw binary triplets.
    void save(const std::string& path, const std::string& params_json = "{}") const;
    static SparseHamiltonian load(const std::string& path, std::string* params_json = nullptr);

    const std::vector<int64_t>& row_ptr() const { return row_ptr_; }
    const std::vector<int32_t>& cols() const { return col_; }
    const std::vector<double>& values() const { return val_; }

private:
    int64_t dim_ = 0;
    std::vector<int64_t> row_ptr_;
    std::vector<int32_t> col_;
    std::vector<double> val_;
};

}  // namespace latchem
