#include "latchem/sparse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace latchem {

SparseHamiltonian::SparseHamiltonian(int64_t dim, std::vector<Triplet> triplets)
    : dim_(dim) {
    if (dim <= 0) throw std::invalid_argument("SparseHamiltonian: dim must be positive");
    for (const auto& t : triplets)
        if (t.row < 0 || t.row >= dim || t.col < 0 || t.col >= dim)
            throw std::out_of_range("SparseHamiltonian: triplet outside matrix");
    std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    row_ptr_.assign(dim + 1, 0);
    col_.reserve(triplets.size());
    val_.reserve(triplets.size());
    for (std::size_t i = 0; i < triplets.size();) {
        std::size_t j = i;
        double v = 0.0;
        while (j < triplets.size() && triplets[j].row == triplets[i].row &&
               triplets[j].col == triplets[i].col)
            v += triplets[j++].value;
        col_.push_back(int32_t(triplets[i].col));
        val_.push_back(v);
        ++row_ptr_[triplets[i].row + 1];
        i = j;
    }
    for (int64_t r = 0; r < dim; ++r) row_ptr_[r + 1] += row_ptr_[r];
}

void SparseHamiltonian::matvec(const double* x, double* y) const {
#pragma omp parallel for schedule(static)
    for (int64_t r = 0; r < dim_; ++r) {
        double s = 0.0;
        for (int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) s += val_[p] * x[col_[p]];
        y[r] = s;
    }
}

void SparseHamiltonian::matvec(const Complex* x, Complex* y) const {
#pragma omp parallel for schedule(static)
    for (int64_t r = 0; r < dim_; ++r) {
        Complex s = 0.0;
        for (int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) s += val_[p] * x[col_[p]];
        y[r] = s;
    }
}

bool SparseHamiltonian::is_hermitian(double tol) const {
    for (int64_t r = 0; r < dim_; ++r) {
        for (int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
            const int64_t c = col_[p];
            // binary search for (c, r)
            const int64_t lo = row_ptr_[c], hi = row_ptr_[c + 1];
            auto it = std::lower_bound(col_.begin() + lo, col_.begin() + hi, int32_t(r));
            if (it == col_.begin() + hi || *it != int32_t(r)) {
                if (std::abs(val_[p]) > tol) return false;
                continue;
            }
            const double vt = val_[it - col_.begin()];
            if (std::abs(val_[p] - vt) > tol) return false;
        }
    }
    return true;
}

double SparseHamiltonian::diagonal_min() const {
    double m = 0.0;
    bool first = true;
    for (int64_t r = 0; r < dim_; ++r)
        for (int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
            if (col_[p] == r && (first || val_[p] < m)) m = val_[p], first = false;
    return first ? 0.0 : m;
}

double SparseHamiltonian::diagonal_max() const {
    double m = 0.0;
    bool first = true;
    for (int64_t r = 0; r < dim_; ++r)
        for (int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
            if (col_[p] == r && (first || val_[p] > m)) m = val_[p], first = false;
    return first ? 0.0 : m;
}

double SparseHamiltonian::gershgorin_bound() const {
    double bound = 0.0;
    for (int64_t r = 0; r < dim_; ++r) {
        double radius = 0.0;
        for (int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
            radius += std::abs(val_[p]);
        bound = std::max(bound, radius);
    }
    return bound;
}

std::vector<Triplet> SparseHamiltonian::to_triplets() const {
    std::vector<Triplet> out;
    out.reserve(col_.size());
    for (int64_t r = 0; r < dim_; ++r)
        for (int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p)
            out.push_back({r, col_[p], val_[p]});
    return out;
}

void SparseHamiltonian::save(const std::string& path, const std::string& params_json) const {
    nlohmann::json header;
    header["format"] = "latchem-sparse-v1";
    header["dim"] = dim_;
    header["nnz"] = nonzeros();
    header["params"] = nlohmann::json::parse(params_json);
    const std::string htext = header.dump();

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("SparseHamiltonian::save: cannot open " + path);
    const uint64_t hlen = htext.size();
    out.write(reinterpret_cast<const char*>(&hlen), sizeof hlen);
    out.write(htext.data(), std::streamsize(hlen));
    for (int64_t r = 0; r < dim_; ++r) {
        for (int64_t p = row_ptr_[r]; p < row_ptr_[r + 1]; ++p) {
            const int64_t c = col_[p];
            out.write(reinterpret_cast<const char*>(&r), sizeof r);
            out.write(reinterpret_cast<const char*>(&c), sizeof c);
            out.write(reinterpret_cast<const char*>(&val_[p]), sizeof(double));
        }
    }
    if (!out) throw std::runtime_error("SparseHamiltonian::save: write failed");
}

SparseHamiltonian SparseHamiltonian::load(const std::string& path, std::string* params_json) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("SparseHamiltonian::load: cannot open " + path);
    uint64_t hlen = 0;
    in.read(reinterpret_cast<char*>(&hlen), sizeof hlen);
    std::string htext(hlen, '\0');
    in.read(htext.data(), std::streamsize(hlen));
    const auto header = nlohmann::json::parse(htext);
    if (header.at("format") != "latchem-sparse-v1")
        throw std::runtime_error("SparseHamiltonian::load: unknown format");
    const int64_t dim = header.at("dim");
    const int64_t nnz = header.at("nnz");
    if (params_json) *params_json = header.at("params").dump();
    std::vector<Triplet> trips(nnz);
    for (auto& t : trips) {
        in.read(reinterpret_cast<char*>(&t.row), sizeof t.row);
        in.read(reinterpret_cast<char*>(&t.col), sizeof t.col);
        in.read(reinterpret_cast<char*>(&t.value), sizeof t.value);
    }
    if (!in) throw std::runtime_error("SparseHamiltonian::load: truncated file");
    return SparseHamiltonian(dim, std::move(trips));
}

}  // namespace latchem
