#include "latchem/chem.hpp"

#include <cmath>
#include <stdexcept>

#include "latchem/errors.hpp"

namespace latchem {

PairPotential PairPotential::none() { return {}; }

PairPotential PairPotential::coulomb(double strength) {
    PairPotential p;
    p.kind_ = Kind::coulomb;
    p.strength_ = strength;
    return p;
}

PairPotential PairPotential::exponential(double strength, double decay_length) {
    if (decay_length <= 0) throw std::invalid_argument("PairPotential: decay length <= 0");
    PairPotential p;
    p.kind_ = Kind::exponential;
    p.strength_ = strength;
    p.decay_ = decay_length;
    return p;
}

PairPotential PairPotential::tabulated(std::vector<double> d, std::vector<double> v) {
    if (d.size() != v.size() || d.size() < 2)
        throw std::invalid_argument("PairPotential: table needs >= 2 samples");
    for (std::size_t i = 1; i < d.size(); ++i)
        if (d[i] <= d[i - 1]) throw std::invalid_argument("PairPotential: table not increasing");
    PairPotential p;
    p.kind_ = Kind::tabulated;
    p.table_d_ = std::move(d);
    p.table_v_ = std::move(v);
    return p;
}

double PairPotential::operator()(double r) const {
    switch (kind_) {
        case Kind::none:
            return 0.0;
        case Kind::coulomb:
            if (r <= 0) throw std::domain_error("PairPotential: r must be > 0");
            return strength_ / r;
        case Kind::exponential:
            return strength_ * std::exp(-r / decay_);
        case Kind::tabulated: {
            if (r < table_d_.front() || r > table_d_.back())
                throw std::domain_error("PairPotential: distance outside tabulated range");
            auto hi = std::lower_bound(table_d_.begin(), table_d_.end(), r);
            if (hi == table_d_.begin()) return table_v_.front();
            const std::size_t j = std::size_t(hi - table_d_.begin());
            const double t = (r - table_d_[j - 1]) / (table_d_[j] - table_d_[j - 1]);
            return (1.0 - t) * table_v_[j - 1] + t * table_v_[j];
        }
    }
    return 0.0;
}

namespace {

void check_nuclei(const LatticeSpec& lat, const ChemParams& p) {
    for (const auto& n : p.nuclei) {
        if (n.Z <= 0) throw std::invalid_argument("NucleusSpec: Z must be positive");
        if (!lat.contains(n.x, n.y))
            throw std::invalid_argument("NucleusSpec: nucleus outside the lattice");
        const double frac = n.y - std::floor(n.y);
        if (std::abs(frac - 0.5) > 1e-12 || std::abs(n.x - std::round(n.x)) > 1e-12)
            throw std::invalid_argument(
                "NucleusSpec: position must be node-aligned in x and half-shifted in y");
    }
    if (p.tF <= 0 || p.V0 <= 0) throw std::invalid_argument("ChemParams: tF, V0 must be > 0");
}

double attraction(const ChemParams& p, double r) {
    return p.form == PotentialForm::coulomb2d ? p.V0 / r
                                              : p.V0 * std::exp(-r / p.decay_length);
}

}  // namespace

std::vector<double> nuclear_diagonal(const LatticeSpec& lat, const ChemParams& p) {
    check_nuclei(lat, p);
    std::vector<double> diag(lat.sites(), 0.0);
    for (int k = 0; k < lat.sites(); ++k) {
        const auto s = lat.unflatten(k);
        double v = 0.0;
        for (const auto& n : p.nuclei) {
            const double r = std::hypot(s.x - n.x, s.y - n.y);
            v -= n.Z * attraction(p, r);
        }
        diag[k] = v;
    }
    return diag;
}

SparseHamiltonian build_single_particle(const LatticeSpec& lat, const ChemParams& p) {
    const auto diag = nuclear_diagonal(lat, p);
    const int K = lat.sites();
    std::vector<Triplet> trips;
    trips.reserve(std::size_t(K) * 5);
    int nbr[4];
    for (int k = 0; k < K; ++k) {
        if (diag[k] != 0.0) trips.push_back({k, k, diag[k]});
        const int cnt = lat.neighbors(k, nbr);
        for (int q = 0; q < cnt; ++q) trips.push_back({k, nbr[q], -p.tF});
    }
    return SparseHamiltonian(K, std::move(trips));
}

int64_t two_fermion_dim(const LatticeSpec& lat) {
    const int64_t K = lat.sites();
    return K * (K - 1) / 2;
}

int64_t pair_index(int64_t i, int64_t j, int64_t K) {
    // row-major upper triangle, i < j
    return i * K - i * (i + 1) / 2 + (j - i - 1);
}

SparseHamiltonian build_two_fermion(const LatticeSpec& lat, const ChemParams& p,
                                    const PairPotential& repulsion, int64_t max_dim) {
    const int64_t K = lat.sites();
    const int64_t dim = two_fermion_dim(lat);
    if (dim > max_dim)
        throw CapacityError("build_two_fermion: pair basis of size " + std::to_string(dim) +
                                " exceeds the configured limit",
                            dim);
    const auto nucdiag = nuclear_diagonal(lat, p);

    std::vector<Triplet> trips;
    trips.reserve(std::size_t(dim) * 9);
    int nbr[4];
    for (int64_t i = 0; i < K; ++i) {
        for (int64_t j = i + 1; j < K; ++j) {
            const int64_t row = pair_index(i, j, K);
            double v = nucdiag[i] + nucdiag[j];
            if (!repulsion.is_none()) v += repulsion(lat.distance(int(i), int(j)));
            if (v != 0.0) trips.push_back({row, row, v});

            // hop fermion at i; sign flips when the moved fermion crosses the other
            const int ci = lat.neighbors(int(i), nbr);
            for (int q = 0; q < ci; ++q) {
                const int64_t ip = nbr[q];
                if (ip == j) continue;  // Pauli blocked
                const int64_t a = std::min(ip, j), b = std::max(ip, j);
                const double sign = ip < j ? 1.0 : -1.0;
                trips.push_back({row, pair_index(a, b, K), -p.tF * sign});
            }
            // hop fermion at j
            const int cj = lat.neighbors(int(j), nbr);
            for (int q = 0; q < cj; ++q) {
                const int64_t jp = nbr[q];
                if (jp == i) continue;
                const int64_t a = std::min(i, jp), b = std::max(i, jp);
                const double sign = jp > i ? 1.0 : -1.0;
                trips.push_back({row, pair_index(a, b, K), -p.tF * sign});
            }
        }
    }
    return SparseHamiltonian(dim, std::move(trips));
}

}  // namespace latchem
