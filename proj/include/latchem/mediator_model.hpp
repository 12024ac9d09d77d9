#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "latchem/lattice.hpp"
#include "latchem/sparse.hpp"

namespace latchem {

struct MediatorParamsI {
    double ta = 1.0;
    double U = 1.0;
};

struct MediatorParamsII {
    double ta = 1.0;
    double tb = 0.0;
    double g = 0.0;
    double Delta = 0.0;
    double U = 0.0;
    double W = std::numeric_limits<double>::infinity();  // hard core; enforced exactly
};

// Soft regime diagnostics (warn, don't fail): g << Delta-scale coupling,
// tunneling ordering tF << tb << ta, and |W| >> |U|.
struct RegimeFlags {
    bool weak_coupling = true;
    bool tunneling_order = true;
    bool hard_core = true;
};
RegimeFlags check_regime(const MediatorParamsII& p, double tF = 0.0);

// Single boson hopping at -ta with on-site repulsion +U at static fermion
// positions (Born-Oppenheimer). N^2 x N^2 over boson positions.
SparseHamiltonian build_mediator_I(const LatticeSpec& lat, const MediatorParamsI& p,
                                   const std::vector<int>& fermion_sites);

// Enumerated basis for 2 or 3 mediating atoms bound to fermions at fixed
// sites: level-b occupation restricted to the fermion sites, no double b
// occupation, a-atoms anywhere (bosonic multisets). Sectors are labelled by
// (N_b, N_a); the N_a = 3 sector of the three-atom catalog is omitted when
// max_Na = 2.
class BasisCatalog {
public:
    BasisCatalog(const LatticeSpec& lat, std::vector<int> fermion_sites, int max_Na);

    const LatticeSpec& lattice() const { return lat_; }
    const std::vector<int>& fermions() const { return fermions_; }
    int n_mediators() const { return int(fermions_.size()); }
    int max_Na() const { return max_Na_; }
    int64_t dim() const { return dim_; }
    std::string description() const;

    struct Sector {
        int Nb = 0;
        int Na = 0;
        int blocks = 1;       // distinct b-placements sharing this (Nb, Na)
        int64_t block_size = 0;
        int64_t offset = 0;
        int64_t size() const { return blocks * block_size; }
    };
    const std::vector<Sector>& sectors() const { return sectors_; }

    // Packed symmetric-pair index over m <= n, m,n in [0, K).
    int64_t tri_index(int64_t m, int64_t n) const;
    // Packed symmetric-trio index over m <= n <= p.
    int64_t trio_index(int64_t m, int64_t n, int64_t p) const;

    int64_t s0_index() const;
    int64_t s1_index(int block, int64_t m) const;
    int64_t s2_index(int block, int64_t m, int64_t n) const;  // sorts m,n
    int64_t s3_index(int64_t m, int64_t n, int64_t p) const;  // sorts

    // States coupled by g(b_u^dag a_u + h.c.) at fermion site index fu, the
    // hyperbolic-rotation blocks of the coupling exponential. fac carries the
    // bosonic enhancement sqrt(n_a + 1).
    struct CouplingPair {
        int64_t lo, hi;
        double fac;
    };
    const std::vector<std::vector<CouplingPair>>& coupling_pairs() const { return pairs_; }

    // Truncated catalogs only: states whose coupling partner fell outside the
    // basis (N_a would exceed max_Na); the stepper damps these by cosh.
    struct BoundaryState {
        int64_t idx;
        double fac;
    };
    const std::vector<std::vector<BoundaryState>>& coupling_boundary() const {
        return boundary_;
    }

    // Position-diagonal energy of a state (sector-wise constant): U N_b + Delta N_a.
    double sector_diag(const Sector& s, const MediatorParamsII& p) const {
        return p.U * s.Nb + p.Delta * s.Na;
    }

private:
    LatticeSpec lat_;
    std::vector<int> fermions_;
    int max_Na_ = 2;
    int64_t K_ = 0;
    int64_t dim_ = 0;
    std::vector<Sector> sectors_;
    std::vector<int64_t> tri_base_;   // tri_index row offsets
    std::vector<int64_t> trio_base_;  // trio_index row offsets
    std::vector<std::vector<CouplingPair>> pairs_;
    std::vector<std::vector<BoundaryState>> boundary_;

    void build_pairs();
};

// Term-split two-level mediator Hamiltonian over a BasisCatalog:
// position-diagonal (Delta per a-atom, U per b on its fermion site), a-hopping,
// b-hopping (between adjacent fermion sites, usually 0), and the g-coupling.
// The split mirrors what the imaginary-time stepper needs.
struct MediatorIITerms {
    const BasisCatalog* catalog = nullptr;
    MediatorParamsII params;

    std::vector<double> diagonal() const;  // dense diagonal, sector-piecewise constant
    void append_ahop(std::vector<Triplet>& out) const;
    void append_bhop(std::vector<Triplet>& out) const;
    void append_coupling(std::vector<Triplet>& out) const;

    // Full Hamiltonian as one sparse matrix (small catalogs / ED cross-checks).
    SparseHamiltonian assemble() const;

    // Matrix-free application, y = H x.
    void matvec(const Complex* x, Complex* y) const;
    void matvec(const double* x, double* y) const;
};

MediatorIITerms build_mediator_II(const BasisCatalog& catalog, const MediatorParamsII& p);

}  // namespace latchem
