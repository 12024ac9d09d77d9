#pragma once

#include <cstdint>
#include <vector>

#include "latchem/lattice.hpp"
#include "latchem/sparse.hpp"

namespace latchem {

// Attractive center. The y coordinate must sit exactly half a lattice spacing
// off the nodes, which keeps every node distance positive (the model's only
// regularization of V(r) = V0/r).
struct NucleusSpec {
    double x = 0.0;
    double y = 0.0;
    int Z = 1;
};

enum class PotentialForm { coulomb2d, exponential };

struct ChemParams {
    double tF = 1.0;
    double V0 = 1.0;
    std::vector<NucleusSpec> nuclei;
    PotentialForm form = PotentialForm::coulomb2d;
    double decay_length = 1.0;  // L for the exponential form

    double bohr_radius() const { return tF / V0; }   // a0 / a
    double rydberg() const { return V0 * V0 / tF; }  // Ry
};

// Pairwise repulsion law V(r) for the two-fermion model. The tabulated kind
// interpolates linearly between integer-distance samples (as produced by the
// mediator curves) and refuses to extrapolate.
class PairPotential {
public:
    static PairPotential none();
    static PairPotential coulomb(double strength);
    static PairPotential exponential(double strength, double decay_length);
    static PairPotential tabulated(std::vector<double> d, std::vector<double> v);

    double operator()(double r) const;
    bool is_none() const { return kind_ == Kind::none; }

private:
    enum class Kind { none, coulomb, exponential, tabulated };
    Kind kind_ = Kind::none;
    double strength_ = 0.0;
    double decay_ = 1.0;
    std::vector<double> table_d_, table_v_;
};

// Nuclear potential on the diagonal: -sum_n Z_n V(|j - r_n|) at node j.
std::vector<double> nuclear_diagonal(const LatticeSpec& lat, const ChemParams& p);

// Single fermion: nearest-neighbor hopping -tF plus the nuclear diagonal.
SparseHamiltonian build_single_particle(const LatticeSpec& lat, const ChemParams& p);

// Two spinless fermions over ordered site pairs i < j (dimension K(K-1)/2,
// K = N^2), with kinetic terms for both, nuclear attraction on both, and the
// pairwise repulsion V(|i-j|) on the diagonal. The ordered-pair convention
// carries the fermionic sign.
SparseHamiltonian build_two_fermion(const LatticeSpec& lat, const ChemParams& p,
                                    const PairPotential& repulsion,
                                    int64_t max_dim = 4'000'000);

int64_t two_fermion_dim(const LatticeSpec& lat);
int64_t pair_index(int64_t i, int64_t j, int64_t K);  // i < j, row-major triangle

}  // namespace latchem
