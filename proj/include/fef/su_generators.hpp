#pragma once

#include <vector>

#include "fef/linalg.hpp"

namespace fef {

/// Orthogonal Hermitian traceless basis of su(d), Tr(g_i g_j) = 2 delta_ij.
/// Canonical order: the d(d-1)/2 symmetric pair matrices E_kl + E_lk with
/// (k,l) lexicographic, then the matching antisymmetric -i(E_kl - E_lk),
/// then the d-1 diagonal matrices
///   sqrt(2/(l(l+1))) (sum_{k<=l} E_kk - l E_{l+1,l+1}),  l = 1..d-1.
/// For d = 2 this is exactly sigma_x, sigma_y, sigma_z.
struct GeneratorBasis {
    int d = 0;
    std::vector<ComplexMatrix> generators;

    int count() const { return static_cast<int>(generators.size()); }
};

/// Builds the canonical basis above. Throws InvalidDimension for d < 2.
GeneratorBasis build_generator_basis(int d);

/// Largest deviation of sum_j (g_j)_{ki} (g_j)_{mn} from
/// 2 d_im d_kn - (2/d) d_ki d_mn over all index tuples (brute force).
double check_completeness(const GeneratorBasis& basis);

/// Worst-case |Tr(g_i g_j) - 2 delta_ij| over all pairs.
double gram_deviation(const GeneratorBasis& basis);

/// New basis g'_i = sum_j o(i,j) g_j. `o` must be orthogonal
/// (max |o o^T - I| <= 1e-9, else NotOrthogonal) and (d^2-1) square.
GeneratorBasis rotate_basis(const GeneratorBasis& basis, const RealMatrix& o);

}  // namespace fef
