#pragma once

#include "symsolve/irreps.hpp"
#include "symsolve/polybasis.hpp"

namespace symsolve {

// Basis of the intertwiner space Hom_G(rho_k, rho) for one degree slice:
// matrices U with rho(g) U = U rho_k(g). The copies are jointly orthonormal
// (trace Gram identity), so stacking their columns extends to an orthogonal
// change of basis.
struct IsotypicComponent {
    int irrep_index = -1;
    int multiplicity = 0;
    std::vector<DenseMatrix> copies; // each n x d_k
};

// Nullspace construction: stack vec(rho(g) U - U rho_k(g)) over all
// generators, take the SVD nullspace, reshape each kernel vector to an n x d_k
// intertwiner, then mix the copies through the Cholesky factor of their
// scalar Gram matrix G_ij = trace(U_i^T U_j)/d_k so that U_i^T U_j = delta_ij I.
// Schur's lemma makes every U_i^T U_j a scalar matrix; a deviation beyond 1e-8
// means rho or the irrep is corrupted and raises structure_error.
IsotypicComponent intertwiner_basis(const DegreeRep& rho, const Irrep& irrep, int irrep_index = -1,
                                    double rel_tol = 1e-10);

struct AdaptedColumn {
    int degree = -1;
    int irrep = -1; // catalogue index
    int copy = -1;
    int component = -1;
};

struct DegreeDecomposition {
    DenseMatrix Q;                     // orthogonal, n x n
    std::vector<int> multiplicities;   // per catalogue irrep
    std::vector<AdaptedColumn> layout; // per column of Q
};

// Full reduction of one degree slice: columns grouped irrep-major in
// catalogue order, copies in nullspace order, components in canonical order.
// Q^T rho(g) Q is then block diagonal with canonical irrep blocks.
// Throws structure_error if the multiplicities do not exhaust the slice.
DegreeDecomposition decompose(const DegreeRep& rho, const std::vector<Irrep>& catalogue);

// Symmetry-adapted polynomial basis q_n = Q_n^T p_n for all degrees 0..N.
struct AdaptedBasis {
    FiniteGroup group;
    std::vector<Irrep> catalogue;
    GradedBasis basis;
    std::vector<DenseMatrix> Q;        // per degree
    std::vector<AdaptedColumn> layout; // all degrees, degree-major

    int size() const { return static_cast<int>(layout.size()); }
    // apply blockdiag(Q_n) / its transpose to coefficient vectors
    DenseVector to_raw(const DenseVector& adapted) const;
    DenseVector from_raw(const DenseVector& raw) const;
    DenseVector eval_adapted(const Point& x) const;
};

AdaptedBasis build_adapted_basis(const FiniteGroup& G, BasisFamily family, int max_degree);

// Hand-derived D4 combination matrix for one degree of the square basis
// (monomials x^{n-j} y^j). Even n: sums/differences of monomial pairs at
// offsets 2k from the ends, weight 1/sqrt(2) (single middle monomials weight
// 1); odd n: the (n+1)/2 faithful pairs (x^{n-2k} y^{2k}, x^{2k} y^{n-2k}).
// Layout indices refer to the canonical D4 catalogue.
std::pair<DenseMatrix, std::vector<AdaptedColumn>> closed_form_d4_basis(int n);

} // namespace symsolve
