#include "symsolve/repdecomp.hpp"

#include <Eigen/Cholesky>
#include <cmath>

namespace symsolve {

IsotypicComponent intertwiner_basis(const DegreeRep& rho, const Irrep& irrep, int irrep_index,
                                    double rel_tol) {
    const int n = static_cast<int>(rho.tuples.size());
    const int d = irrep.dim;
    const int ngen = static_cast<int>(rho.generator_images.size());
    if (ngen != static_cast<int>(irrep.generator_images.size()))
        throw input_error("intertwiner_basis: generator count mismatch");

    // vec(rho(g) U - U rho_k(g)) = (I (x) rho(g) - rho_k(g)^T (x) I) vec(U),
    // stacked generator-major.
    DenseMatrix K(ngen * n * d, n * d);
    for (int gi = 0; gi < ngen; ++gi) {
        DenseMatrix M = rho.generator_images[gi].to_matrix();
        const DenseMatrix& R = irrep.generator_images[gi];
        DenseMatrix block = DenseMatrix::Zero(n * d, n * d);
        for (int c = 0; c < d; ++c)
            block.block(c * n, c * n, n, n) = M;
        for (int c = 0; c < d; ++c)
            for (int c2 = 0; c2 < d; ++c2)
                block.block(c * n, c2 * n, n, n) -=
                    R(c2, c) * DenseMatrix::Identity(n, n); // rho_k(g)^T (x) I
        K.block(gi * n * d, 0, n * d, n * d) = block;
    }

    DenseMatrix N = svd_nullspace(K, rel_tol);
    const int a = static_cast<int>(N.cols());

    IsotypicComponent comp;
    comp.irrep_index = irrep_index;
    comp.multiplicity = a;
    if (a == 0)
        return comp;

    std::vector<DenseMatrix> U(a);
    for (int j = 0; j < a; ++j)
        U[j] = Eigen::Map<const DenseMatrix>(N.col(j).data(), n, d);

    // Scalar Gram: by Schur U_i^T U_j = c_ij I. Verify and collect c_ij.
    DenseMatrix G(a, a);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < a; ++j) {
            DenseMatrix C = U[i].transpose() * U[j];
            double c = C.trace() / d;
            if ((C - c * DenseMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-8)
                throw structure_error(
                    "intertwiner_basis: copy Gram matrix is not scalar (Schur violation)");
            G(i, j) = c;
        }

    // Mix copies by the inverse transposed Cholesky factor so the scalar Gram
    // becomes the identity; lower-triangular L keeps copy 1 parallel to U[0].
    Eigen::LLT<DenseMatrix> llt(0.5 * (G + G.transpose()));
    if (llt.info() != Eigen::Success)
        throw degeneracy_error("intertwiner_basis: copy Gram matrix not positive definite");
    DenseMatrix Linv = llt.matrixL().solve(DenseMatrix::Identity(a, a));
    comp.copies.assign(a, DenseMatrix::Zero(n, d));
    for (int j = 0; j < a; ++j)
        for (int m = 0; m <= j; ++m)
            comp.copies[j] += Linv(j, m) * U[m]; // [U~] = [U] L^{-T}
    return comp;
}

DegreeDecomposition decompose(const DegreeRep& rho, const std::vector<Irrep>& catalogue) {
    const int n = static_cast<int>(rho.tuples.size());
    DegreeDecomposition dec;
    dec.Q.resize(n, n);
    dec.multiplicities.assign(catalogue.size(), 0);

    int col = 0;
    for (int k = 0; k < static_cast<int>(catalogue.size()); ++k) {
        IsotypicComponent comp = intertwiner_basis(rho, catalogue[k], k);
        dec.multiplicities[k] = comp.multiplicity;
        for (int j = 0; j < comp.multiplicity; ++j)
            for (int c = 0; c < catalogue[k].dim; ++c) {
                if (col >= n)
                    throw structure_error("decompose: multiplicities exceed slice dimension");
                dec.Q.col(col) = comp.copies[j].col(c);
                dec.layout.push_back({rho.degree, k, j, c});
                ++col;
            }
    }
    if (col != n)
        throw structure_error("decompose: catalogue does not exhaust the slice (dim mismatch)");
    return dec;
}

DenseVector AdaptedBasis::to_raw(const DenseVector& adapted) const {
    DenseVector raw(adapted.size());
    for (int n = 0; n <= basis.max_degree; ++n) {
        int off = basis.offsets[n], s = basis.slice_size(n);
        raw.segment(off, s) = Q[n] * adapted.segment(off, s);
    }
    return raw;
}

DenseVector AdaptedBasis::from_raw(const DenseVector& raw) const {
    DenseVector adapted(raw.size());
    for (int n = 0; n <= basis.max_degree; ++n) {
        int off = basis.offsets[n], s = basis.slice_size(n);
        adapted.segment(off, s) = Q[n].transpose() * raw.segment(off, s);
    }
    return adapted;
}

DenseVector AdaptedBasis::eval_adapted(const Point& x) const {
    return from_raw(eval_basis(basis, x));
}

AdaptedBasis build_adapted_basis(const FiniteGroup& G, BasisFamily family, int max_degree) {
    AdaptedBasis B;
    B.group = G;
    B.catalogue = canonical_irreps(G);
    B.basis = make_graded_basis(family, G.dim, max_degree);
    for (int n = 0; n <= max_degree; ++n) {
        DegreeDecomposition dec = decompose(degree_rep(G, n), B.catalogue);
        B.Q.push_back(std::move(dec.Q));
        B.layout.insert(B.layout.end(), dec.layout.begin(), dec.layout.end());
    }
    return B;
}

std::pair<DenseMatrix, std::vector<AdaptedColumn>> closed_form_d4_basis(int n) {
    if (n < 0)
        throw input_error("closed_form_d4_basis: negative degree");
    const int m = n + 1;
    const double r = 1.0 / std::sqrt(2.0);
    DenseMatrix Q = DenseMatrix::Zero(m, m);
    std::vector<AdaptedColumn> layout;
    int col = 0;

    // monomial x^{n-j} y^j sits in row j
    auto pair_column = [&](int rowA, int rowB, double sgn, int irrep, int copy) {
        if (rowA == rowB) {
            Q(rowA, col) = 1.0;
        } else {
            Q(rowA, col) = r;
            Q(rowB, col) = sgn * r;
        }
        layout.push_back({n, irrep, copy, 0});
        ++col;
    };

    if (n % 2 == 0) {
        const int alpha = n / 4, beta = n >= 2 ? (n - 2) / 4 : -1;
        int copy = 0;
        for (int k = alpha; k >= 0; --k) // trivial: x^{n-2k}y^{2k} + x^{2k}y^{n-2k}
            pair_column(2 * k, n - 2 * k, +1.0, 0, copy++);
        for (int k = 0; k <= beta; ++k) // reflect: even differences
            pair_column(2 * k, n - 2 * k, -1.0, 1, k);
        for (int k = 0; k <= alpha - 1; ++k) // rotate: odd differences
            pair_column(2 * k + 1, n - 1 - 2 * k, -1.0, 2, k);
        for (int k = 0; k <= beta; ++k) // sign: odd sums
            pair_column(2 * k + 1, n - 1 - 2 * k, +1.0, 3, k);
    } else {
        for (int k = 0; k <= (n - 1) / 2; ++k) { // faithful pairs
            Q(2 * k, col) = 1.0;
            layout.push_back({n, 4, k, 0});
            ++col;
            Q(n - 2 * k, col) = 1.0;
            layout.push_back({n, 4, k, 1});
            ++col;
        }
    }
    if (col != m)
        throw structure_error("closed_form_d4_basis: column count mismatch");
    return {Q, layout};
}

} // namespace symsolve
