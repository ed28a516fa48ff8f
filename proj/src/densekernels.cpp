#include "symsolve/densekernels.hpp"

#include <Eigen/SVD>
#include <cmath>

namespace symsolve {

namespace {

void check_finite(const DenseMatrix& A, const char* who) {
    if (!A.allFinite())
        throw input_error(std::string(who) + ": matrix has non-finite entries");
}

// Flip column signs so the largest-magnitude entry (first on ties) is > 0.
void fix_column_signs(DenseMatrix& V) {
    for (Eigen::Index j = 0; j < V.cols(); ++j) {
        double best = -1.0;
        Eigen::Index at = 0;
        for (Eigen::Index i = 0; i < V.rows(); ++i) {
            double a = std::abs(V(i, j));
            if (a > best) {
                best = a;
                at = i;
            }
        }
        if (V(at, j) < 0.0)
            V.col(j) = -V.col(j);
    }
}

} // namespace

DenseMatrix svd_nullspace(const DenseMatrix& A, double rel_tol) {
    check_finite(A, "svd_nullspace");
    if (A.rows() == 0 || A.cols() == 0)
        throw input_error("svd_nullspace: empty matrix");

    const Eigen::Index n = A.cols();
    Eigen::JacobiSVD<DenseMatrix> svd(A, Eigen::ComputeFullV);
    const DenseVector& sv = svd.singularValues();
    const double sigma_max = sv.size() > 0 ? sv(0) : 0.0;

    // Columns of V whose singular value is below threshold (including the
    // columns beyond min(m,n), whose singular values are implicitly zero).
    Eigen::Index k = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        double s = j < sv.size() ? sv(j) : 0.0;
        if (s <= rel_tol * sigma_max)
            ++k;
    }
    if (k == 0)
        return DenseMatrix(n, 0);

    DenseMatrix raw(n, k);
    Eigen::Index c = 0;
    for (Eigen::Index j = 0; j < n; ++j) {
        double s = j < sv.size() ? sv(j) : 0.0;
        if (s <= rel_tol * sigma_max)
            raw.col(c++) = svd.matrixV().col(j);
    }

    // Canonicalize: pivoted Gram-Schmidt on the columns of the kernel
    // projector P = raw * raw^T. P is basis independent, so the output only
    // depends on the subspace. Near-ties (1e-9 relative) go to the lowest
    // index, which keeps coordinate-aligned kernels in natural order.
    DenseMatrix P = raw * raw.transpose();
    DenseMatrix N(n, k);
    std::vector<bool> used(static_cast<size_t>(n), false);
    for (Eigen::Index step = 0; step < k; ++step) {
        Eigen::Index pick = -1;
        double best = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (used[static_cast<size_t>(i)])
                continue;
            DenseVector r = P.col(i);
            for (Eigen::Index j = 0; j < step; ++j)
                r -= N.col(j).dot(P.col(i)) * N.col(j);
            double nr = r.norm();
            if (nr > best * (1.0 + 1e-9)) {
                best = nr;
                pick = i;
            }
        }
        if (pick < 0 || best <= 0.0)
            throw degeneracy_error("svd_nullspace: projector basis extraction failed");
        used[static_cast<size_t>(pick)] = true;
        DenseVector q = P.col(pick);
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index j = 0; j < step; ++j)
                q -= N.col(j).dot(q) * N.col(j);
        N.col(step) = q / q.norm();
    }
    fix_column_signs(N);
    return N;
}

EigResult sym_eig(const DenseMatrix& S) {
    check_finite(S, "sym_eig");
    if (S.rows() != S.cols())
        throw input_error("sym_eig: matrix is not square");
    const double scale = S.size() > 0 ? S.cwiseAbs().maxCoeff() : 0.0;
    const double asym = S.size() > 0 ? (S - S.transpose()).cwiseAbs().maxCoeff() : 0.0;
    if (asym > 1e-12 * std::max(scale, 1e-300))
        throw input_error("sym_eig: matrix is not symmetric");

    Eigen::SelfAdjointEigenSolver<DenseMatrix> es(0.5 * (S + S.transpose()));
    if (es.info() != Eigen::Success)
        throw degeneracy_error("sym_eig: eigensolver failed to converge");
    EigResult r{es.eigenvalues(), es.eigenvectors()};
    fix_column_signs(r.eigenvectors);
    return r;
}

DenseMatrix gram_orthonormalize(const DenseMatrix& V) {
    check_finite(V, "gram_orthonormalize");
    if (V.cols() == 0 || V.rows() < V.cols())
        throw input_error("gram_orthonormalize: need 1 <= cols <= rows");

    Eigen::JacobiSVD<DenseMatrix> svd(V);
    const DenseVector& sv = svd.singularValues();
    if (sv(sv.size() - 1) <= 1e-10 * sv(0))
        throw degeneracy_error("gram_orthonormalize: columns are numerically rank deficient");

    DenseMatrix Q = V;
    for (Eigen::Index jcol = 0; jcol < Q.cols(); ++jcol) {
        for (int pass = 0; pass < 2; ++pass)
            for (Eigen::Index j = 0; j < jcol; ++j)
                Q.col(jcol) -= Q.col(j).dot(Q.col(jcol)) * Q.col(j);
        // <q, v> > 0 by construction: q is v minus prior components.
        Q.col(jcol) /= Q.col(jcol).norm();
    }
    return Q;
}

} // namespace symsolve
