#include "symsolve/polybasis.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace symsolve {

std::vector<ExponentTuple> graded_indices(int d, int n) {
    if (d < 1 || d > 3 || n < 0)
        throw input_error("graded_indices: need 1 <= d <= 3 and n >= 0");
    std::vector<ExponentTuple> out;
    if (d == 1) {
        out.push_back({n});
    } else if (d == 2) {
        for (int e1 = n; e1 >= 0; --e1)
            out.push_back({e1, n - e1});
    } else {
        for (int e1 = n; e1 >= 0; --e1)
            for (int e2 = n - e1; e2 >= 0; --e2)
                out.push_back({e1, e2, n - e1 - e2});
    }
    return out;
}

std::string family_name(BasisFamily f) {
    return f == BasisFamily::Monomial ? "monomial" : "legendre";
}

BasisFamily parse_family(const std::string& name) {
    if (name == "monomial")
        return BasisFamily::Monomial;
    if (name == "legendre" || name == "legendre-orthonormal")
        return BasisFamily::LegendreOrthonormal;
    throw input_error("unknown basis family: " + name);
}

int GradedBasis::size() const {
    return offsets.back() + static_cast<int>(slices.back().size());
}

GradedBasis make_graded_basis(BasisFamily family, int dim, int max_degree) {
    GradedBasis B;
    B.family = family;
    B.dim = dim;
    B.max_degree = max_degree;
    int off = 0;
    for (int n = 0; n <= max_degree; ++n) {
        B.offsets.push_back(off);
        B.slices.push_back(graded_indices(dim, n));
        off += static_cast<int>(B.slices.back().size());
    }
    return B;
}

void legendre_eval(int K, double x, std::vector<double>& val, std::vector<double>& der) {
    val.assign(K + 1, 0.0);
    der.assign(K + 1, 0.0);
    // three-term recurrence for P_k, then P'_{k} = P'_{k-2} + (2k-1) P_{k-1}
    std::vector<double> P(K + 1), D(K + 1);
    P[0] = 1.0;
    D[0] = 0.0;
    if (K >= 1) {
        P[1] = x;
        D[1] = 1.0;
    }
    for (int k = 2; k <= K; ++k) {
        P[k] = ((2.0 * k - 1.0) * x * P[k - 1] - (k - 1.0) * P[k - 2]) / k;
        D[k] = D[k - 2] + (2.0 * k - 1.0) * P[k - 1];
    }
    for (int k = 0; k <= K; ++k) {
        double c = std::sqrt((2.0 * k + 1.0) / 2.0);
        val[k] = c * P[k];
        der[k] = c * D[k];
    }
}

namespace {

// per-coordinate 1-D tables for one evaluation point
struct PointTables {
    std::vector<std::vector<double>> val, der; // [coordinate][order]
};

PointTables make_tables(const GradedBasis& B, const Point& x) {
    PointTables t;
    t.val.resize(B.dim);
    t.der.resize(B.dim);
    for (int j = 0; j < B.dim; ++j) {
        if (B.family == BasisFamily::LegendreOrthonormal) {
            legendre_eval(B.max_degree, x[j], t.val[j], t.der[j]);
        } else {
            t.val[j].assign(B.max_degree + 1, 1.0);
            t.der[j].assign(B.max_degree + 1, 0.0);
            for (int k = 1; k <= B.max_degree; ++k) {
                t.val[j][k] = t.val[j][k - 1] * x[j];
                t.der[j][k] = k * t.val[j][k - 1];
            }
        }
    }
    return t;
}

} // namespace

DenseVector eval_basis(const GradedBasis& B, const Point& x) {
    PointTables t = make_tables(B, x);
    DenseVector out(B.size());
    int i = 0;
    for (const auto& slice : B.slices)
        for (const auto& e : slice) {
            double v = 1.0;
            for (int j = 0; j < B.dim; ++j)
                v *= t.val[j][e[j]];
            out(i++) = v;
        }
    return out;
}

DenseMatrix eval_basis_grad(const GradedBasis& B, const Point& x) {
    PointTables t = make_tables(B, x);
    DenseMatrix out(B.size(), B.dim);
    int i = 0;
    for (const auto& slice : B.slices)
        for (const auto& e : slice) {
            for (int j = 0; j < B.dim; ++j) {
                double v = 1.0;
                for (int k = 0; k < B.dim; ++k)
                    v *= k == j ? t.der[k][e[k]] : t.val[k][e[k]];
                out(i, j) = v;
            }
            ++i;
        }
    return out;
}

DegreeRep degree_rep(const FiniteGroup& G, int degree) {
    DegreeRep rep;
    rep.dim = G.dim;
    rep.degree = degree;
    rep.tuples = graded_indices(G.dim, degree);

    std::map<ExponentTuple, int> where;
    for (int i = 0; i < static_cast<int>(rep.tuples.size()); ++i)
        where[rep.tuples[i]] = i;

    for (const auto& g : G.generators) {
        const int m = static_cast<int>(rep.tuples.size());
        SignedPermutation img;
        img.perm.assign(m, -1);
        img.signs.assign(m, 0);
        for (int i = 0; i < m; ++i) {
            // substitute x -> g x in the i-th monomial: exponents permute,
            // the sign is the product of coordinate signs to odd powers
            const ExponentTuple& e = rep.tuples[i];
            ExponentTuple ep(G.dim);
            int sign = 1;
            for (int j = 0; j < G.dim; ++j) {
                ep[j] = e[g.perm[j]];
                if (g.signs[j] < 0 && ep[j] % 2 == 1)
                    sign = -sign;
            }
            int target = where.at(ep);
            img.perm[target] = i;
            img.signs[target] = sign;
        }
        rep.generator_images.push_back(std::move(img));
    }
    return rep;
}

SignedPermutation degree_rep_image(const DegreeRep& rep, const FiniteGroup& G, int element_index) {
    if (element_index < 0 || element_index >= G.order())
        throw input_error("degree_rep_image: element index out of range");
    SignedPermutation m = SignedPermutation::identity(static_cast<int>(rep.tuples.size()));
    for (int gi : G.words[element_index])
        m = multiply(m, rep.generator_images[gi]);
    return m;
}

} // namespace symsolve
