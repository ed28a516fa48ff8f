#pragma once

#include <string>

#include "symsolve/repdecomp.hpp"

namespace symsolve {

// m-point Gauss-Legendre rule on [-1,1], exact for degree <= 2m-1.
struct QuadratureRule1D {
    DenseVector nodes;   // ascending
    DenseVector weights; // positive, sum 2
};

QuadratureRule1D gauss_legendre(int m);

// Tensor product rule on [-1,1]^dim, lexicographic point order.
struct TensorRule {
    std::vector<Point> points;
    DenseVector weights;
};

TensorRule tensor_rule(int dim, int m);

// Polynomial potential a(x) = sum_t coef_t * x^exps_t.
struct PotentialTerm {
    ExponentTuple exps;
    double coef = 0.0;
};

struct Potential {
    int dim = 0;
    std::vector<PotentialTerm> terms;

    int degree() const; // max total degree, 0 if empty
    double eval(const Point& x) const;
};

// Presets: "zero" (any dim), "sq-harmonic" (x^2+y^2, dim 2),
// "cube-harmonic" (x^2+y^2+z^2, dim 3), "cube-pairwise"
// ((x-y)^2+(y-z)^2+(x-z)^2 expanded, dim 3).
Potential potential_preset(const std::string& name, int dim);

// {"dim": d, "terms": [{"exps": [..], "coef": c}, ...]}
Potential potential_from_json(const std::string& path);

// Preset name or path to a JSON file; the dimension must match.
Potential parse_potential(const std::string& spec, int dim);

// Exact check of a(g x) = a(x) for every group element: exponents transform
// by the coordinate permutation, coefficients pick up the product of signs to
// odd powers, and the collected coefficient maps must match exactly.
bool check_invariance(const Potential& a, const FiniteGroup& G);

// Weak-form Galerkin matrices for -div(grad u) + a u on [-1,1]^d with
// natural (Neumann) boundary conditions, in the symmetry-adapted basis:
//   gram_ij  = <q_i, q_j>,  mass_ij = <q_i, a q_j>,
//   stiff_ij = <grad q_i, grad q_j>.
struct OperatorMatrices {
    DenseMatrix gram, mass, stiffness;
};

// Raw-family matrices (graded basis order), quadrature with
// m = N + ceil(deg(a)/2) + 1 points per dimension, which integrates every
// entry exactly.
OperatorMatrices assemble_raw(const GradedBasis& B, const Potential& a);

// Raw assembly conjugated into the adapted basis by blockdiag(Q_n) and
// symmetrized. Throws structure_error naming a violating group element if the
// potential is not invariant.
OperatorMatrices assemble(const AdaptedBasis& B, const Potential& a);

} // namespace symsolve
