#pragma once

#include <array>
#include <vector>

#include "symsolve/groups.hpp"

namespace symsolve {

using ExponentTuple = std::vector<int>;
using Point = std::array<double, 3>; // entries beyond the spatial dim are ignored

// All exponent tuples of total degree n in d variables, in decreasing
// lexicographic order: (n,0,..), (n-1,1,..), ... This matches the printed
// orderings x^n, x^{n-1}y, ..., y^n on the square and the lexicographic cube
// ordering x^2, xy, xz, y^2, yz, z^2.
std::vector<ExponentTuple> graded_indices(int d, int n);

enum class BasisFamily { Monomial, LegendreOrthonormal };

std::string family_name(BasisFamily f);
BasisFamily parse_family(const std::string& name);

// Tensor products of either plain monomials x^k or L2([-1,1])-orthonormal
// Legendre polynomials, collected degree by degree (degrees 0..max_degree).
struct GradedBasis {
    BasisFamily family = BasisFamily::LegendreOrthonormal;
    int dim = 0;
    int max_degree = 0;
    std::vector<std::vector<ExponentTuple>> slices; // per degree
    std::vector<int> offsets;                       // flat offset per degree

    int size() const;
    int slice_size(int degree) const { return static_cast<int>(slices[degree].size()); }
};

GradedBasis make_graded_basis(BasisFamily family, int dim, int max_degree);

// Values of all basis functions at a point, degree-major.
DenseVector eval_basis(const GradedBasis& B, const Point& x);

// Gradient rows: result(i, j) = d(basis_i)/dx_j at x.
DenseMatrix eval_basis_grad(const GradedBasis& B, const Point& x);

// Normalized Legendre values and derivatives P~_0..P~_K at one coordinate.
void legendre_eval(int K, double x, std::vector<double>& val, std::vector<double>& der);

// Action of the group on a degree-n slice: p_n(g x) = rho_n(g) p_n(x).
// Exact signed permutations, identical for both basis families (Legendre
// polynomials have the parity of their degree).
struct DegreeRep {
    int dim = 0;
    int degree = 0;
    std::vector<ExponentTuple> tuples;
    std::vector<SignedPermutation> generator_images;
};

DegreeRep degree_rep(const FiniteGroup& G, int degree);

// Image of an arbitrary element, as the exact word product of generator images.
SignedPermutation degree_rep_image(const DegreeRep& rep, const FiniteGroup& G, int element_index);

} // namespace symsolve
