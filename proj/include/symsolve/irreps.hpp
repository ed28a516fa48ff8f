#pragma once

#include <string>
#include <vector>

#include "symsolve/groups.hpp"

namespace symsolve {

// Identifies one entry of a group's irrep catalogue.
//   Z2^d      : pattern of per-coordinate parities (0 even, 1 odd)
//   D4        : named scalar irreps plus the 2-d faithful one
//   S3, S4    : integer partition of 3 / 4
//   S3xZ2, Oh : partition plus negation parity (+1 tensor-trivial "t",
//               -1 tensor-sign "s")
struct IrrepLabel {
    GroupKind group;
    std::vector<int> pattern;
    std::vector<int> partition;
    int negation = 0; // +1 = t, -1 = s, 0 = not a product label
    int d4 = -1;      // index into {trivial, reflect, rotate, sign, faithful}

    std::string text() const;
    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
};

struct Irrep {
    IrrepLabel label;
    int dim = 0;
    std::vector<DenseMatrix> generator_images; // one per group generator
    std::vector<DenseMatrix> element_images;   // one per group element, cached
};

// Number of conjugacy classes (= number of real irreps for these groups).
int irrep_count(GroupKind kind);

// The full catalogue in a fixed documented order:
//   Z2^d : patterns by (number of odd coordinates, first-odd position)
//   D4   : trivial, reflect, rotate, sign, faithful
//   S3   : 3, 2+1, 1+1+1
//   S4   : 1+1+1+1, 2+1+1, 2+2, 3+1, 4
//   products: partition-major, t before s
// Matrix entries are the closed forms of Young's orthogonal representation.
// Element images are cached as generator-image products along stored words.
std::vector<Irrep> canonical_irreps(const FiniteGroup& G);

// Image of one element (by index into G.elements).
const DenseMatrix& irrep_image(const Irrep& irrep, const FiniteGroup& G, int element_index);

// Exhaustive homomorphism check: image(a) image(b) = image(ab) for all pairs,
// to 1e-12, plus orthogonality of every image.
bool verify_irrep(const Irrep& irrep, const FiniteGroup& G);

enum class PhysicsClass { BosonEven, BosonOdd, FermionEven, FermionOdd, Other };

std::string physics_class_name(PhysicsClass c);

// Bosonic = symmetric under particle exchange (partition 3), fermionic =
// antisymmetric (partition 1+1+1); even/odd is the negation parity.
// Only defined for S3xZ2 labels.
PhysicsClass classify_physics(const IrrepLabel& label);

} // namespace symsolve
