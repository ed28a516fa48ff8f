#pragma once

#include <array>
#include <string>
#include <vector>

#include "symsolve/densekernels.hpp"

namespace symsolve {

// Orthogonal signed permutation matrix, stored exactly: column j has its
// single nonzero entry signs[j] (= +-1) in row perm[j].
struct SignedPermutation {
    std::vector<int> perm;
    std::vector<int> signs;

    int dim() const { return static_cast<int>(perm.size()); }
    static SignedPermutation identity(int d);
    bool is_identity() const;
    SignedPermutation inverse() const;
    int det() const; // permutation parity times product of signs
    DenseMatrix to_matrix() const;

    // y = M x, exactly: y[perm[j]] = signs[j] * x[j]
    template <typename Vec>
    Vec apply(const Vec& x) const {
        Vec y = x;
        for (int j = 0; j < dim(); ++j)
            y[perm[j]] = signs[j] * x[j];
        return y;
    }

    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
    // lexicographic on (perm, signs); fixes the canonical element order
    friend bool operator<(const SignedPermutation& a, const SignedPermutation& b) {
        if (a.perm != b.perm)
            return a.perm < b.perm;
        return a.signs < b.signs;
    }
};

SignedPermutation multiply(const SignedPermutation& a, const SignedPermutation& b);

enum class GroupKind { Z2, Z2xZ2, Z2pow3, D4, S3, S3xZ2, S4, Oh };

std::string group_name(GroupKind kind);
GroupKind parse_group(const std::string& name); // throws input_error on unknown names

// Factorization of an element of a product group G x Z2 with Z2 = {+-I}:
// coordinate/diagonal permutation part plus a negation bit. Only filled for
// S3xZ2 (coordinate permutation) and Oh (permutation of the 4 cube diagonals).
struct ProductFactor {
    std::vector<int> perm; // 3 entries (S3xZ2) or 4 entries (Oh diagonals)
    int negation = 1;      // +1: no negation, -1: composed with -I
};

struct FiniteGroup {
    GroupKind kind;
    int dim = 0;
    std::vector<SignedPermutation> generators;
    // Closure of the generators, sorted lexicographically on (perm, signs) so
    // element indices are stable across runs.
    std::vector<SignedPermutation> elements;
    // Shortest realising word per element (generator indices, product left to
    // right); found by breadth-first closure.
    std::vector<std::vector<int>> words;
    std::vector<ProductFactor> factors; // empty unless kind is S3xZ2 or Oh

    int order() const { return static_cast<int>(elements.size()); }
    int index_of(const SignedPermutation& g) const; // -1 if absent
    int identity_index() const;
};

FiniteGroup make_group(GroupKind kind);

// Exact verification of the defining presentation: generator orders, braid /
// commutation relations, and for Oh additionally that each tau_k swaps cube
// diagonals d_k and d_{k+1} (as lines) and fixes the other two.
bool check_relations(const FiniteGroup& G);

} // namespace symsolve
