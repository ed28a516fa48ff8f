#include "symsolve/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace symsolve {

SignedPermutation SignedPermutation::identity(int d) {
    SignedPermutation p;
    p.perm.resize(d);
    std::iota(p.perm.begin(), p.perm.end(), 0);
    p.signs.assign(d, 1);
    return p;
}

bool SignedPermutation::is_identity() const {
    for (int j = 0; j < dim(); ++j)
        if (perm[j] != j || signs[j] != 1)
            return false;
    return true;
}

SignedPermutation SignedPermutation::inverse() const {
    SignedPermutation r;
    r.perm.resize(perm.size());
    r.signs.resize(perm.size());
    for (int j = 0; j < dim(); ++j) {
        r.perm[perm[j]] = j;
        r.signs[perm[j]] = signs[j];
    }
    return r;
}

int SignedPermutation::det() const {
    // permutation parity by cycle counting
    int d = dim();
    std::vector<bool> seen(d, false);
    int parity = 1;
    for (int j = 0; j < d; ++j) {
        if (seen[j])
            continue;
        int len = 0;
        for (int k = j; !seen[k]; k = perm[k]) {
            seen[k] = true;
            ++len;
        }
        if (len % 2 == 0)
            parity = -parity;
    }
    for (int s : signs)
        parity *= s;
    return parity;
}

DenseMatrix SignedPermutation::to_matrix() const {
    DenseMatrix M = DenseMatrix::Zero(dim(), dim());
    for (int j = 0; j < dim(); ++j)
        M(perm[j], j) = signs[j];
    return M;
}

SignedPermutation multiply(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.dim() != b.dim())
        throw input_error("multiply: dimension mismatch");
    SignedPermutation r;
    int d = a.dim();
    r.perm.resize(d);
    r.signs.resize(d);
    for (int j = 0; j < d; ++j) {
        r.perm[j] = a.perm[b.perm[j]];
        r.signs[j] = b.signs[j] * a.signs[b.perm[j]];
    }
    return r;
}

std::string group_name(GroupKind kind) {
    switch (kind) {
    case GroupKind::Z2: return "z2";
    case GroupKind::Z2xZ2: return "z2xz2";
    case GroupKind::Z2pow3: return "z2pow3";
    case GroupKind::D4: return "d4";
    case GroupKind::S3: return "s3";
    case GroupKind::S3xZ2: return "s3xz2";
    case GroupKind::S4: return "s4";
    case GroupKind::Oh: return "oh";
    }
    return "?";
}

GroupKind parse_group(const std::string& name) {
    for (GroupKind k : {GroupKind::Z2, GroupKind::Z2xZ2, GroupKind::Z2pow3, GroupKind::D4,
                        GroupKind::S3, GroupKind::S3xZ2, GroupKind::S4, GroupKind::Oh})
        if (group_name(k) == name)
            return k;
    throw input_error("unknown group kind: " + name);
}

namespace {

SignedPermutation reflection(int d, int axis) {
    SignedPermutation p = SignedPermutation::identity(d);
    p.signs[axis] = -1;
    return p;
}

SignedPermutation transposition(int d, int i, int j) {
    SignedPermutation p = SignedPermutation::identity(d);
    std::swap(p.perm[i], p.perm[j]);
    return p;
}

SignedPermutation negation(int d) {
    SignedPermutation p = SignedPermutation::identity(d);
    p.signs.assign(d, -1);
    return p;
}

std::vector<SignedPermutation> generators_for(GroupKind kind, int& dim) {
    switch (kind) {
    case GroupKind::Z2:
        dim = 1;
        return {reflection(1, 0)};
    case GroupKind::Z2xZ2:
        dim = 2;
        return {reflection(2, 0), reflection(2, 1)};
    case GroupKind::Z2pow3:
        dim = 3;
        return {reflection(3, 0), reflection(3, 1), reflection(3, 2)};
    case GroupKind::D4: {
        dim = 2;
        SignedPermutation s = reflection(2, 1); // diag(1,-1)
        SignedPermutation r;                    // 90-degree rotation [[0,-1],[1,0]]
        r.perm = {1, 0};
        r.signs = {1, -1};
        return {s, r};
    }
    case GroupKind::S3:
        dim = 3;
        return {transposition(3, 0, 1), transposition(3, 1, 2)};
    case GroupKind::S3xZ2:
        dim = 3;
        return {transposition(3, 0, 1), transposition(3, 1, 2), negation(3)};
    case GroupKind::S4:
        dim = 4;
        return {transposition(4, 0, 1), transposition(4, 1, 2), transposition(4, 2, 3)};
    case GroupKind::Oh: {
        dim = 3;
        // Rotations swapping adjacent cube diagonals: tau1 (x,y,z)->(z,-y,x),
        // tau2 (x,y,z)->(-x,-z,-y), tau3 (x,y,z)->(-z,-y,-x), plus negation.
        SignedPermutation t1{{2, 1, 0}, {1, -1, 1}};
        SignedPermutation t2{{0, 2, 1}, {-1, -1, -1}};
        SignedPermutation t3{{2, 1, 0}, {-1, -1, -1}};
        return {t1, t2, t3, negation(3)};
    }
    }
    throw input_error("generators_for: bad kind");
}

int expected_order(GroupKind kind) {
    switch (kind) {
    case GroupKind::Z2: return 2;
    case GroupKind::Z2xZ2: return 4;
    case GroupKind::Z2pow3: return 8;
    case GroupKind::D4: return 8;
    case GroupKind::S3: return 6;
    case GroupKind::S3xZ2: return 12;
    case GroupKind::S4: return 24;
    case GroupKind::Oh: return 48;
    }
    return 0;
}

// The four cube diagonals, as printed direction vectors.
const std::array<std::array<int, 3>, 4> kDiagonals = {{{1, 1, 1}, {1, -1, 1}, {1, 1, -1}, {1, -1, -1}}};

// Action of g on diagonal lines: g * d_k = +-d_{result}. Returns -1 if the
// image is not a diagonal (cannot happen for signed permutations).
int diagonal_image(const SignedPermutation& g, int k) {
    std::array<int, 3> v{};
    for (int j = 0; j < 3; ++j)
        v[g.perm[j]] = g.signs[j] * kDiagonals[k][j];
    for (int m = 0; m < 4; ++m) {
        bool plus = true, minus = true;
        for (int j = 0; j < 3; ++j) {
            plus = plus && v[j] == kDiagonals[m][j];
            minus = minus && v[j] == -kDiagonals[m][j];
        }
        if (plus || minus)
            return m;
    }
    return -1;
}

ProductFactor factor_oh(const SignedPermutation& g) {
    ProductFactor f;
    f.negation = g.det(); // det(-I3) = -1; rotations have det +1
    f.perm.resize(4);
    for (int k = 0; k < 4; ++k)
        f.perm[k] = diagonal_image(g, k);
    return f;
}

ProductFactor factor_s3xz2(const SignedPermutation& g) {
    ProductFactor f;
    f.negation = g.signs[0]; // all entries share one sign in S3 x {+-I}
    for (int s : g.signs)
        if (s != f.negation)
            throw structure_error("factor_s3xz2: element is not of the form +-P");
    f.perm = g.perm;
    return f;
}

} // namespace

int FiniteGroup::index_of(const SignedPermutation& g) const {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    if (it != elements.end() && *it == g)
        return static_cast<int>(it - elements.begin());
    return -1;
}

int FiniteGroup::identity_index() const {
    return index_of(SignedPermutation::identity(dim));
}

FiniteGroup make_group(GroupKind kind) {
    FiniteGroup G;
    G.kind = kind;
    G.generators = generators_for(kind, G.dim);

    // Breadth-first closure from the identity. First visit wins, so each
    // element keeps a shortest word (ties resolved by generator order).
    std::map<SignedPermutation, std::vector<int>> visited;
    std::deque<SignedPermutation> queue;
    SignedPermutation id = SignedPermutation::identity(G.dim);
    visited[id] = {};
    queue.push_back(id);
    while (!queue.empty()) {
        SignedPermutation e = queue.front();
        queue.pop_front();
        const std::vector<int>& w = visited[e];
        for (int i = 0; i < static_cast<int>(G.generators.size()); ++i) {
            SignedPermutation n = multiply(e, G.generators[i]);
            if (visited.count(n))
                continue;
            std::vector<int> nw = w;
            nw.push_back(i);
            visited[n] = std::move(nw);
            queue.push_back(n);
        }
    }

    for (auto& [el, w] : visited) { // std::map iterates in canonical order
        G.elements.push_back(el);
        G.words.push_back(w);
    }
    if (G.order() != expected_order(kind))
        throw structure_error("make_group: closure has wrong order for " + group_name(kind));

    if (kind == GroupKind::Oh)
        for (const auto& el : G.elements)
            G.factors.push_back(factor_oh(el));
    if (kind == GroupKind::S3xZ2)
        for (const auto& el : G.elements)
            G.factors.push_back(factor_s3xz2(el));
    return G;
}

namespace {

SignedPermutation pow(const SignedPermutation& g, int n) {
    SignedPermutation r = SignedPermutation::identity(g.dim());
    for (int i = 0; i < n; ++i)
        r = multiply(r, g);
    return r;
}

bool braid_ok(const SignedPermutation& a, const SignedPermutation& b, int order) {
    return pow(multiply(a, b), order).is_identity();
}

} // namespace

bool check_relations(const FiniteGroup& G) {
    const auto& g = G.generators;
    switch (G.kind) {
    case GroupKind::Z2:
    case GroupKind::Z2xZ2:
    case GroupKind::Z2pow3: {
        for (size_t i = 0; i < g.size(); ++i) {
            if (!pow(g[i], 2).is_identity())
                return false;
            for (size_t j = i + 1; j < g.size(); ++j)
                if (!(multiply(g[i], g[j]) == multiply(g[j], g[i])))
                    return false;
        }
        return true;
    }
    case GroupKind::D4: {
        const auto& s = g[0];
        const auto& r = g[1];
        return pow(r, 4).is_identity() && pow(s, 2).is_identity() &&
               pow(multiply(s, r), 2).is_identity();
    }
    case GroupKind::S3:
        return pow(g[0], 2).is_identity() && pow(g[1], 2).is_identity() && braid_ok(g[0], g[1], 3);
    case GroupKind::S4:
        return pow(g[0], 2).is_identity() && pow(g[1], 2).is_identity() &&
               pow(g[2], 2).is_identity() && braid_ok(g[0], g[1], 3) && braid_ok(g[1], g[2], 3) &&
               braid_ok(g[0], g[2], 2);
    case GroupKind::S3xZ2: {
        const auto& s = g[2];
        if (!(pow(g[0], 2).is_identity() && pow(g[1], 2).is_identity() && braid_ok(g[0], g[1], 3)))
            return false;
        if (!pow(s, 2).is_identity())
            return false;
        return multiply(s, g[0]) == multiply(g[0], s) && multiply(s, g[1]) == multiply(g[1], s);
    }
    case GroupKind::Oh: {
        if (!(pow(g[0], 2).is_identity() && pow(g[1], 2).is_identity() && pow(g[2], 2).is_identity()))
            return false;
        if (!(braid_ok(g[0], g[1], 3) && braid_ok(g[1], g[2], 3) && braid_ok(g[0], g[2], 2)))
            return false;
        const auto& s = g[3];
        if (!pow(s, 2).is_identity())
            return false;
        for (int k = 0; k < 3; ++k)
            if (!(multiply(s, g[k]) == multiply(g[k], s)))
                return false;
        // tau_k swaps diagonals d_k <-> d_{k+1} and fixes the others
        for (int k = 0; k < 3; ++k)
            for (int j = 0; j < 4; ++j) {
                int img = diagonal_image(g[k], j);
                int want = j == k ? k + 1 : (j == k + 1 ? k : j);
                if (img != want)
                    return false;
            }
        return true;
    }
    }
    return false;
}

} // namespace symsolve
