#include "symsolve/irreps.hpp"

#include <cmath>

namespace symsolve {

std::string IrrepLabel::text() const {
    switch (group) {
    case GroupKind::Z2:
    case GroupKind::Z2xZ2:
    case GroupKind::Z2pow3: {
        std::string s;
        for (int p : pattern)
            s += p ? 'o' : 'e';
        return s;
    }
    case GroupKind::D4: {
        static const char* names[] = {"trivial", "reflect", "rotate", "sign", "faithful"};
        return names[d4];
    }
    case GroupKind::S3:
    case GroupKind::S4:
    case GroupKind::S3xZ2:
    case GroupKind::Oh: {
        std::string s;
        for (size_t i = 0; i < partition.size(); ++i) {
            if (i)
                s += '+';
            s += std::to_string(partition[i]);
        }
        if (negation)
            s += negation > 0 ? "_t" : "_s";
        return s;
    }
    }
    return "?";
}

int irrep_count(GroupKind kind) {
    switch (kind) {
    case GroupKind::Z2: return 2;
    case GroupKind::Z2xZ2: return 4;
    case GroupKind::Z2pow3: return 8;
    case GroupKind::D4: return 5;
    case GroupKind::S3: return 3;
    case GroupKind::S3xZ2: return 6;
    case GroupKind::S4: return 5;
    case GroupKind::Oh: return 10;
    }
    return 0;
}

namespace {

DenseMatrix scalar(double v) {
    DenseMatrix m(1, 1);
    m(0, 0) = v;
    return m;
}

// Generator images of the symmetric group irreps in Young's orthogonal form,
// for the Coxeter generators (12),(23)[,(34)]. Entries are the standard
// closed forms 1/2, sqrt(3)/2, 1/3, 2*sqrt(2)/3.
std::vector<DenseMatrix> young_images(const std::vector<int>& partition) {
    const double h = 0.5, q = std::sqrt(3.0) / 2.0;
    const double t = 1.0 / 3.0, w = 2.0 * std::sqrt(2.0) / 3.0;

    if (partition == std::vector<int>{3})
        return {scalar(1), scalar(1)};
    if (partition == std::vector<int>{1, 1, 1})
        return {scalar(-1), scalar(-1)};
    if (partition == std::vector<int>{2, 1}) {
        DenseMatrix t1(2, 2), t2(2, 2);
        t1 << -1, 0, 0, 1;
        t2 << h, q, q, -h;
        return {t1, t2};
    }

    if (partition == std::vector<int>{4})
        return {scalar(1), scalar(1), scalar(1)};
    if (partition == std::vector<int>{1, 1, 1, 1})
        return {scalar(-1), scalar(-1), scalar(-1)};
    if (partition == std::vector<int>{3, 1}) {
        DenseMatrix t1(3, 3), t2(3, 3), t3(3, 3);
        t1 << -1, 0, 0, 0, 1, 0, 0, 0, 1;
        t2 << h, q, 0, q, -h, 0, 0, 0, 1;
        t3 << 1, 0, 0, 0, t, w, 0, w, -t;
        return {t1, t2, t3};
    }
    if (partition == std::vector<int>{2, 2}) {
        DenseMatrix t1(2, 2), t2(2, 2);
        t1 << -1, 0, 0, 1;
        t2 << h, q, q, -h;
        return {t1, t2, t1}; // (12) and (34) act identically on 2+2 tableaux
    }
    if (partition == std::vector<int>{2, 1, 1}) {
        DenseMatrix t1(3, 3), t2(3, 3), t3(3, 3);
        t1 << -1, 0, 0, 0, -1, 0, 0, 0, 1;
        t2 << -1, 0, 0, 0, h, q, 0, q, -h;
        t3 << t, w, 0, w, -t, 0, 0, 0, -1;
        return {t1, t2, t3};
    }
    throw input_error("young_images: unsupported partition");
}

const std::vector<std::vector<int>> kS3Partitions = {{3}, {2, 1}, {1, 1, 1}};
const std::vector<std::vector<int>> kS4Partitions = {{1, 1, 1, 1}, {2, 1, 1}, {2, 2}, {3, 1}, {4}};

std::vector<std::vector<int>> parity_patterns(int d) {
    // all 2^d patterns, ordered by (number of odd coordinates, position)
    std::vector<std::vector<int>> out;
    for (int ones = 0; ones <= d; ++ones)
        for (int mask = 0; mask < (1 << d); ++mask) {
            std::vector<int> p(d);
            int count = 0;
            for (int i = 0; i < d; ++i) {
                p[i] = (mask >> i) & 1;
                count += p[i];
            }
            if (count == ones)
                out.push_back(p);
        }
    return out;
}

std::vector<Irrep> build_catalogue(const FiniteGroup& G) {
    std::vector<Irrep> cat;
    switch (G.kind) {
    case GroupKind::Z2:
    case GroupKind::Z2xZ2:
    case GroupKind::Z2pow3: {
        for (const auto& pattern : parity_patterns(G.dim)) {
            Irrep ir;
            ir.label = {G.kind, pattern, {}, 0, -1};
            ir.dim = 1;
            for (const auto& gen : G.generators) {
                double v = 1.0;
                for (int i = 0; i < G.dim; ++i)
                    if (pattern[i] && gen.signs[i] < 0)
                        v = -v;
                ir.generator_images.push_back(scalar(v));
            }
            cat.push_back(std::move(ir));
        }
        break;
    }
    case GroupKind::D4: {
        // scalar values on (s, r); reflect/rotate follow the block-display
        // convention: reflect is r-antisymmetric, rotate is s-antisymmetric
        const int vals[4][2] = {{1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
        for (int i = 0; i < 4; ++i) {
            Irrep ir;
            ir.label = {GroupKind::D4, {}, {}, 0, i};
            ir.dim = 1;
            ir.generator_images = {scalar(vals[i][0]), scalar(vals[i][1])};
            cat.push_back(std::move(ir));
        }
        Irrep f;
        f.label = {GroupKind::D4, {}, {}, 0, 4};
        f.dim = 2;
        f.generator_images = {G.generators[0].to_matrix(), G.generators[1].to_matrix()};
        cat.push_back(std::move(f));
        break;
    }
    case GroupKind::S3:
    case GroupKind::S4: {
        const auto& parts = G.kind == GroupKind::S3 ? kS3Partitions : kS4Partitions;
        for (const auto& p : parts) {
            Irrep ir;
            ir.label = {G.kind, {}, p, 0, -1};
            ir.generator_images = young_images(p);
            ir.dim = static_cast<int>(ir.generator_images[0].rows());
            cat.push_back(std::move(ir));
        }
        break;
    }
    case GroupKind::S3xZ2:
    case GroupKind::Oh: {
        const auto& parts = G.kind == GroupKind::S3xZ2 ? kS3Partitions : kS4Partitions;
        for (const auto& p : parts)
            for (int neg : {+1, -1}) {
                Irrep ir;
                ir.label = {G.kind, {}, p, neg, -1};
                ir.generator_images = young_images(p);
                ir.dim = static_cast<int>(ir.generator_images[0].rows());
                // the extra generator is the negation -I; t maps it to I,
                // s maps it to -I
                ir.generator_images.push_back(static_cast<double>(neg) *
                                              DenseMatrix::Identity(ir.dim, ir.dim));
                cat.push_back(std::move(ir));
            }
        break;
    }
    }
    return cat;
}

void cache_element_images(Irrep& ir, const FiniteGroup& G) {
    ir.element_images.reserve(G.order());
    for (const auto& word : G.words) {
        DenseMatrix m = DenseMatrix::Identity(ir.dim, ir.dim);
        for (int gi : word)
            m = m * ir.generator_images[gi];
        ir.element_images.push_back(std::move(m));
    }
}

} // namespace

std::vector<Irrep> canonical_irreps(const FiniteGroup& G) {
    std::vector<Irrep> cat = build_catalogue(G);
    if (static_cast<int>(cat.size()) != irrep_count(G.kind))
        throw structure_error("canonical_irreps: catalogue size mismatch");
    int dimsq = 0;
    for (auto& ir : cat) {
        cache_element_images(ir, G);
        dimsq += ir.dim * ir.dim;
    }
    if (dimsq != G.order())
        throw structure_error("canonical_irreps: sum of squared dims != group order");
    return cat;
}

const DenseMatrix& irrep_image(const Irrep& irrep, const FiniteGroup& G, int element_index) {
    if (element_index < 0 || element_index >= G.order())
        throw input_error("irrep_image: element index out of range");
    return irrep.element_images[element_index];
}

bool verify_irrep(const Irrep& irrep, const FiniteGroup& G) {
    const int n = G.order();
    if (static_cast<int>(irrep.element_images.size()) != n)
        return false;
    for (int a = 0; a < n; ++a) {
        const DenseMatrix& A = irrep.element_images[a];
        if ((A.transpose() * A - DenseMatrix::Identity(irrep.dim, irrep.dim))
                .cwiseAbs()
                .maxCoeff() > 1e-12)
            return false;
        for (int b = 0; b < n; ++b) {
            int ab = G.index_of(multiply(G.elements[a], G.elements[b]));
            if (ab < 0)
                return false;
            if ((A * irrep.element_images[b] - irrep.element_images[ab]).cwiseAbs().maxCoeff() >
                1e-12)
                return false;
        }
    }
    return true;
}

std::string physics_class_name(PhysicsClass c) {
    switch (c) {
    case PhysicsClass::BosonEven: return "Boson-even";
    case PhysicsClass::BosonOdd: return "Boson-odd";
    case PhysicsClass::FermionEven: return "Fermion-even";
    case PhysicsClass::FermionOdd: return "Fermion-odd";
    case PhysicsClass::Other: return "Other";
    }
    return "?";
}

PhysicsClass classify_physics(const IrrepLabel& label) {
    if (label.group != GroupKind::S3xZ2)
        throw input_error("classify_physics: only defined for s3xz2 labels");
    bool even = label.negation > 0;
    if (label.partition == std::vector<int>{3})
        return even ? PhysicsClass::BosonEven : PhysicsClass::BosonOdd;
    if (label.partition == std::vector<int>{1, 1, 1})
        return even ? PhysicsClass::FermionEven : PhysicsClass::FermionOdd;
    return PhysicsClass::Other;
}

} // namespace symsolve
