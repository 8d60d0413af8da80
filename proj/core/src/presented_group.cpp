#include "critgraph/presented_group.hpp"

#include "critgraph/errors.hpp"

namespace critgraph {

namespace {

// lattice membership: every column of b lies in the column lattice of a
bool lattice_contains(const BigIntMatrix& a, const BigIntMatrix& b) {
    if (b.cols() == 0) return true;
    return solve_integer(a, b).has_value();
}

AbelianGroup quotient_group(std::size_t gen_rank, const BigIntMatrix& rels) {
    SmithForm s = snf(rels);
    AbelianGroup g = AbelianGroup::from_diag(
        std::vector<Int>(s.diag.begin(), s.diag.begin() + s.rank));
    g.free_rank = gen_rank - s.rank;
    return g;
}

} // namespace

PresentedGroup lattice_quotient(const BigIntMatrix& gens_a, const BigIntMatrix& gens_b) {
    if (gens_a.rows() != gens_b.rows())
        throw ValidationError("lattice_quotient: ambient rank mismatch");
    HermiteForm h = hnf(gens_a);
    PresentedGroup p;
    p.ambient = gens_a.rows();
    p.gens = h.basis;
    auto coords = solve_integer(p.gens, gens_b);
    if (!coords)
        throw ContainmentViolation("CONTAINMENT_VIOLATION: gens_B not inside lattice A");
    p.rels = std::move(*coords);
    p.group = quotient_group(h.rank, p.rels);
    return p;
}

GroupHom induced_hom(const PresentedGroup& source, const PresentedGroup& target,
                     const BigIntMatrix& f) {
    if (f.cols() != source.ambient || f.rows() != target.ambient)
        throw NotAHomomorphism("NOT_A_HOMOMORPHISM: ambient dimension mismatch");
    GroupHom hom;
    hom.source = source;
    hom.target = target;
    hom.ambient_matrix = f;
    auto coord = solve_integer(target.gens, f * source.gens);
    if (!coord)
        throw NotAHomomorphism("NOT_A_HOMOMORPHISM: generators not mapped into target lattice");
    hom.coord_matrix = std::move(*coord);
    // relations must land in the target relation lattice
    if (!lattice_contains(target.gens * target.rels, f * (source.gens * source.rels)))
        throw NotAHomomorphism("NOT_A_HOMOMORPHISM: relations not mapped into target relations");
    return hom;
}

GroupHom compose(const GroupHom& g, const GroupHom& f) {
    return induced_hom(f.source, g.target, g.ambient_matrix * f.ambient_matrix);
}

// coordinates (w.r.t. source.gens) of a basis of {a in A : F a in B_target}
static BigIntMatrix kernel_coords(const GroupHom& f) {
    BigIntMatrix fu = f.ambient_matrix * f.source.gens;
    BigIntMatrix tb = f.target.gens * f.target.rels;
    BigIntMatrix m = BigIntMatrix::hstack(fu, tb);
    BigIntMatrix k = kernel_basis(m);
    BigIntMatrix kx(f.source.gens.cols(), k.cols());
    for (std::size_t i = 0; i < kx.rows(); ++i)
        for (std::size_t j = 0; j < k.cols(); ++j) kx(i, j) = k(i, j);
    return kx;
}

PresentedGroup hom_kernel_presented(const GroupHom& f) {
    BigIntMatrix kx = kernel_coords(f);
    return lattice_quotient(f.source.gens * kx, f.source.gens * f.source.rels);
}

AbelianGroup hom_kernel(const GroupHom& f) { return hom_kernel_presented(f).group; }

AbelianGroup hom_image(const GroupHom& f) {
    BigIntMatrix fu = f.ambient_matrix * f.source.gens;
    BigIntMatrix tb = f.target.gens * f.target.rels;
    return lattice_quotient(BigIntMatrix::hstack(fu, tb), tb).group;
}

bool hom_is_zero(const GroupHom& f) {
    return lattice_contains(f.target.gens * f.target.rels,
                            f.ambient_matrix * f.source.gens);
}

bool hom_equals_scalar(const GroupHom& f, const Int& s) {
    if (f.source.ambient != f.target.ambient) return false;
    // compare on the source generators: (F - s)|_A must land in B_target
    BigIntMatrix lhs = f.ambient_matrix * f.source.gens - s * f.source.gens;
    return lattice_contains(f.target.gens * f.target.rels, lhs);
}

bool hom_is_injective(const GroupHom& f) { return hom_kernel(f).trivial(); }

bool hom_is_surjective(const GroupHom& f) { return hom_image(f) == f.target.group; }

AbelianGroup complex_homology(const GroupHom& f, const GroupHom& g) {
    if (f.target.ambient != g.source.ambient || !(f.target.gens == g.source.gens) ||
        !(f.target.rels == g.source.rels))
        throw NotAComplex("NOT_A_COMPLEX: middle groups differ");
    GroupHom gf = compose(g, f);
    if (!hom_is_zero(gf)) throw NotAComplex("NOT_A_COMPLEX: composite is not zero");
    BigIntMatrix kx = kernel_coords(g);
    BigIntMatrix ker_gens = g.source.gens * kx;
    BigIntMatrix im_gens = BigIntMatrix::hstack(f.ambient_matrix * f.source.gens,
                                                g.source.gens * g.source.rels);
    return lattice_quotient(ker_gens, im_gens).group;
}

} // namespace critgraph
