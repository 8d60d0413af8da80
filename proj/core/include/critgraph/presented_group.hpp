#pragma once

#include "critgraph/abelian_group.hpp"
#include "critgraph/bigint_matrix.hpp"
#include "critgraph/normal_forms.hpp"

namespace critgraph {

// Subquotient A/B of Z^ambient: U (ambient x r) is the canonical HNF basis of
// the generator lattice A, R (r x s) expresses the relation lattice B in
// U-coordinates.
struct PresentedGroup {
    std::size_t ambient = 0;
    BigIntMatrix gens;      // U
    BigIntMatrix rels;      // R
    AbelianGroup group;
};

// A/B for the column lattices of gens_a and gens_b; throws
// ContainmentViolation when some column of gens_b lies outside lattice A.
PresentedGroup lattice_quotient(const BigIntMatrix& gens_a, const BigIntMatrix& gens_b);

// Homomorphism between presented groups, induced by an ambient matrix F.
struct GroupHom {
    PresentedGroup source, target;
    BigIntMatrix ambient_matrix; // F: Z^{source.ambient} -> Z^{target.ambient}
    BigIntMatrix coord_matrix;   // canonical matrix on generator coordinates
};

// Validates that F maps generators into generators and relations into
// relations; throws NotAHomomorphism otherwise.
GroupHom induced_hom(const PresentedGroup& source, const PresentedGroup& target,
                     const BigIntMatrix& f);

GroupHom compose(const GroupHom& g, const GroupHom& f); // g after f

AbelianGroup hom_kernel(const GroupHom& f);
// Kernel with its presentation retained (used where the kernel itself feeds
// further checks).
PresentedGroup hom_kernel_presented(const GroupHom& f);
AbelianGroup hom_image(const GroupHom& f);

bool hom_is_zero(const GroupHom& f);
// True when f (an endomorphism-shaped hom with source == target ambient data)
// equals multiplication by s on the group.
bool hom_equals_scalar(const GroupHom& f, const Int& s);
bool hom_is_injective(const GroupHom& f);
bool hom_is_surjective(const GroupHom& f);

// ker(g)/im(f); checks that g∘f vanishes on the group (NotAComplex otherwise).
AbelianGroup complex_homology(const GroupHom& f, const GroupHom& g);

} // namespace critgraph
