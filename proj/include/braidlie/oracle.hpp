#pragma once

#include <string>
#include <vector>

#include "braidlie/generators.hpp"
#include "braidlie/ideals.hpp"
#include "braidlie/kohno.hpp"
#include "braidlie/matrix.hpp"

namespace braidlie {

// Canonical ordered basis of the degree-q part of L(P_n): the layer Lyndon
// bases concatenated with layers ascending and words lex inside a layer.
// The size is checked against rank_pure(q, n) at construction.
struct DegreeBasis {
    int n = 0;
    int q = 0;
    std::vector<std::pair<int, Word>> labels;  // (layer k, Lyndon word)

    int size() const { return static_cast<int>(labels.size()); }
    // Position of layer k's coordinate block.
    int layer_offset(int k) const;
};

DegreeBasis degree_basis(int n, int q);

// Coordinates of the degree-q part of x in degree_basis(n, q).
std::vector<Int> layered_to_coords(const LayeredElement& x, const DegreeBasis& basis);

// Matrix of face(., k): L_q(P_n) -> L_q(P_{n-1}) in canonical coordinates;
// columns are images of basis monomials.
IntMatrix face_matrix(int n, int q, int k);

// Saturated kernel of the stacked face matrices for the listed deletions.
IntegerLattice kernel_of_faces(int n, int q, const std::vector<int>& ks);

// Saturated kernel of all n strand deletions: the degree-q Brunnian part in
// L_q(P_n) coordinates.
IntegerLattice kernel_intersection(int n, int q);

// Degreewise span of the subalgebra generated by monomials over the layer-n
// alphabet: S_d = span(generator images of degree d) + sum of [S_a, S_b] over
// a + b = d. Lattices are in layer-n Lyndon coordinates.
std::vector<IntegerLattice> subalgebra_span(const std::vector<LieMonomial>& generators,
                                            int n, int q_max);

// Embeds a layer-n degree-q lattice into L_q(P_n) coordinates.
IntegerLattice embed_layer_lattice(const IntegerLattice& lat, int n, int q);

// Result of one verification run; details carry observed/expected ranks and,
// on failure, the first failing degree with a witness vector in monomial
// notation.
struct CheckReport {
    std::string check;
    int n = 0;
    int q_max = 0;
    bool pass = false;
    std::string details;
    long long millis = 0;
};

// Kernel ranks equal the closed-form Brunnian ranks for q <= q_max.
CheckReport check_kernel_ranks(int n, int q_max);

// The level-1 generator set spans the kernel intersection over Z degreewise,
// and the Witt inversion of its degree counts reproduces the kernel ranks.
CheckReport check_theorem8(int n, int q_max);

// Ker(d_n) is the free layer (rank check), and the two generator families of
// Ker(d_n) ∩ Ker(d_k) span it over Z with matching free-generator counts.
CheckReport check_prop3_prop5_prop6(int n, int k, int q_max);

// Fat sum = symmetric sum = kernel intersection, degreewise over Z.
CheckReport check_symmetric_sum(int n, int q_max);

// The coface images of the lower Brunnian kernels decompose L_q(P_n) as a
// direct sum, with rank bookkeeping matching the convolution identity.
CheckReport check_decomposition(int n, int q);

// The face/coface identities hold on every degree-q basis element.
CheckReport check_bidelta(int n, int q);

std::string report_text(const CheckReport& r);
std::string report_json(const CheckReport& r);  // millis field varies between runs

}  // namespace braidlie
