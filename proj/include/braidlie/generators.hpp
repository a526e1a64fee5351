#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidlie/monomial.hpp"

namespace braidlie {

// One level of the recursive generator construction for the Brunnian ideal:
// monomials over the layer-n alphabet, truncated at deg_max, in canonical
// (degree, text) order.
struct GeneratorSetLevel {
    int n = 0;
    int k = 0;
    int deg_max = 0;
    std::vector<LieMonomial> monomials;
};

// Level sets K(n)_k, built top-down: level n is the n-1 generators A[i,n];
// level k collects W' and all left-normed products [..[[W',W_1],W_2],..,W_t]
// with W' a level-(k+1) monomial containing A[k,n], the W_i level-(k+1)
// monomials not containing it (ordered tuples, repetition allowed), total
// degree <= deg_max.
GeneratorSetLevel kset(int n, int k, int deg_max);

// Number of level-1 monomials per exact degree.
std::map<int, Int> kset_counts(int n, int deg_max);

// Free generators of the kernel of the projection killing X and fixing Y:
// x and the left-normed [..[x,y_1],..,y_t] for x in X, y_i in Y (ordered
// tuples), degree <= deg_max. X and Y must be disjoint, X nonempty.
std::vector<LieMonomial> lemma4_generators(const std::vector<std::string>& X,
                                           const std::vector<std::string>& Y,
                                           int deg_max);

// Generators of Ker(d_n) ∩ Ker(d_k): A[k,n] and the left-normed products
// [..[A[k,n],A[j_1,n]],..,A[j_m,n]] with j_i != k, j_i <= n-1.
std::vector<LieMonomial> prop5_generators(int n, int k, int deg_max);

// The Hall-basis alternative, realized in the Lyndon basis: standard
// bracketings of the Lyndon words over {A[1,n],..,A[n-1,n]} whose word
// contains A[k,n] exactly once, degree <= deg_max.
std::vector<LieMonomial> prop6_generators(int n, int k, int deg_max);

// True iff the monomial, placed in layer n, is killed by every strand
// deletion d_1..d_n — the defining property of Brunnian elements.
bool verify_in_kernels(const LieMonomial& gen, int n);

// One monomial per line, prefixed by its degree; the CLI listing format.
std::string generator_listing(const std::vector<LieMonomial>& monomials);

}  // namespace braidlie
