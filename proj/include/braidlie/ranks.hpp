#pragma once

#include <map>
#include <string>

#include "braidlie/bigint.hpp"

namespace braidlie {

// Möbius function; d >= 1.
int mobius(long long d);

// Exact binomial coefficient by the Pascal recurrence.
Int binomial(int n, int k);

// Rank of the degree-q part of the free Lie ring on k letters:
// (1/q) sum over d|q of mu(d) k^(q/d). The division is asserted exact.
Int witt_rank(int q, int k);

// Rank of the degree-q part of the pure braid Lie ring on m strands:
// 0 for m <= 1, otherwise the sum of witt_rank(q, k) for k = 1..m-1.
Int rank_pure(int q, int m);

// Rank of the degree-q Brunnian part on n strands, by the alternating
// binomial sum over rank_pure. A negative result signals a bug and throws.
Int rank_brunnian(int q, int n);

// Degreewise ranks l_q of the free Lie ring on a graded generating set with
// g_d generators in degree d: the unique solution of
//   prod_q (1 - t^q)^(l_q) = 1 - sum_d g_d t^d  (mod t^(deg_max+1)).
// Throws "not a free-generator series" if some l_q would be negative.
std::map<int, Int> witt_inversion(const std::map<int, Int>& g, int deg_max);

// Per-degree ranks of L_q(P_n) and L_q^P(Brun_n) up to q_max, with the
// convolution identity rank_pure(q,n) = sum_k C(n,k) rank_brunnian(q,n-k)
// asserted at construction.
struct RankTable {
    int n = 0;
    int q_max = 0;
    std::map<std::pair<int, int>, Int> pure_ranks;  // (q, m) for m <= n
    std::map<int, Int> brunnian_ranks;              // q -> rank at n strands
};

RankTable rank_table(int n, int q_max);

// Emitters used by the CLI; all deterministic.
std::string rank_table_csv(const RankTable& t);
std::string rank_table_text(const RankTable& t);
std::string rank_table_latex(const RankTable& t);
std::string rank_table_json(const RankTable& t);

}  // namespace braidlie
