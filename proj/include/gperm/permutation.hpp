#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gperm {

/// A permutation of [1,n] in one-line (window) notation: w[i-1] = sigma(i).
/// Composition acts on values: (a*b)(i) = a(b(i)).
using Perm = std::vector<int>;

/// A composition of n: positive parts summing to n.  The empty composition
/// is the unique composition of 0.
using Composition = std::vector<int>;

Perm perm_identity(int n);
bool is_perm(const Perm& w);
Perm perm_compose(const Perm& a, const Perm& b);
Perm perm_inverse(const Perm& w);
/// Number of inversions = Coxeter length.
int perm_length(const Perm& w);
/// Simple transposition s_i in S_n, 1 <= i <= n-1.
Perm simple_transposition(int n, int i);
std::string perm_str(const Perm& w);

/// Standardization: the unique permutation whose letters compare like the
/// word's letters, ties broken left to right.
Perm standardize(const std::vector<int>& word);

/// Block-diagonal embedding: v1 x v2 x ... acting on consecutive intervals.
Perm direct_sum(const std::vector<Perm>& blocks);

/// Longest element omega_c of the Young subgroup S_c (reverses each block).
Perm longest_element(const Composition& c);

/// Membership in X_c: sigma increases on each block interval of c.
bool is_coset_rep(const Perm& w, const Composition& c);

/// The minimal-length left coset representatives X_c of S_c in S_n, listed
/// in lexicographic window order.
std::vector<Perm> coset_reps(const Composition& c);

/// The unique factorization sigma = u v with u in X_c, v in S_c.
/// Satisfies length(sigma) = length(u) + length(v).
struct CComponents {
  Perm u;
  Perm v;
};
CComponents c_components(const Perm& w, const Composition& c);

/// Deodhar's dichotomy for x in X_c and a simple s_i: either s_i x stays in
/// X_c, or s_i x = x s_j for a unique s_j in S_c with x(j)=i, x(j+1)=i+1.
struct DeodharInCosets {};
struct DeodharConjugate {
  int j;
};
using DeodharCase = std::variant<DeodharInCosets, DeodharConjugate>;
DeodharCase deodhar_case(const Perm& x, int i, const Composition& c);

/// All of S_n in lexicographic window order (rank order).
std::vector<Perm> enumerate_sn(int n);
/// Lexicographic (Lehmer) rank in [0, n!).
uint64_t perm_rank(const Perm& w);
Perm perm_unrank(int n, uint64_t r);
uint64_t factorial(int n);

/// Degree guard for uncoloured enumeration; pass force=true to override.
void check_sn_guard(int n, bool force = false);

}  // namespace gperm
