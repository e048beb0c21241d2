#pragma once

#include <vector>

#include "sl12/rational.hpp"

namespace sl12 {

// Weakly decreasing positive parts; the empty vector is the partition of 0.
using Partition = std::vector<long>;

// Strictly increasing part positions (0-based).
using PosTuple = std::vector<int>;

bool is_partition(const Partition& xi);
long partition_weight(const Partition& xi);

// All partitions of n, largest-first lexicographic: (n), (n-1,1), ...
std::vector<Partition> partitions_of(long n);

// Remove one box from the part at position c. The decremented part slides to
// the end of its run of equal values so the result stays weakly decreasing;
// parts that reach zero are dropped. Throws on an out-of-range position.
Partition remove_box(Partition xi, int c);

// Compose remove_box over a strictly increasing position tuple, applying the
// largest position first. Every step is valid because positions are distinct.
Partition remove_boxes(Partition xi, const PosTuple& cs);

// All strictly increasing tuples over {0..nparts-1}, shortest first, each
// length in lexicographic order. Includes the empty tuple.
std::vector<PosTuple> position_tuples(int nparts);

// A two-round box removal: first remove boxes at positions c (in xi), then at
// positions b (in the reduced partition).
struct RemovalPair {
    PosTuple b, c;

    bool operator==(const RemovalPair& o) const { return b == o.b && c == o.c; }
    bool operator<(const RemovalPair& o) const {
        return c != o.c ? c < o.c : b < o.b;
    }
};

// All removal pairs: c ranges over positions of xi, b over positions of
// remove_boxes(xi, c). Enumerated c-major, b-minor.
std::vector<RemovalPair> removal_pairs(const Partition& xi);

Partition removal_result(const Partition& xi, const RemovalPair& bc);

// Sum over removal pairs of prod_j (mu_j + 1), mu the two-round result.
Int removal_dimension_sum(const Partition& xi);

// prod_j 4*xi_j; the dimension of a product of Kac modules with these labels.
Int kac_dimension_product(const Partition& xi);

// At a strict descent xi[t-1] > xi[t], removal pairs factor through the head
// (first t parts) and tail (rest): gluing tail pairs with positions shifted
// by t reproduces removal_pairs(xi) exactly, and the two-round result is the
// sorted union of the head and tail results. Returns false on any mismatch;
// throws if t is not a strict descent.
bool removal_split_check(const Partition& xi, int t);

// Exponent data for a spanning monomial y2(a1)..y2(aj) x1(b1)..x1(bk)
// y3(c1)..y3(cl) of the degree-n local Weyl module:
//   0 <= c1 < .. < cl <= n-1,
//   0 <= b1 < .. < bk <= n-l-1,
//   0 <= a1 <= .. <= aj <= n-l-k-j.
struct WeylMonomial {
    std::vector<int> a, b, c;

    bool operator==(const WeylMonomial& o) const {
        return a == o.a && b == o.b && c == o.c;
    }
};

// All 4^n descriptors, lexicographic on (l, c, k, b, j, a).
std::vector<WeylMonomial> weyl_monomial_pool(long n);

// Divided-power exponents (i_1..i_e) for the y2(0)^(i_1)..y2(e-1)^(i_e) head
// attached to a partition mu with e parts: all nonnegative tuples with
//   p*i_{q-1} + (p+1)*i_q + 2*(i_{q+1}+..+i_e) <= mu_{q-p}+..+mu_e
// for 2 <= q <= e+1 and 1 <= p <= q-1 (i_{e+1} read as 0, mu 1-indexed).
// There are exactly prod_j (mu_j + 1) of them.
std::vector<std::vector<long>> y2_exponent_tuples(const Partition& mu);

// One basis monomial y2(0)^(i_1)..y2(e-1)^(i_e) x1(b1)..x1(bk) y3(c1)..y3(cl)
// of the Chari-Venkatesh module attached to xi.
struct CvBasisMonomial {
    std::vector<long> i;
    PosTuple b, c;
};

// All basis monomials: removal pairs in order, exponent tuples within each.
// Total count is kac_dimension_product(xi).
std::vector<CvBasisMonomial> cv_basis_monomials(const Partition& xi);

// Partition attached to the Demazure-type module D(ell, lambda):
// lambda2 = (q-1)*ell + m with 0 < m <= ell gives (ell^{q-1}, m).
Partition demazure_partition(long ell, long lambda2);

// Partition attached to the truncated module W(lambda, N):
// lambda2 = q*N + m with 0 <= m < N gives ((q+1)^m, q^{N-m}), zeros dropped.
Partition truncated_partition(long N, long lambda2);

}  // namespace sl12
