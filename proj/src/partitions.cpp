#include "sl12/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace sl12 {

bool is_partition(const Partition& xi) {
    for (std::size_t i = 0; i < xi.size(); ++i) {
        if (xi[i] <= 0) return false;
        if (i > 0 && xi[i] > xi[i - 1]) return false;
    }
    return true;
}

long partition_weight(const Partition& xi) {
    return std::accumulate(xi.begin(), xi.end(), 0L);
}

std::vector<Partition> partitions_of(long n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    Partition cur;
    std::function<void(long, long)> rec = [&](long left, long maxpart) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Partition remove_box(Partition xi, int c) {
    if (c < 0 || static_cast<std::size_t>(c) >= xi.size())
        throw std::invalid_argument("remove_box: position out of range");
    std::size_t j = c;
    while (j + 1 < xi.size() && xi[j + 1] == xi[c]) ++j;
    if (--xi[j] == 0) xi.erase(xi.begin() + j);
    return xi;
}

Partition remove_boxes(Partition xi, const PosTuple& cs) {
    for (auto it = cs.rbegin(); it != cs.rend(); ++it)
        xi = remove_box(std::move(xi), *it);
    return xi;
}

std::vector<PosTuple> position_tuples(int nparts) {
    std::vector<PosTuple> out;
    PosTuple cur;
    std::function<void(int, int)> rec = [&](int len, int lo) {
        if (len == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = lo; p <= nparts - len; ++p) {
            cur.push_back(p);
            rec(len - 1, p + 1);
            cur.pop_back();
        }
    };
    for (int len = 0; len <= nparts; ++len) rec(len, 0);
    return out;
}

std::vector<RemovalPair> removal_pairs(const Partition& xi) {
    std::vector<RemovalPair> out;
    for (const PosTuple& c : position_tuples(static_cast<int>(xi.size()))) {
        Partition mid = remove_boxes(xi, c);
        for (const PosTuple& b : position_tuples(static_cast<int>(mid.size())))
            out.push_back({b, c});
    }
    return out;
}

Partition removal_result(const Partition& xi, const RemovalPair& bc) {
    return remove_boxes(remove_boxes(xi, bc.c), bc.b);
}

Int removal_dimension_sum(const Partition& xi) {
    Int total = 0;
    for (const RemovalPair& bc : removal_pairs(xi)) {
        Int prod = 1;
        for (long part : removal_result(xi, bc)) prod *= Int(part + 1);
        total += prod;
    }
    return total;
}

Int kac_dimension_product(const Partition& xi) {
    Int prod = 1;
    for (long part : xi) prod *= Int(4 * part);
    return prod;
}

bool removal_split_check(const Partition& xi, int t) {
    if (t < 1 || static_cast<std::size_t>(t) >= xi.size() || xi[t - 1] <= xi[t])
        throw std::invalid_argument("removal_split_check: need a strict descent");
    Partition head(xi.begin(), xi.begin() + t);
    Partition tail(xi.begin() + t, xi.end());

    std::set<RemovalPair> whole;
    for (const RemovalPair& bc : removal_pairs(xi)) whole.insert(bc);

    std::set<RemovalPair> glued;
    for (const RemovalPair& hp : removal_pairs(head)) {
        for (const RemovalPair& tp : removal_pairs(tail)) {
            RemovalPair bc = hp;
            for (int z : tp.c) bc.c.push_back(z + t);
            for (int u : tp.b) bc.b.push_back(u + t);
            if (!glued.insert(bc).second) return false;

            Partition combined = removal_result(head, hp);
            for (long part : removal_result(tail, tp)) combined.push_back(part);
            std::sort(combined.begin(), combined.end(), std::greater<long>());
            if (combined != removal_result(xi, bc)) return false;
        }
    }
    return glued == whole;
}

namespace {

void strict_tuples(int len, int lo, int hi, std::vector<int>& cur,
                   const std::function<void(const std::vector<int>&)>& emit) {
    if (len == 0) {
        emit(cur);
        return;
    }
    for (int p = lo; p <= hi - len + 1; ++p) {
        cur.push_back(p);
        strict_tuples(len - 1, p + 1, hi, cur, emit);
        cur.pop_back();
    }
}

void weak_tuples(int len, int lo, int hi, std::vector<int>& cur,
                 const std::function<void(const std::vector<int>&)>& emit) {
    if (len == 0) {
        emit(cur);
        return;
    }
    for (int p = lo; p <= hi; ++p) {
        cur.push_back(p);
        weak_tuples(len - 1, p, hi, cur, emit);
        cur.pop_back();
    }
}

}  // namespace

std::vector<WeylMonomial> weyl_monomial_pool(long n) {
    if (n < 0) throw std::invalid_argument("weyl_monomial_pool: negative n");
    std::vector<WeylMonomial> out;
    std::vector<int> cc, bb, aa;
    for (int l = 0; l <= n; ++l) {
        strict_tuples(l, 0, static_cast<int>(n) - 1, cc, [&](const std::vector<int>& c) {
            for (int k = 0; k + l <= n; ++k) {
                strict_tuples(k, 0, static_cast<int>(n) - l - 1, bb,
                              [&](const std::vector<int>& b) {
                    for (int j = 0; j + l + k <= n; ++j) {
                        weak_tuples(j, 0, static_cast<int>(n) - l - k - j, aa,
                                    [&](const std::vector<int>& a) {
                            out.push_back({a, b, c});
                        });
                    }
                });
            }
        });
    }
    return out;
}

std::vector<std::vector<long>> y2_exponent_tuples(const Partition& mu) {
    const int e = static_cast<int>(mu.size());
    std::vector<long> suffix(e + 1, 0);
    for (int t = e - 1; t >= 0; --t) suffix[t] = suffix[t + 1] + mu[t];

    // Fill i_e, i_{e-1}, .., i_1; once i_t is chosen every constraint with
    // q = t+1 involves only assigned entries, so failures prune immediately.
    std::vector<std::vector<long>> out;
    std::vector<long> i(e, 0);
    auto at = [&](int t) { return t <= e ? i[t - 1] : 0L; };
    std::function<void(int)> rec = [&](int t) {
        if (t == 0) {
            out.push_back(i);
            return;
        }
        for (long v = 0; v <= suffix[t - 1]; ++v) {
            i[t - 1] = v;
            long tail2 = 0;
            for (int s = t + 2; s <= e; ++s) tail2 += i[s - 1];
            bool ok = true;
            // suffix is 0-indexed, mu_{q-p} + .. + mu_e = suffix[q-p-1].
            for (int p = 1; ok && p <= t; ++p)
                ok = p * v + (p + 1) * at(t + 1) + 2 * tail2 <= suffix[t - p];
            if (ok) rec(t - 1);
        }
        i[t - 1] = 0;
    };
    rec(e);
    return out;
}

std::vector<CvBasisMonomial> cv_basis_monomials(const Partition& xi) {
    std::vector<CvBasisMonomial> out;
    for (const RemovalPair& bc : removal_pairs(xi)) {
        Partition mu = removal_result(xi, bc);
        for (const std::vector<long>& i : y2_exponent_tuples(mu))
            out.push_back({i, bc.b, bc.c});
    }
    return out;
}

Partition demazure_partition(long ell, long lambda2) {
    if (ell < 1 || lambda2 < 0)
        throw std::invalid_argument("demazure_partition: need ell >= 1, lambda2 >= 0");
    if (lambda2 == 0) return {};
    long q = (lambda2 + ell - 1) / ell;
    long m = lambda2 - (q - 1) * ell;
    Partition xi(q - 1, ell);
    xi.push_back(m);
    return xi;
}

Partition truncated_partition(long N, long lambda2) {
    if (N < 1 || lambda2 < 0)
        throw std::invalid_argument("truncated_partition: need N >= 1, lambda2 >= 0");
    long q = lambda2 / N;
    long m = lambda2 % N;
    Partition xi(m, q + 1);
    if (q > 0) xi.insert(xi.end(), N - m, q);
    return xi;
}

}  // namespace sl12
