#pragma once

#include <vector>

namespace omf {

// small permutation groups as explicit element sets: the brute-force oracle
// layer for the product-of-subgroups lemmas
using Perm = std::vector<int>;

Perm pidentity(int n);
Perm pcompose(const Perm& a, const Perm& b);  // "a then b"
Perm pinverse(const Perm& a);

struct SmallGroup {
    int degree = 0;
    std::vector<Perm> elements;  // sorted; closed under composition
    size_t size() const { return elements.size(); }
};

// closure of the generators; checks the group axioms by construction
SmallGroup closure(int degree, const std::vector<Perm>& gens, size_t cap = 200000);
bool contains(const SmallGroup& g, const Perm& p);
bool is_subgroup(const SmallGroup& sub, const SmallGroup& g);
bool is_normal(const SmallGroup& n, const SmallGroup& g);
SmallGroup intersection(const SmallGroup& a, const SmallGroup& b);
SmallGroup conjugate_group(const SmallGroup& g, const Perm& x);
// HK as a sorted element set (not necessarily a group)
std::vector<Perm> product_set(const SmallGroup& h, const SmallGroup& k);
// subgroup generated by the union (used for HN with N normal)
SmallGroup join(const SmallGroup& a, const SmallGroup& b);

// G == HK as sets
bool is_factorization(const SmallGroup& g, const SmallGroup& h, const SmallGroup& k);

// evaluates both sides of "G = HK iff HK contains N and G/N = (HN/N)(KN/N)"
// (N normal in G) and reports whether they agree
bool quotient_reduction_check(const SmallGroup& g, const SmallGroup& h, const SmallGroup& k,
                              const SmallGroup& n);

// given G = HK: checks that (H^x, K^y) is again a factorization of G with
// |H^x cap K^y| = |H cap K|
bool conjugate_pair_checks(const SmallGroup& g, const SmallGroup& h, const SmallGroup& k,
                           const Perm& x, const Perm& y);

// given G = HK and L normal in G: checks HL cap KL == (H cap KL)(K cap HL)
bool mixed_product_identity(const SmallGroup& g, const SmallGroup& h, const SmallGroup& k,
                            const SmallGroup& l);

// standard corpora
SmallGroup symmetric_group(int n);
SmallGroup alternating_group(int n);
SmallGroup cyclic_group(int n, int degree);

}  // namespace omf
