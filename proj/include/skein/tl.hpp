#pragma once

#include "skein/scalar.hpp"

#include <map>
#include <vector>

namespace skein {

// Planar perfect matching of nbot+ntop boundary points: points 0..nbot-1 on
// the bottom edge (left to right), then nbot..nbot+ntop-1 on the top edge
// (left to right). Stored as the mate involution.
class TLPattern {
public:
    TLPattern() : nbot_(0), ntop_(0) {}
    TLPattern(int nbot, int ntop, std::vector<int> mate);
    static TLPattern id(int n);
    // single cup-cap generator e_i on n strands (0-based i, joins i and i+1)
    static TLPattern e(int n, int i);
    // 0 -> 2k nested arcs
    static TLPattern nested_cups(int k);
    static TLPattern nested_caps(int k);

    int nbot() const { return nbot_; }
    int ntop() const { return ntop_; }
    const std::vector<int>& mate() const { return mate_; }
    bool operator<(const TLPattern& o) const;
    bool operator==(const TLPattern& o) const {
        return nbot_ == o.nbot_ && ntop_ == o.ntop_ && mate_ == o.mate_;
    }

    // stack `upper` on top of *this; loops formed in the middle are counted
    TLPattern then(const TLPattern& upper, int& loops) const;
    TLPattern tensor(const TLPattern& right) const;
    TLPattern flipped() const; // vertical mirror (swap bottom and top)
    bool is_planar() const;

private:
    int nbot_, ntop_;
    std::vector<int> mate_;
};

// Scalar field the TL computations run over: generic (rational functions in
// the framing variable A) or specialized at a primitive root of unity.
class TLContext {
public:
    // generic mode
    TLContext() : order_(0), exp_(0) {}
    // specialized mode: A = z_order^exp
    TLContext(long order, long exp);

    bool specialized() const { return order_ != 0; }
    long order() const { return order_; }
    long root_exp() const { return exp_; }

    Scalar A(long power = 1) const;
    Scalar delta() const;       // loop value -A^2 - A^-2
    Scalar qint(long m) const;  // quantum integer [m]
    Scalar qint_factorial(long m) const;

private:
    long order_, exp_;
};

// Linear combination of planar matchings with Scalar coefficients. Zero
// coefficients are never stored.
class TLElement {
public:
    TLElement() : nbot_(0), ntop_(0) {}
    TLElement(int nbot, int ntop) : nbot_(nbot), ntop_(ntop) {}
    static TLElement id(int n);
    static TLElement from_pattern(const TLPattern& p, const Scalar& c = Scalar(1));

    int nbot() const { return nbot_; }
    int ntop() const { return ntop_; }
    const std::map<TLPattern, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    void add_term(const TLPattern& p, const Scalar& c);
    TLElement operator+(const TLElement& o) const;
    TLElement operator-(const TLElement& o) const;
    TLElement scale(const Scalar& s) const;
    bool operator==(const TLElement& o) const {
        return nbot_ == o.nbot_ && ntop_ == o.ntop_ && terms_ == o.terms_;
    }
    bool operator!=(const TLElement& o) const { return !(*this == o); }

    TLElement then(const TLElement& upper, const TLContext& ctx) const;
    TLElement tensor(const TLElement& right) const;
    TLElement flipped() const;

    // close all strands off to the right (trace closure); element must be n->n
    Scalar closure(const TLContext& ctx) const;
    // close only the rightmost strand: n->n becomes n-1->n-1
    TLElement partial_closure(const TLContext& ctx) const;
    // scalar of a 0->0 element
    Scalar scalar_value() const;

private:
    int nbot_, ntop_;
    std::map<TLPattern, Scalar> terms_;
};

// Elementary positive crossing on two strands: A*id + A^-1*e. The trace
// closure of this element is the positive kink, worth -A^3 * delta.
TLElement crossing_pos(const TLContext& ctx);
TLElement crossing_neg(const TLContext& ctx);
// Cabled positive crossing swapping a bundle of n strands over a bundle of m.
TLElement cabled_crossing(const TLContext& ctx, int n, int m, bool positive);

// Jones-Wenzl idempotent on n strands, cached per context mode. Throws
// domain_error("quantum integer vanishes...") when the Wenzl recursion
// divides by a vanishing quantum integer at the chosen root.
const TLElement& jones_wenzl(const TLContext& ctx, int n);

} // namespace skein
