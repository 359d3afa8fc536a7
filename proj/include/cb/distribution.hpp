#pragma once
/*
 * Finite probability objects with exact rational probabilities.
 *
 * A JointDistribution is a dense table over a product of small ranges:
 * coordinate i takes values 0..ranges[i]-1 and the table is stored row-major
 * with coordinate 0 most significant.  Subsets of coordinates are bitmasks
 * (bit i = coordinate i), so "marginal", "conditional entropy" etc. all take
 * plain uint32 masks.  Everything is validated on construction: probabilities
 * are >= 0 and sum to exactly 1 as rationals.
 *
 * CoverFamily and PartialOrder are the side inputs of the two
 * covering-inequality checkers (see entropy.hpp): a family of coordinate
 * subsets covering every coordinate at least t times, and a strict partial
 * order on coordinates given by its transitively closed predecessor sets.
 */

#include "cb/bigint.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace cb {

struct FiniteDistribution {
    // (value id, probability); ids are distinct, zero probabilities allowed
    std::vector<std::pair<int, Rat>> outcomes;

    void validate() const;

    static FiniteDistribution bernoulli(const Rat &p); // values {0,1}, P(1)=p
    static FiniteDistribution uniform(int k);          // values 0..k-1
};

struct JointDistribution {
    int arity = 0;
    std::vector<int> ranges;   // ranges[i] >= 1
    std::vector<Rat> table;    // dense, size = prod(ranges)

    std::size_t size() const { return table.size(); }
    std::size_t index_of(const std::vector<int> &tuple) const;
    std::vector<int> tuple_of(std::size_t index) const;
    void validate() const;

    // Marginal onto the coordinates of `mask`, listed in increasing index
    // order.  mask == 0 gives the trivial arity-0 distribution (one empty
    // outcome with probability 1, entropy 0).
    JointDistribution marginal(std::uint32_t mask) const;

    static JointDistribution uniform(const std::vector<int> &ranges);
    // probabilities w_i / sum(w); weights >= 0, not all zero
    static JointDistribution from_weights(const std::vector<int> &ranges,
                                          const std::vector<long> &weights);
};

// Family of coordinate subsets used by the covering inequality.
struct CoverFamily {
    int n = 0;                         // ground coordinates 0..n-1
    std::vector<std::uint32_t> members;

    void validate() const;
    // min over coordinates of how many members contain it (0 if uncovered)
    int depth() const;
};

// Strict partial order on coordinates, stored as transitively closed strict
// predecessor masks.  Construction rejects cycles.
struct PartialOrder {
    int n = 0;
    std::vector<std::uint32_t> pred; // pred[i] = { j : j < i in the order }

    static PartialOrder from_pairs(int n,
                                   const std::vector<std::pair<int, int>> &less_pairs);
    // coordinates strictly below *every* member of F
    std::uint32_t common_pred(std::uint32_t F) const;
};

/*
 * Text format (round-trip exact):
 *   joint <arity> <r1> ... <rn>
 *   <v1> ... <vn> <p>/<q>
 * one line per outcome with nonzero probability; omitted tuples have
 * probability zero.  The writer emits outcomes in lexicographic tuple order
 * with fully reduced rationals, so write(read(write(j))) == write(j) holds
 * byte for byte.
 */
JointDistribution read_joint(std::istream &in);
void write_joint(std::ostream &out, const JointDistribution &j);
JointDistribution parse_joint(const std::string &text);
std::string format_joint(const JointDistribution &j);

Rat parse_rational(const std::string &token);
std::string format_rational(const Rat &r);

} // namespace cb
