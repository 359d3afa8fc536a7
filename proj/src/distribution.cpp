#include "cb/distribution.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace cb {

void FiniteDistribution::validate() const {
    Rat sum = 0;
    std::set<int> seen;
    for (const auto &[id, p] : outcomes) {
        if (p < 0) throw std::invalid_argument("FiniteDistribution: negative probability");
        if (!seen.insert(id).second)
            throw std::invalid_argument("FiniteDistribution: duplicate value id");
        sum += p;
    }
    if (sum != 1) throw std::invalid_argument("FiniteDistribution: probabilities must sum to 1");
}

FiniteDistribution FiniteDistribution::bernoulli(const Rat &p) {
    if (p < 0 || p > 1) throw std::invalid_argument("bernoulli: p outside [0,1]");
    FiniteDistribution d;
    d.outcomes = {{0, Rat(1) - p}, {1, p}};
    return d;
}

FiniteDistribution FiniteDistribution::uniform(int k) {
    if (k < 1) throw std::invalid_argument("uniform: empty range");
    FiniteDistribution d;
    for (int v = 0; v < k; ++v) d.outcomes.emplace_back(v, Rat(1, k));
    return d;
}

std::size_t JointDistribution::index_of(const std::vector<int> &tuple) const {
    if (int(tuple.size()) != arity)
        throw std::invalid_argument("JointDistribution: tuple arity mismatch");
    std::size_t idx = 0;
    for (int i = 0; i < arity; ++i) {
        if (tuple[i] < 0 || tuple[i] >= ranges[i])
            throw std::invalid_argument("JointDistribution: tuple value out of range");
        idx = idx * std::size_t(ranges[i]) + std::size_t(tuple[i]);
    }
    return idx;
}

std::vector<int> JointDistribution::tuple_of(std::size_t index) const {
    std::vector<int> t(arity);
    for (int i = arity - 1; i >= 0; --i) {
        t[i] = int(index % std::size_t(ranges[i]));
        index /= std::size_t(ranges[i]);
    }
    return t;
}

void JointDistribution::validate() const {
    if (arity < 0 || int(ranges.size()) != arity)
        throw std::invalid_argument("JointDistribution: arity/ranges mismatch");
    std::size_t want = 1;
    for (int r : ranges) {
        if (r < 1) throw std::invalid_argument("JointDistribution: range must be >= 1");
        if (want > (std::size_t(1) << 20) / std::size_t(r))
            throw std::invalid_argument("JointDistribution: table too large");
        want *= std::size_t(r);
    }
    if (table.size() != want)
        throw std::invalid_argument("JointDistribution: table size mismatch");
    Rat sum = 0;
    for (const Rat &p : table) {
        if (p < 0) throw std::invalid_argument("JointDistribution: negative probability");
        sum += p;
    }
    if (sum != 1) throw std::invalid_argument("JointDistribution: probabilities must sum to 1");
}

JointDistribution JointDistribution::marginal(std::uint32_t mask) const {
    if (arity > 0 && (mask >> arity) != 0)
        throw std::invalid_argument("marginal: mask outside coordinate range");
    std::vector<int> coords;
    for (int i = 0; i < arity; ++i)
        if (mask >> i & 1) coords.push_back(i);

    JointDistribution m;
    m.arity = int(coords.size());
    std::size_t msize = 1;
    for (int c : coords) {
        m.ranges.push_back(ranges[c]);
        msize *= std::size_t(ranges[c]);
    }
    m.table.assign(msize, Rat(0));

    for (std::size_t idx = 0; idx < table.size(); ++idx) {
        if (table[idx] == 0) continue;
        std::vector<int> t = tuple_of(idx);
        std::size_t midx = 0;
        for (std::size_t k = 0; k < coords.size(); ++k)
            midx = midx * std::size_t(m.ranges[k]) + std::size_t(t[coords[k]]);
        m.table[midx] += table[idx];
    }
    return m;
}

JointDistribution JointDistribution::uniform(const std::vector<int> &ranges) {
    JointDistribution j;
    j.arity = int(ranges.size());
    j.ranges = ranges;
    std::size_t sz = 1;
    for (int r : ranges) sz *= std::size_t(r);
    j.table.assign(sz, Rat(1, long(sz)));
    j.validate();
    return j;
}

JointDistribution JointDistribution::from_weights(const std::vector<int> &ranges,
                                                  const std::vector<long> &weights) {
    JointDistribution j;
    j.arity = int(ranges.size());
    j.ranges = ranges;
    long total = 0;
    for (long w : weights) {
        if (w < 0) throw std::invalid_argument("from_weights: negative weight");
        total += w;
    }
    if (total == 0) throw std::invalid_argument("from_weights: all weights zero");
    std::size_t sz = 1;
    for (int r : ranges) sz *= std::size_t(r);
    if (weights.size() != sz) throw std::invalid_argument("from_weights: weight count mismatch");
    j.table.reserve(sz);
    for (long w : weights) j.table.emplace_back(w, total);
    j.validate();
    return j;
}

void CoverFamily::validate() const {
    if (n < 1 || n > 32) throw std::invalid_argument("CoverFamily: ground size out of range");
    for (std::uint32_t m : members)
        if (n < 32 && (m >> n) != 0)
            throw std::invalid_argument("CoverFamily: member outside ground set");
}

int CoverFamily::depth() const {
    int t = int(members.size());
    for (int i = 0; i < n; ++i) {
        int c = 0;
        for (std::uint32_t m : members)
            if (m >> i & 1) ++c;
        t = std::min(t, c);
    }
    return t;
}

PartialOrder PartialOrder::from_pairs(int n,
                                      const std::vector<std::pair<int, int>> &less_pairs) {
    if (n < 0 || n > 32) throw std::invalid_argument("PartialOrder: size out of range");
    PartialOrder po;
    po.n = n;
    po.pred.assign(std::size_t(n), 0);
    for (auto [a, b] : less_pairs) { // a < b in the order
        if (a < 0 || a >= n || b < 0 || b >= n)
            throw std::invalid_argument("PartialOrder: pair outside range");
        po.pred[std::size_t(b)] |= std::uint32_t(1) << a;
    }
    // transitive closure; n <= 32 so the fixed point is cheap
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < n; ++i) {
            std::uint32_t before = po.pred[std::size_t(i)];
            std::uint32_t acc = before;
            for (int j = 0; j < n; ++j)
                if (before >> j & 1) acc |= po.pred[std::size_t(j)];
            if (acc != before) {
                po.pred[std::size_t(i)] = acc;
                changed = true;
            }
        }
    }
    for (int i = 0; i < n; ++i)
        if (po.pred[std::size_t(i)] >> i & 1)
            throw std::invalid_argument("PartialOrder: relation contains a cycle");
    return po;
}

std::uint32_t PartialOrder::common_pred(std::uint32_t F) const {
    std::uint32_t acc = n >= 32 ? ~std::uint32_t(0)
                                : (std::uint32_t(1) << n) - 1;
    for (int i = 0; i < n; ++i)
        if (F >> i & 1) acc &= pred[std::size_t(i)];
    if (F == 0) return 0; // nothing lies below every member of an empty set, by convention
    return acc;
}

Rat parse_rational(const std::string &token) {
    auto slash = token.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(token));
        Int num(token.substr(0, slash));
        Int den(token.substr(slash + 1));
        if (den <= 0) throw std::invalid_argument("denominator");
        return Rat(num, den);
    } catch (const std::exception &) {
        throw std::invalid_argument("parse_rational: bad token '" + token + "'");
    }
}

std::string format_rational(const Rat &r) {
    std::ostringstream os;
    os << boost::multiprecision::numerator(r) << '/' << boost::multiprecision::denominator(r);
    return os.str();
}

JointDistribution read_joint(std::istream &in) {
    std::string line;
    JointDistribution j;
    bool have_header = false;
    std::size_t sz = 1;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue; // blank line
        if (!have_header) {
            if (first != "joint")
                throw std::invalid_argument("read_joint: malformed header");
            if (!(ls >> j.arity) || j.arity < 0 || j.arity > 20)
                throw std::invalid_argument("read_joint: bad arity");
            j.ranges.resize(std::size_t(j.arity));
            for (int i = 0; i < j.arity; ++i) {
                if (!(ls >> j.ranges[std::size_t(i)]) || j.ranges[std::size_t(i)] < 1)
                    throw std::invalid_argument("read_joint: bad range");
                sz *= std::size_t(j.ranges[std::size_t(i)]);
                if (sz > (std::size_t(1) << 20))
                    throw std::invalid_argument("read_joint: table too large");
            }
            j.table.assign(sz, Rat(0));
            have_header = true;
            continue;
        }
        std::vector<int> tuple(std::size_t(j.arity));
        std::istringstream es(line);
        for (int i = 0; i < j.arity; ++i)
            if (!(es >> tuple[std::size_t(i)]))
                throw std::invalid_argument("read_joint: truncated entry line");
        std::string ptok;
        if (!(es >> ptok)) throw std::invalid_argument("read_joint: missing probability");
        std::string extra;
        if (es >> extra) throw std::invalid_argument("read_joint: trailing tokens on entry");
        std::size_t idx = j.index_of(tuple);
        if (j.table[idx] != 0)
            throw std::invalid_argument("read_joint: duplicate tuple");
        j.table[idx] = parse_rational(ptok);
    }
    if (!have_header) throw std::invalid_argument("read_joint: empty input");
    j.validate();
    return j;
}

void write_joint(std::ostream &out, const JointDistribution &j) {
    out << "joint " << j.arity;
    for (int r : j.ranges) out << ' ' << r;
    out << '\n';
    for (std::size_t idx = 0; idx < j.table.size(); ++idx) {
        if (j.table[idx] == 0) continue;
        std::vector<int> t = j.tuple_of(idx);
        for (int i = 0; i < j.arity; ++i) out << t[std::size_t(i)] << ' ';
        out << format_rational(j.table[idx]) << '\n';
    }
}

JointDistribution parse_joint(const std::string &text) {
    std::istringstream is(text);
    return read_joint(is);
}

std::string format_joint(const JointDistribution &j) {
    std::ostringstream os;
    write_joint(os, j);
    return os.str();
}

} // namespace cb
