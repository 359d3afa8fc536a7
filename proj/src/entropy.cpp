#include "cb/entropy.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <sstream>

namespace cb {

static double entropy_of_table(const std::vector<Rat> &probs) {
    long double h = 0;
    for (const Rat &p : probs) {
        if (p == 0) continue; // 0 * log 0 = 0
        h += (long double)rat_to_double(p) * (long double)(-log2_rat(p));
    }
    return double(h);
}

double entropy(const FiniteDistribution &d) {
    d.validate();
    std::vector<Rat> probs;
    probs.reserve(d.outcomes.size());
    for (const auto &[id, p] : d.outcomes) probs.push_back(p);
    return entropy_of_table(probs);
}

double entropy(const JointDistribution &j) { return entropy_of_table(j.table); }

double entropy_marginal(const JointDistribution &j, std::uint32_t mask) {
    return entropy(j.marginal(mask));
}

double binary_entropy(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("binary_entropy: p outside [0,1]");
    if (p == 0.0 || p == 1.0) return 0.0;
    return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

double conditional_entropy(const JointDistribution &j, std::uint32_t A,
                           std::uint32_t B) {
    if (A & B) throw std::invalid_argument("conditional_entropy: masks overlap");
    if (A == 0) return 0.0;
    if (B == 0) return entropy_marginal(j, A);

    // Expectation formula: group the A|B marginal by the B-part and average
    // the per-group entropies.  H(X_A | X_B = b) uses p(a,b)/p(b).
    JointDistribution m = j.marginal(A | B);
    // positions of A-coords and B-coords inside the marginal's coordinates
    std::vector<int> coords;
    for (int i = 0; i < j.arity; ++i)
        if ((A | B) >> i & 1) coords.push_back(i);
    std::map<std::vector<int>, std::vector<Rat>> groups; // b-tuple -> joint probs
    for (std::size_t idx = 0; idx < m.table.size(); ++idx) {
        if (m.table[idx] == 0) continue;
        std::vector<int> t = m.tuple_of(idx);
        std::vector<int> bkey;
        for (std::size_t k = 0; k < coords.size(); ++k)
            if (B >> coords[k] & 1) bkey.push_back(t[k]);
        groups[bkey].push_back(m.table[idx]);
    }
    long double h = 0;
    for (auto &[bkey, cell] : groups) {
        Rat pb = 0;
        for (const Rat &p : cell) pb += p;
        // sum_a p(a,b) * -log2(p(a,b)/p(b)), exact rationals inside the log
        for (const Rat &p : cell) {
            Rat cond = p / pb;
            h += (long double)rat_to_double(p) * (long double)(-log2_rat(cond));
        }
    }
    return double(h);
}

static std::uint32_t full_mask(int arity) {
    return arity >= 32 ? ~std::uint32_t(0) : (std::uint32_t(1) << arity) - 1;
}

CheckResult check_chain_rule(const JointDistribution &j, double tol) {
    double lhs = entropy(j);
    double rhs = 0;
    std::uint32_t prefix = 0;
    for (int i = 0; i < j.arity; ++i) {
        rhs += conditional_entropy(j, std::uint32_t(1) << i, prefix);
        prefix |= std::uint32_t(1) << i;
    }
    CheckResult r;
    r.max_violation = std::fabs(lhs - rhs);
    r.ok = r.max_violation <= tol;
    std::ostringstream os;
    os << "H=" << lhs << " chain-sum=" << rhs;
    r.detail = os.str();
    return r;
}

CheckResult check_subadditivity(const JointDistribution &j, double tol) {
    double lhs = entropy(j);
    double rhs = 0;
    for (int i = 0; i < j.arity; ++i)
        rhs += entropy_marginal(j, std::uint32_t(1) << i);
    CheckResult r;
    r.max_violation = lhs - rhs;
    r.ok = r.max_violation <= tol;
    std::ostringstream os;
    os << "H=" << lhs << " sum-of-singles=" << rhs;
    r.detail = os.str();
    return r;
}

CheckResult check_dropping(const JointDistribution &j, double tol) {
    // every assignment of coordinates to {A, B, C, unused}; 4^arity cases
    CheckResult r;
    std::size_t total = 1;
    for (int i = 0; i < j.arity; ++i) total *= 4;
    for (std::size_t code = 0; code < total; ++code) {
        std::uint32_t A = 0, B = 0, C = 0;
        std::size_t c = code;
        for (int i = 0; i < j.arity; ++i) {
            switch (c & 3) {
                case 1: A |= std::uint32_t(1) << i; break;
                case 2: B |= std::uint32_t(1) << i; break;
                case 3: C |= std::uint32_t(1) << i; break;
                default: break;
            }
            c >>= 2;
        }
        if (A == 0 || C == 0) continue;
        double v = conditional_entropy(j, A, B | C) - conditional_entropy(j, A, B);
        if (v > r.max_violation) {
            r.max_violation = v;
            std::ostringstream os;
            os << "A=" << A << " B=" << B << " C=" << C;
            r.detail = os.str();
        }
    }
    r.ok = r.max_violation <= tol;
    return r;
}

CheckResult check_conditional_variants(const JointDistribution &j, double tol) {
    CheckResult r;
    const std::uint32_t all = full_mask(j.arity);
    auto note = [&r](double v, const std::string &what) {
        if (v > r.max_violation) {
            r.max_violation = v;
            r.detail = what;
        }
    };
    for (std::uint32_t Z = 0; Z <= all; ++Z) {
        std::uint32_t S = all & ~Z;
        if (S == 0) continue;
        double condS = conditional_entropy(j, S, Z);

        // conditional chain rule: H(X_S|Z) = sum over i in S of H(X_i | earlier, Z)
        double chain = 0;
        std::uint32_t prefix = 0;
        for (int i = 0; i < j.arity; ++i) {
            if (!(S >> i & 1)) continue;
            chain += conditional_entropy(j, std::uint32_t(1) << i, prefix | Z);
            prefix |= std::uint32_t(1) << i;
        }
        note(std::fabs(condS - chain), "conditional chain rule");

        // conditional subadditivity: H(X_S|Z) <= sum_i H(X_i|Z)
        double singles = 0;
        for (int i = 0; i < j.arity; ++i)
            if (S >> i & 1) singles += conditional_entropy(j, std::uint32_t(1) << i, Z);
        note(condS - singles, "conditional subadditivity");

        // conditional maximality: for each z with p(z)>0,
        // H(X_S | X_Z = z) <= log2 |support of X_S given z|
        JointDistribution m = j.marginal(S | Z);
        std::vector<int> coords;
        for (int i = 0; i < j.arity; ++i)
            if ((S | Z) >> i & 1) coords.push_back(i);
        std::map<std::vector<int>, std::vector<Rat>> groups;
        for (std::size_t idx = 0; idx < m.table.size(); ++idx) {
            if (m.table[idx] == 0) continue;
            std::vector<int> t = m.tuple_of(idx);
            std::vector<int> zkey;
            for (std::size_t k = 0; k < coords.size(); ++k)
                if (Z >> coords[k] & 1) zkey.push_back(t[k]);
            groups[zkey].push_back(m.table[idx]);
        }
        for (auto &[zkey, cell] : groups) {
            Rat pz = 0;
            for (const Rat &p : cell) pz += p;
            long double h = 0;
            for (const Rat &p : cell) {
                Rat cond = p / pz;
                h += (long double)rat_to_double(cond) * (long double)(-log2_rat(cond));
            }
            note(double(h) - std::log2(double(cell.size())), "conditional maximality");
        }
    }
    r.ok = r.max_violation <= tol;
    return r;
}

CheckResult check_shearer(const JointDistribution &j, const CoverFamily &F,
                          double tol) {
    F.validate();
    if (F.n != j.arity)
        throw std::invalid_argument("check_shearer: family ground size mismatch");
    int t = F.depth();
    if (t == 0)
        throw std::invalid_argument("check_shearer: family does not cover every coordinate");
    double sum = 0;
    for (std::uint32_t m : F.members) sum += entropy_marginal(j, m);
    CheckResult r;
    r.max_violation = entropy(j) - sum / double(t);
    r.ok = r.max_violation <= tol;
    std::ostringstream os;
    os << "t=" << t << " H=" << entropy(j) << " (1/t)sum=" << sum / double(t);
    r.detail = os.str();
    return r;
}

CheckResult check_conditional_shearer(const JointDistribution &j,
                                      const CoverFamily &F, const PartialOrder &ord,
                                      double tol) {
    F.validate();
    if (F.n != j.arity || ord.n != j.arity)
        throw std::invalid_argument("check_conditional_shearer: size mismatch");
    int t = F.depth();
    if (t == 0)
        throw std::invalid_argument("check_conditional_shearer: family does not cover every coordinate");
    double sum = 0;
    for (std::uint32_t m : F.members) {
        std::uint32_t below = ord.common_pred(m) & ~m; // strict, so disjoint anyway
        sum += conditional_entropy(j, m, below);
    }
    CheckResult r;
    r.max_violation = entropy(j) - sum / double(t);
    r.ok = r.max_violation <= tol;
    std::ostringstream os;
    os << "t=" << t << " conditional sum/t=" << sum / double(t);
    r.detail = os.str();
    return r;
}

double binomial_half_entropy(unsigned m) {
    // p_j = C(m,j)/2^m; H = sum_j p_j * (m - log2 C(m,j)), all logs exact-ish
    long double h = 0;
    Int c = 1; // C(m, 0)
    for (unsigned jj = 0; jj <= m; ++jj) {
        long double log2c = jj == 0 ? 0.0L : (long double)log2_int(c);
        long double pj = std::exp2l(log2c - (long double)m);
        h += pj * ((long double)m - log2c);
        if (jj < m) { // advance to C(m, jj+1)
            c *= (m - jj);
            c /= (jj + 1);
        }
    }
    return double(h);
}

CheckResult chernoff_tail_check(unsigned n, double c, double tol) {
    if (c < 0) throw std::invalid_argument("chernoff_tail_check: negative c");
    // tail = sum over j with |2j - n| >= c*sqrt(n) of C(n,j), exact
    Int tail = 0;
    Int binom = 1;
    const double c2n = c * c * double(n);
    for (unsigned jj = 0; jj <= n; ++jj) {
        double dev = 2.0 * double(jj) - double(n);
        if (dev * dev >= c2n - 1e-12) tail += binom;
        if (jj < n) {
            binom *= (n - jj);
            binom /= (jj + 1);
        }
    }
    CheckResult r;
    const double rhs_log2 = 1.0 - c * c / 2.0;
    if (tail == 0) {
        r.max_violation = 0.0;
        r.ok = true;
        r.detail = "empty tail";
        return r;
    }
    double lhs_log2 = log2_int(tail) - double(n);
    r.max_violation = lhs_log2 - rhs_log2;
    r.ok = r.max_violation <= tol;
    std::ostringstream os;
    os << "log2 tail=" << lhs_log2 << " bound=" << rhs_log2;
    r.detail = os.str();
    return r;
}

CheckResult check_surprise_axioms(const std::vector<double> &sample, double tol) {
    CheckResult r;
    auto note = [&r](double v, const std::string &what) {
        if (v > r.max_violation) {
            r.max_violation = v;
            r.detail = what;
        }
    };
    auto S = [](double p) { return -std::log2(p); };
    note(std::fabs(S(1.0)), "S(1) != 0");
    note(std::fabs(S(0.5) - 1.0), "S(1/2) != 1");
    for (double p : sample) {
        if (p <= 0.0 || p > 1.0)
            throw std::invalid_argument("check_surprise_axioms: probabilities must be in (0,1]");
        for (double q : sample) {
            if (p < q) note(S(q) - S(p), "antitone");   // p < q must give S(p) > S(q)
            note(std::fabs(S(p * q) - S(p) - S(q)), "additivity over products");
        }
    }
    r.ok = r.max_violation <= tol;
    return r;
}

} // namespace cb
