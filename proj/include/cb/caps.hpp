#pragma once
/*
 * Central size caps for the exponential-time routines.  Each cap can be
 * overridden through the environment (CB_CAP_<NAME>), which is occasionally
 * useful for experiments; the defaults are the supported contract and keep
 * every sweep at interactive speed.
 */

#include <cstdlib>
#include <string>

namespace cb {

inline long cap_override(const char *name, long dflt) {
    std::string var = std::string("CB_CAP_") + name;
    if (const char *v = std::getenv(var.c_str())) {
        try {
            return std::stol(v);
        } catch (const std::exception &) {
            return dflt;
        }
    }
    return dflt;
}

struct Caps {
    long canon_n;          // canonical form / automorphisms (full search)
    long enum_regular_n;   // regular-graph enumeration
    long enum_bip_half;    // bipartite-regular enumeration, per class size
    long enum_all_n;       // all-isomorphism-class enumeration
    long permanent_n;      // permanent (Ryser)
    long matching_n;       // matching / independent-set recursions
    long cycle_n;          // cycle-cover enumeration
    long distinguish_n;    // distinguishing-family injectivity scan
    long mindist_n;        // exhaustive minimal distinguishing family
    long root_lcm;         // exponent cap in exact root-product comparisons
};

inline const Caps &caps() {
    static const Caps c{
        cap_override("CANON_N", 10),
        cap_override("ENUM_REGULAR_N", 10),
        cap_override("ENUM_BIP_HALF", 7),
        cap_override("ENUM_ALL_N", 8),
        cap_override("PERMANENT_N", 24),
        cap_override("MATCHING_N", 28),
        cap_override("CYCLE_N", 14),
        cap_override("DISTINGUISH_N", 22),
        cap_override("MINDIST_N", 6),
        cap_override("ROOT_LCM", 1000000),
    };
    return c;
}

} // namespace cb
