#include "cb/lp.hpp"

#include <stdexcept>

namespace cb {

void LinearProgram::add_row(std::vector<Rat> a, Rel r, Rat b) {
    rows.push_back(std::move(a));
    rel.push_back(r);
    rhs.push_back(std::move(b));
}

void LinearProgram::validate() const {
    if (nvars < 0) throw std::invalid_argument("lp: negative variable count");
    if (rows.size() != rhs.size() || rows.size() != rel.size())
        throw std::invalid_argument("lp: ragged constraint data");
    if (int(objective.size()) != nvars)
        throw std::invalid_argument("lp: objective length mismatch");
    for (const auto &r : rows)
        if (int(r.size()) != nvars) throw std::invalid_argument("lp: row length mismatch");
}

namespace {

struct Tableau {
    int m = 0, width = 0;               // width excludes the rhs column
    std::vector<std::vector<Rat>> T;    // m rows of width+1 entries
    std::vector<int> basis;             // basis[i] = column basic in row i
    std::vector<Rat> zrow;              // width+1: reduced costs, then z value

    void pivot(int r, int col) {
        Rat p = T[std::size_t(r)][std::size_t(col)];
        for (Rat &v : T[std::size_t(r)]) v /= p;
        for (int i = 0; i < m; ++i) {
            if (i == r || T[std::size_t(i)][std::size_t(col)] == 0) continue;
            Rat f = T[std::size_t(i)][std::size_t(col)];
            for (int j = 0; j <= width; ++j)
                T[std::size_t(i)][std::size_t(j)] -= f * T[std::size_t(r)][std::size_t(j)];
        }
        if (zrow[std::size_t(col)] != 0) {
            Rat f = zrow[std::size_t(col)];
            for (int j = 0; j <= width; ++j)
                zrow[std::size_t(j)] -= f * T[std::size_t(r)][std::size_t(j)];
        }
        basis[std::size_t(r)] = col;
    }

    // Bland's rule end to end: entering = lowest improving column, leaving =
    // lowest basis index among minimal ratios.  Returns false on unbounded.
    bool iterate(int allowed_width) {
        for (;;) {
            int col = -1;
            for (int j = 0; j < allowed_width; ++j)
                if (zrow[std::size_t(j)] < 0) { col = j; break; }
            if (col < 0) return true;
            int prow = -1;
            Rat best = 0;
            for (int i = 0; i < m; ++i) {
                const Rat &a = T[std::size_t(i)][std::size_t(col)];
                if (a <= 0) continue;
                Rat ratio = T[std::size_t(i)][std::size_t(width)] / a;
                if (prow < 0 || ratio < best ||
                    (ratio == best && basis[std::size_t(i)] < basis[std::size_t(prow)])) {
                    prow = i;
                    best = ratio;
                }
            }
            if (prow < 0) return false;
            pivot(prow, col);
        }
    }
};

} // namespace

LpSolution solve_lp(const LinearProgram &lp) {
    lp.validate();
    const int n = lp.nvars;
    const int m = int(lp.rows.size());

    // normalized copies with nonnegative right-hand sides
    std::vector<std::vector<Rat>> rows = lp.rows;
    std::vector<Rat> rhs = lp.rhs;
    std::vector<Rel> rel = lp.rel;
    for (int i = 0; i < m; ++i) {
        if (rhs[std::size_t(i)] >= 0) continue;
        for (Rat &v : rows[std::size_t(i)]) v = -v;
        rhs[std::size_t(i)] = -rhs[std::size_t(i)];
        if (rel[std::size_t(i)] == Rel::LessEq) rel[std::size_t(i)] = Rel::GreaterEq;
        else if (rel[std::size_t(i)] == Rel::GreaterEq) rel[std::size_t(i)] = Rel::LessEq;
    }

    int nslack = 0, nart = 0;
    for (Rel r : rel) {
        if (r != Rel::Eq) ++nslack;
        if (r != Rel::LessEq) ++nart;
    }

    Tableau tab;
    tab.m = m;
    tab.width = n + nslack + nart;
    tab.T.assign(std::size_t(m), std::vector<Rat>(std::size_t(tab.width) + 1, Rat(0)));
    tab.basis.assign(std::size_t(m), -1);
    {
        int snext = n, anext = n + nslack;
        for (int i = 0; i < m; ++i) {
            auto &row = tab.T[std::size_t(i)];
            for (int j = 0; j < n; ++j) row[std::size_t(j)] = rows[std::size_t(i)][std::size_t(j)];
            row[std::size_t(tab.width)] = rhs[std::size_t(i)];
            switch (rel[std::size_t(i)]) {
            case Rel::LessEq:
                row[std::size_t(snext)] = 1;
                tab.basis[std::size_t(i)] = snext++;
                break;
            case Rel::GreaterEq:
                row[std::size_t(snext++)] = -1;
                row[std::size_t(anext)] = 1;
                tab.basis[std::size_t(i)] = anext++;
                break;
            case Rel::Eq:
                row[std::size_t(anext)] = 1;
                tab.basis[std::size_t(i)] = anext++;
                break;
            }
        }
    }

    LpSolution sol;
    if (nart > 0) {
        // phase 1: maximize -(sum of artificials)
        tab.zrow.assign(std::size_t(tab.width) + 1, Rat(0));
        for (int i = 0; i < m; ++i) {
            if (tab.basis[std::size_t(i)] < n + nslack) continue;
            for (int j = 0; j <= tab.width; ++j)
                tab.zrow[std::size_t(j)] -= tab.T[std::size_t(i)][std::size_t(j)];
        }
        for (int j = n + nslack; j < tab.width; ++j) tab.zrow[std::size_t(j)] += 1;
        tab.iterate(tab.width); // bounded above by 0, cannot be unbounded
        if (tab.zrow[std::size_t(tab.width)] < 0) return sol; // infeasible
        // pivot surviving artificials out of the basis, dropping redundant rows
        for (int i = tab.m - 1; i >= 0; --i) {
            if (tab.basis[std::size_t(i)] < n + nslack) continue;
            int col = -1;
            for (int j = 0; j < n + nslack; ++j)
                if (tab.T[std::size_t(i)][std::size_t(j)] != 0) { col = j; break; }
            if (col >= 0) {
                tab.pivot(i, col);
            } else {
                tab.T.erase(tab.T.begin() + i);
                tab.basis.erase(tab.basis.begin() + i);
                --tab.m;
            }
        }
    }

    // phase 2 with the real objective (artificial columns stay out of play)
    sol.feasible = true;
    auto cost = [&](int j) -> Rat { return j < n ? lp.objective[std::size_t(j)] : Rat(0); };
    tab.zrow.assign(std::size_t(tab.width) + 1, Rat(0));
    for (int j = 0; j < n; ++j) tab.zrow[std::size_t(j)] = -cost(j);
    for (int i = 0; i < tab.m; ++i) {
        Rat cb = cost(tab.basis[std::size_t(i)]);
        if (cb == 0) continue;
        for (int j = 0; j <= tab.width; ++j)
            tab.zrow[std::size_t(j)] += cb * tab.T[std::size_t(i)][std::size_t(j)];
    }
    if (!tab.iterate(n + nslack)) return sol; // feasible but unbounded
    sol.bounded = true;
    sol.x.assign(std::size_t(n), Rat(0));
    for (int i = 0; i < tab.m; ++i)
        if (tab.basis[std::size_t(i)] < n)
            sol.x[std::size_t(tab.basis[std::size_t(i)])] =
                tab.T[std::size_t(i)][std::size_t(tab.width)];
    sol.value = 0;
    for (int j = 0; j < n; ++j) sol.value += lp.objective[std::size_t(j)] * sol.x[std::size_t(j)];
    return sol;
}

} // namespace cb
