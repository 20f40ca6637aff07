#pragma once

#include <optional>
#include <vector>

#include "tlk/formula.hpp"
#include "tlk/frame.hpp"
#include "tlk/morphism.hpp"
#include "tlk/semantics.hpp"

namespace tlk {

// Enumeration of the zigzag k-ball of y: BFS layers from y, declared point
// order inside each layer; index 0 is y itself.  Fixes the Jankov formula
// bit-for-bit.
inline std::vector<int> jankov_enumeration(const Frame& g, int y, int k) {
    std::vector<int> order;
    Mask seen = Mask(1) << y;
    order.push_back(y);
    Mask frontier = seen;
    for (int step = 0; step < k; ++step) {
        Mask next = (g.image(frontier) | g.preimage(frontier)) & ~seen;
        for (int i : mask_to_indices(next)) order.push_back(i);
        seen |= next;
        frontier = next;
        if (!next) break;
    }
    return order;
}

// Jankov formula J^k(G,y) over variables p_0..p_{n-1}, n = |ball|:
//   (1) p_0 ∧ ∇^k(p_0 ∨ … ∨ p_{n-1})
//   (2) ∇^k(p_i → ¬p_j)                                  for all i ≠ j
//   (3) ∇^{k-1}((p_i→◇p_j) ∧ (p_j→♦p_i))                 whenever R x_i x_j
//   (4) ∇^{k-1}((p_i→¬◇p_j) ∧ (p_j→¬♦p_i))               whenever x_j ∉ R[x_i]
inline Formula jankov(const Frame& g, int y, int k) {
    if (k < 1) throw error("jankov requires k >= 1");
    std::vector<int> en = jankov_enumeration(g, y, k);
    int n = static_cast<int>(en.size());
    std::vector<Formula> conjuncts;

    std::vector<Formula> ps;
    for (int i = 0; i < n; ++i) ps.push_back(f_var(i));
    conjuncts.push_back(f_and(f_var(0), schema_nabla(k, f_disj(ps))));

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j)
                conjuncts.push_back(schema_nabla(k, f_imp(f_var(i), f_not(f_var(j)))));

    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Formula body;
            if (g.rel(en[i], en[j]))
                body = f_and(f_imp(f_var(i), f_fdia(f_var(j))),
                             f_imp(f_var(j), f_pdia(f_var(i))));
            else
                body = f_and(f_imp(f_var(i), f_not(f_fdia(f_var(j)))),
                             f_imp(f_var(j), f_not(f_pdia(f_var(i)))));
            conjuncts.push_back(schema_nabla(k - 1, body));
        }

    return f_conj(conjuncts);
}

inline Formula jankov(const Frame& g, const std::string& y, int k) {
    return jankov(g, g.index(y), k);
}

// F,x refutes ¬J^k(G,y) iff some valuation makes J^k(G,y) true at x; by the
// correspondence lemma this holds iff a k-t-morphism (F,x) -> (G,y) exists.
inline bool jankov_refuted(const Frame& f, int x, const Frame& g, int y, int k,
                           int budget = default_budget()) {
    Formula j = jankov(g, y, k);
    Frame ball = induced_subframe(f, zigzag_ball(f, x, modal_degree(j)));
    int xb = ball.index(f.id(x));
    auto v = detail::find_valuation(ball, j, detail::Goal::SatisfyAt, xb, budget);
    return v.has_value();
}

inline bool jankov_refuted(const Frame& f, const std::string& x, const Frame& g,
                           const std::string& y, int k, int budget = default_budget()) {
    return jankov_refuted(f, f.index(x), g, g.index(y), k, budget);
}

}  // namespace tlk
