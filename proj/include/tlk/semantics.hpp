#pragma once

#include <cstdlib>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tlk/formula.hpp"
#include "tlk/frame.hpp"

namespace tlk {

struct Model {
    const Frame* frame;
    std::map<int, Mask> valuation;  // variable -> point set
};

inline int default_budget() {
    if (const char* env = std::getenv("TLK_BUDGET")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 24;
}

namespace detail {

// Formula compiled to a postorder op array for fast repeated evaluation.
struct CompiledFormula {
    enum class Op { False, Var, Imp, Box, PastDia };
    struct Node {
        Op op;
        int a = -1, b = -1;  // operand node indices
        int var_slot = -1;   // index into the sorted variable list
    };
    std::vector<Node> nodes;  // last node is the root
    std::vector<int> vars;    // sorted variable indices
};

inline int compile_node(const Formula& f, const std::map<int, int>& slot,
                        std::vector<CompiledFormula::Node>& out) {
    CompiledFormula::Node n{};
    switch (f->kind) {
        case FKind::False:
            n.op = CompiledFormula::Op::False;
            break;
        case FKind::Var:
            n.op = CompiledFormula::Op::Var;
            n.var_slot = slot.at(f->var);
            break;
        case FKind::Imp:
            n.op = CompiledFormula::Op::Imp;
            n.a = compile_node(f->left, slot, out);
            n.b = compile_node(f->right, slot, out);
            break;
        case FKind::Box:
            n.op = CompiledFormula::Op::Box;
            n.a = compile_node(f->left, slot, out);
            break;
        case FKind::PastDia:
            n.op = CompiledFormula::Op::PastDia;
            n.a = compile_node(f->left, slot, out);
            break;
    }
    out.push_back(n);
    return static_cast<int>(out.size()) - 1;
}

inline CompiledFormula compile(const Formula& f) {
    CompiledFormula c;
    for (int v : variables(f)) c.vars.push_back(v);
    std::map<int, int> slot;
    for (size_t i = 0; i < c.vars.size(); ++i) slot[c.vars[i]] = static_cast<int>(i);
    compile_node(f, slot, c.nodes);
    return c;
}

enum class Goal { RefuteAt, SatisfyAt, RefuteFrame };

// Search for the lexicographically least valuation meeting the goal.
// Valuations are ordered by (V(p_i1), V(p_i2), ...) over the sorted variable
// list, sets compared as masks.  Kleene three-valued evaluation over partial
// assignments prunes branches whose outcome is already decided.
class ValuationSearch {
public:
    ValuationSearch(const Frame& fr, const CompiledFormula& c, Goal goal, int x)
        : fr_(fr), c_(c), goal_(goal), x_(x), all_(fr.all_mask()) {
        tmask_.resize(c_.nodes.size());
        fmask_.resize(c_.nodes.size());
        assigned_.assign(c_.vars.size(), 0);
    }

    std::optional<std::vector<Mask>> run() {
        if (dfs(0)) return assigned_;
        return std::nullopt;
    }

private:
    // Evaluate with variables [0, depth) assigned; returns +1 if the goal is
    // certainly met (lex-least completion = all-empty for the rest), -1 if
    // certainly failed for every completion, 0 if undecided.
    int evaluate(size_t depth) {
        for (size_t i = 0; i < c_.nodes.size(); ++i) {
            const auto& n = c_.nodes[i];
            Mask t = 0, f = 0;
            switch (n.op) {
                case CompiledFormula::Op::False:
                    f = all_;
                    break;
                case CompiledFormula::Op::Var:
                    if (static_cast<size_t>(n.var_slot) < depth) {
                        t = assigned_[n.var_slot];
                        f = all_ & ~t;
                    }
                    break;
                case CompiledFormula::Op::Imp:
                    t = fmask_[n.a] | tmask_[n.b];
                    f = tmask_[n.a] & fmask_[n.b];
                    break;
                case CompiledFormula::Op::Box: {
                    Mask at = tmask_[n.a];
                    for (int p = 0; p < fr_.size(); ++p)
                        if ((fr_.succ(p) & ~at) == 0) t |= Mask(1) << p;
                    f = fr_.preimage(fmask_[n.a]);
                    break;
                }
                case CompiledFormula::Op::PastDia: {
                    t = fr_.image(tmask_[n.a]);
                    Mask af = fmask_[n.a];
                    for (int p = 0; p < fr_.size(); ++p)
                        if ((fr_.pred(p) & ~af) == 0) f |= Mask(1) << p;
                    break;
                }
            }
            tmask_[i] = t;
            fmask_[i] = f;
        }
        Mask rt = tmask_.back(), rf = fmask_.back();
        switch (goal_) {
            case Goal::RefuteAt:
                if (has_bit(rf, x_)) return 1;
                if (has_bit(rt, x_)) return -1;
                return 0;
            case Goal::SatisfyAt:
                if (has_bit(rt, x_)) return 1;
                if (has_bit(rf, x_)) return -1;
                return 0;
            case Goal::RefuteFrame:
                if (rf != 0) return 1;
                if ((rt & all_) == all_) return -1;
                return 0;
        }
        return 0;
    }

    bool dfs(size_t depth) {
        int verdict = evaluate(depth);
        if (verdict > 0) {
            for (size_t v = depth; v < assigned_.size(); ++v) assigned_[v] = 0;
            return true;
        }
        if (verdict < 0) return false;
        // verdict 0 implies depth < vars (full assignments are two-valued)
        Mask s = 0;
        for (;;) {
            assigned_[depth] = s;
            if (dfs(depth + 1)) return true;
            if (s == all_) break;
            s = (s - all_) & all_;  // next subset of all_ in ascending order
        }
        return false;
    }

    const Frame& fr_;
    const CompiledFormula& c_;
    Goal goal_;
    int x_;
    Mask all_;
    std::vector<Mask> tmask_, fmask_;
    std::vector<Mask> assigned_;
};

inline std::optional<std::map<int, Mask>> find_valuation(const Frame& fr, const Formula& phi,
                                                         Goal goal, int x, int budget) {
    CompiledFormula c = compile(phi);
    if (static_cast<int>(c.vars.size()) * fr.size() > budget)
        throw error("valuation budget exceeded: " + std::to_string(c.vars.size()) + " vars x " +
                    std::to_string(fr.size()) + " points > " + std::to_string(budget));
    ValuationSearch search(fr, c, goal, x);
    auto res = search.run();
    if (!res) return std::nullopt;
    std::map<int, Mask> out;
    for (size_t i = 0; i < c.vars.size(); ++i) out[c.vars[i]] = (*res)[i];
    return out;
}

}  // namespace detail

// Mask-based model checking: set of points satisfying phi under M's valuation.
inline Mask extension(const Model& m, const Formula& phi) {
    const Frame& fr = *m.frame;
    switch (phi->kind) {
        case FKind::False: return 0;
        case FKind::Var: {
            auto it = m.valuation.find(phi->var);
            if (it == m.valuation.end())
                throw error("valuation missing variable p" + std::to_string(phi->var));
            return it->second;
        }
        case FKind::Imp:
            return (fr.all_mask() & ~extension(m, phi->left)) | extension(m, phi->right);
        case FKind::Box: {
            Mask a = extension(m, phi->left);
            Mask out = 0;
            for (int p = 0; p < fr.size(); ++p)
                if ((fr.succ(p) & ~a) == 0) out |= Mask(1) << p;
            return out;
        }
        case FKind::PastDia:
            return fr.image(extension(m, phi->left));
    }
    return 0;
}

inline bool satisfies(const Model& m, int x, const Formula& phi) {
    if (x < 0 || x >= m.frame->size()) throw error("unknown point index");
    return has_bit(extension(m, phi), x);
}

inline bool satisfies(const Model& m, const std::string& x, const Formula& phi) {
    return satisfies(m, m.frame->index(x), phi);
}

// Counter-valuation: variable -> point ids (in the original frame).
using CounterValuation = std::map<int, std::vector<std::string>>;

namespace detail {

inline CounterValuation name_valuation(const Frame& fr, const std::map<int, Mask>& v) {
    CounterValuation out;
    for (const auto& [var, mask] : v) {
        std::vector<std::string> pts;
        for (int i : mask_to_indices(mask)) pts.push_back(fr.id(i));
        out[var] = pts;
    }
    return out;
}

}  // namespace detail

// Point validity.  Satisfaction at x of a formula of modal degree d depends
// only on the zigzag d-ball of x, so the search runs on that induced ball.
inline std::optional<CounterValuation> valid_at_counter(const Frame& f, int x,
                                                        const Formula& phi,
                                                        int budget = default_budget()) {
    Frame ball = induced_subframe(f, zigzag_ball(f, x, modal_degree(phi)));
    int xb = ball.index(f.id(x));
    auto cex = detail::find_valuation(ball, phi, detail::Goal::RefuteAt, xb, budget);
    if (!cex) return std::nullopt;
    return detail::name_valuation(ball, *cex);
}

inline bool valid_at(const Frame& f, int x, const Formula& phi, int budget = default_budget()) {
    return !valid_at_counter(f, x, phi, budget).has_value();
}

inline bool valid_at(const Frame& f, const std::string& x, const Formula& phi,
                     int budget = default_budget()) {
    return valid_at(f, f.index(x), phi, budget);
}

// Frame validity.
inline std::optional<CounterValuation> valid_counter(const Frame& f, const Formula& phi,
                                                     int budget = default_budget()) {
    auto cex = detail::find_valuation(f, phi, detail::Goal::RefuteFrame, -1, budget);
    if (!cex) return std::nullopt;
    return detail::name_valuation(f, *cex);
}

inline bool valid(const Frame& f, const Formula& phi, int budget = default_budget()) {
    return !valid_counter(f, phi, budget).has_value();
}

// Validity in F^x_omega, decided on the finite fattening F^x_lambda with
// lambda = 2^m + 1 for m = |variables(phi)|: a failing valuation uses at most
// 2^m propositional profiles inside the infinite cluster, so that fattening
// already exhibits any failure, while validity transfers down t-morphically.
inline bool omega_valid(const Frame& f, int x, const Formula& phi,
                        int budget = default_budget()) {
    for (const auto& b : clusters(f).blocks)
        if (b.size() > 1) throw error("omega_valid requires a skeleton frame");
    int m = static_cast<int>(variables(phi).size());
    if (m > 20) throw error("omega_valid: too many variables");
    int lambda = (1 << m) + 1;
    Frame fat = preskeleton(f, x, lambda);
    return valid(fat, phi, budget);
}

inline bool omega_valid(const Frame& f, const std::string& x, const Formula& phi,
                        int budget = default_budget()) {
    return omega_valid(f, f.index(x), phi, budget);
}

}  // namespace tlk
