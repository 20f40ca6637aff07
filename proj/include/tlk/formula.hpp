#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "tlk/frame.hpp"  // for tlk::error

namespace tlk {

// Tense formulas over the primitives ⊥, →, □ (future box), ♦ (past diamond).
// Sugar connectives are expanded to primitives at construction time.
enum class FKind { False, Var, Imp, Box, PastDia };

struct FNode;
using Formula = std::shared_ptr<const FNode>;

struct FNode {
    FKind kind;
    int var = -1;        // for Var
    Formula left, right; // left used by Box/PastDia; both by Imp
};

inline Formula f_false() {
    static Formula f = std::make_shared<FNode>(FNode{FKind::False, -1, nullptr, nullptr});
    return f;
}
inline Formula f_var(int i) {
    if (i < 0) throw error("negative variable index");
    return std::make_shared<FNode>(FNode{FKind::Var, i, nullptr, nullptr});
}
inline Formula f_imp(Formula a, Formula b) {
    return std::make_shared<FNode>(FNode{FKind::Imp, -1, std::move(a), std::move(b)});
}
inline Formula f_box(Formula a) {
    return std::make_shared<FNode>(FNode{FKind::Box, -1, std::move(a), nullptr});
}
inline Formula f_pdia(Formula a) {
    return std::make_shared<FNode>(FNode{FKind::PastDia, -1, std::move(a), nullptr});
}

// Derived connectives.
inline Formula f_not(Formula a) { return f_imp(std::move(a), f_false()); }
inline Formula f_top() { return f_not(f_false()); }
inline Formula f_or(Formula a, Formula b) { return f_imp(f_not(std::move(a)), std::move(b)); }
inline Formula f_and(Formula a, Formula b) {
    return f_not(f_imp(std::move(a), f_not(std::move(b))));
}
inline Formula f_fdia(Formula a) { return f_not(f_box(f_not(std::move(a)))); }  // ◇
inline Formula f_pbox(Formula a) { return f_not(f_pdia(f_not(std::move(a)))); } // ■

inline Formula f_conj(const std::vector<Formula>& parts) {
    if (parts.empty()) throw error("empty conjunction");
    Formula acc = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) acc = f_and(acc, parts[i]);
    return acc;
}
inline Formula f_disj(const std::vector<Formula>& parts) {
    if (parts.empty()) throw error("empty disjunction");
    Formula acc = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) acc = f_or(acc, parts[i]);
    return acc;
}

inline bool equal(const Formula& a, const Formula& b) {
    if (a == b) return true;
    if (a->kind != b->kind) return false;
    switch (a->kind) {
        case FKind::False: return true;
        case FKind::Var: return a->var == b->var;
        case FKind::Imp: return equal(a->left, b->left) && equal(a->right, b->right);
        case FKind::Box:
        case FKind::PastDia: return equal(a->left, b->left);
    }
    return false;
}

inline int complexity(const Formula& f) {
    switch (f->kind) {
        case FKind::False:
        case FKind::Var: return 0;
        case FKind::Imp: return std::max(complexity(f->left), complexity(f->right)) + 1;
        case FKind::Box:
        case FKind::PastDia: return complexity(f->left) + 1;
    }
    return 0;
}

inline int modal_degree(const Formula& f) {
    switch (f->kind) {
        case FKind::False:
        case FKind::Var: return 0;
        case FKind::Imp: return std::max(modal_degree(f->left), modal_degree(f->right));
        case FKind::Box:
        case FKind::PastDia: return modal_degree(f->left) + 1;
    }
    return 0;
}

inline void collect_variables(const Formula& f, std::set<int>& out) {
    switch (f->kind) {
        case FKind::False: return;
        case FKind::Var: out.insert(f->var); return;
        case FKind::Imp:
            collect_variables(f->left, out);
            collect_variables(f->right, out);
            return;
        case FKind::Box:
        case FKind::PastDia: collect_variables(f->left, out); return;
    }
}

inline std::set<int> variables(const Formula& f) {
    std::set<int> out;
    collect_variables(f, out);
    return out;
}

inline void collect_subformulas(const Formula& f, std::vector<Formula>& out) {
    for (const auto& g : out)
        if (equal(g, f)) return;
    out.push_back(f);
    switch (f->kind) {
        case FKind::False:
        case FKind::Var: return;
        case FKind::Imp:
            collect_subformulas(f->left, out);
            collect_subformulas(f->right, out);
            return;
        case FKind::Box:
        case FKind::PastDia: collect_subformulas(f->left, out); return;
    }
}

inline std::vector<Formula> subformulas(const Formula& f) {
    std::vector<Formula> out;
    collect_subformulas(f, out);
    return out;
}

struct Analysis {
    int complexity;
    int modal_degree;
    std::set<int> variables;
    std::vector<Formula> subformulas;
};

inline Analysis analyze(const Formula& f) {
    return Analysis{complexity(f), modal_degree(f), variables(f), subformulas(f)};
}

inline Formula substitute(const Formula& f, const std::map<int, Formula>& s) {
    switch (f->kind) {
        case FKind::False: return f;
        case FKind::Var: {
            auto it = s.find(f->var);
            return it == s.end() ? f : it->second;
        }
        case FKind::Imp: return f_imp(substitute(f->left, s), substitute(f->right, s));
        case FKind::Box: return f_box(substitute(f->left, s));
        case FKind::PastDia: return f_pdia(substitute(f->left, s));
    }
    return f;
}

// ---------------------------------------------------------------------------
// Text syntax.  Render emits fully parenthesized primitive text; parse
// accepts the full sugared grammar:
//   []  box   <>  future diamond   [p] past box   <p> past diamond
//   ~ negation, & conjunction, | disjunction, -> implication (right assoc)
//   precedence: unary > & > | > ->;  atoms p<digits>, constants T, F.
// ---------------------------------------------------------------------------

inline std::string render_formula(const Formula& f) {
    switch (f->kind) {
        case FKind::False: return "F";
        case FKind::Var: return "p" + std::to_string(f->var);
        case FKind::Imp:
            return "(" + render_formula(f->left) + " -> " + render_formula(f->right) + ")";
        case FKind::Box: return "([]" + render_formula(f->left) + ")";
        case FKind::PastDia: return "(<p>" + render_formula(f->left) + ")";
    }
    return "F";
}

namespace detail {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    Formula parse() {
        Formula f = imp();
        skip_ws();
        if (pos_ != s_.size()) fail("unexpected trailing input");
        return f;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw error("syntax error at position " + std::to_string(pos_) + ": " + msg);
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (s_.compare(pos_, tok.size(), tok) == 0) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }
    bool peek(const std::string& tok) {
        skip_ws();
        return s_.compare(pos_, tok.size(), tok) == 0;
    }

    Formula imp() {
        Formula a = disj();
        if (eat("->")) return f_imp(a, imp());  // right associative
        return a;
    }
    Formula disj() {
        Formula a = conj();
        while (true) {
            skip_ws();
            // '|' but not part of '->' lookahead issues: '|' is a single char
            if (pos_ < s_.size() && s_[pos_] == '|') {
                ++pos_;
                a = f_or(a, conj());
            } else {
                return a;
            }
        }
    }
    Formula conj() {
        Formula a = unary();
        while (true) {
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == '&') {
                ++pos_;
                a = f_and(a, unary());
            } else {
                return a;
            }
        }
    }
    Formula unary() {
        if (eat("~")) return f_not(unary());
        if (eat("[]")) return f_box(unary());
        if (eat("[p]")) return f_pbox(unary());
        if (eat("<>")) return f_fdia(unary());
        if (eat("<p>")) return f_pdia(unary());
        return atom();
    }
    Formula atom() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Formula a = imp();
            if (!eat(")")) fail("expected ')'");
            return a;
        }
        if (c == 'T') { ++pos_; return f_top(); }
        if (c == 'F') { ++pos_; return f_false(); }
        if (c == 'p') {
            size_t start = ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == start) fail("expected digits after 'p'");
            return f_var(std::stoi(s_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(const std::string& text) {
    return detail::Parser(text).parse();
}

// ---------------------------------------------------------------------------
// Axiom schemas.
// ---------------------------------------------------------------------------

// Δ^n: Δ^0 φ = φ;  Δ^{k+1} φ = Δ^k φ ∨ ◇Δ^k φ ∨ ♦Δ^k φ.
inline Formula schema_delta(int n, Formula phi) {
    if (n < 0) throw error("delta requires n >= 0");
    Formula acc = std::move(phi);
    for (int k = 0; k < n; ++k) acc = f_disj({acc, f_fdia(acc), f_pdia(acc)});
    return acc;
}

// ∇^n φ = ¬Δ^n ¬φ.
inline Formula schema_nabla(int n, Formula phi) {
    return f_not(schema_delta(n, f_not(std::move(phi))));
}

// tab_n = ¬(Δ^n ψ_0 ∧ … ∧ Δ^n ψ_n), ψ_i = ¬p_0 ∧ … ∧ ¬p_{i-1} ∧ p_i.
inline Formula schema_tab(int n) {
    if (n < 1) throw error("tab requires n >= 1");
    std::vector<Formula> parts;
    for (int i = 0; i <= n; ++i) {
        std::vector<Formula> lits;
        for (int j = 0; j < i; ++j) lits.push_back(f_not(f_var(j)));
        lits.push_back(f_var(i));
        parts.push_back(schema_delta(n, f_conj(lits)));
    }
    return f_not(f_conj(parts));
}

// bd_1 = ◇□p_0 → p_0;  bd_{k+1} = ◇(□p_k ∧ ¬bd_k) → p_k.
inline Formula schema_bd(int n) {
    if (n < 1) throw error("bd requires n >= 1");
    Formula acc = f_imp(f_fdia(f_box(f_var(0))), f_var(0));
    for (int k = 1; k < n; ++k)
        acc = f_imp(f_fdia(f_and(f_box(f_var(k)), f_not(acc))), f_var(k));
    return acc;
}

// bz_n = Δ^{n+1} p_0 → Δ^n p_0.
inline Formula schema_bz(int n) {
    if (n < 1) throw error("bz requires n >= 1");
    return f_imp(schema_delta(n + 1, f_var(0)), schema_delta(n, f_var(0)));
}

// bw^+_n = ⋀_{i≤n} ◇p_i → ⋁_{i≠j≤n} ◇(p_i ∧ (p_j ∨ ◇p_j));  bw^- is the ♦ dual.
inline Formula schema_bw(int n, bool forward) {
    if (n < 1) throw error("bw requires n >= 1");
    auto dia = [&](Formula a) { return forward ? f_fdia(std::move(a)) : f_pdia(std::move(a)); };
    std::vector<Formula> ante;
    for (int i = 0; i <= n; ++i) ante.push_back(dia(f_var(i)));
    std::vector<Formula> cons;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j) {
            if (i == j) continue;
            cons.push_back(dia(f_and(f_var(i), f_or(f_var(j), dia(f_var(j))))));
        }
    return f_imp(f_conj(ante), f_disj(cons));
}

inline Formula schema_bw_plus(int n) { return schema_bw(n, true); }
inline Formula schema_bw_minus(int n) { return schema_bw(n, false); }

// alt^+_n = □p_0 ∨ □(p_0→p_1) ∨ … ∨ □(p_0∧…∧p_{n-1} → p_n);  alt^- with ■.
inline Formula schema_alt(int n, bool forward) {
    if (n < 1) throw error("alt requires n >= 1");
    auto box = [&](Formula a) { return forward ? f_box(std::move(a)) : f_pbox(std::move(a)); };
    std::vector<Formula> parts;
    parts.push_back(box(f_var(0)));
    for (int k = 1; k <= n; ++k) {
        std::vector<Formula> ante;
        for (int j = 0; j < k; ++j) ante.push_back(f_var(j));
        parts.push_back(box(f_imp(f_conj(ante), f_var(k))));
    }
    return f_disj(parts);
}

inline Formula schema_alt_plus(int n) { return schema_alt(n, true); }
inline Formula schema_alt_minus(int n) { return schema_alt(n, false); }

inline Formula schema_grz() {
    Formula p = f_var(0);
    return f_imp(f_box(f_imp(f_box(f_imp(p, f_box(p))), p)), p);
}
inline Formula schema_T() { return f_imp(f_box(f_var(0)), f_var(0)); }
inline Formula schema_4() { return f_imp(f_box(f_var(0)), f_box(f_box(f_var(0)))); }
inline Formula schema_s5() { return f_imp(f_fdia(f_var(0)), f_box(f_fdia(f_var(0)))); }
inline Formula schema_lin_plus() {
    return f_imp(f_box(f_fdia(f_var(0))), f_fdia(f_box(f_var(0))));
}
inline Formula schema_lin_minus() {
    return f_imp(f_pbox(f_pdia(f_var(0))), f_pdia(f_pbox(f_var(0))));
}

// Named schema dispatch; omega = true yields ⊤ for the bounded-parameter
// schemas (bd_ω = bz_ω = bw±_ω = ⊤).
inline Formula schema(const std::string& name, int n = -1, bool omega = false) {
    if (omega) {
        if (name == "bd" || name == "bz" || name == "bw+" || name == "bw-" ||
            name == "alt+" || name == "alt-")
            return f_top();
        throw error("omega parameter not defined for schema " + name);
    }
    if (name == "tab") return schema_tab(n);
    if (name == "bd") return schema_bd(n);
    if (name == "bz") return schema_bz(n);
    if (name == "bw+") return schema_bw_plus(n);
    if (name == "bw-") return schema_bw_minus(n);
    if (name == "alt+") return schema_alt_plus(n);
    if (name == "alt-") return schema_alt_minus(n);
    if (name == "grz") return schema_grz();
    if (name == "T") return schema_T();
    if (name == "4") return schema_4();
    if (name == "s5") return schema_s5();
    if (name == "lin+") return schema_lin_plus();
    if (name == "lin-") return schema_lin_minus();
    throw error("unknown schema: " + name);
}

}  // namespace tlk
