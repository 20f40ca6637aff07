#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tlk/frame.hpp"  // for tlk::error

namespace tlk {

// Finite anchored binary sequence: a partial function on the interval
// [anchor, anchor+len-1].
struct BitSeq {
    long long anchor = 0;
    std::vector<int> bits;

    long long lo() const { return anchor; }
    long long hi() const { return anchor + static_cast<long long>(bits.size()) - 1; }
    size_t size() const { return bits.size(); }
    bool empty() const { return bits.empty(); }
    int at(long long pos) const {
        if (pos < lo() || pos > hi()) throw error("BitSeq: position outside domain");
        return bits[static_cast<size_t>(pos - anchor)];
    }
    bool operator==(const BitSeq& o) const { return anchor == o.anchor && bits == o.bits; }

    std::string to_string() const {
        std::string s;
        for (int b : bits) s += static_cast<char>('0' + b);
        return s;
    }
};

inline BitSeq bitseq(const std::string& bits, long long anchor = 0) {
    BitSeq s;
    s.anchor = anchor;
    for (char c : bits) {
        if (c != '0' && c != '1') throw error("BitSeq: bits must be 0/1");
        s.bits.push_back(c - '0');
    }
    return s;
}

inline BitSeq complement(BitSeq a) {
    for (int& b : a.bits) b = 1 - b;
    return a;
}

// Concatenation with at most one dagger mark.  A plain concatenation is
// anchored at 0; with a dagger on part m the result's anchor is chosen so
// part m keeps its own domain (the displayed formulas, extended
// left-associatively).
inline BitSeq concat(const std::vector<BitSeq>& parts,
                     std::optional<size_t> dagger = std::nullopt) {
    BitSeq out;
    out.anchor = 0;
    if (dagger && *dagger >= parts.size()) throw error("concat: dagger index out of range");
    long long before_marked = 0;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (dagger && i < *dagger) before_marked += static_cast<long long>(parts[i].size());
        for (int b : parts[i].bits) out.bits.push_back(b);
    }
    if (dagger) out.anchor = parts[*dagger].anchor - before_marked;
    return out;
}

// Least translation offset t such that shifting gamma by t lands inside beta
// with matching bits: gamma(i) = beta(i + t) for all i in gamma's domain.
inline std::optional<long long> embeds(const BitSeq& gamma, const BitSeq& beta) {
    if (gamma.empty()) return 0;
    if (gamma.size() > beta.size()) return std::nullopt;
    long long min_t = beta.lo() - gamma.lo();
    long long max_t = beta.hi() - gamma.hi();
    for (long long t = min_t; t <= max_t; ++t) {
        bool ok = true;
        for (long long i = gamma.lo(); i <= gamma.hi() && ok; ++i)
            if (gamma.at(i) != beta.at(i + t)) ok = false;
        if (ok) return t;
    }
    return std::nullopt;
}

// All matching offsets (for the anchor-uniqueness checks).
inline std::vector<long long> all_embeddings(const BitSeq& gamma, const BitSeq& beta) {
    std::vector<long long> out;
    if (gamma.empty() || gamma.size() > beta.size()) return out;
    for (long long t = beta.lo() - gamma.lo(); t <= beta.hi() - gamma.hi(); ++t) {
        bool ok = true;
        for (long long i = gamma.lo(); i <= gamma.hi() && ok; ++i)
            if (gamma.at(i) != beta.at(i + t)) ok = false;
        if (ok) out.push_back(t);
    }
    return out;
}

// Generalized Thue-Morse stages:
//   chi_0       = <0,0,1> anchored at 0
//   chi_{2i+1}  = chi_{2i}^dagger * <f(2i)>   * complement(chi_{2i})
//   chi_{2i+2}  = complement(chi_{2i+1}) * <f(2i+1)> * chi_{2i+1}^dagger
inline BitSeq gtm(const std::vector<int>& fbits, int stage) {
    if (stage < 0) throw error("gtm: negative stage");
    if (stage > static_cast<int>(fbits.size()))
        throw error("gtm: stage " + std::to_string(stage) + " needs " +
                    std::to_string(stage) + " control bits, got " +
                    std::to_string(fbits.size()));
    BitSeq chi = bitseq("001", 0);
    for (int i = 0; i < stage; ++i) {
        BitSeq ins;
        ins.bits.push_back(fbits[i]);
        if (i % 2 == 0)
            chi = concat({chi, ins, complement(chi)}, 0);
        else
            chi = concat({complement(chi), ins, chi}, 2);
    }
    return chi;
}

inline BitSeq gtm(const std::string& fbits, int stage) {
    std::vector<int> v;
    for (char c : fbits) {
        if (c != '0' && c != '1') throw error("gtm: control bits must be 0/1");
        v.push_back(c - '0');
    }
    return gtm(v, stage);
}

struct DissimilarityWitness {
    int index;       // least disagreement position of f and g
    BitSeq witness;  // chi^f_{index+2}
    bool verified;   // witness does not embed into gtm(g, index+4)
};

// The non-embeddable block of the dissimilarity lemma: if f and g first
// disagree at i, then chi^f_{i+2} does not embed into chi^g.
inline DissimilarityWitness dissimilarity_witness(const std::string& fbits,
                                                  const std::string& gbits, int depth) {
    int limit = std::min<int>({depth, static_cast<int>(fbits.size()),
                               static_cast<int>(gbits.size())});
    int idx = -1;
    for (int i = 0; i < limit; ++i)
        if (fbits[i] != gbits[i]) { idx = i; break; }
    if (idx < 0) throw error("dissimilarity_witness: prefixes agree to depth");
    BitSeq w = gtm(fbits, idx + 2);
    BitSeq window = gtm(gbits, idx + 4);
    bool ok = !embeds(w, window).has_value();
    return DissimilarityWitness{idx, w, ok};
}

}  // namespace tlk
