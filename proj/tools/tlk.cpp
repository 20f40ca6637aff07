// tlk: command-line workbench for finite tense-logic frames.
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tlk/catalog.hpp"
#include "tlk/enumerate.hpp"
#include "tlk/io.hpp"
#include "tlk/jankov.hpp"
#include "tlk/morphism.hpp"
#include "tlk/semantics.hpp"
#include "tlk/sequence.hpp"
#include "tlk/umbrella.hpp"

using nlohmann::json;
using namespace tlk;

namespace {

FrameDoc load_frame(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open frame file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return frame_from_json_text(ss.str());
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw error("cannot write file: " + path);
    out << text;
}

void emit_frame(const Frame& f, const std::string& out_path,
                const std::optional<std::string>& root = std::nullopt) {
    json j = frame_to_json(f, root);
    if (out_path.empty())
        std::cout << j.dump(2) << "\n";
    else
        write_text(out_path, j.dump(2) + "\n");
}

json metrics_json(const Frame& f) {
    FrameMetrics m = metrics(f);
    json per = json::object();
    for (int i = 0; i < f.size(); ++i)
        per[f.id(i)] = {{"dep", m.per_point[i].dep},
                        {"widF", m.per_point[i].widF},
                        {"widB", m.per_point[i].widB},
                        {"zdg", m.per_point[i].zdg}};
    return {{"dep", m.dep}, {"widF", m.widF}, {"widB", m.widB},
            {"zdg", m.zdg}, {"gir", m.gir},  {"rooted", is_rooted(f)},
            {"points", f.size()}, {"per_point", per}};
}

json valuation_json(const CounterValuation& v) {
    json out = json::object();
    for (const auto& [var, pts] : v) out["p" + std::to_string(var)] = pts;
    return out;
}

json morphism_json(const Frame& from, const Frame& to, const std::vector<int>& map) {
    json out = json::object();
    for (int i = 0; i < from.size(); ++i)
        if (map[i] >= 0) out[from.id(i)] = to.id(map[i]);
    return out;
}

// "bits" or "bits@anchor"
BitSeq parse_anchored(const std::string& text) {
    auto at = text.find('@');
    if (at == std::string::npos) return bitseq(text);
    return bitseq(text.substr(0, at), std::stoll(text.substr(at + 1)));
}

// ---------------------------------------------------------------------------
// papercheck suites
// ---------------------------------------------------------------------------

struct Case {
    std::string id;
    std::string description;
    bool ok = true;
    std::string witness;
};

void note(Case& c, const std::string& msg) {
    c.ok = false;
    if (c.witness.size() < 300) c.witness += (c.witness.empty() ? "" : "; ") + msg;
}

std::vector<std::pair<std::string, Frame>> small_pool(unsigned seed) {
    std::vector<std::pair<std::string, Frame>> pool = {
        {"c1", chain(1)}, {"c2", chain(2)}, {"c3", chain(3)},
        {"G2", garland(2)}, {"H3", hoop(3)}};
    std::mt19937 rng(seed);
    for (int t = 0; t < 10; ++t) {
        int n = 1 + static_cast<int>(rng() % 3);
        std::vector<std::string> pts;
        for (int i = 0; i < n; ++i) pts.push_back(std::to_string(i));
        std::vector<std::pair<std::string, std::string>> edges;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && rng() % 3 == 0) edges.emplace_back(pts[i], pts[j]);
        pool.emplace_back("rnd" + std::to_string(t),
                          Frame(pts, edges, ClosureMode::ReflexiveTransitive));
    }
    return pool;
}

std::vector<Case> suite_jankov(unsigned seed) {
    Case corr{"jankov-correspondence",
              "refuting the negated Jankov formula coincides with k-t-morphism existence"};
    auto pool = small_pool(seed);
    for (const auto& [gn, g] : pool)
        for (int y = 0; y < g.size(); ++y)
            for (int k = 1; k <= 2; ++k)
                for (const auto& [fn, f] : pool)
                    for (int x = 0; x < f.size(); ++x) {
                        bool refuted = jankov_refuted(f, x, g, y, k, 48);
                        bool morph = find_k_t_morphism(f, x, g, y, k).has_value();
                        if (refuted != morph)
                            note(corr, fn + "@" + f.id(x) + " vs " + gn + "@" + g.id(y) +
                                           " k=" + std::to_string(k));
                    }
    Case ident{"jankov-identity", "every pointed frame refutes its own negated Jankov formula"};
    for (const Frame& g : {chain(2), garland(2), hoop(3)})
        for (int y = 0; y < g.size(); ++y)
            if (!jankov_refuted(g, y, g, y, 1, 48)) note(ident, "failed at " + g.id(y));
    Case neg{"jankov-cluster-negative",
             "a reflexive point does not simulate a proper cluster"};
    if (jankov_refuted(chain(1), 0, cluster_frame(1), 0, 1)) note(neg, "unexpected refutation");
    return {corr, ident, neg};
}

std::vector<Case> suite_bounds(unsigned seed) {
    EnumSpec spec;
    spec.max_points = 4;
    auto frames = enumerate_frames(spec);
    Case tab{"tab-correspondence", "tab_n holds at x iff the zigzag n-ball has <= n points"};
    for (const Frame& f : frames)
        for (int n = 1; n <= 2; ++n)
            for (int x = 0; x < f.size(); ++x)
                if (valid_at(f, x, schema_tab(n), 32) !=
                    (popcount(zigzag_ball(f, x, n)) <= n))
                    note(tab, std::to_string(f.size()) + "pt frame, x=" + f.id(x));
    Case bnd{"bounded-correspondences", "bd/bz/bw+/bw- match dep/zdg/widF/widB pointwise"};
    for (const Frame& f : frames) {
        FrameMetrics m = metrics(f);
        for (int n = 1; n <= 2; ++n)
            for (int x = 0; x < f.size(); ++x) {
                if (valid_at(f, x, schema_bd(n), 32) != (m.per_point[x].dep <= n))
                    note(bnd, "bd mismatch");
                if (valid_at(f, x, schema_bz(n), 32) != (m.per_point[x].zdg <= n))
                    note(bnd, "bz mismatch");
                if (valid_at(f, x, schema_bw_plus(n), 32) != (m.per_point[x].widF <= n))
                    note(bnd, "bw+ mismatch");
                if (valid_at(f, x, schema_bw_minus(n), 32) != (m.per_point[x].widB <= n))
                    note(bnd, "bw- mismatch");
            }
    }
    Case adj{"adjunction", "past-diamond and future-box are adjoint at the validity level"};
    std::mt19937 rng(seed + 1);
    for (const Frame& f : {chain(2), garland(2), cluster_frame(1)})
        for (int t = 0; t < 20; ++t) {
            Formula phi = f_var(0), psi = f_var(1);
            for (int step = 0; step < 2; ++step) {
                if (rng() % 2) phi = f_box(phi);
                if (rng() % 2) psi = f_pdia(psi);
            }
            if (valid(f, f_imp(f_pdia(phi), psi), 32) != valid(f, f_imp(phi, f_box(psi)), 32))
                note(adj, "adjunction broken");
        }
    return {tab, bnd, adj};
}

std::vector<Case> suite_s43(unsigned) {
    Case four{"linear-four-types",
              "c-irreducible fattenings of rooted chains are the four linear cluster types"};
    EnumSpec spec;
    spec.max_points = 4;
    spec.gir = 1;
    spec.widF = 1;
    spec.widB = 1;
    spec.rooted_only = true;
    for (const Frame& f : enumerate_frames(spec))
        for (int x = 0; x < f.size(); ++x) {
            int y0 = popcount(f.succ(x)) - 1, y1 = popcount(f.pred(x)) - 1;
            bool expect = y0 <= 1 && y1 <= 1;
            if (is_c_irreducible(f, x).irreducible != expect)
                note(four, "chain " + std::to_string(f.size()) + " x=" + f.id(x));
            if (expect) {
                auto cls = classify_s43(preskeleton(f, x, 1));
                if (cls.tag != S43Class::Tag::Ct) note(four, "classification failed");
            }
        }
    Case sep{"type-separation", "the four types are pairwise non-isomorphic, non-surjectable"};
    std::vector<CtType> ts = {CtType::Circ, CtType::Plus, CtType::Minus, CtType::PlusMinus};
    for (CtType a : ts)
        for (CtType b : ts) {
            if (a == b) continue;
            if (isomorphic(ct(a, 1), ct(b, 1))) note(sep, "iso " + ct_name(a) + ct_name(b));
            if (find_tmorphism_onto(ct(a, 1), ct(b, 1)))
                note(sep, "onto " + ct_name(a) + ct_name(b));
        }
    Case fig{"figure-pair", "the 3-fan fattening is reducible, the 2-fan fattening is not"};
    Frame s1 = build_frame({"r", "m1", "m2", "m3"}, {{"r", "m1"}, {"r", "m2"}, {"r", "m3"}});
    Frame s2 = build_frame({"r", "m1", "m2"}, {{"r", "m1"}, {"r", "m2"}});
    auto red = is_c_irreducible(s1, "m1");
    if (red.irreducible || !red.witness ||
        !isomorphic(*red.witness, preskeleton(s2, "m1", 1)))
        note(fig, "3-fan case");
    if (!is_c_irreducible(s2, "m1").irreducible) note(fig, "2-fan case");
    return {four, sep, fig};
}

std::vector<Case> suite_bs222(unsigned) {
    Case shape{"bounded-shape", "small bounded rooted skeletons are garlands/co-garlands/hoops"};
    EnumSpec spec;
    spec.max_points = 5;
    spec.gir = 1;
    spec.dep = 2;
    spec.widF = 2;
    spec.widB = 2;
    spec.rooted_only = true;
    for (const Frame& f : enumerate_frames(spec))
        if (classify_bs222(f).tag == Bs222Class::Tag::NotApplicable)
            note(shape, std::to_string(f.size()) + "-point frame unmatched");
    Case garl{"garland-irreducibility", "garland fattenings are c-irreducible iff 2m != n"};
    for (int n = 1; n <= 4; ++n)
        for (int m = 0; m <= (n + 1) / 2; ++m) {
            bool expect = 2 * m != n;
            if (is_c_irreducible(garland(n), std::to_string(m)).irreducible != expect)
                note(garl, "G" + std::to_string(n) + " m=" + std::to_string(m));
            if (is_c_irreducible(co_garland(n), std::to_string(m)).irreducible != expect)
                note(garl, "coG" + std::to_string(n) + " m=" + std::to_string(m));
        }
    Case hp{"hoop-counterexample", "the 3-hoop validates tab_4 but is no garland"};
    Frame h3 = hoop(3), g3 = garland(3);
    if (isomorphic(h3, g3)) note(hp, "H3 iso G3");
    if (!valid(h3, schema_tab(4), 32)) note(hp, "tab_4 refuted");
    if (valid(h3, schema_tab(3), 32)) note(hp, "tab_3 validated");
    for (int x = 0; x < h3.size(); ++x)
        if (find_k_t_morphism(h3, x, g3, g3.index("0"), 4)) note(hp, "depth-4 morphism");
    return {shape, garl, hp};
}

std::vector<Case> suite_sequences(unsigned) {
    Case tables{"thue-morse-tables", "stage tables, lengths and nesting"};
    if (gtm("1", 1).to_string() != "0011110") note(tables, "stage 1");
    if (gtm("00", 2).to_string() != "110100100010110") note(tables, "stage 2 (f)");
    if (gtm("11", 2).to_string() != "110000110011110") note(tables, "stage 2 (g)");
    for (int i = 0; i <= 10; ++i) {
        BitSeq cur = gtm("0110010110", i);
        if (static_cast<long long>(cur.size()) != (1LL << (i + 2)) - 1)
            note(tables, "length at stage " + std::to_string(i));
    }
    Case diss{"dissimilarity", "first-disagreement blocks do not embed"};
    if (!dissimilarity_witness("0000", "1111", 4).verified) note(diss, "f vs g");
    if (!dissimilarity_witness("1111", "0000", 4).verified) note(diss, "g vs f");
    Case anchor{"anchor-uniqueness", "embeddings into alpha x complement(alpha) align anchors"};
    for (const std::string& f : {"00", "01", "10", "11"})
        for (int i = 1; i <= 2; ++i)
            for (int x = 0; x <= 1; ++x) {
                BitSeq alpha = gtm(f, i);
                BitSeq beta = concat(
                    {alpha, bitseq(std::string(1, static_cast<char>('0' + x))),
                     complement(alpha)},
                    0);
                for (long long t : all_embeddings(alpha, beta))
                    if (alpha.lo() + t != beta.lo()) note(anchor, "left f=" + f);
                for (long long t : all_embeddings(alpha, complement(beta)))
                    if (alpha.hi() + t != beta.hi()) note(anchor, "right f=" + f);
            }
    return {tables, diss, anchor};
}

std::vector<Case> suite_umbrella(unsigned) {
    std::vector<std::string> words = {"0", "1", "00", "01", "10", "11"};
    Case shape{"umbrella-shape", "umbrella frames are rooted, antisymmetric, bounded"};
    Case corr{"umbrella-intervals", "block-interval isomorphism matches bit embedding"};
    for (const std::string& alpha : words) {
        UmbrellaFrame z = umbrella(alpha);
        UmbrellaReport rep = umbrella_check(z);
        if (!rep.all_ok() || rep.m.dep != 2 || rep.m.widF != 2 || rep.m.widB != 3)
            note(shape, "alpha=" + alpha);
        for (const std::string& gamma : words) {
            if (gamma.size() > alpha.size()) continue;
            bool emb = embeds(bitseq(gamma), bitseq(alpha)).has_value();
            bool iso = false;
            Frame gz = umbrella(gamma).frame;
            for (size_t i = 0; i + gamma.size() <= alpha.size() && !iso; ++i)
                iso = isomorphic(block_interval_subframe(
                                     z, static_cast<long long>(i),
                                     static_cast<long long>(i + gamma.size() - 1)),
                                 gz)
                          .has_value();
            if (emb != iso) note(corr, "alpha=" + alpha + " gamma=" + gamma);
        }
    }
    return {shape, corr};
}

int run_papercheck(const std::string& suite, unsigned seed) {
    std::vector<std::pair<std::string, std::vector<Case> (*)(unsigned)>> suites = {
        {"jankov", suite_jankov},   {"bounds", suite_bounds},
        {"s43", suite_s43},         {"bs222", suite_bs222},
        {"sequences", suite_sequences}, {"umbrella", suite_umbrella}};
    json cases = json::array();
    int pass = 0, failcount = 0;
    for (const auto& [name, fn] : suites) {
        if (suite != "all" && suite != name) continue;
        for (const Case& c : fn(seed)) {
            cases.push_back({{"id", name + "/" + c.id},
                             {"description", c.description},
                             {"status", c.ok ? "pass" : "fail"},
                             {"witness", c.witness}});
            (c.ok ? pass : failcount)++;
            std::cerr << (c.ok ? "PASS " : "FAIL ") << name << "/" << c.id
                      << (c.witness.empty() ? "" : "  [" + c.witness + "]") << "\n";
        }
    }
    json report = {{"suite", suite},
                   {"cases", cases},
                   {"totals", {{"pass", pass}, {"fail", failcount}}}};
    std::cout << report.dump(2) << "\n";
    std::cerr << pass << "/" << (pass + failcount) << " cases passed\n";
    return failcount == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tlk: finite-model workbench for tense logic"};
    app.require_subcommand(1);
    int exit_code = 0;

    // frame: inspect / normalize a frame file
    auto* cmd_frame = app.add_subcommand("frame", "inspect a frame: metrics and normal form");
    std::string frame_in, frame_out, frame_dot;
    cmd_frame->add_option("--in", frame_in, "frame JSON file")->required();
    cmd_frame->add_option("--out", frame_out, "write normalized frame JSON here");
    cmd_frame->add_option("--dot", frame_dot, "write DOT export here");
    cmd_frame->callback([&] {
        FrameDoc doc = load_frame(frame_in);
        json info = {{"frame", frame_to_json(doc.frame, doc.root)},
                     {"metrics", metrics_json(doc.frame)}};
        std::cout << info.dump(2) << "\n";
        if (!frame_out.empty()) emit_frame(doc.frame, frame_out, doc.root);
        if (!frame_dot.empty()) write_text(frame_dot, export_dot(doc.frame));
    });

    // check: validity / satisfaction queries
    auto* cmd_check = app.add_subcommand("check", "check a formula on a frame");
    std::string chk_frame, chk_formula, chk_at, chk_root;
    bool chk_valid = false, chk_omega = false;
    int chk_budget = 0;
    cmd_check->add_option("--frame", chk_frame, "frame JSON file")->required();
    cmd_check->add_option("--formula", chk_formula, "formula text")->required();
    cmd_check->add_option("--at", chk_at, "check point validity at this point");
    cmd_check->add_flag("--valid", chk_valid, "check frame validity");
    cmd_check->add_flag("--omega", chk_omega, "check validity in the omega-fattening");
    cmd_check->add_option("--root", chk_root, "fattened point for --omega");
    cmd_check->add_option("--budget", chk_budget, "valuation budget (vars x points)");
    cmd_check->callback([&] {
        FrameDoc doc = load_frame(chk_frame);
        Formula phi = parse_formula(chk_formula);
        int budget = chk_budget > 0 ? chk_budget : default_budget();
        int modes = (!chk_at.empty()) + chk_valid + chk_omega;
        if (modes != 1) throw error("choose exactly one of --at, --valid, --omega");
        std::optional<CounterValuation> cex;
        bool holds;
        if (chk_valid) {
            cex = valid_counter(doc.frame, phi, budget);
            holds = !cex.has_value();
        } else if (chk_omega) {
            if (chk_root.empty()) throw error("--omega requires --root");
            holds = omega_valid(doc.frame, chk_root, phi, budget);
        } else {
            cex = valid_at_counter(doc.frame, doc.frame.index(chk_at), phi, budget);
            holds = !cex.has_value();
        }
        json out = {{"holds", holds}};
        if (cex) out["counter_valuation"] = valuation_json(*cex);
        std::cout << out.dump(2) << "\n";
        exit_code = holds ? 0 : 1;
    });

    // morphism find
    auto* cmd_morph = app.add_subcommand("morphism", "t-morphism search");
    auto* cmd_find = cmd_morph->add_subcommand("find", "find a morphism between two frames");
    std::string mo_from, mo_to, mo_root, mo_troot;
    int mo_k = 0;
    bool mo_onto = false, mo_iso = false;
    cmd_find->add_option("--from", mo_from, "source frame JSON")->required();
    cmd_find->add_option("--to", mo_to, "target frame JSON")->required();
    cmd_find->add_option("--k", mo_k, "zigzag depth for a partial morphism");
    cmd_find->add_option("--root", mo_root, "source point for --k");
    cmd_find->add_option("--target-root", mo_troot, "target point for --k");
    cmd_find->add_flag("--onto", mo_onto, "search a surjective t-morphism");
    cmd_find->add_flag("--iso", mo_iso, "search an isomorphism");
    cmd_find->callback([&] {
        Frame from = load_frame(mo_from).frame;
        Frame to = load_frame(mo_to).frame;
        std::optional<std::vector<int>> witness;
        if (mo_k > 0) {
            if (mo_root.empty() || mo_troot.empty())
                throw error("--k requires --root and --target-root");
            auto pm = find_k_t_morphism(from, mo_root, to, mo_troot, mo_k);
            if (pm) witness = pm->map;
        } else if (mo_iso) {
            witness = isomorphic(from, to);
        } else if (mo_onto) {
            witness = find_tmorphism_onto(from, to);
        } else {
            throw error("choose one of --onto, --iso, or --k with roots");
        }
        json out = {{"found", witness.has_value()}};
        if (witness) out["map"] = morphism_json(from, to, *witness);
        std::cout << out.dump(2) << "\n";
        exit_code = witness ? 0 : 1;
    });

    // jankov
    auto* cmd_jankov = app.add_subcommand("jankov", "print a Jankov formula");
    std::string jk_frame, jk_root;
    int jk_degree = 1;
    bool jk_negate = false;
    cmd_jankov->add_option("--frame", jk_frame, "frame JSON file")->required();
    cmd_jankov->add_option("--root", jk_root, "target point")->required();
    cmd_jankov->add_option("--degree", jk_degree, "zigzag depth k")->required();
    cmd_jankov->add_flag("--negate", jk_negate, "print the negated formula");
    cmd_jankov->callback([&] {
        Frame g = load_frame(jk_frame).frame;
        Formula j = jankov(g, jk_root, jk_degree);
        if (jk_negate) j = f_not(j);
        std::cout << render_formula(j) << "\n";
    });

    // catalog make / preskeleton
    auto* cmd_catalog = app.add_subcommand("catalog", "frame families");
    auto* cmd_make = cmd_catalog->add_subcommand("make", "build a catalog frame");
    std::string mk_family, mk_out, mk_type;
    int mk_n = 0, mk_lambda = 1;
    cmd_make->add_option("family", mk_family,
                         "chain|cluster|garland|co-garland|hoop|ct")->required();
    cmd_make->add_option("n", mk_n, "size parameter (lambda for cluster)")->required();
    cmd_make->add_option("--type", mk_type, "ct type: o, +, -, +-");
    cmd_make->add_option("--lambda", mk_lambda, "cluster size parameter for ct");
    cmd_make->add_option("--out", mk_out, "output file (default stdout)");
    cmd_make->callback([&] {
        Frame f = [&] {
            if (mk_family == "chain") return chain(mk_n);
            if (mk_family == "cluster") return cluster_frame(mk_n);
            if (mk_family == "garland") return garland(mk_n);
            if (mk_family == "co-garland") return co_garland(mk_n);
            if (mk_family == "hoop") return hoop(mk_n);
            if (mk_family == "ct") {
                CtType t;
                if (mk_type == "o") t = CtType::Circ;
                else if (mk_type == "+") t = CtType::Plus;
                else if (mk_type == "-") t = CtType::Minus;
                else if (mk_type == "+-") t = CtType::PlusMinus;
                else throw error("ct needs --type o|+|-|+-");
                return ct(t, mk_n);
            }
            throw error("unknown family: " + mk_family);
        }();
        emit_frame(f, mk_out);
    });
    auto* cmd_pres = cmd_catalog->add_subcommand("preskeleton", "fatten a skeleton point");
    std::string ps_frame, ps_mark, ps_out;
    int ps_lambda = 1;
    cmd_pres->add_option("--frame", ps_frame, "frame JSON file")->required();
    cmd_pres->add_option("--mark", ps_mark, "point to fatten")->required();
    cmd_pres->add_option("--lambda", ps_lambda, "number of fresh cluster mates")->required();
    cmd_pres->add_option("--out", ps_out, "output file (default stdout)");
    cmd_pres->callback([&] {
        Frame f = load_frame(ps_frame).frame;
        emit_frame(preskeleton(f, ps_mark, ps_lambda), ps_out);
    });

    // classify
    auto* cmd_classify = app.add_subcommand("classify", "classify a frame");
    std::string cl_frame, cl_logic;
    cmd_classify->add_option("--frame", cl_frame, "frame JSON file")->required();
    cmd_classify->add_option("--logic", cl_logic, "s43 or bs222 (default: both)");
    cmd_classify->callback([&] {
        Frame f = load_frame(cl_frame).frame;
        json out;
        if (cl_logic.empty() || cl_logic == "s43") {
            auto r = classify_s43(f);
            json j;
            switch (r.tag) {
                case S43Class::Tag::ChainType:
                    j = {{"class", "chain"}, {"n", r.n}};
                    break;
                case S43Class::Tag::Ct:
                    j = {{"class", "ct"}, {"type", ct_name(r.ct)}};
                    break;
                case S43Class::Tag::NotApplicable:
                    j = {{"class", "none"}, {"reason", r.reason}};
                    break;
            }
            out["s43"] = j;
        }
        if (cl_logic.empty() || cl_logic == "bs222") {
            auto r = classify_bs222(f);
            json j;
            switch (r.tag) {
                case Bs222Class::Tag::Garland: j = {{"class", "garland"}, {"n", r.n}}; break;
                case Bs222Class::Tag::CoGarland:
                    j = {{"class", "co-garland"}, {"n", r.n}};
                    break;
                case Bs222Class::Tag::Hoop: j = {{"class", "hoop"}, {"n", r.n}}; break;
                case Bs222Class::Tag::NotApplicable:
                    j = {{"class", "none"}, {"reason", r.reason}};
                    break;
            }
            out["bs222"] = j;
        }
        if (out.empty()) throw error("unknown logic: " + cl_logic);
        std::cout << out.dump(2) << "\n";
    });

    // pretab
    auto* cmd_pretab = app.add_subcommand("pretab", "pretabularity report for a marked skeleton");
    std::string pt_frame, pt_mark;
    cmd_pretab->add_option("--frame", pt_frame, "frame JSON file")->required();
    cmd_pretab->add_option("--mark", pt_mark, "marked point")->required();
    cmd_pretab->callback([&] {
        Frame f = load_frame(pt_frame).frame;
        auto r = pretabularity_report(f, pt_mark);
        json out = {{"rooted", r.rooted},
                    {"skeleton", r.skeleton},
                    {"c_irreducible", r.c_irreducible},
                    {"pretabular", r.pretabular},
                    {"ambient",
                     {{"dep", r.ambient.dep}, {"widF", r.ambient.widF},
                      {"widB", r.ambient.widB}, {"zdg", r.ambient.zdg},
                      {"gir", r.ambient.gir}}}};
        if (r.witness) out["witness"] = frame_to_json(*r.witness);
        std::cout << out.dump(2) << "\n";
        exit_code = r.pretabular ? 0 : 1;
    });

    // enumerate
    auto* cmd_enum = app.add_subcommand("enumerate", "enumerate closed frames up to isomorphism");
    int en_max = 4, en_dep = 0, en_widf = 0, en_widb = 0, en_zdg = 0, en_gir = 0;
    bool en_rooted = false, en_skeleton = false;
    cmd_enum->add_option("--max", en_max, "maximum number of points (<= 5)");
    cmd_enum->add_option("--dep", en_dep, "depth bound");
    cmd_enum->add_option("--widf", en_widf, "forward width bound");
    cmd_enum->add_option("--widb", en_widb, "backward width bound");
    cmd_enum->add_option("--zdg", en_zdg, "z-degree bound");
    cmd_enum->add_option("--gir", en_gir, "girth bound");
    cmd_enum->add_flag("--rooted", en_rooted, "rooted frames only");
    cmd_enum->add_flag("--skeleton", en_skeleton, "skeletons only (girth 1)");
    cmd_enum->callback([&] {
        EnumSpec spec;
        spec.max_points = en_max;
        if (en_dep > 0) spec.dep = en_dep;
        if (en_widf > 0) spec.widF = en_widf;
        if (en_widb > 0) spec.widB = en_widb;
        if (en_zdg > 0) spec.zdg = en_zdg;
        if (en_gir > 0) spec.gir = en_gir;
        if (en_skeleton) spec.gir = 1;
        spec.rooted_only = en_rooted;
        auto frames = enumerate_frames(spec);
        json out = json::array();
        for (const Frame& f : frames) out.push_back(frame_to_json(f));
        std::cout << json{{"count", frames.size()}, {"frames", out}}.dump(2) << "\n";
    });

    // seq
    auto* cmd_seq = app.add_subcommand("seq", "anchored bit sequences");
    auto* cmd_gtm = cmd_seq->add_subcommand("gtm", "generalized Thue-Morse stage");
    std::string sq_bits, sq_format = "bits";
    int sq_stage = 0;
    cmd_gtm->add_option("--bits", sq_bits, "control bits")->required();
    cmd_gtm->add_option("--stage", sq_stage, "stage index")->required();
    cmd_gtm->add_option("--format", sq_format, "bits or json");
    cmd_gtm->callback([&] {
        BitSeq s = gtm(sq_bits, sq_stage);
        if (sq_format == "json")
            std::cout << json{{"bits", s.to_string()}, {"anchor", s.anchor},
                              {"length", s.size()}}
                             .dump(2)
                      << "\n";
        else if (sq_format == "bits")
            std::cout << s.to_string() << "@" << s.anchor << "\n";
        else
            throw error("unknown format: " + sq_format);
    });
    auto* cmd_embed = cmd_seq->add_subcommand("embed", "find embedding offsets");
    std::string sq_needle, sq_hay;
    cmd_embed->add_option("--needle", sq_needle, "bits or bits@anchor")->required();
    cmd_embed->add_option("--hay", sq_hay, "bits or bits@anchor")->required();
    cmd_embed->callback([&] {
        BitSeq needle = parse_anchored(sq_needle), hay = parse_anchored(sq_hay);
        auto offs = all_embeddings(needle, hay);
        std::cout << json{{"embeds", !offs.empty()}, {"offsets", offs}}.dump(2) << "\n";
        exit_code = offs.empty() ? 1 : 0;
    });
    auto* cmd_wit = cmd_seq->add_subcommand("witness", "dissimilarity witness block");
    std::string sq_f, sq_g;
    int sq_depth = 0;
    cmd_wit->add_option("--f", sq_f, "first control stream")->required();
    cmd_wit->add_option("--g", sq_g, "second control stream")->required();
    cmd_wit->add_option("--depth", sq_depth, "search depth (default: shorter stream)");
    cmd_wit->callback([&] {
        int depth = sq_depth > 0 ? sq_depth
                                 : static_cast<int>(std::min(sq_f.size(), sq_g.size()));
        auto w = dissimilarity_witness(sq_f, sq_g, depth);
        std::cout << json{{"index", w.index},
                          {"witness", w.witness.to_string()},
                          {"anchor", w.witness.anchor},
                          {"verified", w.verified}}
                         .dump(2)
                  << "\n";
        exit_code = w.verified ? 0 : 1;
    });

    // umbrella
    auto* cmd_umb = app.add_subcommand("umbrella", "build an umbrella frame");
    std::string um_bits, um_out, um_dot;
    long long um_anchor = 0;
    cmd_umb->add_option("--bits", um_bits, "block type sequence")->required();
    cmd_umb->add_option("--anchor", um_anchor, "block numbering offset");
    cmd_umb->add_option("--out", um_out, "write frame JSON here");
    cmd_umb->add_option("--dot", um_dot, "write DOT export here");
    cmd_umb->callback([&] {
        UmbrellaFrame z = umbrella(um_bits, um_anchor);
        UmbrellaReport rep = umbrella_check(z);
        json out = {{"points", z.frame.size()},
                    {"blocks", um_bits.size()},
                    {"well_formed", rep.all_ok()},
                    {"metrics", metrics_json(z.frame)}};
        std::cout << out.dump(2) << "\n";
        if (!um_out.empty()) emit_frame(z.frame, um_out);
        if (!um_dot.empty()) write_text(um_dot, export_dot(z.frame));
        exit_code = rep.all_ok() ? 0 : 1;
    });

    // export
    auto* cmd_export = app.add_subcommand("export", "export a frame to DOT");
    std::string ex_frame, ex_out;
    cmd_export->add_option("--frame", ex_frame, "frame JSON file")->required();
    cmd_export->add_option("--out", ex_out, "output DOT file (default stdout)");
    cmd_export->callback([&] {
        Frame f = load_frame(ex_frame).frame;
        std::string dot = export_dot(f);
        if (ex_out.empty())
            std::cout << dot;
        else
            write_text(ex_out, dot);
    });

    // papercheck
    auto* cmd_pc = app.add_subcommand("papercheck", "run a verification suite");
    std::string pc_suite;
    unsigned pc_seed = 2024;
    cmd_pc->add_option("suite", pc_suite, "jankov|bounds|s43|bs222|sequences|umbrella|all")
        ->required()
        ->check(CLI::IsMember({"jankov", "bounds", "s43", "bs222", "sequences",
                               "umbrella", "all"}));
    cmd_pc->add_option("--seed", pc_seed, "seed for randomized cases");
    cmd_pc->callback([&] { exit_code = run_papercheck(pc_suite, pc_seed); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
