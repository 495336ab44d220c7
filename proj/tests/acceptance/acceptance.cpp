// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "algcalc/calculus.hpp"
#include "algcalc/definition.hpp"
#include "algcalc/eds.hpp"
#include "algcalc/ids.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>

using namespace algcalc;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Collects failures; the first few messages are kept for the report line.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (failures_ <= 3) notes_ << (failures_ > 1 ? "; " : "") << what;
    }
    std::size_t checks() const { return checks_; }
    Outcome outcome(const std::string& summary) const {
        if (failures_ == 0) return {true, summary};
        return {false, std::to_string(failures_) + " of " + std::to_string(checks_) + " checks failed: " + notes_.str()};
    }

private:
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
    std::ostringstream notes_;
};

std::vector<std::pair<std::string, LieAlgebroid>> all_validated_fixtures() {
    auto out = fixtures::valid_algebroids();
    for (const char* file : {"tr3.json", "so3.json", "heisenberg.json", "anchored.json"})
        out.emplace_back(file, load_definition(std::string(ALGCALC_FIXTURE_DIR) + "/" + file).algebroid);
    return out;
}

// ---------------------------------------------------------------------------

Outcome axiom_suite() {
    Tally t;
    std::vector<std::pair<std::string, LieAlgebroid>> good{
        {"TR^1", fixtures::tangent(1)}, {"TR^2", fixtures::tangent(2)}, {"TR^3", fixtures::tangent(3)}, {"so3", fixtures::so3()}};
    for (const auto& [name, A] : good) {
        t.expect(check_antisymmetry(A).witnesses.empty(), name + " antisymmetry");
        t.expect(check_anchor_compatibility(A).witnesses.empty(), name + " anchor compatibility");
        t.expect(check_jacobi(A).witnesses.empty(), name + " jacobi");
    }
    const CheckReport broken = check_anchor_compatibility(fixtures::anchor_broken());
    const bool exact = broken.witnesses.size() == 1 && broken.witnesses[0].indices == std::vector<std::size_t>{1, 2, 1} &&
                       broken.witnesses[0].residual == ScalarExpr(1);
    t.expect(exact, "broken anchor witness is not exactly residual 1 at (1,2,1)");
    return t.outcome("4 algebroids clean; broken anchor residual 1 at (1,2,1)");
}

Outcome calculus_identity_suite() {
    Tally t;
    SamplingBudget budget;
    budget.samples = 50;
    std::size_t fixtures_run = 0;
    for (const auto& [name, A] : all_validated_fixtures()) {
        const CheckReport r = verify_calculus_identities(A, budget, 2024);
        t.expect(r.children.size() == 7, name + ": expected 7 identities");
        for (const auto& c : r.children) t.expect(c.passed(), name + ": " + c.name);
        ++fixtures_run;
    }
    return t.outcome(std::to_string(fixtures_run) + " fixtures x 7 identities x " + std::to_string(budget.samples) +
                     " samples, zero residuals");
}

Outcome maurer_cartan_regression() {
    Tally t;
    for (const auto& [name, A] : all_validated_fixtures()) {
        t.expect(maurer_cartan_check(A).passed(), name + " structure equations");
        // Independent route: the invariant formula on frame sections gives
        // d t^a (t_b, t_c) = -L^a_{bc} and d x^i (t_a) = rho^i_a.
        const std::size_t p = A.rank();
        for (std::size_t a = 0; a < p; ++a)
            for (std::size_t b = 0; b < p; ++b)
                for (std::size_t c = b + 1; c < p; ++c) {
                    const std::vector<Section> args{Section::frame(p, b), Section::frame(p, c)};
                    t.expect(oracle::ext_deriv(A, DifferentialForm::coframe(p, a), args) == -A.structure(b, c, a),
                             name + " frame evaluation of d t^a");
                }
        for (std::size_t i = 0; i < A.base_dim(); ++i)
            for (std::size_t a = 0; a < p; ++a) {
                const std::vector<Section> args{Section::frame(p, a)};
                const auto xi = DifferentialForm::scalar(p, ScalarExpr::coordinate(i + 1));
                t.expect(oracle::ext_deriv(A, xi, args) == A.anchor(i, a), name + " d x^i");
            }
    }
    const LieAlgebroid S = fixtures::so3();
    auto tt = [](std::size_t a, std::size_t b) {
        return wedge(DifferentialForm::coframe(3, a), DifferentialForm::coframe(3, b));
    };
    t.expect(ext_deriv(S, DifferentialForm::coframe(3, 0)) == -tt(1, 2), "so3 d t^1");
    t.expect(ext_deriv(S, DifferentialForm::coframe(3, 1)) == -tt(2, 0), "so3 d t^2");
    t.expect(ext_deriv(S, DifferentialForm::coframe(3, 2)) == -tt(0, 1), "so3 d t^3");
    return t.outcome("all fixtures; so3 d t^1 = -t^2^t^3 and cyclic");
}

// ---------------------------------------------------------------------------
// Frobenius corpus shared by criteria 4 and 5.

struct Instance {
    std::string name;
    LieAlgebroid algebroid;
    SubbundleSpec subbundle;
};

SubbundleSpec frames(std::size_t p, std::initializer_list<std::size_t> idx) {
    SubbundleSpec E;
    for (std::size_t a : idx) E.generators.push_back(Section::frame(p, a));
    return E;
}

bool full_rank(const LieAlgebroid& A, const SubbundleSpec& E) {
    try {
        require_full_rank(A, E);
        return true;
    } catch (const RankDeficiency&) {
        return false;
    }
}

std::vector<Instance> frobenius_corpus() {
    using fixtures::section;
    const LieAlgebroid T3 = fixtures::tangent(3), T4 = fixtures::tangent(4);
    std::vector<Instance> corpus{
        {"TR^3 coordinate plane", T3, fixtures::coordinate_plane()},
        {"TR^3 contact", T3, fixtures::contact()},
        {"so3 span{t1}", fixtures::so3(), frames(3, {0})},
        {"so3 span{t1,t2}", fixtures::so3(), frames(3, {0, 1})},
        {"so3 action span{t1,t2}", fixtures::so3_action(), frames(3, {0, 1})},
        {"so3 action span{t3}", fixtures::so3_action(), frames(3, {2})},
        {"x-dependent span{t2}", fixtures::x_dependent(), frames(2, {1})},
        {"TR^3 twisted involutive plane", T3, {{section(3, {"1", "0", "x2"}), section(3, {"0", "1", "x1"})}}},
        {"TR^4 span{d1,d2,d3}", T4, frames(4, {0, 1, 2})},
    };

    SamplingBudget budget;
    budget.max_degree = 2;
    budget.max_terms = 2;
    auto random_subbundle = [&](Sampler& s, const LieAlgebroid& A, std::size_t r) {
        SubbundleSpec E;
        for (std::size_t k = 0; k < r; ++k) E.generators.push_back(s.section());
        return E;
    };
    // Polynomial recombination of an involutive frame stays involutive.
    auto recombined = [&](Sampler& s, const SubbundleSpec& base) {
        SubbundleSpec E;
        for (std::size_t k = 0; k < base.dimension(); ++k) {
            Section g(base.generators[0].rank());
            for (const Section& b : base.generators) g += s.polynomial() * b;
            E.generators.push_back(g);
        }
        return E;
    };

    Sampler s(77, 4, 4, budget);
    struct Family {
        std::string name;
        LieAlgebroid A;
        std::function<SubbundleSpec(Sampler&)> draw;
        int count;
    };
    std::vector<Family> families{
        {"TR^3 random rank 2", T3, [&](Sampler& sm) { return random_subbundle(sm, T3, 2); }, 4},
        {"TR^4 random rank 2", T4, [&](Sampler& sm) { return random_subbundle(sm, T4, 2); }, 3},
        {"TR^4 random rank 3", T4, [&](Sampler& sm) { return random_subbundle(sm, T4, 3); }, 2},
        {"so3 random rank 2", fixtures::so3(), [&](Sampler& sm) { return random_subbundle(sm, fixtures::so3(), 2); }, 2},
        {"TR^3 recombined plane", T3,
         [&](Sampler& sm) { return recombined(sm, corpus[7].subbundle); }, 3},
        {"TR^4 recombined span{d1,d2}", T4, [&](Sampler& sm) { return recombined(sm, frames(4, {0, 1})); }, 3},
    };
    for (auto& f : families) {
        Sampler fs(1000 + corpus.size(), f.A.base_dim(), f.A.rank(), budget);
        int made = 0;
        for (int attempt = 0; made < f.count && attempt < 50; ++attempt) {
            SubbundleSpec E = f.draw(fs);
            if (!full_rank(f.A, E)) continue;
            corpus.push_back({f.name + " #" + std::to_string(++made), f.A, std::move(E)});
        }
    }
    return corpus;
}

/// Referee verdict from the defining property: every bracket of generators
/// lies in the span, decided by stacked rank with the oracle bracket.
bool referee_involutive(const Instance& in) {
    const auto& g = in.subbundle.generators;
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
            if (!span_contains(in.algebroid, in.subbundle, oracle::bracket(in.algebroid, g[a], g[b]))) return false;
    return true;
}

bool g_verbose = false;

Outcome frobenius_agreement(const std::vector<Instance>& corpus) {
    Tally t;
    std::size_t involutive = 0;
    for (const Instance& in : corpus) {
        const EquivalenceReport eq = eds_involutivity_equivalence(in.algebroid, in.subbundle);
        const bool ref = referee_involutive(in);
        t.expect(eq.report.passed(), in.name + ": verdicts disagree");
        t.expect(eq.bracket_verdict == ref && eq.cartan_verdict == ref && eq.closure_verdict == ref,
                 in.name + ": verdict differs from referee");
        involutive += ref ? 1 : 0;
        if (g_verbose)
            std::cout << "    " << in.name << ": " << (ref ? "involutive" : "not involutive") << "\n";
    }
    // Named reference cases.
    const auto by_name = [&](const std::string& n) -> const Instance& {
        for (const auto& in : corpus)
            if (in.name == n) return in;
        throw std::runtime_error("missing corpus instance " + n);
    };
    t.expect(referee_involutive(by_name("TR^3 coordinate plane")), "coordinate plane should be involutive");
    const CartanResult contact = cartan_test(by_name("TR^3 contact").algebroid, by_name("TR^3 contact").subbundle);
    t.expect(!contact.report.passed() && contact.decompositions[0].d_theta.A(0, 1) == ScalarExpr(-1),
             "contact A^3_12 should be -1");
    t.expect(corpus.size() >= 20, "corpus smaller than 20");
    t.expect(involutive > 0 && involutive < corpus.size(), "corpus lacks both verdicts");
    return t.outcome(std::to_string(corpus.size()) + " instances (" + std::to_string(involutive) + " involutive, " +
                     std::to_string(corpus.size() - involutive) + " not), zero disagreements");
}

Outcome a_block_identity(const std::vector<Instance>& corpus) {
    Tally t;
    for (const Instance& in : corpus) {
        const CartanResult cr = cartan_test(in.algebroid, in.subbundle);
        const std::size_t r = in.subbundle.dimension();
        const auto& S = cr.coframe.frame;
        for (const CartanDecomposition& dec : cr.decompositions)
            for (std::size_t b = 0; b < r; ++b)
                for (std::size_t c = b + 1; c < r; ++c) {
                    const Section arg[] = {oracle::bracket(in.algebroid, S[b], S[c])};
                    t.expect(dec.d_theta.A(b, c) == -apply_form(cr.coframe.coframe[dec.alpha], arg),
                             in.name + ": A-block entry");
                }
    }
    return t.outcome(std::to_string(t.checks()) + " A-block entries on " + std::to_string(corpus.size()) +
                     " instances match -Theta([S_b, S_c])");
}

// ---------------------------------------------------------------------------

Outcome ideal_laws() {
    using fixtures::section;
    Tally t;
    std::vector<std::pair<LieAlgebroid, SubbundleSpec>> cases{
        {fixtures::tangent(3), fixtures::contact()},
        {fixtures::tangent(4), {{section(4, {"1", "0", "x2", "0"}), section(4, {"0", "1", "0", "x1"})}}},
        {fixtures::so3(), frames(3, {0})},
        {fixtures::tangent(4), {{section(4, {"1", "x3", "0", "x1^2"})}}},
    };
    std::size_t members = 0;
    for (int round = 0; members < 60 && round < 200; ++round) {
        const auto& [A, E] = cases[round % cases.size()];
        const GeneratedIdeal I = GeneratedIdeal::of(A, E);
        const std::size_t p = A.rank();
        Sampler local(round, A.base_dim(), p);
        const std::size_t q = local.uniform(0, p - 2);  // member degree q + 1 < p
        DifferentialForm w(p, q + 1);
        for (const auto& th : I.generators()) w += wedge(local.form(q), th);
        if (w.is_zero()) continue;
        ++members;
        t.expect(ideal_membership(I, w), "member rejected");
        const auto cert = ideal_certificate(I, w);
        t.expect(cert.has_value() && expand_certificate(I, *cert) == w, "certificate does not re-expand");
        const std::size_t eta_degree = local.uniform(0, p - w.degree());
        const DifferentialForm prod = wedge(local.form(eta_degree), w);
        t.expect(prod.degree() == 0 || ideal_membership(I, prod), "wedge with a form left the ideal");
        t.expect(vanishes_on_ids(w, E), "member does not vanish on the subbundle");
    }
    t.expect(members >= 50, "fewer than 50 nonzero members");
    return t.outcome(std::to_string(members) + " certified members: re-expansion, wedge closure, vanishing on E");
}

// ---------------------------------------------------------------------------

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_cli(const std::string& args) {
    const std::string cmd = std::string("\"") + ALGCALC_CLI + "\" " + args + " 2>/dev/null";
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void strip_timing(nlohmann::json& j) {
    if (j.is_object()) {
        j.erase("elapsed_ms");
        for (auto& [k, v] : j.items()) strip_timing(v);
    } else if (j.is_array()) {
        for (auto& v : j) strip_timing(v);
    }
}

Outcome cli_end_to_end() {
    Tally t;
    const std::string args = std::string("check --input \"") + ALGCALC_FIXTURE_DIR +
                             "/heisenberg.json\" --only equivalence:contact --format json --seed 7";
    const CliRun first = run_cli(args);
    t.expect(first.exit_code == 0, "exit code " + std::to_string(first.exit_code));
    nlohmann::json a, b;
    try {
        a = nlohmann::json::parse(first.out);
        const auto& check = a.at("checks").at(0);
        t.expect(check.at("name") == "equivalence:contact" && check.at("verdict") == "pass", "equivalence verdict");
        const auto& kids = check.at("children");
        t.expect(kids.size() == 3, "expected three involutivity verdicts");
        for (const auto& k : kids) t.expect(k.at("verdict") == "fail", k.at("name").get<std::string>() + " should fail");
        b = nlohmann::json::parse(run_cli(args).out);
    } catch (const std::exception& e) {
        t.expect(false, std::string("unreadable report: ") + e.what());
    }
    strip_timing(a);
    strip_timing(b);
    t.expect(!a.is_null() && a == b, "json differs between runs");
    return t.outcome("exit 0, three agreeing fail verdicts, identical json across runs");
}

} // namespace

int main(int argc, char** argv) {
    g_verbose = argc > 1 && std::string(argv[1]) == "--verbose";
    const auto corpus = frobenius_corpus();
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"axiom suite", axiom_suite},
        {"calculus identities", calculus_identity_suite},
        {"maurer-cartan regression", maurer_cartan_regression},
        {"frobenius oracle agreement", [&] { return frobenius_agreement(corpus); }},
        {"A-block bracket identity", [&] { return a_block_identity(corpus); }},
        {"ideal laws", ideal_laws},
        {"cli end-to-end", cli_end_to_end},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- "
                  << o.detail << " [" << std::fixed << std::setprecision(2) << secs << " s]" << std::endl;
    }
    return all ? 0 : 1;
}
