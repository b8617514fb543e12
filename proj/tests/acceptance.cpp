// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// fails. Each criterion carries a wall-clock budget that is enforced along
// with the checked values.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "epgraph/colouring.hpp"
#include "epgraph/descriptor.hpp"
#include "epgraph/exact_solvers.hpp"
#include "epgraph/farey.hpp"
#include "epgraph/group_graphs.hpp"
#include "support.hpp"

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        pass = false;
        if (!detail.empty()) detail += "; ";
        detail += why;
    }
};

std::vector<epg::FiniteGroup> make_battery() {
    std::vector<epg::FiniteGroup> battery;
    for (std::uint64_t n = 1; n <= 48; ++n) battery.push_back(epg::FiniteGroup::cyclic(n));
    for (std::uint64_t n = 2; n <= 24; ++n) battery.push_back(epg::FiniteGroup::dihedral(n));
    for (std::uint64_t k = 3; k <= 6; ++k) battery.push_back(epg::FiniteGroup::symmetric(k));
    for (std::uint64_t k = 4; k <= 6; ++k) battery.push_back(epg::FiniteGroup::alternating(k));
    battery.push_back(epg::load_permutation_group(testsupport::fixture_path("q8.perm")));
    return battery;
}

Outcome criterion1_families_table() {
    Outcome out;
    const std::string expected =
        "A_1 = {12}\n"
        "A_2 = {6}\n"
        "A_3 = {4, 8}\n"
        "A_4 = {3, 9}\n"
        "A_5 = {3, 5, 8, 10}\n"
        "A_6 = {2, 10}\n"
        "A_7 = {2, 4, 6, 7, 9, 11}\n"
        "A_8 = {2, 5, 8, 11}\n"
        "A_9 = {2, 3, 6, 7, 10, 11}\n"
        "A_10 = {2, 4, 9, 11}\n"
        "A_11 = {2, 3, 4, 5, 6, 7, 8, 9, 10, 11}\n"
        "A_12 = {1, 5, 7, 11}\n";
    const auto r = testsupport::run_cli("families --n 12");
    if (r.exit_code != 0) out.fail("exit code " + std::to_string(r.exit_code));
    if (r.output != expected) out.fail("output differs from the n=12 table");
    return out;
}

Outcome criterion2_family_properties() {
    Outcome out;
    for (std::uint64_t n = 1; n <= 500; ++n) {
        const epg::FamilyReport rep = epg::verify_colour_families(epg::build_colour_families(n));
        if (!rep.ok()) {
            out.fail("family violation at n=" + std::to_string(n));
            break;
        }
    }
    std::uint64_t collision_pairs = 0;
    for (std::uint64_t n = 1; n <= 200; ++n) {
        const epg::CollisionReport rep = epg::verify_key_observation(n);
        collision_pairs += rep.pairs_checked;
        if (!rep.ok()) {
            out.fail("collision with small lcm at n=" + std::to_string(n));
            break;
        }
    }
    out.detail = "all n<=500 families, " + std::to_string(collision_pairs) +
                 " collision pairs over n<=200";
    return out;
}

Outcome criterion3_colouring_battery(const std::vector<epg::FiniteGroup>& battery) {
    Outcome out;
    std::uint64_t pairs = 0;
    for (const epg::FiniteGroup& g : battery) {
        const epg::AdjacencyOracle oracle(g);
        const epg::Colouring c = epg::colour_group(oracle);
        const std::uint64_t n = epg::max_element_order(g);
        if (c.palette_size != n) {
            out.fail(g.name() + ": palette != max element order");
            continue;
        }
        for (epg::ElemId x = 0; x < g.order(); ++x) {
            if (c.colours[x] < 1 || c.colours[x] > n) {
                out.fail(g.name() + ": colour out of range");
                break;
            }
        }
        for (epg::ElemId x = 0; x < g.order() && out.pass; ++x) {
            for (epg::ElemId y = x + 1; y < g.order(); ++y) {
                ++pairs;
                if (c.colours[x] == c.colours[y] && oracle.enhanced_adjacent(x, y)) {
                    out.fail(g.name() + ": improper pair " + std::to_string(x) + "," +
                             std::to_string(y));
                    break;
                }
            }
        }
        if (!out.pass) break;
    }
    if (out.pass)
        out.detail = std::to_string(battery.size()) + " groups, " + std::to_string(pairs) +
                     " pairs validated";
    return out;
}

Outcome criterion4_exact_cross_check(const std::vector<epg::FiniteGroup>& battery) {
    Outcome out;
    std::size_t groups = 0;
    for (const epg::FiniteGroup& g : battery) {
        if (g.order() > 48) continue;
        ++groups;
        const std::uint64_t n = epg::max_element_order(g);
        const epg::SimpleGraph epgraph = epg::build_graph(g, epg::GraphKind::Enhanced);
        const std::size_t clique = epg::clique_number_exact(epgraph).size;
        const std::uint64_t chromatic = epg::chromatic_number_exact(epgraph).chromatic;
        if (clique != n || chromatic != n) {
            out.fail(g.name() + ": clique " + std::to_string(clique) + ", chromatic " +
                     std::to_string(chromatic) + ", n " + std::to_string(n));
            break;
        }
    }
    if (out.pass) out.detail = std::to_string(groups) + " groups with |G| <= 48";
    return out;
}

Outcome criterion5_pentagon_report() {
    Outcome out;
    const auto r = testsupport::run_cli("delta-report sym:8 --pentagon");
    if (r.exit_code != 0) out.fail("exit code " + std::to_string(r.exit_code));
    const std::array<const char*, 5> needles = {
        "order spectrum: {1, 2, 3, 4, 5, 6, 7, 8, 10, 12, 15}",
        "delta clique number: 2",
        "cycle edges present: 5/5",
        "chords absent: 5/5",
        "verdict: not weakly perfect"};
    for (const char* needle : needles)
        if (r.output.find(needle) == std::string::npos)
            out.fail(std::string("missing \"") + needle + "\"");
    if (r.output.find("induced 5-cycle confirmed") == std::string::npos)
        out.fail("induced 5-cycle not confirmed");
    return out;
}

Outcome criterion6_antichain_oracle() {
    Outcome out;
    std::size_t checked = 0;
    for (std::uint64_t n = 1; n <= 5000; ++n) {
        if (epg::DivisorLattice(n).divisors.size() > 24) continue;
        ++checked;
        if (epg::alpha_de_bruijn(n) != epg::alpha_bruteforce(n)) {
            out.fail("mismatch at n=" + std::to_string(n));
            break;
        }
    }
    if (out.pass) out.detail = std::to_string(checked) + " values of n";
    return out;
}

Outcome criterion7_delta_clique_formula(const std::vector<epg::FiniteGroup>& battery) {
    Outcome out;
    std::size_t groups = 0;
    for (const epg::FiniteGroup& g : battery) {
        if (g.order() > 360) continue;
        ++groups;
        const epg::SimpleGraph delta = epg::build_graph(g, epg::GraphKind::Delta);
        const std::size_t exact = epg::clique_number_exact(delta).size;
        const std::uint64_t formula = epg::delta_clique_number(g);
        if (exact != formula) {
            out.fail(g.name() + ": exact " + std::to_string(exact) + " vs formula " +
                     std::to_string(formula));
            break;
        }
    }
    if (out.pass) out.detail = std::to_string(groups) + " groups with |G| <= 360";
    return out;
}

Outcome criterion8_gk_alt7() {
    Outcome out;
    const epg::FiniteGroup a7 = epg::FiniteGroup::alternating(7);
    const epg::GkGraph gk = epg::build_gk_graph(a7);
    if (gk.primes != std::vector<std::uint64_t>{2, 3, 5, 7}) out.fail("primes differ");
    if (gk.edges != std::vector<std::pair<std::uint64_t, std::uint64_t>>{{2, 3}})
        out.fail("edges differ");
    if (epg::gk_component_count(gk) != 3) out.fail("component count differs");
    if (epg::isolated_large_primes(a7) != std::vector<std::uint64_t>{5, 7})
        out.fail("isolated large primes differ");
    return out;
}

Outcome criterion9_subgraph_invariant(const std::vector<epg::FiniteGroup>& battery) {
    Outcome out;
    std::uint64_t edges_checked = 0;
    for (const epg::FiniteGroup& g : battery) {
        if (g.order() > epg::kDefaultGraphCap) continue;
        const epg::AdjacencyOracle oracle(g);
        const epg::SimpleGraph power = epg::build_graph(oracle, epg::GraphKind::Power);
        const epg::SimpleGraph enhanced = epg::build_graph(oracle, epg::GraphKind::Enhanced);
        const epg::SimpleGraph delta = epg::build_graph(oracle, epg::GraphKind::Delta);
        for (std::size_t u = 0; u < g.order() && out.pass; ++u) {
            for (std::size_t v = u + 1; v < g.order(); ++v) {
                ++edges_checked;
                if (power.adjacent(u, v) && !enhanced.adjacent(u, v)) {
                    out.fail(g.name() + ": power edge missing from the enhanced graph");
                    break;
                }
                if (delta.adjacent(u, v) !=
                    (enhanced.adjacent(u, v) && !power.adjacent(u, v))) {
                    out.fail(g.name() + ": delta is not the exact difference");
                    break;
                }
            }
        }
        if (!out.pass) break;
    }
    if (out.pass) out.detail = std::to_string(edges_checked) + " pairs compared";
    return out;
}

} // namespace

int main() {
    std::vector<epg::FiniteGroup> battery = make_battery();

    struct Criterion {
        int id;
        const char* label;
        double budget_seconds;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "families --n 12 reproduces the published table byte-exactly", 0.1,
         criterion1_families_table},
        {2, "family sizes/disjointness for n<=500; collision lcm scan for n<=200", 30.0,
         criterion2_family_properties},
        {3, "battery colourings are proper with <= max-order colours (exhaustive pairs)", 120.0,
         [&] { return criterion3_colouring_battery(battery); }},
        {4, "exact clique = chromatic = max order on every battery group with |G| <= 48", 60.0,
         [&] { return criterion4_exact_cross_check(battery); }},
        {5, "delta-report sym:8 --pentagon: spectrum, clique 2, induced 5-cycle, verdict", 5.0,
         criterion5_pentagon_report},
        {6, "alpha_de_bruijn = alpha_bruteforce for n<=5000 with <= 24 divisors", 30.0,
         criterion6_antichain_oracle},
        {7, "clique(delta) matches the antichain formula on battery groups |G| <= 360", 120.0,
         [&] { return criterion7_delta_clique_formula(battery); }},
        {8, "gk(alt:7): primes {2,3,5,7}, edge 2-3, 3 components, isolated {5,7}", 5.0,
         criterion8_gk_alt7},
        {9, "power edges subset of enhanced; delta = enhanced minus power, edge-exact", 120.0,
         [&] { return criterion9_subgraph_invariant(battery); }},
    };

    int failures = 0;
    double combined_3_and_9 = 0.0;
    for (const Criterion& c : criteria) {
        const auto start = Clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        if (c.id == 3 || c.id == 9) {
            // criterion 9 shares criterion 3's budget
            combined_3_and_9 += seconds;
            if (combined_3_and_9 > 120.0) out.fail("combined 3+9 budget exceeded");
        } else if (seconds > c.budget_seconds) {
            out.fail("budget exceeded");
        }
        std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", out.pass ? "PASS" : "FAIL", c.id,
                    c.label, seconds, out.detail.empty() ? "" : " -- ",
                    out.detail.c_str());
        std::fflush(stdout);
        if (!out.pass) ++failures;
    }
    return failures;
}
