// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.
// All checks are exact bit or integer comparisons.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "polycoh/cli.hpp"
#include "polycoh/combinatorics.hpp"
#include "polycoh/duality.hpp"
#include "polycoh/length_space.hpp"
#include "polycoh/relations.hpp"
#include "sweep.hpp"

using namespace polycoh;
using polycoh::testing::for_each_gee;
using polycoh::testing::for_each_tuple;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;

    void fail(const std::string& why) {
        if (pass) detail = why;
        pass = false;
    }
};

struct Criterion {
    int id;
    std::string name;
    double time_limit_s;  // 0 = none stated
    std::function<Verdict()> check;
};

// Criteria 1 and 4 share this sweep.
void for_each_desk_gee(const std::function<void(const GeeParams&)>& visit) {
    for_each_gee(1, 4, 3, visit);
    for_each_gee(1, 2, 6, [&](const GeeParams& a) {
        if (std::any_of(a.increments().begin(), a.increments().end(), [](int x) { return x > 3; })) visit(a);
    });
}

bool product_parity(const ThetaVector& m, const ThetaVector& t) {
    for (std::size_t i = 0; i < t.size(); ++i)
        if (!binom_parity(1 - m[i], t[i])) return false;
    return true;
}

Verdict theorem_at_desk_scale() {
    Verdict v;
    int tuples = 0;
    for_each_desk_gee([&](const GeeParams& a) {
        ++tuples;
        DualityReport report = cross_validate(a);
        if (report.nullity != 1) v.fail("nullity " + std::to_string(report.nullity) + " at a = " + a.str());
        else if (!report.agree) v.fail("oracle and formula disagree at a = " + a.str());
    });
    if (v.pass) v.detail = std::to_string(tuples) + " tuples, nullity 1 and pointwise agreement";
    return v;
}

Verdict example_reproduction() {
    Verdict v;
    std::vector<ThetaVector> classes;
    for (int total = 0; total <= 3; ++total)
        for (const auto& t : compositions(total, 3))
            if (in_staircase(t)) classes.push_back(t);
    if (classes.size() != 14) v.fail("expected 14 theta classes, found " + std::to_string(classes.size()));

    int tuples = 0, compared = 0;
    for_each_gee(3, 3, 6, [&](const GeeParams& a) {
        ++tuples;
        for (const auto& t : classes) {
            if (duality_sum(a, t) != closed_form_k3(a, t)) v.fail("raw formula differs at a = " + a.str() + ", T = " + t.str());
            if (t[0] > a[0] || t[1] > a[1] || t[2] > a[2]) continue;
            ++compared;
            if (phi_by_theta(a, t) != closed_form_k3(a, t))
                v.fail("phi_by_theta differs at a = " + a.str() + ", T = " + t.str());
        }
    });
    if (tuples != 216) v.fail("expected 216 tuples");

    std::ifstream in(POLYCOH_TEST_DATA "/table_2_2_2.csv");
    std::stringstream golden;
    golden << in.rdbuf();
    std::ostringstream out, err;
    if (cli::run({"table", "--a", "2,2,2", "--format", "csv"}, out, err) != 0 || out.str() != golden.str())
        v.fail("table --a 2,2,2 does not match the golden file");
    if (v.pass)
        v.detail = std::to_string(tuples) + " tuples x 14 classes (" + std::to_string(compared) +
                   " feasible pairs) and the (2,2,2) golden table";
    return v;
}

Verdict top_class_rule() {
    Verdict v;
    std::mt19937 rng(20160414);
    for (int sample = 0; sample < 500; ++sample) {
        const std::size_t k = 1 + rng() % 6;
        std::vector<int> inc;
        for (std::size_t i = 0; i < k; ++i) inc.push_back(1 + static_cast<int>(rng() % 6));
        GeeParams a(inc);
        // Random staircase profile with |T| = k and t_i <= a_i, then random elements per block.
        std::vector<ThetaVector> profiles;
        for (const auto& t : compositions(static_cast<int>(k), k)) {
            bool ok = in_staircase(t);
            for (std::size_t i = 0; ok && i < k; ++i) ok = t[i] <= a[i];
            if (ok) profiles.push_back(t);
        }
        const ThetaVector& t = profiles[rng() % profiles.size()];
        std::vector<int> elements;
        int lower = 0;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<int> block;
            for (int x = lower + 1; x <= lower + a[i]; ++x) block.push_back(x);
            std::shuffle(block.begin(), block.end(), rng);
            elements.insert(elements.end(), block.begin(), block.begin() + t[i]);
            lower += a[i];
        }
        IndexSet j(elements);
        if (!oracle::exhaustive_leq(j, a.gee())) {
            v.fail("sampler produced a non-subgee " + j.str());
            continue;
        }
        const int n = std::max(a.top() + 1, static_cast<int>(k) + 3);
        if (!phi(a, TopMonomial(j, n))) v.fail("phi = 0 at a = " + a.str() + ", J = " + j.str());
    }
    if (v.pass) v.detail = "500 random (a, J) with |J| = k, all phi = 1";
    return v;
}

Verdict relation_annihilation() {
    Verdict v;
    std::size_t relations = 0;
    for_each_desk_gee([&](const GeeParams& a) {
        VerifyResult result = verify_relations(a);
        relations += result.relations;
        if (result.offending) v.fail("R_I not annihilated at a = " + a.str() + ", I = " + result.offending->str());
    });
    if (v.pass) v.detail = std::to_string(relations) + " relations annihilated by the formula";
    return v;
}

Verdict counting_formula() {
    Verdict v;
    std::size_t checks = 0;
    for_each_gee(1, 3, 4, [&](const GeeParams& a) {
        const auto subgees = oracle::exhaustive_subgees(a);
        std::vector<ThetaVector> staircase;
        for (int total = 0; total <= static_cast<int>(a.k()); ++total)
            for (const auto& c : compositions(total, a.k()))
                if (in_staircase(c)) staircase.push_back(c);
        for (const auto& i : subgees) {
            std::map<ThetaVector, std::uint64_t> counted;
            for (const auto& j : subgees)
                if (j.disjoint_from(i)) ++counted[oracle::direct_theta(j, a)];
            const ThetaVector m = oracle::direct_theta(i, a);
            for (const auto& c : staircase) {
                ++checks;
                if (count_disjoint_subgees(a, m, c) != counted[c])
                    v.fail("count differs at a = " + a.str() + ", I = " + i.str() + ", C = " + c.str());
            }
        }
    });
    if (v.pass) v.detail = std::to_string(checks) + " (a, I, C) triples match enumeration";
    return v;
}

Verdict subgee_criterion() {
    Verdict v;
    int tuples = 0;
    for_each_gee(1, 4, 3, [&](const GeeParams& a) {
        ++tuples;
        if (enumerate_subgees(a) != oracle::exhaustive_subgees(a)) v.fail("subgee sets differ at a = " + a.str());
    });
    if (v.pass) v.detail = std::to_string(tuples) + " tuples, staircase criterion = set order";
    return v;
}

Verdict identity_suite() {
    Verdict v;
    for (int m = 0; m <= 64; ++m)
        for (int r = 0; r <= m; ++r)
            if (binom_parity(m, r) != static_cast<bool>(oracle::pascal(m, r) & 1u))
                v.fail("Lucas vs Pascal at (" + std::to_string(m) + "," + std::to_string(r) + ")");

    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= 12; ++b)
            for (int t = 0; t <= 12; ++t) {
                bool sum = false;
                for (int i = 0; i <= t; ++i) sum ^= binom_parity(a, t - i) && binom_parity(b, i);
                if (sum != binom_parity(a + b, t)) v.fail("Vandermonde mod 2 fails");
            }

    for (int a = 1; a <= 16; ++a)
        for (int b = 0; b <= 16; ++b)
            if (binom_parity(a + b - 2, b) != binom_parity(1 - a, b)) v.fail("negative-index substitution fails");

    for (std::size_t k = 1; k <= 4; ++k) {
        const auto full = compositions(static_cast<int>(k), k);
        for_each_tuple(k, 0, 3, [&](const std::vector<int>& raw) {
            ThetaVector m(raw);
            const int ksize = static_cast<int>(k);

            bool sigma1 = false;
            for (const auto& t : full) sigma1 ^= product_parity(m, t);
            if (sigma1 != binom_parity(ksize - m.total(), ksize)) v.fail("sigma_1 != binom(k - |m|, k) at m = " + m.str());
            const bool from_subgee = in_staircase(m) && m.total() >= 1;
            if (from_subgee && sigma1) v.fail("sigma_1 does not vanish at m = " + m.str());

            // U-blocks: first prefix (t_1..t_j) whose sum drops below j.
            std::map<ThetaVector, int> covered;
            for (std::size_t j = 1; j <= k; ++j) {
                for (int prefix_total = 0; prefix_total < static_cast<int>(j); ++prefix_total) {
                    for (const auto& prefix : compositions(prefix_total, j)) {
                        bool earlier_ok = true;
                        int running = 0;
                        for (std::size_t i = 0; i + 1 < j; ++i) {
                            running += prefix[i];
                            if (running < static_cast<int>(i) + 1) earlier_ok = false;
                        }
                        if (!earlier_ok) continue;
                        bool block_sum = false;
                        for (const auto& rest : compositions(ksize - prefix_total, k - j)) {
                            std::vector<int> entries = prefix.entries();
                            entries.insert(entries.end(), rest.entries().begin(), rest.entries().end());
                            ThetaVector t(entries);
                            ++covered[t];
                            block_sum ^= product_parity(m, t);
                        }
                        int tail = 0;
                        for (std::size_t i = j; i < k; ++i) tail += m[i];
                        if (tail <= ksize - static_cast<int>(j) && block_sum)
                            v.fail("U-block " + prefix.str() + " does not vanish at m = " + m.str());
                    }
                }
            }
            // The blocks partition the non-staircase T with |T| = k.
            for (const auto& t : full) {
                const int expected = in_staircase(t) ? 0 : 1;
                const int got = covered.count(t) ? covered[t] : 0;
                if (got != expected) v.fail("U-blocks do not partition at T = " + t.str());
            }
        });
    }
    if (v.pass) v.detail = "Lucas, Vandermonde, substitution, sigma_1, U-blocks";
    return v;
}

Verdict genetic_code_fixtures() {
    Verdict v;
    std::vector<Rational> pentagon(5, Rational(1));
    auto code = genetic_code(LengthVector::normalize(pentagon));
    const std::vector<IndexSet> expected{{4, 5}};
    if (oracle::exhaustive_genetic_code(pentagon) != expected) v.fail("oracle pentagon code is not {{5,4}}");
    if (code.genes != expected) v.fail("pentagon code is not {{5,4}}");
    if (is_generic(LengthVector::normalize({1, 1, 2}))) v.fail("(1,1,2) reported generic");

    std::mt19937 rng(99);
    int generic_cases = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 8);
        std::vector<Rational> raw, scaled_raw;
        for (int i = 0; i < n; ++i)
            raw.emplace_back(1 + static_cast<std::int64_t>(rng() % 30), 1 + static_cast<std::int64_t>(rng() % 5));
        Rational factor(1 + static_cast<std::int64_t>(rng() % 12), 1 + static_cast<std::int64_t>(rng() % 12));
        for (const auto& r : raw) scaled_raw.push_back(r * factor);
        auto base = LengthVector::normalize(raw), scaled = LengthVector::normalize(scaled_raw);
        if (is_generic(base) != is_generic(scaled)) v.fail("genericity changed under scaling");
        if (!is_generic(base)) continue;
        ++generic_cases;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask)
            if (is_short(base, IndexSet::from_mask(mask)) != is_short(scaled, IndexSet::from_mask(mask)))
                v.fail("shortness changed under scaling");
        if (is_short(base, IndexSet{n}) && genetic_code(base) != genetic_code(scaled))
            v.fail("genetic code changed under scaling");
    }
    if (v.pass)
        v.detail = "pentagon {{5,4}}, (1,1,2) non-generic, 100 scaled vectors (" + std::to_string(generic_cases) +
                   " generic)";
    return v;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "theorem at desk scale", 60.0, theorem_at_desk_scale},
        {2, "k = 3 closed forms and golden table", 5.0, example_reproduction},
        {3, "top-class rule", 0.0, top_class_rule},
        {4, "relation annihilation via formula", 0.0, relation_annihilation},
        {5, "disjoint-subgee counting formula", 10.0, counting_formula},
        {6, "subgee criterion", 0.0, subgee_criterion},
        {7, "binomial identity suite", 0.0, identity_suite},
        {8, "genetic-code fixtures", 0.0, genetic_code_fixtures},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v.fail(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.time_limit_s > 0 && seconds > c.time_limit_s) {
            std::ostringstream why;
            why << "took " << seconds << " s, limit " << c.time_limit_s << " s";
            v.fail(why.str());
        }
        if (!v.pass) ++failures;
        std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.name << ": " << v.detail << " ("
                  << static_cast<long long>(seconds * 1000) << " ms)\n";
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
