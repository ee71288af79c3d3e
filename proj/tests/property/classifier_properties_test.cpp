#include <gtest/gtest.h>

#include <map>

#include "anonlevel/classifier.hpp"
#include "corpus_fixture.hpp"
#include "model_gen.hpp"
#include "table_oracle.hpp"

using namespace anonlevel;
using namespace anonlevel::fixtures;

namespace {

struct Case {
    std::string label;
    ServiceModel model;
    AnalysisParams params;
};

// Corpus models with their documented parameters, plus fuzzed models under
// every role and a random trusted set.
std::vector<Case> cases(unsigned seed, int fuzzed) {
    std::vector<Case> out;
    for (auto& c : load_all_corpus()) out.push_back({c.meta->name, c.model, c.params});
    ModelGen gen(seed);
    for (int i = 0; i < fuzzed; ++i) {
        const auto m = gen.model();
        for (const auto& role : role_names(m)) {
            std::vector<std::string> extra;
            for (const auto& e : m.entities) {
                if (e.kind == EntityKind::participant && e.name != role && gen.chance(0.5)) extra.push_back(e.name);
            }
            out.push_back({serialize(m), m, params_for(m, role, extra)});
        }
    }
    return out;
}

std::vector<std::string> optional_participants(const ServiceModel& m, const std::string& observee) {
    std::vector<std::string> out;
    for (const auto& e : m.entities) {
        if (e.kind == EntityKind::participant && e.name != observee) out.push_back(e.name);
    }
    return out;
}

// Degree for every trusted subset, keyed by bitmask over `names`.
std::vector<int> degrees_by_mask(const ServiceModel& m, const std::string& observee,
                                 const std::vector<std::string>& names) {
    std::vector<int> out(std::size_t{1} << names.size());
    for (std::size_t mask = 0; mask < out.size(); ++mask) {
        std::vector<std::string> extra;
        for (std::size_t i = 0; i < names.size(); ++i) {
            if (mask & (std::size_t{1} << i)) extra.push_back(names[i]);
        }
        out[mask] = classify(m, params_for(m, observee, extra)).classification.level.degree;
    }
    return out;
}

void expect_trust_monotone(const ServiceModel& m, const std::string& observee, const std::string& label) {
    const auto names = optional_participants(m, observee);
    ASSERT_LE(names.size(), 6u) << label;
    const auto deg = degrees_by_mask(m, observee, names);
    // Every inclusion chain is monotone iff every single-element step is.
    for (std::size_t mask = 0; mask < deg.size(); ++mask) {
        for (std::size_t i = 0; i < names.size(); ++i) {
            const std::size_t bigger = mask | (std::size_t{1} << i);
            EXPECT_LE(deg[mask], deg[bigger]) << label << " adding " << names[i];
        }
    }
}

}  // namespace

TEST(Properties, LowestLevelPrinciple) {
    for (const auto& c : cases(11, 150)) {
        const int d = classify(c.model, c.params).classification.level.degree;
        if (d < 4) {
            EXPECT_TRUE(level_predicate(Level::from_degree(d), c.model, c.params)) << c.label;
        }
        for (int k = 0; k < d && k < 4; ++k) {
            EXPECT_FALSE(level_predicate(Level::from_degree(k), c.model, c.params)) << c.label << " at " << k;
        }
    }
}

TEST(Properties, SelfConsistency) {
    for (const auto& c : cases(12, 300)) {
        ClassifyResult r;
        ASSERT_NO_THROW(r = classify(c.model, c.params)) << c.label;
        EXPECT_TRUE(apply_implications(r.classification.derived()).empty()) << c.label;
        EXPECT_TRUE(check_level_bounds(r.classification, c.params).empty()) << c.label;
    }
}

TEST(Properties, TableRowsAndScopeBounds) {
    for (const auto& c : cases(13, 300)) {
        const auto cl = classify(c.model, c.params).classification;
        EXPECT_TRUE(row_matches(cl)) << c.label;
        EXPECT_TRUE(scope_within_bounds(cl, c.params)) << c.label;
        EXPECT_EQ(cl.variant == Variant::none, cl.level.degree <= 1) << c.label;
        EXPECT_TRUE(map_taxonomies(cl.level, cl.variant).has_value()) << c.label;
    }
}

TEST(Properties, PublicityMatchesLevel) {
    for (const auto& c : cases(14, 300)) {
        const auto cl = classify(c.model, c.params).classification;
        EXPECT_EQ(cl.publicity.satisfied, cl.level.degree >= 2) << c.label;
        if (cl.publicity.exception_applied) {
            EXPECT_EQ(cl.level.degree, 2) << c.label;
        }
    }
}

TEST(Properties, GroupFloor) {
    int seen = 0;
    for (const auto& c : cases(15, 600)) {
        if (!c.model.group_scheme) continue;
        ++seen;
        const auto r = classify(c.model, c.params);
        if (r.classification.group_anonymity) {
            EXPECT_GE(r.classification.level.degree, 2) << c.label;
        }
        if (r.classification.level.degree < 2) {
            EXPECT_FALSE(r.ok()) << c.label;
        }
    }
    EXPECT_GT(seen, 20);
}

TEST(Properties, TrustMonotonicityCorpus) {
    for (const auto& c : load_all_corpus()) expect_trust_monotone(c.model, c.params.observee, c.meta->name);
}

TEST(Properties, TrustMonotonicityFuzzed) {
    ModelGen gen(16, GenLimits{6, 5, 7, 2, true});
    for (int i = 0; i < 150; ++i) {
        const auto m = gen.model();
        for (const auto& role : role_names(m)) expect_trust_monotone(m, role, serialize(m));
    }
}

TEST(Properties, SweepAgreesWithMaskOracle) {
    for (const auto& c : load_all_corpus()) {
        const auto names = optional_participants(c.model, c.params.observee);
        const auto deg = degrees_by_mask(c.model, c.params.observee, names);
        const auto s = sweep(c.model, c.params.observee);
        ASSERT_EQ(s.entries.size(), deg.size()) << c.meta->name;
        for (const auto& e : s.entries) {
            std::size_t mask = 0;
            for (std::size_t i = 0; i < names.size(); ++i) {
                if (e.trusted.count(names[i])) mask |= std::size_t{1} << i;
            }
            EXPECT_EQ(e.result.classification.level.degree, deg[mask]) << c.meta->name;
        }
    }
}

TEST(Properties, FactMonotonicity) {
    ModelGen gen(17, GenLimits{5, 5, 6, 2, true});
    int pairs = 0;
    while (pairs < 200) {
        const auto m = gen.model();
        if (m.pii_items.empty()) continue;
        auto bigger = m;
        if (gen.chance(0.7)) {
            bigger.exposures.push_back(gen.exposure(m));
        } else if (auto a = gen.attachment(m)) {
            bigger.attachments.push_back(*a);
        } else {
            continue;
        }
        ASSERT_TRUE(validate_model(bigger).empty()) << serialize(bigger);
        ++pairs;
        for (const auto& role : role_names(m)) {
            const auto p = params_for(m, role);
            EXPECT_LE(classify(bigger, p).classification.level.degree, classify(m, p).classification.level.degree)
                << serialize(m) << "+\n"
                << serialize(bigger);
        }
    }
}

TEST(Properties, Determinism) {
    for (const auto& c : cases(18, 100)) {
        EXPECT_EQ(classify(c.model, c.params), classify(c.model, c.params)) << c.label;
    }
    for (const auto& c : load_all_corpus()) {
        const auto a = sweep(c.model, c.params.observee);
        const auto b = sweep(c.model, c.params.observee);
        ASSERT_EQ(a.entries.size(), b.entries.size());
        for (std::size_t i = 0; i < a.entries.size(); ++i) {
            EXPECT_EQ(a.entries[i].trusted, b.entries[i].trusted);
            EXPECT_EQ(a.entries[i].result, b.entries[i].result);
        }
    }
}

TEST(Properties, ClassificationIgnoresDeclarationOrder) {
    ModelGen gen(19);
    for (int i = 0; i < 100; ++i) {
        const auto m = gen.model();
        auto shuffled = m;
        std::shuffle(shuffled.entities.begin(), shuffled.entities.end(), gen.rng());
        std::shuffle(shuffled.pii_items.begin(), shuffled.pii_items.end(), gen.rng());
        std::shuffle(shuffled.exposures.begin(), shuffled.exposures.end(), gen.rng());
        for (const auto& role : role_names(m)) {
            const auto p = params_for(m, role);
            EXPECT_EQ(classify(m, p), classify(shuffled, p)) << serialize(m);
        }
    }
}
