#pragma once

// The example models shipped inside the library. Each file documents its
// own analysis parameters and expected outcome in header comments:
//
//   # observee: NAME
//   # trust: NAME[, NAME...]          (optional)
//   # expect: ABBR VARIANT [group]

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anonlevel/level.hpp"

namespace anonlevel {

namespace detail {
struct EmbeddedFile {
    const char* name;
    const char* text;
};
extern const EmbeddedFile kEmbeddedCorpus[];
extern const std::size_t kEmbeddedCorpusSize;
}  // namespace detail

struct CorpusModel {
    std::string name;
    std::string text;
    std::string observee;
    std::vector<std::string> trust;
    Level expected_level;
    Variant expected_variant = Variant::none;
    bool expects_group_anonymity = false;
};

/// All embedded models, sorted by name.
const std::vector<CorpusModel>& corpus();

const CorpusModel* find_corpus_model(std::string_view name);

}  // namespace anonlevel
