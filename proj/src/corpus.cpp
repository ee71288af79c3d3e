#include "anonlevel/corpus.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace anonlevel {
namespace {

std::string trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_words(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, sep)) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

CorpusModel load(const detail::EmbeddedFile& file) {
    CorpusModel m;
    m.name = file.name;
    m.text = file.text;
    bool have_expectation = false;
    std::istringstream in(m.text);
    std::string line;
    while (std::getline(in, line) && line.rfind('#', 0) == 0) {
        const auto colon = line.find(':');
        if (colon == std::string::npos) continue;
        const std::string key = trim(std::string_view(line).substr(1, colon - 1));
        const std::string value = trim(std::string_view(line).substr(colon + 1));
        if (key == "observee") {
            m.observee = value;
        } else if (key == "trust") {
            m.trust = split_words(value, ',');
        } else if (key == "expect") {
            const auto words = split_words(value, ' ');
            if (words.size() < 2) throw std::logic_error("bad expectation in corpus model " + m.name);
            const auto level = Level::parse(words[0]);
            const auto variant = from_string<Variant>(words[1]);
            if (!level || !variant) throw std::logic_error("bad expectation in corpus model " + m.name);
            m.expected_level = *level;
            m.expected_variant = *variant;
            m.expects_group_anonymity = words.size() > 2 && words[2] == "group";
            have_expectation = true;
        }
    }
    if (m.observee.empty() || !have_expectation) {
        throw std::logic_error("corpus model " + m.name + " lacks its header");
    }
    return m;
}

}  // namespace

const std::vector<CorpusModel>& corpus() {
    static const std::vector<CorpusModel> models = [] {
        std::vector<CorpusModel> out;
        for (std::size_t i = 0; i < detail::kEmbeddedCorpusSize; ++i) out.push_back(load(detail::kEmbeddedCorpus[i]));
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
        return out;
    }();
    return models;
}

const CorpusModel* find_corpus_model(std::string_view name) {
    for (const auto& m : corpus()) {
        if (m.name == name) return &m;
    }
    return nullptr;
}

}  // namespace anonlevel
