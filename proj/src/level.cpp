#include "anonlevel/level.hpp"

#include <cctype>
#include <string>

namespace anonlevel {

const Level& Level::void_anonymity() { return kLevels[0]; }
const Level& Level::apparent() { return kLevels[1]; }
const Level& Level::revocable() { return kLevels[2]; }
const Level& Level::forfeitable() { return kLevels[3]; }
const Level& Level::unconditional() { return kLevels[4]; }

const Level& Level::from_degree(int degree) {
    if (degree < 0) return kLevels.front();
    if (degree > 4) return kLevels.back();
    return kLevels[static_cast<std::size_t>(degree)];
}

std::optional<Level> Level::parse(std::string_view text) {
    if (text.size() == 1 && text[0] >= '0' && text[0] <= '4') return from_degree(text[0] - '0');
    std::string upper;
    for (char c : text) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    for (const auto& level : kLevels) {
        if (upper == level.abbr || text == level.name) return level;
    }
    return std::nullopt;
}

}  // namespace anonlevel
