#include "ds3/s3.hpp"

namespace ds3 {

namespace {
constexpr std::array<std::string_view, 6> kNames{"e", "c", "c2", "t", "tc", "tc2"};
}

std::string_view element_name(GroupElement g) { return kNames[static_cast<std::size_t>(g.index())]; }

std::optional<GroupElement> parse_element(std::string_view name) {
    for (int i = 0; i < s3::order; ++i) {
        if (kNames[static_cast<std::size_t>(i)] == name) return GroupElement(i);
    }
    return std::nullopt;
}

}  // namespace ds3
