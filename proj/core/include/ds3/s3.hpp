#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <string_view>

namespace ds3 {

// An element of S3 in normal form t^a c^b, with a in {0,1} and b in {0,1,2},
// packed as the index 3a + b. Enumeration order: e, c, c2, t, tc, tc2.
class GroupElement {
public:
    constexpr GroupElement() = default;
    constexpr explicit GroupElement(int index) : idx_(static_cast<std::uint8_t>(index)) {}

    constexpr int index() const { return idx_; }
    constexpr int t_exponent() const { return idx_ / 3; }
    constexpr int c_exponent() const { return idx_ % 3; }
    constexpr bool is_identity() const { return idx_ == 0; }
    constexpr bool is_rotation() const { return idx_ < 3; }
    constexpr bool is_reflection() const { return idx_ >= 3; }

    friend constexpr bool operator==(GroupElement a, GroupElement b) { return a.idx_ == b.idx_; }
    friend constexpr bool operator!=(GroupElement a, GroupElement b) { return a.idx_ != b.idx_; }

private:
    std::uint8_t idx_ = 0;
};

namespace s3 {
inline constexpr GroupElement e{0}, c{1}, c2{2}, t{3}, tc{4}, tc2{5};
inline constexpr std::array<GroupElement, 6> all{e, c, c2, t, tc, tc2};
inline constexpr int order = 6;
}  // namespace s3

// Product in normal form. From tc = c^2 t one gets c^b t = t c^{-b}, so
//   t^ax c^bx * t^ay c^by = t^{(ax+ay) mod 2} c^{((-1)^ay bx + by) mod 3}.
constexpr GroupElement mul(GroupElement x, GroupElement y) {
    const int a = (x.t_exponent() + y.t_exponent()) & 1;
    const int bx = y.t_exponent() ? (3 - x.c_exponent()) % 3 : x.c_exponent();
    const int b = (bx + y.c_exponent()) % 3;
    return GroupElement(3 * a + b);
}

constexpr GroupElement inverse(GroupElement x) {
    if (x.is_reflection()) return x;  // reflections are involutions
    return GroupElement((3 - x.c_exponent()) % 3);
}

constexpr GroupElement conjugate(GroupElement g, GroupElement h) {
    return mul(mul(g, h), inverse(g));  // g h g^{-1}
}

// The three irreducible representations of S3.
enum class Irrep : std::uint8_t { Trivial = 0, Sign = 1, TwoDim = 2 };

inline constexpr std::array<Irrep, 3> kAllIrreps{Irrep::Trivial, Irrep::Sign, Irrep::TwoDim};

constexpr int irrep_dimension(Irrep a) { return a == Irrep::TwoDim ? 2 : 1; }

// Character table:
//   chi_Trivial = 1 everywhere
//   chi_Sign    = +1 on rotations, -1 on reflections
//   chi_TwoDim  = (2, -1, -1, 0, 0, 0) on (e, c, c2, t, tc, tc2)
constexpr int character(Irrep a, GroupElement g) {
    switch (a) {
        case Irrep::Trivial: return 1;
        case Irrep::Sign: return g.is_reflection() ? -1 : 1;
        case Irrep::TwoDim:
            if (g.is_reflection()) return 0;
            return g.c_exponent() == 0 ? 2 : -1;
    }
    return 0;
}

// omega = e^{i 2 pi / 3}; satisfies omega^3 = 1 and 1 + omega + omega^2 = 0.
inline constexpr std::complex<double> kOmega{-0.5, 0.86602540378443864676};

std::string_view element_name(GroupElement g);
std::optional<GroupElement> parse_element(std::string_view name);

}  // namespace ds3
