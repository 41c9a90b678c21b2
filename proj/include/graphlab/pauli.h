#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace graphlab {

enum class PauliAxis { kX, kY, kZ };

inline constexpr std::array<PauliAxis, 3> kAllAxes = {PauliAxis::kX, PauliAxis::kY, PauliAxis::kZ};

inline char axis_char(PauliAxis a) {
    switch (a) {
        case PauliAxis::kX:
            return 'x';
        case PauliAxis::kY:
            return 'y';
        case PauliAxis::kZ:
            return 'z';
    }
    return '?';
}

inline std::optional<PauliAxis> parse_axis(char c) {
    switch (c) {
        case 'x':
        case 'X':
            return PauliAxis::kX;
        case 'y':
        case 'Y':
            return PauliAxis::kY;
        case 'z':
        case 'Z':
            return PauliAxis::kZ;
        default:
            return std::nullopt;
    }
}

/// A single-qubit Pauli factor acting on one vertex/qubit.
struct PauliTerm {
    int qubit;
    PauliAxis axis;
};

}  // namespace graphlab
