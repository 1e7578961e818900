#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "imbalance/functable.hpp"
#include "imbalance/gfield.hpp"

namespace testing {

/// Group shapes used by the property tests.
inline std::vector<std::pair<std::string, std::string>> mixed_shapes() {
    return {{"2 2 2", "2 2"}, {"6", "3"}, {"4", "4"},   {"5", "3"},   {"2 2", "2 2"}, {"3 3", "3"},
            {"2 4", "2"},     {"7", "7"}, {"2 3", "6"}, {"2 2 2 2", "2 2 2 2"}, {"9", "3"}, {"4", "2 2"}};
}

/// AES S-box: inversion in GF(2^8) followed by the fixed affine map.
inline imbalance::FunctionTable aes_sbox() {
    auto field = imbalance::make_field(2, 8);
    auto inv = imbalance::build_inverse(field);
    std::vector<std::uint32_t> out(256);
    auto rotl = [](std::uint32_t b, int s) { return ((b << s) | (b >> (8 - s))) & 0xFF; };
    for (std::uint32_t x = 0; x < 256; ++x) {
        std::uint32_t b = inv(x);
        out[x] = b ^ rotl(b, 1) ^ rotl(b, 2) ^ rotl(b, 3) ^ rotl(b, 4) ^ 0x63;
    }
    return imbalance::FunctionTable(field.group(), field.group(), std::move(out));
}

}  // namespace testing
