#pragma once

#include <cstdint>
#include <string_view>

namespace fuglab::detail {

// FNV-1a, used for transcription checksums on built-in data and input files.
inline std::uint64_t fnv1a64(std::string_view bytes, std::uint64_t seed = 0xcbf29ce484222325ULL) {
    std::uint64_t h = seed;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace fuglab::detail
