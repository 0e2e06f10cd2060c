#include "ddmol/rng.hpp"

#include <string>

namespace ddmol {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

std::uint64_t RngStream::derive_seed(std::uint64_t root_seed, std::string_view scenario,
                                     std::uint64_t trial) {
    std::string id(scenario);
    id += '#';
    id += std::to_string(trial);
    return splitmix64(root_seed ^ splitmix64(fnv1a64(id)));
}

RngStream RngStream::derive(std::uint64_t root_seed, std::string_view scenario, std::uint64_t trial) {
    return RngStream(derive_seed(root_seed, scenario, trial));
}

} // namespace ddmol
