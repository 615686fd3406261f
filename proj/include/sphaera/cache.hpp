#pragma once

#include <filesystem>
#include <optional>
#include <string>

namespace sphaera {

// On-disk cache of command output. The file name is a hash of the key; the key
// itself is stored beside the value so collisions read as misses.
class Cache {
public:
    explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    std::optional<std::string> get(const std::string& key) const;
    // Write to a temporary file, then rename over the target.
    bool put(const std::string& key, const std::string& value) const;

    static std::string digest(const std::string& key);  // 64-bit FNV-1a, hex

private:
    std::filesystem::path dir_;
};

}  // namespace sphaera
