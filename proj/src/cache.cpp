#include "sphaera/cache.hpp"

#include <atomic>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

#include <unistd.h>

namespace sphaera {

namespace fs = std::filesystem;

std::string Cache::digest(const std::string& key) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char ch : key) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << h;
    return os.str();
}

namespace {

std::optional<std::string> slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool write_atomic(const fs::path& target, const std::string& data) {
    static std::atomic<unsigned> counter{0};
    fs::path tmp = target;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) return false;
        out << data;
        if (!out.flush()) return false;
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) fs::remove(tmp, ec);
    return !ec;
}

}  // namespace

std::optional<std::string> Cache::get(const std::string& key) const {
    std::string d = digest(key);
    auto stored = slurp(dir_ / (d + ".key"));
    if (!stored || *stored != key) return std::nullopt;
    return slurp(dir_ / (d + ".out"));
}

bool Cache::put(const std::string& key, const std::string& value) const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) return false;
    std::string d = digest(key);
    // value first: a key file only ever points at a complete value
    return write_atomic(dir_ / (d + ".out"), value) && write_atomic(dir_ / (d + ".key"), key);
}

}  // namespace sphaera
