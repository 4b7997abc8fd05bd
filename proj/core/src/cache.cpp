#include "nestloc/cache.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

namespace nestloc {

std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string ResultCache::filename_for(const std::string& key) {
    std::string name;
    for (char c : key) {
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.')
            name += c;
        else
            name += '_';
    }
    if (name.size() > 120)
        name.resize(120);
    std::ostringstream os;
    os << name << "-" << std::hex << fnv1a64(key) << ".json";
    return os.str();
}

std::string ResultCache::get_or_compute(
    const std::string& key, const std::function<std::string()>& compute,
    const std::function<bool(const std::string&)>& validate) {
    if (dir_.empty())
        return compute();

    namespace fs = std::filesystem;
    fs::path dir(dir_);
    std::error_code ec;
    fs::create_directories(dir, ec);
    fs::path file = dir / filename_for(key);

    if (fs::exists(file, ec)) {
        std::ifstream in(file, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string payload = buf.str();
        if (in && validate(payload))
            return payload;
        std::cerr << "nestloc: cache entry " << file.string()
                  << " failed validation; recomputing\n";
    }

    std::string payload = compute();
    // temp file in the same directory, then atomic rename
    std::random_device rd;
    fs::path tmp = dir / (file.filename().string() + ".tmp." + std::to_string(rd()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << payload;
        if (!out) {
            std::error_code ec2;
            fs::remove(tmp, ec2);
            return payload; // caching failed silently; the result is still good
        }
    }
    fs::rename(tmp, file, ec);
    if (ec) {
        std::error_code ec2;
        fs::remove(tmp, ec2);
    }
    return payload;
}

} // namespace nestloc
