#include "wright/manifest.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "wright/errors.hpp"

namespace wright {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& what)
{
    throw ManifestError("manifest line " + std::to_string(line) + ": " + what);
}

}  // namespace

double parse_number(const std::string& s)
{
    const std::string t = trim(s);
    double v = 0.0;
    const char* first = t.data();
    const char* last = t.data() + t.size();
    if (!t.empty() && *first == '+') {
        ++first;
    }
    const auto r = std::from_chars(first, last, v);
    if (t.empty() || r.ec != std::errc() || r.ptr != last) {
        throw ManifestError("not a number: '" + t + "'");
    }
    return v;
}

void ManifestSection::set(const std::string& key, const std::string& value, int line)
{
    if (!entries_.emplace(key, value).second) {
        fail(line, "duplicate key '" + key + "'");
    }
}

const std::string& ManifestSection::text(const std::string& key) const
{
    const auto it = entries_.find(key);
    if (it == entries_.end()) {
        fail(line_, "section [" + type_ + "] is missing key '" + key + "'");
    }
    return it->second;
}

double ManifestSection::number(const std::string& key) const
{
    try {
        return parse_number(text(key));
    } catch (const ManifestError& e) {
        fail(line_, "key '" + key + "': " + e.what());
    }
}

std::vector<double> ManifestSection::numbers(const std::string& key) const
{
    std::vector<double> out;
    std::stringstream ss(text(key));
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(parse_number(item));
        } catch (const ManifestError& e) {
            fail(line_, "key '" + key + "': " + e.what());
        }
    }
    if (out.empty()) {
        fail(line_, "key '" + key + "' has no values");
    }
    return out;
}

std::vector<ManifestSection> parse_manifest(std::istream& in)
{
    std::vector<ManifestSection> sections;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const auto hash = raw.find('#');
        const std::string s = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (s.empty()) {
            continue;
        }
        if (s.front() == '[') {
            if (s.back() != ']' || s.size() < 3) {
                fail(line, "malformed section header '" + s + "'");
            }
            sections.emplace_back(trim(s.substr(1, s.size() - 2)), line);
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string::npos) {
            fail(line, "expected 'key = value', got '" + s + "'");
        }
        if (sections.empty()) {
            fail(line, "entry before the first section header");
        }
        const std::string key = trim(s.substr(0, eq));
        const std::string value = trim(s.substr(eq + 1));
        if (key.empty() || value.empty()) {
            fail(line, "empty key or value");
        }
        sections.back().set(key, value, line);
    }
    return sections;
}

std::vector<ManifestSection> load_manifest(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        throw ManifestError("cannot open manifest " + path);
    }
    return parse_manifest(in);
}

}  // namespace wright
