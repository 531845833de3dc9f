#pragma once

// Plain-text manifests: a sequence of sections, each opened by a `[type]`
// header and followed by `key = value` lines. `#` starts a comment; blank
// lines are ignored. A value may be a comma-separated list of numbers.

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace wright {

class ManifestSection {
public:
    ManifestSection(std::string type, int line) : type_(std::move(type)), line_(line) {}

    const std::string& type() const noexcept { return type_; }
    int line() const noexcept { return line_; }
    const std::map<std::string, std::string>& entries() const noexcept { return entries_; }

    // ManifestError on a duplicate key.
    void set(const std::string& key, const std::string& value, int line);
    bool has(const std::string& key) const { return entries_.count(key) != 0; }

    // Accessors throw ManifestError when the key is missing or malformed.
    const std::string& text(const std::string& key) const;
    double number(const std::string& key) const;
    std::vector<double> numbers(const std::string& key) const;

private:
    std::string type_;
    int line_;
    std::map<std::string, std::string> entries_;
};

// ManifestError (with line number) on malformed text.
std::vector<ManifestSection> parse_manifest(std::istream& in);
std::vector<ManifestSection> load_manifest(const std::string& path);

// Strict decimal parse of a whole string; ManifestError on trailing text.
double parse_number(const std::string& s);

}  // namespace wright
