#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

/// Canonical experiment configuration format: plain text, one `key = value`
/// per line, `#` starts a comment, nesting through dotted keys
/// (`recipe.kappa = 0.5`). Values are free text up to end of line; lists are
/// whitespace-separated. Every key must be consumed by the runner; leftover
/// keys are reported as unknown, so typos fail loudly.
namespace frontlab {

/// Parse or lookup failure; the message carries file:line and field context.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

class KeyValueConfig {
public:
    static KeyValueConfig parse_file(const std::string& path);
    static KeyValueConfig parse_text(const std::string& text,
                                     const std::string& origin = "<memory>");

    bool has(const std::string& key) const;

    /// Typed getters mark the key as consumed; the no-default forms throw
    /// ConfigError when the key is missing or malformed.
    std::string get_string(const std::string& key) const;
    std::string get_string(const std::string& key,
                           const std::string& fallback) const;
    double get_double(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    int get_int(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<double> get_doubles(const std::string& key) const;

    /// Keys starting with prefix, sorted; does not mark them consumed.
    std::vector<std::string> keys_with_prefix(const std::string& prefix) const;

    /// Distinct values of the component following prefix, sorted: for keys
    /// `verdict.0.name`, `verdict.1.name`, groups("verdict.") = {"0", "1"}.
    std::vector<std::string> groups(const std::string& prefix) const;

    /// Keys never touched by a getter, sorted. The runner turns a nonempty
    /// answer into a rejection.
    std::vector<std::string> unconsumed_keys() const;

    const std::string& origin() const { return origin_; }
    const std::string& text() const { return text_; }

    /// Source line of a key (for error messages); 0 when absent.
    int line_of(const std::string& key) const;

    [[noreturn]] void fail(const std::string& key,
                           const std::string& problem) const;

private:
    struct Entry {
        std::string value;
        int line = 0;
        mutable bool used = false;
    };
    std::map<std::string, Entry> entries_;
    std::string origin_;
    std::string text_;  ///< verbatim input, for archive echoes

    const Entry* find(const std::string& key) const;
    const Entry& require(const std::string& key) const;
};

}  // namespace frontlab
