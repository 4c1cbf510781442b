#include "vspread/caps.hpp"

#include <cstdlib>
#include <string>

#include "vspread/errors.hpp"

namespace vspread {

static std::size_t parse_count(const std::string& v) {
    std::size_t pos = 0;
    unsigned long long x = 0;
    try {
        x = std::stoull(v, &pos);
    } catch (const std::exception&) {
        throw InvalidInput("VSPREAD_CAP: not a number: " + v);
    }
    if (pos != v.size() || x == 0)
        throw InvalidInput("VSPREAD_CAP: expected a positive integer, got: " + v);
    return static_cast<std::size_t>(x);
}

Caps parse_caps(const char* spec) {
    Caps c;
    if (!spec || !*spec)
        return c;
    std::string s(spec);
    if (s.find('=') == std::string::npos) {
        c.intersection_gens = parse_count(s);
        return c;
    }
    std::size_t start = 0;
    while (start <= s.size()) {
        std::size_t comma = s.find(',', start);
        std::string item = s.substr(start, comma == std::string::npos ? std::string::npos
                                                                      : comma - start);
        if (!item.empty()) {
            std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw InvalidInput("VSPREAD_CAP: expected key=value, got: " + item);
            std::string key = item.substr(0, eq);
            std::string val = item.substr(eq + 1);
            if (key == "gens")
                c.intersection_gens = parse_count(val);
            else if (key == "oracle-vars")
                c.oracle_vars = static_cast<int>(parse_count(val));
            else if (key == "linquot")
                c.linquot_gens = parse_count(val);
            else
                throw InvalidInput("VSPREAD_CAP: unknown key: " + key);
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return c;
}

const Caps& caps() {
    static const Caps c = parse_caps(std::getenv("VSPREAD_CAP"));
    return c;
}

} // namespace vspread
