#include "covertool/io.hpp"

#include <cctype>

namespace covertool {

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_ws() {
        while (!done() && peek() != '\n' && std::isspace(static_cast<unsigned char>(peek())))
            advance();
    }
    [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, line, col); }

    Int read_int(const char* what) {
        skip_ws();
        std::string digits;
        if (!done() && (peek() == '-' || peek() == '+')) {
            digits += peek();
            advance();
            skip_ws();
        }
        while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
            digits += peek();
            advance();
        }
        if (digits.empty() || digits == "-" || digits == "+")
            fail(std::string("expected ") + what);
        try {
            return std::stoll(digits);
        } catch (const std::out_of_range&) {
            fail(std::string(what) + " out of range");
        }
    }
    void expect(char c) {
        skip_ws();
        if (done() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }
};

}  // namespace

System parse_system_text(const std::string& text) {
    Cursor cur{text};
    std::vector<ResidueClass> classes;
    for (;;) {
        cur.skip_ws();
        while (!cur.done() && (cur.peek() == ',' || cur.peek() == '\n')) {
            cur.advance();
            cur.skip_ws();
        }
        if (cur.done()) break;
        int line = cur.line, col = cur.col;
        Int a = cur.read_int("residue");
        cur.expect('(');
        Int n = cur.read_int("modulus");
        cur.expect(')');
        if (n <= 0)
            throw InvalidModulus("modulus must be positive, got " + std::to_string(n) +
                                 " (line " + std::to_string(line) + ", column " +
                                 std::to_string(col) + ")");
        classes.emplace_back(a, n);
        cur.skip_ws();
        if (cur.done()) break;
        if (cur.peek() != ',' && cur.peek() != '\n') cur.fail("expected ',' or end of line");
    }
    return System(std::move(classes), false);
}

System system_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("classes") || !j["classes"].is_array())
        throw ParseError("expected an object with a \"classes\" list", 1, 1);
    std::vector<ResidueClass> classes;
    for (const auto& item : j["classes"]) {
        if (!item.is_object() || !item.contains("a") || !item.contains("n") ||
            !item["a"].is_number_integer() || !item["n"].is_number_integer())
            throw ParseError("each class must be {\"a\": int, \"n\": int}", 1, 1);
        Int n = item["n"].get<Int>();
        if (n <= 0)
            throw InvalidModulus("modulus must be positive, got " + std::to_string(n));
        classes.emplace_back(item["a"].get<Int>(), n);
    }
    bool distinguished = j.value("distinguished", false);
    if (distinguished && classes.empty())
        throw ParseError("distinguished flag needs at least one class", 1, 1);
    return System(std::move(classes), distinguished);
}

System parse_system_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), 1,
                         static_cast<int>(e.byte));
    }
    return system_from_json(j);
}

System parse_system(const std::string& text) {
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        if (c == '{') return parse_system_json(text);
        break;
    }
    return parse_system_text(text);
}

std::string format_system(const System& system) {
    std::string out;
    for (const auto& c : system.all()) {
        if (!out.empty()) out += ",";
        out += c.str();
    }
    return out;
}

nlohmann::json system_to_json(const System& system) {
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& c : system.all()) classes.push_back({{"a", c.a}, {"n", c.n}});
    nlohmann::json j{{"classes", classes}};
    if (system.distinguished()) j["distinguished"] = true;
    return j;
}

}  // namespace covertool
