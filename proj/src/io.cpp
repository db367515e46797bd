#include "padiccf/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace padiccf {

namespace {

std::string strip(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool valid_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rat parse_rational(const std::string& text) {
    std::string t = strip(text);
    std::size_t slash = t.find('/');
    std::string ns = slash == std::string::npos ? t : strip(t.substr(0, slash));
    std::string ds = slash == std::string::npos ? "1" : strip(t.substr(slash + 1));
    if (!valid_integer(ns) || !valid_integer(ds))
        throw ParseError("not a rational: '" + text + "' (expected n or n/d)");
    Int n(ns), d(ds);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return make_rational(n, d);
}

HenselBranch parse_branch(const std::string& text) {
    std::string t = strip(text);
    if (t == "+" || t == "plus") return HenselBranch::PlusRoot;
    if (t == "-" || t == "minus") return HenselBranch::MinusRoot;
    throw ParseError("branch must be '+' or '-', got '" + text + "'");
}

SurdElement parse_surd(const std::string& text, HenselBranch branch) {
    std::string t = strip(text);
    if (t.find("sqrt") == std::string::npos) return SurdElement(parse_rational(t), 0, 2, branch);

    if (t.front() == '(' && t.back() == ')') t = strip(t.substr(1, t.size() - 2));
    std::size_t s = t.find("sqrt");

    // split "a +/- b*" from "sqrt(D)" at the sign separating the two terms
    std::size_t sep = std::string::npos;
    for (std::size_t i = 1; i < s; ++i) {
        char c = t[i];
        if ((c == '+' || c == '-') && std::isspace(static_cast<unsigned char>(t[i - 1])))
            sep = i;
    }
    if (sep == std::string::npos) throw ParseError("not a surd: '" + text + "'");

    Rat a = parse_rational(t.substr(0, sep));
    bool negative = t[sep] == '-';
    std::string brest = strip(t.substr(sep + 1, s - sep - 1));
    Rat b = 1;
    if (!brest.empty()) {
        if (brest.back() == '*') brest = strip(brest.substr(0, brest.size() - 1));
        if (!brest.empty()) b = parse_rational(brest);
    }
    if (negative) b = -b;

    std::string drest = strip(t.substr(s + 4));
    if (drest.size() < 3 || drest.front() != '(' || drest.back() != ')')
        throw ParseError("not a surd: '" + text + "' (expected sqrt(D))");
    std::string dstr = strip(drest.substr(1, drest.size() - 2));
    if (!valid_integer(dstr)) throw ParseError("not an integer radicand: '" + dstr + "'");
    return SurdElement(a, b, Int(dstr), branch);
}

std::vector<Int> parse_coefficients(const std::string& text) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = strip(item);
        if (!valid_integer(item)) throw ParseError("bad coefficient '" + item + "' in '" + text + "'");
        out.emplace_back(item);
    }
    if (out.empty()) throw ParseError("empty coefficient list");
    return out;
}

std::vector<Rat> parse_sequence(const std::string& text) {
    std::vector<Rat> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;
        out.push_back(parse_rational(line));
    }
    return out;
}

std::vector<Rat> read_sequence_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sequence file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_sequence(buf.str());
}

}  // namespace padiccf
