#include <istream>
#include <sstream>
#include <stdexcept>

#include "fermat/error.hpp"
#include "fermat/linalg.hpp"
#include "fermat/parse.hpp"
#include "fermat/scheme.hpp"

namespace fermat {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// Splits on commas (or `sep`) that are not inside parentheses.
std::vector<std::string_view> split_top(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')') --depth;
        if (s[i] == sep && depth == 0) {
            out.push_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    out.push_back(trim(s.substr(start)));
    return out;
}

int parse_int(std::string_view s, std::size_t offset) {
    s = trim(s);
    if (s.empty()) throw ParseError("expected integer", offset);
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("expected integer", offset);
    return std::stoi(std::string(s));
}

// `... mult m` suffix; returns the body and the multiplicity.
std::pair<std::string_view, int> take_mult(std::string_view body, std::size_t offset) {
    const std::size_t at = body.rfind("mult");
    const std::size_t close = body.find_last_of(")}");
    if (at == std::string_view::npos || (close != std::string_view::npos && at < close)) return {body, 1};
    return {trim(body.substr(0, at)), parse_int(body.substr(at + 4), offset + at + 4)};
}

}  // namespace

FatScheme read_scheme(std::istream& in) {
    FatScheme scheme;
    bool ambient_known = false;
    std::string line;
    std::size_t offset = 0;
    struct Pending {
        bool is_point;
        std::string text;
        std::size_t offset;
    };
    std::vector<Pending> pending;
    while (std::getline(in, line)) {
        const std::size_t line_offset = offset;
        offset += line.size() + 1;
        std::string_view s = line;
        if (auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
        s = trim(s);
        if (s.empty()) continue;
        if (s.rfind("ambient", 0) == 0) {
            scheme.ambient = parse_int(s.substr(7), line_offset + 7);
            if (scheme.ambient < 1) throw ParseError("ambient dimension must be >= 1", line_offset + 7);
            ambient_known = true;
        } else if (s.rfind("order", 0) == 0) {
            const int n = parse_int(s.substr(5), line_offset + 5);
            if (n < 1) throw ParseError("root order must be >= 1", line_offset + 5);
            scheme.root_order = lcm_order(scheme.root_order, n);
        } else if (s.rfind("point", 0) == 0 || s.rfind("flat", 0) == 0) {
            pending.push_back({s.rfind("point", 0) == 0, std::string(s), line_offset});
        } else {
            throw ParseError("expected 'ambient', 'order', 'point' or 'flat'", line_offset);
        }
    }
    for (const auto& p : pending) {
        std::string_view s = p.text;
        if (p.is_point) {
            auto [body, mult] = take_mult(trim(s.substr(5)), p.offset + 5);
            if (body.size() < 2 || body.front() != '(' || body.back() != ')')
                throw ParseError("expected '(c0 : c1 : ...)'", p.offset + 5);
            std::vector<Cyclo> coords;
            for (auto c : split_top(body.substr(1, body.size() - 2), ':')) coords.push_back(parse_scalar(c));
            if (!ambient_known) {
                scheme.ambient = static_cast<int>(coords.size()) - 1;
                ambient_known = true;
            }
            if (static_cast<int>(coords.size()) != scheme.ambient + 1)
                throw ParseError("point has " + std::to_string(coords.size()) + " coordinates", p.offset);
            try {
                scheme.add_point(ProjPoint(std::move(coords)), mult);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), p.offset);
            }
        } else {
            if (!ambient_known) throw ParseError("flat before the ambient dimension is known", p.offset);
            auto [body, mult] = take_mult(trim(s.substr(4)), p.offset + 4);
            if (body.size() < 2 || body.front() != '{' || body.back() != '}')
                throw ParseError("expected '{ eq: ... }'", p.offset + 4);
            std::string_view inner = trim(body.substr(1, body.size() - 2));
            if (inner.rfind("eq:", 0) != 0) throw ParseError("expected 'eq:'", p.offset + 5);
            CycloMatrix eqs;
            for (auto f : split_top(inner.substr(3), ',')) eqs.push_back(parse_linear_form(f, scheme.ambient + 1));
            try {
                scheme.add(Flat::from_equations(scheme.ambient, eqs), mult);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), p.offset);
            }
        }
    }
    return scheme;
}

FatScheme parse_scheme(std::string_view text) {
    std::istringstream in{std::string(text)};
    return read_scheme(in);
}

std::string write_scheme(const FatScheme& scheme) {
    std::ostringstream out;
    out << "ambient " << scheme.ambient << "\n";
    out << "order " << scheme.root_order << "\n";
    for (const auto& c : scheme.components) {
        if (c.flat.dim() == 0) {
            const auto p = c.flat.as_point();
            out << "point (";
            for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " : " : "") << scalar_literal(p.coords()[i]);
            out << ")";
        } else {
            out << "flat { eq: ";
            const auto& eqs = c.flat.equations();
            for (std::size_t i = 0; i < eqs.size(); ++i) out << (i ? ", " : "") << linear_form_to_string(eqs[i]);
            out << " }";
        }
        out << " mult " << c.mult << "\n";
    }
    return out.str();
}

}  // namespace fermat
