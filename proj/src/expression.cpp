#include "ghostalg/expression.hpp"

#include <cctype>

namespace ghost {

namespace {

class Parser {
public:
    Parser(std::string_view s, const Scene& sc) : s_(s), scene_(sc), sig_(sc.signature()) {}

    GhostElement parse() {
        GhostElement e = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected '" + std::string(s_.substr(pos_, 1)) + "'");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(std::string_view tok) {
        skip();
        if (s_.substr(pos_, tok.size()) == tok) {
            pos_ += tok.size();
            return true;
        }
        return false;
    }

    void expect(std::string_view tok) {
        if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
    }

    bool at_number() {
        skip();
        return pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]));
    }

    static bool ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    }

    std::string identifier() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
        if (b == pos_) fail("expected a name");
        return std::string(s_.substr(b, pos_ - b));
    }

    std::string number() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            ++pos_;
            std::size_t d = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (d == pos_) fail("expected a denominator");
        }
        return std::string(s_.substr(b, pos_ - b));
    }

    // A point token inside a geodesic literal: a name, an optionally signed rational, or infinity.
    std::string point_token() {
        skip();
        if (eat("∞")) return "inf";
        std::string sign = eat("-") ? "-" : "";
        if (at_number()) return sign + number();
        if (!sign.empty()) fail("expected a point");
        return identifier();
    }

    BoundaryPoint point() {
        std::size_t at = pos_;
        std::string t = point_token();
        try {
            return scene_.point(t);
        } catch (const SceneError& e) {
            pos_ = at;
            fail(e.what());
        }
    }

    int label_suffix() {
        if (!eat("@")) return 1;
        skip();
        std::size_t at = pos_;
        std::string n = number();
        if (n.find('/') != std::string::npos) {
            pos_ = at;
            fail("labels are positive integers");
        }
        return std::stoi(n);
    }

    ThetaGeodesic checked(ThetaGeodesic g, std::size_t at) {
        if (g.label < 1 || g.label > sig_.size()) {
            pos_ = at;
            fail("label " + std::to_string(g.label) + " is not valid for the signature");
        }
        return g;
    }

    // '(' already consumed; tries point '->' point ')'.
    std::optional<ThetaGeodesic> try_geodesic_literal() {
        std::size_t save = pos_;
        try {
            BoundaryPoint a = point();
            if (!eat("->") && !eat("→")) {
                pos_ = save;
                return std::nullopt;
            }
            BoundaryPoint b = point();
            expect(")");
            return checked(ThetaGeodesic(a, b, label_suffix()), save);
        } catch (const ParseError&) {
            pos_ = save;
            return std::nullopt;
        }
    }

    // point '->' point ['@' label], without parentheses.
    std::optional<ThetaGeodesic> try_bare_literal() {
        skip();
        std::size_t save = pos_;
        try {
            BoundaryPoint a = point();
            if (!eat("->") && !eat("→")) {
                pos_ = save;
                return std::nullopt;
            }
            BoundaryPoint b = point();
            return checked(ThetaGeodesic(a, b, label_suffix()), save);
        } catch (const ParseError&) {
            pos_ = save;
            return std::nullopt;
        }
    }

    ThetaGeodesic geodesic_ref() {
        skip();
        std::size_t at = pos_;
        if (eat("(")) {
            if (auto g = try_geodesic_literal()) return *g;
            fail("expected a geodesic literal");
        }
        if (auto g = try_bare_literal()) return *g;
        std::string name = identifier();
        if (!scene_.has_geodesic(name)) {
            pos_ = at;
            fail("unknown geodesic '" + name + "'");
        }
        return scene_.geodesic(name);
    }

    GhostElement expr() {
        GhostElement e = term();
        for (;;) {
            if (eat("+")) e += term();
            else if (peek_minus()) e -= term();
            else return e;
        }
    }

    bool peek_minus() {
        skip();
        if (s_.substr(pos_, 3) == "−") {  // U+2212
            pos_ += 3;
            return true;
        }
        // "->" never appears at this level, but keep it intact for literals.
        if (pos_ < s_.size() && s_[pos_] == '-' && s_.substr(pos_, 2) != "->") {
            ++pos_;
            return true;
        }
        return false;
    }

    GhostElement term() {
        GhostElement e = unary();
        while (eat("*") || eat("·")) e = e * unary();
        return e;
    }

    GhostElement unary() {
        if (peek_minus()) return -unary();
        return atom();
    }

    GhostElement atom() {
        skip();
        std::size_t at = pos_;
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        if (auto g = try_bare_literal()) return GhostElement::geodesic(*g);
        if (at_number()) return GhostElement::scalar(parse_rational(number()));
        if (eat("𝟙")) return GhostElement::casimir();
        if (eat("[")) {
            GhostElement a = expr();
            expect(",");
            GhostElement b = expr();
            expect("]");
            return bracket(a, b, sig_);
        }
        if (eat("⌈")) {
            std::vector<ThetaGeodesic> gs{geodesic_ref()};
            while (eat(",")) gs.push_back(geodesic_ref());
            expect("⌉");
            return GhostElement(Configuration(gs));
        }
        if (eat("(")) {
            if (auto g = try_geodesic_literal()) return GhostElement::geodesic(*g);
            GhostElement e = expr();
            expect(")");
            return e;
        }
        std::string name = identifier();
        if (scene_.has_configuration(name) || scene_.has_geodesic(name)) return GhostElement(scene_.configuration(name));
        if (name == "casimir" || name == "Casimir") return GhostElement::casimir();
        pos_ = at;
        fail("unknown name '" + name + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
    const Scene& scene_;
    ThetaSignature sig_;
};

}  // namespace

GhostElement parse_expression(std::string_view text, const Scene& scene) { return Parser(text, scene).parse(); }

}  // namespace ghost
