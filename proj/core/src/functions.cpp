#include "halfstrip/functions.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <string>

namespace halfstrip {

std::string to_string(Membership m) {
    switch (m) {
        case Membership::Plus: return "plus";
        case Membership::Minus: return "minus";
        case Membership::Mixed: return "mixed";
        case Membership::None: return "none";
    }
    return "?";
}

namespace {

std::string strip_spaces(std::string_view s) {
    std::string out;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

double parse_real(const std::string& s, std::string_view whole) {
    if (s.empty()) throw ParameterError("malformed number in '" + std::string(whole) + "'");
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v))
        throw ParameterError("malformed number '" + s + "' in '" + std::string(whole) + "'");
    return v;
}

class Parser {
public:
    explicit Parser(std::string_view text) : src_(text), s_(strip_spaces(text)) {}

    ClosedForm run() {
        if (s_.empty()) fail("empty function spec");
        ClosedForm out = expr();
        if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
        out.text = std::string(src_);
        return out;
    }

private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParameterError("function spec '" + std::string(src_) + "': " + why);
    }

    bool eat(char ch) {
        if (pos_ < s_.size() && s_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char ch) {
        if (!eat(ch)) fail(std::string("expected '") + ch + "'");
    }

    static ClosedForm combine_sum(ClosedForm a, ClosedForm b, double sign) {
        if (b.is_zero) return a;
        if (a.is_zero) {
            if (sign < 0.0) {
                auto f = b.f;
                b.f = [f](cplx w) { return -f(w); };
            }
            return b;
        }
        ClosedForm out;
        auto fa = a.f;
        auto fb = b.f;
        out.f = [fa, fb, sign](cplx w) { return fa(w) + sign * fb(w); };
        out.decay = tail_sum(a.decay, b.decay);
        out.poles = a.poles;
        out.poles.insert(out.poles.end(), b.poles.begin(), b.poles.end());
        out.has_exponential = a.has_exponential || b.has_exponential;
        return out;
    }

    static ClosedForm combine_product(ClosedForm a, ClosedForm b) {
        if (a.is_zero) return a;
        if (b.is_zero) return b;
        ClosedForm out;
        auto fa = a.f;
        auto fb = b.f;
        out.f = [fa, fb](cplx w) { return fa(w) * fb(w); };
        out.decay = tail_product(a.decay, b.decay);
        out.poles = a.poles;
        out.poles.insert(out.poles.end(), b.poles.begin(), b.poles.end());
        out.has_exponential = a.has_exponential || b.has_exponential;
        return out;
    }

    ClosedForm expr() {
        ClosedForm acc = term();
        while (pos_ < s_.size()) {
            if (eat('+'))
                acc = combine_sum(std::move(acc), term(), 1.0);
            else if (eat('-'))
                acc = combine_sum(std::move(acc), term(), -1.0);
            else
                break;
        }
        return acc;
    }

    ClosedForm term() {
        ClosedForm acc = factor();
        while (eat('*')) acc = combine_product(std::move(acc), factor());
        return acc;
    }

    // Text up to the next ',' or ')' at this nesting level.
    std::string argument() {
        const size_t start = pos_;
        while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')') ++pos_;
        if (pos_ == start) fail("missing argument");
        return s_.substr(start, pos_ - start);
    }

    bool keyword(const char* kw) {
        const size_t n = std::char_traits<char>::length(kw);
        if (s_.compare(pos_, n, kw) == 0 && pos_ + n < s_.size() && s_[pos_ + n] == '(') {
            pos_ += n + 1;
            return true;
        }
        return false;
    }

    ClosedForm factor() {
        if (eat('(')) {
            ClosedForm inner = expr();
            expect(')');
            return inner;
        }
        if (keyword("pole")) {
            const cplx w0 = complex_arg();
            int k = 1;
            if (eat(',')) {
                const std::string ks = argument();
                char* end = nullptr;
                const long v = std::strtol(ks.c_str(), &end, 10);
                if (end != ks.c_str() + ks.size() || v < 1 || v > 64) fail("pole order must be an integer in [1, 64]");
                k = static_cast<int>(v);
            }
            expect(')');
            ClosedForm out;
            out.f = [w0, k](cplx w) {
                const cplx d = w - w0;
                return k == 1 ? 1.0 / d : std::pow(d, -k);
            };
            out.decay = TailBound::algebraic(k);
            out.poles = {{w0, k}};
            return out;
        }
        if (keyword("expw")) {
            const double lam = parse_real(argument(), src_);
            expect(')');
            if (lam < 0.0) fail("expw requires lambda >= 0");
            ClosedForm out;
            out.f = [lam](cplx w) { return std::exp(cplx(0.0, lam) * w); };
            out.decay = lam > 0.0 ? TailBound::exponential(lam) : TailBound::algebraic(0.0);
            out.has_exponential = lam > 0.0;
            return out;
        }
        if (keyword("scale")) {
            const cplx c = complex_arg();
            expect(')');
            ClosedForm out;
            out.f = [c](cplx) { return c; };
            out.decay = TailBound::algebraic(0.0);
            out.is_zero = c == cplx{};
            if (out.is_zero) out.decay = TailBound::exponential(1.0);
            return out;
        }
        fail(pos_ < s_.size() ? "unknown token at '" + s_.substr(pos_) + "'" : "unexpected end of input");
    }

    cplx complex_arg() {
        const std::string a = argument();
        try {
            return parse_complex(a);
        } catch (const ParameterError& e) {
            fail(e.what());
        }
    }

    std::string_view src_;
    std::string s_;
    size_t pos_ = 0;
};

}  // namespace

cplx parse_complex(std::string_view text) {
    const std::string s = strip_spaces(text);
    if (s.empty()) throw ParameterError("empty complex literal");
    if (s.back() != 'i') return {parse_real(s, text), 0.0};
    const std::string body = s.substr(0, s.size() - 1);
    size_t split = std::string::npos;
    for (size_t k = body.size(); k-- > 1;) {
        if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    auto imag_of = [&](const std::string& t) {
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return parse_real(t, text);
    };
    if (split == std::string::npos) return {0.0, imag_of(body)};
    return {parse_real(body.substr(0, split), text), imag_of(body.substr(split))};
}

std::vector<cplx> parse_points(std::string_view text) {
    std::vector<cplx> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) out.push_back(parse_complex(cur));
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',' || ch == ';' || std::isspace(static_cast<unsigned char>(ch)))
            flush();
        else
            cur.push_back(ch);
    }
    flush();
    if (out.empty()) throw ParameterError("no points given");
    return out;
}

ClosedForm parse_function(std::string_view spec) { return Parser(spec).run(); }

double ClosedForm::p_min() const {
    if (is_zero) return 0.0;
    if (decay.kind == TailBound::Kind::Exponential) return 0.0;
    if (decay.kind == TailBound::Kind::Algebraic && decay.rate > 0.0) return 1.0 / decay.rate;
    return std::numeric_limits<double>::infinity();
}

Membership ClosedForm::membership(const StripGeometry& g) const {
    if (is_zero) return Membership::Plus;
    if (!(decay.kind == TailBound::Kind::Exponential || (decay.kind == TailBound::Kind::Algebraic && decay.rate > 0.0)))
        return Membership::None;
    bool in_plus = false, in_minus = false;
    for (const auto& p : poles) {
        const Region r = classify(p.location, g);
        if (is_boundary(r)) return Membership::None;
        (r == Region::OmegaPlus ? in_plus : in_minus) = true;
    }
    if (in_plus && in_minus) return Membership::Mixed;
    if (in_plus) return has_exponential ? Membership::Mixed : Membership::Minus;
    return Membership::Plus;
}

BoundaryFunction ClosedForm::boundary() const {
    BoundaryFunction b;
    b.eval = f;
    b.decay = decay;
    b.p_min = p_min();
    return b;
}

AnalyticFunction ClosedForm::analytic(Side side, const StripGeometry& g) const {
    AnalyticFunction a;
    a.eval = f;
    a.region = RegionTag::omega(side);
    a.geometry = g;
    a.decay = decay;
    a.continuous_to_boundary = true;
    return a;
}

}  // namespace halfstrip
