#include "dickson/qexpr.hpp"

#include <cctype>
#include <charconv>

namespace dickson {

namespace {

class Parser {
public:
    Parser(const FramePtr& frame, std::string_view src) : frame_(frame), src_(src) {}

    DicksonPoly run() {
        DicksonPoly v = expr();
        skip_ws();
        if (pos_ != src_.size())
            throw ParseError("unexpected trailing input", pos_);
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_])))
            ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    uint64_t integer(const char* what) {
        skip_ws();
        uint64_t v = 0;
        auto [ptr, ec] = std::from_chars(src_.data() + pos_, src_.data() + src_.size(), v);
        if (ec != std::errc() || ptr == src_.data() + pos_)
            throw ParseError(std::string("expected ") + what, pos_);
        pos_ = static_cast<size_t>(ptr - src_.data());
        return v;
    }

    DicksonPoly expr() {
        DicksonPoly v = term();
        while (true) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    DicksonPoly term() {
        DicksonPoly v = factor();
        while (eat('*'))
            v = v * factor();
        return v;
    }

    DicksonPoly factor() {
        if (eat('-'))
            return -factor();
        DicksonPoly base = primary();
        if (eat('^')) {
            size_t at = pos_;
            uint64_t e = integer("an exponent");
            if (e > 100000)
                throw ParseError("exponent too large", at);
            return base.pow(e);
        }
        return base;
    }

    DicksonPoly primary() {
        char c = peek();
        if (c == 'Q') {
            ++pos_;
            size_t at = pos_;
            uint64_t idx = integer("a generator index");
            if (idx >= frame_->n())
                throw ParseError("generator index out of range (n = " +
                                     std::to_string(frame_->n()) + ")",
                                 at);
            return frame_->generator(static_cast<size_t>(idx));
        }
        if (c == '(') {
            ++pos_;
            DicksonPoly v = expr();
            if (!eat(')'))
                throw ParseError("expected ')'", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            uint64_t v = integer("a number");
            return frame_->constant(frame_->field().reduce(v));
        }
        throw ParseError("expected a term", pos_);
    }

    FramePtr frame_;
    std::string_view src_;
    size_t pos_ = 0;
};

}  // namespace

DicksonPoly parse_q_expression(const FramePtr& frame, std::string_view src) {
    if (!frame)
        throw std::invalid_argument("parse_q_expression: null frame");
    return Parser(frame, src).run();
}

}  // namespace dickson
