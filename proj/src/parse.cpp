#include "scffd/parse.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <utility>

#include "scffd/dest_ring.hpp"
#include "scffd/fringe_ring.hpp"
#include "scffd/int_ring.hpp"
#include "scffd/laurent_ring.hpp"
#include "scffd/poly_ring.hpp"
#include "scffd/primes.hpp"
#include "scffd/quad_ring.hpp"

namespace scffd {

namespace {

// --- lexer -----------------------------------------------------------------

struct Token {
    enum Kind { integer, ident, punct, end } kind = end;
    std::string text;
    Integer value;
    std::size_t pos = 0;
};

std::vector<Token> lex(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            Token t;
            t.kind = Token::integer;
            t.text = s.substr(i, j - i);
            t.value = Integer(t.text);
            t.pos = i;
            out.push_back(std::move(t));
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back(Token{Token::ident, s.substr(i, j - i), 0, i});
            i = j;
            continue;
        }
        if (std::string("()[],=+-*/^").find(c) != std::string::npos) {
            out.push_back(Token{Token::punct, std::string(1, c), 0, i});
            ++i;
            continue;
        }
        throw SyntaxError("unexpected character '" + std::string(1, c) + "'", i);
    }
    out.push_back(Token{Token::end, "", 0, s.size()});
    return out;
}

/** Shared token cursor for the descriptor and expression grammars. */
struct Cursor {
    const std::vector<Token>& toks;
    std::size_t at = 0;

    const Token& peek() const { return toks[at]; }
    const Token& next() { return toks[at++]; }
    bool is_punct(const char* p) const {
        return peek().kind == Token::punct && peek().text == p;
    }
    void expect_punct(const char* p) {
        if (!is_punct(p)) throw SyntaxError(std::string("expected '") + p + "'", peek().pos);
        ++at;
    }
    std::string expect_ident(const char* what) {
        if (peek().kind != Token::ident) throw SyntaxError(std::string("expected ") + what, peek().pos);
        return next().text;
    }
    Integer expect_integer(const char* what) {
        if (peek().kind != Token::integer)
            throw SyntaxError(std::string("expected ") + what, peek().pos);
        return next().value;
    }
    void expect_end() {
        if (peek().kind != Token::end) throw SyntaxError("trailing input", peek().pos);
    }
};

// --- expression evaluation over Frac(cover) ---------------------------------

/** Unreduced fraction of cover elements: the expression value before the
 * target ring's membership test. */
struct CoverFrac {
    Elem num, den;
};

/** Variables that may carry negative exponents: those bound by a staged
 * irreducible-destruction layer in the tower. */
std::vector<std::string> negative_power_vars(const RingPtr& ring) {
    if (ring->kind() == RingKind::laurent)
        return std::static_pointer_cast<const LaurentRing>(ring)->vars();
    if (ring->kind() == RingKind::fringe)
        return negative_power_vars(std::static_pointer_cast<const FringeRing>(ring)->base());
    return {};
}

/** Resolve a bare identifier against the cover tower. */
std::optional<Elem> resolve_symbol(const RingPtr& cov, const std::string& name) {
    if (cov->kind() == RingKind::polynomial) {
        auto p = std::static_pointer_cast<const PolyRing>(cov);
        if (p->var() == name) return p->variable();
        if (auto inner = resolve_symbol(p->base(), name)) return p->embed(*inner);
        return std::nullopt;
    }
    if (cov->kind() == RingKind::quadratic && name == "s")
        return std::static_pointer_cast<const QuadRing>(cov)->root();
    return std::nullopt;
}

class ExprParser {
public:
    ExprParser(Cursor& cur, RingPtr target) : cur_(cur), target_(std::move(target)) {
        cov_ = target_->cover();
        neg_vars_ = negative_power_vars(target_);
    }

    /** Parse an expression and return its value over Frac(cover). */
    CoverFrac expression() { return sum(); }

    /** Resolve a parsed value through the membership test. */
    Elem membership(const CoverFrac& v, const std::string& described) {
        auto e = target_->member(v.num, v.den);
        if (!e)
            throw Error(ErrorKind::not_in_ring,
                        described + " is not a member of '" + target_->signature() + "'");
        return *e;
    }

private:
    CoverFrac lit(const Integer& n) { return {cov_->from_int(n), cov_->one()}; }
    CoverFrac add(const CoverFrac& a, const CoverFrac& b) {
        return {cov_->add(cov_->mul(a.num, b.den), cov_->mul(b.num, a.den)),
                cov_->mul(a.den, b.den)};
    }
    CoverFrac sub2(const CoverFrac& a, const CoverFrac& b) {
        return {cov_->sub(cov_->mul(a.num, b.den), cov_->mul(b.num, a.den)),
                cov_->mul(a.den, b.den)};
    }
    CoverFrac mul(const CoverFrac& a, const CoverFrac& b) {
        return {cov_->mul(a.num, b.num), cov_->mul(a.den, b.den)};
    }
    CoverFrac div(const CoverFrac& a, const CoverFrac& b, std::size_t pos) {
        if (cov_->is_zero(b.num))
            throw Error(ErrorKind::division_by_zero,
                        "division by zero at position " + std::to_string(pos));
        return {cov_->mul(a.num, b.den), cov_->mul(a.den, b.num)};
    }
    CoverFrac neg(const CoverFrac& a) { return {cov_->negate(a.num), a.den}; }

    CoverFrac sum() {
        CoverFrac v = term();
        while (cur_.is_punct("+") || cur_.is_punct("-")) {
            bool plus = cur_.next().text == "+";
            CoverFrac r = term();
            v = plus ? add(v, r) : sub2(v, r);
        }
        return v;
    }

    CoverFrac term() {
        CoverFrac v = factor();
        while (cur_.is_punct("*") || cur_.is_punct("/")) {
            const Token& op = cur_.next();
            CoverFrac r = factor();
            v = op.text == "*" ? mul(v, r) : div(v, r, op.pos);
        }
        return v;
    }

    CoverFrac factor() {
        if (cur_.is_punct("-")) {
            cur_.next();
            return neg(factor());
        }
        return power();
    }

    CoverFrac power() {
        auto [v, ident_name] = atom();
        if (!cur_.is_punct("^")) return v;
        std::size_t caret_pos = cur_.next().pos;
        bool negative = false;
        if (cur_.is_punct("-")) {
            cur_.next();
            negative = true;
        }
        Integer e = cur_.expect_integer("an exponent");
        if (e > 64)
            throw Error(ErrorKind::validation, "exponent " + e.str() + " is too large");
        auto k = static_cast<unsigned long>(e);
        if (!negative) return {cov_->pow(v.num, k), cov_->pow(v.den, k)};
        bool allowed = ident_name && std::find(neg_vars_.begin(), neg_vars_.end(), *ident_name) !=
                                         neg_vars_.end();
        if (!allowed)
            throw Error(ErrorKind::validation,
                        "negative exponents apply only to staged variables (at position " +
                            std::to_string(caret_pos) + ")");
        return {cov_->pow(v.den, k), cov_->pow(v.num, k)};
    }

    /** Returns the value plus, for bare identifiers, the name (for the
     * negative-exponent gate). */
    std::pair<CoverFrac, std::optional<std::string>> atom() {
        const Token& t = cur_.peek();
        if (t.kind == Token::integer) {
            cur_.next();
            return {lit(t.value), std::nullopt};
        }
        if (t.kind == Token::ident) {
            cur_.next();
            auto sym = resolve_symbol(cov_, t.text);
            if (!sym) throw SyntaxError("unknown symbol '" + t.text + "'", t.pos);
            return {CoverFrac{*sym, cov_->one()}, t.text};
        }
        if (t.kind == Token::punct && t.text == "(") {
            cur_.next();
            CoverFrac v = expression();
            cur_.expect_punct(")");
            return {v, std::nullopt};
        }
        throw SyntaxError("expected an expression", t.pos);
    }

    Cursor& cur_;
    RingPtr target_;
    RingPtr cov_;
    std::vector<std::string> neg_vars_;
};

/** Parse one element expression at the cursor and resolve membership;
 * `described` names the argument in error messages. */
Elem parse_element_at(Cursor& cur, const RingPtr& ring, const std::string& described) {
    ExprParser p(cur, ring);
    CoverFrac v = p.expression();
    return p.membership(v, described);
}

// --- descriptor parser -------------------------------------------------------

std::pair<std::vector<std::size_t>, std::vector<std::string>> parse_schedule_lists(Cursor& cur) {
    cur.expect_punct("(");
    if (cur.expect_ident("'primes'") != "primes")
        throw SyntaxError("expected 'primes'", cur.toks[cur.at - 1].pos);
    cur.expect_punct("=");
    cur.expect_punct("[");
    std::vector<std::size_t> indices;
    if (!cur.is_punct("]")) {
        while (true) {
            Integer v = cur.expect_integer("a prime index");
            if (v > 100000)
                throw Error(ErrorKind::validation, "prime index " + v.str() + " is too large");
            indices.push_back(static_cast<std::size_t>(static_cast<unsigned long>(v)));
            if (cur.is_punct(",")) {
                cur.next();
                continue;
            }
            break;
        }
    }
    cur.expect_punct("]");
    cur.expect_punct(",");
    if (cur.expect_ident("'vars'") != "vars")
        throw SyntaxError("expected 'vars'", cur.toks[cur.at - 1].pos);
    cur.expect_punct("=");
    cur.expect_punct("[");
    std::vector<std::string> vars;
    if (!cur.is_punct("]")) {
        while (true) {
            vars.push_back(cur.expect_ident("a variable name"));
            if (cur.is_punct(",")) {
                cur.next();
                continue;
            }
            break;
        }
    }
    cur.expect_punct("]");
    cur.expect_punct(")");
    return {std::move(indices), std::move(vars)};
}

/** The prime index named by a constant element of Z or a staged ring;
 * ValidationError when the element is not (plus or minus) a fresh prime. */
std::size_t prime_index_of_constant(const RingPtr& base, const Elem& p) {
    Integer value;
    if (base->kind() == RingKind::integers) {
        value = std::static_pointer_cast<const IntRing>(base)->value(p);
    } else {
        auto lr = std::static_pointer_cast<const LaurentRing>(base);
        const LaurentTerms& t = lr->terms(p);
        bool constant =
            t.size() == 1 && std::all_of(t[0].first.begin(), t[0].first.end(),
                                         [](long long e) { return e == 0; });
        if (!constant)
            throw Error(ErrorKind::validation,
                        "'" + base->print(p) + "' is not an integer constant");
        value = boost::multiprecision::numerator(t[0].second);
    }
    Integer a = abs_int(value);
    if (!is_prime_int(a))
        throw Error(ErrorKind::validation, "'" + base->print(p) + "' is not a rational prime");
    auto idx = prime_index(a);
    if (!idx) throw Error(ErrorKind::validation, "prime index lookup failed");
    return *idx;
}

ParsedRing parse_ring_at(Cursor& cur) {
    const Token& head = cur.peek();
    if (head.kind != Token::ident) throw SyntaxError("expected a ring descriptor", head.pos);
    std::string name = cur.next().text;
    ParsedRing out;

    if (name == "Z") {
        out.ring = IntRing::get();
        return out;
    }
    if (name == "Quad") {
        cur.expect_punct("(");
        Integer d = cur.expect_integer("a positive integer d");
        cur.expect_punct(")");
        out.ring = QuadRing::create(d);
        return out;
    }
    if (name == "Poly") {
        cur.expect_punct("(");
        ParsedRing base = parse_ring_at(cur);
        cur.expect_punct(",");
        std::string var = cur.expect_ident("a variable name");
        cur.expect_punct(")");
        out.ring = PolyRing::create(base.ring, var);
        return out;
    }
    if (name == "Destroy") {
        cur.expect_punct("(");
        ParsedRing base = parse_ring_at(cur);
        cur.expect_punct(",");
        Elem q = parse_element_at(cur, base.ring, "the 'q' argument of Destroy");
        cur.expect_punct(",");
        std::string var = cur.expect_ident("a variable name");
        cur.expect_punct(")");
        out.ring = DestroyRing::create(base.ring, q, var);
        return out;
    }
    if (name == "Staged") {
        auto [indices, vars] = parse_schedule_lists(cur);
        EnumerationSchedule sched(indices);
        out.ring = staged_destroy(sched, vars);
        out.staging = ParsedRing::Staging::primes;
        out.schedule = sched;
        out.stage_vars = vars;
        out.stage_ring = [sched, vars](std::size_t k) {
            return staged_destroy(
                EnumerationSchedule(sched.destroyed_at(k)),
                std::vector<std::string>(vars.begin(), vars.begin() + static_cast<std::ptrdiff_t>(k)));
        };
        return out;
    }
    if (name == "StagedIrred") {
        auto [indices, vars] = parse_schedule_lists(cur);
        auto ring = LaurentRing::create(EnumerationSchedule(indices), vars);
        out.ring = ring;
        out.staging = ParsedRing::Staging::irreducibles;
        out.schedule = ring->schedule();
        out.stage_vars = vars;
        out.stage_ring = [ring](std::size_t k) { return ring->prefix(k); };
        return out;
    }
    if (name == "IrredDestroy") {
        cur.expect_punct("(");
        ParsedRing base = parse_ring_at(cur);
        cur.expect_punct(",");
        if (base.ring->kind() != RingKind::integers && base.ring->kind() != RingKind::laurent)
            throw Error(ErrorKind::validation,
                        "IrredDestroy expects Z or a StagedIrred base, got '" +
                            base.ring->signature() + "'");
        Elem p = parse_element_at(cur, base.ring, "the 'p' argument of IrredDestroy");
        cur.expect_punct(",");
        std::string var = cur.expect_ident("a variable name");
        cur.expect_punct(")");
        std::vector<std::size_t> indices;
        std::vector<std::string> vars;
        if (base.ring->kind() == RingKind::laurent) {
            auto lr = std::static_pointer_cast<const LaurentRing>(base.ring);
            indices = lr->schedule().entries();
            vars = lr->vars();
        }
        indices.push_back(prime_index_of_constant(base.ring, p));
        vars.push_back(var);
        auto ring = LaurentRing::create(EnumerationSchedule(indices), vars);
        out.ring = ring;
        out.staging = ParsedRing::Staging::irreducibles;
        out.schedule = ring->schedule();
        out.stage_vars = vars;
        out.stage_ring = [ring](std::size_t k) { return ring->prefix(k); };
        return out;
    }
    if (name == "Fringe") {
        cur.expect_punct("(");
        ParsedRing base = parse_ring_at(cur);
        cur.expect_punct(",");
        std::string var = cur.expect_ident("a variable name");
        cur.expect_punct(")");
        out.ring = FringeRing::create(base.ring, var);
        if (base.staging == ParsedRing::Staging::irreducibles) {
            out.staging = base.staging;
            out.schedule = base.schedule;
            out.stage_vars = base.stage_vars;
            auto base_stage = base.stage_ring;
            out.stage_ring = [base_stage, var](std::size_t k) {
                return FringeRing::create(base_stage(k), var);
            };
        }
        return out;
    }
    throw SyntaxError("unknown ring constructor '" + name + "'", head.pos);
}

}  // namespace

RingPtr ParsedRing::at_stage(std::size_t k) const {
    if (!staged())
        throw Error(ErrorKind::validation, "'" + ring->signature() + "' is not a staged descriptor");
    if (k > schedule.size())
        throw Error(ErrorKind::stage_mismatch, "stage " + std::to_string(k) +
                                                   " exceeds schedule length " +
                                                   std::to_string(schedule.size()));
    return stage_ring(k);
}

ParsedRing parse_ring(const std::string& text) {
    std::vector<Token> toks = lex(text);
    Cursor cur{toks};
    ParsedRing out = parse_ring_at(cur);
    cur.expect_end();
    return out;
}

Elem parse_element(const RingPtr& ring, const std::string& text) {
    std::vector<Token> toks = lex(text);
    Cursor cur{toks};
    ExprParser p(cur, ring);
    CoverFrac v = p.expression();
    cur.expect_end();
    return p.membership(v, "'" + text + "'");
}

}  // namespace scffd
