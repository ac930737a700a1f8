#include "dirgal/formula.hpp"

#include <algorithm>
#include <cctype>
#include <cstring>
#include <set>
#include <sstream>

#include "dirgal/ufactor.hpp"

namespace dirgal {

TermPtr Term::var(std::string n) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::var;
    t->name = std::move(n);
    return t;
}
TermPtr Term::cnst(FieldElem v) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::cnst;
    t->value = std::move(v);
    return t;
}
TermPtr Term::sigma(TermPtr x) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::sigma;
    t->a = std::move(x);
    return t;
}
TermPtr Term::add(TermPtr x, TermPtr y) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::add;
    t->a = std::move(x);
    t->b = std::move(y);
    return t;
}
TermPtr Term::sub(TermPtr x, TermPtr y) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::sub;
    t->a = std::move(x);
    t->b = std::move(y);
    return t;
}
TermPtr Term::mul(TermPtr x, TermPtr y) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::mul;
    t->a = std::move(x);
    t->b = std::move(y);
    return t;
}
TermPtr Term::neg(TermPtr x) {
    auto t = std::make_shared<Term>();
    t->kind = Kind::neg;
    t->a = std::move(x);
    return t;
}

FormulaPtr Formula::atom(TermPtr l, TermPtr r) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::atom;
    f->lhs = std::move(l);
    f->rhs = std::move(r);
    return f;
}
FormulaPtr Formula::lnot(FormulaPtr x) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::lnot;
    f->a = std::move(x);
    return f;
}
FormulaPtr Formula::land(FormulaPtr x, FormulaPtr y) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::land;
    f->a = std::move(x);
    f->b = std::move(y);
    return f;
}
FormulaPtr Formula::lor(FormulaPtr x, FormulaPtr y) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::lor;
    f->a = std::move(x);
    f->b = std::move(y);
    return f;
}
FormulaPtr Formula::implies(FormulaPtr x, FormulaPtr y) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::implies;
    f->a = std::move(x);
    f->b = std::move(y);
    return f;
}
FormulaPtr Formula::exists(std::string v, FormulaPtr x) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::exists;
    f->var = std::move(v);
    f->a = std::move(x);
    return f;
}
FormulaPtr Formula::forall(std::string v, FormulaPtr x) {
    auto f = std::make_shared<Formula>();
    f->kind = Kind::forall;
    f->var = std::move(v);
    f->a = std::move(x);
    return f;
}
FormulaPtr Formula::truth(bool b, const FieldPtr& k) {
    TermPtr z = Term::cnst(k->zero());
    return atom(b ? z : Term::cnst(k->one()), Term::cnst(k->zero()));
}

// ------------------------------------------------------------------ parser

namespace {

struct FParser {
    const std::string& s;
    std::size_t i = 0;
    FieldPtr k;

    void skipws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eat(char c) {
        skipws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    bool eat_str(const char* t) {
        skipws();
        std::size_t n = std::strlen(t);
        if (s.compare(i, n, t) == 0) { i += n; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& m) {
        throw Error("parse", m + " at position " + std::to_string(i) + " in formula");
    }
    std::string ident() {
        skipws();
        if (i >= s.size() || !(std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_'))
            fail("expected identifier");
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        std::string r = s.substr(i, j - i);
        i = j;
        return r;
    }

    FormulaPtr parse_formula_() {
        skipws();
        // quantifier?
        std::size_t save = i;
        if (i < s.size() && (s[i] == 'E' || s[i] == 'A')) {
            char q = s[i];
            ++i;
            skipws();
            if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
                std::string v = ident();
                skipws();
                if (eat('.')) {
                    FormulaPtr body = parse_formula_();
                    return q == 'E' ? Formula::exists(v, body) : Formula::forall(v, body);
                }
            }
            i = save;
        }
        return parse_implies();
    }
    FormulaPtr parse_implies() {
        FormulaPtr a = parse_or();
        skipws();
        if (eat_str("->")) return Formula::implies(a, parse_implies());
        return a;
    }
    FormulaPtr parse_or() {
        FormulaPtr a = parse_and();
        for (;;) {
            skipws();
            if (i < s.size() && s[i] == '|') {
                ++i;
                a = Formula::lor(a, parse_and());
            } else {
                return a;
            }
        }
    }
    FormulaPtr parse_and() {
        FormulaPtr a = parse_neg();
        for (;;) {
            skipws();
            if (i < s.size() && s[i] == '&') {
                ++i;
                a = Formula::land(a, parse_neg());
            } else {
                return a;
            }
        }
    }
    FormulaPtr parse_neg() {
        skipws();
        if (eat('~')) return Formula::lnot(parse_neg());
        if (i < s.size() && s[i] == '(') {
            // backtrack: formula group or term atom
            std::size_t save = i;
            ++i;
            try {
                FormulaPtr f = parse_formula_();
                if (!eat(')')) fail("expected ')'");
                skipws();
                // if a term operator follows, it was a term after all
                // ("->"" is the implication arrow, not a minus)
                bool term_op =
                    i < s.size() && (s[i] == '+' || s[i] == '*' || s[i] == '^' ||
                                     s[i] == '=' ||
                                     (s[i] == '-' && s.compare(i, 2, "->") != 0));
                if (term_op) {
                    i = save;
                } else {
                    return f;
                }
            } catch (const Error&) {
                i = save;
            }
        }
        if (i < s.size() && (s[i] == 'E' || s[i] == 'A')) {
            std::size_t save = i;
            char q = s[i];
            ++i;
            skipws();
            if (i < s.size() && (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
                std::string v = ident();
                if (eat('.')) {
                    FormulaPtr body = parse_formula_();
                    return q == 'E' ? Formula::exists(v, body) : Formula::forall(v, body);
                }
            }
            i = save;
        }
        return parse_atom();
    }
    FormulaPtr parse_atom() {
        TermPtr l = parse_term();
        skipws();
        if (!eat('=')) fail("expected '='");
        TermPtr r = parse_term();
        return Formula::atom(l, r);
    }
    TermPtr parse_term() {
        TermPtr a = parse_prod();
        for (;;) {
            skipws();
            if (eat('+')) a = Term::add(a, parse_prod());
            else if (i < s.size() && s[i] == '-' && s.compare(i, 2, "->") != 0) {
                ++i;
                a = Term::sub(a, parse_prod());
            } else {
                return a;
            }
        }
    }
    TermPtr parse_prod() {
        TermPtr a = parse_pow();
        for (;;) {
            skipws();
            if (eat('*')) a = Term::mul(a, parse_pow());
            else return a;
        }
    }
    TermPtr parse_pow() {
        TermPtr a = parse_unary();
        skipws();
        if (eat('^')) {
            skipws();
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) fail("expected exponent");
            unsigned e = static_cast<unsigned>(std::stoul(s.substr(i, j - i)));
            i = j;
            if (e == 0) return Term::cnst(k->one());
            TermPtr r = a;
            for (unsigned t = 1; t < e; ++t) r = Term::mul(r, a);
            return r;
        }
        return a;
    }
    TermPtr parse_unary() {
        skipws();
        if (eat('-')) return Term::neg(parse_unary());
        if (eat('(')) {
            TermPtr t = parse_term();
            if (!eat(')')) fail("expected ')' in term");
            return t;
        }
        if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            mpz_class v(s.substr(i, j - i));
            i = j;
            return Term::cnst(k->from_mpz(v));
        }
        std::string name = ident();
        if (name == "s") {
            if (!eat('(')) fail("expected '(' after s");
            TermPtr t = parse_term();
            if (!eat(')')) fail("expected ')' after s(...)");
            return Term::sigma(t);
        }
        if (k->is_finite() && k->degree() > 1 && name == k->generator_name())
            return Term::cnst(k->generator());
        return Term::var(name);
    }
};

} // namespace

FormulaPtr parse_formula(const std::string& text, const FieldPtr& k) {
    FParser p{text, 0, k};
    FormulaPtr f = p.parse_formula_();
    p.skipws();
    if (p.i != text.size()) p.fail("trailing input");
    return f;
}

std::string print_term(const TermPtr& t) {
    switch (t->kind) {
    case Term::Kind::var: return t->name;
    case Term::Kind::cnst: {
        std::string s = t->value.field() ? t->value.field()->to_string(t->value) : "0";
        if (s.find_first_of("+-*") != std::string::npos && !(s.size() && s[0] == '-' &&
                                                             s.find_first_of("+-*", 1) ==
                                                                 std::string::npos))
            return "(" + s + ")";
        if (!s.empty() && s[0] == '-') return "(" + s + ")";
        return s;
    }
    case Term::Kind::sigma: return "s(" + print_term(t->a) + ")";
    case Term::Kind::add: return "(" + print_term(t->a) + " + " + print_term(t->b) + ")";
    case Term::Kind::sub: return "(" + print_term(t->a) + " - " + print_term(t->b) + ")";
    case Term::Kind::mul: return "(" + print_term(t->a) + " * " + print_term(t->b) + ")";
    case Term::Kind::neg: return "(-" + print_term(t->a) + ")";
    }
    return "?";
}

std::string print_formula(const FormulaPtr& f) {
    switch (f->kind) {
    case Formula::Kind::atom: return print_term(f->lhs) + " = " + print_term(f->rhs);
    case Formula::Kind::lnot: return "~(" + print_formula(f->a) + ")";
    case Formula::Kind::land:
        return "(" + print_formula(f->a) + " & " + print_formula(f->b) + ")";
    case Formula::Kind::lor:
        return "(" + print_formula(f->a) + " | " + print_formula(f->b) + ")";
    case Formula::Kind::implies:
        return "(" + print_formula(f->a) + " -> " + print_formula(f->b) + ")";
    case Formula::Kind::exists: return "E " + f->var + ". (" + print_formula(f->a) + ")";
    case Formula::Kind::forall: return "A " + f->var + ". (" + print_formula(f->a) + ")";
    }
    return "?";
}

namespace {
void term_vars(const TermPtr& t, std::set<std::string>& out) {
    if (!t) return;
    if (t->kind == Term::Kind::var) out.insert(t->name);
    term_vars(t->a, out);
    term_vars(t->b, out);
}
void fv(const FormulaPtr& f, std::set<std::string>& bound, std::set<std::string>& out) {
    if (!f) return;
    switch (f->kind) {
    case Formula::Kind::atom: {
        std::set<std::string> tv;
        term_vars(f->lhs, tv);
        term_vars(f->rhs, tv);
        for (const auto& v : tv)
            if (!bound.count(v)) out.insert(v);
        return;
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
        bool added = bound.insert(f->var).second;
        fv(f->a, bound, out);
        if (added) bound.erase(f->var);
        return;
    }
    default:
        fv(f->a, bound, out);
        fv(f->b, bound, out);
    }
}
int term_sigma_depth(const TermPtr& t) {
    if (!t) return 0;
    int d = std::max(term_sigma_depth(t->a), term_sigma_depth(t->b));
    return t->kind == Term::Kind::sigma ? d + 1 : d;
}
} // namespace

std::vector<std::string> free_vars(const FormulaPtr& f) {
    std::set<std::string> bound, out;
    fv(f, bound, out);
    return {out.begin(), out.end()};
}

int max_sigma_depth(const FormulaPtr& f) {
    if (!f) return 0;
    int d = 0;
    if (f->kind == Formula::Kind::atom)
        d = std::max(term_sigma_depth(f->lhs), term_sigma_depth(f->rhs));
    if (f->a) d = std::max(d, max_sigma_depth(f->a));
    if (f->b) d = std::max(d, max_sigma_depth(f->b));
    return d;
}

// -------------------------------------------------------------- evaluation

namespace {

struct EvalCtx {
    const DiffField& K;
    FieldPtr F;                                   // current field (extension of K.Fqm)
    std::map<std::string, FieldElem> vals;
    int window;
    std::uint64_t budget;
    std::uint64_t* steps;
};

FieldElem eval_term(const TermPtr& t, const EvalCtx& ctx) {
    switch (t->kind) {
    case Term::Kind::var: {
        auto it = ctx.vals.find(t->name);
        if (it == ctx.vals.end())
            throw Error("formula", "unbound variable " + t->name);
        return it->second;
    }
    case Term::Kind::cnst: {
        const FieldElem& c = t->value;
        if (!c.field()) return ctx.F->zero();
        if (c.field()->is_rationals()) return ctx.F->from_mpq(c.rat());
        if (c.field()->same(*ctx.F)) return c;
        return embed_field(c.field(), ctx.F).map(c);
    }
    case Term::Kind::sigma:
        return ctx.F->frobenius(eval_term(t->a, ctx), static_cast<unsigned>(ctx.K.e));
    case Term::Kind::add:
        return ctx.F->add(eval_term(t->a, ctx), eval_term(t->b, ctx));
    case Term::Kind::sub:
        return ctx.F->sub(eval_term(t->a, ctx), eval_term(t->b, ctx));
    case Term::Kind::mul:
        return ctx.F->mul(eval_term(t->a, ctx), eval_term(t->b, ctx));
    case Term::Kind::neg:
        return ctx.F->neg(eval_term(t->a, ctx));
    }
    throw Error("formula", "bad term");
}

bool eval_rec(const FormulaPtr& f, EvalCtx& ctx) {
    if (++*ctx.steps > ctx.budget) throw Error("formula", "evaluation budget exceeded");
    switch (f->kind) {
    case Formula::Kind::atom:
        return eval_term(f->lhs, ctx) == eval_term(f->rhs, ctx);
    case Formula::Kind::lnot:
        return !eval_rec(f->a, ctx);
    case Formula::Kind::land:
        return eval_rec(f->a, ctx) && eval_rec(f->b, ctx);
    case Formula::Kind::lor:
        return eval_rec(f->a, ctx) || eval_rec(f->b, ctx);
    case Formula::Kind::implies:
        return !eval_rec(f->a, ctx) || eval_rec(f->b, ctx);
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
        const bool is_exists = f->kind == Formula::Kind::exists;
        unsigned base_deg = ctx.F->degree();
        for (int j = 1; j <= ctx.window; ++j) {
            FieldPtr Fj = j == 1 ? ctx.F : Field::extension(ctx.K.p, base_deg * j);
            EvalCtx sub{ctx.K, Fj, {}, ctx.window, ctx.budget, ctx.steps};
            std::optional<FieldEmbedding> emb;
            if (j > 1) emb = embed_field(ctx.F, Fj);
            for (const auto& [n, v] : ctx.vals)
                sub.vals.emplace(n, j == 1 ? v : emb->map(v));
            std::uint64_t sz = Fj->order_u64().value_or(0);
            if (!sz) throw Error("formula", "quantifier field too large");
            for (std::uint64_t idx = 0; idx < sz; ++idx) {
                sub.vals[f->var] = Fj->elem_at(idx);
                bool r = eval_rec(f->a, sub);
                if (is_exists && r) return true;
                if (!is_exists && !r) return false;
            }
        }
        return !is_exists;
    }
    }
    throw Error("formula", "bad formula");
}

} // namespace

bool eval_formula(const FormulaPtr& f, const std::map<std::string, FieldElem>& assignment,
                  const DiffField& K, int ext_window, std::uint64_t budget) {
    std::uint64_t steps = 0;
    EvalCtx ctx{K, K.Fqm, assignment, ext_window, budget, &steps};
    return eval_rec(f, ctx);
}

PointSet formula_points(const FormulaPtr& f, int n, const DiffField& K, int ext_window,
                        std::uint64_t budget) {
    std::uint64_t sz = K.Fqm->order_u64().value_or(0);
    if (!sz) throw Error("formula", "field too large to enumerate");
    PointSet out;
    std::vector<std::uint64_t> idx(n, 0);
    std::uint64_t steps = 0;
    for (;;) {
        std::map<std::string, FieldElem> vals;
        Point x;
        for (int i = 0; i < n; ++i) {
            FieldElem v = K.Fqm->elem_at(idx[i]);
            vals.emplace("v" + std::to_string(i + 1), v);
            x.push_back(v);
        }
        EvalCtx ctx{K, K.Fqm, vals, ext_window, budget, &steps};
        if (eval_rec(f, ctx)) out.insert(x);
        int c = n - 1;
        while (c >= 0) {
            if (++idx[c] < sz) break;
            idx[c] = 0;
            --c;
        }
        if (c < 0) break;
        if (n == 0) break;
    }
    return out;
}

// ------------------------------------------------------------ translations

namespace {

TermPtr term_of_poly(const MPoly& f, const std::vector<TermPtr>& var_terms) {
    const FieldPtr& k = f.field();
    TermPtr acc;
    for (const auto& [e, c] : f.terms()) {
        TermPtr t = Term::cnst(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::uint32_t p = 0; p < e[i]; ++p) t = Term::mul(t, var_terms[i]);
        acc = acc ? Term::add(acc, t) : t;
    }
    if (!acc) acc = Term::cnst(k->zero());
    return acc;
}

FormulaPtr all_vanish(const Ideal& I, const std::vector<TermPtr>& var_terms,
                      const FieldPtr& k) {
    FormulaPtr acc;
    for (const auto& g : I.gens()) {
        FormulaPtr atom = Formula::atom(term_of_poly(g, var_terms), Term::cnst(k->zero()));
        acc = acc ? Formula::land(acc, atom) : atom;
    }
    if (!acc) acc = Formula::truth(true, k);
    return acc;
}

// membership in a locally closed piece at (v-bar, sigma v-bar)
FormulaPtr piece_membership(const DirectPresentation& P) {
    const FieldPtr& k = P.k;
    std::vector<TermPtr> v0;
    for (int i = 0; i < P.n; ++i) v0.push_back(Term::var("v" + std::to_string(i + 1)));
    std::vector<TermPtr> v1 = v0;
    for (int i = 0; i < P.n; ++i) v1.push_back(Term::sigma(v0[i]));
    FormulaPtr f = all_vanish(P.I0, v0, k);
    f = Formula::land(f, all_vanish(P.I1, v1, k));
    if (!P.U0.is_unit()) f = Formula::land(f, Formula::lnot(all_vanish(P.U0, v0, k)));
    if (!P.U1.is_unit()) f = Formula::land(f, Formula::lnot(all_vanish(P.U1, v1, k)));
    return f;
}

} // namespace

FormulaPtr presentation_to_fo(const DirectPresentation& P) { return piece_membership(P); }

FormulaPtr galois_to_fo(const GaloisStratification& A) {
    const FieldPtr& k = A.ambient.k;
    FormulaPtr out;
    for (const auto& s : A.strata) {
        if (s.domain.empty()) continue;
        FormulaPtr part = piece_membership(s.piece);
        if (!s.cover.trivial) {
            const GaloisCover& D = s.cover;
            const int nz = D.cov.n;
            // fresh cover variables
            std::vector<TermPtr> z;
            for (int i = 0; i < nz; ++i) z.push_back(Term::var("zq" + std::to_string(i)));
            // z lies on Z0 (and off its excluded locus)
            FormulaPtr covf = all_vanish(D.cov.I0, z, k);
            if (!D.cov.U0.is_unit())
                covf = Formula::land(covf, Formula::lnot(all_vanish(D.cov.U0, z, k)));
            // p0(z) = v
            for (int i = 0; i < D.base.n; ++i) {
                covf = Formula::land(
                    covf, Formula::atom(term_of_poly(D.p0[i], z),
                                        Term::var("v" + std::to_string(i + 1))));
            }
            // disjunction over the domain: (z, g^{-1} sigma z) in Z1
            FormulaPtr dom;
            for (int g : s.domain) {
                int ginv = D.G0.inverse(g);
                std::vector<TermPtr> sz;
                for (int i = 0; i < nz; ++i) sz.push_back(Term::sigma(z[i]));
                std::vector<TermPtr> pair = z;
                for (int i = 0; i < nz; ++i)
                    pair.push_back(term_of_poly(D.act0[ginv][i], sz));
                FormulaPtr cond = all_vanish(D.cov.I1, pair, k);
                if (!D.cov.U1.is_unit())
                    cond = Formula::land(cond, Formula::lnot(all_vanish(D.cov.U1, pair, k)));
                dom = dom ? Formula::lor(dom, cond) : cond;
            }
            covf = Formula::land(covf, dom);
            for (int i = nz; i-- > 0;) covf = Formula::exists("zq" + std::to_string(i), covf);
            part = Formula::land(part, covf);
        }
        out = out ? Formula::lor(out, part) : part;
    }
    if (!out) out = Formula::truth(false, k);
    return out;
}

} // namespace dirgal
