#include "dirgal/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace dirgal {

VarsPtr make_vars(Vars names) { return std::make_shared<const Vars>(std::move(names)); }

VarsPtr numbered_vars(const std::string& prefix, int n) {
    Vars v;
    v.reserve(n);
    for (int i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
    return make_vars(std::move(v));
}

VarsPtr concat_vars(const VarsPtr& a, const VarsPtr& b) {
    Vars v = *a;
    v.insert(v.end(), b->begin(), b->end());
    return make_vars(std::move(v));
}

int var_index(const Vars& vars, const std::string& name) {
    for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return static_cast<int>(i);
    return -1;
}

int MonoOrder::compare(const Exps& a, const Exps& b) const {
    auto lexcmp = [](const Exps& x, const Exps& y, int from, int to) {
        for (int i = from; i < to; ++i) {
            if (x[i] != y[i]) return x[i] > y[i] ? 1 : -1;
        }
        return 0;
    };
    auto grevlexcmp = [](const Exps& x, const Exps& y,
                         const std::vector<int>& idx) {
        long dx = 0, dy = 0;
        for (int i : idx) { dx += x[i]; dy += y[i]; }
        if (dx != dy) return dx > dy ? 1 : -1;
        // reverse lex on the reversed variable list: last differing var,
        // smaller exponent wins
        for (auto it = idx.rbegin(); it != idx.rend(); ++it) {
            if (x[*it] != y[*it]) return x[*it] < y[*it] ? 1 : -1;
        }
        return 0;
    };
    const int n = static_cast<int>(a.size());
    switch (kind) {
    case Kind::lex:
        return lexcmp(a, b, 0, n);
    case Kind::grevlex: {
        std::vector<int> all(n);
        std::iota(all.begin(), all.end(), 0);
        return grevlexcmp(a, b, all);
    }
    case Kind::elim: {
        std::vector<int> blk, rest;
        for (int i = 0; i < n; ++i)
            ((i < static_cast<int>(elim_mask.size()) && elim_mask[i]) ? blk : rest).push_back(i);
        int c = grevlexcmp(a, b, blk);
        if (c) return c;
        return grevlexcmp(a, b, rest);
    }
    }
    return 0;
}

std::string MonoOrder::key() const {
    switch (kind) {
    case Kind::lex: return "lex";
    case Kind::grevlex: return "grevlex";
    case Kind::elim: {
        std::string s = "elim:";
        for (char c : elim_mask) s += c ? '1' : '0';
        return s;
    }
    }
    return "?";
}

MPoly::MPoly(FieldPtr k, VarsPtr vars) : k_(std::move(k)), vars_(std::move(vars)) {}

MPoly MPoly::constant(FieldPtr k, VarsPtr vars, const FieldElem& c) {
    MPoly f(std::move(k), std::move(vars));
    if (!c.is_zero()) f.terms_.emplace(Exps(f.nvars(), 0), c);
    return f;
}

MPoly MPoly::from_int(FieldPtr k, VarsPtr vars, long v) {
    FieldElem c = k->from_int(v);
    return constant(std::move(k), std::move(vars), c);
}

MPoly MPoly::variable(FieldPtr k, VarsPtr vars, int idx) {
    MPoly f(k, vars);
    Exps e(f.nvars(), 0);
    e.at(idx) = 1;
    f.terms_.emplace(std::move(e), k->one());
    return f;
}

MPoly MPoly::monomial(FieldPtr k, VarsPtr vars, Exps e, const FieldElem& c) {
    MPoly f(std::move(k), std::move(vars));
    e.resize(f.nvars(), 0);
    if (!c.is_zero()) f.terms_.emplace(std::move(e), c);
    return f;
}

bool MPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Exps& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](std::uint32_t x) { return x == 0; });
}

FieldElem MPoly::constant_value() const {
    Exps zero(nvars(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? k_->zero() : it->second;
}

void MPoly::add_term(const Exps& e, const FieldElem& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        FieldElem s = k_->add(it->second, c);
        if (s.is_zero()) terms_.erase(it);
        else it->second = s;
    }
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, k_->neg(c));
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r(k_, vars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, k_->neg(c));
    return r;
}

MPoly mpoly_mul_term(const MPoly& f, const Exps& e, const FieldElem& c) {
    MPoly r(f.k_, f.vars_);
    if (c.is_zero()) return r;
    for (const auto& [fe, fc] : f.terms_) {
        Exps ne = fe;
        for (std::size_t i = 0; i < ne.size(); ++i) ne[i] += e[i];
        r.terms_.emplace(std::move(ne), f.k_->mul(fc, c));
    }
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r(k_, vars_);
    for (const auto& [e, c] : o.terms_) {
        MPoly part = mpoly_mul_term(*this, e, c);
        for (const auto& [pe, pc] : part.terms_) r.add_term(pe, pc);
    }
    return r;
}

bool MPoly::operator==(const MPoly& o) const {
    if (terms_.size() != o.terms_.size()) return false;
    auto i = terms_.begin();
    auto j = o.terms_.begin();
    for (; i != terms_.end(); ++i, ++j) {
        if (i->first != j->first || !(i->second == j->second)) return false;
    }
    return true;
}

MPoly MPoly::scaled(const FieldElem& c) const {
    MPoly r(k_, vars_);
    if (c.is_zero()) return r;
    for (const auto& [e, tc] : terms_) r.terms_.emplace(e, k_->mul(tc, c));
    return r;
}

MPoly MPoly::pow_u(unsigned e) const {
    MPoly r = from_int(k_, vars_, 1);
    MPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
        int t = 0;
        for (auto x : e) t += static_cast<int>(x);
        d = std::max(d, t);
    }
    return d;
}

int MPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return terms_.empty() ? -1 : d;
}

bool MPoly::uses_var(int var) const {
    for (const auto& [e, c] : terms_)
        if (e[var]) return true;
    return false;
}

std::vector<int> MPoly::used_vars() const {
    std::vector<int> r;
    for (int i = 0; i < nvars(); ++i)
        if (uses_var(i)) r.push_back(i);
    return r;
}

MPoly MPoly::derivative(int var) const {
    MPoly r(k_, vars_);
    for (const auto& [e, c] : terms_) {
        if (!e[var]) continue;
        Exps ne = e;
        ne[var] -= 1;
        r.add_term(ne, k_->mul(c, k_->from_int(static_cast<long>(e[var]))));
    }
    return r;
}

MPoly MPoly::compose(const std::vector<MPoly>& args) const {
    if (static_cast<int>(args.size()) != nvars())
        throw Error("mpoly", "compose arity mismatch");
    VarsPtr v2 = args.empty() ? vars_ : args[0].vars();
    MPoly r(k_, v2);
    std::vector<std::vector<MPoly>> pows(args.size());
    for (std::size_t i = 0; i < args.size(); ++i) pows[i].push_back(from_int(k_, v2, 1));
    for (const auto& [e, c] : terms_) {
        MPoly term = constant(k_, v2, c);
        for (std::size_t i = 0; i < args.size(); ++i) {
            unsigned ei = e[i];
            while (pows[i].size() <= ei) pows[i].push_back(pows[i].back() * args[i]);
            if (ei) term = term * pows[i][ei];
        }
        for (const auto& [te, tc] : term.terms_) r.add_term(te, tc);
    }
    return r;
}

MPoly MPoly::substitute(int var, const FieldElem& v) const {
    MPoly r(k_, vars_);
    for (const auto& [e, c] : terms_) {
        FieldElem nc = c;
        if (e[var]) nc = k_->mul(nc, k_->pow_u(v, e[var]));
        Exps ne = e;
        ne[var] = 0;
        r.add_term(ne, nc);
    }
    return r;
}

MPoly MPoly::remap(const VarsPtr& new_vars, const std::vector<int>& idx_map) const {
    MPoly r(k_, new_vars);
    const int m = static_cast<int>(new_vars->size());
    for (const auto& [e, c] : terms_) {
        Exps ne(m, 0);
        for (int i = 0; i < nvars(); ++i) {
            if (!e[i]) continue;
            int j = idx_map[i];
            if (j < 0) throw Error("mpoly", "remap drops a used variable: " + (*vars_)[i]);
            ne[j] += e[i];
        }
        r.add_term(ne, c);
    }
    return r;
}

MPoly MPoly::map_coeffs(const FieldPtr& k2,
                        const std::function<FieldElem(const FieldElem&)>& fn) const {
    MPoly r(k2, vars_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
}

std::vector<MPoly> MPoly::coeffs_in(int var) const {
    int d = std::max(0, degree_in(var));
    std::vector<MPoly> out(static_cast<std::size_t>(d) + 1, MPoly(k_, vars_));
    for (const auto& [e, c] : terms_) {
        Exps ne = e;
        unsigned i = ne[var];
        ne[var] = 0;
        out[i].add_term(ne, c);
    }
    return out;
}

FieldElem MPoly::eval(const std::vector<FieldElem>& point) const {
    FieldElem acc = k_->zero();
    for (const auto& [e, c] : terms_) {
        FieldElem t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) t = k_->mul(t, k_->pow_u(point[i], e[i]));
        acc = k_->add(acc, t);
    }
    return acc;
}

const Exps* MPoly::leading_exps(const MonoOrder& ord) const {
    const Exps* best = nullptr;
    for (const auto& [e, c] : terms_) {
        if (!best || ord.compare(e, *best) > 0) best = &e;
    }
    return best;
}

MPoly MPoly::monic(const MonoOrder& ord) const {
    const Exps* le = leading_exps(ord);
    if (!le) return *this;
    FieldElem lc = terms_.at(*le);
    return scaled(k_->inv(lc));
}

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    // graded then lex, descending
    std::vector<const std::pair<const Exps, FieldElem>*> ts;
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) {
        long da = 0, db = 0;
        for (auto x : a->first) da += x;
        for (auto x : b->first) db += x;
        if (da != db) return da > db;
        return a->first > b->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : ts) {
        std::string cs = k_->to_string(t->second);
        bool neg = !cs.empty() && cs[0] == '-';
        if (neg) cs = cs.substr(1);
        bool composite = cs.find('+') != std::string::npos || cs.find('-') != std::string::npos;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t i = 0; i < t->first.size(); ++i) {
            if (!t->first[i]) continue;
            if (any) mono << "*";
            mono << (*vars_)[i];
            if (t->first[i] > 1) mono << "^" << t->first[i];
            any = true;
        }
        if (!any) {
            if (composite) os << "(" << cs << ")";
            else os << cs;
        } else {
            if (cs != "1") {
                if (composite) os << "(" << cs << ")*";
                else os << cs << "*";
            }
            os << mono.str();
        }
    }
    return os.str();
}

// --- parser ---

namespace {

struct PolyParser {
    const std::string& s;
    std::size_t i = 0;
    FieldPtr k;
    VarsPtr vars;

    void skipws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool eat(char c) {
        skipws();
        if (i < s.size() && s[i] == c) { ++i; return true; }
        return false;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw Error("parse", msg + " at position " + std::to_string(i) + " in '" + s + "'");
    }

    MPoly parse_expr() {
        MPoly r = parse_term();
        for (;;) {
            skipws();
            if (eat('+')) r = r + parse_term();
            else if (eat('-')) r = r - parse_term();
            else break;
        }
        return r;
    }
    MPoly parse_term() {
        MPoly r = parse_factor();
        for (;;) {
            skipws();
            if (eat('*')) r = r * parse_factor();
            else break;
        }
        return r;
    }
    MPoly parse_factor() {
        MPoly base = parse_atom();
        skipws();
        if (eat('^')) {
            skipws();
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) fail("expected exponent");
            unsigned e = static_cast<unsigned>(std::stoul(s.substr(i, j - i)));
            i = j;
            return base.pow_u(e);
        }
        return base;
    }
    MPoly parse_atom() {
        skipws();
        if (i >= s.size()) fail("unexpected end of input");
        if (eat('-')) return -parse_factor();
        if (eat('(')) {
            MPoly r = parse_expr();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        char c = s[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            mpz_class v(s.substr(i, j - i));
            i = j;
            return MPoly::constant(k, vars, k->from_mpz(v));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                                    s[j] == '_' || s[j] == '.')) ++j;
            std::string name = s.substr(i, j - i);
            i = j;
            int idx = var_index(*vars, name);
            if (idx >= 0) return MPoly::variable(k, vars, idx);
            if (k->is_finite() && k->degree() > 1 && name == k->generator_name())
                return MPoly::constant(k, vars, k->generator());
            fail("unknown variable '" + name + "'");
        }
        fail("unexpected character");
    }
};

} // namespace

MPoly MPoly::parse(const std::string& text, FieldPtr k, VarsPtr vars) {
    PolyParser p{text, 0, k, vars};
    MPoly r = p.parse_expr();
    p.skipws();
    if (p.i != text.size()) p.fail("trailing input");
    return r;
}

// --- division / gcd ---

std::optional<MPoly> divide_exact(const MPoly& f, const MPoly& g) {
    if (g.is_zero()) return std::nullopt;
    if (f.is_zero()) return f;
    MonoOrder ord = MonoOrder::grevlex();
    MPoly r = f;
    MPoly q(f.field(), f.vars());
    const FieldPtr& k = f.field();
    const Exps* gl = g.leading_exps(ord);
    FieldElem glc = g.terms().at(*gl);
    while (!r.is_zero()) {
        const Exps* rl = r.leading_exps(ord);
        Exps diff(rl->size());
        for (std::size_t i = 0; i < rl->size(); ++i) {
            if ((*rl)[i] < (*gl)[i]) return std::nullopt;
            diff[i] = (*rl)[i] - (*gl)[i];
        }
        FieldElem c = k->div(r.terms().at(*rl), glc);
        MPoly t = MPoly::monomial(k, f.vars(), diff, c);
        q = q + t;
        r = r - t * g;
    }
    return q;
}

namespace {

// content of f seen as univariate in `var` (gcd of MPoly coefficients)
MPoly content_in(const MPoly& f, int var);

MPoly gcd_rec(MPoly f, MPoly g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    const FieldPtr& k = f.field();
    if (f.is_constant() || g.is_constant())
        return MPoly::from_int(k, f.vars(), 1);
    // pick the used variable of highest index in either
    int var = -1;
    for (int i = f.nvars(); i-- > 0;) {
        if (f.uses_var(i) || g.uses_var(i)) { var = i; break; }
    }
    // if only one of them uses var, gcd divides the content side
    MPoly cf = content_in(f, var);
    MPoly cg = content_in(g, var);
    MPoly cont = gcd_rec(cf, cg);
    auto fp = divide_exact(f, cf);
    auto gp = divide_exact(g, cg);
    MPoly a = *fp, b = *gp;
    // primitive PRS in `var`
    while (!b.is_zero() && b.degree_in(var) >= 0 && b.uses_var(var)) {
        // pseudo-remainder of a by b in var
        int da = a.degree_in(var), db = b.degree_in(var);
        if (da < db) { std::swap(a, b); continue; }
        std::vector<MPoly> bc = b.coeffs_in(var);
        MPoly blc = bc.back();
        MPoly r = a;
        int steps = da - db + 1;
        for (int s = 0; s < steps && !r.is_zero() && r.degree_in(var) >= db; ++s) {
            std::vector<MPoly> rc = r.coeffs_in(var);
            int dr = static_cast<int>(rc.size()) - 1;
            MPoly rlc = rc.back();
            // r = blc * r - rlc * x^(dr-db) * b
            MPoly shift = MPoly::variable(r.field(), r.vars(), var).pow_u(dr - db);
            r = r * blc - b * shift * rlc;
        }
        a = b;
        b = r;
        if (!b.is_zero()) {
            MPoly cb = content_in(b, var);
            b = *divide_exact(b, cb);
        }
    }
    if (!b.is_zero()) {
        // b is free of var and divides the primitive parts' gcd only via content 1
        return cont;
    }
    MPoly ca = content_in(a, var);
    a = *divide_exact(a, ca);
    return cont * a;
}

MPoly content_in(const MPoly& f, int var) {
    std::vector<MPoly> cs = f.coeffs_in(var);
    MPoly g(f.field(), f.vars());
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        g = gcd_rec(g, c);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

} // namespace

MPoly mpoly_gcd(const MPoly& f, const MPoly& g) {
    MPoly r = gcd_rec(f, g);
    if (r.is_zero()) return r;
    return r.monic(MonoOrder::grevlex());
}

MPoly squarefree_part(const MPoly& f) {
    if (f.is_zero() || f.is_constant()) return f;
    const FieldPtr& k = f.field();
    MPoly g(k, f.vars());
    bool nonzero_deriv = false;
    for (int v : f.used_vars()) {
        MPoly d = f.derivative(v);
        if (!d.is_zero()) {
            nonzero_deriv = true;
            g = g.is_zero() ? mpoly_gcd(f, d) : mpoly_gcd(g, mpoly_gcd(f, d));
            if (g.is_constant()) return f.monic(MonoOrder::grevlex());
        }
    }
    if (!nonzero_deriv) {
        // char p: f = h(x^p)^1 with h recoverable by p-th roots of coefficients
        if (!k->is_finite()) return f;
        unsigned p = static_cast<unsigned>(k->p());
        MPoly h(k, f.vars());
        for (const auto& [e, c] : f.terms()) {
            Exps ne = e;
            for (auto& x : ne) {
                if (x % p) throw Error("mpoly", "inconsistent p-power structure");
                x /= p;
            }
            // p-th root of c: c^(p^(m-1))
            FieldElem rc = k->degree() > 1 ? k->frobenius(c, k->degree() - 1) : c;
            h = h + MPoly::monomial(k, f.vars(), ne, rc);
        }
        return squarefree_part(h);
    }
    auto q = divide_exact(f, g);
    if (!q) throw Error("mpoly", "gcd does not divide (internal)");
    return squarefree_part(*q).monic(MonoOrder::grevlex());
}

std::optional<MPoly> mpoly_sqrt(const MPoly& f) {
    if (f.is_zero()) return f;
    const FieldPtr& k = f.field();
    if (f.is_constant()) {
        auto r = k->sqrt(f.constant_value());
        if (!r) return std::nullopt;
        return MPoly::constant(k, f.vars(), *r);
    }
    // univariate-style recursion on the highest used variable
    int var = f.used_vars().back();
    int d = f.degree_in(var);
    if (d % 2) return std::nullopt;
    std::vector<MPoly> cs = f.coeffs_in(var);
    auto lead = mpoly_sqrt(cs.back());
    if (!lead) return std::nullopt;
    if (k->is_finite() && k->p() == 2) {
        // char 2: squaring is termwise, so a square has all exponents even
        MPoly s2(k, f.vars());
        for (const auto& [e, c] : f.terms()) {
            Exps ne = e;
            for (auto& x2 : ne) {
                if (x2 % 2) return std::nullopt;
                x2 /= 2;
            }
            s2 = s2 + MPoly::monomial(k, f.vars(), ne, *k->sqrt(c));
        }
        return s2;
    }
    MPoly x = MPoly::variable(k, f.vars(), var);
    MPoly s = *lead * x.pow_u(d / 2);
    MPoly twolead = *lead * MPoly::from_int(k, f.vars(), 2);
    MPoly r = f - s * s;
    int prev = d + 1;
    while (!r.is_zero()) {
        int dr = r.degree_in(var);
        if (dr >= prev || dr < 0) return std::nullopt;
        prev = dr;
        int dt = dr - d / 2;
        if (dt < 0) return std::nullopt;
        MPoly num = r.coeffs_in(var).back();
        auto tq = divide_exact(num, twolead);
        if (!tq) return std::nullopt;
        s = s + *tq * x.pow_u(dt);
        r = f - s * s;
    }
    return s;
}

} // namespace dirgal
