/// formula.hpp -- first-order difference-ring formulas: terms with sigma
/// application, a parser/printer pair, brute-force evaluation over Frobenius
/// difference fields (quantifiers range over an extension window,
/// approximating the algebraically closed semantics), and the translations
/// between presentations/stratifications and formulas.
#ifndef DIRGAL_FORMULA_HPP
#define DIRGAL_FORMULA_HPP

#include <map>
#include <memory>

#include "dirgal/strat.hpp"

namespace dirgal {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

struct Term {
    enum class Kind { var, cnst, sigma, add, sub, mul, neg };
    Kind kind;
    std::string name;       // var
    FieldElem value;        // cnst
    TermPtr a, b;

    static TermPtr var(std::string n);
    static TermPtr cnst(FieldElem v);
    static TermPtr sigma(TermPtr t);
    static TermPtr add(TermPtr x, TermPtr y);
    static TermPtr sub(TermPtr x, TermPtr y);
    static TermPtr mul(TermPtr x, TermPtr y);
    static TermPtr neg(TermPtr x);
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    enum class Kind { atom, lnot, land, lor, implies, exists, forall };
    Kind kind;
    TermPtr lhs, rhs;       // atom lhs = rhs
    FormulaPtr a, b;
    std::string var;        // quantified variable

    static FormulaPtr atom(TermPtr l, TermPtr r);
    static FormulaPtr lnot(FormulaPtr f);
    static FormulaPtr land(FormulaPtr f, FormulaPtr g);
    static FormulaPtr lor(FormulaPtr f, FormulaPtr g);
    static FormulaPtr implies(FormulaPtr f, FormulaPtr g);
    static FormulaPtr exists(std::string v, FormulaPtr f);
    static FormulaPtr forall(std::string v, FormulaPtr f);
    static FormulaPtr truth(bool b, const FieldPtr& k);   // encoded as 0=0 / 1=0
};

/// Parser for the grammar: `E v.` / `A v.` quantifiers, `~ & | ->`
/// connectives, atoms `t = t` (or `t = 0`), sigma written `s(...)`,
/// `+ - * ^` with integer literals and parentheses.
FormulaPtr parse_formula(const std::string& text, const FieldPtr& k);
std::string print_formula(const FormulaPtr& f);
std::string print_term(const TermPtr& t);

std::vector<std::string> free_vars(const FormulaPtr& f);
int max_sigma_depth(const FormulaPtr& f);

/// Tarski evaluation with sigma = phi_q.  Free variables take values in
/// F_{q^m}; each quantifier scans F_{q^(m j)} for j = 1..ext_window
/// (witnesses in the algebraic closure are approximated by the window).
bool eval_formula(const FormulaPtr& f, const std::map<std::string, FieldElem>& assignment,
                  const DiffField& K, int ext_window = 2,
                  std::uint64_t budget = kDefaultBudget);

/// Realisation set of a formula with free variables v1..vn over F_{q^m}.
PointSet formula_points(const FormulaPtr& f, int n, const DiffField& K,
                        int ext_window = 2, std::uint64_t budget = kDefaultBudget);

/// Quantifier-free positive formula of a presentation piece: I0 atoms on
/// v-bar, I1 atoms on (v-bar, sigma v-bar), with open-complement avoidance.
FormulaPtr presentation_to_fo(const DirectPresentation& P);

/// The Galois formula of a stratification: disjunction over strata of the
/// piece membership and the existential cover condition with one disjunct
/// per domain element.
FormulaPtr galois_to_fo(const GaloisStratification& A);

} // namespace dirgal

#endif
