#pragma once

#include <string>
#include <vector>

#include "eso/error.hpp"
#include "eso/structures.hpp"

namespace eso {

enum class Mode { Eq, Le, Ge };
enum class Quant { Forall, Exists };

const char* to_string(Mode m);
Mode parse_mode(const std::string& s);  // "eq"/"le"/"ge" or "="/"<="/">="

struct Expr {
  enum Kind { True, False, Rel, Member, Equal, Not, And, Or, Implies, Iff };
  Kind kind = True;
  std::string name;       // relation name for Rel
  std::vector<int> args;  // prefix positions of the variables
  std::vector<Expr> kids;
};

struct Formula {
  Mode mode = Mode::Eq;
  std::string set_var;
  std::vector<std::pair<Quant, std::string>> prefix;
  Expr matrix;
};

struct Pattern {
  Mode mode = Mode::Eq;
  std::string word;
  bool operator==(const Pattern&) const = default;
};

Formula parse_formula(const std::string& text);
std::string print_formula(const Formula& f);
Pattern extract_pattern(const Formula& f);

bool is_subsequence(const std::string& p, const std::string& q);
bool in_e_star_a(const std::string& w);       // w ∈ e* ∪ e*a, i.e. w ⪯ some e*a
bool in_e_star_a_star(const std::string& w);  // w ∈ e*a*
bool below_ae(const std::string& w);          // w ∈ {ε, a, e, ae}

// Generic matrix evaluation. `rel(name, tuple)` answers relation atoms and
// `member(element)` answers set membership.
template <class RelFn, class MemFn>
bool eval_expr(const Expr& e, const std::vector<int>& asg, const RelFn& rel, const MemFn& member) {
  switch (e.kind) {
    case Expr::True: return true;
    case Expr::False: return false;
    case Expr::Rel: {
      Tuple t;
      t.reserve(e.args.size());
      for (int a : e.args) t.push_back(asg[a]);
      return rel(e.name, t);
    }
    case Expr::Member: return member(asg[e.args[0]]);
    case Expr::Equal: return asg[e.args[0]] == asg[e.args[1]];
    case Expr::Not: return !eval_expr(e.kids[0], asg, rel, member);
    case Expr::And:
      for (const auto& k : e.kids)
        if (!eval_expr(k, asg, rel, member)) return false;
      return true;
    case Expr::Or:
      for (const auto& k : e.kids)
        if (eval_expr(k, asg, rel, member)) return true;
      return false;
    case Expr::Implies:
      return !eval_expr(e.kids[0], asg, rel, member) || eval_expr(e.kids[1], asg, rel, member);
    case Expr::Iff:
      return eval_expr(e.kids[0], asg, rel, member) == eval_expr(e.kids[1], asg, rel, member);
  }
  return false;
}

// `assignment[i]` is the element bound to the i-th prefix variable;
// `set_value[u]` tells whether u belongs to the set variable.
bool eval_matrix(const Formula& f, const Structure& s, const std::vector<int>& assignment,
                 const std::vector<char>& set_value);

// Throws Invalid on relations missing from s or used with the wrong arity.
void check_signature(const Formula& f, const Structure& s);

}  // namespace eso
