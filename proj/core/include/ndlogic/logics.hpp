#pragma once

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ndlogic/derivation.hpp"
#include "ndlogic/matrix.hpp"
#include "ndlogic/statement.hpp"

namespace ndlogic::logics {

/// neg, cons (unary); and, or, imp (binary) with infix `&`, `|`, `->`.
Signature sigma_mci();

/// Five-valued mCi artifacts over values f, F, I, T, t.
struct MciArtifacts {
  Signature sigma_mci;
  NdMatrix m5;      // designated {I, T, t}
  NdMatrix m5_rej;  // designated {f, I, T}
  BMatrix b5;       // m5 x m5_rej
  Calculus hmci2d;  // 28 two-dimensional rules
};

/// Throws Error if the constructed tables disagree with the embedded
/// reference rows.
const MciArtifacts& mci_artifacts();

/// The 28-rule two-dimensional calculus, theta {p, cons(p)}.
Calculus hmci2d();

/// Two-valued deterministic matrix (F, T; designated T) over and, or, imp.
NdMatrix boolean_positive();

struct MkMatrix {
  int k = 1;
  NdMatrix matrix;  // values "1".."2(k+1)", designated upper half
};

/// Throws InputError for k < 1 or k > 31.
MkMatrix mk_matrix(int k);

/// neg applied m times to k+2 in M_k, by table iteration.
/// Throws InputError unless 1 <= m <= 2k.
int iterated_neg(int k, int m);
/// Closed form: (k+2) + m/2 for even m, 1 + (m+1)/2 for odd m.
int iterated_neg_closed_form(int k, int m);

/// Positive classical base axioms (SET-FMLA), named ax1..ax9.
std::vector<RuleSchema> cpl_positive_axioms();
/// acc {p, imp(p,q)} |> nacc {q}
RuleSchema modus_ponens();

struct HmciFamily {
  int k = 0;
  Calculus calculus;  // one-dimensional
};

/// Positive base + ExM + bc1 + ci + ci_j for 0 <= j <= k, and MP.
/// Throws InputError for k < 0.
HmciFamily hmci_axioms(int k);

/// cons(neg^j(cons(p)))
Formula ci_j_formula(int j);
/// Positive classical base as a one-dimensional calculus (axioms + MP).
Calculus cplpos();

/// Signature {g, h} (unary).
Signature sigma_ex1();

struct Example1 {
  NdMatrix matrix;  // values t, f, bot; designated {t}
  /// h^i(p) |> p, g(p)
  RuleSchema rule(int i) const;
  /// rules for 0..i as a one-dimensional calculus
  Calculus rules_up_to(int i) const;
};
Example1 example1();

struct Example2 {
  BMatrix matrix;  // example-1 algebra, designated {t}, antidesignated {f}
  Calculus calculus;
};
/// The printed rules name their connectives f and t; validity against the
/// B-matrix identifies f with g and t with h, which is what is bundled.
Example2 example2();

/// Outcome of checking both readings of the printed ex2 names.
struct NamingRepair {
  std::string f_reads_as;  // "g" or "h", or empty if neither reading is valid
  std::string t_reads_as;
};
NamingRepair resolve_example2_naming();

/// Transcribed derivations of the three mCi facts: p & neg p proves
/// neg cons p; neg cons p proves p & neg p; cons neg cons p is a theorem.
struct TranscribedProof {
  std::string name;
  BStatement statement;
  DerivationTree tree;
};
std::vector<TranscribedProof> reference_derivations();

/// mci5, mci5-rej, mci-b, mk:k, ex1, ex2, cplpos. Throws InputError.
AnyMatrix builtin_matrix(std::string_view name);
/// hmci2d, hmci:k, ex1-rules:i, ex2-calc, cplpos. Throws InputError.
Calculus builtin_calculus(std::string_view name);
std::vector<std::string> builtin_names();

}  // namespace ndlogic::logics
