// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "exec/interp.hpp"
#include "lang/model.hpp"

namespace sfbmc::sym {

// Expressions over symbols. A Sym leaf carries the program-variable index it
// was seeded from; the bijection g is name-identity, so g(v) prints as the
// variable's name.

enum class K { IntC, BoolC, Sym, Add, Sub, Mul, Neg, Not, And, Or, Cmp };

struct Expr;
using Ptr = std::shared_ptr<const Expr>;

struct Expr {
  K k = K::IntC;
  long long ival = 0;
  bool bval = false;
  int var = -1;  // Sym
  lang::CmpOp cmp = lang::CmpOp::Eq;
  Ptr a, b;
};

Ptr sym_true();
Ptr sym_false();
Ptr mk_int(long long v);
Ptr mk_bool(bool v);
Ptr mk_sym(int var);
// binary/unary constructors fold fully-constant operands, nothing else
Ptr mk_add(Ptr a, Ptr b);
Ptr mk_sub(Ptr a, Ptr b);
Ptr mk_mul(Ptr a, Ptr b);
Ptr mk_neg(Ptr a);
Ptr mk_not(Ptr a);
Ptr mk_and(Ptr a, Ptr b);
Ptr mk_or(Ptr a, Ptr b);
Ptr mk_cmp(lang::CmpOp op, Ptr a, Ptr b);

bool is_true(const Ptr& e);
bool is_false(const Ptr& e);
bool equal(const Ptr& a, const Ptr& b);
bool is_linear(const Ptr& e);

// Δ: total map from program variables to symbolic expressions.
using SymEnv = std::vector<Ptr>;

SymEnv identity_env(const lang::Model& m);  // Δ0 = g

// Symbolic evaluation of an action-language expression under Δ (substitution).
Ptr subst(const lang::Expr& e, const SymEnv& delta);

// Concrete interpretation: symbols are read from `base` (D0 ∘ g⁻¹).
exec::Value eval(const Ptr& e, const exec::Env& base);

std::string to_text(const Ptr& e, const lang::Model& m);

}  // namespace sfbmc::sym
