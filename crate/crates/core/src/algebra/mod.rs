//! Exact arithmetic: rational-exponent monomials, sparse Laurent
//! polynomials, fractions of them, substitution and evaluation.

pub mod coeff;
pub mod divide;
pub mod error;
pub mod eval;
pub mod expr;
pub mod field;
pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod subst;
pub mod symbol;
pub mod unipoly;

pub use coeff::{CoeffElement, CoeffMonomial};
pub use divide::exact_divide;
pub use error::AlgebraError;
pub use eval::{
    clearing_root, eval_expr, eval_poly, reduced_degree_in, reduced_degree_in_fp,
    specialize_numeric, ultradiscrete_eval,
};
pub use expr::{expr_equals, RationalExpression};
pub use field::{Field, Fp};
pub use monomial::{exp_frac, exp_int, Exp, Monomial};
pub use poly::{int, rat, LaurentPoly};
pub use subst::{substitute, substitute_all, Substitution};
pub use symbol::{Param, Sym, Var};
pub use unipoly::{UniPoly, UniRat};
