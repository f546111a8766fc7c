//! Rational-function coefficient expressions over named parameters.
//!
//! Product tables are transcribed with their printed coefficients as
//! expression trees, without simplification, and evaluated exactly.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, int, rat, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Const(Rational),
    Param(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

/// Named parameter.
pub fn p(name: &str) -> Expr {
    Expr::Param(name.to_string())
}

/// Constant `num/den`.
pub fn c(num: i64, den: i64) -> Expr {
    Expr::Const(rat(num, den))
}

pub fn k(value: i64) -> Expr {
    Expr::Const(int(value))
}

impl Expr {
    pub fn pow(self, exp: u32) -> Expr {
        Expr::Pow(Box::new(self), exp)
    }

    pub fn eval(&self, values: &BTreeMap<String, Rational>) -> Result<Rational> {
        Ok(match self {
            Expr::Const(v) => v.clone(),
            Expr::Param(name) => values
                .get(name)
                .cloned()
                .ok_or_else(|| Error::MissingParameter(name.clone()))?,
            Expr::Neg(a) => -a.eval(values)?,
            Expr::Add(a, b) => a.eval(values)? + b.eval(values)?,
            Expr::Sub(a, b) => a.eval(values)? - b.eval(values)?,
            Expr::Mul(a, b) => a.eval(values)? * b.eval(values)?,
            Expr::Div(a, b) => {
                let den = b.eval(values)?;
                if den.is_zero() {
                    return Err(Error::DivisionByZero(b.to_string()));
                }
                a.eval(values)? / den
            }
            Expr::Pow(a, e) => {
                let base = a.eval(values)?;
                (0..*e).fold(Rational::one(), |acc, _| acc * &base)
            }
        })
    }

    pub fn collect_params(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Const(_) => {}
            Expr::Param(name) => {
                out.insert(name.clone());
            }
            Expr::Neg(a) | Expr::Pow(a, _) => a.collect_params(out),
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
                a.collect_params(out);
                b.collect_params(out);
            }
        }
    }

    pub fn params(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_params(&mut out);
        out
    }

    /// Every subexpression appearing as a divisor.
    pub fn denominators(&self) -> Vec<&Expr> {
        let mut out = Vec::new();
        self.walk_denominators(&mut out);
        out
    }

    fn walk_denominators<'a>(&'a self, out: &mut Vec<&'a Expr>) {
        match self {
            Expr::Const(_) | Expr::Param(_) => {}
            Expr::Neg(a) | Expr::Pow(a, _) => a.walk_denominators(out),
            Expr::Div(a, b) => {
                out.push(b);
                a.walk_denominators(out);
                b.walk_denominators(out);
            }
            Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) => {
                a.walk_denominators(out);
                b.walk_denominators(out);
            }
        }
    }

    fn precedence(&self) -> u8 {
        match self {
            Expr::Add(..) | Expr::Sub(..) => 1,
            Expr::Mul(..) | Expr::Div(..) => 2,
            Expr::Neg(_) => 3,
            Expr::Pow(..) => 4,
            Expr::Const(v) if !v.is_integer() || v < &Rational::zero() => 2,
            Expr::Const(_) | Expr::Param(_) => 5,
        }
    }

    fn fmt_child(&self, child: &Expr, min: u8, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if child.precedence() < min {
            write!(f, "({child})")
        } else {
            write!(f, "{child}")
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Const(v) => f.write_str(&format_rational(v)),
            Expr::Param(name) => f.write_str(name),
            Expr::Neg(a) => {
                f.write_str("-")?;
                self.fmt_child(a, 3, f)
            }
            Expr::Add(a, b) => {
                self.fmt_child(a, 1, f)?;
                f.write_str(" + ")?;
                self.fmt_child(b, 2, f)
            }
            Expr::Sub(a, b) => {
                self.fmt_child(a, 1, f)?;
                f.write_str(" - ")?;
                self.fmt_child(b, 2, f)
            }
            Expr::Mul(a, b) => {
                self.fmt_child(a, 2, f)?;
                f.write_str("*")?;
                self.fmt_child(b, 3, f)
            }
            Expr::Div(a, b) => {
                self.fmt_child(a, 2, f)?;
                f.write_str("/")?;
                self.fmt_child(b, 3, f)
            }
            Expr::Pow(a, e) => {
                self.fmt_child(a, 5, f)?;
                write!(f, "^{e}")
            }
        }
    }
}

impl From<i64> for Expr {
    fn from(v: i64) -> Self {
        k(v)
    }
}

macro_rules! binary_op {
    ($trait:ident, $method:ident, $variant:ident) => {
        impl $trait for Expr {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(self), Box::new(rhs))
            }
        }

        impl $trait<i64> for Expr {
            type Output = Expr;
            fn $method(self, rhs: i64) -> Expr {
                Expr::$variant(Box::new(self), Box::new(k(rhs)))
            }
        }

        impl $trait<Expr> for i64 {
            type Output = Expr;
            fn $method(self, rhs: Expr) -> Expr {
                Expr::$variant(Box::new(k(self)), Box::new(rhs))
            }
        }
    };
}

binary_op!(Add, add, Add);
binary_op!(Sub, sub, Sub);
binary_op!(Mul, mul, Mul);
binary_op!(Div, div, Div);

impl Neg for Expr {
    type Output = Expr;
    fn neg(self) -> Expr {
        Expr::Neg(Box::new(self))
    }
}
