//! Evaluation in finitely many commuting variables, used as an independent
//! oracle for identities between expansions.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::shapes::{Partition, SkewShape, TupleShape};
use crate::tableaux::{enumerate_semistandard, Signature};

use super::qpoly::Coeff;
use super::qsym::QSymExpansion;

/// A polynomial in `x_1, ..., x_m`, keyed by exponent vectors.
#[derive(Clone, PartialEq, Eq)]
pub struct MPoly<C> {
    vars: usize,
    terms: BTreeMap<Vec<u16>, C>,
}

#[allow(clippy::len_without_is_empty)]
impl<C: Coeff> MPoly<C> {
    pub fn zero(vars: usize) -> Self {
        MPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize) -> Self {
        let mut p = MPoly::zero(vars);
        p.add_term(vec![0; vars], C::one());
        p
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn add_term(&mut self, exps: Vec<u16>, c: C) {
        assert_eq!(exps.len(), self.vars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&exps);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn coeff(&self, exps: &[u16]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &C)> {
        self.terms.iter()
    }
}

impl<C: Coeff> Mul for &MPoly<C> {
    type Output = MPoly<C>;

    fn mul(self, rhs: &MPoly<C>) -> MPoly<C> {
        assert_eq!(self.vars, rhs.vars);
        let mut out = MPoly::zero(self.vars);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                let e = a.iter().zip(b).map(|(i, j)| i + j).collect();
                out.add_term(e, x.clone() * y.clone());
            }
        }
        out
    }
}

impl<C: Coeff> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (exps, c) in self.terms.iter().rev() {
            let mono: Vec<String> = exps
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{e}", i + 1) })
                .collect();
            let neg = c.is_negative();
            let mag = c.abs();
            if !first || neg {
                f.write_str(if neg { "-" } else { "+" })?;
            }
            first = false;
            match (mono.is_empty(), mag.is_one()) {
                (true, _) => write!(f, "{mag}")?,
                (false, true) => f.write_str(&mono.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

impl<C: Coeff> fmt::Debug for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MPoly({self})")
    }
}

/// `Q_sigma(x_1..x_m)`: weakly increasing index sequences, strictly rising
/// wherever `sigma` has a `-1`.
pub fn fundamental_in_vars<C: Coeff>(sigma: &Signature, n: usize, m: usize) -> MPoly<C> {
    let mut out = MPoly::zero(m);
    let mut exps = vec![0u16; m];
    fundamental_rec(sigma, n, 0, 1, &mut exps, &mut out);
    out
}

fn fundamental_rec<C: Coeff>(sigma: &Signature, n: usize, j: usize, lo: usize, exps: &mut [u16], out: &mut MPoly<C>) {
    if j == n {
        out.add_term(exps.to_vec(), C::one());
        return;
    }
    for i in lo..=exps.len() {
        exps[i - 1] += 1;
        // the step from index j+1 to j+2 is strict when sigma_{j+1} = -1
        let next = if j + 1 < n && sigma.is_minus(j + 1) { i + 1 } else { i };
        fundamental_rec(sigma, n, j + 1, next, exps, out);
        exps[i - 1] -= 1;
    }
}

/// Evaluates `f` at `q = q_value` in `m` variables.
pub fn evaluate_monomials<C: Coeff>(f: &QSymExpansion<C>, m: usize, q_value: &C) -> MPoly<C> {
    assert!(m >= 1, "need at least one variable");
    let mut out = MPoly::zero(m);
    for (sigma, coeff) in f.terms() {
        let c = coeff.eval(q_value);
        if c.is_zero() {
            continue;
        }
        for (e, v) in fundamental_in_vars::<C>(sigma, f.degree(), m).terms() {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
    }
    out
}

/// Monomial expansion of a skew or tuple Schur function over its
/// semistandard fillings with entries `<= m`.
pub fn skew_schur_eval<C: Coeff>(shape: &TupleShape, m: usize) -> MPoly<C> {
    let mut out = MPoly::zero(m);
    for t in enumerate_semistandard(shape, m) {
        out.add_term(t.weight(m).into_iter().map(|w| w as u16).collect(), C::one());
    }
    out
}

/// `s_p(x_1..x_m)` as a sum over semistandard tableaux.
pub fn schur_eval<C: Coeff>(p: &Partition, m: usize) -> MPoly<C> {
    skew_schur_eval(&TupleShape::single(SkewShape::straight(p.clone())), m)
}
