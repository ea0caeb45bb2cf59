use std::collections::BTreeMap;
use std::fmt::{self, Debug, Display};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Coefficient ring for q-polynomials and symmetric function expansions.
pub trait Coeff: Clone + Debug + Display + PartialEq + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static {}

impl<T> Coeff for T where T: Clone + Debug + Display + PartialEq + Signed + FromPrimitive + ToPrimitive + Send + Sync + 'static {}

/// A polynomial in `q` with exponents `>= 0`, stored sparsely.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly<C> {
    terms: BTreeMap<u32, C>,
}

impl<C: Coeff> QPoly<C> {
    pub fn zero() -> Self {
        QPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::monomial(0, c)
    }

    /// `c * q^e`
    pub fn monomial(e: u32, c: C) -> Self {
        let mut p = Self::zero();
        p.add_term(e, c);
        p
    }

    /// `q^e`
    pub fn q_pow(e: u32) -> Self {
        Self::monomial(e, C::one())
    }

    pub fn add_term(&mut self, e: u32, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: u32) -> C {
        self.terms.get(&e).cloned().unwrap_or_else(C::zero)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &C)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        for (&e, v) in &self.terms {
            out.add_term(e, v.clone() * c.clone());
        }
        out
    }

    pub fn shift(&self, by: u32) -> Self {
        QPoly { terms: self.terms.iter().map(|(&e, c)| (e + by, c.clone())).collect() }
    }

    pub fn eval(&self, q: &C) -> C {
        let mut acc = C::zero();
        if let Some(top) = self.degree() {
            for e in (0..=top).rev() {
                acc = acc * q.clone() + self.coeff(e);
            }
        }
        acc
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> QPoly<D> {
        let mut out = QPoly::zero();
        for (&e, c) in &self.terms {
            out.add_term(e, f(c));
        }
        out
    }

    /// True when this is `c * q^e` for a single term.
    pub fn as_monomial(&self) -> Option<(u32, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(&e, c)| (e, c))
        } else {
            None
        }
    }
}

impl<C: Coeff> AddAssign<&QPoly<C>> for QPoly<C> {
    fn add_assign(&mut self, rhs: &QPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl<C: Coeff> SubAssign<&QPoly<C>> for QPoly<C> {
    fn sub_assign(&mut self, rhs: &QPoly<C>) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c.clone());
        }
    }
}

impl<C: Coeff> Add for QPoly<C> {
    type Output = QPoly<C>;
    fn add(mut self, rhs: QPoly<C>) -> QPoly<C> {
        self += &rhs;
        self
    }
}

impl<C: Coeff> Sub for QPoly<C> {
    type Output = QPoly<C>;
    fn sub(mut self, rhs: QPoly<C>) -> QPoly<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coeff> Neg for QPoly<C> {
    type Output = QPoly<C>;
    fn neg(self) -> QPoly<C> {
        self.scale(&-C::one())
    }
}

impl<C: Coeff> Mul for &QPoly<C> {
    type Output = QPoly<C>;
    fn mul(self, rhs: &QPoly<C>) -> QPoly<C> {
        let mut out = QPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x.clone() * y.clone());
            }
        }
        out
    }
}

/// Descending exponents, e.g. `q^2+3*q-1`; the zero polynomial prints as `0`.
impl<C: Coeff> Display for QPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (&e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if neg {
                f.write_str("-")?;
            } else if k > 0 {
                f.write_str("+")?;
            }
            let unit = mag.is_one();
            match e {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !unit {
                        write!(f, "{mag}*")?;
                    }
                    if e == 1 {
                        f.write_str("q")?;
                    } else {
                        write!(f, "q^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl<C: Coeff> Debug for QPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}
