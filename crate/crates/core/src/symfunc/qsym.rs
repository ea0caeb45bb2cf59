use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::shapes::Partition;
use crate::tableaux::{superstandard, syt, Signature};

use super::qpoly::{Coeff, QPoly};

/// A finite sum of fundamental quasisymmetric functions `Q_sigma` of one
/// degree, with q-polynomial coefficients.
#[derive(Clone, PartialEq)]
pub struct QSymExpansion<C> {
    n: usize,
    terms: BTreeMap<Signature, QPoly<C>>,
}

#[allow(clippy::len_without_is_empty)]
impl<C: Coeff> QSymExpansion<C> {
    pub fn zero(n: usize) -> Self {
        QSymExpansion { n, terms: BTreeMap::new() }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    fn check_len(&self, sigma: &Signature) {
        assert_eq!(
            sigma.len(),
            self.n.saturating_sub(1),
            "signature {sigma} does not have degree {}",
            self.n
        );
    }

    pub fn add_term(&mut self, sigma: Signature, coeff: &QPoly<C>) {
        self.check_len(&sigma);
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(sigma).or_insert_with(QPoly::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&sigma);
        }
    }

    /// Adds `c * q^e * Q_sigma`.
    pub fn add_monomial(&mut self, sigma: Signature, e: u32, c: C) {
        self.add_term(sigma, &QPoly::monomial(e, c));
    }

    pub fn coeff(&self, sigma: &Signature) -> QPoly<C> {
        self.terms.get(sigma).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Signature, &QPoly<C>)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, other: &QSymExpansion<C>, by: &QPoly<C>) {
        assert_eq!(self.n, other.n, "degree mismatch");
        for (s, c) in &other.terms {
            self.add_term(*s, &(c * by));
        }
    }

    pub fn add(&mut self, other: &QSymExpansion<C>) {
        self.add_scaled(other, &QPoly::one());
    }

    pub fn sub(&mut self, other: &QSymExpansion<C>) {
        self.add_scaled(other, &-QPoly::one());
    }

    /// Substitutes `q = value` in every coefficient.
    pub fn at_q(&self, value: &C) -> QSymExpansion<C> {
        let mut out = QSymExpansion::zero(self.n);
        for (s, c) in &self.terms {
            out.add_monomial(*s, 0, c.eval(value));
        }
        out
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> QSymExpansion<D> {
        let mut out = QSymExpansion::zero(self.n);
        for (s, c) in &self.terms {
            out.add_term(*s, &c.map(&f));
        }
        out
    }

    /// Sum of `q^stat * Q_sigma` over `(sigma, stat)` pairs.
    pub fn from_signatures(n: usize, items: impl IntoIterator<Item = (Signature, u32)>) -> Self {
        let mut counts: HashMap<(Signature, u32), u64> = HashMap::new();
        for item in items {
            *counts.entry(item).or_default() += 1;
        }
        let mut out = QSymExpansion::zero(n);
        for ((s, e), c) in counts {
            out.add_monomial(s, e, C::from_u64(c).expect("count fits the coefficient ring"));
        }
        out
    }
}

impl<C: Coeff> fmt::Display for QSymExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(s, c)| with_coeff(c, &format!("Q[{s}]"))).collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<C: Coeff> fmt::Debug for QSymExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QSymExpansion(n={}, {self})", self.n)
    }
}

/// `coeff*basis`, dropping a unit coefficient and parenthesizing sums.
fn with_coeff<C: Coeff>(c: &QPoly<C>, basis: &str) -> String {
    match c.as_monomial() {
        Some((0, v)) if v.is_one() => basis.to_string(),
        Some((_, v)) if !v.is_negative() => format!("{c}*{basis}"),
        _ => format!("({c})*{basis}"),
    }
}

type SignatureCounts = Arc<Vec<(Signature, u64)>>;

/// Signature counts of the standard Young tableaux of each shape, shared
/// across threads.
fn schur_signatures(p: &Partition) -> Arc<Vec<(Signature, u64)>> {
    static CACHE: OnceLock<RwLock<HashMap<Partition, SignatureCounts>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().unwrap().get(p) {
        return hit.clone();
    }
    let mut counts: BTreeMap<Signature, u64> = BTreeMap::new();
    for t in syt(p) {
        *counts.entry(t.signature()).or_default() += 1;
    }
    let entry = Arc::new(counts.into_iter().collect::<Vec<_>>());
    cache.write().unwrap().entry(p.clone()).or_insert(entry).clone()
}

/// Multiset of descent signatures of `SYT(p)` with their multiplicities.
pub fn schur_signature_counts(p: &Partition) -> Arc<Vec<(Signature, u64)>> {
    schur_signatures(p)
}

/// `s_p` in the fundamental basis.
pub fn schur_in_q<C: Coeff>(p: &Partition) -> QSymExpansion<C> {
    let mut out = QSymExpansion::zero(p.size());
    for (s, c) in schur_signatures(p).iter() {
        out.add_monomial(*s, 0, C::from_u64(*c).expect("count fits"));
    }
    out
}

/// Schur coefficients of a quasisymmetric expansion, with whatever could not
/// be absorbed kept as a residual.
#[derive(Clone, PartialEq)]
pub struct SchurExpansion<C> {
    n: usize,
    coeffs: BTreeMap<Partition, QPoly<C>>,
    residual: QSymExpansion<C>,
}

impl<C: Coeff> SchurExpansion<C> {
    pub fn zero(n: usize) -> Self {
        SchurExpansion { n, coeffs: BTreeMap::new(), residual: QSymExpansion::zero(n) }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, p: Partition, c: &QPoly<C>) {
        assert_eq!(p.size(), self.n, "partition {p} does not have size {}", self.n);
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(p.clone()).or_insert_with(QPoly::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn coeff(&self, p: &Partition) -> QPoly<C> {
        self.coeffs.get(p).cloned().unwrap_or_else(QPoly::zero)
    }

    /// Terms in descending lexicographic order of partitions.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly<C>)> {
        self.coeffs.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty() && self.residual.is_zero()
    }

    pub fn residual(&self) -> &QSymExpansion<C> {
        &self.residual
    }

    /// True when every Schur coefficient has nonnegative integer coefficients.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.values().all(QPoly::is_nonnegative)
    }

    /// Residual zero and all coefficients nonnegative.
    pub fn is_schur_positive(&self) -> bool {
        self.residual.is_zero() && self.is_nonnegative()
    }

    /// The single partition with coefficient one, if that is all there is.
    pub fn as_single_schur(&self) -> Option<&Partition> {
        if !self.residual.is_zero() || self.coeffs.len() != 1 {
            return None;
        }
        let (p, c) = self.coeffs.iter().next()?;
        c.as_monomial().filter(|(e, v)| *e == 0 && v.is_one()).map(|_| p)
    }

    /// Expands back into the fundamental basis, residual included.
    pub fn to_qsym(&self) -> QSymExpansion<C> {
        let mut out = self.residual.clone();
        for (p, c) in &self.coeffs {
            out.add_scaled(&schur_in_q(p), c);
        }
        out
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> SchurExpansion<D> {
        SchurExpansion {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(p, c)| (p.clone(), c.map(&f))).filter(|(_, c)| !c.is_zero()).collect(),
            residual: self.residual.map(&f),
        }
    }
}

/// E.g. `q*s[3,1] + q^2*s[2,1,1]`; a nonzero residual is appended as
/// `+ residual(...)`.
impl<C: Coeff> fmt::Display for SchurExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> =
            self.terms().map(|(p, c)| with_coeff(c, &format!("s[{}]", p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))).collect();
        if !self.residual.is_zero() {
            parts.push(format!("residual({})", self.residual));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" + "))
    }
}

impl<C: Coeff> fmt::Debug for SchurExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SchurExpansion(n={}, {self})", self.n)
    }
}

/// Greedy extraction: partitions are visited in descending lexicographic
/// order, and the coefficient of `Q` at the superstandard signature of each
/// is peeled off together with the whole of `s_lambda`.
pub fn extract_schur<C: Coeff>(f: &QSymExpansion<C>) -> SchurExpansion<C> {
    let n = f.degree();
    let mut out = SchurExpansion::zero(n);
    let mut rest = f.clone();
    for lam in Partition::all(n) {
        if rest.is_zero() {
            break;
        }
        let top = superstandard(&lam).signature();
        let c = rest.coeff(&top);
        if c.is_zero() {
            continue;
        }
        for (s, m) in schur_signatures(&lam).iter() {
            rest.add_term(*s, &c.scale(&-C::from_u64(*m).expect("count fits")));
        }
        out.add_term(lam, &c);
    }
    out.residual = rest;
    out
}

/// Checks that `f` is a Schur-positive symmetric function.
pub fn certify_schur_positive<C: Coeff>(f: &QSymExpansion<C>) -> Result<SchurExpansion<C>> {
    let e = extract_schur(f);
    if !e.residual().is_zero() {
        return Err(Error::Classification(format!("not in the Schur span: residual {}", e.residual())));
    }
    if !e.is_nonnegative() {
        return Err(Error::Classification(format!("negative Schur coefficient in {e}")));
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn schur_32_in_q() {
        let f: QSymExpansion<i64> = schur_in_q(&p("3,2"));
        assert_eq!(f.len(), 5);
        for s in ["+-++", "-+-+", "-++-", "+-+-", "++-+"] {
            assert_eq!(f.coeff(&sig(s)), QPoly::one(), "{s}");
        }
        let row: QSymExpansion<i64> = schur_in_q(&p("4"));
        assert_eq!(row.to_string(), "Q[+++]");
        let col: QSymExpansion<i64> = schur_in_q(&p("1,1,1,1"));
        assert_eq!(col.to_string(), "Q[---]");
    }

    #[test]
    fn extraction_round_trips() {
        for lam in Partition::all_up_to(8) {
            let e = extract_schur(&schur_in_q::<BigInt>(&lam));
            assert_eq!(e.as_single_schur(), Some(&lam), "{lam}");
        }
    }

    #[test]
    fn non_symmetric_input_leaves_a_residual() {
        let mut f = QSymExpansion::<i64>::zero(3);
        f.add_monomial(sig("+-"), 0, 1);
        let e = extract_schur(&f);
        assert!(!e.residual().is_zero());
        assert!(!e.is_schur_positive());
    }

    #[test]
    fn display_forms() {
        let mut e = SchurExpansion::<i64>::zero(4);
        e.add_term(p("3,1"), &QPoly::q_pow(1));
        e.add_term(p("2,1,1"), &QPoly::q_pow(2));
        assert_eq!(e.to_string(), "q*s[3,1] + q^2*s[2,1,1]");
        let mut g = SchurExpansion::<i64>::zero(6);
        g.add_term(p("3,2,1"), &QPoly::constant(2));
        assert_eq!(g.to_string(), "2*s[3,2,1]");
        let mut h = SchurExpansion::<i64>::zero(2);
        h.add_term(p("2"), &QPoly::one());
        h.add_term(p("1,1"), &(QPoly::q_pow(1) + QPoly::one()));
        assert_eq!(h.to_string(), "s[2] + (q+1)*s[1,1]");
    }

    #[test]
    fn empty_degree() {
        let f: QSymExpansion<i64> = schur_in_q(&Partition::empty());
        let e = extract_schur(&f);
        assert_eq!(e.as_single_schur(), Some(&Partition::empty()));
    }
}
