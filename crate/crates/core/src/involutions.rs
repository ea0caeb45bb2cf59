//! Elementary, twisted and combined dual equivalence involutions, and the
//! checkers that decide whether a family of involutions is a dual equivalence.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::RangeInclusive;
use std::sync::Arc;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::shapes::{dominance, Dominance, Partition, TupleShape};
use crate::symfunc::qsym::schur_signature_counts;
use crate::symfunc::{extract_schur, Coeff, QPoly, QSymExpansion, SchurExpansion};
use crate::tableaux::{enumerate_standard_layout, superstandard, ShapeLayout, Signature, StandardFilling};

fn check_color(i: usize, n: usize) -> Result<()> {
    if i < 2 || i + 1 > n {
        return Err(Error::ColorOutOfRange { color: i, max: n.saturating_sub(1) });
    }
    Ok(())
}

fn check_permutation(w: &[u8]) -> Result<()> {
    let mut seen = vec![false; w.len() + 1];
    for &v in w {
        let v = v as usize;
        if v == 0 || v > w.len() || seen[v] {
            return Err(Error::Precondition(format!("{w:?} is not a permutation")));
        }
        seen[v] = true;
    }
    Ok(())
}

/// Positions of the values `i-1, i, i+1`.
fn triple(w: &[u8], i: usize) -> [usize; 3] {
    let mut p = [0; 3];
    for (at, &v) in w.iter().enumerate() {
        let v = v as usize;
        if v + 1 >= i && v <= i + 1 {
            p[v + 1 - i] = at;
        }
    }
    p
}

fn between(p: &[usize; 3]) -> bool {
    (p[0] < p[1] && p[1] < p[2]) || (p[2] < p[1] && p[1] < p[0])
}

/// Swaps `i` with whichever of `i±1` is positionally farther, unless `i`
/// sits between them. Returns whether `w` changed.
pub(crate) fn d_in_place(i: usize, w: &mut [u8]) -> bool {
    let p = triple(w, i);
    if between(&p) {
        return false;
    }
    let far = if p[0].abs_diff(p[1]) > p[2].abs_diff(p[1]) { 0 } else { 2 };
    w.swap(p[1], p[far]);
    true
}

/// Rotates the values `i-1, i, i+1` among their positions so that `i`
/// jumps to the opposite end.
pub(crate) fn twisted_in_place(i: usize, w: &mut [u8]) -> bool {
    let p = triple(w, i);
    if between(&p) {
        return false;
    }
    let mut slots = p;
    slots.sort_unstable();
    let vals = [w[slots[0]], w[slots[1]], w[slots[2]]];
    let rotated = if vals[0] as usize == i { [vals[1], vals[2], vals[0]] } else { [vals[2], vals[0], vals[1]] };
    for (s, v) in slots.iter().zip(rotated) {
        w[*s] = v;
    }
    true
}

pub fn elementary_d(i: usize, w: &[u8]) -> Result<Vec<u8>> {
    check_color(i, w.len())?;
    check_permutation(w)?;
    let mut out = w.to_vec();
    d_in_place(i, &mut out);
    Ok(out)
}

pub fn twisted_d(i: usize, w: &[u8]) -> Result<Vec<u8>> {
    check_color(i, w.len())?;
    check_permutation(w)?;
    let mut out = w.to_vec();
    twisted_in_place(i, &mut out);
    Ok(out)
}

/// Largest pairwise difference of the shifted contents holding `i-1, i, i+1`.
pub(crate) fn triple_dist(i: usize, w: &[u8], layout: &ShapeLayout) -> Result<i64> {
    let p = triple(w, i);
    let c: Vec<i64> = p.iter().map(|&at| layout.cells()[at].shifted_content).collect();
    if c[0] == c[1] || c[1] == c[2] || c[0] == c[2] {
        return Err(Error::Precondition(format!("{}, {i}, {} share a diagonal", i - 1, i + 1)));
    }
    let hi = c.iter().max().unwrap();
    let lo = c.iter().min().unwrap();
    Ok(hi - lo)
}

/// `D_i` on a reading word laid out in `layout`.
pub(crate) fn combined_in_place(i: usize, w: &mut [u8], layout: &ShapeLayout) -> Result<bool> {
    let k = layout.k() as i64;
    if triple_dist(i, w, layout)? > k {
        Ok(d_in_place(i, w))
    } else {
        Ok(twisted_in_place(i, w))
    }
}

/// Applies `d_i` to the reading word and writes the result back into the same cells.
pub fn d_on_filling(i: usize, t: &StandardFilling) -> Result<StandardFilling> {
    check_color(i, t.size())?;
    let mut w = t.reading_word().to_vec();
    d_in_place(i, &mut w);
    StandardFilling::from_word(t.layout().clone(), w)
}

/// `D_i` for a standard filling of a `k`-tuple of shapes.
pub fn combined_d(i: usize, t: &StandardFilling, k: usize) -> Result<StandardFilling> {
    check_color(i, t.size())?;
    if k != t.layout().k() {
        return Err(Error::Precondition(format!("k = {k} but the shape has {} components", t.layout().k())));
    }
    let mut w = t.reading_word().to_vec();
    combined_in_place(i, &mut w, t.layout())?;
    StandardFilling::from_word(t.layout().clone(), w)
}

/// A finite set with a descent map and involutions `phi_2, ..., phi_{n-1}`,
/// addressed by element index.
#[derive(Clone)]
pub struct InvolutionFamily<E> {
    elements: Vec<E>,
    n: usize,
    descents: Vec<Signature>,
    involutions: Vec<Vec<u32>>,
    stat: Option<Vec<u32>>,
}

/// Members of one restricted class, in increasing index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub members: Vec<usize>,
    pub window: RangeInclusive<usize>,
}

impl<E> InvolutionFamily<E> {
    /// `involutions[c - 2][x]` is the image of element `x` under `phi_c`.
    pub fn new(
        elements: Vec<E>,
        n: usize,
        descents: Vec<Signature>,
        involutions: Vec<Vec<usize>>,
        stat: Option<Vec<u32>>,
    ) -> Result<Self> {
        let len = elements.len();
        if descents.len() != len || stat.as_ref().is_some_and(|s| s.len() != len) {
            return Err(Error::Precondition("descent or statistic data does not cover every element".into()));
        }
        if let Some(bad) = descents.iter().find(|s| s.len() != n.saturating_sub(1)) {
            return Err(Error::Precondition(format!("descent signature {bad} has the wrong length for n = {n}")));
        }
        if involutions.len() != n.saturating_sub(2) {
            return Err(Error::Precondition(format!("expected {} involutions", n.saturating_sub(2))));
        }
        let mut tables = Vec::with_capacity(involutions.len());
        for (c, phi) in involutions.into_iter().enumerate() {
            if phi.len() != len {
                return Err(Error::Precondition(format!("involution {} has the wrong length", c + 2)));
            }
            for (x, &y) in phi.iter().enumerate() {
                if y >= len || phi[y] != x {
                    return Err(Error::NotInvolution { color: c + 2, element: x });
                }
            }
            tables.push(phi.into_iter().map(|y| y as u32).collect());
        }
        Ok(InvolutionFamily { elements, n, descents, involutions: tables, stat })
    }

    /// Builds the index tables from element-level maps.
    pub fn from_maps(
        elements: Vec<E>,
        n: usize,
        des: impl Fn(&E) -> Signature,
        phi: impl Fn(usize, &E) -> Result<E>,
        stat: Option<&dyn Fn(&E) -> u32>,
    ) -> Result<Self>
    where
        E: Clone + Eq + std::hash::Hash,
    {
        let index: HashMap<&E, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut tables = Vec::new();
        for c in 2..n {
            let mut phi_c = Vec::with_capacity(elements.len());
            for e in &elements {
                let img = phi(c, e)?;
                let at = index
                    .get(&img)
                    .copied()
                    .ok_or_else(|| Error::Precondition(format!("involution {c} leaves the ground set")))?;
                phi_c.push(at);
            }
            tables.push(phi_c);
        }
        let descents = elements.iter().map(&des).collect();
        let stat = stat.map(|f| elements.iter().map(f).collect());
        drop(index);
        InvolutionFamily::new(elements, n, descents, tables, stat)
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn element(&self, x: usize) -> &E {
        &self.elements[x]
    }

    pub fn descents(&self, x: usize) -> Signature {
        self.descents[x]
    }

    pub fn phi(&self, color: usize, x: usize) -> usize {
        self.involutions[color - 2][x] as usize
    }

    pub fn stat(&self, x: usize) -> u32 {
        self.stat.as_ref().map_or(0, |s| s[x])
    }

    pub fn has_stat(&self) -> bool {
        self.stat.is_some()
    }

    pub fn colors(&self) -> RangeInclusive<usize> {
        2..=self.n.saturating_sub(1)
    }

    /// Orbits under the involutions whose colors lie in `window`.
    pub fn classes(&self, window: RangeInclusive<usize>) -> Vec<EquivalenceClass> {
        let len = self.len();
        let mut label = vec![usize::MAX; len];
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for seed in 0..len {
            if label[seed] != usize::MAX {
                continue;
            }
            let id = out.len();
            label[seed] = id;
            queue.push_back(seed);
            let mut members = vec![seed];
            while let Some(x) = queue.pop_front() {
                for c in window.clone() {
                    let y = self.phi(c, x);
                    if label[y] == usize::MAX {
                        label[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            out.push(EquivalenceClass { members, window: window.clone() });
        }
        out
    }

    pub fn full_classes(&self) -> Vec<EquivalenceClass> {
        self.classes(self.colors())
    }

    pub fn class_of(&self, x: usize, window: RangeInclusive<usize>) -> Result<EquivalenceClass> {
        if !window.is_empty() && (*window.start() < 2 || *window.end() + 1 > self.n) {
            return Err(Error::ColorOutOfRange { color: *window.end(), max: self.n.saturating_sub(1) });
        }
        let mut seen = vec![false; self.len()];
        seen[x] = true;
        let mut members = vec![x];
        let mut at = 0;
        while at < members.len() {
            let y = members[at];
            at += 1;
            for c in window.clone() {
                let z = self.phi(c, y);
                if !seen[z] {
                    seen[z] = true;
                    members.push(z);
                }
            }
        }
        members.sort_unstable();
        Ok(EquivalenceClass { members, window })
    }

    /// Quasisymmetric generating function of a set of members, `q` weighted by the statistic.
    pub fn generating_function<C: Coeff>(&self, members: &[usize]) -> QSymExpansion<C> {
        QSymExpansion::from_signatures(self.n, members.iter().map(|&x| (self.descents[x], self.stat(x))))
    }

    /// Reindexes the family through `f`, keeping every table.
    pub fn map_elements<F>(self, f: impl FnMut(E) -> F) -> InvolutionFamily<F> {
        InvolutionFamily {
            elements: self.elements.into_iter().map(f).collect(),
            n: self.n,
            descents: self.descents,
            involutions: self.involutions,
            stat: self.stat,
        }
    }
}

/// Why a family failed to be a (strong or weak) dual equivalence.
#[derive(Clone, Debug, PartialEq)]
pub enum DeFailure {
    Window {
        h: usize,
        i: usize,
        class: Vec<usize>,
        candidate: Option<Partition>,
        residual: QSymExpansion<BigInt>,
    },
    Commutation {
        i: usize,
        j: usize,
        element: usize,
    },
}

impl fmt::Display for DeFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DeFailure::Window { h, i, class, candidate, residual } => {
                write!(f, "window [{h},{i}], class {class:?}: ")?;
                match candidate {
                    Some(p) => write!(f, "not s[{p}], residual {residual}"),
                    None => write!(f, "no dominant candidate, class sum {residual}"),
                }
            }
            DeFailure::Commutation { i, j, element } => {
                write!(f, "phi_{i} and phi_{j} do not commute at element {element}")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DeReport {
    pub windows_checked: usize,
    pub classes_checked: usize,
    pub failure: Option<DeFailure>,
}

impl DeReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Every color window `[h, i]` with `i - h <= 3` inside `[2, n - 1]`.
pub fn windows(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for h in 2..n {
        for i in h..n.min(h + 4) {
            out.push((h, i));
        }
    }
    out
}

fn window_counts<E>(fam: &InvolutionFamily<E>, members: &[usize], h: usize, i: usize) -> HashMap<Signature, u64> {
    let mut counts = HashMap::new();
    for &x in members {
        *counts.entry(fam.descents(x).window(h - 1, i)).or_default() += 1;
    }
    counts
}

fn counts_to_qsym(n: usize, counts: &HashMap<Signature, u64>) -> QSymExpansion<BigInt> {
    let mut f = QSymExpansion::zero(n);
    for (s, c) in counts {
        f.add_monomial(*s, 0, BigInt::from(*c));
    }
    f
}

/// The composition that dominates every other composition in `sigs`, if any.
fn dominant_composition<'a>(sigs: impl Iterator<Item = &'a Signature> + Clone) -> Option<Vec<usize>> {
    let comps: Vec<Vec<usize>> = sigs.map(|s| s.composition()).collect();
    comps
        .iter()
        .find(|a| {
            comps
                .iter()
                .all(|b| matches!(dominance(a, b), Ok(Dominance::Equal | Dominance::Dominates)))
        })
        .cloned()
}

/// `None` if the class sum is exactly one Schur function, else the failure.
fn single_schur_failure(h: usize, i: usize, class: &[usize], counts: &HashMap<Signature, u64>) -> Option<DeFailure> {
    let degree = i - h + 3;
    let fail = |candidate, residual| DeFailure::Window { h, i, class: class.to_vec(), candidate, residual };
    let Some(top) = dominant_composition(counts.keys()) else {
        return Some(fail(None, counts_to_qsym(degree, counts)));
    };
    let Ok(lam) = Partition::new(top.clone()) else {
        return Some(fail(None, counts_to_qsym(degree, counts)));
    };
    let expected: HashMap<Signature, u64> = schur_signature_counts(&lam).iter().copied().collect();
    if &expected == counts {
        return None;
    }
    let mut residual = counts_to_qsym(degree, counts);
    residual.sub(&crate::symfunc::schur_in_q(&lam));
    Some(fail(Some(lam), residual))
}

fn commutation_failure<E>(fam: &InvolutionFamily<E>) -> Option<DeFailure> {
    let n = fam.n();
    for i in 2..n {
        for j in i + 3..n {
            for x in 0..fam.len() {
                if fam.phi(j, fam.phi(i, x)) != fam.phi(i, fam.phi(j, x)) {
                    return Some(DeFailure::Commutation { i, j, element: x });
                }
            }
        }
    }
    None
}

fn check_windows<E>(fam: &InvolutionFamily<E>, strong: bool) -> DeReport {
    let mut report = DeReport { windows_checked: 0, classes_checked: 0, failure: None };
    for (h, i) in windows(fam.n()) {
        report.windows_checked += 1;
        for class in fam.classes(h..=i) {
            report.classes_checked += 1;
            let counts = window_counts(fam, &class.members, h, i);
            let failure = if strong || h == i {
                single_schur_failure(h, i, &class.members, &counts)
            } else {
                let e = extract_schur(&counts_to_qsym(i - h + 3, &counts));
                (!e.is_schur_positive()).then(|| DeFailure::Window {
                    h,
                    i,
                    class: class.members.clone(),
                    candidate: None,
                    residual: e.residual().clone(),
                })
            };
            if failure.is_some() {
                report.failure = failure;
                return report;
            }
        }
    }
    report.failure = commutation_failure(fam);
    report
}

/// Every windowed class is a single Schur function and far involutions commute.
pub fn check_strong_dual_equivalence<E>(fam: &InvolutionFamily<E>) -> DeReport {
    check_windows(fam, true)
}

/// Windowed classes need only be Schur positive, except one-color windows.
pub fn check_weak_dual_equivalence<E>(fam: &InvolutionFamily<E>) -> DeReport {
    check_windows(fam, false)
}

fn extremal<E>(fam: &InvolutionFamily<E>, class: &[usize], key: impl Fn(Signature) -> Signature) -> Result<(usize, Vec<usize>)> {
    // the empty filling has the empty composition
    let alpha = |s: Signature| if fam.n() == 0 { Vec::new() } else { s.composition() };
    let comps: Vec<Vec<usize>> = class.iter().map(|&x| alpha(key(fam.descents(x)))).collect();
    let tops: Vec<usize> = (0..class.len())
        .filter(|&a| {
            comps
                .iter()
                .enumerate()
                .all(|(b, c)| a == b || dominance(&comps[a], c) == Ok(Dominance::Dominates))
        })
        .collect();
    match tops.as_slice() {
        [a] => Ok((class[*a], comps[*a].clone())),
        [] => Err(Error::NotDualEquivalence(format!("class {class:?} has no dominant element"))),
        _ => Err(Error::NotDualEquivalence(format!("class {class:?} has several dominant elements"))),
    }
}

/// One dominant element per full class together with its descent composition.
pub fn dominant_elements<E>(fam: &InvolutionFamily<E>) -> Result<Vec<(usize, Partition)>> {
    fam.full_classes()
        .iter()
        .map(|c| {
            let (x, alpha) = extremal(fam, &c.members, |s| s)?;
            let lam = Partition::new(alpha)
                .map_err(|_| Error::NotDualEquivalence(format!("dominant element {x} has a non-partition composition")))?;
            Ok((x, lam))
        })
        .collect()
}

/// One subordinate element per class: the complemented descent composition
/// dominates the class, and its conjugate is reported.
pub fn subordinate_elements<E>(fam: &InvolutionFamily<E>) -> Result<Vec<(usize, Partition)>> {
    fam.full_classes()
        .iter()
        .map(|c| {
            let (x, alpha) = extremal(fam, &c.members, |s| s.negate())?;
            let lam = Partition::new(alpha)
                .map_err(|_| Error::NotDualEquivalence(format!("subordinate element {x} has a non-partition composition")))?;
            Ok((x, lam.conjugate()))
        })
        .collect()
}

/// Sum over dominant elements of `q^stat * s_alpha`.
pub fn schur_expansion_from_de<C: Coeff, E>(fam: &InvolutionFamily<E>) -> Result<SchurExpansion<C>> {
    let mut out = SchurExpansion::zero(fam.n());
    for class in fam.full_classes() {
        let s = fam.stat(class.members[0]);
        if let Some(&x) = class.members.iter().find(|&&x| fam.stat(x) != s) {
            return Err(Error::StatisticNotConstant(x));
        }
        let (_, alpha) = extremal(fam, &class.members, |s| s)?;
        let lam = Partition::new(alpha).map_err(|_| Error::NotDualEquivalence("non-partition dominant".into()))?;
        out.add_term(lam, &QPoly::q_pow(s));
    }
    Ok(out)
}

/// Straight-shape images of every element: each dominant element goes to the
/// superstandard tableau of its shape, and moves inside the class are copied
/// with `d_i`. Fails if the result depends on the path taken.
pub fn implicit_rectification_all<E>(fam: &InvolutionFamily<E>) -> Result<Vec<StandardFilling>> {
    let mut image: Vec<Option<StandardFilling>> = vec![None; fam.len()];
    for class in fam.full_classes() {
        let (root, alpha) = extremal(fam, &class.members, |s| s)?;
        let lam = Partition::new(alpha).map_err(|_| Error::NotDualEquivalence("non-partition dominant".into()))?;
        image[root] = Some(superstandard(&lam));
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let tx = image[x].clone().expect("visited");
            for c in fam.colors() {
                let y = fam.phi(c, x);
                let ty = d_on_filling(c, &tx)?;
                match &image[y] {
                    Some(known) if *known != ty => {
                        return Err(Error::NotDualEquivalence(format!(
                            "rectification of element {y} depends on the path (color {c})"
                        )));
                    }
                    Some(_) => {}
                    None => {
                        image[y] = Some(ty);
                        queue.push_back(y);
                    }
                }
            }
        }
    }
    let out: Vec<StandardFilling> = image.into_iter().map(|t| t.expect("every class is seeded")).collect();
    for (x, t) in out.iter().enumerate() {
        if t.signature() != fam.descents(x) {
            return Err(Error::NotDualEquivalence(format!("rectification of element {x} changes its descents")));
        }
    }
    Ok(out)
}

pub fn implicit_rectification<E>(x: usize, fam: &InvolutionFamily<E>) -> Result<StandardFilling> {
    let class = fam.class_of(x, fam.colors())?;
    let sub = restrict_family(fam, &class.members);
    let at = class.members.binary_search(&x).expect("x is in its class");
    Ok(implicit_rectification_all(&sub)?.swap_remove(at))
}

/// The subfamily on a union of full classes, reindexed by position in `members`.
fn restrict_family<E>(fam: &InvolutionFamily<E>, members: &[usize]) -> InvolutionFamily<usize> {
    let local: HashMap<usize, usize> = members.iter().enumerate().map(|(a, &x)| (x, a)).collect();
    let tables = fam
        .colors()
        .map(|c| members.iter().map(|&x| local[&fam.phi(c, x)]).collect())
        .collect();
    InvolutionFamily::new(
        members.to_vec(),
        fam.n(),
        members.iter().map(|&x| fam.descents(x)).collect(),
        tables,
        fam.has_stat().then(|| members.iter().map(|&x| fam.stat(x)).collect()),
    )
    .expect("restriction of a valid family")
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut w: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(w.clone());
        // next permutation
        let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
            return out;
        };
        let j = (i..w.len()).rev().find(|&j| w[j] > w[i - 1]).unwrap();
        w.swap(i - 1, j);
        w[i..].reverse();
    }
}

/// Words of a fixed length closed under `op`, looked up by binary search.
pub fn word_family(
    words: Vec<Vec<u8>>,
    op: impl Fn(usize, &mut Vec<u8>) -> Result<()>,
    stat: Option<Vec<u32>>,
) -> Result<InvolutionFamily<Vec<u8>>> {
    let n = words.first().map_or(0, Vec::len);
    if words.windows(2).any(|p| p[0] >= p[1]) {
        return Err(Error::Precondition("words must be sorted and distinct".into()));
    }
    let mut tables = Vec::new();
    for c in 2..n {
        let mut t = Vec::with_capacity(words.len());
        for w in &words {
            let mut img = w.clone();
            op(c, &mut img)?;
            let at = words
                .binary_search(&img)
                .map_err(|_| Error::Precondition(format!("involution {c} leaves the ground set at {w:?}")))?;
            t.push(at);
        }
        tables.push(t);
    }
    let descents = words.iter().map(|w| Signature::of_word(w)).collect();
    InvolutionFamily::new(words, n, descents, tables, stat)
}

/// `{d_i}` or `{d~_i}` on all of `S_n`.
pub fn permutation_family(n: usize, twisted: bool) -> InvolutionFamily<Vec<u8>> {
    word_family(
        permutations(n),
        |c, w| {
            if twisted {
                twisted_in_place(c, w);
            } else {
                d_in_place(c, w);
            }
            Ok(())
        },
        None,
    )
    .expect("d and d~ are involutions on S_n")
}

/// Standard fillings sharing one layout, with a word-level involution.
pub fn filling_family(
    layout: &Arc<ShapeLayout>,
    bound: usize,
    op: impl Fn(usize, &mut Vec<u8>) -> Result<()>,
    stat: Option<&dyn Fn(&StandardFilling) -> u32>,
) -> Result<InvolutionFamily<StandardFilling>> {
    let fillings = enumerate_standard_layout(layout, bound)?;
    let stats = stat.map(|f| fillings.iter().map(f).collect());
    let words: Vec<Vec<u8>> = fillings.iter().map(|t| t.reading_word().to_vec()).collect();
    let fam = word_family(words, op, stats)?;
    let mut it = fillings.into_iter();
    Ok(fam.map_elements(|_| it.next().expect("one filling per word")))
}

/// `{d_i}` on the standard fillings of a straight, skew or tuple shape.
pub fn standard_family(shape: &TupleShape, bound: usize) -> Result<InvolutionFamily<StandardFilling>> {
    filling_family(
        &ShapeLayout::new(shape.clone()),
        bound,
        |c, w| {
            d_in_place(c, w);
            Ok(())
        },
        None,
    )
}

/// `{D_i}` on the standard fillings of a tuple shape.
pub fn combined_family(
    shape: &TupleShape,
    bound: usize,
    stat: Option<&dyn Fn(&StandardFilling) -> u32>,
) -> Result<InvolutionFamily<StandardFilling>> {
    let layout = ShapeLayout::new(shape.clone());
    let l = layout.clone();
    filling_family(&layout, bound, move |c, w| combined_in_place(c, w, &l).map(|_| ()), stat)
}
