//! Partitions, compositions, cells and (skew, tuple) diagrams.
//!
//! Coordinates are `(col, row)`, 1-indexed, French orientation: row 1 is the
//! bottom row and rows get shorter going north. The content of a cell is
//! `col - row`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition, stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts that may contain trailing zeros.
    pub fn from_padded(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition::new(parts)
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (1-indexed rows), zero past the last row.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.parts.get(row - 1).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Partition { parts }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        cell.col >= 1 && cell.row >= 1 && cell.col <= self.part(cell.row)
    }

    /// Cells listed row by row, bottom to top, left to right.
    pub fn cells(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (1..=len).map(move |c| Cell::new(c, r + 1)))
            .collect()
    }

    /// Whether this partition is a hook `(m, 1, ..., 1)`.
    pub fn is_hook(&self) -> bool {
        self.parts.iter().skip(1).all(|&p| p == 1)
    }

    pub fn as_composition(&self) -> Composition {
        Composition { parts: self.parts.clone() }
    }

    /// All partitions of `n` in descending lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions_rec(n, n, &mut current, &mut out);
        out
    }

    /// All partitions of every size up to and including `n`.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all).collect()
    }
}

fn partitions_rec(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: current.clone() });
        return;
    }
    for p in (1..=remaining.min(max_part)).rev() {
        current.push(p);
        partitions_rec(remaining - p, p, current, out);
        current.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        write_joined(f, &self.parts)
    }
}

fn write_joined(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

fn parse_int_list(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    let s = if s.starts_with('(') && s.ends_with(')') && s.len() >= 2 {
        &s[1..s.len() - 1]
    } else {
        s
    };
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad integer {t:?} in {s:?}")))
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `3,2`, `(3,2)`, `()` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_int_list(s)?)
    }
}

/// A composition of `n`: a sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

/// Outcome of comparing two compositions in dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    Equal,
    /// The left argument is strictly below the right one.
    Dominated,
    /// The left argument strictly dominates the right one.
    Dominates,
    Incomparable,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidShape(format!("composition {parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The composition of `n` whose partial sums are the elements of `descents`
    /// followed by `n`.
    pub fn from_descent_set(descents: &[usize], n: usize) -> Result<Self> {
        let mut sorted = descents.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        if let Some(&bad) = sorted.iter().find(|&&d| d == 0 || d >= n) {
            return Err(Error::OutOfRange { value: bad, max: n.saturating_sub(1) });
        }
        let mut parts = Vec::with_capacity(sorted.len() + 1);
        let mut prev = 0;
        for d in sorted.into_iter().chain(std::iter::once(n)) {
            if d > prev {
                parts.push(d - prev);
            }
            prev = d;
        }
        Ok(Composition { parts })
    }

    /// Partial sums, excluding the total.
    pub fn descent_set(&self) -> Vec<usize> {
        let mut acc = 0;
        let mut out = Vec::new();
        for &p in &self.parts[..self.parts.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn to_partition(&self) -> Option<Partition> {
        self.is_partition().then(|| Partition { parts: self.parts.clone() })
    }

    pub fn dominance(&self, other: &Composition) -> Result<Dominance> {
        dominance(&self.parts, &other.parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("()");
        }
        write_joined(f, &self.parts)
    }
}

/// Compares two sequences of the same total by their prefix sums, padding the
/// shorter one with zeros.
pub fn dominance(a: &[usize], b: &[usize]) -> Result<Dominance> {
    let (sa, sb): (usize, usize) = (a.iter().sum(), b.iter().sum());
    if sa != sb {
        return Err(Error::SizeMismatch(sa, sb));
    }
    let (mut pa, mut pb) = (0usize, 0usize);
    let (mut ge, mut le) = (true, true);
    for k in 0..a.len().max(b.len()) {
        pa += a.get(k).copied().unwrap_or(0);
        pb += b.get(k).copied().unwrap_or(0);
        match pa.cmp(&pb) {
            Ordering::Less => ge = false,
            Ordering::Greater => le = false,
            Ordering::Equal => {}
        }
    }
    Ok(match (ge, le) {
        (true, true) => Dominance::Equal,
        (true, false) => Dominance::Dominates,
        (false, true) => Dominance::Dominated,
        (false, false) => Dominance::Incomparable,
    })
}

/// `dominance_leq` under its descriptive name: reports how `a` relates to `b`.
pub fn dominance_leq(a: &Composition, b: &Composition) -> Result<Dominance> {
    a.dominance(b)
}

/// A cell of a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub col: usize,
    pub row: usize,
}

impl Cell {
    pub fn new(col: usize, row: usize) -> Self {
        debug_assert!(col >= 1 && row >= 1);
        Cell { col, row }
    }

    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

pub fn content(c: Cell) -> i64 {
    c.content()
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.col, self.row)
    }
}

/// A skew diagram `outer / inner`. Equality is on the pair, never on the cell
/// set up to translation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidShape(format!("{inner} is not contained in {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(p: Partition) -> Self {
        SkewShape { outer: p, inner: Partition::empty() }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    /// Cells in content reading order: increasing content, ties by increasing row.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self
            .outer
            .cells()
            .into_iter()
            .filter(|c| !self.inner.contains_cell(*c))
            .collect();
        cells.sort_by_key(|c| (c.content(), c.row));
        cells
    }

    /// Cell counts per row, bottom to top, as `(first_col, last_col)` pairs.
    pub fn rows(&self) -> Vec<(usize, usize)> {
        (1..=self.outer.len())
            .map(|r| (self.inner.part(r) + 1, self.outer.part(r)))
            .collect()
    }
}

pub fn cells_of(s: &SkewShape) -> Vec<Cell> {
    s.cells()
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s.split_once('/') {
            Some((o, i)) => SkewShape::new(o.parse()?, i.parse()?),
            None => Ok(SkewShape::straight(s.parse()?)),
        }
    }
}

/// An ordered tuple of skew shapes. Components may be empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TupleShape {
    components: Vec<SkewShape>,
}

impl TupleShape {
    pub fn new(components: Vec<SkewShape>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidShape("a tuple shape needs at least one component".into()));
        }
        Ok(TupleShape { components })
    }

    pub fn single(shape: SkewShape) -> Self {
        TupleShape { components: vec![shape] }
    }

    pub fn from_partitions(parts: impl IntoIterator<Item = Partition>) -> Result<Self> {
        TupleShape::new(parts.into_iter().map(SkewShape::straight).collect())
    }

    pub fn components(&self) -> &[SkewShape] {
        &self.components
    }

    pub fn k(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components.iter().map(SkewShape::size).sum()
    }

    pub fn is_straight(&self) -> bool {
        self.components.iter().all(SkewShape::is_straight)
    }

    /// All tuples of `k` straight shapes (empty allowed) of total size `n`.
    pub fn all_straight(k: usize, n: usize) -> Vec<TupleShape> {
        fn rec(k: usize, n: usize, acc: &mut Vec<SkewShape>, out: &mut Vec<TupleShape>) {
            if acc.len() + 1 == k {
                for p in Partition::all(n) {
                    acc.push(SkewShape::straight(p));
                    out.push(TupleShape { components: acc.clone() });
                    acc.pop();
                }
                return;
            }
            for m in 0..=n {
                for p in Partition::all(m) {
                    acc.push(SkewShape::straight(p));
                    rec(k, n - m, acc, out);
                    acc.pop();
                }
            }
        }
        let mut out = Vec::new();
        if k > 0 {
            rec(k, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl fmt::Display for TupleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if c.outer.is_empty() && c.inner.is_empty() {
                f.write_str("()")?;
            } else if c.inner.is_empty() {
                write!(f, "({})", c.outer)?;
            } else {
                f.write_str("(")?;
                write_joined(f, c.outer.parts())?;
                f.write_str(")/(")?;
                write_joined(f, c.inner.parts())?;
                f.write_str(")")?;
            }
        }
        f.write_str(")")
    }
}

/// Splits `s` at commas that are not nested inside parentheses.
fn split_top_level(s: &str) -> Result<Vec<&str>> {
    let mut depth = 0i32;
    let mut start = 0;
    let mut out = Vec::new();
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => {
                depth -= 1;
                if depth < 0 {
                    return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
                }
            }
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(Error::Parse(format!("unbalanced parentheses in {s:?}")));
    }
    out.push(&s[start..]);
    Ok(out)
}

impl FromStr for TupleShape {
    type Err = Error;

    /// Accepts `((3,2),(2,1),(),(2,2,1)/(1))`; anything without nested
    /// parentheses is read as a single skew shape.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let nested = t.starts_with('(') && t.ends_with(')') && t[1..t.len() - 1].contains('(');
        if !nested {
            return Ok(TupleShape::single(t.parse()?));
        }
        let inner = &t[1..t.len() - 1];
        let comps = split_top_level(inner)?
            .into_iter()
            .map(|c| c.trim().parse::<SkewShape>())
            .collect::<Result<Vec<_>>>()?;
        TupleShape::new(comps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p("3,2").conjugate(), p("2,2,1"));
        assert_eq!(p("1").conjugate(), p("1"));
        assert_eq!(p("5,4,4,1").conjugate(), p("4,3,3,3,1"));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugate_matches_brute_force_transpose() {
        for lam in Partition::all_up_to(10) {
            let mut transposed: Vec<Cell> =
                lam.cells().into_iter().map(|c| Cell::new(c.row, c.col)).collect();
            transposed.sort();
            let mut cells = lam.conjugate().cells();
            cells.sort();
            assert_eq!(cells, transposed, "{lam}");
        }
    }

    #[test]
    fn dominance_examples() {
        let c = |v: Vec<usize>| Composition::new(v).unwrap();
        assert_eq!(dominance_leq(&c(vec![3, 1]), &c(vec![2, 2])).unwrap(), Dominance::Dominates);
        assert_eq!(dominance_leq(&c(vec![4]), &c(vec![4])).unwrap(), Dominance::Equal);
        assert_eq!(dominance_leq(&c(vec![3, 3]), &c(vec![4, 1, 1])).unwrap(), Dominance::Incomparable);
        assert_eq!(dominance_leq(&c(vec![2, 2]), &c(vec![3, 1])).unwrap(), Dominance::Dominated);
        assert!(matches!(dominance_leq(&c(vec![3]), &c(vec![2])), Err(Error::SizeMismatch(3, 2))));
    }

    #[test]
    fn descent_set_compositions() {
        assert_eq!(Composition::from_descent_set(&[], 4).unwrap().parts(), &[4]);
        assert_eq!(Composition::from_descent_set(&[1, 2, 3], 4).unwrap().parts(), &[1, 1, 1, 1]);
        assert_eq!(Composition::from_descent_set(&[2, 3], 5).unwrap().parts(), &[2, 1, 2]);
        assert!(Composition::from_descent_set(&[5], 5).is_err());
        assert!(Composition::from_descent_set(&[0], 5).is_err());
    }

    #[test]
    fn contents() {
        assert_eq!(content(Cell::new(1, 1)), 0);
        assert_eq!(content(Cell::new(3, 1)), 2);
        assert_eq!(content(Cell::new(1, 4)), -3);
    }

    #[test]
    fn skew_cells() {
        let s: SkewShape = "5,4,4,1/3,2,2".parse().unwrap();
        assert_eq!(cells_of(&s).len(), 7);
        let s: SkewShape = "2,1".parse().unwrap();
        assert_eq!(cells_of(&s), vec![Cell::new(1, 2), Cell::new(1, 1), Cell::new(2, 1)]);
        let s: SkewShape = "1/1".parse().unwrap();
        assert!(cells_of(&s).is_empty());
        assert!("1/2".parse::<SkewShape>().is_err());
    }

    #[test]
    fn skew_shapes_are_not_translation_normalized() {
        let a: SkewShape = "2/1".parse().unwrap();
        let b: SkewShape = "1".parse().unwrap();
        assert_eq!(a.size(), b.size());
        assert_ne!(a, b);
    }

    #[test]
    fn text_notation() {
        assert_eq!(p("3,2").to_string(), "3,2");
        assert_eq!(Partition::empty().to_string(), "()");
        assert_eq!(p("(3,2)"), p("3,2"));
        let t: TupleShape = "((3,2),(2,1),(),(2,2,1)/(1))".parse().unwrap();
        assert_eq!(t.k(), 4);
        assert_eq!(t.size(), 12);
        assert_eq!(t.to_string(), "((3,2),(2,1),(),(2,2,1)/(1))");
        let single: TupleShape = "5,4,4,1/3,2,2".parse().unwrap();
        assert_eq!(single.k(), 1);
        assert!("((3,2),(1".parse::<TupleShape>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert!("2,3".parse::<Partition>().is_err());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=9).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        // number of 4-tuples of partitions of total size 8
        assert_eq!(TupleShape::all_straight(4, 8).len(), 2580);
    }

    #[test]
    fn dominance_is_a_partial_order() {
        for n in 1..=9 {
            let parts = Partition::all(n);
            let leq = |a: &Partition, b: &Partition| {
                matches!(dominance(a.parts(), b.parts()).unwrap(), Dominance::Equal | Dominance::Dominated)
            };
            for a in &parts {
                assert!(leq(a, a));
                for b in &parts {
                    if leq(a, b) && leq(b, a) {
                        assert_eq!(a, b);
                    }
                    for c in &parts {
                        if leq(a, b) && leq(b, c) {
                            assert!(leq(a, c));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn descending_lex_extends_dominance() {
        for n in 1..=9 {
            let parts = Partition::all(n);
            for (i, a) in parts.iter().enumerate() {
                for b in &parts[i + 1..] {
                    // b comes later, so it must never dominate a
                    assert_ne!(dominance(a.parts(), b.parts()).unwrap(), Dominance::Dominated, "{a} {b}");
                }
            }
        }
    }

    #[test]
    fn descent_set_bijection() {
        for n in 1..=10 {
            let mut seen = std::collections::HashSet::new();
            for mask in 0u32..(1 << (n - 1)) {
                let d: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
                let c = Composition::from_descent_set(&d, n).unwrap();
                assert_eq!(c.size(), n);
                assert_eq!(c.descent_set(), d);
                assert!(seen.insert(c));
            }
        }
    }

    #[test]
    fn conjugate_is_involutive() {
        for lam in Partition::all_up_to(12) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }
}
