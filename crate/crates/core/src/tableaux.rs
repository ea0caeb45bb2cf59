//! Standard and semistandard fillings of straight, skew and tuple shapes.
//!
//! A filling is stored against a [`ShapeLayout`], which fixes the cells of the
//! shape in content reading order. The entries of a standard filling listed in
//! that order are exactly its content reading word.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape, TupleShape};

/// Default cap on the number of cells for exhaustive enumeration.
pub const DEFAULT_SIZE_BOUND: usize = 14;

/// A `{+1,-1}` vector of length `len`, stored as a bitmask of its `-1` slots.
///
/// Positions are 1-indexed: bit `j - 1` is set iff `sigma_j = -1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Signature {
    len: u8,
    minus: u64,
}

impl Signature {
    pub const MAX_LEN: usize = 63;

    pub fn all_plus(len: usize) -> Self {
        assert!(len <= Self::MAX_LEN, "signature too long");
        Signature { len: len as u8, minus: 0 }
    }

    pub fn from_descents(len: usize, descents: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut s = Signature::all_plus(len);
        for d in descents {
            if d == 0 || d > len {
                return Err(Error::OutOfRange { value: d, max: len });
            }
            s.minus |= 1 << (d - 1);
        }
        Ok(s)
    }

    pub(crate) fn from_mask(len: usize, minus: u64) -> Self {
        debug_assert!(len == 64 || minus >> len == 0);
        Signature { len: len as u8, minus }
    }

    /// Descent signature of a permutation word: `+` at `i` iff `i` appears
    /// to the left of `i+1`.
    pub fn of_word(word: &[u8]) -> Self {
        let n = word.len();
        let mut pos = vec![0usize; n + 1];
        for (p, &v) in word.iter().enumerate() {
            pos[v as usize] = p;
        }
        let mut minus = 0u64;
        for i in 1..n {
            if pos[i + 1] < pos[i] {
                minus |= 1 << (i - 1);
            }
        }
        Signature::from_mask(n.saturating_sub(1), minus)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn mask(&self) -> u64 {
        self.minus
    }

    /// `+1` or `-1` at 1-indexed position `j`.
    pub fn get(&self, j: usize) -> i8 {
        assert!(j >= 1 && j <= self.len(), "signature index {j} out of range");
        if self.is_minus(j) {
            -1
        } else {
            1
        }
    }

    pub fn is_minus(&self, j: usize) -> bool {
        self.minus & (1 << (j - 1)) != 0
    }

    pub fn descents(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&j| self.is_minus(j)).collect()
    }

    pub fn truncate(&self, len: usize) -> Self {
        assert!(len <= self.len());
        let keep = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Signature::from_mask(len, self.minus & keep)
    }

    pub fn negate(&self) -> Self {
        let full = if self.len == 64 { u64::MAX } else { (1u64 << self.len) - 1 };
        Signature::from_mask(self.len(), !self.minus & full)
    }

    /// Positions `lo..=hi`, renumbered to start at 1.
    pub fn window(&self, lo: usize, hi: usize) -> Self {
        assert!(lo >= 1 && hi <= self.len() && lo <= hi + 1);
        let len = hi + 1 - lo;
        let keep = if len == 64 { u64::MAX } else { (1u64 << len) - 1 };
        Signature::from_mask(len, (self.minus >> (lo - 1)) & keep)
    }

    /// The composition of `len + 1` whose partial sums are the descents.
    pub fn composition(&self) -> Vec<usize> {
        let n = self.len() + 1;
        let mut parts = Vec::new();
        let mut prev = 0;
        for d in self.descents().into_iter().chain(std::iter::once(n)) {
            parts.push(d - prev);
            prev = d;
        }
        parts
    }
}

/// Shorter signatures first, then lexicographic on the text form (`+` before `-`).
impl Ord for Signature {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.len
            .cmp(&other.len)
            .then_with(|| self.minus.reverse_bits().cmp(&other.minus.reverse_bits()))
    }
}

impl PartialOrd for Signature {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 1..=self.len() {
            f.write_str(if self.is_minus(j) { "-" } else { "+" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Signature({self})")
    }
}

impl FromStr for Signature {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.chars().count() > Self::MAX_LEN {
            return Err(Error::Parse(format!("signature {s:?} is too long")));
        }
        let mut minus = 0u64;
        for (j, ch) in s.chars().enumerate() {
            match ch {
                '+' => {}
                '-' | '−' => minus |= 1 << j,
                _ => return Err(Error::Parse(format!("bad signature character {ch:?} in {s:?}"))),
            }
        }
        Ok(Signature::from_mask(s.chars().count(), minus))
    }
}

/// A cell of a tuple shape together with its position data.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PlacedCell {
    pub component: usize,
    pub cell: Cell,
    pub shifted_content: i64,
}

/// The cells of a tuple shape in content reading order, with the left and
/// lower neighbours of each cell resolved to reading positions.
#[derive(Debug, PartialEq, Eq)]
pub struct ShapeLayout {
    shape: TupleShape,
    cells: Vec<PlacedCell>,
    left: Vec<Option<usize>>,
    below: Vec<Option<usize>>,
    index: HashMap<(usize, Cell), usize>,
}

impl ShapeLayout {
    pub fn new(shape: TupleShape) -> Arc<Self> {
        let k = shape.k() as i64;
        let mut cells: Vec<PlacedCell> = shape
            .components()
            .iter()
            .enumerate()
            .flat_map(|(i, s)| {
                s.cells().into_iter().map(move |cell| PlacedCell {
                    component: i,
                    cell,
                    shifted_content: k * cell.content() + i as i64,
                })
            })
            .collect();
        cells.sort_by_key(|c| (c.shifted_content, c.cell.row));
        for w in cells.windows(2) {
            // equal shifted contents only ever occur inside one component
            assert!(
                w[0].shifted_content != w[1].shifted_content || w[0].component == w[1].component,
                "shifted content tie across components"
            );
        }
        let index: HashMap<(usize, Cell), usize> =
            cells.iter().enumerate().map(|(p, c)| ((c.component, c.cell), p)).collect();
        let neighbour = |c: &PlacedCell, dc: usize, dr: usize| {
            if c.cell.col <= dc || c.cell.row <= dr {
                return None;
            }
            index.get(&(c.component, Cell::new(c.cell.col - dc, c.cell.row - dr))).copied()
        };
        let left = cells.iter().map(|c| neighbour(c, 1, 0)).collect();
        let below = cells.iter().map(|c| neighbour(c, 0, 1)).collect();
        Arc::new(ShapeLayout { shape, cells, left, below, index })
    }

    pub fn skew(shape: SkewShape) -> Arc<Self> {
        ShapeLayout::new(TupleShape::single(shape))
    }

    pub fn straight(p: Partition) -> Arc<Self> {
        ShapeLayout::skew(SkewShape::straight(p))
    }

    pub fn shape(&self) -> &TupleShape {
        &self.shape
    }

    pub fn k(&self) -> usize {
        self.shape.k()
    }

    pub fn size(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[PlacedCell] {
        &self.cells
    }

    pub fn position(&self, component: usize, cell: Cell) -> Option<usize> {
        self.index.get(&(component, cell)).copied()
    }

    fn is_standard(&self, word: &[u8]) -> bool {
        (0..word.len()).all(|p| {
            self.left[p].is_none_or(|l| word[l] < word[p])
                && self.below[p].is_none_or(|b| word[b] < word[p])
        })
    }
}

/// A standard filling: a bijection from the cells of a tuple shape to `1..=n`
/// that increases along rows and up columns within each component.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StandardFilling {
    layout: Arc<ShapeLayout>,
    word: Vec<u8>,
}

impl std::hash::Hash for ShapeLayout {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.shape.hash(state);
    }
}

impl StandardFilling {
    /// Builds a filling from its content reading word.
    pub fn from_word(layout: Arc<ShapeLayout>, word: Vec<u8>) -> Result<Self> {
        let n = layout.size();
        if word.len() != n {
            return Err(Error::NotStandard(format!("{} entries for {} cells", word.len(), n)));
        }
        let mut seen = vec![false; n + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotStandard(format!("entries {word:?} are not a permutation of 1..={n}")));
            }
            seen[v] = true;
        }
        if !layout.is_standard(&word) {
            return Err(Error::NotStandard(format!("rows or columns fail to increase in {word:?}")));
        }
        Ok(StandardFilling { layout, word })
    }

    pub(crate) fn from_word_unchecked(layout: Arc<ShapeLayout>, word: Vec<u8>) -> Self {
        debug_assert!(layout.is_standard(&word));
        StandardFilling { layout, word }
    }

    pub fn layout(&self) -> &Arc<ShapeLayout> {
        &self.layout
    }

    pub fn shape(&self) -> &TupleShape {
        self.layout.shape()
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    /// The entries read in increasing (shifted) content, southwest to northeast.
    pub fn reading_word(&self) -> &[u8] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u8> {
        self.word
    }

    pub fn signature(&self) -> Signature {
        Signature::of_word(&self.word)
    }

    pub fn entry(&self, component: usize, cell: Cell) -> Option<u8> {
        self.layout.position(component, cell).map(|p| self.word[p])
    }

    /// Reading position of each value: `positions()[v]` for `v` in `1..=n`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.size() + 1];
        for (p, &v) in self.word.iter().enumerate() {
            pos[v as usize] = p;
        }
        pos
    }

    /// Row reading word: rows from top to bottom, each read left to right,
    /// components in order.
    pub fn row_reading_word(&self) -> Vec<u8> {
        let mut order: Vec<usize> = (0..self.size()).collect();
        order.sort_by_key(|&p| {
            let c = &self.layout.cells[p];
            (c.component, std::cmp::Reverse(c.cell.row), c.cell.col)
        });
        order.into_iter().map(|p| self.word[p]).collect()
    }

    /// Transposes a filling of a single straight shape.
    pub fn transpose(&self) -> Result<StandardFilling> {
        let shape = &self.shape().components();
        if shape.len() != 1 || !shape[0].is_straight() {
            return Err(Error::InvalidShape("transpose needs a single straight shape".into()));
        }
        let layout = ShapeLayout::straight(shape[0].outer().conjugate());
        let word = layout
            .cells()
            .iter()
            .map(|c| self.entry(0, Cell::new(c.cell.row, c.cell.col)).expect("transposed cell"))
            .collect();
        StandardFilling::from_word(layout, word)
    }

    /// Row-by-row view of one component: `rows[r]` holds `(col, entry)` pairs.
    fn component_rows(&self, component: usize) -> Vec<Vec<(usize, u8)>> {
        let shape = &self.shape().components()[component];
        shape
            .rows()
            .into_iter()
            .enumerate()
            .map(|(r, (first, last))| {
                (first..=last)
                    .map(|col| (col, self.entry(component, Cell::new(col, r + 1)).unwrap()))
                    .collect()
            })
            .collect()
    }

    /// Parses the text form; see the `Display` impl.
    pub fn parse(s: &str) -> Result<Self> {
        let (shape, entries) = parse_tableau_text(s)?;
        let layout = ShapeLayout::new(shape);
        let word = layout
            .cells()
            .iter()
            .map(|c| {
                let v = entries[&(c.component, c.cell)];
                u8::try_from(v).map_err(|_| Error::NotStandard(format!("entry {v} too large")))
            })
            .collect::<Result<Vec<u8>>>()?;
        StandardFilling::from_word(layout, word)
    }
}

impl fmt::Debug for StandardFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StandardFilling({self})")
    }
}

/// Rows bottom to top separated by `;`, entries separated by spaces, inner
/// cells written `.`; tuples are wrapped as `[ ... | ... ]`.
impl fmt::Display for StandardFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = self.layout.k();
        let render = |i: usize| {
            let shape = &self.shape().components()[i];
            self.component_rows(i)
                .into_iter()
                .enumerate()
                .map(|(r, row)| {
                    let inner = shape.inner().part(r + 1);
                    std::iter::repeat_n(".".to_string(), inner)
                        .chain(row.into_iter().map(|(_, v)| v.to_string()))
                        .collect::<Vec<_>>()
                        .join(" ")
                })
                .collect::<Vec<_>>()
                .join(";")
        };
        if k == 1 {
            f.write_str(&render(0))
        } else {
            let parts: Vec<String> = (0..k).map(render).collect();
            write!(f, "[{}]", parts.join(" | "))
        }
    }
}

type ParsedEntries = HashMap<(usize, Cell), u32>;

fn parse_component(s: &str, component: usize, entries: &mut ParsedEntries) -> Result<SkewShape> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(SkewShape::default());
    }
    let mut outer = Vec::new();
    let mut inner = Vec::new();
    for (r, row) in s.split(';').enumerate() {
        let tokens: Vec<&str> = row.split_whitespace().collect();
        if tokens.is_empty() {
            return Err(Error::Parse(format!("empty row in {s:?}")));
        }
        let dots = tokens.iter().take_while(|t| **t == ".").count();
        for (j, t) in tokens[dots..].iter().enumerate() {
            let v: u32 = t.parse().map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}")))?;
            entries.insert((component, Cell::new(dots + j + 1, r + 1)), v);
        }
        outer.push(tokens.len());
        inner.push(dots);
    }
    SkewShape::new(Partition::from_padded(outer)?, Partition::from_padded(inner)?)
}

fn parse_tableau_text(s: &str) -> Result<(TupleShape, ParsedEntries)> {
    let t = s.trim();
    let mut entries = HashMap::new();
    if let Some(body) = t.strip_prefix('[') {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("unterminated tuple {t:?}")))?;
        let comps = body
            .split('|')
            .enumerate()
            .map(|(i, c)| parse_component(c, i, &mut entries))
            .collect::<Result<Vec<_>>>()?;
        Ok((TupleShape::new(comps)?, entries))
    } else {
        let shape = parse_component(t, 0, &mut entries)?;
        Ok((TupleShape::single(shape), entries))
    }
}

/// Parses one skew filling in the text form into its shape and entries.
pub fn parse_skew_entries(s: &str) -> Result<(SkewShape, Vec<(Cell, u32)>)> {
    let mut entries = HashMap::new();
    let shape = parse_component(s, 0, &mut entries)?;
    let mut list: Vec<(Cell, u32)> = entries.into_iter().map(|((_, c), v)| (c, v)).collect();
    list.sort_unstable();
    Ok((shape, list))
}

impl FromStr for StandardFilling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StandardFilling::parse(s)
    }
}

pub fn content_reading_word(t: &StandardFilling) -> Vec<u8> {
    t.reading_word().to_vec()
}

pub fn descent_signature(t: &StandardFilling) -> Signature {
    t.signature()
}

/// Rows filled left to right, bottom to top, with `1..=n`.
pub fn superstandard(p: &Partition) -> StandardFilling {
    let layout = ShapeLayout::straight(p.clone());
    let mut offsets = vec![0usize; p.len() + 1];
    for r in 0..p.len() {
        offsets[r + 1] = offsets[r] + p.parts()[r];
    }
    let word = layout
        .cells()
        .iter()
        .map(|c| (offsets[c.cell.row - 1] + c.cell.col) as u8)
        .collect();
    StandardFilling::from_word_unchecked(layout, word)
}

/// Columns filled bottom to top, left column first.
pub fn substandard(p: &Partition) -> StandardFilling {
    let conj = p.conjugate();
    let layout = ShapeLayout::straight(p.clone());
    let mut offsets = vec![0usize; conj.len() + 1];
    for c in 0..conj.len() {
        offsets[c + 1] = offsets[c] + conj.parts()[c];
    }
    let word = layout
        .cells()
        .iter()
        .map(|c| (offsets[c.cell.col - 1] + c.cell.row) as u8)
        .collect();
    StandardFilling::from_word_unchecked(layout, word)
}

/// Every standard filling of the layout, sorted lexicographically by reading word.
pub fn enumerate_standard_layout(layout: &Arc<ShapeLayout>, bound: usize) -> Result<Vec<StandardFilling>> {
    let n = layout.size();
    if n > bound {
        return Err(Error::SizeBound { size: n, bound });
    }
    if n > u8::MAX as usize {
        return Err(Error::SizeBound { size: n, bound: u8::MAX as usize });
    }
    let mut words = Vec::new();
    let mut word = vec![0u8; n];
    fill_rec(layout, 1, &mut word, &mut words);
    words.sort_unstable();
    Ok(words
        .into_iter()
        .map(|w| StandardFilling::from_word_unchecked(layout.clone(), w))
        .collect())
}

fn fill_rec(layout: &ShapeLayout, next: usize, word: &mut [u8], out: &mut Vec<Vec<u8>>) {
    let n = word.len();
    if next > n {
        out.push(word.to_vec());
        return;
    }
    for p in 0..n {
        if word[p] != 0 {
            continue;
        }
        let ready = layout.left[p].is_none_or(|l| word[l] != 0) && layout.below[p].is_none_or(|b| word[b] != 0);
        if ready {
            word[p] = next as u8;
            fill_rec(layout, next + 1, word, out);
            word[p] = 0;
        }
    }
}

pub fn enumerate_standard(shape: &TupleShape, bound: usize) -> Result<Vec<StandardFilling>> {
    enumerate_standard_layout(&ShapeLayout::new(shape.clone()), bound)
}

/// Standard Young tableaux of a straight shape.
pub fn syt(p: &Partition) -> Vec<StandardFilling> {
    enumerate_standard_layout(&ShapeLayout::straight(p.clone()), usize::MAX).expect("no bound")
}

/// Number of standard Young tableaux of shape `p` via the hook length formula.
pub fn count_syt(p: &Partition) -> u128 {
    let conj = p.conjugate();
    let factorial: u128 = (1..=p.size() as u128).product();
    let hooks: u128 = p
        .cells()
        .iter()
        .map(|c| (p.part(c.row) - c.col + conj.part(c.col) - c.row + 1) as u128)
        .product();
    factorial / hooks
}

/// A semistandard filling: rows weakly increase, columns strictly increase.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemistandardFilling {
    layout: Arc<ShapeLayout>,
    entries: Vec<u32>,
}

impl SemistandardFilling {
    pub fn new(layout: Arc<ShapeLayout>, entries: Vec<u32>) -> Result<Self> {
        if entries.len() != layout.size() || entries.contains(&0) {
            return Err(Error::NotStandard(format!("bad entries {entries:?}")));
        }
        let ok = (0..entries.len()).all(|p| {
            layout.left[p].is_none_or(|l| entries[l] <= entries[p])
                && layout.below[p].is_none_or(|b| entries[b] < entries[p])
        });
        if !ok {
            return Err(Error::NotStandard(format!("{entries:?} is not semistandard")));
        }
        Ok(SemistandardFilling { layout, entries })
    }

    /// Entries in content reading order.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn shape(&self) -> &TupleShape {
        self.layout.shape()
    }

    /// Multiplicity of each value `1..=max`.
    pub fn weight(&self, max: usize) -> Vec<usize> {
        let mut w = vec![0; max];
        for &e in &self.entries {
            w[e as usize - 1] += 1;
        }
        w
    }
}

impl fmt::Debug for SemistandardFilling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SemistandardFilling({:?}, {:?})", self.layout.shape().to_string(), self.entries)
    }
}

/// All semistandard fillings with entries in `1..=max_entry`.
pub fn enumerate_semistandard(shape: &TupleShape, max_entry: usize) -> Vec<SemistandardFilling> {
    let layout = ShapeLayout::new(shape.clone());
    // fill bottom to top, left to right so both constraints point backwards
    let mut order: Vec<usize> = (0..layout.size()).collect();
    order.sort_by_key(|&p| {
        let c = &layout.cells[p];
        (c.component, c.cell.row, c.cell.col)
    });
    let mut entries = vec![0u32; layout.size()];
    let mut out = Vec::new();
    ssyt_rec(&layout, &order, 0, max_entry as u32, &mut entries, &mut out);
    out.into_iter()
        .map(|e| SemistandardFilling { layout: layout.clone(), entries: e })
        .collect()
}

fn ssyt_rec(layout: &ShapeLayout, order: &[usize], at: usize, max: u32, entries: &mut [u32], out: &mut Vec<Vec<u32>>) {
    if at == order.len() {
        out.push(entries.to_vec());
        return;
    }
    let p = order[at];
    let lo_row = layout.left[p].map_or(1, |l| entries[l]);
    let lo_col = layout.below[p].map_or(1, |b| entries[b] + 1);
    for v in lo_row.max(lo_col)..=max {
        entries[p] = v;
        ssyt_rec(layout, order, at + 1, max, entries, out);
    }
    entries[p] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn t(s: &str) -> StandardFilling {
        s.parse().unwrap()
    }

    #[test]
    fn reading_word_of_skew_tableau() {
        assert_eq!(t("1 2 5;3 4").reading_word(), &[3, 1, 4, 2, 5]);
        assert_eq!(t("1 2 3 4 5").reading_word(), &[1, 2, 3, 4, 5]);
    }

    #[test]
    fn reading_word_of_four_tuple() {
        let x = t("[2 6 10;7 11 | 1 12;8 |  | . 4;3 5;9]");
        assert_eq!(x.shape().to_string(), "((3,2),(2,1),(),(2,2,1)/(1))");
        assert_eq!(x.reading_word(), &[9, 7, 8, 3, 2, 11, 1, 5, 6, 12, 4, 10]);
        assert_eq!(x.to_string(), "[2 6 10;7 11 | 1 12;8 |  | . 4;3 5;9]");
    }

    #[test]
    fn signatures_of_shape_32() {
        let sigs: Vec<String> = ["1 2 5;3 4", "1 3 5;2 4", "1 3 4;2 5", "1 2 4;3 5", "1 2 3;4 5"]
            .iter()
            .map(|s| t(s).signature().to_string())
            .collect();
        assert_eq!(sigs, ["+-++", "-+-+", "-++-", "+-+-", "++-+"]);
        assert_eq!(t("1;2;3").signature().to_string(), "--");
        assert_eq!(t("[1 2 | 3;4]").signature().to_string(), "+--");
        assert_eq!(t("[1 2 | 3;4]").reading_word(), &[4, 1, 3, 2]);
    }

    #[test]
    fn super_and_substandard() {
        assert_eq!(superstandard(&p("4,3,2")).to_string(), "1 2 3 4;5 6 7;8 9");
        assert_eq!(superstandard(&p("3,2")).signature().to_string(), "++-+");
        assert_eq!(superstandard(&p("5")).to_string(), "1 2 3 4 5");
        assert_eq!(substandard(&p("4,3,2")).to_string(), "1 4 7 9;2 5 8;3 6");
        assert_eq!(substandard(&p("4")).to_string(), "1 2 3 4");
        assert_eq!(substandard(&p("1,1,1")).to_string(), "1;2;3");
    }

    #[test]
    fn enumeration_counts() {
        let count = |s: &str| enumerate_standard(&s.parse().unwrap(), DEFAULT_SIZE_BOUND).unwrap().len();
        assert_eq!(count("3,2"), 5);
        assert_eq!(count("6"), 1);
        assert_eq!(count("((2),(1,1))"), 6);
        for n in 3..=9 {
            assert_eq!(count(&format!("{},1", n - 1)), n - 1);
        }
        for lam in Partition::all_up_to(8) {
            assert_eq!(syt(&lam).len() as u128, count_syt(&lam), "{lam}");
        }
    }

    #[test]
    fn enumeration_is_sorted_and_distinct() {
        let all = enumerate_standard(&"((2,1),(1),(1,1))".parse().unwrap(), 14).unwrap();
        for w in all.windows(2) {
            assert!(w[0].reading_word() < w[1].reading_word());
        }
    }

    #[test]
    fn enumeration_respects_bound() {
        let shape: TupleShape = "5,5,5".parse().unwrap();
        assert!(matches!(enumerate_standard(&shape, DEFAULT_SIZE_BOUND), Err(Error::SizeBound { size: 15, .. })));
    }

    #[test]
    fn semistandard_counts() {
        let count = |s: &str, m| enumerate_semistandard(&s.parse().unwrap(), m).len();
        assert_eq!(count("1,1", 2), 1);
        assert_eq!(count("2,1", 2), 2);
        assert_eq!(count("2", 3), 6);
        let weights: Vec<Vec<usize>> =
            enumerate_semistandard(&"2,1".parse().unwrap(), 2).iter().map(|f| f.weight(2)).collect();
        assert!(weights.contains(&vec![2, 1]) && weights.contains(&vec![1, 2]));
    }

    #[test]
    fn signature_from_row_reading_word_agrees() {
        for lam in Partition::all_up_to(8) {
            for f in syt(&lam) {
                assert_eq!(Signature::of_word(&f.row_reading_word()), f.signature(), "{f}");
            }
        }
    }

    #[test]
    fn superstandard_is_the_unique_dominance_maximum() {
        use crate::shapes::{dominance, Dominance};
        for lam in Partition::all_up_to(8) {
            if lam.is_empty() {
                continue;
            }
            let top = superstandard(&lam);
            assert_eq!(top.signature().composition(), lam.parts());
            for f in syt(&lam) {
                let alpha = f.signature().composition();
                let rel = dominance(&alpha, lam.parts()).unwrap();
                if f == top {
                    assert_eq!(rel, Dominance::Equal);
                } else {
                    assert_eq!(rel, Dominance::Dominated, "{f}");
                }
            }
        }
    }

    #[test]
    fn parse_rejects_non_standard() {
        assert!("2 1".parse::<StandardFilling>().is_err());
        assert!("1 2;1".parse::<StandardFilling>().is_err());
        assert!("1 3;2".parse::<StandardFilling>().is_ok());
        assert!("1 3;4".parse::<StandardFilling>().is_err());
    }

    #[test]
    fn signature_text_and_windows() {
        let s: Signature = "+-++-".parse().unwrap();
        assert_eq!(s.descents(), vec![2, 5]);
        assert_eq!(s.window(2, 4).to_string(), "-++");
        assert_eq!(s.truncate(3).to_string(), "+-+");
        assert_eq!(s.negate().to_string(), "-+--+");
        assert_eq!(s.composition(), vec![2, 3, 1]);
        assert!("+x".parse::<Signature>().is_err());
    }
}
