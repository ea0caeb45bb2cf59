//! Signed, colored graphs: vertices carry `{+1,-1}` signatures and each color
//! `i` in `2..n` is a matching.

mod axioms;
mod classify;
mod io;

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::ops::RangeInclusive;
use std::sync::{Arc, OnceLock, RwLock};

use crate::error::{Error, Result};
use crate::involutions::{standard_family, InvolutionFamily};
use crate::shapes::{Cell, Partition, SkewShape, TupleShape};
use crate::symfunc::{Coeff, QSymExpansion};
use crate::tableaux::{syt, ShapeLayout, Signature, StandardFilling};

pub use axioms::{axiom4_templates, check_axioms, AxiomReport, AxiomResult};
pub use classify::{classify, classify_component, classify_component_from, Classification};
pub use io::{from_json, to_dot, to_json};

/// Vertex indices are positions `0..len`; `ids` are the external names used
/// in JSON and reports.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedColoredGraph {
    n: usize,
    big_n: usize,
    ids: Vec<u64>,
    sigma: Vec<Signature>,
    partner: Vec<Vec<Option<u32>>>,
    stat: Option<Vec<u32>>,
    labels: Option<Vec<String>>,
}

impl SignedColoredGraph {
    /// `edges` maps a color to vertex index pairs.
    pub fn new(
        n: usize,
        big_n: usize,
        ids: Vec<u64>,
        sigma: Vec<Signature>,
        edges: &BTreeMap<usize, Vec<(usize, usize)>>,
        stat: Option<Vec<u32>>,
    ) -> Result<Self> {
        if big_n < n {
            return Err(Error::InvalidGraph(format!("N = {big_n} is smaller than n = {n}")));
        }
        let len = ids.len();
        if sigma.len() != len || stat.as_ref().is_some_and(|s| s.len() != len) {
            return Err(Error::InvalidGraph("per-vertex data has the wrong length".into()));
        }
        if ids.iter().collect::<HashSet<_>>().len() != len {
            return Err(Error::InvalidGraph("duplicate vertex id".into()));
        }
        if let Some((v, s)) = sigma.iter().enumerate().find(|(_, s)| s.len() != big_n.saturating_sub(1)) {
            return Err(Error::InvalidGraph(format!("vertex {} has signature {s} of length != N-1", ids[v])));
        }
        let colors = n.saturating_sub(2);
        let mut partner = vec![vec![None; len]; colors];
        for (&c, list) in edges {
            if c < 2 || c + 1 > n {
                return Err(Error::ColorOutOfRange { color: c, max: n.saturating_sub(1) });
            }
            let table = &mut partner[c - 2];
            for &(a, b) in list {
                if a >= len || b >= len {
                    return Err(Error::InvalidGraph(format!("edge ({a},{b}) of color {c} has a missing endpoint")));
                }
                if a == b {
                    return Err(Error::InvalidGraph(format!("loop at vertex {} in color {c}", ids[a])));
                }
                for v in [a, b] {
                    if table[v].is_some() {
                        return Err(Error::InvalidGraph(format!("vertex {} has two edges of color {c}", ids[v])));
                    }
                }
                table[a] = Some(b as u32);
                table[b] = Some(a as u32);
            }
        }
        Ok(SignedColoredGraph { n, big_n, ids, sigma, partner, stat, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.len());
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// The signature length plus one.
    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn id(&self, v: usize) -> u64 {
        self.ids[v]
    }

    pub fn ids(&self) -> &[u64] {
        &self.ids
    }

    pub fn index_of(&self, id: u64) -> Option<usize> {
        self.ids.iter().position(|&x| x == id)
    }

    pub fn sigma(&self, v: usize) -> Signature {
        self.sigma[v]
    }

    pub fn stat(&self, v: usize) -> u32 {
        self.stat.as_ref().map_or(0, |s| s[v])
    }

    pub fn stats(&self) -> Option<&[u32]> {
        self.stat.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn colors(&self) -> RangeInclusive<usize> {
        2..=self.n.saturating_sub(1)
    }

    /// The other end of the `color` edge at `v`.
    pub fn neighbor(&self, color: usize, v: usize) -> Option<usize> {
        self.partner.get(color.wrapping_sub(2))?.get(v)?.map(|u| u as usize)
    }

    pub fn has_edge(&self, color: usize, a: usize, b: usize) -> bool {
        self.neighbor(color, a) == Some(b)
    }

    /// Edges of one color as `(a, b)` with `a < b`, sorted.
    pub fn edges(&self, color: usize) -> Vec<(usize, usize)> {
        (0..self.len())
            .filter_map(|a| self.neighbor(color, a).filter(|&b| a < b).map(|b| (a, b)))
            .collect()
    }

    pub fn edge_map(&self) -> BTreeMap<usize, Vec<(usize, usize)>> {
        self.colors().map(|c| (c, self.edges(c))).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.colors().map(|c| self.edges(c).len()).sum()
    }

    /// Connected components under the colors in `colors`, each sorted, ordered by least vertex.
    pub fn components_in(&self, colors: RangeInclusive<usize>) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for s in 0..self.len() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for c in colors.clone() {
                    if let Some(u) = self.neighbor(c, v) {
                        if !seen[u] {
                            seen[u] = true;
                            comp.push(u);
                            queue.push_back(u);
                        }
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_in(self.colors())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// The subgraph on `vertices`, which must be closed under every color.
    pub fn induced(&self, vertices: &[usize]) -> Result<SignedColoredGraph> {
        let local: HashMap<usize, usize> = vertices.iter().enumerate().map(|(a, &v)| (v, a)).collect();
        let mut edges = BTreeMap::new();
        for c in self.colors() {
            let mut list = Vec::new();
            for (a, &v) in vertices.iter().enumerate() {
                if let Some(u) = self.neighbor(c, v) {
                    let b = *local
                        .get(&u)
                        .ok_or_else(|| Error::InvalidGraph(format!("vertex set is not closed under color {c}")))?;
                    if a < b {
                        list.push((a, b));
                    }
                }
            }
            edges.insert(c, list);
        }
        let g = SignedColoredGraph::new(
            self.n,
            self.big_n,
            vertices.iter().map(|&v| self.ids[v]).collect(),
            vertices.iter().map(|&v| self.sigma[v]).collect(),
            &edges,
            self.stat.as_ref().map(|s| vertices.iter().map(|&v| s[v]).collect()),
        )?;
        Ok(match &self.labels {
            Some(l) => g.with_labels(vertices.iter().map(|&v| l[v].clone()).collect()),
            None => g,
        })
    }

    /// The `(m, M)`-restriction: signatures cut to length `M - 1`, colors below `m`.
    pub fn restrict(&self, m: usize, big_m: usize) -> Result<SignedColoredGraph> {
        if m > self.n || big_m > self.big_n || m > big_m || big_m == 0 {
            return Err(Error::Precondition(format!(
                "cannot restrict type ({},{}) to ({m},{big_m})",
                self.n, self.big_n
            )));
        }
        let edges = (2..m).map(|c| (c, self.edges(c))).collect();
        let g = SignedColoredGraph::new(
            m,
            big_m,
            self.ids.clone(),
            self.sigma.iter().map(|s| s.truncate(big_m - 1)).collect(),
            &edges,
            self.stat.clone(),
        )?;
        Ok(match &self.labels {
            Some(l) => g.with_labels(l.clone()),
            None => g,
        })
    }

    /// `sum_v q^stat(v) Q_sigma(v)`.
    pub fn generating_function<C: Coeff>(&self) -> QSymExpansion<C> {
        QSymExpansion::from_signatures(self.big_n, (0..self.len()).map(|v| (self.sigma[v], self.stat(v))))
    }

    /// Copy with ids renumbered `0..len`.
    pub fn renumbered(&self) -> SignedColoredGraph {
        let mut g = self.clone();
        g.ids = (0..self.len() as u64).collect();
        g
    }
}

/// `sum_v q^stat(v) Q_sigma(v)`.
pub fn generating_function<C: Coeff>(g: &SignedColoredGraph) -> QSymExpansion<C> {
    g.generating_function()
}

/// Signature of length `big_n - 1` agreeing with `s` and `+` beyond.
fn extend(s: Signature, big_n: usize) -> Signature {
    Signature::from_descents(big_n.saturating_sub(1), s.descents()).expect("descents fit")
}

/// Non-fixed pairs of each involution become edges.
pub fn build_graph_from_family<E>(fam: &InvolutionFamily<E>, big_n: usize) -> Result<SignedColoredGraph> {
    if big_n < fam.n() {
        return Err(Error::Precondition(format!("N = {big_n} is smaller than n = {}", fam.n())));
    }
    let mut edges = BTreeMap::new();
    for c in fam.colors() {
        let list = (0..fam.len())
            .filter_map(|x| {
                let y = fam.phi(c, x);
                (x < y).then_some((x, y))
            })
            .collect();
        edges.insert(c, list);
    }
    SignedColoredGraph::new(
        fam.n(),
        big_n,
        (0..fam.len() as u64).collect(),
        (0..fam.len()).map(|x| extend(fam.descents(x), big_n)).collect(),
        &edges,
        fam.has_stat().then(|| (0..fam.len()).map(|x| fam.stat(x)).collect()),
    )
}

type StandardEntry = Arc<(SignedColoredGraph, Vec<StandardFilling>)>;

fn standard_cached(p: &Partition) -> StandardEntry {
    static CACHE: OnceLock<RwLock<HashMap<Partition, StandardEntry>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(hit) = cache.read().unwrap().get(p) {
        return hit.clone();
    }
    let shape = TupleShape::single(SkewShape::straight(p.clone()));
    let fam = standard_family(&shape, usize::MAX).expect("straight shapes always enumerate");
    let g = build_graph_from_family(&fam, p.size().max(1))
        .expect("standard family")
        .with_labels(fam.elements().iter().map(|t| t.to_string()).collect());
    let entry = Arc::new((g, fam.elements().to_vec()));
    cache.write().unwrap().entry(p.clone()).or_insert(entry).clone()
}

/// `G_lambda`: vertices are the standard Young tableaux of `p` in reading word
/// order, edges are elementary dual equivalences.
pub fn standard_graph(p: &Partition) -> SignedColoredGraph {
    standard_cached(p).0.clone()
}

/// `standard_graph` together with the tableau at each vertex.
pub fn standard_graph_with_tableaux(p: &Partition) -> (SignedColoredGraph, Vec<StandardFilling>) {
    let e = standard_cached(p);
    (e.0.clone(), e.1.clone())
}

pub(crate) fn standard_shared(p: &Partition) -> StandardEntry {
    standard_cached(p)
}

/// A filling of `rho/lambda` with the entries `n+1..=N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Augmentation {
    pub shape: SkewShape,
    pub entries: Vec<(Cell, u32)>,
}

impl Augmentation {
    /// Text form of the skew filling, e.g. `". .;.;4"`.
    pub fn parse(s: &str) -> Result<Self> {
        let (shape, entries) = crate::tableaux::parse_skew_entries(s).map_err(|e| Error::Augmentation(e.to_string()))?;
        Ok(Augmentation { shape, entries })
    }
}

/// `G_{lambda,A}` on the standard tableaux of `rho` that restrict to `A` on `rho/lambda`.
pub fn augmented_graph(p: &Partition, a: &Augmentation) -> Result<SignedColoredGraph> {
    let n = p.size();
    if a.shape.inner() != p {
        return Err(Error::Augmentation(format!("inner shape {} is not {p}", a.shape.inner())));
    }
    let big_n = a.shape.outer().size();
    let mut values: Vec<u32> = a.entries.iter().map(|&(_, v)| v).collect();
    values.sort_unstable();
    if values != ((n as u32 + 1)..=(big_n as u32)).collect::<Vec<_>>() {
        return Err(Error::Augmentation(format!("entries must be {}..={big_n}", n + 1)));
    }
    let layout = ShapeLayout::straight(a.shape.outer().clone());
    let fixed: HashMap<Cell, u32> = a.entries.iter().copied().collect();
    let mut tableaux = Vec::new();
    for t in syt(p) {
        let word: Vec<u8> = layout
            .cells()
            .iter()
            .map(|c| fixed.get(&c.cell).map_or_else(|| t.entry(0, c.cell).unwrap(), |&v| v as u8))
            .collect();
        let full = StandardFilling::from_word(layout.clone(), word)
            .map_err(|_| Error::Augmentation("augmented filling is not standard".into()))?;
        tableaux.push((t, full));
    }
    let (small, _) = standard_graph_with_tableaux(p);
    let g = SignedColoredGraph::new(
        n,
        big_n,
        small.ids.clone(),
        tableaux.iter().map(|(_, f)| f.signature()).collect(),
        &small.edge_map(),
        None,
    )?;
    Ok(g.with_labels(tableaux.iter().map(|(_, f)| f.to_string()).collect()))
}

/// Whether `map` (source vertex -> target vertex) preserves signatures in
/// every coordinate and sends each colored edge to an edge of that color.
pub fn is_morphism(source: &SignedColoredGraph, target: &SignedColoredGraph, map: &[usize]) -> bool {
    if source.n != target.n || source.big_n != target.big_n || map.len() != source.len() {
        return false;
    }
    if map.iter().any(|&t| t >= target.len()) {
        return false;
    }
    (0..source.len()).all(|v| source.sigma[v] == target.sigma[map[v]])
        && source
            .colors()
            .all(|c| source.edges(c).into_iter().all(|(a, b)| target.has_edge(c, map[a], map[b])))
}

/// Extends `anchor -> image` along colored edges, shifting each color by
/// `shift` (source color `c` matches target color `c - shift`). Returns the
/// map on the component of `anchor` if the partner structure agrees.
pub(crate) fn propagate(
    a: &SignedColoredGraph,
    b: &SignedColoredGraph,
    anchor: usize,
    image: usize,
    colors: RangeInclusive<usize>,
    shift: usize,
    check_sigma: bool,
) -> Option<HashMap<usize, usize>> {
    let mut map = HashMap::from([(anchor, image)]);
    let mut used = HashSet::from([image]);
    let mut queue = VecDeque::from([anchor]);
    while let Some(v) = queue.pop_front() {
        let t = map[&v];
        if check_sigma && a.sigma[v] != b.sigma[t] {
            return None;
        }
        for c in colors.clone() {
            match (a.neighbor(c, v), b.neighbor(c - shift, t)) {
                (None, None) => {}
                (Some(u), Some(s)) => match map.get(&u) {
                    Some(&known) if known != s => return None,
                    Some(_) => {}
                    None => {
                        if !used.insert(s) {
                            return None;
                        }
                        map.insert(u, s);
                        queue.push_back(u);
                    }
                },
                _ => return None,
            }
        }
    }
    Some(map)
}

/// All isomorphisms between two connected graphs of the same type.
pub fn isomorphisms(a: &SignedColoredGraph, b: &SignedColoredGraph) -> Vec<Vec<usize>> {
    if a.n != b.n || a.big_n != b.big_n || a.len() != b.len() || a.is_empty() || !a.is_connected() {
        return Vec::new();
    }
    (0..b.len())
        .filter_map(|t| propagate(a, b, 0, t, a.colors(), 0, true))
        .filter(|m| m.len() == a.len())
        .map(|m| (0..a.len()).map(|v| m[&v]).collect())
        .collect()
}

pub fn automorphisms(g: &SignedColoredGraph) -> Vec<Vec<usize>> {
    isomorphisms(g, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sigs(g: &SignedColoredGraph) -> Vec<String> {
        (0..g.len()).map(|v| g.sigma(v).to_string()).collect()
    }

    /// Vertex index of the tableau with this text.
    fn at(g: &SignedColoredGraph, t: &str) -> usize {
        (0..g.len()).find(|&v| g.label(v) == Some(t)).unwrap()
    }

    #[test]
    fn g32_matches_drawing() {
        let g = standard_graph(&p("3,2"));
        assert_eq!(g.len(), 5);
        let mut s = sigs(&g);
        s.sort();
        assert_eq!(s, ["++-+", "+-++", "+-+-", "-++-", "-+-+"]);
        let a = at(&g, "1 2 5;3 4");
        let b = at(&g, "1 3 5;2 4");
        let c = at(&g, "1 3 4;2 5");
        let d = at(&g, "1 2 4;3 5");
        let e = at(&g, "1 2 3;4 5");
        assert!(g.has_edge(2, a, b) && g.has_edge(3, a, b));
        assert!(g.has_edge(4, b, c));
        assert!(g.has_edge(2, c, d));
        assert!(g.has_edge(3, d, e) && g.has_edge(4, d, e));
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn trivial_graphs() {
        let g = standard_graph(&p("5"));
        assert_eq!((g.len(), g.edge_count()), (1, 0));
        let h = standard_graph(&p("2,1"));
        assert_eq!((h.len(), h.edge_count()), (2, 1));
    }

    #[test]
    fn matching_is_enforced() {
        let s: Signature = "+-".parse().unwrap();
        let edges = BTreeMap::from([(2, vec![(0, 1), (0, 2)])]);
        let r = SignedColoredGraph::new(3, 3, vec![0, 1, 2], vec![s; 3], &edges, None);
        assert!(matches!(r, Err(Error::InvalidGraph(_))));
    }

    #[test]
    fn restriction() {
        let g = standard_graph(&p("3,2"));
        assert_eq!(g.restrict(5, 5).unwrap(), g);
        let r = g.restrict(4, 5).unwrap();
        let mut sizes: Vec<usize> = r.components().iter().map(Vec::len).collect();
        sizes.sort();
        assert_eq!(sizes, [2, 3]);
        assert_eq!(g.restrict(2, 5).unwrap().edge_count(), 0);
        assert!(g.restrict(6, 5).is_err());
        let twice = g.restrict(4, 4).unwrap().restrict(3, 3).unwrap();
        assert_eq!(twice, g.restrict(3, 3).unwrap());
    }

    #[test]
    fn augmented_21() {
        let a = Augmentation::parse(". .;.;4").unwrap();
        let g = augmented_graph(&p("2,1"), &a).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g.sigma(0).len(), 3);
        let r = g.restrict(3, 3).unwrap();
        let s = standard_graph(&p("2,1"));
        assert_eq!(r.edge_map(), s.edge_map());
        assert_eq!(sigs(&r), sigs(&s));
        assert!(augmented_graph(&p("2,1"), &Augmentation::parse(". .;.;5").unwrap()).is_err());
        assert!(augmented_graph(&p("2"), &a).is_err());
    }

    #[test]
    fn standard_graphs_are_rigid() {
        for lam in Partition::all_up_to(6) {
            if lam.is_empty() {
                continue;
            }
            let g = standard_graph(&lam);
            let autos = automorphisms(&g);
            assert_eq!(autos, vec![(0..g.len()).collect::<Vec<_>>()], "{lam}");
            for mu in Partition::all(lam.size()) {
                if mu != lam {
                    assert!(isomorphisms(&g, &standard_graph(&mu)).is_empty());
                }
            }
        }
    }

    #[test]
    fn morphism_rejects_sign_change() {
        let g = standard_graph(&p("2,1"));
        assert!(is_morphism(&g, &g, &[0, 1]));
        assert!(!is_morphism(&g, &g, &[1, 0]));
    }
}
