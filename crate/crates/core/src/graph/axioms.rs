use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::sync::OnceLock;

use crate::shapes::Partition;

use super::{propagate, standard_graph, SignedColoredGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomResult {
    pub axiom: u8,
    pub passed: bool,
    /// Color at which the first failure was found.
    pub color: Option<usize>,
    pub witness: Option<String>,
}

impl AxiomResult {
    fn pass(axiom: u8) -> Self {
        AxiomResult { axiom, passed: true, color: None, witness: None }
    }

    fn fail(axiom: u8, color: usize, witness: String) -> Self {
        AxiomResult { axiom, passed: false, color: Some(color), witness: Some(witness) }
    }
}

impl fmt::Display for AxiomResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "axiom{}: pass", self.axiom)
        } else {
            write!(f, "axiom{}: fail at color {}", self.axiom, self.color.unwrap_or(0))?;
            if let Some(w) = &self.witness {
                write!(f, " ({w})")?;
            }
            Ok(())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub results: Vec<AxiomResult>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }

    /// Result for axiom `k` in `1..=6`.
    pub fn axiom(&self, k: u8) -> &AxiomResult {
        &self.results[k as usize - 1]
    }

    pub fn passed_through(&self, k: u8) -> bool {
        self.results[..k as usize].iter().all(|r| r.passed)
    }
}

impl fmt::Display for AxiomReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.results.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{r}")?;
        }
        Ok(())
    }
}

/// Runs all six checks; each reports its first witness.
pub fn check_axioms(g: &SignedColoredGraph) -> AxiomReport {
    AxiomReport {
        results: vec![axiom1(g), axiom2(g), axiom3(g), axiom4(g), axiom5(g), axiom6(g)],
    }
}

fn flips(g: &SignedColoredGraph, a: usize, b: usize, h: usize) -> bool {
    g.sigma(a).is_minus(h) != g.sigma(b).is_minus(h)
}

fn name(g: &SignedColoredGraph, v: usize) -> String {
    g.id(v).to_string()
}

fn axiom1(g: &SignedColoredGraph) -> AxiomResult {
    for i in g.colors() {
        for v in 0..g.len() {
            let s = g.sigma(v);
            let wants = s.is_minus(i - 1) != s.is_minus(i);
            if wants != g.neighbor(i, v).is_some() {
                let what = if wants { "missing" } else { "unexpected" };
                return AxiomResult::fail(1, i, format!("{what} {i}-edge at vertex {}", name(g, v)));
            }
        }
    }
    AxiomResult::pass(1)
}

fn axiom2(g: &SignedColoredGraph) -> AxiomResult {
    let len = g.big_n().saturating_sub(1);
    for i in g.colors() {
        for (w, x) in g.edges(i) {
            let bad = [i - 1, i].into_iter().find(|&j| !flips(g, w, x, j)).or_else(|| {
                (1..=len).filter(|&h| h + 2 < i || h > i + 1).find(|&h| flips(g, w, x, h))
            });
            if let Some(h) = bad {
                return AxiomResult::fail(2, i, format!("edge {}-{} at coordinate {h}", name(g, w), name(g, x)));
            }
        }
    }
    AxiomResult::pass(2)
}

fn axiom3(g: &SignedColoredGraph) -> AxiomResult {
    let len = g.big_n().saturating_sub(1);
    for i in g.colors() {
        for (a, b) in g.edges(i) {
            for (w, x) in [(a, b), (b, a)] {
                let s = g.sigma(w);
                let low = i >= 3 && flips(g, w, x, i - 2) && s.is_minus(i - 2) == s.is_minus(i - 1);
                let high = i < len && flips(g, w, x, i + 1) && s.is_minus(i + 1) == s.is_minus(i);
                if low || high {
                    let h = if low { i - 2 } else { i + 1 };
                    return AxiomResult::fail(3, i, format!("edge {}-{} at coordinate {h}", name(g, w), name(g, x)));
                }
            }
        }
    }
    AxiomResult::pass(3)
}

/// Connected components of standard graphs on 4 and 5 cells, colors starting
/// at 2, up to colored isomorphism.
pub fn axiom4_templates() -> &'static (Vec<SignedColoredGraph>, Vec<SignedColoredGraph>) {
    static TEMPLATES: OnceLock<(Vec<SignedColoredGraph>, Vec<SignedColoredGraph>)> = OnceLock::new();
    TEMPLATES.get_or_init(|| (templates_from(4), templates_from(5)))
}

fn templates_from(n: usize) -> Vec<SignedColoredGraph> {
    let mut out: Vec<SignedColoredGraph> = Vec::new();
    for mu in Partition::all(n) {
        let g = standard_graph(&mu);
        for comp in g.components() {
            let c = g.induced(&comp).expect("components are closed");
            if !out.iter().any(|t| shape_match(&c, &c.colors(), t, 0, 0)) {
                out.push(c);
            }
        }
    }
    out
}

/// Whether the component of `g` containing `anchor` under `colors` is
/// isomorphic to the template after shifting colors down by `shift`.
fn shape_match(
    g: &SignedColoredGraph,
    colors: &std::ops::RangeInclusive<usize>,
    template: &SignedColoredGraph,
    anchor: usize,
    shift: usize,
) -> bool {
    (0..template.len()).any(|t| {
        propagate(g, template, anchor, t, colors.clone(), shift, false).is_some_and(|m| m.len() == template.len())
    })
}

fn axiom4(g: &SignedColoredGraph) -> AxiomResult {
    let (two, three) = axiom4_templates();
    for (width, templates) in [(2, two), (3, three)] {
        for i in (width + 1)..g.n() {
            let colors = (i + 1 - width)..=i;
            let shift = i + 1 - width - 2;
            for comp in g.components_in(colors.clone()) {
                let ok = templates
                    .iter()
                    .filter(|t| t.len() == comp.len())
                    .any(|t| shape_match(g, &colors, t, comp[0], shift));
                if !ok {
                    return AxiomResult::fail(
                        4,
                        i,
                        format!("component of {} vertices at {} under colors {}..{i}", comp.len(), name(g, comp[0]), i + 1 - width),
                    );
                }
            }
        }
    }
    AxiomResult::pass(4)
}

fn axiom5(g: &SignedColoredGraph) -> AxiomResult {
    for i in g.colors() {
        for j in g.colors().filter(|&j| j.abs_diff(i) >= 3) {
            for (a, b) in g.edges(i) {
                for (w, x) in [(a, b), (b, a)] {
                    let Some(y) = g.neighbor(j, x) else { continue };
                    let closes = g.neighbor(j, w).is_some_and(|v| g.neighbor(i, v) == Some(y));
                    if !closes {
                        return AxiomResult::fail(
                            5,
                            i.max(j),
                            format!("no square on {}-{}-{} (colors {i},{j})", name(g, w), name(g, x), name(g, y)),
                        );
                    }
                }
            }
        }
    }
    AxiomResult::pass(5)
}

/// Two vertices of a component of `E_2..E_i` are joined by a path with at
/// most one `E_i` edge exactly when their `E_2..E_{i-1}` components are equal
/// or joined by a single `E_i` edge, so the quotient must be complete.
fn axiom6(g: &SignedColoredGraph) -> AxiomResult {
    for i in 3..g.n() {
        let mut block = vec![0usize; g.len()];
        for (b, comp) in g.components_in(2..=i - 1).into_iter().enumerate() {
            for v in comp {
                block[v] = b;
            }
        }
        for comp in g.components_in(2..=i) {
            let blocks: BTreeSet<usize> = comp.iter().map(|&v| block[v]).collect();
            let adjacent: HashSet<(usize, usize)> = comp
                .iter()
                .filter_map(|&v| g.neighbor(i, v).map(|u| (block[v], block[u])))
                .filter(|(a, b)| a != b)
                .collect();
            for &a in &blocks {
                for &b in blocks.range(a + 1..) {
                    if !adjacent.contains(&(a, b)) {
                        let rep = |x: usize| comp.iter().copied().find(|&v| block[v] == x).unwrap();
                        return AxiomResult::fail(
                            6,
                            i,
                            format!("vertices {} and {} need two {i}-edges", name(g, rep(a)), name(g, rep(b))),
                        );
                    }
                }
            }
        }
    }
    AxiomResult::pass(6)
}
