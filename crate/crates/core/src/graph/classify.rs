use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::shapes::{dominance, Dominance, Partition};
use crate::tableaux::superstandard;

use super::{standard_shared, SignedColoredGraph};

/// A component of a graph together with a morphism onto `G_lambda`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub lambda: Partition,
    /// Vertices of the component, ascending.
    pub component: Vec<usize>,
    /// Image in `standard_graph(lambda)` of each vertex of `component`.
    pub map: Vec<usize>,
    /// Size of every fiber of the map.
    pub multiplicity: usize,
}

impl Classification {
    pub fn is_isomorphism(&self) -> bool {
        self.multiplicity == 1
    }
}

fn alpha(g: &SignedColoredGraph, v: usize) -> Vec<usize> {
    if g.n() == 0 {
        return Vec::new();
    }
    g.sigma(v).truncate(g.n() - 1).composition()
}

/// Finds the unique dominance-maximal descent composition among the vertices
/// of `component` and anchors the morphism at the least vertex carrying it.
pub fn classify_component(g: &SignedColoredGraph, component: &[usize]) -> Result<Classification> {
    let Some(&first) = component.first() else {
        return Err(Error::Classification("empty component".into()));
    };
    let mut best = alpha(g, first);
    let mut anchor = first;
    for &v in &component[1..] {
        let a = alpha(g, v);
        if dominance(&a, &best)? == Dominance::Dominates {
            best = a;
            anchor = v;
        }
    }
    for &v in component {
        let a = alpha(g, v);
        if !matches!(dominance(&best, &a)?, Dominance::Dominates | Dominance::Equal) {
            return Err(Error::Classification(format!(
                "no descent composition dominates the component of vertex {}",
                g.id(first)
            )));
        }
    }
    classify_component_from(g, component, anchor)
}

/// Builds the morphism sending `anchor` to the superstandard tableau of the
/// shape given by its descent composition.
pub fn classify_component_from(g: &SignedColoredGraph, component: &[usize], anchor: usize) -> Result<Classification> {
    let n = g.n();
    let lambda = Partition::new(alpha(g, anchor)).map_err(|_| {
        Error::Classification(format!("descent composition of vertex {} is not a partition", g.id(anchor)))
    })?;
    let entry = standard_shared(&lambda);
    let (target, tableaux) = (&entry.0, &entry.1);
    let start = superstandard(&lambda);
    let image = tableaux.iter().position(|t| *t == start).expect("superstandard tableau is standard");

    let local = |v: usize| component.binary_search(&v).ok();
    let mut map = vec![usize::MAX; component.len()];
    let Some(a) = local(anchor) else {
        return Err(Error::Classification("anchor is outside the component".into()));
    };
    map[a] = image;
    let mut queue = VecDeque::from([anchor]);
    let trunc = n.saturating_sub(1);
    while let Some(v) = queue.pop_front() {
        let t = map[local(v).unwrap()];
        if g.sigma(v).truncate(trunc) != target.sigma(t) {
            return Err(Error::Classification(format!("signature mismatch at vertex {}", g.id(v))));
        }
        for c in g.colors() {
            match (g.neighbor(c, v), target.neighbor(c, t)) {
                (None, None) => {}
                (Some(u), Some(s)) => {
                    let Some(lu) = local(u) else {
                        return Err(Error::Classification("component is not closed".into()));
                    };
                    if map[lu] == usize::MAX {
                        map[lu] = s;
                        queue.push_back(u);
                    } else if map[lu] != s {
                        return Err(Error::Classification(format!(
                            "{c}-edges at vertex {} do not map consistently",
                            g.id(u)
                        )));
                    }
                }
                _ => {
                    return Err(Error::Classification(format!(
                        "{c}-edge at vertex {} has no counterpart in the standard graph of {lambda}",
                        g.id(v)
                    )))
                }
            }
        }
    }
    if map.contains(&usize::MAX) {
        return Err(Error::Classification("component is not connected".into()));
    }
    let mut fibers = vec![0usize; target.len()];
    for &t in &map {
        fibers[t] += 1;
    }
    let m = fibers[0];
    if fibers.iter().any(|&f| f != m) {
        return Err(Error::Classification(format!("fibers over the standard graph of {lambda} have unequal sizes")));
    }
    Ok(Classification { lambda, component: component.to_vec(), map, multiplicity: m })
}

/// Classifies every component. With `require_iso`, a component that only
/// covers its standard graph is an error.
pub fn classify(g: &SignedColoredGraph, require_iso: bool) -> Result<Vec<Classification>> {
    let out: Vec<Classification> =
        g.components().par_iter().map(|c| classify_component(g, c)).collect::<Result<_>>()?;
    if require_iso {
        if let Some(c) = out.iter().find(|c| c.multiplicity > 1) {
            return Err(Error::Classification(format!(
                "component of vertex {} is a {}-fold cover of the standard graph of {}",
                g.id(c.component[0]),
                c.multiplicity,
                c.lambda
            )));
        }
    }
    Ok(out)
}
