//! Crystal graphs: construction, components, axiom checks, normality and
//! export.

mod axioms;
mod export;
mod normal;

use std::collections::{HashMap, VecDeque};

use crate::error::CrystalError;
use crate::word::{Crystal, Direction, Label, Mode, Weight};

pub use axioms::{verify_axioms, Axiom, Violation};
pub use normal::{highest_weights, is_normal_component, HighestKind};

#[derive(Clone, Debug)]
pub struct Vertex<E> {
    pub elem: E,
    pub key: String,
    pub weight: Weight,
}

/// An edge `source → target` meaning `f_label(source) = target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Edge {
    pub source: usize,
    pub label: Label,
    pub target: usize,
}

/// How to treat operator results outside the supplied elements.
pub enum Closure<'a, E> {
    /// The elements must be closed under every operator.
    Closed,
    /// Keep applying operators, admitting new elements accepted by `keep`;
    /// edges into rejected elements are dropped and counted.
    Saturate { keep: &'a dyn Fn(&E) -> bool, max_vertices: usize },
}

#[derive(Clone, Debug)]
pub struct CrystalGraph<E> {
    pub n: usize,
    pub mode: Mode,
    /// Sorted by key.
    pub vertices: Vec<Vertex<E>>,
    /// Sorted.
    pub edges: Vec<Edge>,
    /// Edges dropped by saturation because their endpoint was rejected.
    pub truncated: usize,
    index: HashMap<E, usize>,
}

impl<E: Clone + Eq + std::hash::Hash> CrystalGraph<E> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn index_of(&self, e: &E) -> Option<usize> {
        self.index.get(e).copied()
    }

    pub fn elem(&self, v: usize) -> &E {
        &self.vertices[v].elem
    }

    /// Weak components using only edges whose label passes `keep`. Each
    /// component is sorted; components are ordered by their first vertex.
    pub fn components_by(&self, keep: impl Fn(Label) -> bool) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in self.edges.iter().filter(|e| keep(e.label)) {
            let (a, b) = (find(&mut parent, e.source), find(&mut parent, e.target));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for v in 0..self.len() {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// Weak components of the full graph.
    pub fn components(&self) -> Vec<Vec<usize>> {
        self.components_by(|_| true)
    }

    /// Components under the `i`-edges only, ignoring the queer edges.
    pub fn gl_components(&self) -> Vec<Vec<usize>> {
        self.components_by(|l| l != Label::Bar)
    }
}

/// Builds the crystal graph on `elements` (plus whatever saturation adds).
pub fn build_graph<C: Crystal>(
    c: &C,
    elements: impl IntoIterator<Item = C::Elem>,
    closure: Closure<'_, C::Elem>,
) -> Result<CrystalGraph<C::Elem>, CrystalError> {
    let labels = c.labels();
    let mut elems: Vec<C::Elem> = Vec::new();
    let mut seen: HashMap<C::Elem, usize> = HashMap::new();
    for e in elements {
        if !seen.contains_key(&e) {
            seen.insert(e.clone(), elems.len());
            elems.push(e);
        }
    }
    let mut raw_edges = Vec::new();
    let mut truncated = 0;
    let mut queue: VecDeque<usize> = (0..elems.len()).collect();
    while let Some(v) = queue.pop_front() {
        let b = elems[v].clone();
        for &label in &labels {
            for dir in [Direction::Lower, Direction::Raise] {
                let Some(next) = c.apply(&b, label, dir) else { continue };
                let w = match (seen.get(&next), &closure) {
                    (Some(&w), _) => w,
                    (None, Closure::Closed) => {
                        return Err(CrystalError::NotClosed(format!(
                            "{dir:?} {label} sends {} to {}",
                            c.key(&b),
                            c.key(&next)
                        )));
                    }
                    (None, Closure::Saturate { keep, max_vertices }) => {
                        if !keep(&next) {
                            if dir == Direction::Lower {
                                truncated += 1;
                            }
                            continue;
                        }
                        if elems.len() >= *max_vertices {
                            return Err(CrystalError::TooManyVertices(*max_vertices));
                        }
                        seen.insert(next.clone(), elems.len());
                        elems.push(next);
                        queue.push_back(elems.len() - 1);
                        elems.len() - 1
                    }
                };
                if dir == Direction::Lower {
                    raw_edges.push((v, label, w));
                }
            }
        }
    }

    let mut order: Vec<(String, usize)> = elems.iter().enumerate().map(|(k, e)| (c.key(e), k)).collect();
    order.sort();
    let mut rank = vec![0; elems.len()];
    for (pos, (_, k)) in order.iter().enumerate() {
        rank[*k] = pos;
    }
    let mut vertices: Vec<Option<Vertex<C::Elem>>> = vec![None; elems.len()];
    for (k, e) in elems.into_iter().enumerate() {
        let weight = c.weight(&e);
        vertices[rank[k]] = Some(Vertex { key: order[rank[k]].0.clone(), elem: e, weight });
    }
    let vertices: Vec<Vertex<C::Elem>> = vertices.into_iter().map(|v| v.expect("every slot filled")).collect();
    let mut edges: Vec<Edge> = raw_edges
        .into_iter()
        .map(|(s, label, t)| Edge { source: rank[s], label, target: rank[t] })
        .collect();
    edges.sort();
    let index = vertices.iter().enumerate().map(|(k, v)| (v.elem.clone(), k)).collect();
    Ok(CrystalGraph { n: c.rank(), mode: c.mode(), vertices, edges, truncated, index })
}
