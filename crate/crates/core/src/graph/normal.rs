use std::collections::{HashMap, HashSet, VecDeque};

use super::CrystalGraph;
use crate::tableau::StrictPartition;
use crate::word::{composite_queer_op, revrow, Crystal, Direction, Label, Mode, Word, WordCrystal};
use crate::sqrt::t_highest;

/// Which raising operators must vanish at a highest weight element.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HighestKind {
    /// Every `e_i`, `i ∈ [n−1]`.
    Gl,
    /// Every `e_i` and every composite `e_ī`.
    Queer,
    /// Every `e′_i` and every composite `e′_ī`.
    SqrtQueer,
}

fn is_highest<C: Crystal>(c: &C, b: &C::Elem, kind: HighestKind) -> bool {
    let n = c.rank();
    if (1..n).any(|i| c.raise(b, Label::Index(i)).is_some()) {
        return false;
    }
    match kind {
        HighestKind::Gl => true,
        HighestKind::Queer | HighestKind::SqrtQueer => {
            c.raise(b, Label::Bar).is_none() && (2..n).all(|i| composite_queer_op(c, b, i, Direction::Raise).is_none())
        }
    }
}

/// Vertices of `g` at which every raising operator of `kind` vanishes, in
/// vertex order.
pub fn highest_weights<C: Crystal>(c: &C, g: &CrystalGraph<C::Elem>, kind: HighestKind) -> Vec<usize> {
    (0..g.len()).filter(|&v| is_highest(c, g.elem(v), kind)).collect()
}

/// Whether the component `comp` of `g` is isomorphic to a full subcrystal of
/// some `B_n^{⊗m}`, with `i`-edges only (`Gl`) or with the queer edges too
/// (`Queer`).
///
/// The component must have a unique highest weight vertex of partition
/// weight `μ` (strict for `Queer`); the map sending it to a highest weight
/// word of weight `μ` is then extended along every edge in both directions
/// and must be a bijection onto that word's component.
pub fn is_normal_component<C: Crystal>(c: &C, g: &CrystalGraph<C::Elem>, comp: &[usize], kind: HighestKind) -> bool {
    let (mode, labels): (Mode, Vec<Label>) = match kind {
        HighestKind::Gl => (Mode::Gl, (1..g.n).map(Label::Index).collect()),
        HighestKind::Queer => {
            let mut l = vec![Label::Bar];
            l.extend((1..g.n).map(Label::Index));
            (Mode::Queer, l)
        }
        HighestKind::SqrtQueer => return false,
    };
    let members: HashSet<usize> = comp.iter().copied().collect();
    let highest: Vec<usize> = comp.iter().copied().filter(|&v| is_highest(c, g.elem(v), kind)).collect();
    let [top] = highest[..] else { return false };
    let Some(start) = reference_word(&g.vertices[top].weight, g.n, kind) else { return false };

    let mut down: HashMap<(usize, Label), usize> = HashMap::new();
    let mut up: HashMap<(usize, Label), usize> = HashMap::new();
    for e in &g.edges {
        if members.contains(&e.source) || members.contains(&e.target) {
            down.insert((e.source, e.label), e.target);
            up.insert((e.target, e.label), e.source);
        }
    }

    let words = WordCrystal::new(g.n, mode);
    let mut image: HashMap<usize, Word> = HashMap::from([(top, start.clone())]);
    let mut preimage: HashMap<Word, usize> = HashMap::from([(start, top)]);
    let mut queue = VecDeque::from([top]);
    while let Some(v) = queue.pop_front() {
        let w = image[&v].clone();
        if g.vertices[v].weight != w.weight() {
            return false;
        }
        for &label in &labels {
            for (map, dir) in [(&down, Direction::Lower), (&up, Direction::Raise)] {
                match (map.get(&(v, label)), words.apply(&w, label, dir)) {
                    (None, None) => {}
                    (Some(&u), Some(x)) => {
                        if !members.contains(&u) {
                            return false;
                        }
                        match (image.get(&u), preimage.get(&x)) {
                            (None, None) => {
                                image.insert(u, x.clone());
                                preimage.insert(x, u);
                                queue.push_back(u);
                            }
                            (Some(y), Some(&p)) if *y == x && p == u => {}
                            _ => return false,
                        }
                    }
                    _ => return false,
                }
            }
        }
    }
    image.len() == comp.len()
}

/// A highest weight word of weight `mu`: for `Gl` the column reading of the
/// tableau whose column of height `h` holds `1..=h`; for `Queer` the reading
/// word of the highest decomposition tableau of the strict partition `mu`.
fn reference_word(mu: &[i64], n: usize, kind: HighestKind) -> Option<Word> {
    if mu.iter().any(|&x| x < 0) || mu.windows(2).any(|p| p[0] < p[1]) {
        return None;
    }
    let parts: Vec<u32> = mu.iter().map(|&x| x as u32).filter(|&x| x > 0).collect();
    let letters = match kind {
        HighestKind::Gl => {
            let mut letters = Vec::new();
            for col in 1..=parts.first().copied().unwrap_or(0) {
                let h = parts.iter().filter(|&&p| p >= col).count() as u32;
                letters.extend((1..=h).rev());
            }
            letters
        }
        HighestKind::Queer => {
            let shape = StrictPartition::new(parts).ok()?;
            revrow(&t_highest(&shape)).ok()?.into_iter().map(|l| l.value).collect()
        }
        HighestKind::SqrtQueer => return None,
    };
    Word::new(letters, n).ok()
}
