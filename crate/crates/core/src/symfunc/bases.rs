use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num::BigRational;

use super::TruncPoly;
use crate::tableau::{for_each_member, FamilyId, StrictPartition};
use crate::word::Weight;

/// The generating functions that can be computed by tableau sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisKind {
    /// Schur `P`: shifted tableaux with unprimed diagonal.
    P,
    /// Schur `Q`: shifted tableaux.
    Q,
    /// Symmetric Grothendieck `G`: set-valued unshifted tableaux.
    G,
    /// K-theoretic `GP`: set-valued shifted tableaux with prime-free diagonal.
    GP,
    /// K-theoretic `GQ`: set-valued shifted tableaux.
    GQ,
    /// `Σ`: set-valued decomposition tableaux.
    Sigma,
}

impl BasisKind {
    pub const ALL: [BasisKind; 6] =
        [BasisKind::P, BasisKind::Q, BasisKind::G, BasisKind::GP, BasisKind::GQ, BasisKind::Sigma];

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::P => "P",
            BasisKind::Q => "Q",
            BasisKind::G => "G",
            BasisKind::GP => "GP",
            BasisKind::GQ => "GQ",
            BasisKind::Sigma => "Sigma",
        }
    }

    /// The tableau family summed over, for the shifted kinds.
    pub fn family(self) -> Option<FamilyId> {
        match self {
            BasisKind::P => Some(FamilyId::ShTab),
            BasisKind::Q => Some(FamilyId::ShTabPlus),
            BasisKind::G => None,
            BasisKind::GP => Some(FamilyId::SetShTab),
            BasisKind::GQ => Some(FamilyId::SetShTabPlus),
            BasisKind::Sigma => Some(FamilyId::SetDecTab),
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasisKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        BasisKind::ALL
            .into_iter()
            .find(|k| k.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown basis '{s}'"))
    }
}

fn from_counts(counts: HashMap<Vec<u32>, u64>, n: usize, degree: usize) -> TruncPoly {
    let mut p = TruncPoly::zero(n, degree);
    for (e, k) in counts {
        p.add_term(e, BigRational::from_integer(k.into()));
    }
    p
}

/// `ch = Σ x^wt` over the given weights, dropping those of degree above
/// `degree`.
pub fn character<I>(weights: I, n: usize, degree: usize) -> TruncPoly
where
    I: IntoIterator<Item = Weight>,
{
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    for w in weights {
        assert_eq!(w.len(), n, "weight length");
        let e: Vec<u32> = w.iter().map(|&x| u32::try_from(x).expect("nonnegative weight")).collect();
        *counts.entry(e).or_default() += 1;
    }
    from_counts(counts, n, degree)
}

/// The tableau sum of `kind` for `shape` in `n` variables, truncated at
/// total degree `degree`.
pub fn basis_poly(kind: BasisKind, shape: &StrictPartition, n: usize, degree: usize) -> TruncPoly {
    let Some(fam) = kind.family() else {
        return grothendieck(shape.parts(), n, degree);
    };
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    if shape.size() <= degree {
        for_each_member(fam, shape, n as u32, degree, |t| {
            *counts.entry(t.content(n)).or_default() += 1;
        });
    }
    from_counts(counts, n, degree)
}

/// `G_λ` for an ordinary partition `λ`: the sum of `x^T` over semistandard
/// set-valued tableaux (rows weakly increasing, columns strictly), with
/// entries in `[n]`, truncated at `degree`.
pub fn grothendieck(parts: &[u32], n: usize, degree: usize) -> TruncPoly {
    assert!(parts.windows(2).all(|p| p[0] >= p[1]), "{parts:?} is not a partition");
    let parts: Vec<usize> = parts.iter().map(|&p| p as usize).filter(|&p| p > 0).collect();
    let cells: Vec<(usize, usize)> = parts.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut counts: HashMap<Vec<u32>, u64> = HashMap::new();
    if cells.len() <= degree && parts.len() <= n {
        let mut fill: Vec<Vec<u32>> = Vec::with_capacity(cells.len());
        let mut content = vec![0u32; n];
        let row_start: Vec<usize> = parts.iter().scan(0, |acc, &p| {
            let s = *acc;
            *acc += p;
            Some(s)
        }).collect();
        fill_cells(&cells, &row_start, n as u32, degree, &mut fill, &mut content, &mut counts);
    }
    from_counts(counts, n, degree)
}

fn fill_cells(
    cells: &[(usize, usize)],
    row_start: &[usize],
    n: u32,
    budget: usize,
    fill: &mut Vec<Vec<u32>>,
    content: &mut Vec<u32>,
    counts: &mut HashMap<Vec<u32>, u64>,
) {
    let k = fill.len();
    if k == cells.len() {
        *counts.entry(content.clone()).or_default() += 1;
        return;
    }
    let (r, c) = cells[k];
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(*fill[k - 1].last().expect("nonempty"));
    }
    if r > 0 {
        lo = lo.max(fill[row_start[r - 1] + c].last().expect("nonempty") + 1);
    }
    let spare = budget - (cells.len() - k - 1);
    // every nonempty subset of lo..=n with at most `spare` elements
    let pool: Vec<u32> = (lo..=n).collect();
    let mut chosen = Vec::new();
    subsets(&pool, 0, spare, &mut chosen, &mut |set| {
        for &x in set {
            content[x as usize - 1] += 1;
        }
        fill.push(set.to_vec());
        fill_cells(cells, row_start, n, budget - set.len(), fill, content, counts);
        fill.pop();
        for &x in set {
            content[x as usize - 1] -= 1;
        }
    });
}

fn subsets(pool: &[u32], from: usize, max: usize, chosen: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if !chosen.is_empty() {
        visit(chosen);
    }
    if chosen.len() == max {
        return;
    }
    for k in from..pool.len() {
        chosen.push(pool[k]);
        subsets(pool, k + 1, max, chosen, visit);
        chosen.pop();
    }
}
