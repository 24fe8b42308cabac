use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::TableauError;

/// A box `(row, col)` of a shifted diagram. Rows are counted bottom-up
/// (French convention) and row `i` starts in column `i`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Square {
    pub row: u32,
    pub col: u32,
}

impl Square {
    pub const fn new(row: u32, col: u32) -> Self {
        Square { row, col }
    }

    pub fn is_diagonal(self) -> bool {
        self.row == self.col
    }
}

impl fmt::Display for Square {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// A strict partition `λ_1 > λ_2 > … > 0`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrictPartition {
    parts: Vec<u32>,
}

impl StrictPartition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self, TableauError> {
        let parts = parts.into();
        let strict = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] > w[1]);
        if strict {
            Ok(StrictPartition { parts })
        } else {
            Err(TableauError::NotStrict(parts))
        }
    }

    pub fn empty() -> Self {
        StrictPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts, ℓ(λ).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |λ|, the number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Boxes of the shifted diagram in row-major order: row 1 left to right,
    /// then row 2, and so on.
    pub fn squares(&self) -> Vec<Square> {
        let mut out = Vec::with_capacity(self.size());
        for (r, &p) in self.parts.iter().enumerate() {
            let row = r as u32 + 1;
            for c in 0..p {
                out.push(Square::new(row, row + c));
            }
        }
        out
    }

    pub fn contains(&self, sq: Square) -> bool {
        let Some(&p) = self.parts.get((sq.row as usize).wrapping_sub(1)) else {
            return false;
        };
        sq.row >= 1 && sq.col >= sq.row && sq.col < sq.row + p
    }

    /// All strict partitions of `size`, in decreasing lexicographic order.
    pub fn all_of_size(size: usize) -> Vec<StrictPartition> {
        fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
            if rest == 0 {
                out.push(StrictPartition { parts: cur.clone() });
                return;
            }
            for p in (1..=max.min(rest)).rev() {
                cur.push(p);
                rec(rest - p, p - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(size as u32, size as u32, &mut Vec::new(), &mut out);
        out
    }
}

/// The shifted diagram `SD_λ` as a set of boxes.
pub fn shifted_diagram(shape: &StrictPartition) -> BTreeSet<Square> {
    shape.squares().into_iter().collect()
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for StrictPartition {
    type Err = TableauError;

    /// Parses comma-separated parts such as `3,2`. The empty string and `0`
    /// denote the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() || s == "0" {
            return Ok(StrictPartition::empty());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim().parse::<u32>().map_err(|e| TableauError::Parse {
                    position: format!("part {p:?}"),
                    message: e.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        StrictPartition::new(parts)
    }
}
