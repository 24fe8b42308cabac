use std::fmt;
use std::ops::Range;

use serde::{Deserialize, Serialize};

use crate::error::TableauError;

use super::{Entry, Square, StrictPartition};

/// A filling of a shifted diagram by nonempty sets (or, in multiset mode,
/// multisets in which only the letter 1 may repeat) of marked letters.
///
/// Single-valued tableaux are the all-singleton case. Cells are stored flat
/// in row-major order (row 1 left to right, then row 2, …), each cell
/// sorted ascending; a repeated letter is stored once per occurrence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "super::json::TableauJson", into = "super::json::TableauJson")]
pub struct SetTableau {
    shape: StrictPartition,
    multiset: bool,
    entries: Vec<Entry>,
    ends: Vec<u32>,
}

impl SetTableau {
    /// Builds a tableau from cells listed in row-major order.
    pub fn new(
        shape: StrictPartition,
        cells: Vec<Vec<Entry>>,
        multiset: bool,
    ) -> Result<Self, TableauError> {
        let squares = shape.squares();
        if cells.len() != squares.len() {
            return Err(TableauError::RowCount { expected: squares.len(), found: cells.len() });
        }
        let mut entries = Vec::new();
        let mut ends = Vec::with_capacity(cells.len());
        for (mut cell, sq) in cells.into_iter().zip(&squares) {
            if cell.is_empty() {
                return Err(TableauError::EmptyCell(*sq));
            }
            cell.sort_unstable();
            for w in cell.windows(2) {
                if w[0] == w[1] && !(multiset && w[0] == Entry::unprimed(1)) {
                    return Err(TableauError::IllegalRepeat(*sq));
                }
            }
            entries.extend(cell);
            ends.push(entries.len() as u32);
        }
        Ok(SetTableau { shape, multiset, entries, ends })
    }

    /// Builds a tableau from rows listed bottom to top; the shape is read off
    /// the row lengths.
    pub fn from_rows(rows: Vec<Vec<Vec<Entry>>>, multiset: bool) -> Result<Self, TableauError> {
        let shape = StrictPartition::new(rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>())?;
        SetTableau::new(shape, rows.into_iter().flatten().collect(), multiset)
    }

    /// Single-valued unprimed tableau from rows of values, bottom to top.
    pub fn from_values(rows: &[&[u32]]) -> Result<Self, TableauError> {
        SetTableau::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| vec![Entry::unprimed(v)]).collect())
                .collect(),
            false,
        )
    }

    /// Parses the compact notation `[3|13|123]/[1|2]`: rows bottom to top,
    /// cells separated by `|`, each letter a single digit optionally
    /// followed by `'`. Multiset mode is switched on when a cell repeats a
    /// letter.
    pub fn from_compact(s: &str) -> Result<Self, TableauError> {
        let err = |position: String, message: &str| TableauError::Parse {
            position,
            message: message.to_string(),
        };
        let mut rows = Vec::new();
        let mut multiset = false;
        for (r, row) in s.trim().split('/').enumerate() {
            let body = row
                .trim()
                .strip_prefix('[')
                .and_then(|x| x.strip_suffix(']'))
                .ok_or_else(|| err(format!("row {}", r + 1), "expected [..]"))?;
            let mut cells = Vec::new();
            for (c, cell) in body.split('|').enumerate() {
                let mut letters: Vec<Entry> = Vec::new();
                let chars: Vec<char> = cell.trim().chars().collect();
                let mut k = 0;
                while k < chars.len() {
                    let d = chars[k]
                        .to_digit(10)
                        .filter(|&d| d > 0)
                        .ok_or_else(|| err(format!("row {} cell {}", r + 1, c + 1), "expected digit 1-9"))?;
                    let primed = chars.get(k + 1) == Some(&'\'');
                    letters.push(Entry::new(d, primed));
                    k += if primed { 2 } else { 1 };
                }
                letters.sort_unstable();
                multiset |= letters.windows(2).any(|w| w[0] == w[1]);
                cells.push(letters);
            }
            rows.push(cells);
        }
        SetTableau::from_rows(rows, multiset)
    }

    pub fn shape(&self) -> &StrictPartition {
        &self.shape
    }

    pub fn is_multiset(&self) -> bool {
        self.multiset
    }

    pub fn num_cells(&self) -> usize {
        self.ends.len()
    }

    fn cell_range(&self, idx: usize) -> Range<usize> {
        let start = if idx == 0 { 0 } else { self.ends[idx - 1] as usize };
        start..self.ends[idx] as usize
    }

    /// Cell contents by row-major index, sorted ascending.
    pub fn cell(&self, idx: usize) -> &[Entry] {
        &self.entries[self.cell_range(idx)]
    }

    pub fn cells(&self) -> impl Iterator<Item = &[Entry]> + '_ {
        (0..self.num_cells()).map(move |i| self.cell(i))
    }

    /// Row-major index range of row `row` (1-based).
    pub fn row_indices(&self, row: usize) -> Range<usize> {
        let parts = self.shape.parts();
        let start: usize = parts[..row - 1].iter().map(|&p| p as usize).sum();
        start..start + parts[row - 1] as usize
    }

    pub fn index_of(&self, sq: Square) -> Option<usize> {
        if !self.shape.contains(sq) {
            return None;
        }
        let start = self.row_indices(sq.row as usize).start;
        Some(start + (sq.col - sq.row) as usize)
    }

    pub fn square_of(&self, idx: usize) -> Square {
        let mut start = 0usize;
        for (r, &p) in self.shape.parts().iter().enumerate() {
            if idx < start + p as usize {
                let row = r as u32 + 1;
                return Square::new(row, row + (idx - start) as u32);
            }
            start += p as usize;
        }
        panic!("cell index {idx} out of range");
    }

    pub fn cell_at(&self, sq: Square) -> Option<&[Entry]> {
        self.index_of(sq).map(|i| self.cell(i))
    }

    /// Rows bottom to top, each a list of cells left to right.
    pub fn rows(&self) -> Vec<Vec<&[Entry]>> {
        (1..=self.shape.len())
            .map(|r| self.row_indices(r).map(|i| self.cell(i)).collect())
            .collect()
    }

    /// Cell indices in reverse row reading order: row 1 right to left, then
    /// row 2 right to left, and so on.
    pub fn reverse_reading_order(&self) -> Vec<usize> {
        (1..=self.shape.len()).flat_map(|r| self.row_indices(r).rev()).collect()
    }

    /// Total number of entry occurrences.
    pub fn degree(&self) -> usize {
        self.entries.len()
    }

    pub fn is_single_valued(&self) -> bool {
        self.entries.len() == self.ends.len()
    }

    pub fn has_primes(&self) -> bool {
        self.entries.iter().any(|e| e.is_primed())
    }

    /// Largest letter value, or 0 for the empty tableau.
    pub fn max_value(&self) -> u32 {
        self.entries.iter().map(|e| e.value()).max().unwrap_or(0)
    }

    pub fn all_entries(&self) -> &[Entry] {
        &self.entries
    }

    pub fn contains(&self, idx: usize, e: Entry) -> bool {
        self.cell(idx).binary_search(&e).is_ok()
    }

    pub fn count(&self, idx: usize, e: Entry) -> usize {
        self.cell(idx).iter().filter(|&&x| x == e).count()
    }

    /// Adds one occurrence of `e` to a cell. Does not check family rules.
    pub fn insert(&mut self, idx: usize, e: Entry) {
        let range = self.cell_range(idx);
        let pos = range.start + self.entries[range].partition_point(|&x| x < e);
        self.entries.insert(pos, e);
        for end in &mut self.ends[idx..] {
            *end += 1;
        }
    }

    /// Removes one occurrence of `e` from a cell; returns false if absent or
    /// if the cell would become empty.
    pub fn remove(&mut self, idx: usize, e: Entry) -> bool {
        let range = self.cell_range(idx);
        if range.len() <= 1 {
            return false;
        }
        let Some(off) = self.entries[range.clone()].iter().position(|&x| x == e) else {
            return false;
        };
        self.entries.remove(range.start + off);
        for end in &mut self.ends[idx..] {
            *end -= 1;
        }
        true
    }

    /// Replaces one occurrence of `from` by `to` in a cell.
    pub fn replace(&mut self, idx: usize, from: Entry, to: Entry) -> bool {
        let range = self.cell_range(idx);
        let Some(off) = self.entries[range.clone()].iter().position(|&x| x == from) else {
            return false;
        };
        self.entries.remove(range.start + off);
        for end in &mut self.ends[idx..] {
            *end -= 1;
        }
        self.insert(idx, to);
        true
    }

    /// True if some cell holds a repeated letter.
    pub fn has_repeats(&self) -> bool {
        self.cells().any(|c| c.windows(2).any(|w| w[0] == w[1]))
    }

    /// Same cells with the multiset flag switched.
    pub fn with_multiset(mut self, multiset: bool) -> Self {
        self.multiset = multiset;
        self
    }

    /// Multiplicity vector: component `k-1` counts occurrences of `k` or `k'`.
    /// Has length `n`, or more if some letter exceeds `n`.
    pub fn content(&self, n: usize) -> Vec<u32> {
        let mut wt = vec![0u32; n.max(self.max_value() as usize)];
        for e in &self.entries {
            wt[e.value() as usize - 1] += 1;
        }
        wt
    }
}

/// Compact notation, the inverse of [`SetTableau::from_compact`] for letters
/// below 10.
impl fmt::Display for SetTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows()
            .iter()
            .map(|row| {
                let cells: Vec<String> = row
                    .iter()
                    .map(|c| c.iter().map(Entry::to_string).collect::<String>())
                    .collect();
                format!("[{}]", cells.join("|"))
            })
            .collect();
        write!(f, "{}", rows.join("/"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_round_trip() {
        let t = SetTableau::from_compact("[3|13|123]/[1|2]").unwrap();
        assert_eq!(t.shape().parts(), &[3, 2]);
        assert_eq!(t.degree(), 8);
        assert_eq!(t.to_string(), "[3|13|123]/[1|2]");
        assert_eq!(t.cell_at(Square::new(1, 3)).unwrap().len(), 3);
        assert_eq!(t.index_of(Square::new(2, 2)), Some(3));
        assert_eq!(t.square_of(4), Square::new(2, 3));
        assert_eq!(t.reverse_reading_order(), vec![2, 1, 0, 4, 3]);
    }

    #[test]
    fn multiset_rules() {
        let t = SetTableau::from_compact("[3|13|113]/[11|2]").unwrap();
        assert!(t.is_multiset());
        assert_eq!(t.count(2, Entry::unprimed(1)), 2);
        assert!(SetTableau::from_compact("[22]").is_err());
        assert!(SetTableau::from_compact("[1'1']").is_err());
        let set = vec![vec![Entry::unprimed(1), Entry::unprimed(1)]];
        assert!(SetTableau::new(StrictPartition::new([1]).unwrap(), set, false).is_err());
    }

    #[test]
    fn edits_keep_cells_sorted() {
        let mut t = SetTableau::from_compact("[4|1|34]/[1|2]").unwrap();
        assert!(t.remove(2, Entry::unprimed(4)));
        t.insert(0, Entry::unprimed(3));
        assert_eq!(t.to_string(), "[34|1|3]/[1|2]");
        assert!(t.replace(3, Entry::unprimed(1), Entry::unprimed(5)));
        assert_eq!(t.to_string(), "[34|1|3]/[5|2]");
        assert!(!t.remove(1, Entry::unprimed(1)), "cells never become empty");
    }

    #[test]
    fn content_counts_values() {
        let t = SetTableau::from_compact("[4|123|234]/[1|3]").unwrap();
        assert_eq!(t.content(4), vec![2, 2, 3, 2]);
        assert_eq!(t.content(6), vec![2, 2, 3, 2, 0, 0]);
        let p = SetTableau::from_compact("[1'1|2]").unwrap();
        assert_eq!(p.content(2), vec![2, 1]);
    }
}
