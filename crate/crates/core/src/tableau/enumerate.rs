use super::family::{column_neighbours_ok, row_all_hook, row_neighbours_ok, rows_pair_ok};
use super::{Entry, FamilyId, SetTableau, Square, StrictPartition};

/// Calls `visit` on every member of `fam` of shape `shape` with entry values
/// at most `n` and degree at most `max_degree` (ignored for single-valued
/// families). Visiting order is row-major backtracking order, not the
/// canonical order of [`enumerate_family`].
pub fn for_each_member(
    fam: FamilyId,
    shape: &StrictPartition,
    n: u32,
    max_degree: usize,
    mut visit: impl FnMut(&SetTableau),
) {
    if shape.len() > n as usize {
        return;
    }
    let squares = shape.squares();
    let max_degree = if fam.is_set_valued() { max_degree } else { squares.len() };
    if max_degree < squares.len() {
        return;
    }
    let pool = candidates(fam, n, max_degree + 1 - squares.len());
    let diagonal = pool
        .iter()
        .filter(|c| fam.is_plus() || c.iter().all(|e| !e.is_primed()))
        .cloned()
        .collect();
    let mut search = Search {
        fam,
        shape,
        squares: &squares,
        candidates: pool,
        diagonal,
        cells: Vec::with_capacity(squares.len()),
        budget: max_degree,
    };
    search.run(&mut visit);
}

/// All members in canonical order (sorted by JSON serialization).
pub fn enumerate_family(fam: FamilyId, shape: &StrictPartition, n: u32, max_degree: usize) -> Vec<SetTableau> {
    let mut out = Vec::new();
    for_each_member(fam, shape, n, max_degree, |t| out.push(t.clone()));
    let mut keyed: Vec<(String, SetTableau)> = out.into_iter().map(|t| (t.to_json(), t)).collect();
    keyed.sort_unstable_by(|a, b| a.0.cmp(&b.0));
    keyed.into_iter().map(|(_, t)| t).collect()
}

/// Possible cell contents, sorted by size then lexicographically, with at
/// most `max_size` entries.
fn candidates(fam: FamilyId, n: u32, max_size: usize) -> Vec<Vec<Entry>> {
    let letters: Vec<Entry> = if fam.is_decomposition() {
        (1..=n).map(Entry::unprimed).collect()
    } else {
        (1..=2 * n).filter_map(Entry::from_code).collect()
    };
    if !fam.is_set_valued() {
        return letters.into_iter().map(|e| vec![e]).collect();
    }
    let mut out = Vec::new();
    let k = letters.len();
    for mask in 1u64..(1u64 << k) {
        let set: Vec<Entry> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| letters[b]).collect();
        if set.len() > max_size {
            continue;
        }
        if fam.is_multiset() && set[0] == Entry::unprimed(1) {
            let mut cell = set.clone();
            while cell.len() <= max_size {
                out.push(cell.clone());
                cell.insert(0, Entry::unprimed(1));
            }
        } else {
            out.push(set);
        }
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    out
}

struct Search<'a> {
    fam: FamilyId,
    shape: &'a StrictPartition,
    squares: &'a [Square],
    candidates: Vec<Vec<Entry>>,
    diagonal: Vec<Vec<Entry>>,
    cells: Vec<Vec<Entry>>,
    budget: usize,
}

impl Search<'_> {
    fn run(&mut self, visit: &mut impl FnMut(&SetTableau)) {
        let idx = self.cells.len();
        if idx == self.squares.len() {
            let t = SetTableau::new(self.shape.clone(), self.cells.clone(), self.fam.is_multiset())
                .expect("enumerated cells are valid");
            visit(&t);
            return;
        }
        let sq = self.squares[idx];
        let remaining = self.squares.len() - idx - 1;
        let max_size = self.budget - remaining;
        let pool = if sq.is_diagonal() { &self.diagonal } else { &self.candidates };
        let fitting: Vec<Vec<Entry>> = pool.iter().take_while(|c| c.len() <= max_size).cloned().collect();
        for cell in fitting {
            self.cells.push(cell);
            if self.consistent(idx, sq) {
                self.budget -= self.cells[idx].len();
                self.run(visit);
                self.budget += self.cells[idx].len();
            }
            self.cells.pop();
        }
    }

    /// Checks the conditions that became decidable once cell `idx` was placed.
    fn consistent(&self, idx: usize, sq: Square) -> bool {
        let row_start = idx - (sq.col - sq.row) as usize;
        if self.fam.is_decomposition() {
            let row = &self.cells[row_start..=idx];
            if !row_all_hook(row) {
                return false;
            }
            if sq.row > 1 {
                let below_len = self.shape.parts()[sq.row as usize - 2] as usize;
                let lower = &self.cells[row_start - below_len..row_start];
                return rows_pair_ok(lower, row);
            }
            true
        } else {
            let cell = &self.cells[idx];
            if idx > row_start && !row_neighbours_ok(&self.cells[idx - 1], cell) {
                return false;
            }
            if sq.row > 1 {
                let below_len = self.shape.parts()[sq.row as usize - 2] as usize;
                // the box below sits one row earlier, one cell further right
                let below = idx - below_len + 1;
                return column_neighbours_ok(&self.cells[below], cell);
            }
            true
        }
    }
}
