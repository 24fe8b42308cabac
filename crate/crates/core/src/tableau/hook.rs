use crate::error::TableauError;

use super::SetTableau;

/// True iff `w` is weakly decreasing up to some nonempty prefix and strictly
/// increasing afterwards. The increasing tail may be empty.
pub fn is_hook_word(w: &[u32]) -> Result<bool, TableauError> {
    if w.is_empty() {
        return Err(TableauError::EmptyWord);
    }
    Ok(hook(w))
}

pub(crate) fn hook(w: &[u32]) -> bool {
    let m = w.windows(2).position(|p| p[0] < p[1]).map_or(w.len(), |k| k + 1);
    w[m..].windows(2).all(|p| p[0] < p[1])
}

/// Length of the longest (not necessarily contiguous) hook subword.
pub fn max_hook_subword_len(w: &[u32]) -> usize {
    let top = w.iter().copied().max().unwrap_or(0) as usize;
    // dec[v]: longest weakly decreasing subword ending in v.
    // inc[v]: longest hook subword with nonempty increasing tail ending in v.
    let mut dec = vec![0usize; top + 1];
    let mut inc = vec![0usize; top + 1];
    for &x in w {
        let x = x as usize;
        let from_dec = dec[x..].iter().copied().max().unwrap_or(0);
        let below = dec[..x].iter().chain(&inc[..x]).copied().filter(|&l| l > 0).max();
        dec[x] = dec[x].max(from_dec + 1);
        if let Some(l) = below {
            inc[x] = inc[x].max(l + 1);
        }
    }
    dec.iter().chain(&inc).copied().max().unwrap_or(0)
}

/// How to decide whether a single-valued filling is a decomposition tableau.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DecompositionMode {
    /// Each row is a maximal-length hook subword of (next row)(row).
    Definitional,
    /// Rows are hook words and no forbidden two-row configuration occurs.
    Pattern,
}

/// Decides membership in `DecTab(λ)` for a single-valued unprimed tableau.
pub fn is_decomposition_tableau(
    t: &SetTableau,
    mode: DecompositionMode,
) -> Result<bool, TableauError> {
    let mut rows = Vec::with_capacity(t.shape().len());
    for r in 1..=t.shape().len() {
        let mut row = Vec::new();
        for idx in t.row_indices(r) {
            let cell = t.cell(idx);
            if cell.len() != 1 {
                return Err(TableauError::NotSingleValued(t.square_of(idx)));
            }
            if cell[0].is_primed() {
                return Err(TableauError::PrimedEntry(t.square_of(idx)));
            }
            row.push(cell[0].value());
        }
        rows.push(row);
    }
    let rows: Vec<&[u32]> = rows.iter().map(Vec::as_slice).collect();
    Ok(match mode {
        DecompositionMode::Definitional => rows_definitional(&rows),
        DecompositionMode::Pattern => rows_pattern(&rows),
    })
}

/// Definitional check on rows listed bottom to top.
pub(crate) fn rows_definitional(rows: &[&[u32]]) -> bool {
    rows.iter().all(|r| hook(r)) && rows.windows(2).all(|p| adjacent_rows_ok(p[0], p[1]))
}

/// Condition linking row `lower` (row i) with the row above it (row i+1).
pub(crate) fn adjacent_rows_ok(lower: &[u32], upper: &[u32]) -> bool {
    let mut joined = Vec::with_capacity(lower.len() + upper.len());
    joined.extend_from_slice(upper);
    joined.extend_from_slice(lower);
    max_hook_subword_len(&joined) == lower.len()
}

fn rows_pattern(rows: &[&[u32]]) -> bool {
    if !rows.iter().all(|r| hook(r)) {
        return false;
    }
    rows.windows(2).all(|p| !forbidden_configuration(p[0], p[1]))
}

/// Forbidden configurations between row i (`lower`, starting on the
/// diagonal) and row i+1 (`upper`, starting one column to the right).
///
/// With `a = lower`, `b = upper` and 1-based `j < k ≤ len(b)`, the entry
/// `T_{i,i+j}` is `a[j]` and `T_{i+1,i+k}` is `b[k-1]`.
fn forbidden_configuration(a: &[u32], b: &[u32]) -> bool {
    let m = b.len();
    for k in 1..=m {
        let above = b[k - 1];
        let below = a[k];
        // a ≤ b with a on the diagonal
        if a[0] <= above {
            return true;
        }
        // x < y < z: x above z, y on the diagonal
        if above < a[0] && a[0] < below {
            return true;
        }
        for j in 1..k {
            // a ≤ b ≤ c: a = T_{i,i+j}, c = T_{i+1,i+j} above it, b further right
            if a[j] <= above && above <= b[j - 1] {
                return true;
            }
            // x < y < z: y = T_{i,i+j}, x above z
            if above < a[j] && a[j] < below {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hook_words() {
        assert!(is_hook_word(&[2, 2, 3]).unwrap());
        assert!(is_hook_word(&[7]).unwrap());
        assert!(!is_hook_word(&[1, 3, 2]).unwrap());
        assert!(is_hook_word(&[3, 1, 1, 2, 4]).unwrap());
        assert!(!is_hook_word(&[3, 1, 2, 2]).unwrap());
        assert!(is_hook_word(&[]).is_err());
    }

    #[test]
    fn longest_hook_subword() {
        assert_eq!(max_hook_subword_len(&[1, 1, 2, 2, 3]), 4);
        assert_eq!(max_hook_subword_len(&[2, 2, 3]), 3);
        assert_eq!(max_hook_subword_len(&[5, 4, 3, 2, 1]), 5);
        assert_eq!(max_hook_subword_len(&[]), 0);
        assert_eq!(max_hook_subword_len(&[1, 3, 2]), 2);
    }

    /// Brute force over all subsequences.
    fn brute_max_hook(w: &[u32]) -> usize {
        let mut best = 0;
        for mask in 1u32..(1 << w.len()) {
            let sub: Vec<u32> = (0..w.len()).filter(|i| mask >> i & 1 == 1).map(|i| w[i]).collect();
            if hook(&sub) {
                best = best.max(sub.len());
            }
        }
        best
    }

    #[test]
    fn dp_matches_brute_force() {
        let mut w = vec![];
        for len in 0..=7usize {
            for code in 0..4usize.pow(len as u32) {
                w.clear();
                let mut c = code;
                for _ in 0..len {
                    w.push((c % 4) as u32 + 1);
                    c /= 4;
                }
                assert_eq!(max_hook_subword_len(&w), brute_max_hook(&w), "{w:?}");
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        use DecompositionMode::*;
        let good = SetTableau::from_values(&[&[2, 2, 1], &[1, 1]]).unwrap();
        let bad = SetTableau::from_values(&[&[2, 2, 3], &[1, 1]]).unwrap();
        let diag = SetTableau::from_values(&[&[1, 1], &[1]]).unwrap();
        for mode in [Definitional, Pattern] {
            assert!(is_decomposition_tableau(&good, mode).unwrap());
            assert!(!is_decomposition_tableau(&bad, mode).unwrap());
            assert!(!is_decomposition_tableau(&diag, mode).unwrap());
        }
        let primed = SetTableau::from_compact("[1'|2]").unwrap();
        assert!(matches!(
            is_decomposition_tableau(&primed, Definitional),
            Err(TableauError::PrimedEntry(_))
        ));
        let set = SetTableau::from_compact("[12|2]").unwrap();
        assert!(is_decomposition_tableau(&set, Pattern).is_err());
    }
}
