use std::fmt;

use crate::error::CrystalError;

use super::Direction;

/// A word over the alphabet `[n]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<u32>,
    n: usize,
}

impl Word {
    pub fn new(letters: Vec<u32>, n: usize) -> Result<Self, CrystalError> {
        if let Some(&bad) = letters.iter().find(|&&l| l == 0 || l as usize > n) {
            return Err(CrystalError::BadIndex { index: bad as usize, n });
        }
        Ok(Word { letters, n })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letter multiplicities, length `n`.
    pub fn weight(&self) -> Vec<i64> {
        let mut wt = vec![0; self.n];
        for &l in &self.letters {
            wt[l as usize - 1] += 1;
        }
        wt
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n > 9 { " " } else { "" };
        let parts: Vec<String> = self.letters.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

/// Unpaired positions after matching each `i+1` (an opening bracket) with a
/// later `i` (a closing bracket).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Bracket {
    /// Positions of unpaired `i`, left to right.
    pub close: Vec<usize>,
    /// Positions of unpaired `i+1`, left to right.
    pub open: Vec<usize>,
}

pub(crate) fn bracket(letters: impl IntoIterator<Item = u32>, i: u32) -> Bracket {
    let mut out = Bracket::default();
    for (pos, l) in letters.into_iter().enumerate() {
        if l == i + 1 {
            out.open.push(pos);
        } else if l == i && out.open.pop().is_none() {
            out.close.push(pos);
        }
    }
    out
}

/// The operators `e_i`, `f_i` on words, by the signature rule.
pub fn word_op(w: &Word, i: usize, dir: Direction) -> Result<Option<Word>, CrystalError> {
    if i == 0 || i >= w.n {
        return Err(CrystalError::BadIndex { index: i, n: w.n });
    }
    let b = bracket(w.letters.iter().copied(), i as u32);
    let mut out = w.clone();
    match dir {
        Direction::Raise => match b.open.first() {
            Some(&p) => out.letters[p] -= 1,
            None => return Ok(None),
        },
        Direction::Lower => match b.close.last() {
            Some(&p) => out.letters[p] += 1,
            None => return Ok(None),
        },
    }
    Ok(Some(out))
}

/// Position the queer operator acts on, if any: the first `2` (raise) or
/// first `1` (lower), provided no `1` (resp. `2`) comes before it.
pub(crate) fn queer_target(letters: impl IntoIterator<Item = u32>, dir: Direction) -> Option<usize> {
    let (want, block) = match dir {
        Direction::Raise => (2, 1),
        Direction::Lower => (1, 2),
    };
    for (pos, l) in letters.into_iter().enumerate() {
        if l == want {
            return Some(pos);
        }
        if l == block {
            return None;
        }
    }
    None
}

/// The queer operators `ē₁`, `f̄₁` on words.
pub fn word_queer_op(w: &Word, dir: Direction) -> Result<Option<Word>, CrystalError> {
    if w.n < 2 {
        return Err(CrystalError::BadIndex { index: 1, n: w.n });
    }
    let Some(p) = queer_target(w.letters.iter().copied(), dir) else {
        return Ok(None);
    };
    let mut out = w.clone();
    out.letters[p] = if dir == Direction::Raise { 1 } else { 2 };
    Ok(Some(out))
}
