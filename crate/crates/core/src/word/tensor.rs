use crate::error::CrystalError;

use super::signature::{queer_target, Word};
use super::{bracket, Crystal, Direction, Label, Mode, Weight};

/// The standard crystal `B_n` on the letters `1..=n`.
#[derive(Clone, Copy, Debug)]
pub struct Standard {
    pub n: usize,
    pub mode: Mode,
}

impl Standard {
    /// `mode` must be `Gl` or `Queer`; the square-root standard crystal is
    /// the single-box set-valued crystal.
    pub fn new(n: usize, mode: Mode) -> Self {
        assert!(!mode.is_sqrt(), "no letter crystal in square-root modes");
        Standard { n, mode }
    }

    pub fn elements(&self) -> Vec<u32> {
        (1..=self.n as u32).collect()
    }
}

impl Crystal for Standard {
    type Elem = u32;

    fn rank(&self) -> usize {
        self.n
    }

    fn mode(&self) -> Mode {
        self.mode
    }

    fn weight(&self, b: &u32) -> Weight {
        let mut wt = vec![0; self.n];
        wt[*b as usize - 1] = 1;
        wt
    }

    fn raise(&self, b: &u32, label: Label) -> Option<u32> {
        let i = match label {
            Label::Bar if self.mode.is_queer() => 1,
            Label::Bar => return None,
            Label::Index(i) => i as u32,
        };
        (*b == i + 1).then_some(i)
    }

    fn lower(&self, b: &u32, label: Label) -> Option<u32> {
        let i = match label {
            Label::Bar if self.mode.is_queer() => 1,
            Label::Bar => return None,
            Label::Index(i) => i as u32,
        };
        (*b == i && (i as usize) < self.n).then_some(i + 1)
    }

    fn key(&self, b: &u32) -> String {
        b.to_string()
    }
}

/// `B_n^{⊗m}` with words as elements, operated on by the signature rule.
#[derive(Clone, Copy, Debug)]
pub struct WordCrystal {
    pub n: usize,
    pub mode: Mode,
}

impl WordCrystal {
    pub fn new(n: usize, mode: Mode) -> Self {
        assert!(!mode.is_sqrt(), "no word crystal in square-root modes");
        WordCrystal { n, mode }
    }

    /// All words of length `m`, lexicographically.
    pub fn words(&self, m: usize) -> Vec<Word> {
        let mut out = vec![Vec::new()];
        for _ in 0..m {
            out = out
                .into_iter()
                .flat_map(|w: Vec<u32>| {
                    (1..=self.n as u32).map(move |l| {
                        let mut v = w.clone();
                        v.push(l);
                        v
                    })
                })
                .collect();
        }
        out.into_iter().map(|w| Word::new(w, self.n).expect("letters in range")).collect()
    }

    fn op(&self, w: &Word, label: Label, dir: Direction) -> Option<Word> {
        let mut letters = w.letters().to_vec();
        match label {
            Label::Bar => {
                if !self.mode.is_queer() {
                    return None;
                }
                let p = queer_target(letters.iter().copied(), dir)?;
                letters[p] = if dir == Direction::Raise { 1 } else { 2 };
            }
            Label::Index(i) => {
                if i == 0 || i >= self.n {
                    return None;
                }
                let b = bracket(letters.iter().copied(), i as u32);
                match dir {
                    Direction::Raise => letters[*b.open.first()?] -= 1,
                    Direction::Lower => letters[*b.close.last()?] += 1,
                }
            }
        }
        Some(Word::new(letters, self.n).expect("letters stay in range"))
    }
}

impl Crystal for WordCrystal {
    type Elem = Word;

    fn rank(&self) -> usize {
        self.n
    }

    fn mode(&self) -> Mode {
        self.mode
    }

    fn weight(&self, b: &Word) -> Weight {
        b.weight()
    }

    fn raise(&self, b: &Word, label: Label) -> Option<Word> {
        self.op(b, label, Direction::Raise)
    }

    fn lower(&self, b: &Word, label: Label) -> Option<Word> {
        self.op(b, label, Direction::Lower)
    }

    fn key(&self, b: &Word) -> String {
        b.to_string()
    }
}

/// The tensor product `B ⊗ C` in the anti-Kashiwara convention. The same
/// rule serves all four modes; in square-root modes the string lengths are
/// the primed ones.
#[derive(Clone, Debug)]
pub struct Tensor<B, C> {
    pub left: B,
    pub right: C,
}

impl<B: Crystal, C: Crystal> Tensor<B, C> {
    pub fn new(left: B, right: C) -> Result<Self, CrystalError> {
        if left.rank() != right.rank() {
            return Err(CrystalError::Mismatch(format!("ranks {} and {}", left.rank(), right.rank())));
        }
        if left.mode() != right.mode() {
            return Err(CrystalError::Mismatch(format!(
                "modes {} and {}",
                left.mode().name(),
                right.mode().name()
            )));
        }
        Ok(Tensor { left, right })
    }

    /// Whether the operator acts on the right factor.
    fn acts_right(&self, b: &B::Elem, c: &C::Elem, label: Label, dir: Direction) -> bool {
        match label {
            Label::Bar => {
                let wt = self.left.weight(b);
                wt[0] == 0 && wt[1] == 0
            }
            Label::Index(_) => {
                let eps = self.left.epsilon(b, label);
                let phi = self.right.phi(c, label);
                match dir {
                    Direction::Raise => eps <= phi,
                    Direction::Lower => eps < phi,
                }
            }
        }
    }

    fn op(&self, (b, c): &(B::Elem, C::Elem), label: Label, dir: Direction) -> Option<(B::Elem, C::Elem)> {
        if self.acts_right(b, c, label, dir) {
            Some((b.clone(), self.right.apply(c, label, dir)?))
        } else {
            Some((self.left.apply(b, label, dir)?, c.clone()))
        }
    }
}

impl<B: Crystal, C: Crystal> Crystal for Tensor<B, C> {
    type Elem = (B::Elem, C::Elem);

    fn rank(&self) -> usize {
        self.left.rank()
    }

    fn mode(&self) -> Mode {
        self.left.mode()
    }

    fn weight(&self, (b, c): &Self::Elem) -> Weight {
        self.left.weight(b).iter().zip(self.right.weight(c)).map(|(x, y)| x + y).collect()
    }

    fn raise(&self, e: &Self::Elem, label: Label) -> Option<Self::Elem> {
        self.op(e, label, Direction::Raise)
    }

    fn lower(&self, e: &Self::Elem, label: Label) -> Option<Self::Elem> {
        self.op(e, label, Direction::Lower)
    }

    fn key(&self, (b, c): &Self::Elem) -> String {
        format!("{} ⊗ {}", self.left.key(b), self.right.key(c))
    }
}
