use crate::error::{CrystalError, TableauError};
use crate::tableau::{is_member, Entry, FamilyId, SetTableau, Square, StrictPartition};

use super::signature::{bracket, queer_target};
use super::{Crystal, Direction, Label, Mode, Weight};

/// A letter of a reading word together with the cell it was read from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Letter {
    pub value: u32,
    /// Row-major cell index in the source tableau.
    pub cell: usize,
    pub square: Square,
}

/// The reverse row reading word: row 1 right to left, then row 2 right to
/// left, and so on, with the entries of each cell in decreasing order.
pub fn revrow(t: &SetTableau) -> Result<Vec<Letter>, TableauError> {
    let mut out = Vec::with_capacity(t.degree());
    for idx in t.reverse_reading_order() {
        let square = t.square_of(idx);
        for e in t.cell(idx).iter().rev() {
            if e.is_primed() {
                return Err(TableauError::PrimedEntry(square));
            }
            out.push(Letter { value: e.value(), cell: idx, square });
        }
    }
    Ok(out)
}

/// Crystal operators on single-valued decomposition tableaux, computed on
/// the reading word and written back cell by cell.
pub fn dectab_op(t: &SetTableau, label: Label, dir: Direction) -> Result<Option<SetTableau>, CrystalError> {
    if !is_member(t, FamilyId::DecTab) {
        return Err(CrystalError::NotMember("DecTab"));
    }
    if label == Label::Index(0) {
        return Err(CrystalError::BadIndex { index: 0, n: t.max_value() as usize });
    }
    Ok(dectab_op_unchecked(t, label, dir))
}

pub(crate) fn dectab_op_unchecked(t: &SetTableau, label: Label, dir: Direction) -> Option<SetTableau> {
    let word = revrow(t).expect("decomposition tableaux are unprimed");
    let values = word.iter().map(|l| l.value);
    let (pos, to) = match label {
        Label::Bar => {
            let p = queer_target(values, dir)?;
            (p, if dir == Direction::Raise { 1 } else { 2 })
        }
        Label::Index(i) => {
            let b = bracket(values, i as u32);
            match dir {
                Direction::Raise => (*b.open.first()?, i as u32),
                Direction::Lower => (*b.close.last()?, i as u32 + 1),
            }
        }
    };
    let letter = word[pos];
    let mut out = t.clone();
    out.replace(letter.cell, Entry::unprimed(letter.value), Entry::unprimed(to));
    debug_assert!(is_member(&out, FamilyId::DecTab), "{t} -> {out}");
    Some(out)
}

/// The queer crystal `DecTab_n(λ)`.
#[derive(Clone, Debug)]
pub struct DecTabCrystal {
    pub n: usize,
    pub shape: StrictPartition,
}

impl DecTabCrystal {
    pub fn new(shape: StrictPartition, n: usize) -> Self {
        DecTabCrystal { n, shape }
    }

    /// All elements in canonical order.
    pub fn elements(&self) -> Vec<SetTableau> {
        crate::tableau::enumerate_family(FamilyId::DecTab, &self.shape, self.n as u32, 0)
    }
}

impl Crystal for DecTabCrystal {
    type Elem = SetTableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn mode(&self) -> Mode {
        Mode::Queer
    }

    fn weight(&self, b: &SetTableau) -> Weight {
        b.content(self.n).into_iter().map(i64::from).collect()
    }

    fn raise(&self, b: &SetTableau, label: Label) -> Option<SetTableau> {
        dectab_op_unchecked(b, label, Direction::Raise)
    }

    fn lower(&self, b: &SetTableau, label: Label) -> Option<SetTableau> {
        dectab_op_unchecked(b, label, Direction::Lower).filter(|t| t.max_value() as usize <= self.n)
    }

    fn key(&self, b: &SetTableau) -> String {
        b.to_string()
    }
}
