//! Crystal operators on set-valued decomposition tableaux that preserve the
//! degree: `e_i`, `f_i`, the multiset queer operators `ē₁*`, `f̄₁*` and their
//! restrictions `ē₁`, `f̄₁`.

use crate::error::CrystalError;
use crate::tableau::{enumerate_family, for_each_member, is_member, Entry, FamilyId, SetTableau, Square, StrictPartition};
use crate::word::{bracket, queer_target, revrow, Crystal, Direction, Label, Mode, Weight};

/// Letter multiplicities of an unprimed tableau, length `max(n, largest letter)`.
pub fn sv_weight(t: &SetTableau, n: usize) -> Weight {
    t.content(n).into_iter().map(i64::from).collect()
}

/// How a nonzero `e_i`/`f_i` acted.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SvStep {
    /// One letter in `at` changed value.
    Change { at: Square },
    /// A letter was removed from `from` and a different one added to `to`.
    Move { from: Square, to: Square },
}

/// `e_i` or `f_i` on a member of `SetDecTab(λ)`.
pub fn sv_op(t: &SetTableau, i: usize, dir: Direction) -> Result<Option<SetTableau>, CrystalError> {
    check_member(t, FamilyId::SetDecTab)?;
    if i == 0 {
        return Err(CrystalError::BadIndex { index: 0, n: t.max_value() as usize });
    }
    Ok(sv_op_traced(t, i, dir).map(|(u, _)| u))
}

fn check_member(t: &SetTableau, fam: FamilyId) -> Result<(), CrystalError> {
    if is_member(t, fam) {
        Ok(())
    } else {
        Err(CrystalError::NotMember(match fam {
            FamilyId::SetDecTabStar => "SetDecTab*",
            _ => "SetDecTab",
        }))
    }
}

/// Same as [`sv_op`] without the membership check, also reporting which
/// case of the definition applied.
pub fn sv_op_traced(t: &SetTableau, i: usize, dir: Direction) -> Option<(SetTableau, SvStep)> {
    let word = revrow(t).expect("decomposition tableaux are unprimed");
    let b = bracket(word.iter().map(|l| l.value), i as u32);
    let (lo, hi) = (Entry::unprimed(i as u32), Entry::unprimed(i as u32 + 1));
    let (from, to) = match dir {
        Direction::Raise => (hi, lo),
        Direction::Lower => (lo, hi),
    };
    let target = match dir {
        Direction::Raise => word[*b.open.first()?].cell,
        Direction::Lower => word[*b.close.last()?].cell,
    };

    let mut changed = t.clone();
    changed.replace(target, from, to);
    if is_member(&changed, FamilyId::SetDecTab) {
        return Some((changed, SvStep::Change { at: t.square_of(target) }));
    }

    let order = t.reverse_reading_order();
    let k = order.iter().position(|&c| c == target).expect("target cell is in the tableau");
    let holds_both = |&&c: &&usize| t.contains(c, lo) && t.contains(c, hi);
    let donor = match dir {
        Direction::Raise => order[..k].iter().rev().find(holds_both),
        Direction::Lower => order[k + 1..].iter().find(holds_both),
    };
    let Some(&donor) = donor else {
        panic!("no box holding both {i} and {} for {dir:?} on {t}", i + 1);
    };
    let mut moved = t.clone();
    moved.remove(donor, from);
    moved.insert(target, to);
    debug_assert!(is_member(&moved, FamilyId::SetDecTab), "{t} -> {moved}");
    Some((moved, SvStep::Move { from: t.square_of(donor), to: t.square_of(target) }))
}

/// `ē₁*` or `f̄₁*` on a member of `SetDecTab*(λ)`: changes the first `2`
/// (resp. `1`) of the reading word unless a `1` (resp. `2`) comes first.
/// The result is flagged as multiset-valued.
pub fn sv_queer_star_op(t: &SetTableau, dir: Direction) -> Result<Option<SetTableau>, CrystalError> {
    check_member(t, FamilyId::SetDecTabStar)?;
    Ok(queer_star_unchecked(t, dir).map(|u| u.with_multiset(true)))
}

fn queer_star_unchecked(t: &SetTableau, dir: Direction) -> Option<SetTableau> {
    let word = revrow(t).expect("decomposition tableaux are unprimed");
    let pos = queer_target(word.iter().map(|l| l.value), dir)?;
    let (from, to) = match dir {
        Direction::Raise => (Entry::unprimed(2), Entry::unprimed(1)),
        Direction::Lower => (Entry::unprimed(1), Entry::unprimed(2)),
    };
    let mut out = t.clone();
    out.replace(word[pos].cell, from, to);
    Some(out)
}

/// `ē₁` or `f̄₁` on a member of `SetDecTab(λ)`: the starred operator,
/// except that raising is zero when it would repeat a `1` in a cell.
pub fn sv_queer_op(t: &SetTableau, dir: Direction) -> Result<Option<SetTableau>, CrystalError> {
    check_member(t, FamilyId::SetDecTab)?;
    Ok(sv_queer_unchecked(t, dir))
}

pub(crate) fn sv_queer_unchecked(t: &SetTableau, dir: Direction) -> Option<SetTableau> {
    let out = queer_star_unchecked(t, dir)?;
    (!out.has_repeats()).then_some(out)
}

/// The queer crystal on `SetDecTab_n(λ)` with the degree-preserving
/// operators.
#[derive(Clone, Debug)]
pub struct SvCrystal {
    pub n: usize,
    pub shape: StrictPartition,
}

impl SvCrystal {
    pub fn new(shape: StrictPartition, n: usize) -> Self {
        SvCrystal { n, shape }
    }

    /// Members of degree at most `max_degree`, in canonical order. Since the
    /// operators preserve degree, this set is closed under them.
    pub fn elements(&self, max_degree: usize) -> Vec<SetTableau> {
        enumerate_family(FamilyId::SetDecTab, &self.shape, self.n as u32, max_degree)
    }

    /// Members of exactly `degree`, in canonical order.
    pub fn elements_of_degree(&self, degree: usize) -> Vec<SetTableau> {
        let mut out = Vec::new();
        for_each_member(FamilyId::SetDecTab, &self.shape, self.n as u32, degree, |t| {
            if t.degree() == degree {
                out.push(t.clone());
            }
        });
        out.sort_by_cached_key(SetTableau::to_json);
        out
    }

    fn op(&self, t: &SetTableau, label: Label, dir: Direction) -> Option<SetTableau> {
        let out = match label {
            Label::Bar => sv_queer_unchecked(t, dir)?,
            Label::Index(i) if i >= 1 && i < self.n => sv_op_traced(t, i, dir)?.0,
            Label::Index(_) => return None,
        };
        (out.max_value() as usize <= self.n).then_some(out)
    }
}

impl Crystal for SvCrystal {
    type Elem = SetTableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn mode(&self) -> Mode {
        Mode::Queer
    }

    fn weight(&self, b: &SetTableau) -> Weight {
        sv_weight(b, self.n)
    }

    fn raise(&self, b: &SetTableau, label: Label) -> Option<SetTableau> {
        self.op(b, label, Direction::Raise)
    }

    fn lower(&self, b: &SetTableau, label: Label) -> Option<SetTableau> {
        self.op(b, label, Direction::Lower)
    }

    fn key(&self, b: &SetTableau) -> String {
        b.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Direction::*;

    fn t(s: &str) -> SetTableau {
        SetTableau::from_compact(s).unwrap()
    }

    fn show(r: Option<SetTableau>) -> String {
        r.map_or("null".into(), |u| u.to_string())
    }

    #[test]
    fn weight_of_example() {
        assert_eq!(sv_weight(&t("[4|123|234]/[1|3]"), 4), vec![2, 2, 3, 2]);
        assert_eq!(sv_weight(&t("[1]"), 3), vec![1, 0, 0]);
    }

    #[test]
    fn raising_cases() {
        let (u, step) = sv_op_traced(&t("[3|13|123]/[1|2]"), 2, Raise).unwrap();
        assert_eq!(u.to_string(), "[3|12|123]/[1|2]");
        assert_eq!(step, SvStep::Change { at: Square::new(1, 2) });

        let (u, step) = sv_op_traced(&t("[4|1|34]/[1|2]"), 3, Raise).unwrap();
        assert_eq!(u.to_string(), "[34|1|3]/[1|2]");
        assert_eq!(step, SvStep::Move { from: Square::new(1, 3), to: Square::new(1, 1) });

        let (u, step) = sv_op_traced(&t("[4|123|234]/[1|3]"), 2, Raise).unwrap();
        assert_eq!(u.to_string(), "[4|12|234]/[1|23]");
        assert_eq!(step, SvStep::Move { from: Square::new(1, 2), to: Square::new(2, 3) });
    }

    #[test]
    fn lowering_cases() {
        assert_eq!(show(sv_op(&t("[3|12|123]/[1|2]"), 2, Lower).unwrap()), "[3|13|123]/[1|2]");
        assert_eq!(show(sv_op(&t("[34|1|3]/[1|2]"), 3, Lower).unwrap()), "[4|1|34]/[1|2]");
        assert_eq!(show(sv_op(&t("[4|12|234]/[1|23]"), 2, Lower).unwrap()), "[4|123|234]/[1|3]");
        assert_eq!(show(sv_op(&t("[12|2]"), 3, Lower).unwrap()), "null");
        assert!(sv_op(&t("[1|1]/[1]"), 1, Lower).is_err());
    }

    #[test]
    fn queer_star_examples() {
        let up = sv_queer_star_op(&t("[3|13|123]/[11|2]"), Raise).unwrap().unwrap();
        assert_eq!(up.to_string(), "[3|13|113]/[11|2]");
        assert_eq!(sv_queer_star_op(&up, Raise).unwrap(), None);
        let down = sv_queer_star_op(&t("[3|13|13]/[111|2]"), Lower).unwrap();
        assert_eq!(show(down), "[3|13|23]/[111|2]");
        assert_eq!(sv_queer_star_op(&t("[3|13|123]/[1|2]"), Lower).unwrap(), None);
    }

    #[test]
    fn queer_restrictions() {
        assert_eq!(sv_queer_op(&t("[3|13|123]/[1|2]"), Raise).unwrap(), None);
        assert_eq!(show(sv_queer_op(&t("[1]"), Lower).unwrap()), "[2]");
        // revrow of {1,2} reads 2 before 1, so the lowering operator is zero
        assert_eq!(sv_queer_op(&t("[12]"), Lower).unwrap(), None);
        assert_eq!(sv_queer_op(&t("[12]"), Raise).unwrap(), None);
        assert_eq!(show(sv_queer_op(&t("[2]"), Raise).unwrap()), "[1]");
    }
}
