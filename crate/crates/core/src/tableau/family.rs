use std::fmt;
use std::str::FromStr;

use crate::error::TableauError;

use super::hook::max_hook_subword_len;
use super::{Entry, SetTableau};

/// The seven tableau families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    DecTab,
    ShTab,
    ShTabPlus,
    SetShTab,
    SetShTabPlus,
    SetDecTab,
    SetDecTabStar,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] = [
        FamilyId::DecTab,
        FamilyId::ShTab,
        FamilyId::ShTabPlus,
        FamilyId::SetShTab,
        FamilyId::SetShTabPlus,
        FamilyId::SetDecTab,
        FamilyId::SetDecTabStar,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::DecTab => "dectab",
            FamilyId::ShTab => "shtab",
            FamilyId::ShTabPlus => "shtab+",
            FamilyId::SetShTab => "setshtab",
            FamilyId::SetShTabPlus => "setshtab+",
            FamilyId::SetDecTab => "setdectab",
            FamilyId::SetDecTabStar => "setdectab*",
        }
    }

    pub fn is_set_valued(self) -> bool {
        matches!(
            self,
            FamilyId::SetShTab | FamilyId::SetShTabPlus | FamilyId::SetDecTab | FamilyId::SetDecTabStar
        )
    }

    /// Decomposition families use unprimed letters only.
    pub fn is_decomposition(self) -> bool {
        matches!(self, FamilyId::DecTab | FamilyId::SetDecTab | FamilyId::SetDecTabStar)
    }

    /// Plus variants allow primes on the diagonal.
    pub fn is_plus(self) -> bool {
        matches!(self, FamilyId::ShTabPlus | FamilyId::SetShTabPlus)
    }

    pub fn is_multiset(self) -> bool {
        self == FamilyId::SetDecTabStar
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = TableauError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim().to_ascii_lowercase().replace(['_', '-'], "");
        let key = key.replace("plus", "+").replace("star", "*");
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| TableauError::Parse {
                position: "family".into(),
                message: format!("unknown family {s:?}"),
            })
    }
}

/// All single-valued tableaux obtained by choosing one entry per cell, in
/// cell-by-cell order with the last cell varying fastest.
pub fn distributions(t: &SetTableau) -> Vec<SetTableau> {
    let cells: Vec<&[Entry]> = t.cells().collect();
    let mut out = Vec::new();
    for_each_choice(&cells, |choice| {
        let single = choice.iter().map(|&e| vec![e]).collect();
        out.push(SetTableau::new(t.shape().clone(), single, false).expect("distribution of a valid tableau"));
        true
    });
    out
}

/// Visits every choice of one entry per cell; stops early when `visit`
/// returns false. Returns false iff stopped early.
pub(crate) fn for_each_choice<C: AsRef<[Entry]>>(cells: &[C], mut visit: impl FnMut(&[Entry]) -> bool) -> bool {
    if cells.iter().any(|c| c.as_ref().is_empty()) {
        return true;
    }
    let mut pos = vec![0usize; cells.len()];
    let mut choice: Vec<Entry> = cells.iter().map(|c| c.as_ref()[0]).collect();
    loop {
        if !visit(&choice) {
            return false;
        }
        let mut k = cells.len();
        loop {
            if k == 0 {
                return true;
            }
            k -= 1;
            pos[k] += 1;
            if pos[k] < cells[k].as_ref().len() {
                choice[k] = cells[k].as_ref()[pos[k]];
                break;
            }
            pos[k] = 0;
            choice[k] = cells[k].as_ref()[0];
        }
    }
}

/// Decides membership of `t` in the family.
///
/// The distribution conditions are local: a filling is a decomposition
/// tableau iff each row and each pair of adjacent rows passes, and is
/// semistandard iff each pair of neighbouring cells passes. So "every
/// distribution passes" is checked one row (or pair) at a time, which is
/// equivalent to running through the full Cartesian product.
pub fn is_member(t: &SetTableau, fam: FamilyId) -> bool {
    if t.is_multiset() && !fam.is_multiset() && t.has_repeats() {
        return false;
    }
    if !fam.is_set_valued() && !t.is_single_valued() {
        return false;
    }
    let rows = t.rows();
    if fam.is_decomposition() {
        if t.has_primes() {
            return false;
        }
        rows.iter().all(|r| row_all_hook(r)) && rows.windows(2).all(|p| rows_pair_ok(&p[0], &p[1]))
    } else {
        semistandard(t, fam.is_plus())
    }
}

fn semistandard(t: &SetTableau, plus: bool) -> bool {
    for idx in 0..t.num_cells() {
        let sq = t.square_of(idx);
        let cell = t.cell(idx);
        if !plus && sq.is_diagonal() && cell.iter().any(|e| e.is_primed()) {
            return false;
        }
        if sq.col > sq.row && !row_neighbours_ok(t.cell(idx - 1), cell) {
            return false;
        }
        if sq.row > 1 {
            let below = t.cell_at(super::Square::new(sq.row - 1, sq.col)).expect("column below");
            if !column_neighbours_ok(below, cell) {
                return false;
            }
        }
    }
    true
}

/// Every choice from `left` and from `right` (right neighbour) is weakly
/// increasing without a repeated primed letter.
pub(crate) fn row_neighbours_ok(left: &[Entry], right: &[Entry]) -> bool {
    let (hi, lo) = (left[left.len() - 1], right[0]);
    hi < lo || (hi == lo && !hi.is_primed())
}

/// Every choice from `below` and `above` is weakly increasing upwards
/// without a repeated unprimed letter.
pub(crate) fn column_neighbours_ok(below: &[Entry], above: &[Entry]) -> bool {
    let (hi, lo) = (below[below.len() - 1], above[0]);
    hi < lo || (hi == lo && hi.is_primed())
}

/// Every distribution of the row is a hook word, i.e. no choice contains a
/// subword `a < b ≥ c`.
pub(crate) fn row_all_hook<C: AsRef<[Entry]>>(row: &[C]) -> bool {
    let k = row.len();
    let mins: Vec<u32> = row.iter().map(|c| c.as_ref()[0].value()).collect();
    let mut suffix = vec![u32::MAX; k + 1];
    for q in (0..k).rev() {
        suffix[q] = suffix[q + 1].min(mins[q]);
    }
    let mut prefix = u32::MAX;
    for q in 0..k {
        let top = row[q].as_ref()[row[q].as_ref().len() - 1].value();
        if prefix < top && suffix[q + 1] <= top {
            return false;
        }
        prefix = prefix.min(mins[q]);
    }
    true
}

/// Every distribution of `lower` (row i) has no hook subword of
/// `upper · lower` longer than itself. `upper` may be a prefix of row i+1.
pub(crate) fn rows_pair_ok<C: AsRef<[Entry]>>(lower: &[C], upper: &[C]) -> bool {
    let mut cells: Vec<&[Entry]> = upper.iter().map(AsRef::as_ref).collect();
    cells.extend(lower.iter().map(AsRef::as_ref));
    let mut word = vec![0u32; cells.len()];
    for_each_choice(&cells, |choice| {
        for (w, e) in word.iter_mut().zip(choice) {
            *w = e.value();
        }
        max_hook_subword_len(&word) <= lower.len()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::hook::{is_decomposition_tableau, DecompositionMode};

    fn t(s: &str) -> SetTableau {
        SetTableau::from_compact(s).unwrap()
    }

    #[test]
    fn six_distributions() {
        let d = distributions(&t("[4|13|234]/[1|3]"));
        assert_eq!(d.len(), 6);
        assert!(d.iter().all(SetTableau::is_single_valued));
        assert_eq!(d[0].to_string(), "[4|1|2]/[1|3]");
        assert_eq!(d[5].to_string(), "[4|3|4]/[1|3]");
        assert_eq!(distributions(&t("[12]")).len(), 2);
        let single = t("[2|1]/[1]");
        assert_eq!(distributions(&single), vec![single]);
    }

    #[test]
    fn membership_examples() {
        assert!(is_member(&t("[3|13|123]/[1|2]"), FamilyId::SetDecTab));
        assert!(!is_member(&t("[1|1]/[1]"), FamilyId::SetDecTab));
        assert!(!is_member(&t("[1'1|2]"), FamilyId::SetShTab));
        assert!(is_member(&t("[1'1|2]"), FamilyId::SetShTabPlus));
        assert!(!is_member(&t("[1'1|2]"), FamilyId::ShTabPlus));
        assert!(is_member(&t("[1'|2]"), FamilyId::ShTabPlus));
        assert!(is_member(&t("[3|13|113]/[11|2]"), FamilyId::SetDecTabStar));
        assert!(!is_member(&t("[3|13|113]/[11|2]"), FamilyId::SetDecTab));
    }

    #[test]
    fn shifted_rules() {
        // primed letters may repeat down a column, unprimed along a row
        assert!(is_member(&t("[1|2'|3']/[2|3']"), FamilyId::ShTab));
        assert!(is_member(&t("[1|2'|2]/[2]"), FamilyId::ShTab));
        assert!(!is_member(&t("[1|2'|2']"), FamilyId::ShTab));
        assert!(!is_member(&t("[1|2|2]/[2|3]"), FamilyId::ShTab));
        assert!(is_member(&t("[1|2|2]/[3|3]"), FamilyId::ShTab));
        assert!(!is_member(&t("[1|3|2]"), FamilyId::ShTab));
    }

    #[test]
    fn factored_check_matches_distributions() {
        let cases = [
            "[3|13|123]/[1|2]",
            "[4|123|234]/[1|3]",
            "[4|12|234]/[1|23]",
            "[34|1|3]/[1|2]",
            "[12|1]",
            "[1|12]",
            "[2|12]/[1]",
            "[23|1|2]/[1|3]",
            "[34|23|2|23]/[2|1]/[1]",
        ];
        for s in cases {
            let tab = t(s);
            let literal = distributions(&tab)
                .iter()
                .all(|d| is_decomposition_tableau(d, DecompositionMode::Definitional).unwrap());
            assert_eq!(is_member(&tab, FamilyId::SetDecTab), literal, "{s}");
        }
    }

    #[test]
    fn family_names_round_trip() {
        for f in FamilyId::ALL {
            assert_eq!(f.name().parse::<FamilyId>().unwrap(), f);
        }
        assert_eq!("SetShTabPlus".parse::<FamilyId>().unwrap(), FamilyId::SetShTabPlus);
        assert_eq!("set_dec_tab_star".parse::<FamilyId>().unwrap(), FamilyId::SetDecTabStar);
        assert!("tab".parse::<FamilyId>().is_err());
    }
}
