//! The square-root crystal on set-valued decomposition tableaux: linked
//! words and their forms, the operators `e′_i`, `f′_i`, `ē′₁`, `f̄′₁`, the
//! string reversals `σ′_i`, and the highest tableau of a shape.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{CrystalError, TableauError};
use crate::tableau::{enumerate_family, is_member, Entry, FamilyId, SetTableau, Square, StrictPartition};
use crate::word::{composite_queer_op, sigma, Crystal, Direction, Label, Mode, Weight};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TokenKind {
    /// `)`: the cell holds `i` (alone, or as the start of `)-(`).
    Close,
    /// `-`: joins the two halves of a cell holding both `i` and `i+1`.
    Dash,
    /// `(`: the cell holds `i+1`.
    Open,
}

impl TokenKind {
    fn symbol(self) -> char {
        match self {
            TokenKind::Close => ')',
            TokenKind::Dash => '-',
            TokenKind::Open => '(',
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Token {
    pub kind: TokenKind,
    /// Row-major index of the source cell.
    pub cell: usize,
    pub square: Square,
}

/// The linked `i`-word of a tableau.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkedWord {
    pub i: u32,
    pub tokens: Vec<Token>,
}

impl LinkedWord {
    pub fn kinds(&self) -> Vec<TokenKind> {
        self.tokens.iter().map(|t| t.kind).collect()
    }
}

impl fmt::Display for LinkedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.tokens.iter().try_for_each(|t| write!(f, "{}", t.kind.symbol()))
    }
}

/// Parses a string over `)`, `-`, `(`.
pub fn parse_linked(s: &str) -> Result<Vec<TokenKind>, TableauError> {
    s.chars()
        .enumerate()
        .map(|(k, c)| match c {
            ')' => Ok(TokenKind::Close),
            '-' => Ok(TokenKind::Dash),
            '(' => Ok(TokenKind::Open),
            _ => Err(TableauError::Parse { position: format!("character {k}"), message: format!("unexpected {c:?}") }),
        })
        .collect()
}

/// Scans cells in reverse row reading order, writing `)` for a cell with `i`
/// only, `(` for `i+1` only and `)-(` for both.
pub fn linked_word(t: &SetTableau, i: u32) -> LinkedWord {
    let (lo, hi) = (Entry::unprimed(i), Entry::unprimed(i + 1));
    let mut tokens = Vec::new();
    for cell in t.reverse_reading_order() {
        let square = t.square_of(cell);
        let push = |tokens: &mut Vec<Token>, kind| tokens.push(Token { kind, cell, square });
        match (t.contains(cell, lo), t.contains(cell, hi)) {
            (true, true) => {
                push(&mut tokens, TokenKind::Close);
                push(&mut tokens, TokenKind::Dash);
                push(&mut tokens, TokenKind::Open);
            }
            (true, false) => push(&mut tokens, TokenKind::Close),
            (false, true) => push(&mut tokens, TokenKind::Open),
            (false, false) => {}
        }
    }
    LinkedWord { i, tokens }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormKind {
    Null,
    /// Ends with an unpaired `(`.
    Left,
    /// Starts with an unpaired `)`.
    Right,
    /// Both.
    Combined,
}

/// An equivalence class of a linked word: the token range `start..end`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FormClass {
    pub start: usize,
    pub end: usize,
    pub kind: FormKind,
}

/// Splits a linked word into its equivalence classes. A matched pair of
/// parentheses (dashes ignored) joins everything between them, and each
/// `)-(` is joined.
pub fn classify_forms(kinds: &[TokenKind]) -> Vec<FormClass> {
    let mut paired = vec![false; kinds.len()];
    // reach[k]: furthest token joined to k by an interval starting at k
    let mut reach: Vec<usize> = (0..kinds.len()).collect();
    let mut stack = Vec::new();
    for (k, kind) in kinds.iter().enumerate() {
        match kind {
            TokenKind::Open => stack.push(k),
            TokenKind::Close => {
                if let Some(o) = stack.pop() {
                    paired[o] = true;
                    paired[k] = true;
                    reach[o] = reach[o].max(k);
                }
            }
            TokenKind::Dash => reach[k - 1] = reach[k - 1].max(k + 1),
        }
    }
    let mut out = Vec::new();
    let mut start = 0;
    while start < kinds.len() {
        let mut end = reach[start];
        let mut k = start;
        while k <= end {
            end = end.max(reach[k]);
            k += 1;
        }
        let right = kinds[start] == TokenKind::Close && !paired[start];
        let left = kinds[end] == TokenKind::Open && !paired[end];
        let kind = match (left, right) {
            (false, false) => FormKind::Null,
            (true, false) => FormKind::Left,
            (false, true) => FormKind::Right,
            (true, true) => FormKind::Combined,
        };
        out.push(FormClass { start, end: end + 1, kind });
        start = end + 1;
    }
    out
}

/// `ε′_i` and `φ′_i` read off the forms.
pub fn sqrt_string_lengths(t: &SetTableau, i: u32) -> (usize, usize) {
    let forms = classify_forms(&linked_word(t, i).kinds());
    let count = |k| forms.iter().filter(|f| f.kind == k).count();
    let comb = count(FormKind::Combined);
    (2 * count(FormKind::Left) + comb, 2 * count(FormKind::Right) + comb)
}

/// `e′_i` or `f′_i` on a member of `SetDecTab(λ)`.
pub fn sqrt_op(t: &SetTableau, i: usize, dir: Direction) -> Result<Option<SetTableau>, CrystalError> {
    if !is_member(t, FamilyId::SetDecTab) {
        return Err(CrystalError::NotMember("SetDecTab"));
    }
    if i == 0 {
        return Err(CrystalError::BadIndex { index: 0, n: t.max_value() as usize });
    }
    Ok(sqrt_op_unchecked(t, i as u32, dir))
}

pub(crate) fn sqrt_op_unchecked(t: &SetTableau, i: u32, dir: Direction) -> Option<SetTableau> {
    let lw = linked_word(t, i);
    let forms = classify_forms(&lw.kinds());
    let combined = forms.iter().find(|f| f.kind == FormKind::Combined);
    let (lo, hi) = (Entry::unprimed(i), Entry::unprimed(i + 1));
    let mut out = t.clone();
    match (dir, combined) {
        (Direction::Raise, Some(c)) => {
            out.remove(lw.tokens[c.end - 1].cell, hi);
        }
        (Direction::Lower, Some(c)) => {
            out.remove(lw.tokens[c.start].cell, lo);
        }
        (Direction::Raise, None) => {
            let left = forms.iter().find(|f| f.kind == FormKind::Left)?;
            out.insert(lw.tokens[left.start].cell, lo);
        }
        (Direction::Lower, None) => {
            let right = forms.iter().rev().find(|f| f.kind == FormKind::Right)?;
            out.insert(lw.tokens[right.end - 1].cell, hi);
        }
    }
    debug_assert!(is_member(&out, FamilyId::SetDecTab), "{t} -> {out}");
    Some(out)
}

/// `ē′₁` or `f̄′₁`: acts on the first cell in reverse reading order that
/// holds `1` or `2`.
pub fn sqrt_queer_op(t: &SetTableau, dir: Direction) -> Result<Option<SetTableau>, CrystalError> {
    if !is_member(t, FamilyId::SetDecTab) {
        return Err(CrystalError::NotMember("SetDecTab"));
    }
    Ok(sqrt_queer_unchecked(t, dir))
}

pub(crate) fn sqrt_queer_unchecked(t: &SetTableau, dir: Direction) -> Option<SetTableau> {
    let (one, two) = (Entry::unprimed(1), Entry::unprimed(2));
    let cell = t
        .reverse_reading_order()
        .into_iter()
        .find(|&c| t.contains(c, one) || t.contains(c, two))?;
    let mut out = t.clone();
    match (dir, t.contains(cell, one), t.contains(cell, two)) {
        (Direction::Raise, false, true) => out.insert(cell, one),
        (Direction::Raise, true, true) => {
            out.remove(cell, two);
        }
        (Direction::Lower, true, false) => out.insert(cell, two),
        (Direction::Lower, true, true) => {
            out.remove(cell, one);
        }
        _ => return None,
    }
    Some(out)
}

/// The square-root queer crystal on `SetDecTab_n(λ)`.
#[derive(Clone, Debug)]
pub struct SqrtCrystal {
    pub n: usize,
    pub shape: StrictPartition,
}

impl SqrtCrystal {
    pub fn new(shape: StrictPartition, n: usize) -> Self {
        SqrtCrystal { n, shape }
    }

    /// The whole (finite) crystal: every cell is a subset of `[n]`.
    pub fn elements(&self) -> Vec<SetTableau> {
        self.elements_up_to(self.n * self.shape.size())
    }

    pub fn elements_up_to(&self, max_degree: usize) -> Vec<SetTableau> {
        enumerate_family(FamilyId::SetDecTab, &self.shape, self.n as u32, max_degree)
    }

    fn op(&self, t: &SetTableau, label: Label, dir: Direction) -> Option<SetTableau> {
        let out = match label {
            Label::Bar => sqrt_queer_unchecked(t, dir)?,
            Label::Index(i) if i >= 1 && i < self.n => sqrt_op_unchecked(t, i as u32, dir)?,
            Label::Index(_) => return None,
        };
        (out.max_value() as usize <= self.n).then_some(out)
    }
}

impl Crystal for SqrtCrystal {
    type Elem = SetTableau;

    fn rank(&self) -> usize {
        self.n
    }

    fn mode(&self) -> Mode {
        Mode::SqrtQueer
    }

    fn weight(&self, b: &SetTableau) -> Weight {
        b.content(self.n).into_iter().map(i64::from).collect()
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

/// `σ′_i`: reverses the double `i`-string through `t`.
pub fn sigma_prime(t: &SetTableau, n: usize, i: usize) -> Result<SetTableau, CrystalError> {
    if i == 0 || i >= n {
        return Err(CrystalError::BadIndex { index: i, n });
    }
    Ok(sigma(&SqrtCrystal::new(t.shape().clone(), n), t, i))
}

/// `e′_ī` or `f′_ī` for `1 ≤ i ≤ n−1`, by conjugating `ē′₁` or `f̄′₁`
/// with string reversals.
pub fn sqrt_queer_i_op(t: &SetTableau, n: usize, i: usize, dir: Direction) -> Result<Option<SetTableau>, CrystalError> {
    if i == 0 || i >= n {
        return Err(CrystalError::BadIndex { index: i, n });
    }
    if !is_member(t, FamilyId::SetDecTab) {
        return Err(CrystalError::NotMember("SetDecTab"));
    }
    Ok(composite_queer_op(&SqrtCrystal::new(t.shape().clone(), n), t, i, dir))
}

/// True iff every `e′_i` and `e′_ī`, `i ∈ [n−1]`, is zero on `t`.
pub fn is_sqrt_highest(t: &SetTableau, n: usize) -> bool {
    let c = SqrtCrystal::new(t.shape().clone(), n);
    (1..n).all(|i| {
        c.raise(t, Label::Index(i)).is_none() && composite_queer_op(&c, t, i, Direction::Raise).is_none()
    })
}

/// Successive border strips: each is the first border strip of what remains
/// after removing the previous ones.
pub fn border_strips(shape: &StrictPartition) -> Vec<Vec<Square>> {
    let mut remaining: BTreeSet<Square> = shape.squares().into_iter().collect();
    let mut strips = Vec::new();
    while !remaining.is_empty() {
        let last_col = remaining.iter().filter(|s| s.row == 1).map(|s| s.col).max().expect("row 1 is nonempty");
        let mut cur = Square::new(1, last_col);
        let mut strip = vec![cur];
        while !cur.is_diagonal() {
            let up = Square::new(cur.row + 1, cur.col);
            cur = if remaining.contains(&up) { up } else { Square::new(cur.row, cur.col - 1) };
            strip.push(cur);
        }
        for s in &strip {
            remaining.remove(s);
        }
        strips.push(strip);
    }
    strips
}

/// Fills the `k`-th border strip with `k`.
pub fn t_highest(shape: &StrictPartition) -> SetTableau {
    let squares = shape.squares();
    let mut values = vec![0u32; squares.len()];
    for (k, strip) in border_strips(shape).iter().enumerate() {
        for s in strip {
            let idx = squares.iter().position(|q| q == s).expect("strip squares lie in the shape");
            values[idx] = k as u32 + 1;
        }
    }
    let cells = values.into_iter().map(|v| vec![Entry::unprimed(v)]).collect();
    SetTableau::new(shape.clone(), cells, false).expect("every square is filled")
}

/// The crystal whose operators are the squares of another's.
#[derive(Clone, Debug)]
pub struct Squared<C>(pub C);

impl<C: Crystal> Crystal for Squared<C> {
    type Elem = C::Elem;

    fn rank(&self) -> usize {
        self.0.rank()
    }

    fn mode(&self) -> Mode {
        match self.0.mode() {
            Mode::SqrtGl | Mode::Gl => Mode::Gl,
            Mode::SqrtQueer | Mode::Queer => Mode::Queer,
        }
    }

    fn weight(&self, b: &C::Elem) -> Weight {
        self.0.weight(b)
    }

    fn raise(&self, b: &C::Elem, label: Label) -> Option<C::Elem> {
        self.0.raise(&self.0.raise(b, label)?, label)
    }

    fn lower(&self, b: &C::Elem, label: Label) -> Option<C::Elem> {
        self.0.lower(&self.0.lower(b, label)?, label)
    }

    fn key(&self, b: &C::Elem) -> String {
        self.0.key(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Direction::*;

    fn t(s: &str) -> SetTableau {
        SetTableau::from_compact(s).unwrap()
    }

    fn shape(p: &[u32]) -> StrictPartition {
        StrictPartition::new(p.to_vec()).unwrap()
    }

    fn show(kinds: &[TokenKind], c: &FormClass) -> String {
        kinds[c.start..c.end].iter().map(|k| k.symbol()).collect()
    }

    #[test]
    fn linked_words_of_example() {
        let x = t("[34|23|2|23]/[2|1]/[1]");
        assert_eq!(linked_word(&x, 1).to_string(), "((()()");
        assert_eq!(linked_word(&x, 2).to_string(), ")-())-(()");
        assert_eq!(linked_word(&x, 3).to_string(), ")))-(");
    }

    #[test]
    fn forms_of_example() {
        let kinds = parse_linked("))-(())-())-(()-(").unwrap();
        let forms = classify_forms(&kinds);
        let shown: Vec<(String, FormKind)> = forms.iter().map(|c| (show(&kinds, c), c.kind)).collect();
        assert_eq!(
            shown,
            vec![
                (")".to_string(), FormKind::Right),
                (")-(())-()".to_string(), FormKind::Right),
                (")-(".to_string(), FormKind::Combined),
                ("()-(".to_string(), FormKind::Left),
            ]
        );
        let null = classify_forms(&parse_linked("()").unwrap());
        assert_eq!(null, vec![FormClass { start: 0, end: 2, kind: FormKind::Null }]);
        assert!(classify_forms(&[]).is_empty());
        assert!(parse_linked("(x").is_err());
    }

    #[test]
    fn lowering_chain() {
        let chain = [
            "[34|2|2|23]/[2|1]/[1]",
            "[34|23|2|23]/[2|1]/[1]",
            "[34|3|2|23]/[2|1]/[1]",
            "[34|3|23|23]/[2|1]/[1]",
            "[34|3|23|3]/[2|1]/[1]",
        ];
        for w in chain.windows(2) {
            assert_eq!(sqrt_op(&t(w[0]), 2, Lower).unwrap(), Some(t(w[1])), "{}", w[0]);
            assert_eq!(sqrt_op(&t(w[1]), 2, Raise).unwrap(), Some(t(w[0])), "{}", w[1]);
        }
        assert_eq!(sqrt_op(&t(chain[4]), 2, Lower).unwrap(), None);
        assert_eq!(sqrt_op(&t("[2]"), 1, Lower).unwrap(), None);
    }

    #[test]
    fn queer_chain() {
        let a = t("[34|3|13|3]/[2|1]/[1]");
        let b = sqrt_queer_op(&a, Lower).unwrap().unwrap();
        assert_eq!(b.to_string(), "[34|3|123|3]/[2|1]/[1]");
        let c = sqrt_queer_op(&b, Lower).unwrap().unwrap();
        assert_eq!(c.to_string(), "[34|3|23|3]/[2|1]/[1]");

        let two = t("[2]");
        let up = sqrt_queer_op(&two, Raise).unwrap().unwrap();
        assert_eq!(up.to_string(), "[12]");
        let up2 = sqrt_queer_op(&up, Raise).unwrap().unwrap();
        assert_eq!(up2.to_string(), "[1]");
        assert_eq!(sqrt_queer_op(&up2, Raise).unwrap(), None);
    }

    #[test]
    fn string_reversal() {
        let one = t("[1]");
        assert_eq!(sqrt_string_lengths(&one, 1), (0, 2));
        assert_eq!(sigma_prime(&one, 3, 1).unwrap().to_string(), "[2]");
        let mid = t("[12]");
        assert_eq!(sigma_prime(&mid, 3, 1).unwrap(), mid);
        assert!(sigma_prime(&one, 3, 3).is_err());
    }

    #[test]
    fn highest_tableaux() {
        assert_eq!(t_highest(&shape(&[6, 4, 2, 1])).to_string(), "[4|3|2|2|1|1]/[3|2|1|1]/[2|1]/[1]");
        assert_eq!(t_highest(&shape(&[1])).to_string(), "[1]");
        assert_eq!(t_highest(&shape(&[2, 1])).to_string(), "[2|1]/[1]");
        let strips = border_strips(&shape(&[2, 1]));
        assert_eq!(strips[0], vec![Square::new(1, 2), Square::new(2, 2)]);
        assert_eq!(strips[1], vec![Square::new(1, 1)]);
        assert!(is_sqrt_highest(&t_highest(&shape(&[2])), 3));
        assert!(!is_sqrt_highest(&t("[2]"), 3));
    }

    #[test]
    fn composite_with_i_one_is_bar() {
        for x in SqrtCrystal::new(shape(&[2]), 3).elements_up_to(4) {
            for dir in [Raise, Lower] {
                assert_eq!(sqrt_queer_i_op(&x, 3, 1, dir).unwrap(), sqrt_queer_op(&x, dir).unwrap());
            }
        }
    }
}
