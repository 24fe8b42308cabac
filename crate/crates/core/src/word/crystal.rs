use std::fmt;
use std::hash::Hash;

/// Integer weight vector of length `n`.
pub type Weight = Vec<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Raise,
    Lower,
}

/// An operator index: `Bar` is the queer index 1̄, `Index(i)` is `i ∈ [n−1]`.
/// In square-root modes the same labels name the primed operators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Bar,
    Index(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Bar => f.write_str("1bar"),
            Label::Index(i) => write!(f, "{i}"),
        }
    }
}

/// Which operator family a crystal carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Gl,
    Queer,
    SqrtGl,
    SqrtQueer,
}

impl Mode {
    pub fn is_queer(self) -> bool {
        matches!(self, Mode::Queer | Mode::SqrtQueer)
    }

    pub fn is_sqrt(self) -> bool {
        matches!(self, Mode::SqrtGl | Mode::SqrtQueer)
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Gl => "gl",
            Mode::Queer => "q",
            Mode::SqrtGl => "sqrt_gl",
            Mode::SqrtQueer => "sqrt_q",
        }
    }
}

/// Longest string any operator is iterated along before giving up.
const STRING_CAP: usize = 1 << 16;

/// A set with a weight map and partial raising and lowering operators.
///
/// `None` plays the role of the zero element. In square-root modes `raise`
/// and `lower` are the primed operators, and `epsilon`/`phi` are the primed
/// string lengths.
pub trait Crystal {
    type Elem: Clone + Eq + Hash + Ord + fmt::Debug;

    /// The `n` of `gl_n` or `q_n`.
    fn rank(&self) -> usize;

    fn mode(&self) -> Mode;

    fn weight(&self, b: &Self::Elem) -> Weight;

    fn raise(&self, b: &Self::Elem, label: Label) -> Option<Self::Elem>;

    fn lower(&self, b: &Self::Elem, label: Label) -> Option<Self::Elem>;

    /// Stable text form, used for sorting and display.
    fn key(&self, b: &Self::Elem) -> String;

    /// Operator labels: `1̄` first in queer modes, then `1..n−1`.
    fn labels(&self) -> Vec<Label> {
        let mut out = Vec::new();
        if self.mode().is_queer() {
            out.push(Label::Bar);
        }
        out.extend((1..self.rank()).map(Label::Index));
        out
    }

    fn apply(&self, b: &Self::Elem, label: Label, dir: Direction) -> Option<Self::Elem> {
        match dir {
            Direction::Raise => self.raise(b, label),
            Direction::Lower => self.lower(b, label),
        }
    }

    /// Number of times `label` can be applied in direction `dir`.
    fn string_length(&self, b: &Self::Elem, label: Label, dir: Direction) -> usize {
        let mut cur = b.clone();
        for k in 0..STRING_CAP {
            match self.apply(&cur, label, dir) {
                Some(next) => cur = next,
                None => return k,
            }
        }
        panic!("{dir:?} string for label {label} at {} exceeds {STRING_CAP}", self.key(b));
    }

    fn epsilon(&self, b: &Self::Elem, label: Label) -> usize {
        self.string_length(b, label, Direction::Raise)
    }

    fn phi(&self, b: &Self::Elem, label: Label) -> usize {
        self.string_length(b, label, Direction::Lower)
    }
}

/// Lets a borrowed crystal be a tensor factor.
impl<C: Crystal + ?Sized> Crystal for &C {
    type Elem = C::Elem;

    fn rank(&self) -> usize {
        (**self).rank()
    }

    fn mode(&self) -> Mode {
        (**self).mode()
    }

    fn weight(&self, b: &C::Elem) -> Weight {
        (**self).weight(b)
    }

    fn raise(&self, b: &C::Elem, label: Label) -> Option<C::Elem> {
        (**self).raise(b, label)
    }

    fn lower(&self, b: &C::Elem, label: Label) -> Option<C::Elem> {
        (**self).lower(b, label)
    }

    fn key(&self, b: &C::Elem) -> String {
        (**self).key(b)
    }
}

/// The involution reversing the `i`-string (or double `i`-string) through `b`.
pub fn sigma<C: Crystal + ?Sized>(c: &C, b: &C::Elem, i: usize) -> C::Elem {
    let label = Label::Index(i);
    let (eps, phi) = (c.epsilon(b, label), c.phi(b, label));
    let (dir, steps) = if phi >= eps { (Direction::Lower, phi - eps) } else { (Direction::Raise, eps - phi) };
    let mut cur = b.clone();
    for _ in 0..steps {
        cur = c.apply(&cur, label, dir).expect("string is long enough");
    }
    cur
}

/// The queer operator for index `ī`, obtained from `1̄` by conjugating with
/// the reflections `σ_1, …, σ_i`. For `i = 1` this is the `Bar` operator.
///
/// Raising applies `σ_{i−1}, σ_i, σ_{i−2}, σ_{i−1}, …, σ_1, σ_2`, then the
/// `Bar` operator, then the same reflections in reverse order.
pub fn composite_queer_op<C: Crystal + ?Sized>(c: &C, b: &C::Elem, i: usize, dir: Direction) -> Option<C::Elem> {
    let mut chain = Vec::new();
    for k in (1..i).rev() {
        chain.push(k);
        chain.push(k + 1);
    }
    let mut cur = b.clone();
    for &k in &chain {
        cur = sigma(c, &cur, k);
    }
    let mut cur = c.apply(&cur, Label::Bar, dir)?;
    for &k in chain.iter().rev() {
        cur = sigma(c, &cur, k);
    }
    Some(cur)
}
