use std::fmt;

/// A letter of the marked alphabet `1' < 1 < 2' < 2 < …`.
///
/// Stored as its integer code (`k' ↦ 2k−1`, `k ↦ 2k`) so that the marked
/// order is the integer order on codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry(u32);

impl Entry {
    pub const fn unprimed(value: u32) -> Self {
        Entry(2 * value)
    }

    pub const fn primed(value: u32) -> Self {
        Entry(2 * value - 1)
    }

    pub const fn new(value: u32, primed: bool) -> Self {
        if primed {
            Entry::primed(value)
        } else {
            Entry::unprimed(value)
        }
    }

    /// Inverse of [`Entry::code`]. Code 0 is not a letter.
    pub fn from_code(code: u32) -> Option<Self> {
        (code > 0).then_some(Entry(code))
    }

    pub const fn code(self) -> u32 {
        self.0
    }

    pub const fn value(self) -> u32 {
        self.0.div_ceil(2)
    }

    pub const fn is_primed(self) -> bool {
        self.0 % 2 == 1
    }
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_primed() {
            write!(f, "{}'", self.value())
        } else {
            write!(f, "{}", self.value())
        }
    }
}
