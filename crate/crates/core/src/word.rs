//! Composition words `⊕i1 y1 ⊕i2 y2 … ⊕is ys` and the slot-content map μ*.
//!
//! Slots are 1-based everywhere in the public API.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// A nonempty sequence of `(slot, element)` steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CompositionWord {
    steps: Vec<(usize, usize)>,
}

impl CompositionWord {
    /// Validates slots against `arity` and elements against `size`.
    pub fn new(steps: Vec<(usize, usize)>, arity: usize, size: usize) -> Result<Self> {
        if steps.is_empty() {
            return input("composition words must be nonempty");
        }
        for &(slot, y) in &steps {
            if slot == 0 || slot > arity {
                return input(format!("slot {slot} outside 1..={arity}"));
            }
            if y >= size {
                return input(format!("element {y} outside carrier of size {size}"));
            }
        }
        Ok(CompositionWord { steps })
    }

    /// No validation; for words grown step by step from valid pieces.
    pub(crate) fn from_steps_unchecked(steps: Vec<(usize, usize)>) -> Self {
        CompositionWord { steps }
    }

    pub fn steps(&self) -> &[(usize, usize)] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// This word followed by `⊕slot y`.
    pub fn extended(&self, slot: usize, y: usize) -> Self {
        let mut steps = self.steps.clone();
        steps.push((slot, y));
        CompositionWord { steps }
    }

    /// Whether every slot `1..=arity` occurs.
    pub fn is_slot_complete(&self, arity: usize) -> bool {
        (1..=arity).all(|i| self.steps.iter().any(|&(s, _)| s == i))
    }
}

impl fmt::Display for CompositionWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|(s, y)| format!("⊕{s}:{y}")).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// An entry of `G* = G ∪ {e1, …, en}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Coord {
    /// A carrier (or base-set) element.
    #[serde(rename = "g")]
    Elem(usize),
    /// The adjoined unit `e_slot` (1-based), standing for "slot untouched".
    #[serde(rename = "e")]
    Unit(usize),
}

impl Coord {
    pub fn elem(self) -> Option<usize> {
        match self {
            Coord::Elem(g) => Some(g),
            Coord::Unit(_) => None,
        }
    }
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coord::Elem(g) => write!(f, "{g}"),
            Coord::Unit(i) => write!(f, "e{i}"),
        }
    }
}

/// μ-tuple of a word computed step by step.
///
/// Appending `⊕j y` sends an occupied entry `v` to `op(v, j, y)`, fills the
/// empty entry `j` with `y`, and leaves the other empty entries empty.
/// `None` is the empty symbol.
pub fn mu_incremental<T: Clone>(arity: usize, steps: &[(usize, T)], op: impl Fn(&T, usize, &T) -> T) -> Vec<Option<T>> {
    let mut entries: Vec<Option<T>> = vec![None; arity];
    for (slot, y) in steps {
        for (i, entry) in entries.iter_mut().enumerate() {
            *entry = match entry.take() {
                Some(v) => Some(op(&v, *slot, y)),
                None if i + 1 == *slot => Some(y.clone()),
                None => None,
            };
        }
    }
    entries
}

/// μ-tuple of a word from the closed form: entry `i` is the element at the
/// first occurrence of slot `i`, composed with the rest of the word.
pub fn mu_first_occurrence<T: Clone>(
    arity: usize,
    steps: &[(usize, T)],
    op: impl Fn(&T, usize, &T) -> T,
) -> Vec<Option<T>> {
    (1..=arity)
        .map(|i| {
            let k = steps.iter().position(|(s, _)| *s == i)?;
            let head = steps[k].1.clone();
            Some(steps[k + 1..].iter().fold(head, |acc, (s, y)| op(&acc, *s, y)))
        })
        .collect()
}

/// Replaces empty entries by the matching unit, giving the μ*-tuple.
pub fn star<T>(entries: Vec<Option<T>>, wrap: impl Fn(T) -> Coord) -> Vec<Coord> {
    entries
        .into_iter()
        .enumerate()
        .map(|(i, e)| e.map_or(Coord::Unit(i + 1), &wrap))
        .collect()
}
