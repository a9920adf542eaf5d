//! Abstract finite (2,n)-semigroups and Menger (2,n)-semigroups given by
//! operation tables.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::error::{input, Error, Result};
use crate::frames::{self, FrameSet};
use crate::func::{for_each_tuple, mann_compose, superpose, ConcreteAlgebra};
use crate::lab::Deltas;
use crate::outcome::{Law, Outcome, Witness};
use crate::word::{mu_incremental, star, CompositionWord, Coord};
use crate::Flavor;

/// Largest table (in cells) an algebra may carry.
const MAX_TABLE: usize = 1 << 24;

/// Carrier `{0, .., m-1}` with `n` Mann compositions and, in the Menger
/// flavor, an (n+1)-ary superposition.
///
/// The laws are not enforced on construction; the `check_*` methods report
/// violations with witnesses. The zero is computed from the tables.
#[derive(Clone)]
pub struct AbstractAlgebra {
    arity: usize,
    size: usize,
    /// `mann[i][x * m + y] = x ⊕(i+1) y`
    mann: Vec<Vec<u32>>,
    /// `sup[g * m^n + g1 * m^(n-1) + … + gn] = g[g1 … gn]`
    sup: Option<Vec<u32>>,
    zero: Option<usize>,
    origin: Option<Arc<ConcreteAlgebra>>,
    frames: OnceLock<Result<Arc<FrameSet>>>,
    deltas: OnceLock<Result<Arc<Deltas>>>,
}

impl PartialEq for AbstractAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.arity == other.arity && self.size == other.size && self.mann == other.mann && self.sup == other.sup
    }
}

impl Eq for AbstractAlgebra {}

impl fmt::Debug for AbstractAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AbstractAlgebra")
            .field("arity", &self.arity)
            .field("size", &self.size)
            .field("flavor", &self.flavor())
            .field("zero", &self.zero)
            .field("mann", &self.mann)
            .field("sup", &self.sup)
            .finish()
    }
}

fn checked_table(name: &str, cells: usize, entries: Vec<usize>, size: usize) -> Result<Vec<u32>> {
    if entries.len() != cells {
        return input(format!("{name} has {} cells, expected {cells}", entries.len()));
    }
    entries
        .into_iter()
        .enumerate()
        .map(|(k, v)| {
            if v < size {
                Ok(v as u32)
            } else {
                input(format!("{name} cell {k} = {v} outside carrier of size {size}"))
            }
        })
        .collect()
}

impl AbstractAlgebra {
    /// `mann[i]` is the row-major `m × m` table of `⊕(i+1)`; `superposition`,
    /// when present, is the flat table indexed `g * m^n + g1 * m^(n-1) + … + gn`
    /// and makes the algebra Menger-flavored.
    pub fn from_tables(
        arity: usize,
        size: usize,
        mann: Vec<Vec<usize>>,
        superposition: Option<Vec<usize>>,
    ) -> Result<Self> {
        if arity == 0 {
            return input("arity must be positive");
        }
        if mann.len() != arity {
            return input(format!("expected {arity} mann tables, got {}", mann.len()));
        }
        let mann = mann
            .into_iter()
            .enumerate()
            .map(|(i, t)| checked_table(&format!("mann table {}", i + 1), size * size, t, size))
            .collect::<Result<Vec<_>>>()?;
        let sup = match superposition {
            None => None,
            Some(t) => {
                let cells = u32::try_from(arity + 1)
                    .ok()
                    .and_then(|e| size.checked_pow(e))
                    .filter(|&c| c <= MAX_TABLE)
                    .ok_or_else(|| Error::Input(format!("superposition table for m={size}, n={arity} is too large")))?;
                Some(checked_table("superposition table", cells, t, size)?)
            }
        };
        let mut alg = AbstractAlgebra {
            arity,
            size,
            mann,
            sup,
            zero: None,
            origin: None,
            frames: OnceLock::new(),
            deltas: OnceLock::new(),
        };
        alg.zero = alg.find_zero();
        Ok(alg)
    }

    /// Tabulates `mann(i, x, y) = x ⊕i y` (1-based `i`).
    pub fn plain_from_fn(arity: usize, size: usize, mann: impl Fn(usize, usize, usize) -> usize) -> Result<Self> {
        Self::from_tables(arity, size, mann_tables(arity, size, &mann), None)
    }

    /// Tabulates `mann(i, x, y) = x ⊕i y` and `sup(g, ḡ) = g[ḡ]`.
    pub fn menger_from_fn(
        arity: usize,
        size: usize,
        mann: impl Fn(usize, usize, usize) -> usize,
        sup: impl Fn(usize, &[usize]) -> usize,
    ) -> Result<Self> {
        let mut table = Vec::new();
        for_each_tuple(size, arity + 1, |t| {
            table.push(sup(t[0], &t[1..]));
            true
        });
        Self::from_tables(arity, size, mann_tables(arity, size, &mann), Some(table))
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn flavor(&self) -> Flavor {
        if self.sup.is_some() {
            Flavor::Menger
        } else {
            Flavor::Plain
        }
    }

    pub fn is_menger(&self) -> bool {
        self.sup.is_some()
    }

    /// The zero, if the carrier has one.
    pub fn zero(&self) -> Option<usize> {
        self.zero
    }

    /// The concrete function algebra this one was read off from, if any.
    pub fn origin(&self) -> Option<&Arc<ConcreteAlgebra>> {
        self.origin.as_ref()
    }

    /// The same carrier and Mann tables without superposition.
    pub fn as_plain(&self) -> AbstractAlgebra {
        let mut alg = AbstractAlgebra {
            arity: self.arity,
            size: self.size,
            mann: self.mann.clone(),
            sup: None,
            zero: None,
            origin: self.origin.clone(),
            frames: OnceLock::new(),
            deltas: OnceLock::new(),
        };
        // frames only depend on the Mann tables
        if let Some(f) = self.frames.get() {
            let _ = alg.frames.set(f.clone());
        }
        alg.zero = alg.find_zero();
        alg
    }

    /// `x ⊕slot y`, 1-based slot.
    #[inline]
    pub fn mann(&self, slot: usize, x: usize, y: usize) -> usize {
        self.mann[slot - 1][x * self.size + y] as usize
    }

    /// `g[args]`, or `None` for plain algebras.
    pub fn superpose(&self, g: usize, args: &[usize]) -> Option<usize> {
        debug_assert_eq!(args.len(), self.arity);
        let sup = self.sup.as_ref()?;
        let idx = args.iter().fold(g, |acc, &a| acc * self.size + a);
        Some(sup[idx] as usize)
    }

    /// Superposition on an algebra known to be Menger.
    #[inline]
    pub(crate) fn sp(&self, g: usize, args: &[usize]) -> usize {
        self.superpose(g, args).expect("superposition on a plain algebra")
    }

    /// Row-major copy of the table of `⊕slot`.
    pub fn mann_table(&self, slot: usize) -> Vec<usize> {
        self.mann[slot - 1].iter().map(|&v| v as usize).collect()
    }

    pub fn superposition_table(&self) -> Option<Vec<usize>> {
        self.sup.as_ref().map(|t| t.iter().map(|&v| v as usize).collect())
    }

    /// `((x ⊕i1 y1) ⊕i2 y2) …`
    pub fn apply_word(&self, x: usize, w: &CompositionWord) -> usize {
        self.apply_steps(x, w.steps())
    }

    pub(crate) fn apply_steps(&self, x: usize, steps: &[(usize, usize)]) -> usize {
        steps.iter().fold(x, |acc, &(slot, y)| self.mann(slot, acc, y))
    }

    /// The μ*-tuple of a word.
    pub fn mu_star(&self, w: &CompositionWord) -> Vec<Coord> {
        let mu = mu_incremental(self.arity, w.steps(), |&v, slot, &y| self.mann(slot, v, y));
        star(mu, Coord::Elem)
    }

    /// Reachable frames, computed once per algebra with the default cap.
    pub fn frames(&self) -> Result<Arc<FrameSet>> {
        self.frames
            .get_or_init(|| frames::explore(self, frames::FrameOptions::default()).map(Arc::new))
            .clone()
    }

    pub(crate) fn delta_cache(&self, compute: impl FnOnce() -> Result<Deltas>) -> Result<Arc<Deltas>> {
        self.deltas.get_or_init(|| compute().map(Arc::new)).clone()
    }

    /// Every `⊕i` associative over all `m³` triples.
    pub fn check_associativity(&self) -> Outcome {
        let m = self.size;
        for i in 1..=self.arity {
            for x in 0..m {
                for y in 0..m {
                    let xy = self.mann(i, x, y);
                    for z in 0..m {
                        let left = self.mann(i, xy, z);
                        let right = self.mann(i, x, self.mann(i, y, z));
                        if left != right {
                            return Outcome::fail(
                                Witness::new(Law::Associativity)
                                    .bind("i", i)
                                    .bind("x", x)
                                    .bind("y", y)
                                    .bind("z", z)
                                    .note(format!("(x⊕y)⊕z = {left}, x⊕(y⊕z) = {right}")),
                            );
                        }
                    }
                }
            }
        }
        Outcome::Pass
    }

    /// Superassociativity, the two Mann/superposition identities, and the
    /// word-as-superposition identity on every slot-complete reachable frame.
    pub fn check_menger_identities(&self) -> Result<Outcome> {
        if !self.is_menger() {
            return input("Menger identities need a superposition table");
        }
        let n = self.arity;
        let m = self.size;

        let mut found = None;
        // x[y1..yn][z1..zn] = x[y1[z̄] .. yn[z̄]]
        for_each_tuple(m, 2 * n + 1, |t| {
            let (x, ys, zs) = (t[0], &t[1..=n], &t[n + 1..]);
            let left = self.sp(self.sp(x, ys), zs);
            let inner: Vec<usize> = ys.iter().map(|&y| self.sp(y, zs)).collect();
            let right = self.sp(x, &inner);
            if left != right {
                found = Some(
                    Witness::new(Law::Superassociativity)
                        .bind("x", x)
                        .bind_all("y", ys)
                        .bind_all("z", zs)
                        .note(format!("left = {left}, right = {right}")),
                );
                return false;
            }
            true
        });
        if let Some(w) = found {
            return Ok(Outcome::fail(w));
        }

        for i in 1..=n {
            let mut found = None;
            // (x ⊕i y)[z̄] = x[z1 .. y[z̄] .. zn]
            for_each_tuple(m, n + 2, |t| {
                let (x, y, zs) = (t[0], t[1], &t[2..]);
                let left = self.sp(self.mann(i, x, y), zs);
                let mut args = zs.to_vec();
                args[i - 1] = self.sp(y, zs);
                let right = self.sp(x, &args);
                if left != right {
                    found = Some(
                        Witness::new(Law::MannIntoSuperposition)
                            .bind("i", i)
                            .bind("x", x)
                            .bind("y", y)
                            .bind_all("z", zs)
                            .note(format!("left = {left}, right = {right}")),
                    );
                    return false;
                }
                true
            });
            if let Some(w) = found {
                return Ok(Outcome::fail(w));
            }
        }

        for i in 1..=n {
            let mut found = None;
            // x[ȳ] ⊕i z = x[y1 ⊕i z .. yn ⊕i z]
            for_each_tuple(m, n + 2, |t| {
                let (x, ys, z) = (t[0], &t[1..=n], t[n + 1]);
                let left = self.mann(i, self.sp(x, ys), z);
                let args: Vec<usize> = ys.iter().map(|&y| self.mann(i, y, z)).collect();
                let right = self.sp(x, &args);
                if left != right {
                    found = Some(
                        Witness::new(Law::SuperpositionThroughMann)
                            .bind("i", i)
                            .bind("x", x)
                            .bind_all("y", ys)
                            .bind("z", z)
                            .note(format!("left = {left}, right = {right}")),
                    );
                    return false;
                }
                true
            });
            if let Some(w) = found {
                return Ok(Outcome::fail(w));
            }
        }

        let frames = self.frames()?;
        for frame in frames.frames() {
            let Some(args) = frame.carrier_tuple() else {
                continue;
            };
            for x in 0..m {
                let by_word = frame.action()[x];
                let by_sup = self.sp(x, &args);
                if by_word != by_sup {
                    return Ok(Outcome::fail(
                        Witness::new(Law::WordAsSuperposition)
                            .bind("x", x)
                            .word(frame.witness().clone())
                            .point(frame.mu_star().to_vec())
                            .note(format!("x·w = {by_word}, x[μ(w)] = {by_sup}")),
                    ));
                }
            }
        }
        Ok(Outcome::Pass)
    }

    /// Whether `z` absorbs every Mann composition (and superposition, in the
    /// Menger flavor) from both sides.
    pub fn is_zero(&self, z: usize) -> bool {
        let m = self.size;
        let mann_ok = (1..=self.arity).all(|i| (0..m).all(|g| self.mann(i, z, g) == z && self.mann(i, g, z) == z));
        if !mann_ok {
            return false;
        }
        if !self.is_menger() {
            return true;
        }
        for_each_tuple(m, self.arity + 1, |t| {
            let absorbs = t[0] == z || t[1..].contains(&z);
            !absorbs || self.sp(t[0], &t[1..]) == z
        })
        .is_some()
    }

    /// The zero, if any. Two zeros `z`, `z'` would give `z = z ⊕1 z' = z'`.
    pub fn find_zero(&self) -> Option<usize> {
        let zeros: Vec<usize> = (0..self.size).filter(|&z| self.is_zero(z)).collect();
        debug_assert!(zeros.len() <= 1, "two zeros {zeros:?}");
        zeros.first().copied()
    }
}

fn mann_tables(arity: usize, size: usize, mann: &impl Fn(usize, usize, usize) -> usize) -> Vec<Vec<usize>> {
    (1..=arity)
        .map(|i| (0..size * size).map(|k| mann(i, k / size, k % size)).collect())
        .collect()
}

/// Reads the operation tables off a closed concrete algebra. Element `k` of
/// the result is function `k` of the input.
pub fn abstract_from_concrete(alg: &ConcreteAlgebra) -> Result<AbstractAlgebra> {
    let fs = alg.functions();
    let index: HashMap<_, usize> = fs.iter().enumerate().map(|(k, f)| (f, k)).collect();
    let m = fs.len();
    let n = alg.arity();
    let mut mann = Vec::with_capacity(n);
    for slot in 1..=n {
        let mut table = Vec::with_capacity(m * m);
        for a in 0..m {
            for b in 0..m {
                let r = mann_compose(&fs[a], &fs[b], slot)?;
                match index.get(&r) {
                    Some(&k) => table.push(k),
                    None => return input(format!("not closed: f{a} ⊕{slot} f{b} = {r:?} is missing")),
                }
            }
        }
        mann.push(table);
    }
    let sup = match alg.flavor() {
        Flavor::Plain => None,
        Flavor::Menger => {
            let mut table = Vec::new();
            let mut missing = None;
            for_each_tuple(m, n + 1, |t| {
                let gs: Vec<_> = t[1..].iter().map(|&k| fs[k].clone()).collect();
                let r = superpose(&fs[t[0]], &gs).expect("shapes checked by ConcreteAlgebra");
                match index.get(&r) {
                    Some(&k) => {
                        table.push(k);
                        true
                    }
                    None => {
                        let args: Vec<String> = t[1..].iter().map(|k| format!("f{k}")).collect();
                        missing = Some(format!("not closed: f{}[{}] = {r:?} is missing", t[0], args.join(" ")));
                        false
                    }
                }
            });
            if let Some(msg) = missing {
                return input(msg);
            }
            Some(table)
        }
    };
    let mut out = AbstractAlgebra::from_tables(n, m, mann, sup)?;
    // the nowhere-defined function is a zero; other zeros exist only on
    // one-element carriers
    if let Some(empty) = fs.iter().position(|f| f.is_nowhere_defined()) {
        debug_assert_eq!(out.zero, Some(empty));
    }
    out.origin = Some(Arc::new(alg.clone()));
    Ok(out)
}
