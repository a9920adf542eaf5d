//! Concrete partial n-place functions on a finite base set `A = {0, .., |A|-1}`.
//!
//! A function is a dense table over `A^n`, indexed mixed-radix with the
//! leftmost argument most significant. Undefined cells hold a sentinel
//! outside `[0, |A|)`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{input, Error, Result};
use crate::relation::BinRelation;
use crate::Flavor;

const UNDEFINED: u32 = u32::MAX;

/// Default bound on the size of a generated closure.
pub const DEFAULT_CLOSURE_CAP: usize = 4096;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PartialFunctionTable {
    arity: usize,
    base_size: usize,
    table: Vec<u32>,
}

fn cell_count(arity: usize, base_size: usize) -> Result<usize> {
    u32::try_from(arity)
        .ok()
        .and_then(|a| base_size.checked_pow(a))
        .filter(|&c| c <= 1 << 24)
        .ok_or_else(|| Error::Input(format!("table for arity {arity} over {base_size} points is too large")))
}

impl PartialFunctionTable {
    pub fn from_entries(arity: usize, base_size: usize, entries: &[Option<usize>]) -> Result<Self> {
        if arity == 0 || base_size == 0 {
            return input("arity and base size must be positive");
        }
        let cells = cell_count(arity, base_size)?;
        if entries.len() != cells {
            return input(format!(
                "table has {} entries, expected {base_size}^{arity} = {cells}",
                entries.len()
            ));
        }
        let mut table = Vec::with_capacity(cells);
        for (k, e) in entries.iter().enumerate() {
            match *e {
                Some(v) if v >= base_size => {
                    return input(format!("entry {k} = {v} outside base set of size {base_size}"))
                }
                Some(v) => table.push(v as u32),
                None => table.push(UNDEFINED),
            }
        }
        Ok(PartialFunctionTable {
            arity,
            base_size,
            table,
        })
    }

    /// The nowhere-defined function.
    pub fn empty(arity: usize, base_size: usize) -> Result<Self> {
        let cells = cell_count(arity, base_size)?;
        Self::from_entries(arity, base_size, &vec![None; cells])
    }

    /// `(a1, …, an) ↦ a_slot` (1-based slot).
    pub fn projection(arity: usize, base_size: usize, slot: usize) -> Result<Self> {
        if slot == 0 || slot > arity {
            return input(format!("projection slot {slot} outside 1..={arity}"));
        }
        let cells = cell_count(arity, base_size)?;
        let f = Self::from_entries(arity, base_size, &vec![Some(0); cells])?;
        let entries: Vec<Option<usize>> = (0..cells).map(|k| Some(f.decode(k)[slot - 1])).collect();
        Self::from_entries(arity, base_size, &entries)
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn base_size(&self) -> usize {
        self.base_size
    }

    pub fn cells(&self) -> usize {
        self.table.len()
    }

    /// Value at a flat cell index.
    pub fn at(&self, cell: usize) -> Option<usize> {
        match self.table[cell] {
            UNDEFINED => None,
            v => Some(v as usize),
        }
    }

    pub fn entries(&self) -> Vec<Option<usize>> {
        (0..self.cells()).map(|k| self.at(k)).collect()
    }

    pub fn encode(&self, args: &[usize]) -> usize {
        args.iter().fold(0, |acc, &a| acc * self.base_size + a)
    }

    pub fn decode(&self, mut cell: usize) -> Vec<usize> {
        let mut args = vec![0; self.arity];
        for slot in (0..self.arity).rev() {
            args[slot] = cell % self.base_size;
            cell /= self.base_size;
        }
        args
    }

    pub fn evaluate(&self, args: &[usize]) -> Result<Option<usize>> {
        if args.len() != self.arity {
            return input(format!("expected {} arguments, got {}", self.arity, args.len()));
        }
        if let Some(a) = args.iter().find(|&&a| a >= self.base_size) {
            return input(format!("argument {a} outside base set of size {}", self.base_size));
        }
        Ok(self.at(self.encode(args)))
    }

    /// Whether the domain is empty.
    pub fn is_nowhere_defined(&self) -> bool {
        self.table.iter().all(|&v| v == UNDEFINED)
    }

    /// Domain as a bitset over cells.
    pub fn domain(&self) -> Vec<u64> {
        let mut bits = vec![0u64; self.cells().div_ceil(64)];
        for (k, &v) in self.table.iter().enumerate() {
            if v != UNDEFINED {
                bits[k / 64] |= 1 << (k % 64);
            }
        }
        bits
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity || self.base_size != other.base_size {
            return input(format!(
                "shape mismatch: arity {} over {} points vs arity {} over {} points",
                self.arity, self.base_size, other.arity, other.base_size
            ));
        }
        Ok(())
    }
}

impl fmt::Debug for PartialFunctionTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = (0..self.cells())
            .map(|k| self.at(k).map_or("-".to_string(), |v| v.to_string()))
            .collect();
        write!(f, "[{}]", cells.join(","))
    }
}

/// `f[g1 … gn]`: defined at `ā` iff every `gi(ā)` is defined and `f` is
/// defined at the resulting tuple.
pub fn superpose(f: &PartialFunctionTable, gs: &[PartialFunctionTable]) -> Result<PartialFunctionTable> {
    if gs.len() != f.arity {
        return input(format!(
            "superposition needs {} inner functions, got {}",
            f.arity,
            gs.len()
        ));
    }
    for g in gs {
        f.same_shape(g)?;
    }
    let mut inner = vec![0usize; f.arity];
    let table = (0..f.cells())
        .map(|cell| {
            for (slot, g) in gs.iter().enumerate() {
                match g.table[cell] {
                    UNDEFINED => return UNDEFINED,
                    v => inner[slot] = v as usize,
                }
            }
            f.table[f.encode(&inner)]
        })
        .collect();
    Ok(PartialFunctionTable {
        arity: f.arity,
        base_size: f.base_size,
        table,
    })
}

/// `f ⊕slot g`: substitutes `g(ā)` into argument `slot` (1-based) of `f`.
pub fn mann_compose(f: &PartialFunctionTable, g: &PartialFunctionTable, slot: usize) -> Result<PartialFunctionTable> {
    f.same_shape(g)?;
    if slot == 0 || slot > f.arity {
        return input(format!("slot {slot} outside 1..={}", f.arity));
    }
    let stride = f.base_size.pow((f.arity - slot) as u32);
    let table = (0..f.cells())
        .map(|cell| match g.table[cell] {
            UNDEFINED => UNDEFINED,
            v => {
                let current = cell / stride % f.base_size;
                let target = cell - current * stride + v as usize * stride;
                f.table[target]
            }
        })
        .collect();
    Ok(PartialFunctionTable {
        arity: f.arity,
        base_size: f.base_size,
        table,
    })
}

/// A duplicate-free ordered set of functions of one shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConcreteAlgebra {
    arity: usize,
    base_size: usize,
    flavor: Flavor,
    functions: Vec<PartialFunctionTable>,
}

impl ConcreteAlgebra {
    /// Checks shapes and duplicates. Closure is not enforced here; see
    /// [`ConcreteAlgebra::closure_violation`].
    pub fn new(arity: usize, base_size: usize, flavor: Flavor, functions: Vec<PartialFunctionTable>) -> Result<Self> {
        if arity == 0 || base_size == 0 {
            return input("arity and base size must be positive");
        }
        let mut seen = HashMap::new();
        for (k, f) in functions.iter().enumerate() {
            if f.arity != arity || f.base_size != base_size {
                return input(format!(
                    "function {k} has arity {} over {} points, expected arity {arity} over {base_size}",
                    f.arity, f.base_size
                ));
            }
            if let Some(prev) = seen.insert(f, k) {
                return input(format!("functions {prev} and {k} are equal"));
            }
        }
        Ok(ConcreteAlgebra {
            arity,
            base_size,
            flavor,
            functions,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn base_size(&self) -> usize {
        self.base_size
    }

    pub fn flavor(&self) -> Flavor {
        self.flavor
    }

    pub fn functions(&self) -> &[PartialFunctionTable] {
        &self.functions
    }

    pub fn len(&self) -> usize {
        self.functions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.functions.is_empty()
    }

    pub fn position(&self, f: &PartialFunctionTable) -> Option<usize> {
        self.functions.iter().position(|g| g == f)
    }

    /// First composite (in enumeration order) that falls outside the set,
    /// described for error messages.
    pub fn closure_violation(&self) -> Option<String> {
        let index: HashMap<&PartialFunctionTable, usize> =
            self.functions.iter().enumerate().map(|(k, f)| (f, k)).collect();
        let len = self.len();
        for a in 0..len {
            for b in 0..len {
                for slot in 1..=self.arity {
                    let r = mann_compose(&self.functions[a], &self.functions[b], slot).expect("same shape");
                    if !index.contains_key(&r) {
                        return Some(format!("f{a} ⊕{slot} f{b} = {r:?}"));
                    }
                }
            }
        }
        if self.flavor == Flavor::Menger {
            let mut found = None;
            for_each_tuple(len, self.arity + 1, |t| {
                let gs: Vec<_> = t[1..].iter().map(|&k| self.functions[k].clone()).collect();
                let r = superpose(&self.functions[t[0]], &gs).expect("same shape");
                if !index.contains_key(&r) {
                    found = Some(format!("f{}[{}] = {r:?}", t[0], fmt_indices(&t[1..])));
                    return false;
                }
                true
            })?;
            return found;
        }
        None
    }
}

fn fmt_indices(ks: &[usize]) -> String {
    ks.iter().map(|k| format!("f{k}")).collect::<Vec<_>>().join(" ")
}

/// Calls `visit` on every tuple in `{0..len}^width` in lexicographic order
/// until it returns `false`. Returns `None` when stopped early.
pub(crate) fn for_each_tuple(len: usize, width: usize, mut visit: impl FnMut(&[usize]) -> bool) -> Option<()> {
    if len == 0 && width > 0 {
        return Some(());
    }
    let mut t = vec![0usize; width];
    loop {
        if !visit(&t) {
            return None;
        }
        let mut k = width;
        loop {
            if k == 0 {
                return Some(());
            }
            k -= 1;
            t[k] += 1;
            if t[k] < len {
                break;
            }
            t[k] = 0;
        }
    }
}

/// Least superset of `generators` closed under the Mann compositions (and
/// superposition for the Menger flavor). Elements appear in the order a
/// round-by-round breadth-first closure first produces them.
pub fn close_under_operations(
    arity: usize,
    base_size: usize,
    generators: &[PartialFunctionTable],
    flavor: Flavor,
    cap: usize,
) -> Result<ConcreteAlgebra> {
    let mut elems: Vec<PartialFunctionTable> = Vec::new();
    let mut index: HashMap<PartialFunctionTable, usize> = HashMap::new();
    let mut push = |f: PartialFunctionTable, elems: &mut Vec<PartialFunctionTable>| -> Result<()> {
        if index.contains_key(&f) {
            return Ok(());
        }
        index.insert(f.clone(), elems.len());
        elems.push(f);
        if elems.len() > cap {
            return Err(Error::Capacity {
                what: "function closure",
                cap,
                reached: elems.len(),
            });
        }
        Ok(())
    };
    for g in generators {
        if g.arity != arity || g.base_size != base_size {
            return input("generators must share arity and base size");
        }
        push(g.clone(), &mut elems)?;
    }

    let mut frontier = 0;
    while frontier < elems.len() {
        let len = elems.len();
        let mut fresh = Vec::new();
        for a in 0..len {
            for b in 0..len {
                if a < frontier && b < frontier {
                    continue;
                }
                for slot in 1..=arity {
                    fresh.push(mann_compose(&elems[a], &elems[b], slot)?);
                }
            }
        }
        for f in fresh.drain(..) {
            push(f, &mut elems)?;
        }
        if flavor == Flavor::Menger {
            let snapshot = elems[..len].to_vec();
            let mut err = None;
            for_each_tuple(len, arity + 1, |t| {
                if t.iter().all(|&k| k < frontier) {
                    return true;
                }
                let gs: Vec<_> = t[1..].iter().map(|&k| snapshot[k].clone()).collect();
                match superpose(&snapshot[t[0]], &gs).and_then(|r| push(r, &mut elems)) {
                    Ok(()) => true,
                    Err(e) => {
                        err = Some(e);
                        false
                    }
                }
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
        frontier = len;
    }
    ConcreteAlgebra::new(arity, base_size, flavor, elems)
}

/// `(χ, γ, π)` of a set of functions: domain inclusion, domain overlap,
/// domain equality.
pub fn concrete_projection_relations(alg: &ConcreteAlgebra) -> (BinRelation, BinRelation, BinRelation) {
    let domains: Vec<Vec<u64>> = alg.functions.iter().map(|f| f.domain()).collect();
    let m = domains.len();
    let subset = |a: &[u64], b: &[u64]| a.iter().zip(b).all(|(x, y)| x & !y == 0);
    let meets = |a: &[u64], b: &[u64]| a.iter().zip(b).any(|(x, y)| x & y != 0);
    let chi = BinRelation::from_fn(m, |f, g| subset(&domains[f], &domains[g]));
    let gamma = BinRelation::from_fn(m, |f, g| meets(&domains[f], &domains[g]));
    let pi = BinRelation::from_fn(m, |f, g| domains[f] == domains[g]);
    (chi, gamma, pi)
}
