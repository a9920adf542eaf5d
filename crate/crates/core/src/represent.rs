//! Representations of abstract algebras by partial n-place functions over
//! point universes, their sums, and their projection relations.
//!
//! The canonical universe consists of n-tuples over `G* = G ∪ {e1, …, en}`:
//! all of `G^n` (Menger flavor only), the μ*-tuples of nonempty words, and
//! the all-unit tuple. A representation assigns to each carrier element a
//! partial function from universe points to carrier elements. Composition
//! substitutes a value into a coordinate and looks the resulting tuple up in
//! the same universe.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock};

use crate::algebra::AbstractAlgebra;
use crate::error::{input, Error, Result};
use crate::frames::{self, FrameOptions};
use crate::func::for_each_tuple;
use crate::lab;
use crate::outcome::{Law, Outcome, Witness};
use crate::relation::BinRelation;
use crate::word::{CompositionWord, Coord};
use crate::Flavor;

/// What a universe is built over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum UniverseKind {
    /// Extended points of an abstract algebra of the given flavor.
    Canonical { flavor: Flavor },
    /// Plain tuples over a base set `{0, .., base_size-1}`.
    Base { base_size: usize },
}

/// Why a point is in the universe.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum PointOrigin {
    /// A tuple of carrier elements.
    Carrier,
    /// The μ*-tuple of the given words, shortest first.
    Word(Vec<CompositionWord>),
    /// `(e1, …, en)`.
    Units,
    /// A tuple over a base set.
    Base,
}

#[derive(Debug)]
pub struct PointUniverse {
    kind: UniverseKind,
    arity: usize,
    points: Vec<Vec<Coord>>,
    origins: Vec<PointOrigin>,
    index: HashMap<Vec<Coord>, usize>,
    /// `substitution[(i * len + p) * values + v]` is the point obtained by
    /// writing value `v` into coordinate `i` of point `p`.
    substitution: OnceLock<Vec<Option<u32>>>,
}

impl PartialEq for PointUniverse {
    fn eq(&self, other: &Self) -> bool {
        self.kind == other.kind
            && self.arity == other.arity
            && self.points == other.points
            && self.origins == other.origins
    }
}

impl Eq for PointUniverse {}

impl Clone for PointUniverse {
    fn clone(&self) -> Self {
        PointUniverse {
            kind: self.kind,
            arity: self.arity,
            points: self.points.clone(),
            origins: self.origins.clone(),
            index: self.index.clone(),
            substitution: OnceLock::new(),
        }
    }
}

impl PointUniverse {
    /// Assembles a universe from explicit points, rejecting duplicates and
    /// malformed coordinates.
    pub fn from_points(
        kind: UniverseKind,
        arity: usize,
        points: Vec<Vec<Coord>>,
        origins: Vec<PointOrigin>,
    ) -> Result<Self> {
        if points.len() != origins.len() {
            return input("every point needs an origin");
        }
        let mut index = HashMap::with_capacity(points.len());
        for (k, p) in points.iter().enumerate() {
            if p.len() != arity {
                return input(format!("point {k} has {} coordinates, expected {arity}", p.len()));
            }
            for (i, c) in p.iter().enumerate() {
                if let Coord::Unit(u) = c {
                    if *u != i + 1 {
                        return input(format!("point {k} has unit e{u} in coordinate {}", i + 1));
                    }
                }
            }
            if index.insert(p.clone(), k).is_some() {
                return input(format!("point {k} is a duplicate"));
            }
        }
        Ok(PointUniverse {
            kind,
            arity,
            points,
            origins,
            index,
            substitution: OnceLock::new(),
        })
    }

    /// `A^n` in lexicographic order.
    pub fn base(arity: usize, base_size: usize) -> Result<Self> {
        let mut points = Vec::new();
        for_each_tuple(base_size, arity, |t| {
            points.push(t.iter().map(|&a| Coord::Elem(a)).collect());
            true
        });
        let origins = vec![PointOrigin::Base; points.len()];
        Self::from_points(UniverseKind::Base { base_size }, arity, points, origins)
    }

    pub fn kind(&self) -> UniverseKind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn points(&self) -> &[Vec<Coord>] {
        &self.points
    }

    pub fn origins(&self) -> &[PointOrigin] {
        &self.origins
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn position(&self, p: &[Coord]) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// Whether every tuple of values is a point, so superposition of the
    /// functions over this universe is always computable.
    pub fn supports_superposition(&self) -> bool {
        matches!(
            self.kind,
            UniverseKind::Canonical { flavor: Flavor::Menger } | UniverseKind::Base { .. }
        )
    }

    /// Number of distinct values functions over this universe can take.
    fn value_range(&self, carrier_size: usize) -> usize {
        match self.kind {
            UniverseKind::Canonical { .. } => carrier_size,
            UniverseKind::Base { base_size } => base_size,
        }
    }

    fn substitution_table(&self, values: usize) -> &[Option<u32>] {
        self.substitution.get_or_init(|| {
            let len = self.len();
            let mut table = vec![None; self.arity * len * values];
            for i in 0..self.arity {
                for (p, point) in self.points.iter().enumerate() {
                    let mut q = point.clone();
                    for v in 0..values {
                        q[i] = Coord::Elem(v);
                        table[(i * len + p) * values + v] = self.position(&q).map(|k| k as u32);
                    }
                }
            }
            table
        })
    }
}

/// Options for building canonical universes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniverseOptions {
    pub flavor: Flavor,
    /// Words kept per μ*-point; more than one enables the cross-witness
    /// check.
    pub witnesses_per_point: usize,
}

impl UniverseOptions {
    pub fn new(flavor: Flavor) -> Self {
        UniverseOptions {
            flavor,
            witnesses_per_point: 1,
        }
    }
}

/// The canonical universe of the algebra's own flavor.
pub fn build_universe(alg: &AbstractAlgebra) -> Result<PointUniverse> {
    build_universe_with(alg, UniverseOptions::new(alg.flavor()))
}

/// `G^n` (Menger flavor) in lexicographic order, then the μ*-tuples of
/// reachable frames in discovery order, then `(e1, …, en)`.
///
/// A μ*-tuple lying in `G^n` is the same point as that tuple; the two
/// descriptions must agree (`x·w = x[μ*(w)]`), and frames sharing a
/// μ*-tuple must share their action. Either failure is an input error
/// naming the violated law.
pub fn build_universe_with(alg: &AbstractAlgebra, opts: UniverseOptions) -> Result<PointUniverse> {
    let n = alg.arity();
    let m = alg.size();
    if opts.flavor == Flavor::Menger && !alg.is_menger() {
        return input("a Menger universe needs a superposition table");
    }
    let frames = if opts.witnesses_per_point > 1 {
        Arc::new(frames::explore(
            alg,
            FrameOptions {
                witnesses_per_frame: opts.witnesses_per_point,
                ..FrameOptions::default()
            },
        )?)
    } else {
        alg.frames()?
    };

    let mut points: Vec<Vec<Coord>> = Vec::new();
    let mut origins = Vec::new();
    if opts.flavor == Flavor::Menger {
        for_each_tuple(m, n, |t| {
            points.push(t.iter().map(|&g| Coord::Elem(g)).collect());
            origins.push(PointOrigin::Carrier);
            true
        });
    }
    let mut index: HashMap<Vec<Coord>, usize> = points.iter().cloned().enumerate().map(|(k, p)| (p, k)).collect();
    let mut actions: HashMap<usize, &[usize]> = HashMap::new();

    for frame in frames.frames() {
        let mu = frame.mu_star();
        match index.get(mu) {
            Some(&k) => {
                if let Some(prev) = actions.get(&k) {
                    if *prev != frame.action() {
                        return input(format!(
                            "two words with μ* = {mu:?} act differently; the algebra is not representable"
                        ));
                    }
                } else if let Some(args) = frame.carrier_tuple() {
                    if let Some(x) = (0..m).find(|&x| alg.sp(x, &args) != frame.action()[x]) {
                        return input(format!(
                            "x·w ≠ x[μ*(w)] at x = {x}, w = {}; the word-as-superposition identity fails",
                            frame.witness()
                        ));
                    }
                }
                actions.insert(k, frame.action());
                if let PointOrigin::Word(ws) = &mut origins[k] {
                    for w in frame.witnesses() {
                        if ws.len() < opts.witnesses_per_point && !ws.contains(w) {
                            ws.push(w.clone());
                        }
                    }
                }
            }
            None => {
                index.insert(mu.to_vec(), points.len());
                actions.insert(points.len(), frame.action());
                points.push(mu.to_vec());
                origins.push(PointOrigin::Word(frame.witnesses().to_vec()));
            }
        }
    }
    points.push((1..=n).map(Coord::Unit).collect());
    origins.push(PointOrigin::Units);
    PointUniverse::from_points(UniverseKind::Canonical { flavor: opts.flavor }, n, points, origins)
}

/// Every recorded word of every μ*-point gives the same `g·w` for all `g`.
pub fn check_cross_witness(universe: &PointUniverse, alg: &AbstractAlgebra) -> Outcome {
    for (p, origin) in universe.origins().iter().enumerate() {
        let PointOrigin::Word(ws) = origin else { continue };
        let Some((first, rest)) = ws.split_first() else {
            continue;
        };
        for w in rest {
            for g in 0..alg.size() {
                let (a, b) = (alg.apply_word(g, first), alg.apply_word(g, w));
                if a != b {
                    return Outcome::fail(
                        Witness::new(Law::SingleValued)
                            .bind("g", g)
                            .word(first.clone())
                            .word(w.clone())
                            .point(universe.points()[p].clone())
                            .note(format!("g·w1 = {a}, g·w2 = {b}")),
                    );
                }
            }
        }
    }
    Outcome::Pass
}

/// Which canonical function family to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RepMode {
    /// Defined where `h1 ⊏ value` or `h2 ⊏ value`.
    Pair(usize, usize),
    /// Defined where `a ⊏ value`; the pair mode with `h1 = h2 = a`.
    Point(usize),
}

impl RepMode {
    fn bounds(self) -> (usize, usize) {
        match self {
            RepMode::Pair(h1, h2) => (h1, h2),
            RepMode::Point(a) => (a, a),
        }
    }

    fn label(self) -> String {
        match self {
            RepMode::Pair(h1, h2) => format!("pair({h1},{h2})"),
            RepMode::Point(a) => format!("point({a})"),
        }
    }
}

/// One summand: a partial function per carrier element over one universe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentationPart {
    label: String,
    universe: Arc<PointUniverse>,
    /// `values[g][p]`
    values: Vec<Vec<Option<usize>>>,
}

impl RepresentationPart {
    pub fn new(
        label: impl Into<String>,
        universe: Arc<PointUniverse>,
        values: Vec<Vec<Option<usize>>>,
    ) -> Result<Self> {
        for (g, row) in values.iter().enumerate() {
            if row.len() != universe.len() {
                return input(format!(
                    "function of element {g} has {} values for {} points",
                    row.len(),
                    universe.len()
                ));
            }
        }
        Ok(RepresentationPart {
            label: label.into(),
            universe,
            values,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn universe(&self) -> &Arc<PointUniverse> {
        &self.universe
    }

    /// `values()[g][p]` is the value of the function of `g` at point `p`.
    pub fn values(&self) -> &[Vec<Option<usize>>] {
        &self.values
    }

    pub fn value(&self, g: usize, p: usize) -> Option<usize> {
        self.values[g][p]
    }

    fn domain(&self, g: usize) -> Vec<u64> {
        let mut bits = vec![0u64; self.universe.len().div_ceil(64)];
        for (p, v) in self.values[g].iter().enumerate() {
            if v.is_some() {
                bits[p / 64] |= 1 << (p % 64);
            }
        }
        bits
    }

    /// Replaces one value; for mutation tests.
    pub fn set_value(&mut self, g: usize, p: usize, v: Option<usize>) {
        self.values[g][p] = v;
    }
}

/// A sum of parts over pairwise disjoint (tagged) universes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Representation {
    arity: usize,
    carrier_size: usize,
    parts: Vec<RepresentationPart>,
}

impl Representation {
    pub fn new(arity: usize, carrier_size: usize, parts: Vec<RepresentationPart>) -> Result<Self> {
        for part in &parts {
            if part.universe.arity() != arity {
                return input(format!(
                    "part {} has arity {}, expected {arity}",
                    part.label,
                    part.universe.arity()
                ));
            }
            if part.values.len() != carrier_size {
                return input(format!(
                    "part {} covers {} elements, expected {carrier_size}",
                    part.label,
                    part.values.len()
                ));
            }
        }
        Ok(Representation {
            arity,
            carrier_size,
            parts,
        })
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    pub fn parts(&self) -> &[RepresentationPart] {
        &self.parts
    }

    pub fn parts_mut(&mut self) -> &mut [RepresentationPart] {
        &mut self.parts
    }

    /// Menger when every part's universe is closed under forming value
    /// tuples.
    pub fn flavor(&self) -> Flavor {
        if self.parts.iter().all(|p| p.universe.supports_superposition()) {
            Flavor::Menger
        } else {
            Flavor::Plain
        }
    }
}

/// Disjoint union of the parts of every summand.
pub fn sum_representations(reps: &[Representation]) -> Result<Representation> {
    let Some(first) = reps.first() else {
        return input("a sum needs at least one summand to fix the carrier; use Representation::new for the empty sum");
    };
    let mut parts = Vec::new();
    for rep in reps {
        if rep.carrier_size != first.carrier_size || rep.arity != first.arity {
            return input(format!(
                "summands disagree: carrier {} arity {} vs carrier {} arity {}",
                rep.carrier_size, rep.arity, first.carrier_size, first.arity
            ));
        }
        parts.extend(rep.parts.iter().cloned());
    }
    Representation::new(first.arity, first.carrier_size, parts)
}

/// `(χ_P, γ_P, π_P)`: domain inclusion in every part, domain overlap in some
/// part, domain equality in every part.
pub fn representation_relations(rep: &Representation) -> Result<(BinRelation, BinRelation, BinRelation)> {
    let m = rep.carrier_size;
    let mut chi = BinRelation::full(m);
    let mut gamma = BinRelation::empty(m);
    for part in &rep.parts {
        let domains: Vec<Vec<u64>> = (0..m).map(|g| part.domain(g)).collect();
        for a in 0..m {
            for b in 0..m {
                let (da, db) = (&domains[a], &domains[b]);
                if da.iter().zip(db).any(|(x, y)| x & !y != 0) {
                    chi.remove(a, b);
                }
                if da.iter().zip(db).any(|(x, y)| x & y != 0) {
                    gamma.insert(a, b);
                }
            }
        }
    }
    let pi = chi.kernel();
    let direct = BinRelation::from_fn(m, |a, b| rep.parts.iter().all(|p| p.domain(a) == p.domain(b)));
    if pi != direct {
        return Err(Error::Inconsistent("π_P differs from χ_P ∩ χ_P⁻¹".into()));
    }
    Ok((chi, gamma, pi))
}

/// Builds canonical parts for one algebra, flavor and χ, checking the
/// preconditions once.
#[derive(Debug, Clone)]
pub struct RepresentationBuilder<'a> {
    alg: &'a AbstractAlgebra,
    chi: BinRelation,
    universe: Arc<PointUniverse>,
    /// `raw[g][p]`: the candidate value of `g` at `p` before the domain test.
    raw: Vec<Vec<usize>>,
}

impl<'a> RepresentationBuilder<'a> {
    /// `chi` must be an l-regular, v-negative quasi-order for the requested
    /// flavor, and the algebra must satisfy the representability
    /// implication; violations are input errors.
    pub fn new(alg: &'a AbstractAlgebra, chi: &BinRelation, flavor: Flavor) -> Result<Self> {
        Self::with_options(alg, chi, UniverseOptions::new(flavor))
    }

    pub fn with_options(alg: &'a AbstractAlgebra, chi: &BinRelation, opts: UniverseOptions) -> Result<Self> {
        if chi.size() != alg.size() {
            return input(format!("chi has size {}, carrier has {}", chi.size(), alg.size()));
        }
        if opts.flavor == Flavor::Menger && !alg.is_menger() {
            return input("Menger-flavored representations need a superposition table");
        }
        if let Outcome::Fail(w) = frames::check_representability(alg)? {
            return input(format!("the algebra is not representable: {w}"));
        }
        let view;
        let checked: &AbstractAlgebra = if opts.flavor == Flavor::Plain && alg.is_menger() {
            view = alg.as_plain();
            &view
        } else {
            alg
        };
        if !chi.is_quasi_order() {
            return input("chi must be a quasi-order");
        }
        if let Outcome::Fail(w) = lab::is_l_regular(chi, checked)? {
            return input(format!("chi must be l-regular: {w}"));
        }
        if let Outcome::Fail(w) = lab::is_v_negative(chi, checked)? {
            return input(format!("chi must be v-negative: {w}"));
        }

        let universe = Arc::new(build_universe_with(alg, opts)?);
        let m = alg.size();
        let raw = (0..m)
            .map(|g| {
                universe
                    .points()
                    .iter()
                    .zip(universe.origins())
                    .map(|(point, origin)| match origin {
                        PointOrigin::Carrier => {
                            let args: Vec<usize> = point.iter().map(|c| c.elem().expect("carrier point")).collect();
                            alg.sp(g, &args)
                        }
                        PointOrigin::Word(ws) => alg.apply_word(g, &ws[0]),
                        PointOrigin::Units => g,
                        PointOrigin::Base => unreachable!("canonical universes have no base points"),
                    })
                    .collect()
            })
            .collect();
        Ok(RepresentationBuilder {
            alg,
            chi: chi.clone(),
            universe,
            raw,
        })
    }

    pub fn universe(&self) -> &Arc<PointUniverse> {
        &self.universe
    }

    pub fn part(&self, mode: RepMode) -> Result<RepresentationPart> {
        let (h1, h2) = mode.bounds();
        let m = self.alg.size();
        if h1 >= m || h2 >= m {
            return input(format!("mode {} outside carrier of size {m}", mode.label()));
        }
        let values = self
            .raw
            .iter()
            .map(|row| {
                row.iter()
                    .map(|&v| (self.chi.contains(h1, v) || self.chi.contains(h2, v)).then_some(v))
                    .collect()
            })
            .collect();
        RepresentationPart::new(mode.label(), self.universe.clone(), values)
    }

    pub fn single(&self, mode: RepMode) -> Result<Representation> {
        Representation::new(self.alg.arity(), self.alg.size(), vec![self.part(mode)?])
    }

    /// `Σ_(h1,h2)∈γ P_(h1,h2)`.
    pub fn sum_over_pairs(&self, gamma: &BinRelation) -> Result<Representation> {
        if gamma.size() != self.alg.size() {
            return input("gamma size differs from the carrier");
        }
        let parts = gamma
            .pairs()
            .map(|(h1, h2)| self.part(RepMode::Pair(h1, h2)))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.alg.arity(), self.alg.size(), parts)
    }

    /// `P0 = Σ_a P_a`.
    pub fn sum_over_points(&self) -> Result<Representation> {
        let parts = (0..self.alg.size())
            .map(|a| self.part(RepMode::Point(a)))
            .collect::<Result<Vec<_>>>()?;
        Representation::new(self.alg.arity(), self.alg.size(), parts)
    }
}

/// One canonical part as a representation.
pub fn build_representation(
    alg: &AbstractAlgebra,
    chi: &BinRelation,
    mode: RepMode,
    flavor: Flavor,
) -> Result<Representation> {
    RepresentationBuilder::new(alg, chi, flavor)?.single(mode)
}

fn value_label(v: Option<usize>) -> String {
    v.map_or("undefined".to_string(), |v| v.to_string())
}

/// Checks `P(g1 ⊕i g2) = P(g1) ⊕i P(g2)` pointwise, and
/// `P(g[ḡ]) = P(g)[P(g1) … P(gn)]` when both the algebra and the
/// representation are Menger-flavored. Identical parts are checked once.
pub fn verify_homomorphism(rep: &Representation, alg: &AbstractAlgebra) -> Result<Outcome> {
    if rep.carrier_size != alg.size() || rep.arity != alg.arity() {
        return input("representation and algebra disagree on carrier size or arity");
    }
    let m = alg.size();
    let n = alg.arity();
    let check_sup = alg.is_menger() && rep.flavor() == Flavor::Menger;
    let mut seen: Vec<&RepresentationPart> = Vec::new();

    for part in &rep.parts {
        if seen
            .iter()
            .any(|p| Arc::ptr_eq(&p.universe, &part.universe) && p.values == part.values)
        {
            continue;
        }
        seen.push(part);
        let universe = &part.universe;
        let len = universe.len();
        let range = universe.value_range(m);
        if let Some((g, p, v)) = part.values.iter().enumerate().find_map(|(g, row)| {
            row.iter()
                .enumerate()
                .find_map(|(p, v)| v.filter(|&v| v >= range).map(|v| (g, p, v)))
        }) {
            return input(format!(
                "part {}: value {v} of element {g} at point {p} is out of range",
                part.label
            ));
        }
        let subst = universe.substitution_table(range);

        for i in 1..=n {
            for g1 in 0..m {
                for g2 in 0..m {
                    let target = &part.values[alg.mann(i, g1, g2)];
                    for p in 0..len {
                        let composed = part.values[g2][p].and_then(|v| {
                            subst[((i - 1) * len + p) * range + v].and_then(|q| part.values[g1][q as usize])
                        });
                        if composed != target[p] {
                            return Ok(Outcome::fail(
                                Witness::new(Law::Homomorphism)
                                    .bind("i", i)
                                    .bind("g1", g1)
                                    .bind("g2", g2)
                                    .point(universe.points()[p].clone())
                                    .note(format!(
                                        "part {}: P(g1 ⊕i g2) = {}, P(g1) ⊕i P(g2) = {}",
                                        part.label,
                                        value_label(target[p]),
                                        value_label(composed)
                                    )),
                            ));
                        }
                    }
                }
            }
        }

        if check_sup {
            // all-value tuples, indexed lexicographically
            let mut tuple_point = Vec::new();
            for_each_tuple(range, n, |t| {
                let q: Vec<Coord> = t.iter().map(|&v| Coord::Elem(v)).collect();
                tuple_point.push(universe.position(&q));
                true
            });
            let mut found = None;
            for_each_tuple(m, n + 1, |t| {
                let target = &part.values[alg.sp(t[0], &t[1..])];
                for (p, &want) in target.iter().enumerate() {
                    let mut idx = 0;
                    let mut defined = true;
                    for &gk in &t[1..] {
                        match part.values[gk][p] {
                            Some(v) => idx = idx * range + v,
                            None => {
                                defined = false;
                                break;
                            }
                        }
                    }
                    let composed = if defined {
                        tuple_point[idx].and_then(|q| part.values[t[0]][q])
                    } else {
                        None
                    };
                    if composed != want {
                        found = Some(
                            Witness::new(Law::Homomorphism)
                                .bind("g", t[0])
                                .bind_all("g", &t[1..])
                                .point(universe.points()[p].clone())
                                .note(format!(
                                    "part {}: P(g[ḡ]) = {}, P(g)[P(ḡ)] = {}",
                                    part.label,
                                    value_label(want),
                                    value_label(composed)
                                )),
                        );
                        return false;
                    }
                }
                true
            });
            if let Some(w) = found {
                return Ok(Outcome::fail(w));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// Distinct elements get distinct function families.
pub fn is_faithful(rep: &Representation) -> Outcome {
    let mut seen: HashMap<Vec<&[Option<usize>]>, usize> = HashMap::new();
    for g in 0..rep.carrier_size {
        let key: Vec<&[Option<usize>]> = rep.parts.iter().map(|p| p.values[g].as_slice()).collect();
        if let Some(&prev) = seen.get(&key) {
            return Outcome::fail(Witness::new(Law::Faithfulness).bind("g1", prev).bind("g2", g));
        }
        seen.insert(key, g);
    }
    Outcome::Pass
}
