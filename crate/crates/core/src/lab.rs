//! Relations on the carrier of an abstract algebra: the compatibility
//! predicates, the auxiliary relations δ1 and δ2, the closure relations
//! χ(π), χ0 and their plain-flavor analogs, the γ/χ compatibility
//! implication and the truncated word systems.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::AbstractAlgebra;
use crate::error::{input, Error, Result};
use crate::func::for_each_tuple;
use crate::outcome::{Law, Outcome, Witness};
use crate::relation::{BinRelation, RelationFlags};

/// Default bound on the number of translations explored.
pub const DEFAULT_TRANSLATION_CAP: usize = 1 << 20;

fn same_carrier(r: &BinRelation, alg: &AbstractAlgebra) -> Result<()> {
    if r.size() != alg.size() {
        return input(format!(
            "relation has size {} but the carrier has {} elements",
            r.size(),
            alg.size()
        ));
    }
    Ok(())
}

pub fn basic_relation_properties(r: &BinRelation) -> RelationFlags {
    r.flags()
}

/// Symmetric, and reflexive except possibly at the zero when the zero does
/// not occur as a first coordinate. Without a zero this is plain
/// symmetric + reflexive.
pub fn is_zero_quasi_equivalence(r: &BinRelation, alg: &AbstractAlgebra) -> Result<Outcome> {
    same_carrier(r, alg)?;
    if let Some((a, b)) = r.pairs().find(|&(a, b)| !r.contains(b, a)) {
        return Ok(Outcome::fail(Witness::new(Law::Symmetric).bind("x", a).bind("y", b)));
    }
    let exempt = alg.zero().filter(|&z| !r.in_first_projection(z));
    if let Some(g) = (0..r.size()).find(|&g| Some(g) != exempt && !r.contains(g, g)) {
        let note = match alg.zero() {
            Some(z) if z == g => "the zero occurs in the first projection but is not related to itself",
            Some(_) => "a nonzero element is not related to itself",
            None => "no zero, so reflexivity is required",
        };
        return Ok(Outcome::fail(
            Witness::new(Law::ZeroQuasiEquivalence).bind("g", g).note(note),
        ));
    }
    Ok(Outcome::Pass)
}

/// `x r y` implies `x ⊕i z r y ⊕i z`, and `x[z̄] r y[z̄]` in the Menger
/// flavor.
pub fn is_l_regular(r: &BinRelation, alg: &AbstractAlgebra) -> Result<Outcome> {
    same_carrier(r, alg)?;
    let m = alg.size();
    for (x, y) in r.pairs() {
        for i in 1..=alg.arity() {
            for z in 0..m {
                let (a, b) = (alg.mann(i, x, z), alg.mann(i, y, z));
                if !r.contains(a, b) {
                    return Ok(Outcome::fail(
                        Witness::new(Law::LRegularMann)
                            .bind("i", i)
                            .bind("x", x)
                            .bind("y", y)
                            .bind("z", z)
                            .note(format!("({a}, {b}) missing")),
                    ));
                }
            }
        }
    }
    if alg.is_menger() {
        for (x, y) in r.pairs() {
            let mut found = None;
            for_each_tuple(m, alg.arity(), |zs| {
                let (a, b) = (alg.sp(x, zs), alg.sp(y, zs));
                if r.contains(a, b) {
                    return true;
                }
                found = Some(
                    Witness::new(Law::LRegularSuperposition)
                        .bind("x", x)
                        .bind("y", y)
                        .bind_all("z", zs)
                        .note(format!("({a}, {b}) missing")),
                );
                false
            });
            if let Some(w) = found {
                return Ok(Outcome::fail(w));
            }
        }
    }
    Ok(Outcome::Pass)
}

/// `x ⊕i z r y ⊕i z` implies `x r y`, and likewise through `[z̄]` in the
/// Menger flavor.
pub fn is_l_cancellative(r: &BinRelation, alg: &AbstractAlgebra) -> Result<Outcome> {
    same_carrier(r, alg)?;
    let m = alg.size();
    for x in 0..m {
        for y in 0..m {
            if r.contains(x, y) {
                continue;
            }
            for i in 1..=alg.arity() {
                for z in 0..m {
                    if r.contains(alg.mann(i, x, z), alg.mann(i, y, z)) {
                        return Ok(Outcome::fail(
                            Witness::new(Law::LCancellativeMann)
                                .bind("i", i)
                                .bind("x", x)
                                .bind("y", y)
                                .bind("z", z),
                        ));
                    }
                }
            }
            if alg.is_menger() {
                let mut found = None;
                for_each_tuple(m, alg.arity(), |zs| {
                    if !r.contains(alg.sp(x, zs), alg.sp(y, zs)) {
                        return true;
                    }
                    found = Some(
                        Witness::new(Law::LCancellativeSuperposition)
                            .bind("x", x)
                            .bind("y", y)
                            .bind_all("z", zs),
                    );
                    false
                });
                if let Some(w) = found {
                    return Ok(Outcome::fail(w));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

/// `x·w r μj(w)` for every nonempty word `w` and occupied slot `j`, and
/// `x[ȳ] r yi` in the Menger flavor. Words are covered exactly through the
/// reachable frames.
pub fn is_v_negative(r: &BinRelation, alg: &AbstractAlgebra) -> Result<Outcome> {
    same_carrier(r, alg)?;
    let m = alg.size();
    if alg.is_menger() {
        let mut found = None;
        for_each_tuple(m, alg.arity() + 1, |t| {
            let v = alg.sp(t[0], &t[1..]);
            for (i, &y) in t[1..].iter().enumerate() {
                if !r.contains(v, y) {
                    found = Some(
                        Witness::new(Law::VNegativeSuperposition)
                            .bind("x", t[0])
                            .bind_all("y", &t[1..])
                            .bind("i", i + 1)
                            .note(format!("({v}, {y}) missing")),
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
    let frames = alg.frames()?;
    for frame in frames.frames() {
        for (j, c) in frame.mu_star().iter().enumerate() {
            let Some(mu) = c.elem() else { continue };
            for x in 0..m {
                let a = frame.action()[x];
                if !r.contains(a, mu) {
                    return Ok(Outcome::fail(
                        Witness::new(Law::VNegativeWord)
                            .bind("x", x)
                            .bind("j", j + 1)
                            .word(frame.witness().clone())
                            .note(format!("({a}, {mu}) missing")),
                    ));
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

/// The inner translations `T_n(G)`: the identity, closed under
/// `t ↦ (x ↦ a[b1 .. t(x) .. bn])`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranslationSet {
    maps: Vec<Vec<usize>>,
}

impl TranslationSet {
    /// Maps in discovery order, the identity first.
    pub fn maps(&self) -> &[Vec<usize>] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.maps.is_empty()
    }

    pub fn contains(&self, t: &[usize]) -> bool {
        self.maps.iter().any(|s| s == t)
    }
}

/// The elementary translations `v ↦ a[b1 .. v .. bn]` as value tables,
/// without duplicates.
fn elementary_translations(alg: &AbstractAlgebra) -> Vec<Vec<usize>> {
    let m = alg.size();
    let n = alg.arity();
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    for i in 0..n {
        for_each_tuple(m, n, |t| {
            // t[0] is a, t[1..] fills the slots other than i
            let mut args = vec![0; n];
            let mut rest = t[1..].iter();
            for (k, slot) in args.iter_mut().enumerate() {
                if k != i {
                    *slot = *rest.next().expect("n - 1 fillers");
                }
            }
            let table: Vec<usize> = (0..m)
                .map(|v| {
                    args[i] = v;
                    alg.sp(t[0], &args)
                })
                .collect();
            if seen.insert(table.clone(), ()).is_none() {
                out.push(table);
            }
            true
        });
    }
    out
}

pub fn translations(alg: &AbstractAlgebra) -> Result<TranslationSet> {
    translations_with_cap(alg, DEFAULT_TRANSLATION_CAP)
}

pub fn translations_with_cap(alg: &AbstractAlgebra, cap: usize) -> Result<TranslationSet> {
    if !alg.is_menger() {
        return input("translations need a superposition table");
    }
    let steps = elementary_translations(alg);
    let identity: Vec<usize> = (0..alg.size()).collect();
    let mut maps = vec![identity.clone()];
    let mut seen: HashMap<Vec<usize>, ()> = HashMap::new();
    seen.insert(identity, ());
    let mut head = 0;
    while head < maps.len() {
        for u in &steps {
            let next: Vec<usize> = maps[head].iter().map(|&v| u[v]).collect();
            if seen.insert(next.clone(), ()).is_none() {
                maps.push(next);
                if maps.len() > cap {
                    return Err(Error::Capacity {
                        what: "translations",
                        cap,
                        reached: maps.len(),
                    });
                }
            }
        }
        head += 1;
    }
    Ok(TranslationSet { maps })
}

/// The auxiliary relations of an algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Deltas {
    /// `{(t(g), g)}` over inner translations; Menger flavor only.
    pub delta1: Option<BinRelation>,
    /// `{(x·w, μj(w))}` together with its `[z̄]` images in the Menger flavor.
    pub delta2: BinRelation,
    /// `{(x·w, μj(w))}` alone, as used by the plain-flavor closures.
    pub delta2_words: BinRelation,
}

/// δ1 computed per column: the set of `t(g)` is the closure of `{g}` under
/// the elementary translations, which avoids materializing `T_n(G)`.
fn delta1_by_orbits(alg: &AbstractAlgebra) -> BinRelation {
    let m = alg.size();
    let steps = elementary_translations(alg);
    let mut r = BinRelation::empty(m);
    for g in 0..m {
        let mut seen = vec![false; m];
        seen[g] = true;
        let mut queue = VecDeque::from([g]);
        while let Some(v) = queue.pop_front() {
            r.insert(v, g);
            for u in &steps {
                if !seen[u[v]] {
                    seen[u[v]] = true;
                    queue.push_back(u[v]);
                }
            }
        }
    }
    r
}

pub fn delta_relations(alg: &AbstractAlgebra) -> Result<Deltas> {
    alg.delta_cache(|| {
        let m = alg.size();
        let frames = alg.frames()?;
        let mut words = BinRelation::empty(m);
        for frame in frames.frames() {
            for c in frame.mu_star() {
                let Some(mu) = c.elem() else { continue };
                for &a in frame.action() {
                    words.insert(a, mu);
                }
            }
        }
        let (delta1, delta2) = if alg.is_menger() {
            let mut d2 = words.clone();
            for (a, b) in words.pairs() {
                for_each_tuple(m, alg.arity(), |zs| {
                    d2.insert(alg.sp(a, zs), alg.sp(b, zs));
                    true
                });
            }
            (Some(delta1_by_orbits(alg)), d2)
        } else {
            (None, words.clone())
        };
        Ok(Deltas {
            delta1,
            delta2,
            delta2_words: words,
        })
    })
    .map(|d| (*d).clone())
}

/// `σ ∘ ρ = {(a, c) | a ρ b, b σ c}`: `ρ` is applied first.
pub fn compose(sigma: &BinRelation, rho: &BinRelation) -> Result<BinRelation> {
    rho.then(sigma)
}

/// Which closure relation to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ChiKind {
    /// `f_t(f_R(δ2) ∘ δ1 ∘ π)`, the least l-regular v-negative quasi-order
    /// containing `π`.
    ChiPi,
    /// `f_t(f_R(δ2) ∘ δ1)`, the least l-regular v-negative quasi-order.
    Chi0,
    /// `f_t(f_R(δ2) ∘ π)` for plain algebras.
    ChiPiBullet,
    /// `f_t(f_R(δ2))` for plain algebras.
    Chi0Bullet,
}

impl ChiKind {
    pub fn needs_pi(self) -> bool {
        matches!(self, ChiKind::ChiPi | ChiKind::ChiPiBullet)
    }

    pub fn is_bullet(self) -> bool {
        matches!(self, ChiKind::ChiPiBullet | ChiKind::Chi0Bullet)
    }

    /// The kind matching a flavor.
    pub fn for_flavor(with_pi: bool, flavor: crate::Flavor) -> ChiKind {
        match (with_pi, flavor) {
            (true, crate::Flavor::Menger) => ChiKind::ChiPi,
            (false, crate::Flavor::Menger) => ChiKind::Chi0,
            (true, crate::Flavor::Plain) => ChiKind::ChiPiBullet,
            (false, crate::Flavor::Plain) => ChiKind::Chi0Bullet,
        }
    }
}

impl fmt::Display for ChiKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChiKind::ChiPi => "chi-pi",
            ChiKind::Chi0 => "chi0",
            ChiKind::ChiPiBullet => "chi-pi-bullet",
            ChiKind::Chi0Bullet => "chi0-bullet",
        })
    }
}

impl FromStr for ChiKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "chi-pi" => Ok(ChiKind::ChiPi),
            "chi0" => Ok(ChiKind::Chi0),
            "chi-pi-bullet" | "chi-bullet" => Ok(ChiKind::ChiPiBullet),
            "chi0-bullet" => Ok(ChiKind::Chi0Bullet),
            other => input(format!("unknown closure kind `{other}`")),
        }
    }
}

/// Input error unless `pi` is an l-regular equivalence on the carrier.
pub fn require_l_regular_equivalence(pi: &BinRelation, alg: &AbstractAlgebra) -> Result<()> {
    same_carrier(pi, alg)?;
    if !pi.is_equivalence() {
        return input("pi must be an equivalence");
    }
    if let Outcome::Fail(w) = is_l_regular(pi, alg)? {
        return input(format!("pi must be l-regular: {w}"));
    }
    Ok(())
}

/// The relation whose transitive closure is the requested closure relation.
pub fn one_step_relation(alg: &AbstractAlgebra, pi: Option<&BinRelation>, kind: ChiKind) -> Result<BinRelation> {
    if !kind.is_bullet() && !alg.is_menger() {
        return input(format!("{kind} needs a Menger algebra"));
    }
    let deltas = delta_relations(alg)?;
    let d2 = if kind.is_bullet() {
        deltas.delta2_words.reflexive_closure()
    } else {
        deltas.delta2.reflexive_closure()
    };
    let mut r = match kind {
        ChiKind::ChiPi | ChiKind::Chi0 => {
            let d1 = deltas.delta1.as_ref().expect("Menger algebras have δ1");
            compose(&d2, d1)?
        }
        ChiKind::ChiPiBullet | ChiKind::Chi0Bullet => d2,
    };
    if kind.needs_pi() {
        let pi = pi.ok_or_else(|| Error::Input(format!("{kind} needs pi")))?;
        require_l_regular_equivalence(pi, alg)?;
        r = compose(&r, pi)?;
    }
    Ok(r)
}

pub fn closure_chi(alg: &AbstractAlgebra, pi: Option<&BinRelation>, kind: ChiKind) -> Result<BinRelation> {
    Ok(one_step_relation(alg, pi, kind)?.transitive_closure())
}

/// `h1 γ h2 ∧ h1 χ g1 ∧ h2 χ g2 ⇒ g1 γ g2`.
pub fn check_compatibility(chi: &BinRelation, gamma: &BinRelation) -> Result<Outcome> {
    if chi.size() != gamma.size() {
        return input(format!(
            "relation size mismatch: chi has {}, gamma has {}",
            chi.size(),
            gamma.size()
        ));
    }
    for (h1, h2) in gamma.pairs() {
        for g1 in chi.successors(h1) {
            // every χ-successor of h2 must be γ-related to g1
            if chi.row_subset(h2, gamma, g1) {
                continue;
            }
            let g2 = chi
                .successors(h2)
                .find(|&g2| !gamma.contains(g1, g2))
                .expect("row inclusion failed");
            return Ok(Outcome::fail(
                Witness::new(Law::Compatibility)
                    .bind("h1", h1)
                    .bind("h2", h2)
                    .bind("g1", g1)
                    .bind("g2", g2),
            ));
        }
    }
    Ok(Outcome::Pass)
}

/// A family of chain implications.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WordSystem {
    A,
    B,
    C,
    ABullet,
    BBullet,
    CBullet,
}

impl WordSystem {
    pub fn is_bullet(self) -> bool {
        matches!(self, WordSystem::ABullet | WordSystem::BBullet | WordSystem::CBullet)
    }

    pub fn needs_gamma(self) -> bool {
        !matches!(self, WordSystem::A | WordSystem::ABullet)
    }

    /// The one-step relation the chains are built from.
    fn chain_kind(self) -> ChiKind {
        match self {
            WordSystem::A | WordSystem::B => ChiKind::ChiPi,
            WordSystem::C => ChiKind::Chi0,
            WordSystem::ABullet | WordSystem::BBullet => ChiKind::ChiPiBullet,
            WordSystem::CBullet => ChiKind::Chi0Bullet,
        }
    }
}

impl fmt::Display for WordSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WordSystem::A => "A",
            WordSystem::B => "B",
            WordSystem::C => "C",
            WordSystem::ABullet => "A-bullet",
            WordSystem::BBullet => "B-bullet",
            WordSystem::CBullet => "C-bullet",
        })
    }
}

impl FromStr for WordSystem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(WordSystem::A),
            "B" | "b" => Ok(WordSystem::B),
            "C" | "c" => Ok(WordSystem::C),
            "A-bullet" | "a-bullet" => Ok(WordSystem::ABullet),
            "B-bullet" | "b-bullet" => Ok(WordSystem::BBullet),
            "C-bullet" | "c-bullet" => Ok(WordSystem::CBullet),
            other => input(format!("unknown word system `{other}`")),
        }
    }
}

/// Chain implications for chain lengths up to the bounds.
///
/// With `R` the one-step relation of the matching closure:
/// - A_k: `x0 R x1 ∧ x1 R^(k-1) x0 ⇒ x0 π x1`, for `k ≤ N`;
/// - B_k,l: `x0 γ y0 ∧ x0 R^k x ∧ y0 R^l y ⇒ x γ y`;
/// - C_k,l: same premise, concluding `x0 γ y` (the chain from `x0` is
///   only a premise).
///
/// `k ≤ N`, `l ≤ M`. The C systems use the closure without `π`, so `pi` is
/// ignored for them.
pub fn check_word_system(
    alg: &AbstractAlgebra,
    pi: Option<&BinRelation>,
    gamma: Option<&BinRelation>,
    system: WordSystem,
    bounds: (usize, usize),
) -> Result<Outcome> {
    let r = one_step_relation(alg, pi, system.chain_kind())?;
    let m = alg.size();
    let (max_n, max_m) = bounds;
    if matches!(system, WordSystem::A | WordSystem::ABullet) {
        let pi = pi.expect("checked by one_step_relation");
        let mut back = BinRelation::diagonal(m); // R^(k-1)
        for k in 1..=max_n {
            for (x0, x1) in r.pairs() {
                if back.contains(x1, x0) && !pi.contains(x0, x1) {
                    return Ok(Outcome::fail(
                        Witness::new(Law::WordSystemA { n: k }).bind("x0", x0).bind("x1", x1),
                    ));
                }
            }
            back = back.then(&r)?;
        }
        return Ok(Outcome::Pass);
    }

    let gamma = gamma.ok_or_else(|| Error::Input(format!("word system {system} needs gamma")))?;
    same_carrier(gamma, alg)?;
    let powers: Vec<BinRelation> = {
        let mut out = vec![BinRelation::diagonal(m)];
        for _ in 0..max_n.max(max_m) {
            let next = out.last().expect("nonempty").then(&r)?;
            out.push(next);
        }
        out
    };
    let concludes_from_start = matches!(system, WordSystem::C | WordSystem::CBullet);
    for k in 1..=max_n {
        for l in 1..=max_m {
            for (x0, y0) in gamma.pairs() {
                for x in powers[k].successors(x0) {
                    let from = if concludes_from_start { x0 } else { x };
                    if let Some(y) = powers[l].successors(y0).find(|&y| !gamma.contains(from, y)) {
                        let law = if concludes_from_start {
                            Law::WordSystemC { n: k, m: l }
                        } else {
                            Law::WordSystemB { n: k, m: l }
                        };
                        return Ok(Outcome::fail(
                            Witness::new(law)
                                .bind("x0", x0)
                                .bind("xn", x)
                                .bind("y0", y0)
                                .bind("ym", y),
                        ));
                    }
                }
            }
        }
    }
    Ok(Outcome::Pass)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn singleton() -> AbstractAlgebra {
        AbstractAlgebra::menger_from_fn(2, 1, |_, _, _| 0, |_, _| 0).unwrap()
    }

    /// Θ = 0, q = 1.
    fn zero_and_q() -> AbstractAlgebra {
        AbstractAlgebra::menger_from_fn(2, 2, |_, x, y| x & y, |g, a| g & a[0] & a[1]).unwrap()
    }

    fn rel(m: usize, pairs: &[(usize, usize)]) -> BinRelation {
        BinRelation::from_pairs(m, pairs.iter().copied()).unwrap()
    }

    const THETA: usize = 0;
    const Q: usize = 1;

    fn below_q() -> BinRelation {
        rel(2, &[(THETA, THETA), (THETA, Q), (Q, Q)])
    }

    #[test]
    fn basic_flags() {
        assert!(basic_relation_properties(&BinRelation::full(3)).equivalence);
        let f = basic_relation_properties(&rel(2, &[(0, 1)]));
        assert!(f.transitive && !f.reflexive && !f.symmetric);
    }

    #[test]
    fn zero_quasi_equivalence_examples() {
        let zq = zero_and_q();
        assert!(is_zero_quasi_equivalence(&rel(2, &[(Q, Q)]), &zq).unwrap().is_pass());
        let out = is_zero_quasi_equivalence(&rel(2, &[(Q, Q), (THETA, Q), (Q, THETA)]), &zq).unwrap();
        assert_eq!(out.witness().unwrap().get("g"), Some(THETA));
        assert!(is_zero_quasi_equivalence(&rel(1, &[(0, 0)]), &singleton())
            .unwrap()
            .is_pass());
        assert!(is_zero_quasi_equivalence(&rel(2, &[(Q, Q)]), &singleton()).is_err());
    }

    #[test]
    fn l_regular_examples() {
        let zq = zero_and_q();
        assert!(is_l_regular(&BinRelation::full(1), &singleton()).unwrap().is_pass());
        assert!(is_l_regular(&below_q(), &zq).unwrap().is_pass());
        // q ⊕1 Θ = Θ, so (q, Θ) forces (Θ, Θ)
        let out = is_l_regular(&rel(2, &[(Q, THETA)]), &zq).unwrap();
        let w = out.witness().unwrap();
        assert_eq!(w.law, Law::LRegularMann);
        assert_eq!(w.get("z"), Some(THETA));
    }

    #[test]
    fn l_cancellative_examples() {
        let zq = zero_and_q();
        assert!(is_l_cancellative(&BinRelation::full(2), &zq).unwrap().is_pass());
        assert!(is_l_cancellative(&rel(2, &[(Q, Q)]), &zq).unwrap().is_pass());
        // (Θ, Θ) is reached from (q, Θ) by composing with Θ
        assert!(!is_l_cancellative(&rel(2, &[(THETA, THETA)]), &zq).unwrap().is_pass());
    }

    #[test]
    fn v_negative_examples() {
        let zq = zero_and_q();
        assert!(is_v_negative(&below_q(), &zq).unwrap().is_pass());
        let out = is_v_negative(&BinRelation::diagonal(2), &zq).unwrap();
        assert!(!out.is_pass());
        assert!(is_v_negative(&BinRelation::full(1), &singleton()).unwrap().is_pass());
    }

    #[test]
    fn translation_examples() {
        assert_eq!(translations(&singleton()).unwrap().maps(), &[vec![0]]);
        let t = translations(&zero_and_q()).unwrap();
        assert_eq!(t.len(), 2);
        assert!(t.contains(&[0, 1]));
        assert!(t.contains(&[0, 0]));
        assert!(translations(&zero_and_q().as_plain()).is_err());
    }

    #[test]
    fn delta_examples() {
        let d = delta_relations(&zero_and_q()).unwrap();
        assert_eq!(d.delta1, Some(below_q()));
        assert_eq!(d.delta2, below_q());
        let d = delta_relations(&singleton()).unwrap();
        assert_eq!(d.delta1, Some(BinRelation::full(1)));
        assert_eq!(d.delta2, BinRelation::full(1));
        assert_eq!(delta_relations(&zero_and_q().as_plain()).unwrap().delta1, None);
    }

    #[test]
    fn compose_orientation() {
        let sigma = rel(3, &[(1, 2)]);
        let rho = rel(3, &[(0, 1)]);
        assert_eq!(compose(&sigma, &rho).unwrap(), rel(3, &[(0, 2)]));
        assert!(compose(&rho, &sigma).unwrap().is_empty());
        let d = BinRelation::diagonal(3);
        assert_eq!(compose(&d, &rho).unwrap(), rho);
        assert_eq!(compose(&rho, &d).unwrap(), rho);
        assert!(compose(&rho, &BinRelation::diagonal(2)).is_err());
    }

    #[test]
    fn closure_examples() {
        let zq = zero_and_q();
        assert_eq!(closure_chi(&zq, None, ChiKind::Chi0).unwrap(), below_q());
        let delta = BinRelation::diagonal(2);
        assert_eq!(closure_chi(&zq, Some(&delta), ChiKind::ChiPi).unwrap(), below_q());
        for kind in [ChiKind::Chi0, ChiKind::ChiPi, ChiKind::Chi0Bullet, ChiKind::ChiPiBullet] {
            let pi = BinRelation::full(1);
            assert_eq!(
                closure_chi(&singleton(), Some(&pi), kind).unwrap(),
                BinRelation::full(1)
            );
        }
        assert!(closure_chi(&zq, None, ChiKind::ChiPi).is_err());
        assert!(closure_chi(&zq.as_plain(), None, ChiKind::Chi0).is_err());
        // not an equivalence
        assert!(closure_chi(&zq, Some(&below_q()), ChiKind::ChiPi).is_err());
    }

    #[test]
    fn compatibility_examples() {
        let zq = zero_and_q();
        let chi = closure_chi(&zq, Some(&BinRelation::diagonal(2)), ChiKind::ChiPi).unwrap();
        assert!(check_compatibility(&chi, &BinRelation::full(2)).unwrap().is_pass());
        assert!(check_compatibility(&chi, &rel(2, &[(Q, Q)])).unwrap().is_pass());
        // Θ γ Θ with Θ below both Θ and q would need (Θ, q) in γ
        let out = check_compatibility(&chi, &rel(2, &[(Q, Q), (THETA, THETA)])).unwrap();
        let w = out.witness().unwrap();
        assert_eq!((w.get("h1"), w.get("h2")), (Some(THETA), Some(THETA)));
        assert!(check_compatibility(&chi, &BinRelation::full(3)).is_err());
    }

    #[test]
    fn word_system_examples() {
        let zq = zero_and_q();
        let delta = BinRelation::diagonal(2);
        let gamma = rel(2, &[(Q, Q)]);
        for system in [WordSystem::A, WordSystem::B, WordSystem::C] {
            let pi = BinRelation::full(1);
            let g = BinRelation::full(1);
            assert!(check_word_system(&singleton(), Some(&pi), Some(&g), system, (4, 4))
                .unwrap()
                .is_pass());
        }
        assert!(check_word_system(&zq, Some(&delta), None, WordSystem::A, (4, 4))
            .unwrap()
            .is_pass());
        assert!(
            check_word_system(&zq, Some(&delta), Some(&gamma), WordSystem::B, (3, 3))
                .unwrap()
                .is_pass()
        );
        assert!(check_word_system(&zq, Some(&delta), None, WordSystem::B, (3, 3)).is_err());
        assert!(check_word_system(&zq.as_plain(), Some(&delta), None, WordSystem::A, (3, 3)).is_err());
    }
}
