//! Fixtures and independent re-checkers shared by the integration tests and
//! the acceptance harness.
#![allow(dead_code)]

use mengerkit_core::forge::{generate_instance, GeneratorConfig};
use mengerkit_core::{AbstractAlgebra, BinRelation, ConcreteAlgebra, Coord, Flavor, Law, Witness};
use rayon::prelude::*;

/// The one-element algebra `{p1}`.
pub fn singleton() -> AbstractAlgebra {
    AbstractAlgebra::menger_from_fn(2, 1, |_, _, _| 0, |_, _| 0).unwrap()
}

/// `{Θ, q}` with Θ = 0 the empty function and q = 1 defined on one point:
/// every composite involving Θ is Θ, and q composes to q.
pub fn zero_and_q() -> AbstractAlgebra {
    AbstractAlgebra::menger_from_fn(2, 2, |_, x, y| x & y, |g, a| g & a[0] & a[1]).unwrap()
}

pub const THETA: usize = 0;
pub const Q: usize = 1;

pub fn rel(m: usize, pairs: &[(usize, usize)]) -> BinRelation {
    BinRelation::from_pairs(m, pairs.iter().copied()).unwrap()
}

/// A generated concrete algebra with its abstraction and domain relations.
pub struct Instance {
    pub seed: u64,
    pub concrete: ConcreteAlgebra,
    pub alg: AbstractAlgebra,
    pub chi: BinRelation,
    pub gamma: BinRelation,
    pub pi: BinRelation,
}

impl Instance {
    pub fn flavor(&self) -> Flavor {
        self.alg.flavor()
    }
}

/// The first `count` seeds (from `first_seed`) whose closure has between 2
/// and `max_size` elements, over arity 2 and base sizes 2..=`max_base`.
/// Deterministic regardless of thread count.
pub fn batch(flavor: Flavor, count: usize, max_base: usize, max_size: usize, first_seed: u64) -> Vec<Instance> {
    let mut out = Vec::with_capacity(count);
    let mut next = first_seed;
    while out.len() < count {
        let chunk: Vec<Option<Instance>> = (next..next + 4 * count as u64)
            .into_par_iter()
            .map(|seed| instance(flavor, seed, max_base, max_size))
            .collect();
        out.extend(chunk.into_iter().flatten().take(count - out.len()));
        next += 4 * count as u64;
    }
    out
}

pub fn instance(flavor: Flavor, seed: u64, max_base: usize, max_size: usize) -> Option<Instance> {
    let base = 2 + (seed as usize % (max_base - 1));
    let gens = 1 + (seed as usize / 2) % 2;
    let mut cfg = GeneratorConfig::new(2, base, gens, seed)
        .with_flavor(flavor)
        .with_closure_cap(max_size);
    cfg.frame_cap = 200_000;
    let (concrete, alg) = generate_instance(&cfg).ok()?;
    if concrete.len() < 2 {
        return None;
    }
    let (chi, gamma, pi) = mengerkit_core::func::concrete_projection_relations(&concrete);
    Some(Instance {
        seed,
        concrete,
        alg,
        chi,
        gamma,
        pi,
    })
}

fn b(w: &Witness, name: &str) -> usize {
    w.get(name)
        .unwrap_or_else(|| panic!("witness lacks binding {name}: {w}"))
}

fn bs(w: &Witness, name: &str, n: usize) -> Vec<usize> {
    (1..=n).map(|k| b(w, &format!("{name}{k}"))).collect()
}

/// Re-evaluates an algebra-law witness directly on the tables.
pub fn algebra_witness_is_genuine(alg: &AbstractAlgebra, w: &Witness) -> bool {
    let n = alg.arity();
    let sp = |g: usize, a: &[usize]| alg.superpose(g, a).unwrap();
    match &w.law {
        Law::Associativity => {
            let (i, x, y, z) = (b(w, "i"), b(w, "x"), b(w, "y"), b(w, "z"));
            alg.mann(i, alg.mann(i, x, y), z) != alg.mann(i, x, alg.mann(i, y, z))
        }
        Law::Superassociativity => {
            let (x, ys, zs) = (b(w, "x"), bs(w, "y", n), bs(w, "z", n));
            let inner: Vec<usize> = ys.iter().map(|&y| sp(y, &zs)).collect();
            sp(sp(x, &ys), &zs) != sp(x, &inner)
        }
        Law::MannIntoSuperposition => {
            let (i, x, y, zs) = (b(w, "i"), b(w, "x"), b(w, "y"), bs(w, "z", n));
            let mut args = zs.clone();
            args[i - 1] = sp(y, &zs);
            sp(alg.mann(i, x, y), &zs) != sp(x, &args)
        }
        Law::SuperpositionThroughMann => {
            let (i, x, ys, z) = (b(w, "i"), b(w, "x"), bs(w, "y", n), b(w, "z"));
            let args: Vec<usize> = ys.iter().map(|&y| alg.mann(i, y, z)).collect();
            alg.mann(i, sp(x, &ys), z) != sp(x, &args)
        }
        Law::WordAsSuperposition => {
            let x = b(w, "x");
            let word = &w.words[0];
            let mu = alg.mu_star(word);
            let Some(args) = mu.iter().map(|c| c.elem()).collect::<Option<Vec<_>>>() else {
                return false;
            };
            alg.apply_word(x, word) != sp(x, &args)
        }
        Law::Representability => {
            let g = b(w, "g");
            let (w1, w2) = (&w.words[0], &w.words[1]);
            alg.mu_star(w1) == alg.mu_star(w2) && alg.apply_word(g, w1) != alg.apply_word(g, w2)
        }
        _ => false,
    }
}

/// Re-evaluates a relation-predicate witness directly.
pub fn relation_witness_is_genuine(alg: &AbstractAlgebra, r: &BinRelation, w: &Witness) -> bool {
    let n = alg.arity();
    let sp = |g: usize, a: &[usize]| alg.superpose(g, a).unwrap();
    match &w.law {
        Law::Symmetric => r.contains(b(w, "x"), b(w, "y")) && !r.contains(b(w, "y"), b(w, "x")),
        Law::ZeroQuasiEquivalence => {
            let g = b(w, "g");
            let exempt = alg.zero() == Some(g) && (0..r.size()).all(|y| !r.contains(g, y));
            !r.contains(g, g) && !exempt
        }
        Law::LRegularMann => {
            let (i, x, y, z) = (b(w, "i"), b(w, "x"), b(w, "y"), b(w, "z"));
            r.contains(x, y) && !r.contains(alg.mann(i, x, z), alg.mann(i, y, z))
        }
        Law::LRegularSuperposition => {
            let (x, y, zs) = (b(w, "x"), b(w, "y"), bs(w, "z", n));
            r.contains(x, y) && !r.contains(sp(x, &zs), sp(y, &zs))
        }
        Law::LCancellativeMann => {
            let (i, x, y, z) = (b(w, "i"), b(w, "x"), b(w, "y"), b(w, "z"));
            !r.contains(x, y) && r.contains(alg.mann(i, x, z), alg.mann(i, y, z))
        }
        Law::LCancellativeSuperposition => {
            let (x, y, zs) = (b(w, "x"), b(w, "y"), bs(w, "z", n));
            !r.contains(x, y) && r.contains(sp(x, &zs), sp(y, &zs))
        }
        Law::VNegativeSuperposition => {
            let (x, ys, i) = (b(w, "x"), bs(w, "y", n), b(w, "i"));
            !r.contains(sp(x, &ys), ys[i - 1])
        }
        Law::VNegativeWord => {
            let (x, j) = (b(w, "x"), b(w, "j"));
            let word = &w.words[0];
            match alg.mu_star(word)[j - 1] {
                Coord::Elem(mu) => !r.contains(alg.apply_word(x, word), mu),
                Coord::Unit(_) => false,
            }
        }
        _ => false,
    }
}

/// Every Mann table pair of a plain (2,2) algebra on two elements.
pub fn all_plain_2_2_tables() -> Vec<AbstractAlgebra> {
    (0..256u32)
        .map(|code| {
            let cell = |i: usize, x: usize, y: usize| ((code >> ((i - 1) * 4 + x * 2 + y)) & 1) as usize;
            AbstractAlgebra::plain_from_fn(2, 2, cell).unwrap()
        })
        .collect()
}
