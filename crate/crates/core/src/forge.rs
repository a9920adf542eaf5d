//! Seeded generation of small instances, exhaustive relation enumeration and
//! the identity representation of a concrete algebra.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{abstract_from_concrete, AbstractAlgebra};
use crate::error::{input, Error, Result};
use crate::frames::{explore, FrameOptions, DEFAULT_FRAME_CAP};
use crate::func::{close_under_operations, ConcreteAlgebra, PartialFunctionTable, DEFAULT_CLOSURE_CAP};
use crate::lab;
use crate::relation::BinRelation;
use crate::represent::{PointUniverse, Representation, RepresentationPart};
use crate::Flavor;

/// Draws that overflow a cap are retried this many times before giving up.
pub const MAX_RETRIES: usize = 32;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorConfig {
    pub arity: usize,
    pub base_size: usize,
    pub generator_count: usize,
    pub seed: u64,
    pub flavor: Flavor,
    /// Largest accepted closure.
    pub closure_cap: usize,
    /// Largest accepted frame exploration of the abstraction.
    pub frame_cap: usize,
    /// Chance that a generator cell is undefined.
    pub undefined_probability: f64,
}

impl GeneratorConfig {
    pub fn new(arity: usize, base_size: usize, generator_count: usize, seed: u64) -> Self {
        GeneratorConfig {
            arity,
            base_size,
            generator_count,
            seed,
            flavor: Flavor::Menger,
            closure_cap: DEFAULT_CLOSURE_CAP,
            frame_cap: DEFAULT_FRAME_CAP,
            undefined_probability: 0.25,
        }
    }

    pub fn with_flavor(mut self, flavor: Flavor) -> Self {
        self.flavor = flavor;
        self
    }

    pub fn with_closure_cap(mut self, cap: usize) -> Self {
        self.closure_cap = cap;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.arity == 0 || self.base_size == 0 {
            return input("arity and base size must be positive");
        }
        if !(0.0..=1.0).contains(&self.undefined_probability) {
            return input("undefined probability must lie in [0, 1]");
        }
        Ok(())
    }
}

fn draw_table(cfg: &GeneratorConfig, rng: &mut ChaCha8Rng) -> Result<PartialFunctionTable> {
    let cells = cfg.base_size.pow(cfg.arity as u32);
    let entries: Vec<Option<usize>> = (0..cells)
        .map(|_| {
            if rng.random_bool(cfg.undefined_probability) {
                None
            } else {
                Some(rng.random_range(0..cfg.base_size))
            }
        })
        .collect();
    PartialFunctionTable::from_entries(cfg.arity, cfg.base_size, &entries)
}

/// Closure of randomly drawn generators. A draw whose closure or frame
/// exploration overflows its cap is replaced by the next draw from the same
/// stream, at most [`MAX_RETRIES`] times.
pub fn generate_concrete(cfg: &GeneratorConfig) -> Result<ConcreteAlgebra> {
    Ok(generate_instance(cfg)?.0)
}

/// [`generate_concrete`] together with the abstraction.
pub fn generate_instance(cfg: &GeneratorConfig) -> Result<(ConcreteAlgebra, AbstractAlgebra)> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut last = None;
    for _ in 0..=MAX_RETRIES {
        let gens = (0..cfg.generator_count)
            .map(|_| draw_table(cfg, &mut rng))
            .collect::<Result<Vec<_>>>()?;
        let closed = match close_under_operations(cfg.arity, cfg.base_size, &gens, cfg.flavor, cfg.closure_cap) {
            Ok(c) => c,
            Err(e @ Error::Capacity { .. }) => {
                last = Some(e);
                continue;
            }
            Err(e) => return Err(e),
        };
        let alg = abstract_from_concrete(&closed)?;
        match explore(
            &alg,
            FrameOptions {
                cap: cfg.frame_cap,
                ..FrameOptions::default()
            },
        ) {
            Ok(_) => return Ok((closed, alg)),
            Err(e @ Error::Capacity { .. }) => last = Some(e),
            Err(e) => return Err(e),
        }
    }
    Err(last.expect("at least one attempt"))
}

/// Which relations [`enumerate_relations`] yields.
#[derive(Debug, Clone, Copy)]
pub enum RelationFilter<'a> {
    /// Every relation, `m ≤ 4`.
    All,
    /// Equivalences, `m ≤ 5`.
    Equivalences,
    /// Equivalences on the carrier that are l-regular for the algebra.
    LRegularEquivalences(&'a AbstractAlgebra),
    /// Quasi-orders, `m ≤ 4`.
    QuasiOrders,
}

/// Relations on `{0..m}` in a fixed order: by bit mask for `All` and
/// `QuasiOrders`, by restricted growth string for the equivalences.
pub fn enumerate_relations(m: usize, filter: RelationFilter<'_>) -> Result<Vec<BinRelation>> {
    let cap = match filter {
        RelationFilter::All | RelationFilter::QuasiOrders => 4,
        _ => 5,
    };
    if m > cap {
        return Err(Error::Capacity {
            what: "relation enumeration carrier size",
            cap,
            reached: m,
        });
    }
    match filter {
        RelationFilter::All => Ok((0..1u64 << (m * m))
            .map(|mask| BinRelation::from_mask(m, mask))
            .collect()),
        RelationFilter::QuasiOrders => Ok((0..1u64 << (m * m))
            .map(|mask| BinRelation::from_mask(m, mask))
            .filter(BinRelation::is_quasi_order)
            .collect()),
        RelationFilter::Equivalences => Ok(equivalences(m)),
        RelationFilter::LRegularEquivalences(alg) => {
            if alg.size() != m {
                return input(format!("carrier has {} elements, asked for m = {m}", alg.size()));
            }
            let mut out = Vec::new();
            for r in equivalences(m) {
                if lab::is_l_regular(&r, alg)?.is_pass() {
                    out.push(r);
                }
            }
            Ok(out)
        }
    }
}

fn equivalences(m: usize) -> Vec<BinRelation> {
    let mut out = Vec::new();
    let mut blocks = vec![0usize; m];
    fn go(k: usize, max: usize, blocks: &mut Vec<usize>, out: &mut Vec<BinRelation>) {
        if k == blocks.len() {
            out.push(BinRelation::from_fn(blocks.len(), |a, b| blocks[a] == blocks[b]));
            return;
        }
        for b in 0..=max {
            blocks[k] = b;
            go(k + 1, max.max(b + 1), blocks, out);
        }
    }
    if m == 0 {
        out.push(BinRelation::empty(0));
    } else {
        go(1, 1, &mut blocks, &mut out);
    }
    out
}

/// Every function acting on `A^n` as itself.
pub fn identity_representation(alg: &ConcreteAlgebra) -> Result<Representation> {
    let universe = Arc::new(PointUniverse::base(alg.arity(), alg.base_size())?);
    let values = alg
        .functions()
        .iter()
        .map(|f| {
            universe
                .points()
                .iter()
                .map(|p| {
                    let args: Vec<usize> = p.iter().map(|c| c.elem().expect("base point")).collect();
                    f.evaluate(&args)
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let part = RepresentationPart::new("identity", universe, values)?;
    Representation::new(alg.arity(), alg.len(), vec![part])
}
