//! Breadth-first exploration of frame states.
//!
//! A frame is what a nonempty composition word `w` leaves behind: its μ*-tuple
//! and its action `x ↦ x·w`. Both evolve step by step, so the set of frames
//! reachable by arbitrary words is a finite reachability problem over at most
//! `(m+1)^n · m^m` states.

use std::collections::hash_map::Entry;
use std::collections::HashMap;

use crate::algebra::AbstractAlgebra;
use crate::error::{Error, Result};
use crate::outcome::{Law, Outcome, Witness};
use crate::word::{CompositionWord, Coord};

/// Default bound on explored states.
pub const DEFAULT_FRAME_CAP: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FrameOptions {
    pub cap: usize,
    /// How many distinct words to keep per frame. Values above one are for
    /// cross-witness assertions.
    pub witnesses_per_frame: usize,
}

impl Default for FrameOptions {
    fn default() -> Self {
        FrameOptions {
            cap: DEFAULT_FRAME_CAP,
            witnesses_per_frame: 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuFrame {
    mu_star: Vec<Coord>,
    action: Vec<usize>,
    depth: usize,
    witnesses: Vec<CompositionWord>,
}

impl MuFrame {
    pub fn mu_star(&self) -> &[Coord] {
        &self.mu_star
    }

    /// `action[x] = x·w`.
    pub fn action(&self) -> &[usize] {
        &self.action
    }

    /// Length of a shortest word reaching this frame.
    pub fn depth(&self) -> usize {
        self.depth
    }

    /// A shortest word reaching this frame.
    pub fn witness(&self) -> &CompositionWord {
        &self.witnesses[0]
    }

    /// All recorded words reaching this frame, shortest first.
    pub fn witnesses(&self) -> &[CompositionWord] {
        &self.witnesses
    }

    /// The μ*-tuple as carrier elements when every slot is occupied.
    pub fn carrier_tuple(&self) -> Option<Vec<usize>> {
        self.mu_star.iter().map(|c| c.elem()).collect()
    }
}

/// Frames of depth at least one, in breadth-first discovery order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrameSet {
    arity: usize,
    size: usize,
    frames: Vec<MuFrame>,
    states_explored: usize,
}

impl FrameSet {
    pub fn frames(&self) -> &[MuFrame] {
        &self.frames
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// States visited including the initial one.
    pub fn states_explored(&self) -> usize {
        self.states_explored
    }
}

/// Reachable frames with the default cap; cached on the algebra.
pub fn reachable_frames(alg: &AbstractAlgebra) -> Result<std::sync::Arc<FrameSet>> {
    alg.frames()
}

/// State encoding: entries `0..m` are carrier elements, `m + i` is the unit
/// `e_(i+1)`. The μ*-part comes first, then the action.
fn decode_coord(v: u32, m: usize) -> Coord {
    let v = v as usize;
    if v < m {
        Coord::Elem(v)
    } else {
        Coord::Unit(v - m + 1)
    }
}

/// Uncached exploration with explicit options.
pub fn explore(alg: &AbstractAlgebra, opts: FrameOptions) -> Result<FrameSet> {
    let n = alg.arity();
    let m = alg.size();
    let keep = opts.witnesses_per_frame.max(1);

    let mut initial: Vec<u32> = (0..n).map(|i| (m + i) as u32).collect();
    initial.extend((0..m).map(|x| x as u32));

    // parents[k] lists (previous state, step) edges that reached state k,
    // the first one on a shortest path
    let mut states: Vec<Vec<u32>> = vec![initial.clone()];
    let mut parents: Vec<Vec<(usize, (usize, usize))>> = vec![Vec::new()];
    let mut depth = vec![0usize];
    let mut index: HashMap<Vec<u32>, usize> = HashMap::new();
    index.insert(initial, 0);

    let mut head = 0;
    while head < states.len() {
        let current = states[head].clone();
        for slot in 1..=n {
            for y in 0..m {
                let mut next = Vec::with_capacity(n + m);
                for (i, &v) in current[..n].iter().enumerate() {
                    let v = v as usize;
                    next.push(if v < m {
                        alg.mann(slot, v, y) as u32
                    } else if i + 1 == slot {
                        y as u32
                    } else {
                        v as u32
                    });
                }
                next.extend(current[n..].iter().map(|&a| alg.mann(slot, a as usize, y) as u32));
                match index.entry(next) {
                    Entry::Occupied(e) => {
                        let k = *e.get();
                        if parents[k].len() < keep {
                            parents[k].push((head, (slot, y)));
                        }
                    }
                    Entry::Vacant(e) => {
                        if states.len() >= opts.cap {
                            return Err(Error::Capacity {
                                what: "frame states",
                                cap: opts.cap,
                                reached: states.len() + 1,
                            });
                        }
                        states.push(e.key().clone());
                        e.insert(states.len() - 1);
                        parents.push(vec![(head, (slot, y))]);
                        depth.push(depth[head] + 1);
                    }
                }
            }
        }
        head += 1;
    }

    // shortest words by following first parents; states are in BFS order so
    // a parent's word is always built before its children's
    let mut shortest: Vec<Vec<(usize, usize)>> = Vec::with_capacity(states.len());
    shortest.push(Vec::new());
    for ps in &parents[1..states.len()] {
        let (p, step) = ps[0];
        let mut w = shortest[p].clone();
        w.push(step);
        shortest.push(w);
    }

    let frames = (1..states.len())
        .map(|k| {
            let witnesses = parents[k]
                .iter()
                .map(|&(p, step)| {
                    let mut w = shortest[p].clone();
                    w.push(step);
                    CompositionWord::from_steps_unchecked(w)
                })
                .collect();
            MuFrame {
                mu_star: states[k][..n].iter().map(|&v| decode_coord(v, m)).collect(),
                action: states[k][n..].iter().map(|&v| v as usize).collect(),
                depth: depth[k],
                witnesses,
            }
        })
        .collect();

    Ok(FrameSet {
        arity: n,
        size: m,
        frames,
        states_explored: states.len(),
    })
}

/// Equal μ*-tuples force equal actions, over all reachable frames.
pub fn check_representability(alg: &AbstractAlgebra) -> Result<Outcome> {
    let frames = alg.frames()?;
    Ok(first_conflict(&frames).into())
}

pub(crate) fn first_conflict(frames: &FrameSet) -> Option<Witness> {
    let mut by_mu: HashMap<&[Coord], &MuFrame> = HashMap::new();
    for frame in frames.frames() {
        match by_mu.entry(frame.mu_star()) {
            Entry::Vacant(e) => {
                e.insert(frame);
            }
            Entry::Occupied(e) => {
                let first = *e.get();
                let g = (0..frames.size)
                    .find(|&g| first.action[g] != frame.action[g])
                    .expect("distinct states with equal μ* differ in action");
                return Some(
                    Witness::new(Law::Representability)
                        .bind("g", g)
                        .word(first.witness().clone())
                        .word(frame.witness().clone())
                        .point(frame.mu_star.clone())
                        .note(format!("g·w1 = {}, g·w2 = {}", first.action[g], frame.action[g])),
                );
            }
        }
    }
    None
}
