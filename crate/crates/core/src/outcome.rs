use std::fmt;

use serde::Serialize;

use crate::word::{CompositionWord, Coord};

/// Which law, identity or condition a witness refutes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "law")]
pub enum Law {
    Associativity,
    Superassociativity,
    /// `(x ⊕i y)[z̄] = x[z1 .. y[z̄] .. zn]`
    MannIntoSuperposition,
    /// `x[ȳ] ⊕i z = x[y1 ⊕i z .. yn ⊕i z]`
    SuperpositionThroughMann,
    /// `x·w = x[μ1(w) .. μn(w)]` for slot-complete words
    WordAsSuperposition,
    /// Equal μ-tuples force equal actions.
    Representability,
    ZeroLaw,
    Reflexive,
    Symmetric,
    Transitive,
    ZeroQuasiEquivalence,
    LRegularSuperposition,
    LRegularMann,
    LCancellativeSuperposition,
    LCancellativeMann,
    VNegativeSuperposition,
    VNegativeWord,
    KernelEquality,
    KernelInclusion,
    Compatibility,
    WordSystemA {
        n: usize,
    },
    WordSystemB {
        n: usize,
        m: usize,
    },
    WordSystemC {
        n: usize,
        m: usize,
    },
    Homomorphism,
    SingleValued,
    Faithfulness,
    RelationEquality {
        relation: String,
    },
    OracleEquality,
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Law::Associativity => write!(f, "associativity"),
            Law::Superassociativity => write!(f, "superassociativity"),
            Law::MannIntoSuperposition => write!(f, "mann-into-superposition identity"),
            Law::SuperpositionThroughMann => write!(f, "superposition-through-mann identity"),
            Law::WordAsSuperposition => write!(f, "word-as-superposition identity"),
            Law::Representability => write!(f, "representability implication"),
            Law::ZeroLaw => write!(f, "zero laws"),
            Law::Reflexive => write!(f, "reflexivity"),
            Law::Symmetric => write!(f, "symmetry"),
            Law::Transitive => write!(f, "transitivity"),
            Law::ZeroQuasiEquivalence => write!(f, "0-quasi-equivalence"),
            Law::LRegularSuperposition => write!(f, "l-regularity (superposition)"),
            Law::LRegularMann => write!(f, "l-regularity (mann)"),
            Law::LCancellativeSuperposition => write!(f, "l-cancellativity (superposition)"),
            Law::LCancellativeMann => write!(f, "l-cancellativity (mann)"),
            Law::VNegativeSuperposition => write!(f, "v-negativity (superposition)"),
            Law::VNegativeWord => write!(f, "v-negativity (words)"),
            Law::KernelEquality => write!(f, "pi = chi ∩ chi⁻¹"),
            Law::KernelInclusion => write!(f, "chi(pi) ∩ chi(pi)⁻¹ ⊆ pi"),
            Law::Compatibility => write!(f, "gamma/chi compatibility"),
            Law::WordSystemA { n } => write!(f, "word system A_{n}"),
            Law::WordSystemB { n, m } => write!(f, "word system B_{n},{m}"),
            Law::WordSystemC { n, m } => write!(f, "word system C_{n},{m}"),
            Law::Homomorphism => write!(f, "homomorphism"),
            Law::SingleValued => write!(f, "single-valuedness"),
            Law::Faithfulness => write!(f, "faithfulness"),
            Law::RelationEquality { relation } => write!(f, "{relation} equality"),
            Law::OracleEquality => write!(f, "closure/oracle equality"),
        }
    }
}

/// A concrete instantiation refuting a law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    #[serde(flatten)]
    pub law: Law,
    /// Named carrier elements, slots and indices, in instantiation order.
    pub bindings: Vec<(String, usize)>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub words: Vec<CompositionWord>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<Vec<Coord>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl Witness {
    pub fn new(law: Law) -> Self {
        Witness {
            law,
            bindings: Vec::new(),
            words: Vec::new(),
            points: Vec::new(),
            note: None,
        }
    }

    pub fn bind(mut self, name: impl Into<String>, value: usize) -> Self {
        self.bindings.push((name.into(), value));
        self
    }

    pub fn bind_all(mut self, name: &str, values: &[usize]) -> Self {
        for (k, &v) in values.iter().enumerate() {
            self.bindings.push((format!("{name}{}", k + 1), v));
        }
        self
    }

    pub fn word(mut self, w: CompositionWord) -> Self {
        self.words.push(w);
        self
    }

    pub fn point(mut self, p: Vec<Coord>) -> Self {
        self.points.push(p);
        self
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn get(&self, name: &str) -> Option<usize> {
        self.bindings.iter().find(|(k, _)| k == name).map(|&(_, v)| v)
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} violated", self.law)?;
        if !self.bindings.is_empty() {
            let b: Vec<String> = self.bindings.iter().map(|(k, v)| format!("{k}={v}")).collect();
            write!(f, " at {}", b.join(", "))?;
        }
        for w in &self.words {
            write!(f, "; word {w}")?;
        }
        if let Some(note) = &self.note {
            write!(f, " ({note})")?;
        }
        Ok(())
    }
}

/// Pass, or fail with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "verdict", content = "witness")]
pub enum Outcome {
    Pass,
    Fail(Box<Witness>),
}

impl Outcome {
    pub fn fail(w: Witness) -> Self {
        Outcome::Fail(Box::new(w))
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Outcome::Pass)
    }

    pub fn witness(&self) -> Option<&Witness> {
        match self {
            Outcome::Pass => None,
            Outcome::Fail(w) => Some(w),
        }
    }

    /// First failure wins.
    pub fn and_then(self, next: impl FnOnce() -> Outcome) -> Outcome {
        match self {
            Outcome::Pass => next(),
            fail => fail,
        }
    }
}

impl From<Option<Witness>> for Outcome {
    fn from(w: Option<Witness>) -> Self {
        w.map_or(Outcome::Pass, Outcome::fail)
    }
}
