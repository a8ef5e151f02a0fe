//! Seeded pseudo-random corpora of ideals.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::monomial::minimalize;
use crate::algebra::{ExponentVector, Ideal, Polynomial};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusKind {
    #[default]
    Monomial,
    Binomial,
    RegularSequence,
}

impl std::str::FromStr for CorpusKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "monomial" => Ok(Self::Monomial),
            "binomial" => Ok(Self::Binomial),
            "regular-sequence" => Ok(Self::RegularSequence),
            _ => Err(Error::InvalidParameter(format!(
                "unknown corpus kind `{s}`"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSpec {
    pub nvars: usize,
    pub min_generators: usize,
    pub max_generators: usize,
    /// Largest exponent of a variable (monomial kind) or largest generator
    /// degree (the other kinds).
    pub max_exponent: u32,
    pub count: usize,
    pub seed: u64,
    pub kind: CorpusKind,
    /// Fixed generator degrees for the regular-sequence kind; drawn at random
    /// when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub degrees: Option<Vec<u32>>,
}

impl CorpusSpec {
    pub fn monomial(nvars: usize, max_exponent: u32, count: usize, seed: u64) -> Self {
        CorpusSpec {
            nvars,
            min_generators: 1,
            max_generators: 4,
            max_exponent,
            count,
            seed,
            kind: CorpusKind::Monomial,
            degrees: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| {
            Err(Error::InvalidParameter(format!(
                "degenerate corpus spec: {m}"
            )))
        };
        if self.nvars == 0 {
            return bad("no variables");
        }
        if self.min_generators == 0 || self.min_generators > self.max_generators {
            return bad("empty generator count range");
        }
        if self.max_exponent == 0 {
            return bad("maximal exponent must be positive");
        }
        if self.kind == CorpusKind::RegularSequence {
            let len = self.degrees.as_ref().map_or(self.min_generators, Vec::len);
            if len == 0 || len > self.nvars {
                return bad("a regular sequence needs between 1 and nvars generators");
            }
            if self.degrees.as_ref().is_some_and(|d| d.contains(&0)) {
                return bad("regular sequence degrees must be positive");
            }
        }
        Ok(())
    }
}

/// The ideals described by `spec`, identical on every call.
pub fn generate_corpus(spec: &CorpusSpec) -> Result<Vec<Ideal>> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    (0..spec.count)
        .map(|_| match spec.kind {
            CorpusKind::Monomial => Ok(random_monomial_ideal(spec, &mut rng)),
            CorpusKind::Binomial => Ok(random_binomial_ideal(spec, &mut rng)),
            CorpusKind::RegularSequence => Ok(random_regular_sequence(spec, &mut rng)),
        })
        .collect()
}

fn monomial_poly(e: ExponentVector) -> Polynomial {
    Polynomial::monomial(e)
}

fn combine(a: Polynomial, b: Polynomial, minus: bool) -> Polynomial {
    let r = if minus { a.try_sub(&b) } else { a.try_add(&b) };
    r.expect("operands share the variable count")
}

fn random_monomial_ideal(spec: &CorpusSpec, rng: &mut ChaCha8Rng) -> Ideal {
    let g = rng.gen_range(spec.min_generators..=spec.max_generators);
    let mut exps = Vec::with_capacity(g);
    while exps.len() < g {
        let e: Vec<u32> = (0..spec.nvars)
            .map(|_| rng.gen_range(0..=spec.max_exponent))
            .collect();
        if e.iter().any(|&x| x > 0) {
            exps.push(ExponentVector::new(e));
        }
    }
    let gens = minimalize(exps).into_iter().map(monomial_poly).collect();
    Ideal::from_generators(spec.nvars, gens)
}

fn random_monomial_of_degree(
    nvars: usize,
    d: u32,
    vars: &[usize],
    rng: &mut ChaCha8Rng,
) -> ExponentVector {
    let mut e = vec![0u32; nvars];
    for _ in 0..d {
        e[*vars.choose(rng).expect("non-empty variable set")] += 1;
    }
    ExponentVector::new(e)
}

fn random_binomial_ideal(spec: &CorpusSpec, rng: &mut ChaCha8Rng) -> Ideal {
    let n = spec.nvars;
    let all: Vec<usize> = (0..n).collect();
    let g = rng.gen_range(spec.min_generators..=spec.max_generators);
    let gens = (0..g)
        .map(|_| {
            let d = rng.gen_range(1..=spec.max_exponent);
            let a = random_monomial_of_degree(n, d, &all, rng);
            // a few redraws; a single variable has only one monomial per degree
            let b = (0..8)
                .map(|_| random_monomial_of_degree(n, d, &all, rng))
                .find(|b| *b != a);
            match b {
                Some(b) => combine(monomial_poly(a), monomial_poly(b), true),
                None => monomial_poly(a),
            }
        })
        .collect();
    Ideal::from_generators(n, gens)
}

/// `x_i^{d_i} ± m_i` with `m_i` a monomial in later variables; the pure
/// powers are lex lead terms and pairwise coprime, so the generators form a
/// regular sequence. Variables are then shuffled.
fn random_regular_sequence(spec: &CorpusSpec, rng: &mut ChaCha8Rng) -> Ideal {
    let n = spec.nvars;
    let degrees: Vec<u32> = match &spec.degrees {
        Some(d) => d.clone(),
        None => {
            let g = rng.gen_range(spec.min_generators..=spec.max_generators.min(n));
            (0..g)
                .map(|_| rng.gen_range(1..=spec.max_exponent))
                .collect()
        }
    };
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let gens = degrees
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let mut lead = vec![0u32; n];
            lead[perm[i]] = d;
            let lead = monomial_poly(ExponentVector::new(lead));
            let later = &perm[i + 1..];
            if later.is_empty() {
                return lead;
            }
            let tail = monomial_poly(random_monomial_of_degree(n, d, later, rng));
            let minus = rng.gen_bool(0.5);
            combine(lead, tail, minus)
        })
        .collect();
    Ideal::from_generators(n, gens)
}
