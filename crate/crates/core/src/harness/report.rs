//! Per-ideal report records and the corpus-wide suite runner.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::checks::{
    auxiliary_in, conjecture_in, fractions_in, proposition_in, theorem_in, AuxiliaryCheck,
    CheckContext, ConjectureCheck, FractionSequence, PropositionCheck, TheoremCheck,
    DEFAULT_FRACTION_K,
};
use super::corpus::{generate_corpus, CorpusKind, CorpusSpec};
use crate::algebra::rational::pq;
use crate::algebra::{parse_ideal, Ideal, Rational};
use crate::error::{Error, Result};
use crate::parallel::{map, Parallelism};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteOptions {
    /// Multiplier weights; empty selects the defaults.
    #[serde(with = "pq::vec")]
    pub c_samples: Vec<Rational>,
    pub fraction_k: u32,
    pub parallelism: Parallelism,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            c_samples: Vec::new(),
            fraction_k: DEFAULT_FRACTION_K,
            parallelism: Parallelism::default(),
        }
    }
}

/// One line of a report: every check for one ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub id: usize,
    pub ideal: String,
    pub saturation: String,
    pub vacuous: bool,
    #[serde(with = "pq::opt")]
    pub lct: Option<Rational>,
    /// Sheaf regularity.
    pub reg: i64,
    pub dhat: u32,
    pub codim: Option<usize>,
    pub theorem: TheoremCheck,
    pub proposition: PropositionCheck,
    pub conjecture: ConjectureCheck,
    pub auxiliary: AuxiliaryCheck,
    pub fractions: FractionSequence,
}

impl CheckReport {
    /// Whether every stored verdict follows from the stored numbers.
    pub fn verdicts_consistent(&self) -> bool {
        self.theorem.verdict == self.theorem.recomputed_verdict()
            && self.proposition.verdict == self.proposition.recomputed_verdict()
            && self.conjecture.verdict == self.conjecture.recomputed_verdict()
            && self.auxiliary.verdict == self.auxiliary.recomputed_verdict()
            && self.fractions.verdict == self.fractions.recomputed_verdict()
    }

    /// Recomputes the record from its stored ideal, weights and `K`, and
    /// compares.
    pub fn reverify(&self) -> Result<bool> {
        let ideal = parse_ideal(&self.ideal)?;
        let options = SuiteOptions {
            c_samples: self
                .proposition
                .samples
                .iter()
                .map(|s| s.c.clone())
                .collect(),
            fraction_k: (self.fractions.regs.len() as u32).max(1),
            parallelism: Parallelism::Sequential,
        };
        let fresh = build_report(self.id, &ideal, &options)?;
        Ok(fresh == *self && self.verdicts_consistent())
    }
}

/// Runs every check on one monomial ideal.
pub fn build_report(id: usize, ideal: &Ideal, options: &SuiteOptions) -> Result<CheckReport> {
    let mut ctx = CheckContext::new(ideal)?;
    if ctx.input.is_unit() {
        return Err(Error::UnitIdeal);
    }
    let theorem = theorem_in(&mut ctx)?;
    let proposition = proposition_in(&mut ctx, &options.c_samples)?;
    let conjecture = conjecture_in(&ctx)?;
    let auxiliary = auxiliary_in(&mut ctx, &options.c_samples)?;
    let fractions = fractions_in(&mut ctx, options.fraction_k)?;
    Ok(CheckReport {
        id,
        ideal: ideal.to_input_string(),
        saturation: ctx.saturation.to_string(),
        vacuous: ctx.is_vacuous(),
        lct: theorem.lct.clone(),
        reg: ctx.reg,
        dhat: ctx.dhat,
        codim: auxiliary.codim,
        theorem,
        proposition,
        conjecture,
        auxiliary,
        fractions,
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub ideals: usize,
    pub vacuous: usize,
    pub theorem_violations: usize,
    pub proposition_violations: usize,
    pub conjecture_violations: usize,
    pub auxiliary_violations: usize,
    pub fraction_violations: usize,
    /// Largest fraction-sequence term seen, as `p/q`.
    #[serde(with = "pq::opt")]
    pub max_fraction: Option<Rational>,
}

impl SuiteSummary {
    pub fn from_reports(reports: &[CheckReport]) -> Self {
        let count = |f: &dyn Fn(&CheckReport) -> bool| reports.iter().filter(|r| f(r)).count();
        SuiteSummary {
            ideals: reports.len(),
            vacuous: count(&|r| r.vacuous),
            theorem_violations: count(&|r| r.theorem.verdict.is_violation()),
            proposition_violations: count(&|r| r.proposition.verdict.is_violation()),
            conjecture_violations: count(&|r| r.conjecture.verdict.is_violation()),
            auxiliary_violations: count(&|r| r.auxiliary.verdict.is_violation()),
            fraction_violations: count(&|r| r.fractions.verdict.is_violation()),
            max_fraction: reports.iter().filter_map(|r| r.fractions.max.clone()).max(),
        }
    }

    /// Violations of statements that are theorems; any is a bug.
    pub fn theorem_failures(&self) -> usize {
        self.theorem_violations
            + self.proposition_violations
            + self.auxiliary_violations
            + self.fraction_violations
    }
}

#[derive(Clone, Debug)]
pub struct SuiteRun {
    pub summary: SuiteSummary,
    pub reports: Vec<CheckReport>,
}

/// Reports for a list of monomial ideals, in input order.
pub fn check_ideals(ideals: &[Ideal], options: &SuiteOptions) -> Result<Vec<CheckReport>> {
    let indexed: Vec<(usize, &Ideal)> = ideals.iter().enumerate().collect();
    map(&indexed, options.parallelism, |(i, ideal)| {
        build_report(*i, ideal, options)
    })
    .into_iter()
    .collect()
}

/// Writes one JSON record per line.
pub fn write_reports(path: &Path, reports: &[CheckReport]) -> Result<()> {
    let mut w = BufWriter::new(File::create(path)?);
    for r in reports {
        serde_json::to_writer(&mut w, r).map_err(|e| Error::Io(e.to_string()))?;
        w.write_all(b"\n")?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_reports(path: &Path) -> Result<Vec<CheckReport>> {
    std::fs::read_to_string(path)?
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(|e| Error::Io(format!("bad report record: {e}"))))
        .collect()
}

/// Generates the corpus, checks every ideal and writes the report to `out`
/// when given.
pub fn run_suite(
    spec: &CorpusSpec,
    out: Option<&Path>,
    options: &SuiteOptions,
) -> Result<SuiteRun> {
    if spec.kind != CorpusKind::Monomial {
        return Err(Error::InvalidParameter(
            "the check suite runs on monomial corpora only; closures are computable only there"
                .into(),
        ));
    }
    let corpus = generate_corpus(spec)?;
    let reports = check_ideals(&corpus, options)?;
    if let Some(path) = out {
        write_reports(path, &reports)?;
    }
    Ok(SuiteRun {
        summary: SuiteSummary::from_reports(&reports),
        reports,
    })
}
