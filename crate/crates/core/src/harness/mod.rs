//! Seeded corpora, the inequality checks and persistent reports.

mod checks;
mod corpus;
mod report;

pub use checks::{
    check_auxiliary, check_conjecture, check_proposition, check_theorem, default_c_samples,
    fraction_sequence, sheaf_lct, AuxiliaryCheck, CheckContext, ClosureSample, ConjectureCheck,
    Counterexample, FractionSequence, ProofChain, PropositionCheck, PropositionSample,
    TheoremCheck, Verdict, DEFAULT_FRACTION_K,
};
pub use corpus::{generate_corpus, CorpusKind, CorpusSpec};
pub use report::{
    build_report, check_ideals, read_reports, run_suite, write_reports, CheckReport, SuiteOptions,
    SuiteRun, SuiteSummary,
};
