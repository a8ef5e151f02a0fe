//! The inequality and conjecture checks for monomial ideals.
//!
//! Every check works with the saturation `J = I : m^∞`, which is the ideal
//! the sheaf determines. When `J` is the unit ideal the sheaf is `O_X` and the
//! checks are vacuous.

use std::collections::BTreeMap;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::algebra::rational::{floor_to_i64, int, pq, ratio};
use crate::algebra::{ExponentVector, Ideal, Rational};
use crate::error::{Error, Result};
use crate::groebner::saturate_irrelevant;
use crate::monomial::{
    codim_monomial, integral_closure_monomial, lct_monomial, minimal_generators, MonomialIdeal,
    NewtonPolyhedron,
};
use crate::resolution::{regularity, BettiTable, RegularityMode};

pub const DEFAULT_FRACTION_K: u32 = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Holds,
    Violated,
    Vacuous,
}

impl Verdict {
    fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Holds
        } else {
            Verdict::Violated
        }
    }

    pub fn is_violation(self) -> bool {
        self == Verdict::Violated
    }
}

/// `{lct, 1/2, 1, 3/2, 2}` without repeats.
pub fn default_c_samples(lct: &Rational) -> Vec<Rational> {
    let mut out = vec![lct.clone()];
    for c in [ratio(1, 2), int(1), ratio(3, 2), int(2)] {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Sheaf regularity of a monomial ideal with its table and `dhat`.
#[derive(Clone, Debug)]
struct SheafReg {
    reg: i64,
    dhat: u32,
    saturation: MonomialIdeal,
    betti: BettiTable,
}

fn saturation(m: &MonomialIdeal) -> Result<MonomialIdeal> {
    if m.is_unit() {
        return Ok(m.clone());
    }
    MonomialIdeal::from_ideal(&saturate_irrelevant(&m.to_ideal())?)
}

fn sheaf_reg(m: &MonomialIdeal) -> Result<SheafReg> {
    let saturation = saturation(m)?;
    let r = regularity(&saturation.to_ideal(), RegularityMode::Module)?;
    Ok(SheafReg {
        reg: r.reg,
        dhat: if saturation.is_unit() {
            0
        } else {
            saturation.max_degree()
        },
        saturation,
        betti: r.betti,
    })
}

/// `min_i lct(J|_{x_i = 1})` over the standard affine charts; `None` when
/// every chart sees the unit ideal.
pub fn sheaf_lct(j: &MonomialIdeal) -> Result<Option<Rational>> {
    let n = j.nvars();
    let mut best: Option<Rational> = None;
    for i in 0..n {
        let chart: Vec<ExponentVector> = j.generators().iter().map(|g| g.remove_var(i)).collect();
        if n == 1 || chart.iter().any(ExponentVector::is_one) {
            continue;
        }
        let chart = MonomialIdeal::new(n - 1, minimal_generators(chart))?;
        let l = lct_monomial(&chart)?.lct;
        if best.as_ref().is_none_or(|b| l < *b) {
            best = Some(l);
        }
    }
    Ok(best)
}

/// Shared per-ideal state: the saturation, its Newton polyhedron and cached
/// multiplier ideals with their sheaf regularities.
pub struct CheckContext {
    pub input: MonomialIdeal,
    pub saturation: MonomialIdeal,
    pub reg: i64,
    pub dhat: u32,
    pub betti: BettiTable,
    polyhedron: Option<NewtonPolyhedron>,
    multipliers: BTreeMap<Rational, (MonomialIdeal, i64)>,
    lct: Option<(Rational, bool)>,
}

impl CheckContext {
    pub fn new(ideal: &Ideal) -> Result<Self> {
        let input = MonomialIdeal::from_ideal(ideal)?;
        let s = sheaf_reg(&input)?;
        let polyhedron = (!s.saturation.is_unit()).then(|| NewtonPolyhedron::new(&s.saturation));
        Ok(CheckContext {
            input,
            saturation: s.saturation,
            reg: s.reg,
            dhat: s.dhat,
            betti: s.betti,
            polyhedron,
            multipliers: BTreeMap::new(),
            lct: None,
        })
    }

    pub fn is_vacuous(&self) -> bool {
        self.saturation.is_unit()
    }

    /// lct of the saturation and whether its LP certificate re-verified.
    fn lct(&mut self) -> Result<(Rational, bool)> {
        if let Some(l) = &self.lct {
            return Ok(l.clone());
        }
        let r = lct_monomial(&self.saturation)?;
        let l = (r.lct.clone(), r.verify());
        self.lct = Some(l.clone());
        Ok(l)
    }

    /// `𝒥(c·J)` and its sheaf regularity.
    fn multiplier(&mut self, c: &Rational) -> Result<(MonomialIdeal, i64)> {
        if let Some(m) = self.multipliers.get(c) {
            return Ok(m.clone());
        }
        let poly = self.polyhedron.as_ref().ok_or(Error::UnitIdeal)?;
        let gens = poly.multiplier_ideal(c, &self.saturation.max_exponents())?;
        let m = MonomialIdeal::new(self.input.nvars(), gens)?;
        let reg = sheaf_reg(&m)?.reg;
        self.multipliers.insert(c.clone(), (m.clone(), reg));
        Ok((m, reg))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofChain {
    /// `reg 𝒥(c·𝓘)` at `c` the sheaf lct.
    pub multiplier_reg: i64,
    /// `⌊c·reg 𝓘⌋`.
    pub floor: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremCheck {
    pub verdict: Verdict,
    pub reg: i64,
    /// lct of the saturation as an affine ideal.
    #[serde(with = "pq::opt")]
    pub lct: Option<Rational>,
    #[serde(with = "pq::opt")]
    pub product: Option<Rational>,
    /// lct of the sheaf, the minimum over the affine charts.
    #[serde(with = "pq::opt")]
    pub sheaf_lct: Option<Rational>,
    #[serde(with = "pq::opt")]
    pub sheaf_product: Option<Rational>,
    pub chain: Option<ProofChain>,
    pub certificate_verified: bool,
}

impl TheoremCheck {
    fn vacuous() -> Self {
        TheoremCheck {
            verdict: Verdict::Vacuous,
            reg: 0,
            lct: None,
            product: None,
            sheaf_lct: None,
            sheaf_product: None,
            chain: None,
            certificate_verified: true,
        }
    }

    /// The verdict implied by the stored numbers.
    pub fn recomputed_verdict(&self) -> Verdict {
        let (Some(lct), Some(slct), Some(chain)) = (&self.lct, &self.sheaf_lct, &self.chain) else {
            return Verdict::Vacuous;
        };
        let reg = int(self.reg);
        let product = lct * &reg;
        let sheaf_product = slct * &reg;
        let ok = self.certificate_verified
            && self.product.as_ref() == Some(&product)
            && self.sheaf_product.as_ref() == Some(&sheaf_product)
            && product >= Rational::one()
            && lct <= slct
            && chain.floor == floor_to_i64(&sheaf_product)
            && 1 <= chain.multiplier_reg
            && chain.multiplier_reg <= chain.floor
            && int(chain.floor) <= sheaf_product;
        Verdict::from_bool(ok)
    }
}

pub(crate) fn theorem_in(ctx: &mut CheckContext) -> Result<TheoremCheck> {
    if ctx.is_vacuous() {
        return Ok(TheoremCheck::vacuous());
    }
    let (lct, certified) = ctx.lct()?;
    let slct =
        sheaf_lct(&ctx.saturation)?.expect("a saturated proper ideal has a non-trivial chart");
    let reg = int(ctx.reg);
    let sheaf_product = &slct * &reg;
    let (_, multiplier_reg) = ctx.multiplier(&slct)?;
    let mut out = TheoremCheck {
        verdict: Verdict::Holds,
        reg: ctx.reg,
        product: Some(&lct * &reg),
        lct: Some(lct),
        chain: Some(ProofChain {
            multiplier_reg,
            floor: floor_to_i64(&sheaf_product),
        }),
        sheaf_lct: Some(slct),
        sheaf_product: Some(sheaf_product),
        certificate_verified: certified,
    };
    out.verdict = out.recomputed_verdict();
    Ok(out)
}

/// `1 ≤ lct(𝓘)·reg(𝓘)` for a proper monomial ideal.
pub fn check_theorem(ideal: &Ideal) -> Result<TheoremCheck> {
    let mut ctx = proper_context(ideal)?;
    theorem_in(&mut ctx)
}

fn proper_context(ideal: &Ideal) -> Result<CheckContext> {
    let ctx = CheckContext::new(ideal)?;
    if ctx.input.is_unit() {
        return Err(Error::UnitIdeal);
    }
    Ok(ctx)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionSample {
    #[serde(with = "pq")]
    pub c: Rational,
    pub multiplier: String,
    pub multiplier_reg: i64,
    /// `⌊c·reg 𝓘⌋`.
    pub bound: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropositionCheck {
    pub verdict: Verdict,
    pub reg: i64,
    pub samples: Vec<PropositionSample>,
}

impl PropositionCheck {
    pub fn recomputed_verdict(&self) -> Verdict {
        if self.samples.is_empty() {
            return Verdict::Vacuous;
        }
        let reg = int(self.reg);
        let has_one = self.samples.iter().any(|s| s.c.is_one());
        let ok = has_one
            && self
                .samples
                .iter()
                .all(|s| s.bound == floor_to_i64(&(&s.c * &reg)) && s.multiplier_reg <= s.bound);
        Verdict::from_bool(ok)
    }
}

/// `c = 1` is always included.
fn normalize_samples(samples: &[Rational], lct: &Rational) -> Result<Vec<Rational>> {
    let mut out = if samples.is_empty() {
        default_c_samples(lct)
    } else {
        Vec::new()
    };
    for c in samples {
        if !c.is_positive() {
            return Err(Error::InvalidParameter(format!(
                "c samples must be positive, got {c}"
            )));
        }
        if !out.contains(c) {
            out.push(c.clone());
        }
    }
    if !out.iter().any(One::is_one) {
        out.push(Rational::one());
    }
    Ok(out)
}

pub(crate) fn proposition_in(
    ctx: &mut CheckContext,
    samples: &[Rational],
) -> Result<PropositionCheck> {
    if ctx.is_vacuous() {
        return Ok(PropositionCheck {
            verdict: Verdict::Vacuous,
            reg: 0,
            samples: Vec::new(),
        });
    }
    let (lct, _) = ctx.lct()?;
    let reg = int(ctx.reg);
    let mut out = Vec::new();
    for c in normalize_samples(samples, &lct)? {
        let (m, multiplier_reg) = ctx.multiplier(&c)?;
        out.push(PropositionSample {
            bound: floor_to_i64(&(&c * &reg)),
            c,
            multiplier: m.to_string(),
            multiplier_reg,
        });
    }
    let mut check = PropositionCheck {
        verdict: Verdict::Holds,
        reg: ctx.reg,
        samples: out,
    };
    check.verdict = check.recomputed_verdict();
    Ok(check)
}

/// `reg 𝒥(c·𝓘) ≤ ⌊c·reg 𝓘⌋` for each sampled `c` (defaults when empty).
pub fn check_proposition(ideal: &Ideal, c_samples: &[Rational]) -> Result<PropositionCheck> {
    let mut ctx = proper_context(ideal)?;
    proposition_in(&mut ctx, c_samples)
}

/// Everything needed to reproduce a conjecture counterexample.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub ideal: String,
    pub saturation: String,
    pub closure: String,
    pub closure_saturation: String,
    pub betti: BettiTable,
    pub closure_betti: BettiTable,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureCheck {
    pub verdict: Verdict,
    pub reg: i64,
    pub closure_reg: i64,
    pub closure: String,
    pub counterexample: Option<Counterexample>,
}

impl ConjectureCheck {
    pub fn recomputed_verdict(&self) -> Verdict {
        if self.reg == 0 {
            return Verdict::Vacuous;
        }
        let ok = self.closure_reg <= self.reg;
        if ok == self.counterexample.is_none() {
            Verdict::from_bool(ok)
        } else {
            Verdict::Violated
        }
    }
}

pub(crate) fn conjecture_in(ctx: &CheckContext) -> Result<ConjectureCheck> {
    if ctx.is_vacuous() {
        return Ok(ConjectureCheck {
            verdict: Verdict::Vacuous,
            reg: 0,
            closure_reg: 0,
            closure: MonomialIdeal::unit(ctx.input.nvars()).to_string(),
            counterexample: None,
        });
    }
    let closure = integral_closure_monomial(&ctx.input)?;
    let cr = sheaf_reg(&closure)?;
    let counterexample = (cr.reg > ctx.reg).then(|| Counterexample {
        ideal: ctx.input.to_string(),
        saturation: ctx.saturation.to_string(),
        closure: closure.to_string(),
        closure_saturation: cr.saturation.to_string(),
        betti: ctx.betti.clone(),
        closure_betti: cr.betti.clone(),
    });
    let mut check = ConjectureCheck {
        verdict: Verdict::Holds,
        reg: ctx.reg,
        closure_reg: cr.reg,
        closure: closure.to_string(),
        counterexample,
    };
    check.verdict = check.recomputed_verdict();
    Ok(check)
}

/// `reg(𝓘̄) ≤ reg(𝓘)`; a violation carries a [`Counterexample`].
pub fn check_conjecture(ideal: &Ideal) -> Result<ConjectureCheck> {
    conjecture_in(&CheckContext::new(ideal)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClosureSample {
    #[serde(with = "pq")]
    pub c: Rational,
    /// `𝒥(c·Ī) = 𝒥(c·I)`.
    pub equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxiliaryCheck {
    pub verdict: Verdict,
    pub codim: Option<usize>,
    pub dhat: u32,
    #[serde(with = "pq::opt")]
    pub lct: Option<Rational>,
    /// `lct·dhat`.
    #[serde(with = "pq::opt")]
    pub product: Option<Rational>,
    /// `Ī ⊆ 𝒥(I)`.
    pub closure_in_multiplier: bool,
    pub closure_samples: Vec<ClosureSample>,
}

impl AuxiliaryCheck {
    pub fn recomputed_verdict(&self) -> Verdict {
        let (Some(codim), Some(lct)) = (self.codim, &self.lct) else {
            return Verdict::Vacuous;
        };
        let product = lct * int(self.dhat as i64);
        let ok = self.product.as_ref() == Some(&product)
            && int(codim as i64) <= product
            && product >= Rational::one()
            && self.closure_in_multiplier
            && self.closure_samples.iter().all(|s| s.equal);
        Verdict::from_bool(ok)
    }
}

pub(crate) fn auxiliary_in(ctx: &mut CheckContext, samples: &[Rational]) -> Result<AuxiliaryCheck> {
    if ctx.is_vacuous() {
        return Ok(AuxiliaryCheck {
            verdict: Verdict::Vacuous,
            codim: None,
            dhat: 0,
            lct: None,
            product: None,
            closure_in_multiplier: true,
            closure_samples: Vec::new(),
        });
    }
    let (lct, _) = ctx.lct()?;
    let codim = codim_monomial(&ctx.saturation)?;
    let closure = integral_closure_monomial(&ctx.saturation)?;
    let (j1, _) = ctx.multiplier(&Rational::one())?;
    let closure_poly = NewtonPolyhedron::new(&closure);
    let bounds = closure.max_exponents();
    let mut closure_samples = Vec::new();
    for c in normalize_samples(samples, &lct)? {
        let (j, _) = ctx.multiplier(&c)?;
        let jc = MonomialIdeal::new(closure.nvars(), closure_poly.multiplier_ideal(&c, &bounds)?)?;
        closure_samples.push(ClosureSample { equal: jc == j, c });
    }
    let mut check = AuxiliaryCheck {
        verdict: Verdict::Holds,
        codim: Some(codim),
        dhat: ctx.dhat,
        product: Some(&lct * int(ctx.dhat as i64)),
        lct: Some(lct),
        closure_in_multiplier: closure.is_subset(&j1),
        closure_samples,
    };
    check.verdict = check.recomputed_verdict();
    Ok(check)
}

/// `codim ≤ lct·dhat`, `1 ≤ lct·dhat`, `Ī ⊆ 𝒥(I)` and `𝒥(c·Ī) = 𝒥(c·I)`.
pub fn check_auxiliary(ideal: &Ideal, c_samples: &[Rational]) -> Result<AuxiliaryCheck> {
    auxiliary_in(&mut CheckContext::new(ideal)?, c_samples)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FractionSequence {
    pub verdict: Verdict,
    #[serde(with = "pq::opt")]
    pub lct: Option<Rational>,
    /// `reg 𝒥(k·lct·𝓘)` for `k = 1..=K`.
    pub regs: Vec<i64>,
    /// `r_k = regs[k-1] / k`.
    #[serde(with = "pq::vec")]
    pub terms: Vec<Rational>,
    #[serde(with = "pq::opt")]
    pub max: Option<Rational>,
    /// `lct·dhat`.
    #[serde(with = "pq::opt")]
    pub bound: Option<Rational>,
}

impl FractionSequence {
    pub fn recomputed_verdict(&self) -> Verdict {
        let (Some(_), Some(bound)) = (&self.lct, &self.bound) else {
            return Verdict::Vacuous;
        };
        let terms_ok = self.regs.len() == self.terms.len()
            && self
                .regs
                .iter()
                .zip(&self.terms)
                .enumerate()
                .all(|(k, (r, t))| *t == ratio(*r, k as i64 + 1));
        let max_ok = self.max.as_ref() == self.terms.iter().max();
        Verdict::from_bool(terms_ok && max_ok && self.terms.iter().all(|t| t <= bound))
    }
}

pub(crate) fn fractions_in(ctx: &mut CheckContext, k: u32) -> Result<FractionSequence> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "the fraction sequence needs K ≥ 1".into(),
        ));
    }
    if ctx.is_vacuous() {
        return Ok(FractionSequence {
            verdict: Verdict::Vacuous,
            lct: None,
            regs: Vec::new(),
            terms: Vec::new(),
            max: None,
            bound: None,
        });
    }
    let (lct, _) = ctx.lct()?;
    let mut regs = Vec::new();
    let mut terms = Vec::new();
    for i in 1..=k as i64 {
        let (_, r) = ctx.multiplier(&(&lct * int(i)))?;
        regs.push(r);
        terms.push(ratio(r, i));
    }
    let mut seq = FractionSequence {
        verdict: Verdict::Holds,
        max: terms.iter().max().cloned(),
        bound: Some(&lct * int(ctx.dhat as i64)),
        lct: Some(lct),
        regs,
        terms,
    };
    seq.verdict = seq.recomputed_verdict();
    Ok(seq)
}

/// `r_k = reg 𝒥(k·lct·𝓘) / k` for `k = 1..=K`, each bounded by `lct·dhat`.
pub fn fraction_sequence(ideal: &Ideal, k: u32) -> Result<FractionSequence> {
    fractions_in(&mut CheckContext::new(ideal)?, k)
}
